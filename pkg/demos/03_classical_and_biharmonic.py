"""
Harmonic layers and biharmonic layers
=====================================

A p-harmonic polynomial has a unique expansion sum |x|^(2k) u_k with harmonic
u_k.  Applying it to A and B of a slice polynomial in odd n > 3 gives layers
g_k = u_k - x^c v_k that are biharmonic and killed by dbar Delta.
"""
from clifford_almansi import (
    biharmonic_decomposition,
    cauchy_riemann,
    classical_almansi,
    expand,
    iterated_laplacian,
    laplacian,
    parse_polynomial,
    zonal,
)
from clifford_almansi.almansi import layered_sum
from clifford_almansi.textio import format_polynomial

layers = classical_almansi(zonal(5, 4), 2)
for k, u in enumerate(layers.layers):
    print(f"u{k} =", format_polynomial(u))

n = 7
f = parse_polynomial("X^5 e1 - X^2 + e23", n)
g = biharmonic_decomposition(f)
print("number of layers:", len(g))
print("sum |x|^2k g_k == f:", layered_sum(g) == expand(f))
for k, gk in enumerate(g):
    lap = laplacian(gk)
    print(f"g{k}: dbar Delta g = 0 is {cauchy_riemann(lap).is_zero()},",
          f"Delta^2 g = 0 is {iterated_laplacian(gk, 2).is_zero()}")

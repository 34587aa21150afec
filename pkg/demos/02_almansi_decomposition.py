"""
Writing a Clifford polynomial as A - x^c B
==========================================

For a slice polynomial f(x) = sum x^k a_k, both A and B are zonal with pole 1
and, in odd n = 2m + 1, m-harmonic.  Two routes compute them: through zonal
polynomials, and through the Cauchy-Riemann operator.  They must agree.
"""
from clifford_almansi import (
    check_pde_system,
    decompose,
    decompose_cr,
    expand,
    iterated_laplacian,
    parse_polynomial,
    reconstruct,
)
from clifford_almansi.textio import format_axial

n = 5
f = parse_polynomial("X^4 e12 + 3 X^2 - 1/2 X e3 + e45", n)
d = decompose(f)
print("A (axial) =", format_axial(d.A_axial))
print("B (axial) =", format_axial(d.B_axial))

# Independent checks, all exact.
print("A - x^c B == f        :", reconstruct(d) == expand(f))
print("CR route agrees       :", decompose_cr(f) == d)
print("axial PDE system holds:", check_pde_system(d))
print("Delta^2 A == 0        :", iterated_laplacian(d.A, 2).is_zero())
print("Delta^2 B == 0        :", iterated_laplacian(d.B, 2).is_zero())

# Even n works too; there A and B are only polyharmonic of fractional order,
# so no Laplacian power is expected to vanish.
g = parse_polynomial("X^3 e1 + 2 X", 4)
dg = decompose(g)
print("n = 4:", format_axial(dg.A_axial), "|", format_axial(dg.B_axial))

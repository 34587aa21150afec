"""
Zonal polyharmonics with pole 1
===============================

The spherical derivative of ``x^(k+1)`` is a real homogeneous polynomial of
degree k, invariant under rotations fixing the real axis.  In R^(n+1) with
n = 2m + 1 it is annihilated by the m-th power of the Laplacian.
"""
from clifford_almansi import iterated_laplacian, laplacian, to_axial, zonal
from clifford_almansi.textio import format_axial, format_polynomial

# In R^6 (n = 5, m = 2) the degree-4 zonal polynomial is biharmonic but not harmonic.
z4 = zonal(5, 4)
print("zonal(5, 4)        =", format_polynomial(z4))
print("in (a, t) form     =", format_axial(to_axial(z4)))
print("Laplacian          =", format_polynomial(laplacian(z4)))
print("Laplacian squared  =", format_polynomial(iterated_laplacian(z4, 2)))

# The same construction in R^4 gives harmonic polynomials of every degree.
for k in range(5):
    print(f"zonal(3, {k}) =", format_axial(to_axial(zonal(3, k))))

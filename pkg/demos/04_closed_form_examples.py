"""
Closed forms in floating point
==============================

The exponential on R^4 splits into two harmonic functions, and the inverse
x^-1 on R^3 has A = 0 and B = -|x|^-2.  We check both numerically.
"""
import numpy as np

from clifford_almansi.closed_form import (
    exp_identity_errors,
    exp_laplacian_errors,
    inverse_errors,
    random_exp_points,
    random_shell_points,
)

pts = random_exp_points(100, seed=0)
print("max |exp - (A - x^c B)|       :", max(exp_identity_errors(pts)))
lap = np.array(exp_laplacian_errors(pts))
print("max |Delta A| e^-x0, |Delta B|:", lap.max(axis=0))
print("max |x^-1 x - 1| on the shell :", max(inverse_errors(random_shell_points(100, 3, seed=0))))

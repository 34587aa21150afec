"""Differential operators on Clifford-valued polynomials.

Conventions (left slice-regular setting): in the Cauchy-Riemann operator

    dbar p = dp/dx0 + e1 dp/dx1 + ... + en dp/dxn

each generator multiplies the partial derivative from the LEFT.  The
conjugated operator flips the vector part, and the two factorize the
Laplacian of R^{n+1}.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .clifford_core import Multivector
from .mvpoly import AxialPolynomial, MvPolynomial, _accumulate, poly_partial_derivative


class Operator(enum.Enum):
    LAPLACIAN = "laplacian"
    ITERATED_LAPLACIAN = "iterated_laplacian"
    CAUCHY_RIEMANN = "cauchy_riemann"
    CONJ_CAUCHY_RIEMANN = "conj_cauchy_riemann"
    DIRAC = "dirac"


@dataclass(frozen=True)
class OperatorTag:
    kind: Operator
    power: int = 1

    def __post_init__(self):
        if self.power < 1:
            raise ValueError("operator power must be >= 1")
        if self.kind is not Operator.ITERATED_LAPLACIAN and self.power != 1:
            raise ValueError("only the iterated Laplacian takes a power")

    def __call__(self, p: MvPolynomial) -> MvPolynomial:
        return apply_operator(self, p)


def laplacian(p: MvPolynomial) -> MvPolynomial:
    """Sum of pure second derivatives over x0..xn; acts blade-wise."""
    out: dict = {}
    for exps, c in p.terms.items():
        for i, d in enumerate(exps):
            if d >= 2:
                lowered = exps[:i] + (d - 2,) + exps[i + 1:]
                _accumulate(out, lowered, c.scale(d * (d - 1)))
    return MvPolynomial._raw(p.n, out)


def iterated_laplacian(p: MvPolynomial, power: int) -> MvPolynomial:
    if power < 1:
        raise ValueError("power must be a positive integer")
    for _ in range(power):
        if not p:
            break
        p = laplacian(p)
    return p


def dirac(p: MvPolynomial) -> MvPolynomial:
    """``sum_i e_i dp/dx_i`` (i >= 1), generators on the left."""
    out: dict = {}
    for i in range(1, p.n + 1):
        ei = Multivector.basis(p.n, i)
        for exps, c in poly_partial_derivative(p, i).terms.items():
            _accumulate(out, exps, ei * c)
    return MvPolynomial._raw(p.n, out)


def cauchy_riemann(p: MvPolynomial) -> MvPolynomial:
    return poly_partial_derivative(p, 0) + dirac(p)


def conj_cauchy_riemann(p: MvPolynomial) -> MvPolynomial:
    return poly_partial_derivative(p, 0) - dirac(p)


def axial_laplacian(a: AxialPolynomial) -> AxialPolynomial:
    """Laplacian of R^{n+1} in axial variables.

    With ``t = x1^2 + ... + xn^2``:  d2/dalpha2 + 2n d/dt + 4t d2/dt2.
    """
    n = a.n
    out: dict = {}
    for (i, j), c in a.terms.items():
        if i >= 2:
            _accumulate(out, (i - 2, j), c.scale(i * (i - 1)))
        if j >= 1:
            # 2n j t^(j-1) + 4 j (j-1) t^(j-1)
            _accumulate(out, (i, j - 1), c.scale(2 * n * j + 4 * j * (j - 1)))
    return AxialPolynomial._raw(n, out)


def iterated_axial_laplacian(a: AxialPolynomial, power: int) -> AxialPolynomial:
    for _ in range(power):
        a = axial_laplacian(a)
    return a


def apply_operator(tag: OperatorTag, p: MvPolynomial) -> MvPolynomial:
    if tag.kind is Operator.LAPLACIAN:
        return laplacian(p)
    if tag.kind is Operator.ITERATED_LAPLACIAN:
        return iterated_laplacian(p, tag.power)
    if tag.kind is Operator.CAUCHY_RIEMANN:
        return cauchy_riemann(p)
    if tag.kind is Operator.CONJ_CAUCHY_RIEMANN:
        return conj_cauchy_riemann(p)
    return dirac(p)

"""Slice polynomials ``f(x) = sum_k x^k a_k`` and zonal polyharmonics.

Every Clifford power splits as ``x^k = V_k + v S_k`` with ``v = Im(x)`` and
axially symmetric real polynomials ``V_k`` (spherical value) and ``S_k``
(spherical derivative).  Writing ``x^{k+1} = x * x^k`` gives the recurrence

    V_{k+1} = alpha V_k - t S_k,     S_{k+1} = V_k + alpha S_k

in the axial variables ``alpha = x0``, ``t = |v|^2``.  The recurrence does not
depend on ``n``; the dimension only enters when ``t`` is expanded.  The zonal
polyharmonic of degree ``k`` is ``S_{k+1}`` expanded in R^{n+1}.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Sequence

from .clifford_core import DimensionError, Multivector, Paravector, to_rational
from .mvpoly import (
    AxialPolynomial,
    MvPolynomial,
    NotAxial,
    conj_compose,
    from_axial,
    to_axial,
    vector_poly,
)


class NotSlice(ValueError):
    """The polynomial is not of the form ``V(alpha, t) + v S(alpha, t)``."""


# -- V_k / S_k table -----------------------------------------------------------

_VS_TABLE: list[tuple[dict, dict]] = [({(0, 0): 1}, {})]
_VS_LOCK = threading.Lock()


def _vs_raw(k: int) -> tuple[dict, dict]:
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k < len(_VS_TABLE):
        return _VS_TABLE[k]
    with _VS_LOCK:
        while len(_VS_TABLE) <= k:
            V, S = _VS_TABLE[-1]
            nV: dict = {}
            nS: dict = {}
            # V' = alpha V - t S
            for (i, j), c in V.items():
                nV[(i + 1, j)] = nV.get((i + 1, j), 0) + c
            for (i, j), c in S.items():
                nV[(i, j + 1)] = nV.get((i, j + 1), 0) - c
            # S' = V + alpha S
            for key, c in V.items():
                nS[key] = nS.get(key, 0) + c
            for (i, j), c in S.items():
                nS[(i + 1, j)] = nS.get((i + 1, j), 0) + c
            _VS_TABLE.append(
                ({k_: c for k_, c in nV.items() if c}, {k_: c for k_, c in nS.items() if c})
            )
    return _VS_TABLE[k]


def _axial_from_ints(n: int, table: dict) -> AxialPolynomial:
    return AxialPolynomial._raw(n, {k: Multivector.scalar(n, c) for k, c in table.items()})


@dataclass(frozen=True)
class PowerVS:
    """Spherical value ``V`` and spherical derivative ``S`` of ``x^k``."""

    k: int
    V: AxialPolynomial
    S: AxialPolynomial


def power_vs(k: int, n: int = 0) -> PowerVS:
    """Axial pair of ``x^k``; ``n`` only fixes the dimension tag of the result."""
    V, S = _vs_raw(k)
    return PowerVS(k, _axial_from_ints(n, V), _axial_from_ints(n, S))


def zonal_axial(n: int, k: int) -> AxialPolynomial:
    """Axial form of the zonal polyharmonic of degree ``k`` (``S_{k+1}``)."""
    return _axial_from_ints(n, _vs_raw(k + 1)[1])


def zonal(n: int, k: int) -> MvPolynomial:
    """Zonal ``m``-harmonic with pole 1 in R^{n+1}: the spherical derivative of ``x^{k+1}``.

    Homogeneous of degree ``k``, real, axially symmetric, equal to ``k + 1`` at 1.
    """
    if n < 1:
        raise DimensionError("zonal polynomials need n >= 1")
    if k < 0:
        return MvPolynomial.zero(n)
    return from_axial(zonal_axial(n, k))


# -- slice polynomials -----------------------------------------------------


class SlicePolynomial:
    """``f(x) = sum_k x^k a_k`` with Clifford coefficients on the right."""

    __slots__ = ("n", "coefficients")

    def __init__(self, n: int, coefficients: Sequence[object]):
        coeffs = []
        for a in coefficients:
            if isinstance(a, Multivector):
                if a.n != n:
                    raise DimensionError(f"coefficient has dimension {a.n}, expected {n}")
            else:
                a = Multivector.scalar(n, to_rational(a))
            coeffs.append(a)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.n = n
        self.coefficients = tuple(coeffs)

    @classmethod
    def power(cls, n: int, k: int, coef=1) -> "SlicePolynomial":
        return cls(n, [0] * k + [coef])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_slice_preserving(self) -> bool:
        return all(a.is_scalar() for a in self.coefficients)

    def shift(self, k: int = 1) -> "SlicePolynomial":
        """``x^k f`` (the coefficient list moves up by ``k``)."""
        if not self.coefficients:
            return self
        return SlicePolynomial(self.n, [Multivector.zero(self.n)] * k + list(self.coefficients))

    def __add__(self, other: "SlicePolynomial") -> "SlicePolynomial":
        _same_dim(self, other)
        size = max(len(self.coefficients), len(other.coefficients))
        z = Multivector.zero(self.n)
        a = list(self.coefficients) + [z] * (size - len(self.coefficients))
        b = list(other.coefficients) + [z] * (size - len(other.coefficients))
        return SlicePolynomial(self.n, [x + y for x, y in zip(a, b)])

    def __neg__(self) -> "SlicePolynomial":
        return SlicePolynomial(self.n, [-a for a in self.coefficients])

    def __sub__(self, other: "SlicePolynomial") -> "SlicePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SlicePolynomial":
        if isinstance(other, SlicePolynomial):
            return slice_mul(self, other)
        if isinstance(other, Multivector):
            return SlicePolynomial(self.n, [a * other for a in self.coefficients])
        c = to_rational(other)
        return SlicePolynomial(self.n, [a.scale(c) for a in self.coefficients])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SlicePolynomial):
            return NotImplemented
        return self.n == other.n and self.coefficients == other.coefficients

    __hash__ = None

    def evaluate(self, point) -> Multivector:
        """Direct evaluation ``sum x^k a_k`` with Clifford powers of the paravector."""
        if not isinstance(point, Paravector):
            point = Paravector(point)
        if point.n != self.n:
            raise DimensionError(f"point has dimension {point.n}, expected {self.n}")
        x = point.to_multivector()
        total = Multivector.zero(self.n)
        power = Multivector.scalar(self.n, 1)
        for a in self.coefficients:
            total = total + power * a
            power = power * x
        return total

    def __repr__(self) -> str:
        from .textio import format_slice

        return f"SlicePolynomial({self.n}, {format_slice(self)!r})"


def _same_dim(f: SlicePolynomial, g: SlicePolynomial) -> None:
    if f.n != g.n:
        raise DimensionError(f"dimension mismatch: {f.n} vs {g.n}")


def slice_mul(f: SlicePolynomial, g: SlicePolynomial) -> SlicePolynomial:
    """One-sided product: ``(sum x^i a_i)(sum x^j b_j) = sum x^{i+j} a_i b_j``."""
    _same_dim(f, g)
    if f.is_zero() or g.is_zero():
        return SlicePolynomial(f.n, [])
    out = [Multivector.zero(f.n)] * (len(f.coefficients) + len(g.coefficients) - 1)
    for i, a in enumerate(f.coefficients):
        if not a:
            continue
        for j, b in enumerate(g.coefficients):
            out[i + j] = out[i + j] + a * b
    return SlicePolynomial(f.n, out)


def spherical_value_derivative(f: SlicePolynomial) -> tuple[AxialPolynomial, AxialPolynomial]:
    """``(V_f, S_f) = (sum V_k a_k, sum S_k a_k)``."""
    n = f.n
    Vf: dict = {}
    Sf: dict = {}
    for k, a in enumerate(f.coefficients):
        if not a:
            continue
        V, S = _vs_raw(k)
        for key, c in V.items():
            _acc(Vf, key, a.scale(c))
        for key, c in S.items():
            _acc(Sf, key, a.scale(c))
    return AxialPolynomial._raw(n, Vf), AxialPolynomial._raw(n, Sf)


def _acc(out: dict, key, c: Multivector) -> None:
    s = out[key] + c if key in out else c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def expand(f: SlicePolynomial) -> MvPolynomial:
    """``f`` as an explicit polynomial in x0..xn: ``V_f + v S_f``."""
    Vf, Sf = spherical_value_derivative(f)
    return from_axial(Vf) + vector_poly(f.n) * from_axial(Sf)


def spherical_derivative_full(p: MvPolynomial) -> tuple[AxialPolynomial, AxialPolynomial]:
    """Split a polynomial slice function ``p`` into ``(V, S)`` with ``p = V + v S``.

    The even part ``(p(x) + p(x^c))/2`` gives ``V``.  The odd part ``O`` must be
    ``v Q``; since ``v v = -t`` we get ``Q = -(v O)/t``, where the division by
    ``t`` is done exactly on the axial form.
    """
    n = p.n
    pc = conj_compose(p)
    even = (p + pc) / 2
    odd = (p - pc) / 2
    try:
        V = to_axial(even)
        W = to_axial(vector_poly(n) * odd)
    except NotAxial as exc:
        raise NotSlice(str(exc)) from exc
    q: dict = {}
    for (i, j), c in W.terms.items():
        if j == 0:
            raise NotSlice("odd part is not divisible by Im(x)")
        q[(i, j - 1)] = -c
    S = AxialPolynomial._raw(n, q)
    if from_axial(V) + vector_poly(n) * from_axial(S) != p:
        raise NotSlice("polynomial is not of the form V + Im(x) S")
    return V, S


def slice_from_polynomial(p: MvPolynomial) -> SlicePolynomial:
    """Recover ``sum x^k a_k`` from its expansion, or raise :class:`NotSlice`.

    On the real axis ``f(x0) = sum x0^k a_k``, which fixes the candidate; the
    candidate is accepted only if it expands back to ``p``.
    """
    coeffs: dict[int, Multivector] = {}
    for exps, c in p.terms.items():
        if not any(exps[1:]):
            coeffs[exps[0]] = c
    deg = max(coeffs, default=-1)
    f = SlicePolynomial(p.n, [coeffs.get(k, Multivector.zero(p.n)) for k in range(deg + 1)])
    if expand(f) != p:
        raise NotSlice("polynomial is not a sum of Clifford powers with right coefficients")
    return f

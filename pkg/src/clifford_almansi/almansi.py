"""Almansi-type decompositions.

* ``f = A - x^c B`` for a slice polynomial ``f``, with ``A`` and ``B`` zonal
  (axially symmetric) and, for odd ``n = 2m + 1``, ``m``-harmonic.  Two
  independent constructions are provided: from zonal polyharmonics, and from
  the Cauchy-Riemann operator.
* The classical split ``u = sum |x|^{2k} u_k`` of a polyharmonic polynomial
  into harmonic layers, via repeated Fischer splitting.
* The biharmonic layers ``f = sum |x|^{2k} g_k`` for odd ``n > 3``.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from .clifford_core import DimensionError, Multivector
from .diffops import cauchy_riemann, iterated_laplacian, laplacian
from .linalg import inverse
from .mvpoly import (
    AxialPolynomial,
    MvPolynomial,
    _accumulate,
    conj_paravector_poly,
    from_axial,
    homogeneous_components,
    norm_sq_poly,
    to_axial,
)
from .slice_poly import (
    SlicePolynomial,
    _vs_raw,
    expand,
    slice_mul,
    spherical_derivative_full,
)


class NonHomogeneous(ValueError):
    pass


class NotPolyharmonic(ValueError):
    """``Delta^order p != 0``; ``needed`` is the true polyharmonic order of ``p``."""

    def __init__(self, order: int, needed: int):
        super().__init__(
            f"Delta^{order} p does not vanish; p is polyharmonic of order {needed}"
        )
        self.order = order
        self.needed = needed


class DimensionNotOdd(DimensionError):
    pass


@dataclass(frozen=True)
class DecompositionAB:
    n: int
    A: MvPolynomial
    B: MvPolynomial
    A_axial: AxialPolynomial
    B_axial: AxialPolynomial

    @classmethod
    def from_axial_pair(cls, A_axial: AxialPolynomial, B_axial: AxialPolynomial) -> "DecompositionAB":
        return cls(A_axial.n, from_axial(A_axial), from_axial(B_axial), A_axial, B_axial)

    @classmethod
    def from_polynomials(cls, A: MvPolynomial, B: MvPolynomial) -> "DecompositionAB":
        """Build from expanded ``A``, ``B``; raises :class:`NotAxial` if either is not zonal."""
        return cls(A.n, A, B, to_axial(A), to_axial(B))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DecompositionAB):
            return NotImplemented
        return self.n == other.n and self.A == other.A and self.B == other.B


# -- f = A - x^c B -------------------------------------------------------------


def _axial_combination(n: int, f: SlicePolynomial, offset: int) -> AxialPolynomial:
    # sum_k S_{k+offset} a_k
    out: dict = {}
    for k, a in enumerate(f.coefficients):
        if not a or k + offset < 0:
            continue
        for key, c in _vs_raw(k + offset)[1].items():
            _accumulate(out, key, a.scale(c))
    return AxialPolynomial._raw(n, out)


def decompose(f: SlicePolynomial) -> DecompositionAB:
    """Zonal route: ``A = sum Z_k a_k`` and ``B = sum Z_{k-1} a_k``."""
    return DecompositionAB.from_axial_pair(
        _axial_combination(f.n, f, 1), _axial_combination(f.n, f, 0)
    )


def decompose_cr(f: SlicePolynomial) -> DecompositionAB:
    """Differential route: ``A = dbar(x f)/(1 - n)`` and ``B = dbar(f)/(1 - n)``."""
    n = f.n
    if n < 2:
        raise DimensionError("the Cauchy-Riemann route needs n >= 2")
    x = SlicePolynomial.power(n, 1)
    scale = Fraction(1, 1 - n)
    A = cauchy_riemann(expand(slice_mul(x, f))).scale(scale)
    B = cauchy_riemann(expand(f)).scale(scale)
    return DecompositionAB.from_polynomials(A, B)


def reconstruct(d: DecompositionAB) -> MvPolynomial:
    """``A - x^c B`` with ``x^c`` as the left factor."""
    return d.A - conj_paravector_poly(d.n) * d.B


def check_pde_system(d: DecompositionAB) -> bool:
    """Slice-regularity of ``A - x^c B`` in axial variables.

    (i)  dA/da - a dB/da - 2t dB/dt - 2B = 0
    (ii) 2 dA/dt - 2a dB/dt + dB/da = 0
    (the second is the beta-equation divided by beta, with d/dbeta = 2 beta d/dt).
    """
    A, B = d.A_axial, d.B_axial
    first = A.d_alpha() - B.d_alpha().times_alpha() - B.d_t().times_t().scale(2) - B.scale(2)
    second = A.d_t().scale(2) - B.d_t().times_alpha().scale(2) + B.d_alpha()
    return first.is_zero() and second.is_zero()


def uniqueness_check(d: DecompositionAB) -> bool:
    """Re-derive ``(A, B)`` from ``f = A - x^c B`` alone and compare.

    ``B`` is the spherical derivative of ``f`` and ``A = f + x^c B``.
    """
    f = reconstruct(d)
    try:
        _, S = spherical_derivative_full(f)
    except ValueError:
        return False
    if S != d.B_axial:
        return False
    return f + conj_paravector_poly(d.n) * from_axial(S) == d.A


# -- Fischer split ---------------------------------------------------------------


def _monomials(nvars: int, degree: int):
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _monomials(nvars - 1, degree - first):
            yield (first,) + rest


class _FischerBlocks:
    """Inverses of ``r -> Delta(|x|^2 r)`` on degree-``j`` polynomials.

    The operator preserves the parity of every exponent, so the matrix is block
    diagonal by parity pattern; blocks are inverted lazily and cached.
    """

    def __init__(self, nvars: int, degree: int):
        self.nvars = nvars
        self.degree = degree
        self.by_parity: dict[tuple, list[tuple]] = {}
        for mono in _monomials(nvars, degree):
            self.by_parity.setdefault(tuple(e & 1 for e in mono), []).append(mono)
        self._inverses: dict[tuple, tuple[dict, list]] = {}
        self._lock = threading.Lock()

    def _image(self, mono: tuple) -> dict[tuple, int]:
        # Delta(|x|^2 x^e) = (2N + 4j) x^e + |x|^2 Delta x^e
        out = {mono: 2 * self.nvars + 4 * self.degree}
        for i, ei in enumerate(mono):
            if ei < 2:
                continue
            c = ei * (ei - 1)
            for k in range(self.nvars):
                e = list(mono)
                e[i] -= 2
                e[k] += 2
                e = tuple(e)
                out[e] = out.get(e, 0) + c
        return out

    def block(self, parity: tuple) -> tuple[dict, list]:
        cached = self._inverses.get(parity)
        if cached is not None:
            return cached
        monos = self.by_parity[parity]
        index = {m: i for i, m in enumerate(monos)}
        size = len(monos)
        mat = [[0] * size for _ in range(size)]
        for col, mono in enumerate(monos):
            for img, c in self._image(mono).items():
                mat[index[img]][col] += c
        result = (index, inverse(mat))
        with self._lock:
            self._inverses[parity] = result
        return result


_BLOCK_CACHE: dict[tuple[int, int], _FischerBlocks] = {}
_BLOCK_LOCK = threading.Lock()


def _blocks(nvars: int, degree: int) -> _FischerBlocks:
    key = (nvars, degree)
    with _BLOCK_LOCK:
        if key not in _BLOCK_CACHE:
            _BLOCK_CACHE[key] = _FischerBlocks(nvars, degree)
        return _BLOCK_CACHE[key]


def fischer_split(h: MvPolynomial) -> tuple[MvPolynomial, MvPolynomial]:
    """Write a homogeneous ``h`` as ``harmonic + |x|^2 remainder``.

    The remainder ``r`` solves ``Delta(|x|^2 r) = Delta h`` exactly in the
    monomial basis of degree ``deg h - 2``; the system is invertible, which
    certifies uniqueness.
    """
    n = h.n
    if not h:
        return MvPolynomial.zero(n), MvPolynomial.zero(n)
    if not h.is_homogeneous():
        raise NonHomogeneous("fischer_split needs a homogeneous polynomial")
    d = h.degree()
    if d < 2:
        return h, MvPolynomial.zero(n)
    lap = laplacian(h)
    blocks = _blocks(n + 1, d - 2)
    grouped: dict[tuple, list] = {}
    for exps, c in lap.terms.items():
        grouped.setdefault(tuple(e & 1 for e in exps), []).append((exps, c))
    rem: dict = {}
    for parity, items in grouped.items():
        index, inv = blocks.block(parity)
        monos = blocks.by_parity[parity]
        rhs = [(index[e], c) for e, c in items]
        for row, mono in enumerate(monos):
            acc = Multivector.zero(n)
            inv_row = inv[row]
            for col, c in rhs:
                w = inv_row[col]
                if w:
                    acc = acc + c.scale(w)
            if acc:
                rem[mono] = acc
    remainder = MvPolynomial._raw(n, rem)
    harmonic = h - norm_sq_poly(n) * remainder
    if laplacian(harmonic):
        raise ArithmeticError("Fischer split failed to produce a harmonic part")
    return harmonic, remainder


# -- classical Almansi -------------------------------------------------------------


@dataclass(frozen=True)
class AlmansiLayers:
    layers: tuple
    order: int

    def reconstruct(self) -> MvPolynomial:
        n = self.layers[0].n
        total = MvPolynomial.zero(n)
        weight = MvPolynomial.constant(n, 1)
        r2 = norm_sq_poly(n)
        for u in self.layers:
            total = total + weight * u
            weight = weight * r2
        return total


def polyharmonic_order(p: MvPolynomial) -> int:
    """Smallest ``q >= 0`` with ``Delta^q p = 0``."""
    q = 0
    while p:
        p = laplacian(p)
        q += 1
    return q


def classical_almansi(p: MvPolynomial, order: int) -> AlmansiLayers:
    """Harmonic layers ``u_0..u_{order-1}`` with ``p = sum |x|^{2k} u_k``."""
    if order < 1:
        raise ValueError("order must be a positive integer")
    if iterated_laplacian(p, order):
        raise NotPolyharmonic(order, polyharmonic_order(p))
    n = p.n
    layers = [MvPolynomial.zero(n) for _ in range(order)]
    for _, h in homogeneous_components(p):
        k = 0
        while h:
            harmonic, h = fischer_split(h)
            if k >= order:
                if harmonic:
                    raise ArithmeticError("nonzero layer beyond the polyharmonic order")
            else:
                layers[k] = layers[k] + harmonic
            k += 1
    return AlmansiLayers(tuple(layers), order)


def biharmonic_decomposition(f: SlicePolynomial) -> list[MvPolynomial]:
    """Zonal biharmonic ``g_0..g_{m-1}`` with ``f = sum |x|^{2k} g_k`` (``n = 2m + 1 > 3``).

    Each ``g_k = u_k - x^c v_k`` where ``u_k``, ``v_k`` are the harmonic layers
    of ``A`` and ``B``.
    """
    n = f.n
    if n % 2 == 0:
        raise DimensionNotOdd(f"biharmonic layers need odd n, got {n}")
    if n <= 3:
        raise DimensionError("n = 3 is the harmonic case; the biharmonic split needs n > 3")
    m = (n - 1) // 2
    d = decompose(f)
    u = classical_almansi(d.A, m).layers
    v = classical_almansi(d.B, m).layers
    xc = conj_paravector_poly(n)
    return [uk - xc * vk for uk, vk in zip(u, v)]


def layered_sum(layers) -> MvPolynomial:
    n = layers[0].n
    return AlmansiLayers(tuple(layers), len(layers)).reconstruct() if layers else MvPolynomial.zero(n)


# -- reports -----------------------------------------------------------------------

PASS, FAIL, SKIPPED_FRACTIONAL = "pass", "fail", "skipped-fractional"


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


@dataclass
class DecompositionReport:
    """Decomposition output plus verdicts recomputed from scratch."""

    n: int
    source: MvPolynomial
    decomposition: DecompositionAB | None = None
    layers: list | None = None
    verdicts: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(v != FAIL for v in self.verdicts.values())


def decomposition_report(f: SlicePolynomial, route: str = "both") -> DecompositionReport:
    if route not in ("zonal", "cr", "both"):
        raise ValueError(f"unknown route {route!r}")
    n = f.n
    source = expand(f)
    d = decompose_cr(f) if route == "cr" else decompose(f)
    rep = DecompositionReport(n, source, decomposition=d)
    rep.verdicts["reconstruction"] = _verdict(reconstruct(d) == source)
    if route == "both":
        rep.verdicts["route_agreement"] = _verdict(decompose_cr(f) == d)
    rep.verdicts["axial"] = _verdict(
        to_axial(d.A) == d.A_axial and to_axial(d.B) == d.B_axial
    )
    rep.verdicts["pde_system"] = _verdict(check_pde_system(d))
    rep.verdicts["uniqueness"] = _verdict(uniqueness_check(d))
    if n % 2 == 1:
        m = (n - 1) // 2
        rep.verdicts["m_harmonic"] = _verdict(
            not iterated_laplacian(d.A, m) and not iterated_laplacian(d.B, m)
        )
    else:
        rep.verdicts["m_harmonic"] = SKIPPED_FRACTIONAL
    return rep


def biharmonic_report(f: SlicePolynomial) -> DecompositionReport:
    source = expand(f)
    gs = biharmonic_decomposition(f)
    rep = DecompositionReport(f.n, source, layers=gs)
    rep.verdicts["reconstruction"] = _verdict(layered_sum(gs) == source)
    rep.verdicts["dbar_laplacian_kernel"] = _verdict(
        all(not cauchy_riemann(laplacian(g)) for g in gs)
    )
    rep.verdicts["biharmonic"] = _verdict(all(not iterated_laplacian(g, 2) for g in gs))
    rep.verdicts["axial_layers"] = _verdict(all(_is_zonal_pair(g) for g in gs))
    return rep


def _is_zonal_pair(g: MvPolynomial) -> bool:
    # g = u - x^c v with u, v axial  <=>  g is a slice polynomial function
    try:
        spherical_derivative_full(g)
    except ValueError:
        return False
    return True

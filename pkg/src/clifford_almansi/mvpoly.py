"""Polynomials in x0..xn with Clifford coefficients, and their axial form.

An :class:`MvPolynomial` maps exponent vectors ``(d0, ..., dn)`` to
:class:`Multivector` coefficients.  Monomials are real, so they commute with
everything; coefficients multiply with the Clifford product in the order the
factors are written.

An :class:`AxialPolynomial` stores ``sum alpha^i t^j c_ij`` where
``alpha = x0`` and ``t = x1^2 + ... + xn^2``.  These are exactly the
polynomials invariant under rotations of (x1, ..., xn).
"""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Sequence

from .clifford_core import DimensionError, Multivector, Paravector, to_rational

Exps = tuple


class NotAxial(ValueError):
    """The polynomial is not invariant under rotations about the real axis."""


def _as_mv(n: int, c) -> Multivector:
    if isinstance(c, Multivector):
        if c.n != n:
            raise DimensionError(f"coefficient has dimension {c.n}, expected {n}")
        return c
    return Multivector.scalar(n, to_rational(c))


def _accumulate(out: dict, key, coef: Multivector) -> None:
    prev = out.get(key)
    if prev is None:
        if coef:
            out[key] = coef
        return
    s = prev + coef
    if s:
        out[key] = s
    else:
        del out[key]


class MvPolynomial:
    """Multivariate polynomial in ``x0..xn`` with ``Multivector`` coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Sequence[int], object] | None = None):
        self.n = n
        clean: dict[Exps, Multivector] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n + 1 or any(e < 0 for e in exps):
                raise DimensionError(f"bad exponent vector {exps} for n={n}")
            _accumulate(clean, exps, _as_mv(n, c))
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "MvPolynomial":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "MvPolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "MvPolynomial":
        c = _as_mv(n, c)
        return cls._raw(n, {(0,) * (n + 1): c} if c else {})

    @classmethod
    def variable(cls, n: int, i: int) -> "MvPolynomial":
        if not 0 <= i <= n:
            raise DimensionError(f"variable x{i} does not exist for n={n}")
        exps = [0] * (n + 1)
        exps[i] = 1
        return cls._raw(n, {tuple(exps): Multivector.scalar(n, 1)})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], c=1) -> "MvPolynomial":
        return cls(n, {tuple(exps): c})

    # -- predicates / accessors ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def has_real_coefficients(self) -> bool:
        return all(c.is_scalar() for c in self.terms.values())

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, exps: Sequence[int]) -> Multivector:
        return self.terms.get(tuple(exps), Multivector.zero(self.n))

    # -- ring operations -----------------------------------------------------

    def _check(self, other: "MvPolynomial") -> None:
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")

    def _lift(self, other) -> "MvPolynomial":
        if isinstance(other, MvPolynomial):
            self._check(other)
            return other
        return MvPolynomial.constant(self.n, other)

    def __add__(self, other) -> "MvPolynomial":
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _accumulate(out, e, c)
        return MvPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "MvPolynomial":
        return MvPolynomial._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "MvPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MvPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "MvPolynomial":
        if isinstance(other, Multivector):
            return self.right_mul(other)
        if not isinstance(other, MvPolynomial):
            return self.scale(other)
        self._check(other)
        out: dict[Exps, Multivector] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                _accumulate(out, tuple(a + b for a, b in zip(ea, eb)), ca * cb)
        return MvPolynomial._raw(self.n, out)

    def __rmul__(self, other) -> "MvPolynomial":
        if isinstance(other, Multivector):
            return self.left_mul(other)
        return self.scale(other)

    def __pow__(self, k: int) -> "MvPolynomial":
        out = MvPolynomial.constant(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "MvPolynomial":
        c = to_rational(c)
        if not c:
            return MvPolynomial.zero(self.n)
        return MvPolynomial._raw(self.n, {e: v.scale(c) for e, v in self.terms.items()})

    def __truediv__(self, c) -> "MvPolynomial":
        return self.scale(1 / to_rational(c))

    def right_mul(self, c: Multivector) -> "MvPolynomial":
        """Multiply every coefficient by ``c`` on the right."""
        c = _as_mv(self.n, c)
        out = {}
        for e, v in self.terms.items():
            p = v * c
            if p:
                out[e] = p
        return MvPolynomial._raw(self.n, out)

    def left_mul(self, c: Multivector) -> "MvPolynomial":
        c = _as_mv(self.n, c)
        out = {}
        for e, v in self.terms.items():
            p = c * v
            if p:
                out[e] = p
        return MvPolynomial._raw(self.n, out)

    def __eq__(self, other) -> bool:
        if isinstance(other, MvPolynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, Multivector)):
            return self == MvPolynomial.constant(self.n, other)
        return NotImplemented

    __hash__ = None

    # -- calculus / evaluation ----------------------------------------------

    def partial(self, var: int) -> "MvPolynomial":
        return poly_partial_derivative(self, var)

    def evaluate(self, point) -> Multivector:
        return poly_evaluate(self, point)

    def sorted_terms(self) -> list[tuple[Exps, Multivector]]:
        return sorted(self.terms.items(), key=lambda ec: _grlex_key(ec[0]))

    def __repr__(self) -> str:
        from .textio import format_polynomial

        try:
            body = format_polynomial(self)
        except ValueError:
            body = f"<{len(self.terms)} terms>"
        return f"MvPolynomial({self.n}, {body!r})"


def _grlex_key(exps: Exps):
    # descending total degree, then descending lexicographic exponent vector
    return (-sum(exps), tuple(-e for e in exps))


# -- free functions --------------------------------------------------------


def paravector_poly(n: int) -> MvPolynomial:
    """The identity function ``x = x0 + x1 e1 + ... + xn en``."""
    return MvPolynomial.variable(n, 0) + vector_poly(n)


def vector_poly(n: int) -> MvPolynomial:
    """``v = Im(x) = x1 e1 + ... + xn en``."""
    terms = {}
    for i in range(1, n + 1):
        exps = [0] * (n + 1)
        exps[i] = 1
        terms[tuple(exps)] = Multivector.basis(n, i)
    return MvPolynomial._raw(n, terms)


def conj_paravector_poly(n: int) -> MvPolynomial:
    """``x^c = x0 - x1 e1 - ... - xn en``."""
    return MvPolynomial.variable(n, 0) - vector_poly(n)


def imag_norm_sq_poly(n: int) -> MvPolynomial:
    """``t = x1^2 + ... + xn^2``."""
    terms = {}
    for i in range(1, n + 1):
        exps = [0] * (n + 1)
        exps[i] = 2
        terms[tuple(exps)] = Multivector.scalar(n, 1)
    return MvPolynomial._raw(n, terms)


def norm_sq_poly(n: int) -> MvPolynomial:
    """``|x|^2 = x0^2 + ... + xn^2``."""
    terms = {}
    for i in range(n + 1):
        exps = [0] * (n + 1)
        exps[i] = 2
        terms[tuple(exps)] = Multivector.scalar(n, 1)
    return MvPolynomial._raw(n, terms)


def poly_partial_derivative(p: MvPolynomial, var: int) -> MvPolynomial:
    if not 0 <= var <= p.n:
        raise DimensionError(f"variable x{var} does not exist for n={p.n}")
    out: dict[Exps, Multivector] = {}
    for exps, c in p.terms.items():
        d = exps[var]
        if d:
            lowered = exps[:var] + (d - 1,) + exps[var + 1:]
            _accumulate(out, lowered, c.scale(d))
    return MvPolynomial._raw(p.n, out)


def _coords_of(point, n: int) -> tuple[Fraction, ...]:
    if isinstance(point, Paravector):
        coords = point.coords
    else:
        coords = tuple(to_rational(c) for c in point)
    if len(coords) != n + 1:
        raise DimensionError(f"point has {len(coords)} coordinates, expected {n + 1}")
    return coords


def poly_evaluate(p: MvPolynomial, point) -> Multivector:
    """Exact substitution of a rational point ``(x0, ..., xn)``."""
    coords = _coords_of(point, p.n)
    total = Multivector.zero(p.n)
    for exps, c in p.terms.items():
        w = Fraction(1)
        for x, e in zip(coords, exps):
            if e:
                w *= x**e
        if w:
            total = total + c.scale(w)
    return total


def homogeneous_components(p: MvPolynomial) -> list[tuple[int, MvPolynomial]]:
    """Split ``p`` into total-degree homogeneous pieces, sorted by degree."""
    parts: dict[int, dict] = {}
    for exps, c in p.terms.items():
        parts.setdefault(sum(exps), {})[exps] = c
    return [(d, MvPolynomial._raw(p.n, parts[d])) for d in sorted(parts)]


def conj_compose(p: MvPolynomial) -> MvPolynomial:
    """``x -> p(x^c)``: the substitution ``xi -> -xi`` for ``i >= 1``."""
    out = {}
    for exps, c in p.terms.items():
        odd = sum(exps[1:]) & 1
        out[exps] = -c if odd else c
    return MvPolynomial._raw(p.n, out)


# -- axial form --------------------------------------------------------------


class AxialPolynomial:
    """``sum alpha^i t^j c_ij`` with ``alpha = x0`` and ``t = x1^2 + ... + xn^2``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, int], object] | None = None):
        self.n = n
        clean: dict[tuple[int, int], Multivector] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("axial exponents must be nonnegative")
            _accumulate(clean, (int(i), int(j)), _as_mv(n, c))
        self.terms = clean

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "AxialPolynomial":
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, n: int) -> "AxialPolynomial":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c=1) -> "AxialPolynomial":
        c = _as_mv(n, c)
        return cls._raw(n, {(0, 0): c} if c else {})

    @classmethod
    def alpha(cls, n: int) -> "AxialPolynomial":
        return cls(n, {(1, 0): 1})

    @classmethod
    def t(cls, n: int) -> "AxialPolynomial":
        return cls(n, {(0, 1): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def has_real_coefficients(self) -> bool:
        return all(c.is_scalar() for c in self.terms.values())

    def weighted_degrees(self) -> set[int]:
        """Total degrees in x with ``deg alpha = 1`` and ``deg t = 2``."""
        return {i + 2 * j for i, j in self.terms}

    def _lift(self, other) -> "AxialPolynomial":
        if isinstance(other, AxialPolynomial):
            if other.n != self.n:
                raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        return AxialPolynomial.constant(self.n, other)

    def __add__(self, other) -> "AxialPolynomial":
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(out, k, c)
        return AxialPolynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "AxialPolynomial":
        return AxialPolynomial._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "AxialPolynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "AxialPolynomial":
        return (-self) + other

    def __mul__(self, other) -> "AxialPolynomial":
        if isinstance(other, Multivector):
            return self.right_mul(other)
        if not isinstance(other, AxialPolynomial):
            return self.scale(other)
        other = self._lift(other)
        out: dict = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                _accumulate(out, (i1 + i2, j1 + j2), c1 * c2)
        return AxialPolynomial._raw(self.n, out)

    def __rmul__(self, other) -> "AxialPolynomial":
        if isinstance(other, Multivector):
            return self.left_mul(other)
        return self.scale(other)

    def scale(self, c) -> "AxialPolynomial":
        c = to_rational(c)
        if not c:
            return AxialPolynomial.zero(self.n)
        return AxialPolynomial._raw(self.n, {k: v.scale(c) for k, v in self.terms.items()})

    def right_mul(self, c: Multivector) -> "AxialPolynomial":
        c = _as_mv(self.n, c)
        out = {}
        for k, v in self.terms.items():
            p = v * c
            if p:
                out[k] = p
        return AxialPolynomial._raw(self.n, out)

    def left_mul(self, c: Multivector) -> "AxialPolynomial":
        c = _as_mv(self.n, c)
        out = {}
        for k, v in self.terms.items():
            p = c * v
            if p:
                out[k] = p
        return AxialPolynomial._raw(self.n, out)

    def with_dimension(self, n: int) -> "AxialPolynomial":
        """Re-home a real-coefficient axial polynomial in another dimension."""
        if not self.has_real_coefficients():
            raise DimensionError("only real axial polynomials can change dimension")
        return AxialPolynomial._raw(
            n, {k: Multivector.scalar(n, c.scalar_part()) for k, c in self.terms.items()}
        )

    def d_alpha(self) -> "AxialPolynomial":
        out: dict = {}
        for (i, j), c in self.terms.items():
            if i:
                _accumulate(out, (i - 1, j), c.scale(i))
        return AxialPolynomial._raw(self.n, out)

    def d_t(self) -> "AxialPolynomial":
        out: dict = {}
        for (i, j), c in self.terms.items():
            if j:
                _accumulate(out, (i, j - 1), c.scale(j))
        return AxialPolynomial._raw(self.n, out)

    def times_alpha(self) -> "AxialPolynomial":
        return AxialPolynomial._raw(self.n, {(i + 1, j): c for (i, j), c in self.terms.items()})

    def times_t(self) -> "AxialPolynomial":
        return AxialPolynomial._raw(self.n, {(i, j + 1): c for (i, j), c in self.terms.items()})

    def evaluate(self, alpha, t) -> Multivector:
        alpha, t = to_rational(alpha), to_rational(t)
        total = Multivector.zero(self.n)
        for (i, j), c in self.terms.items():
            total = total + c.scale(alpha**i * t**j)
        return total

    def __eq__(self, other) -> bool:
        if isinstance(other, AxialPolynomial):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, Multivector)):
            return self == AxialPolynomial.constant(self.n, other)
        return NotImplemented

    __hash__ = None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kc: (-(kc[0][0] + 2 * kc[0][1]), -kc[0][0]))

    def __repr__(self) -> str:
        from .textio import format_axial

        return f"AxialPolynomial({self.n}, {format_axial(self)!r})"


def _t_power_expansion(n: int, j: int, cache: dict = {}) -> dict[Exps, int]:
    # multinomial expansion of (x1^2 + ... + xn^2)^j as {exps: int}
    key = (n, j)
    if key in cache:
        return cache[key]
    if j == 0:
        res = {(0,) * (n + 1): 1}
    else:
        prev = _t_power_expansion(n, j - 1)
        res: dict[Exps, int] = {}
        for exps, c in prev.items():
            for i in range(1, n + 1):
                e = exps[:i] + (exps[i] + 2,) + exps[i + 1:]
                res[e] = res.get(e, 0) + c
    cache[key] = res
    return res


def from_axial(a: AxialPolynomial) -> MvPolynomial:
    """Substitute ``alpha -> x0`` and ``t -> x1^2 + ... + xn^2``."""
    n = a.n
    out: dict[Exps, Multivector] = {}
    for (i, j), c in a.terms.items():
        for exps, mult in _t_power_expansion(n, j).items():
            _accumulate(out, (i,) + exps[1:], c.scale(mult))
    return MvPolynomial._raw(n, out)


def to_axial(p: MvPolynomial) -> AxialPolynomial:
    """Recover the axial form of ``p`` or raise :class:`NotAxial`.

    Restricts ``p`` to the plane ``(alpha, s, 0, ..., 0)``, replaces ``s^2`` by
    ``t`` and re-expands; the candidate is returned only if the re-expansion
    reproduces ``p`` exactly.
    """
    n = p.n
    if n == 0:
        return AxialPolynomial._raw(0, {(e[0], 0): c for e, c in p.terms.items()})
    candidate: dict = {}
    for exps, c in p.terms.items():
        if any(exps[2:]):
            continue
        s_pow = exps[1]
        if s_pow & 1:
            raise NotAxial(f"odd power x1^{s_pow} in the restriction to the (x0, x1) plane")
        candidate[(exps[0], s_pow // 2)] = c
    cand = AxialPolynomial._raw(n, candidate)
    if from_axial(cand) != p:
        raise NotAxial("polynomial is not invariant under rotations of (x1, ..., xn)")
    return cand


def is_axial(p: MvPolynomial) -> bool:
    try:
        to_axial(p)
    except NotAxial:
        return False
    return True

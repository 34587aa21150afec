"""Exact arithmetic in the real Clifford algebra R_{0,n}.

Basis blades are encoded as integer bitmasks: bit ``i - 1`` set means the
generator ``e_i`` is present.  Every generator squares to ``-1``.

Scalars are :class:`fractions.Fraction`, so all arithmetic is exact.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

Rational = Fraction


class DimensionError(ValueError):
    """Raised when masks, indices or operands do not fit the algebra dimension."""


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings (``"3/2"``) to a Fraction.

    Floats are rejected so that nothing inexact leaks into symbolic code.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _check_mask(mask: int, n: int) -> None:
    if not 0 <= mask < (1 << n):
        raise DimensionError(f"blade mask {mask:#b} out of range for n={n}")


@lru_cache(maxsize=None)
def _blade_product(a: int, b: int) -> tuple[int, int]:
    inversions = 0
    shifted = a >> 1
    while shifted:
        inversions += bin(shifted & b).count("1")
        shifted >>= 1
    repeats = bin(a & b).count("1")
    sign = -1 if (inversions + repeats) & 1 else 1
    return sign, a ^ b


def blade_product(a: int, b: int, n: int) -> tuple[int, int]:
    """Product of two basis blades in R_{0,n}.

    Returns ``(sign, mask)`` with ``e_a e_b = sign * e_mask``.

    >>> blade_product(0b11, 0b01, 2)
    (1, 2)
    """
    _check_mask(a, n)
    _check_mask(b, n)
    return _blade_product(a, b)


def blade_grade(mask: int) -> int:
    return bin(mask).count("1")


def blade_indices(mask: int) -> tuple[int, ...]:
    """Ascending generator indices (1-based) of a blade mask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_from_indices(indices: Iterable[int], n: int) -> int:
    """Blade mask from a strictly ascending list of 1-based indices."""
    mask = 0
    prev = 0
    for i in indices:
        if i <= prev:
            raise ValueError(f"blade indices must be strictly ascending, got {list(indices)}")
        if i > n:
            raise DimensionError(f"blade index {i} exceeds n={n}")
        mask |= 1 << (i - 1)
        prev = i
    return mask


def conjugation_sign(mask: int) -> int:
    """Sign picked up by a blade under Clifford conjugation, (-1)^(k(k+1)/2)."""
    k = blade_grade(mask)
    return -1 if (k * (k + 1) // 2) & 1 else 1


class Multivector:
    """An element of R_{0,n} stored sparsely as ``{mask: Fraction}``.

    Instances are immutable by convention; zero coefficients are never stored.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[int, object] | None = None):
        if n < 0:
            raise DimensionError("dimension must be nonnegative")
        self.n = n
        clean: dict[int, Fraction] = {}
        if terms:
            for mask, c in terms.items():
                _check_mask(mask, n)
                c = to_rational(c)
                if c:
                    clean[mask] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[int, Fraction]) -> "Multivector":
        # trusted constructor: masks valid, no zero values
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, n: int, value=1) -> "Multivector":
        return cls(n, {0: value})

    @classmethod
    def zero(cls, n: int) -> "Multivector":
        return cls._raw(n, {})

    @classmethod
    def basis(cls, n: int, i: int) -> "Multivector":
        """The generator ``e_i`` (1-based)."""
        if not 1 <= i <= n:
            raise DimensionError(f"generator e{i} does not exist for n={n}")
        return cls._raw(n, {1 << (i - 1): Fraction(1)})

    @classmethod
    def blade(cls, n: int, indices: Sequence[int], coef=1) -> "Multivector":
        return cls(n, {mask_from_indices(indices, n): coef})

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return all(m == 0 for m in self.terms)

    def scalar_part(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            if other.n != self.n:
                raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        return Multivector.scalar(self.n, to_rational(other))

    def __add__(self, other) -> "Multivector":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Multivector._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Multivector":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Multivector":
        return (-self) + other

    def scale(self, c) -> "Multivector":
        c = to_rational(c)
        if not c:
            return Multivector._raw(self.n, {})
        return Multivector._raw(self.n, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "Multivector":
        if not isinstance(other, Multivector):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        if other.n != self.n:
            raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
        out: dict[int, Fraction] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                sign, mc = _blade_product(ma, mb)
                v = ca * cb
                out[mc] = out.get(mc, 0) + (v if sign > 0 else -v)
        return Multivector._raw(self.n, {m: c for m, c in out.items() if c})

    def __rmul__(self, other) -> "Multivector":
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other) -> "Multivector":
        return self.scale(1 / to_rational(other))

    def __pow__(self, k: int) -> "Multivector":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = Multivector.scalar(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def conjugate(self) -> "Multivector":
        return mv_conjugate(self)

    # -- comparison / display ---------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Multivector):
            return self.n == other.n and self.terms == other.terms
        try:
            return self.terms == Multivector.scalar(self.n, to_rational(other)).terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self) -> list[tuple[int, Fraction]]:
        """Terms in canonical order: by grade, then by ascending index word."""
        return sorted(self.terms.items(), key=lambda mc: (blade_grade(mc[0]), blade_indices(mc[0])))

    def __repr__(self) -> str:
        return f"Multivector({self.n}, {format_multivector(self)!r})"

    def __str__(self) -> str:
        return format_multivector(self)


def blade_name(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e" + "".join(str(i) for i in blade_indices(mask))


def format_multivector(x: Multivector) -> str:
    if not x.terms:
        return "0"
    parts = []
    for mask, c in x.sorted_terms():
        mag = abs(c)
        if mask == 0:
            body = str(mag)
        elif mag == 1:
            body = blade_name(mask)
        else:
            body = f"{mag} {blade_name(mask)}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def mv_conjugate(x: Multivector) -> Multivector:
    """Clifford conjugation: the linear antiinvolution with ``e_i -> -e_i``."""
    return Multivector._raw(
        x.n, {m: (c if conjugation_sign(m) > 0 else -c) for m, c in x.terms.items()}
    )


def quadratic_cone_membership(x: Multivector) -> tuple[bool, Multivector, Multivector]:
    """Return ``(is_member, t(x), n(x))`` where ``t = x + x^c`` and ``n = x x^c``.

    ``x`` lies in the quadratic cone exactly when both trace and norm are real.
    """
    xc = mv_conjugate(x)
    trace = x + xc
    norm = x * xc
    return trace.is_scalar() and norm.is_scalar(), trace, norm


class Paravector:
    """A point ``x0 + x1 e1 + ... + xn en`` of R^{n+1} inside R_{0,n}."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[object]):
        if len(coords) < 1:
            raise DimensionError("a paravector needs at least the real coordinate")
        self.coords = tuple(to_rational(c) for c in coords)

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def to_multivector(self) -> Multivector:
        terms = {0: self.coords[0]}
        for i, c in enumerate(self.coords[1:]):
            terms[1 << i] = c
        return Multivector(self.n, terms)

    def conjugate(self) -> "Paravector":
        return Paravector((self.coords[0],) + tuple(-c for c in self.coords[1:]))

    def trace(self) -> Fraction:
        return 2 * self.coords[0]

    def norm(self) -> Fraction:
        return sum((c * c for c in self.coords), Fraction(0))

    def __repr__(self) -> str:
        return f"Paravector({[str(c) for c in self.coords]})"

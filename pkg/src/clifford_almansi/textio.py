"""Text and structured-record formats for polynomials.

Grammar (whitespace juxtaposition is a product, ``*`` is optional)::

    poly   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (['*'] factor)*
    factor := RATIONAL | 'x'IDX['^'INT] | 'e'DIGITS | 'X'['^'INT] | '(' poly ')'

``x0..xn`` are the real coordinates, ``e13`` is the blade e1 e3 (indices
strictly ascending, one digit each, so text mode is limited to n <= 9), and
``X`` is the formal slice variable: ``X^2 e1 + 5`` is the slice polynomial
``x^2 e1 + 5``.  ``X`` commutes with coefficients, so coefficients may be
written on either side of it.

Canonical output writes one term per (monomial, blade) pair, ordered by
descending total degree, descending lexicographic exponent vector, then blade.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .clifford_core import (
    DimensionError,
    Multivector,
    blade_grade,
    blade_indices,
    blade_name,
    mask_from_indices,
)
from .mvpoly import AxialPolynomial, MvPolynomial
from .slice_poly import SlicePolynomial

MAX_TEXT_DIMENSION = 9


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rational>\d+(?:/\d+)?)
  | (?P<xvar>x(?P<xidx>\d+))
  | (?P<blade>e(?P<digits>\d+))
  | (?P<slice>X)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if m.group("xvar"):
            kind = "xvar"
        elif m.group("blade"):
            kind = "blade"
        else:
            kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(0), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


# Intermediate value: {(xexps, Xdeg): Multivector}
class _Expr:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        self.terms = terms

    @classmethod
    def const(cls, n, mv):
        return cls(n, {((0,) * (n + 1), 0): mv} if mv else {})

    def add(self, other, sign=1):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c * sign if k in out else c * sign
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return _Expr(self.n, out)

    def mul(self, other):
        out = {}
        for (ea, xa), ca in self.terms.items():
            for (eb, xb), cb in other.terms.items():
                key = (tuple(a + b for a, b in zip(ea, eb)), xa + xb)
                s = ca * cb
                if key in out:
                    s = out[key] + s
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return _Expr(self.n, out)

    def power(self, k):
        out = _Expr.const(self.n, Multivector.scalar(self.n, 1))
        for _ in range(k):
            out = out.mul(self)
        return out


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self) -> _Expr:
        if self.peek()[0] == "end":
            self.error("empty expression")
        expr = self.poly()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return expr

    def poly(self) -> _Expr:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = _Expr.const(self.n, Multivector.zero(self.n)).add(self.term(), sign)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                acc = acc.add(self.term(), -1 if tok[1] == "-" else 1)
            else:
                return acc

    def term(self) -> _Expr:
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc.mul(self.factor())
            elif tok[0] in ("rational", "xvar", "blade", "slice") or tok == ("op", "(", tok[2]):
                acc = acc.mul(self.factor())
            else:
                return acc

    def exponent(self) -> int:
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            num = self.take()
            if num[0] != "rational" or "/" in num[1]:
                self.error("exponent must be a nonnegative integer", num)
            return int(num[1])
        return 1

    def factor(self) -> _Expr:
        tok = self.take()
        kind, text, pos = tok
        n = self.n
        if kind == "rational":
            try:
                value = Fraction(text)
            except ZeroDivisionError:
                self.error("zero denominator", tok)
            return _Expr.const(n, Multivector.scalar(n, value))
        if kind == "xvar":
            idx = int(text[1:])
            if idx > n:
                self.error(f"variable {text} exceeds n={n}", tok)
            exps = [0] * (n + 1)
            exps[idx] = self.exponent()
            return _Expr(n, {(tuple(exps), 0): Multivector.scalar(n, 1)})
        if kind == "blade":
            indices = [int(ch) for ch in text[1:]]
            if any(i == 0 for i in indices):
                self.error("blade indices start at 1", tok)
            if any(b <= a for a, b in zip(indices, indices[1:])):
                self.error(f"non-ascending blade {text}", tok)
            if max(indices) > n:
                self.error(f"blade index {max(indices)} exceeds n={n}", tok)
            return _Expr.const(n, Multivector(n, {mask_from_indices(indices, n): 1}))
        if kind == "slice":
            k = self.exponent()
            return _Expr(n, {((0,) * (n + 1), k): Multivector.scalar(n, 1)})
        if kind == "op" and text == "(":
            inner = self.poly()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            k = self.exponent()
            return inner.power(k) if k != 1 else inner
        self.error(f"unexpected token {text!r}" if text else "unexpected end of input", tok)


def parse_polynomial(text: str, n: int, kind: str = "auto"):
    """Parse text into an :class:`MvPolynomial` or a :class:`SlicePolynomial`.

    ``kind`` is ``"mv"``, ``"slice"`` or ``"auto"`` (slice iff ``X`` occurs).
    Constants are accepted as either kind.
    """
    if kind not in ("auto", "mv", "slice"):
        raise ValueError(f"unknown kind {kind!r}")
    if n < 0:
        raise DimensionError("dimension must be nonnegative")
    expr = _Parser(text, n).parse()
    uses_x = any(any(e) for e, _ in expr.terms)
    uses_slice = any(k for _, k in expr.terms)
    if uses_x and uses_slice:
        raise ParseError("cannot mix coordinates x0..xn with the slice variable X", text, 0)
    if kind == "auto":
        kind = "slice" if uses_slice else "mv"
    if kind == "slice":
        if uses_x:
            raise ParseError("slice polynomials are written in X only", text, 0)
        deg = max((k for _, k in expr.terms), default=-1)
        coeffs = [Multivector.zero(n)] * (deg + 1)
        for (_, k), c in expr.terms.items():
            coeffs[k] = c
        return SlicePolynomial(n, coeffs)
    if uses_slice:
        raise ParseError("X is not allowed in coordinate polynomials", text, 0)
    return MvPolynomial(n, {e: c for (e, _), c in expr.terms.items()})


def parse_multivector(text: str, n: int) -> Multivector:
    p = parse_polynomial(text, n, kind="mv")
    if p.degree() > 0:
        raise ValueError("expected a constant multivector")
    return p.coefficient((0,) * (n + 1))


# -- formatting --------------------------------------------------------------------


def _blade_key(mask: int):
    return (blade_grade(mask), blade_indices(mask))


def _join(parts: list[tuple[Fraction, list[str]]]) -> str:
    if not parts:
        return "0"
    out = []
    for idx, (c, factors) in enumerate(parts):
        mag = abs(c)
        body = factors if mag == 1 and factors else [str(mag)] + factors
        text = " ".join(body)
        if idx == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)


def _check_text_dimension(n: int) -> None:
    if n > MAX_TEXT_DIMENSION:
        raise ValueError(
            f"text format supports n <= {MAX_TEXT_DIMENSION}; use the structured record format"
        )


def format_polynomial(p: MvPolynomial) -> str:
    _check_text_dimension(p.n)
    parts = []
    for exps, coef in p.sorted_terms():
        mono = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e]
        for mask, c in sorted(coef.terms.items(), key=lambda mc: _blade_key(mc[0])):
            parts.append((c, mono + ([blade_name(mask)] if mask else [])))
    return _join(parts)


def format_slice(f: SlicePolynomial) -> str:
    _check_text_dimension(f.n)
    parts = []
    for k in range(f.degree, -1, -1):
        a = f.coefficients[k]
        xs = [] if k == 0 else (["X"] if k == 1 else [f"X^{k}"])
        for mask, c in sorted(a.terms.items(), key=lambda mc: _blade_key(mc[0])):
            parts.append((c, xs + ([blade_name(mask)] if mask else [])))
    return _join(parts)


def format_axial(a: AxialPolynomial) -> str:
    """Human-readable axial form in ``a`` (alpha) and ``t``; not parseable."""
    parts = []
    for (i, j), coef in a.sorted_terms():
        mono = []
        if i:
            mono.append("a" if i == 1 else f"a^{i}")
        if j:
            mono.append("t" if j == 1 else f"t^{j}")
        for mask, c in sorted(coef.terms.items(), key=lambda mc: _blade_key(mc[0])):
            parts.append((c, mono + ([blade_name(mask)] if mask else [])))
    return _join(parts)


def canonical(text: str, n: int) -> str:
    """Canonical rendering of a text polynomial (coordinate or slice)."""
    p = parse_polynomial(text, n)
    return format_slice(p) if isinstance(p, SlicePolynomial) else format_polynomial(p)


# -- structured records ------------------------------------------------------------


def polynomial_to_records(p: MvPolynomial) -> list[dict]:
    records = []
    for exps, coef in p.sorted_terms():
        for mask, c in sorted(coef.terms.items(), key=lambda mc: _blade_key(mc[0])):
            records.append({"coef": str(c), "exps": list(exps), "blade": list(blade_indices(mask))})
    return records


def polynomial_from_records(n: int, records: list[dict]) -> MvPolynomial:
    terms: dict = {}
    for rec in records:
        exps = tuple(int(e) for e in rec["exps"])
        if len(exps) != n + 1:
            raise DimensionError(f"record exponent vector {exps} does not match n={n}")
        mv = Multivector(n, {mask_from_indices(rec.get("blade", []), n): Fraction(rec["coef"])})
        terms[exps] = terms[exps] + mv if exps in terms else mv
    return MvPolynomial(n, terms)


def slice_to_records(f: SlicePolynomial) -> list[dict]:
    return [
        {"coef": str(c), "power": k, "blade": list(blade_indices(mask))}
        for k, a in enumerate(f.coefficients)
        for mask, c in sorted(a.terms.items(), key=lambda mc: _blade_key(mc[0]))
    ]


def slice_from_records(n: int, records: list[dict]) -> SlicePolynomial:
    deg = max((int(r["power"]) for r in records), default=-1)
    coeffs = [Multivector.zero(n)] * (deg + 1)
    for rec in records:
        k = int(rec["power"])
        coeffs[k] = coeffs[k] + Multivector(
            n, {mask_from_indices(rec.get("blade", []), n): Fraction(rec["coef"])}
        )
    return SlicePolynomial(n, coeffs)


@dataclass
class PolynomialDocument:
    """A polynomial together with its dimension, as stored on disk.

    JSON layout: ``{"n": N, "text": "..."}`` or ``{"n": N, "terms": [records]}``
    or, for slice polynomials, ``{"n": N, "slice": [records]}``.  A plain text
    file (not JSON) holds just the polynomial text; its dimension must then be
    supplied by the caller.
    """

    n: int
    polynomial: object  # MvPolynomial | SlicePolynomial

    def to_json(self, structured: bool | None = None) -> str:
        p = self.polynomial
        if structured is None:
            structured = self.n > MAX_TEXT_DIMENSION
        if structured:
            key = "slice" if isinstance(p, SlicePolynomial) else "terms"
            recs = slice_to_records(p) if key == "slice" else polynomial_to_records(p)
            return json.dumps({"n": self.n, key: recs})
        text = format_slice(p) if isinstance(p, SlicePolynomial) else format_polynomial(p)
        return json.dumps({"n": self.n, "text": text})

    @classmethod
    def from_json(cls, raw: str) -> "PolynomialDocument":
        doc = json.loads(raw)
        n = int(doc["n"])
        if "text" in doc:
            return cls(n, parse_polynomial(doc["text"], n))
        if "slice" in doc:
            return cls(n, slice_from_records(n, doc["slice"]))
        if "terms" in doc:
            return cls(n, polynomial_from_records(n, doc["terms"]))
        raise ValueError("document needs one of 'text', 'terms' or 'slice'")

    @classmethod
    def load(cls, path, n: int | None = None) -> "PolynomialDocument":
        raw = Path(path).read_text()
        stripped = raw.lstrip()
        if stripped.startswith("{"):
            doc = cls.from_json(raw)
            if n is not None and doc.n != n:
                raise DimensionError(f"file declares n={doc.n}, but n={n} was requested")
            return doc
        if n is None:
            raise ValueError("plain-text polynomial files need an explicit dimension")
        return cls(n, parse_polynomial(raw.strip(), n))

    def save(self, path, structured: bool | None = None) -> None:
        Path(path).write_text(self.to_json(structured) + "\n")

"""Seeded random inputs for property checks (stdlib ``random`` only)."""
from __future__ import annotations

import random
from fractions import Fraction

from .clifford_core import Multivector
from .mvpoly import AxialPolynomial, MvPolynomial
from .slice_poly import SlicePolynomial


def random_rational(rng: random.Random, size: int = 9, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, den))


def random_multivector(rng: random.Random, n: int, max_blades: int | None = 3) -> Multivector:
    """Random rational multivector with at most ``max_blades`` blades (all if None)."""
    count = 1 << n
    k = count if max_blades is None else rng.randint(1, min(max_blades, count))
    masks = rng.sample(range(count), k)
    return Multivector(n, {m: random_rational(rng) for m in masks})


def random_mvpoly(rng: random.Random, n: int, degree: int, terms: int = 5, max_blades=2) -> MvPolynomial:
    out = MvPolynomial.zero(n)
    for _ in range(terms):
        d = rng.randint(0, degree)
        exps = [0] * (n + 1)
        for _ in range(d):
            exps[rng.randrange(n + 1)] += 1
        out = out + MvPolynomial.monomial(n, exps, random_multivector(rng, n, max_blades))
    return out


def random_homogeneous(rng: random.Random, n: int, degree: int, terms: int = 4, max_blades=2) -> MvPolynomial:
    out = MvPolynomial.zero(n)
    for _ in range(terms):
        exps = [0] * (n + 1)
        for _ in range(degree):
            exps[rng.randrange(n + 1)] += 1
        out = out + MvPolynomial.monomial(n, exps, random_multivector(rng, n, max_blades))
    return out


def random_axial(rng: random.Random, n: int, degree: int, terms: int = 4, max_blades=2) -> AxialPolynomial:
    out = {}
    for _ in range(terms):
        i = rng.randint(0, degree)
        j = rng.randint(0, (degree - i) // 2)
        out[(i, j)] = random_multivector(rng, n, max_blades)
    return AxialPolynomial(n, out)


def random_slice(
    rng: random.Random, n: int, max_degree: int, max_blades: int | None = 3, real: bool = False
) -> SlicePolynomial:
    d = rng.randint(1, max_degree)
    coeffs = []
    for k in range(d + 1):
        if k < d and rng.random() < 0.25:
            coeffs.append(Multivector.zero(n))
        elif real:
            coeffs.append(Multivector.scalar(n, random_rational(rng)))
        else:
            coeffs.append(random_multivector(rng, n, max_blades))
    if not coeffs[-1]:
        coeffs[-1] = Multivector.scalar(n, 1)
    return SlicePolynomial(n, coeffs)

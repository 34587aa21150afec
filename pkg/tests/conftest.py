import random

import pytest
import sympy as sp

from clifford_almansi.mvpoly import MvPolynomial


def brute_blade_product(a_idx, b_idx):
    """Sign and index word of e_a e_b by explicit adjacent swaps and cancellation.

    Independent of the bitmask inversion count used by the library.
    """
    word = list(a_idx) + list(b_idx)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                sign = -sign
                changed = True
            elif word[i] == word[i + 1]:
                del word[i : i + 2]
                sign = -sign  # e_i e_i = -1
                changed = True
                break
    return sign, tuple(word)


def sympy_components(p: MvPolynomial):
    """``{mask: sympy expr}`` with symbols x0..xn."""
    xs = sp.symbols(f"x0:{p.n + 1}")
    out = {}
    for exps, coef in p.terms.items():
        mono = sp.Integer(1)
        for x, e in zip(xs, exps):
            mono *= x**e
        for mask, c in coef.terms.items():
            out[mask] = out.get(mask, 0) + sp.Rational(c.numerator, c.denominator) * mono
    return xs, out


def sympy_laplacian_components(p: MvPolynomial):
    xs, comps = sympy_components(p)
    out = {}
    for mask, expr in comps.items():
        lap = sp.expand(sum(sp.diff(expr, x, 2) for x in xs))
        if lap != 0:
            out[mask] = lap
    return out


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])

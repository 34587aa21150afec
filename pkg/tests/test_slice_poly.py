from fractions import Fraction

import pytest
import sympy as sp

from clifford_almansi.clifford_core import DimensionError, Multivector
from clifford_almansi.diffops import cauchy_riemann, iterated_laplacian
from clifford_almansi.generators import random_slice
from clifford_almansi.mvpoly import (
    AxialPolynomial,
    MvPolynomial,
    conj_paravector_poly,
    from_axial,
    paravector_poly,
    poly_evaluate,
    vector_poly,
)
from clifford_almansi.slice_poly import (
    NotSlice,
    SlicePolynomial,
    expand,
    power_vs,
    slice_from_polynomial,
    slice_mul,
    spherical_derivative_full,
    spherical_value_derivative,
    zonal,
)
from clifford_almansi.textio import parse_polynomial as P

from oracles import zonal_uniqueness_system


def ax(n, terms):
    return AxialPolynomial(n, terms)


def complex_power_oracle(k):
    """``(V_k, S_k)`` from ``(a + i b)^k = V + i b S`` with sympy (independent of the recurrence)."""
    a, b, t = sp.symbols("a b t", real=True)
    re, im = sp.expand((a + sp.I * b) ** k).as_real_imag()
    V = sp.Poly(sp.expand(re).subs(b**2, t), a, t) if k else sp.Poly(1, a, t)
    S = sp.Poly(sp.expand(sp.cancel(im / b)).subs(b**2, t), a, t) if k else sp.Poly(0, a, t)
    to_dict = lambda poly: {m: Fraction(int(c.p), int(c.q)) for m, c in poly.terms() if c != 0}
    return to_dict(V), to_dict(S)


def test_power_vs_examples():
    assert power_vs(0).V == 1 and power_vs(0).S.is_zero()
    assert power_vs(2).V == ax(0, {(2, 0): 1, (0, 1): -1})
    assert power_vs(2).S == ax(0, {(1, 0): 2})
    assert power_vs(4).S == ax(0, {(3, 0): 4, (1, 1): -4})


@pytest.mark.parametrize("k", range(13))
def test_power_vs_matches_complex_powers(k):
    V, S = complex_power_oracle(k)
    pv = power_vs(k)
    assert {key: c.scalar_part() for key, c in pv.V.terms.items()} == V
    assert {key: c.scalar_part() for key, c in pv.S.terms.items()} == S


def test_power_vs_cross_check_by_expansion():
    for n in (2, 3):
        pv = power_vs(2, n)
        assert from_axial(pv.V) + vector_poly(n) * from_axial(pv.S) == paravector_poly(n) ** 2


def test_zonal_examples():
    assert zonal(5, 3) == P("4 x0^3 - 4 x0 x1^2 - 4 x0 x2^2 - 4 x0 x3^2 - 4 x0 x4^2 - 4 x0 x5^2", 5)
    for n in (2, 3, 7):
        assert zonal(n, 0) == 1
        assert zonal(n, 1) == MvPolynomial.variable(n, 0).scale(2)
    assert zonal(3, -1).is_zero()


@pytest.mark.parametrize("n", range(2, 7))
def test_power_identity(n):
    xc = conj_paravector_poly(n)
    x = paravector_poly(n)
    power = MvPolynomial.constant(n, 1)
    for k in range(11):
        # repeated Clifford multiplication is the oracle for x^k
        assert power == zonal(n, k) - xc * zonal(n, k - 1)
        assert expand(SlicePolynomial.power(n, k)) == power
        power = power * x


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8])
def test_normalization(n):
    for k in range(13):
        assert poly_evaluate(zonal(n, k), [1] + [0] * n) == k + 1


@pytest.mark.parametrize("n", [3, 5, 7])
def test_zonal_m_harmonic(n):
    m = (n - 1) // 2
    for k in range(11):
        z = zonal(n, k)
        assert iterated_laplacian(z, m).is_zero()
        if k >= 2 * m:
            # exactly m-harmonic, not (m-1)-harmonic, once the degree allows it
            assert m == 1 or not iterated_laplacian(z, m - 1).is_zero()


def test_expand_examples():
    n = 3
    assert expand(SlicePolynomial(n, [0, 1])) == paravector_poly(n)
    x0 = MvPolynomial.variable(n, 0)
    t = from_axial(AxialPolynomial.t(n))
    assert expand(SlicePolynomial.power(n, 2)) == x0 * x0 - t + (x0 * vector_poly(n)).scale(2)
    a0 = Multivector.blade(n, [1, 3], Fraction(5, 2))
    assert expand(SlicePolynomial(n, [a0])) == MvPolynomial.constant(n, a0)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_expand_matches_direct_evaluation(n, rng):
    for _ in range(10):
        f = random_slice(rng, n, 6)
        p = expand(f)
        for _ in range(3):
            pt = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n + 1)]
            assert poly_evaluate(p, pt) == f.evaluate(pt)


def test_spherical_value_derivative_examples():
    n = 3
    V, S = spherical_value_derivative(SlicePolynomial(n, [0, 1]))
    assert V == AxialPolynomial.alpha(n) and S == 1
    e1 = Multivector.basis(n, 1)
    V, S = spherical_value_derivative(SlicePolynomial.power(n, 2, e1))
    assert V == ax(n, {(2, 0): e1, (0, 1): -e1})
    assert S == ax(n, {(1, 0): e1.scale(2)})
    _, S = spherical_value_derivative(SlicePolynomial.power(n, 3))
    assert S == ax(n, {(2, 0): 3, (0, 1): -1})
    assert S.evaluate(1, 0) == 3


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_representation_and_cauchy_riemann(n, rng):
    v = vector_poly(n)
    for _ in range(8):
        f = random_slice(rng, n, 7)
        p = expand(f)
        Vf, Sf = spherical_value_derivative(f)
        assert p == from_axial(Vf) + v * from_axial(Sf)
        assert cauchy_riemann(p) == from_axial(Sf).scale(1 - n)
        assert spherical_derivative_full(p) == (Vf, Sf)


def test_spherical_derivative_full_examples():
    n = 3
    V, S = spherical_derivative_full(expand(SlicePolynomial.power(n, 2)))
    assert V == ax(n, {(2, 0): 1, (0, 1): -1}) and S == ax(n, {(1, 0): 2})
    V, S = spherical_derivative_full(MvPolynomial.variable(n, 0))
    assert V == AxialPolynomial.alpha(n) and S.is_zero()
    for n in (2, 3, 5):
        with pytest.raises(NotSlice):
            spherical_derivative_full(MvPolynomial.variable(n, 1))


def test_slice_mul_examples(rng):
    n = 3
    e1, e2 = Multivector.basis(n, 1), Multivector.basis(n, 2)
    prod = slice_mul(SlicePolynomial.power(n, 1, e1), SlicePolynomial.power(n, 1, e2))
    assert prod == SlicePolynomial.power(n, 2, e1 * e2)
    f = random_slice(rng, n, 4)
    assert slice_mul(SlicePolynomial(n, [1]), f) == f
    with pytest.raises(DimensionError):
        slice_mul(f, SlicePolynomial(2, [1]))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_slice_preserving_product_is_pointwise(n, rng):
    for _ in range(6):
        f = random_slice(rng, n, 4, real=True)
        g = random_slice(rng, n, 4)
        assert expand(slice_mul(f, g)) == expand(f) * expand(g)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_leibniz_rule(n, rng):
    for _ in range(8):
        f = random_slice(rng, n, 4, real=True)
        g = random_slice(rng, n, 4)
        Vf, Sf = spherical_value_derivative(f)
        Vg, Sg = spherical_value_derivative(g)
        _, Sfg = spherical_value_derivative(slice_mul(f, g))
        assert Sfg == Sf * Vg + Vf * Sg


def test_slice_from_polynomial(rng):
    for n in (2, 3):
        f = random_slice(rng, n, 5)
        assert slice_from_polynomial(expand(f)) == f
        with pytest.raises(NotSlice):
            slice_from_polynomial(MvPolynomial.variable(n, 1))


@pytest.mark.parametrize("k", range(7))
def test_zonal_uniqueness_oracle(k):
    dim, poly = zonal_uniqueness_system(k)
    assert dim == 1
    assert poly == zonal(3, k)

import pytest
import sympy as sp

from clifford_almansi.clifford_core import Multivector
from clifford_almansi.diffops import (
    Operator,
    OperatorTag,
    axial_laplacian,
    cauchy_riemann,
    conj_cauchy_riemann,
    dirac,
    iterated_laplacian,
    laplacian,
)
from clifford_almansi.generators import random_axial, random_mvpoly, random_slice
from clifford_almansi.mvpoly import (
    AxialPolynomial,
    MvPolynomial,
    conj_compose,
    from_axial,
    norm_sq_poly,
    paravector_poly,
    poly_partial_derivative,
)
from clifford_almansi.slice_poly import SlicePolynomial, expand, zonal
from clifford_almansi.textio import parse_polynomial as P

from conftest import sympy_laplacian_components

# Delta^2 |x|^4 on R^4, frozen from the sympy computation in
# test_bilaplacian_constant_oracle below.
BILAPLACIAN_R4_NORM4 = 192


def test_bilaplacian_constant_oracle():
    xs = sp.symbols("x0:4")
    r2 = sum(v**2 for v in xs)
    lap = lambda f: sum(sp.diff(f, v, 2) for v in xs)
    assert sp.expand(lap(lap(r2**2))) == BILAPLACIAN_R4_NORM4


def test_laplacian_examples():
    for n in (2, 3, 5):
        assert laplacian(norm_sq_poly(n)) == 2 * (n + 1)
    expected = P("-40 x0^2 + 8 x1^2 + 8 x2^2 + 8 x3^2 + 8 x4^2 + 8 x5^2", 5)
    assert laplacian(zonal(5, 4)) == expected
    for k in range(11):
        assert laplacian(zonal(3, k)).is_zero()


def test_iterated_laplacian_examples():
    assert iterated_laplacian(zonal(5, 4), 2).is_zero()
    assert iterated_laplacian(norm_sq_poly(3) ** 2, 2) == BILAPLACIAN_R4_NORM4
    for n in (3, 5):
        m = (n - 1) // 2
        for d in range(9):
            assert iterated_laplacian(expand(SlicePolynomial.power(n, d)), m + 1).is_zero()


@pytest.mark.parametrize("n", [2, 3])
def test_laplacian_matches_sympy(n, rng):
    for _ in range(5):
        p = random_mvpoly(rng, n, 5)
        from conftest import sympy_components

        _, got = sympy_components(laplacian(p))
        assert {k: sp.expand(v) for k, v in got.items()} == sympy_laplacian_components(p)


def test_cauchy_riemann_examples():
    for n in (2, 3, 4):
        assert cauchy_riemann(paravector_poly(n)) == 1 - n
        assert conj_cauchy_riemann(paravector_poly(n)) == 1 + n
        x2 = paravector_poly(n) ** 2
        assert cauchy_riemann(x2) == MvPolynomial.variable(n, 0).scale(2 * (1 - n))
        assert cauchy_riemann(MvPolynomial.constant(n, Multivector.blade(n, [1]))).is_zero()
        assert dirac(MvPolynomial.variable(n, 0)).is_zero()


def test_left_multiplication_convention():
    # dbar(x1 e2) = e1 e2, not e2 e1
    n = 2
    p = MvPolynomial.variable(n, 1) * Multivector.blade(n, [2])
    assert cauchy_riemann(p) == MvPolynomial.constant(n, Multivector.blade(n, [1, 2]))


@pytest.mark.parametrize("n", [2, 3, 5])
def test_factorization_and_decomposition(n, rng):
    for _ in range(8):
        p = random_mvpoly(rng, n, 6)
        lap = laplacian(p)
        assert conj_cauchy_riemann(cauchy_riemann(p)) == lap
        assert cauchy_riemann(conj_cauchy_riemann(p)) == lap
        assert cauchy_riemann(p) == poly_partial_derivative(p, 0) + dirac(p)
        assert conj_cauchy_riemann(p) == poly_partial_derivative(p, 0) - dirac(p)
        assert laplacian(conj_compose(p)) == conj_compose(lap)


def test_axial_laplacian_examples():
    assert axial_laplacian(AxialPolynomial.t(5)) == 10
    assert axial_laplacian(AxialPolynomial.alpha(3) * AxialPolynomial.alpha(3)) == 2
    z = AxialPolynomial(5, {(4, 0): 5, (2, 1): -10, (0, 2): 1})
    assert axial_laplacian(z) == AxialPolynomial(5, {(2, 0): -40, (0, 1): 8})


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_axial_laplacian_agrees_with_expansion(n, rng):
    for _ in range(10):
        a = random_axial(rng, n, 7)
        assert from_axial(axial_laplacian(a)) == laplacian(from_axial(a))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_fueter_sce(n, rng):
    m = (n - 1) // 2
    for _ in range(4):
        p = expand(random_slice(rng, n, 7))
        assert cauchy_riemann(iterated_laplacian(p, m)).is_zero()


def test_operator_tags():
    p = zonal(5, 4)
    assert OperatorTag(Operator.ITERATED_LAPLACIAN, 2)(p).is_zero()
    assert OperatorTag(Operator.LAPLACIAN)(p) == laplacian(p)
    assert OperatorTag(Operator.DIRAC)(p) == dirac(p)
    with pytest.raises(ValueError):
        OperatorTag(Operator.ITERATED_LAPLACIAN, 0)
    with pytest.raises(ValueError):
        OperatorTag(Operator.DIRAC, 2)

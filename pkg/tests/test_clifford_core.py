import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clifford_almansi.clifford_core import (
    DimensionError,
    Multivector,
    Paravector,
    blade_indices,
    blade_product,
    mask_from_indices,
    mv_conjugate,
    quadratic_cone_membership,
)

from conftest import brute_blade_product

E1, E2, E12 = 0b01, 0b10, 0b11


def test_blade_product_examples():
    assert blade_product(E1, E1, 2) == (-1, 0)
    assert blade_product(E1, E2, 2) == (1, E12)
    assert blade_product(E12, E1, 2) == (1, E2)


def test_blade_product_out_of_range():
    with pytest.raises(DimensionError):
        blade_product(0b100, 0b1, 2)


@pytest.mark.parametrize("n", range(1, 7))
def test_blade_product_matches_swap_brute_force(n):
    for a in range(1 << n):
        for b in range(1 << n):
            sign, word = brute_blade_product(blade_indices(a), blade_indices(b))
            assert blade_product(a, b, n) == (sign, mask_from_indices(word, n))


@pytest.mark.parametrize("n", range(1, 7))
def test_generators_anticommute(n):
    for i, j in itertools.product(range(1, n + 1), repeat=2):
        ei, ej = Multivector.basis(n, i), Multivector.basis(n, j)
        if i == j:
            assert ei * ej == -1
        else:
            assert ei * ej + ej * ei == 0


def test_ring_examples():
    e1 = Multivector.basis(1, 1)
    assert (1 + e1) * (1 - e1) == 2
    x = Multivector(3, {0: 2, 0b101: Fraction(-1, 3)})
    assert Multivector.scalar(3, 1) * x == x


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        Multivector.basis(2, 1) * Multivector.basis(3, 1)
    with pytest.raises(DimensionError):
        Multivector.basis(2, 1) + Multivector.basis(3, 1)


def test_floats_rejected():
    with pytest.raises(TypeError):
        Multivector.scalar(2, 0.5)


def test_conjugation_examples():
    n = 3
    assert mv_conjugate(Multivector.basis(n, 1)) == -Multivector.basis(n, 1)
    e12 = Multivector.blade(n, [1, 2])
    assert mv_conjugate(e12) == -e12
    assert mv_conjugate(Multivector.scalar(n, 7)) == 7
    # grade 3 and 4 are fixed, grade 1 and 2 flip
    assert mv_conjugate(Multivector.blade(4, [1, 2, 3])) == Multivector.blade(4, [1, 2, 3])
    assert mv_conjugate(Multivector.blade(4, [1, 2, 3, 4])) == Multivector.blade(4, [1, 2, 3, 4])


def test_paravector_norm_and_trace():
    p = Paravector([3, 1, -2, Fraction(1, 2)])
    x = p.to_multivector()
    xc = mv_conjugate(x)
    assert x * xc == p.norm() == Fraction(9 + 1 + 4, 1) + Fraction(1, 4)
    assert xc * x == x * xc
    assert x + xc == 6
    assert p.conjugate().to_multivector() == xc


def test_quadratic_cone_examples():
    p = Paravector([2, 1, 1, 3]).to_multivector()
    member, t, nrm = quadratic_cone_membership(p)
    assert member and t == 4 and nrm == 4 + 1 + 1 + 9

    member, t, nrm = quadratic_cone_membership(Multivector.blade(2, [1, 2]))
    assert (member, t, nrm) == (True, 0, 1)

    e123 = Multivector.blade(3, [1, 2, 3])
    member, t, nrm = quadratic_cone_membership(e123)
    assert not member
    assert t == e123.scale(2)
    # e1e2e3 e1e2e3 = +1 in R_{0,3} (three squares and three swaps)
    assert nrm == 1
    assert brute_blade_product((1, 2, 3), (1, 2, 3)) == (1, ())


def mv_strategy(n):
    coef = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.dictionaries(st.integers(0, (1 << n) - 1), coef, max_size=6).map(
        lambda d: Multivector(n, d)
    )


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_algebra_properties(data):
    n = data.draw(st.integers(1, 5))
    x, y, z = (data.draw(mv_strategy(n)) for _ in range(3))
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert mv_conjugate(x * y) == mv_conjugate(y) * mv_conjugate(x)
    assert mv_conjugate(mv_conjugate(x)) == x


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(-10, 10, max_denominator=5), min_size=2, max_size=7))
def test_paravectors_lie_in_cone(coords):
    p = Paravector(coords)
    member, t, nrm = quadratic_cone_membership(p.to_multivector())
    assert member
    assert t == 2 * p.coords[0]
    assert nrm == sum(c * c for c in p.coords)


def test_quaternion_algebra_is_whole_cone(rng):
    # R_{0,2} is the quaternions: every element has real trace and norm
    from clifford_almansi.generators import random_multivector

    for _ in range(50):
        assert quadratic_cone_membership(random_multivector(rng, 2, None))[0]

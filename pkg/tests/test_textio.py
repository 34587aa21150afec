import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from clifford_almansi.clifford_core import DimensionError, Multivector
from clifford_almansi.generators import random_mvpoly, random_slice
from clifford_almansi.mvpoly import AxialPolynomial, MvPolynomial
from clifford_almansi.slice_poly import SlicePolynomial, zonal, zonal_axial
from clifford_almansi.textio import (
    ParseError,
    PolynomialDocument,
    canonical,
    format_axial,
    format_polynomial,
    format_slice,
    parse_multivector,
    parse_polynomial,
    polynomial_from_records,
    polynomial_to_records,
    slice_from_records,
    slice_to_records,
)

from oracles import fuzz_text

GOLDEN = Path(__file__).parent / "golden" / "canonical.txt"


def golden_cases():
    for line in GOLDEN.read_text().splitlines():
        if line.strip() and not line.startswith("#"):
            n, text, expected = (part.strip() for part in line.split("|"))
            yield int(n), text, expected


@pytest.mark.parametrize("n,text,expected", list(golden_cases()))
def test_golden_canonical(n, text, expected):
    assert canonical(text, n) == expected
    assert canonical(expected, n) == expected


def test_grammar_examples():
    p = parse_polynomial("3/2 x0^2 x1 e12 - x3 e1", 3)
    assert len(p.terms) == 2
    f = parse_polynomial("X^2 e1 + X 1 + 5", 3)
    assert list(f.coefficients) == [5, 1, Multivector.basis(3, 1)]
    with pytest.raises(ParseError):
        parse_polynomial("x0 e21", 3)


def test_parse_values():
    p = parse_polynomial("3 x0 x1 e1 - x2 e12 + 1/2", 2)
    assert p.coefficient((1, 1, 0)) == Multivector.blade(2, [1], 3)
    assert p.coefficient((0, 0, 1)) == Multivector.blade(2, [1, 2], -1)
    assert p.coefficient((0, 0, 0)) == Fraction(1, 2)
    f = parse_polynomial("X^2 e1 + 5", 3)
    assert isinstance(f, SlicePolynomial)
    assert f.coefficients[2] == Multivector.basis(3, 1) and f.coefficients[0] == 5
    assert isinstance(parse_polynomial("7", 3, kind="slice"), SlicePolynomial)
    assert parse_multivector("2 e12 - 1", 2) == Multivector(2, {0: -1, 3: 2})


@pytest.mark.parametrize(
    "text,n,line,col",
    [
        ("x0 +", 2, 1, 5),
        ("x4", 3, 1, 1),
        ("e21", 3, 1, 1),
        ("e4", 3, 1, 1),
        ("x0 ^", 2, 1, 5),
        ("(x0", 2, 1, 4),
        ("1/0", 2, 1, 1),
        ("x0\n + $", 2, 2, 4),
    ],
)
def test_parse_errors_have_positions(text, n, line, col):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, n)
    assert (info.value.line, info.value.column) == (line, col)


def test_parse_kind_errors():
    with pytest.raises(ParseError):
        parse_polynomial("X + x0", 2)
    with pytest.raises(ParseError):
        parse_polynomial("x0", 2, kind="slice")
    with pytest.raises(ParseError):
        parse_polynomial("X", 2, kind="mv")
    with pytest.raises(ValueError):
        parse_polynomial("1", 2, kind="other")
    with pytest.raises(ValueError):
        parse_multivector("x0", 2)


def test_text_dimension_limit():
    with pytest.raises(ValueError):
        format_polynomial(MvPolynomial.variable(10, 0))
    doc = PolynomialDocument(11, zonal(11, 3))
    assert "terms" in json.loads(doc.to_json())
    assert PolynomialDocument.from_json(doc.to_json()).polynomial == zonal(11, 3)


def test_format_axial():
    assert format_axial(zonal_axial(5, 4)) == "5 a^4 - 10 a^2 t + t^2"
    assert format_axial(AxialPolynomial.zero(3)) == "0"


def test_fuzz_round_trip_small():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 4)
        p = parse_polynomial(fuzz_text(rng, n), n, kind="mv")
        text = format_polynomial(p)
        assert parse_polynomial(text, n, kind="mv") == p
        assert format_polynomial(parse_polynomial(text, n, kind="mv")) == text


def test_random_round_trips(rng):
    for n in (1, 3, 9):
        p = random_mvpoly(rng, n, 4)
        assert parse_polynomial(format_polynomial(p), n, kind="mv") == p
        assert polynomial_from_records(n, polynomial_to_records(p)) == p
        f = random_slice(rng, n, 5)
        assert parse_polynomial(format_slice(f), n, kind="slice") == f
        assert slice_from_records(n, slice_to_records(f)) == f


def test_records_dimension_check():
    with pytest.raises(DimensionError):
        polynomial_from_records(2, [{"coef": "1", "exps": [1, 0], "blade": []}])


def test_documents(tmp_path):
    f = parse_polynomial("X^2 e1 + 5", 3)
    path = tmp_path / "f.json"
    PolynomialDocument(3, f).save(path)
    assert PolynomialDocument.load(path).polynomial == f
    PolynomialDocument(3, f).save(path, structured=True)
    assert "slice" in json.loads(path.read_text())
    assert PolynomialDocument.load(path, 3).polynomial == f
    with pytest.raises(DimensionError):
        PolynomialDocument.load(path, 4)
    txt = tmp_path / "p.txt"
    txt.write_text("x0^2 - x1\n")
    assert PolynomialDocument.load(txt, 2).polynomial == parse_polynomial("x0^2 - x1", 2)
    with pytest.raises(ValueError):
        PolynomialDocument.load(txt)
    with pytest.raises(ValueError):
        PolynomialDocument.from_json('{"n": 2}')

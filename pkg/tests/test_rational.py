from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from pentaspace.errors import ParseError, SingularMatrix, ZeroDenominator
from pentaspace.rational import (
    Matrix,
    Vec2,
    canonical,
    format_rational,
    independent_rows,
    rational_from_string,
    solve_exact,
)


@pytest.mark.parametrize(
    "A, b, expected",
    [
        ([[2]], [3], [Fraction(3, 2)]),
        ([[1, 0], [0, 1]], [5, -7], [5, -7]),
        ([[1, 1], [1, -1]], [4, 0], [2, 2]),
    ],
)
def test_solve_exact_examples(A, b, expected):
    assert solve_exact(Matrix(A), b) == expected


def test_solve_exact_needs_row_swap():
    x = solve_exact(Matrix([[0, 1], [1, 0]]), [3, 4])
    assert x == [4, 3]


def test_solve_exact_singular():
    with pytest.raises(SingularMatrix):
        solve_exact(Matrix([[1, 2], [2, 4]]), [1, 2])


def test_solve_exact_rejects_non_square():
    with pytest.raises(ValueError):
        solve_exact(Matrix([[1, 2, 3], [4, 5, 6]]), [1, 2])


@pytest.mark.parametrize(
    "text, expected",
    [
        ("3/6", Fraction(1, 2)),
        ("2", Fraction(2)),
        ("1.25", Fraction(5, 4)),
        ("0.5", Fraction(1, 2)),
        ("-7/21", Fraction(-1, 3)),
        (".75", Fraction(3, 4)),
        (" 4 ", Fraction(4)),
    ],
)
def test_rational_from_string(text, expected):
    assert rational_from_string(text) == expected


@pytest.mark.parametrize("text", ["", "abc", "1/2/3", "1e3", "1/-2", "--1", "3/"])
def test_rational_from_string_rejects(text):
    with pytest.raises(ParseError):
        rational_from_string(text)


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational_from_string("1/0")


def test_format_rational():
    assert format_rational(Fraction(29, 2)) == "29/2"
    assert format_rational(Fraction(6)) == "6"
    assert format_rational(-3) == "-3"


def test_vec2_canonicalizes_integral_coordinates():
    v = Vec2(Fraction(4, 2), "1/3")
    assert type(v.x) is int and v.x == 2
    assert v.y == Fraction(1, 3)
    assert Vec2(2, 0) == Vec2(Fraction(2), Fraction(0))
    assert hash(Vec2(2, 0)) == hash(Vec2(Fraction(2), Fraction(0)))
    assert Vec2(1, 2).cross(Vec2(3, 4)) == -2


def test_canonical():
    assert type(canonical(Fraction(6, 3))) is int
    assert canonical(Fraction(1, 3)) == Fraction(1, 3)


small = st.integers(min_value=-9, max_value=9)
fractions_ = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n),
        st.lists(small, min_size=n, max_size=n),
    )
))
def test_solve_exact_substitutes_back(case):
    rows, b = case
    A = Matrix(rows)
    try:
        x = solve_exact(A, b)
    except SingularMatrix:
        # a zero pivot column means the rows really are dependent
        assert len(independent_rows(rows)) < len(rows)
        return
    assert A @ x == [Fraction(v) for v in b]


@given(fractions_, fractions_, fractions_)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assume(y != 0)
    assert (x / y) * y == x


@given(fractions_)
def test_format_parse_roundtrip(q):
    assert rational_from_string(format_rational(q)) == q


def test_independent_rows_greedy():
    rows = [[1, 2, 3], [2, 4, 6], [0, 1, 0], [1, 3, 3], [0, 0, 1]]
    assert independent_rows(rows) == [0, 2, 4]
    assert independent_rows(rows, limit=2) == [0, 2]

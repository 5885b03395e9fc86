import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hardymuntz.exactnum import (DimensionError, RatMatrix, SingularMatrixError,
                                 bareiss_determinant, format_rational, make_rational,
                                 parse_rational, solve_exact, to_double)
from oracles import cofactor_determinant, hilbert_rows

small_rationals = st.builds(F, st.integers(-20, 20), st.integers(1, 12))


@st.composite
def square_matrices(draw, max_size=6):
    n = draw(st.integers(1, max_size))
    return [[draw(small_rationals) for _ in range(n)] for _ in range(n)]


@pytest.mark.parametrize("num,den,expected", [
    (2, 4, F(1, 2)),
    (0, 7, F(0, 1)),
    (3, -6, F(-1, 2)),
])
def test_make_rational_canonical(num, den, expected):
    r = make_rational(num, den)
    assert r == expected
    assert r.denominator > 0
    assert math.gcd(r.numerator, r.denominator) == 1


def test_make_rational_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        make_rational(1, 0)


def test_serialization_round_trip():
    assert format_rational(F(-1, 2)) == "-1/2"
    assert format_rational(F(0)) == "0/1"
    assert parse_rational("3/6") == F(1, 2)
    assert parse_rational(" -4/6 ") == F(-2, 3)
    assert parse_rational("5") == F(5)
    for bad in ["0.5", "1/2/3", "", "a/b", "1e3"]:
        with pytest.raises(ValueError):
            parse_rational(bad)
    with pytest.raises(ZeroDivisionError):
        parse_rational("1/0")


@pytest.mark.parametrize("rows,expected", [
    ([[1]], F(1)),
    ([[1, F(1, 2)], [F(1, 2), F(1, 3)]], F(1, 12)),
    (hilbert_rows(3), F(1, 2160)),
])
def test_bareiss_examples(rows, expected):
    assert cofactor_determinant(rows) == expected
    assert bareiss_determinant(RatMatrix.from_rows(rows)) == expected


def test_bareiss_empty_and_errors():
    assert bareiss_determinant(RatMatrix(0, 0, ())) == 1
    with pytest.raises(DimensionError):
        bareiss_determinant(RatMatrix.from_rows([[1, 2]]))


def test_bareiss_row_swap_sign():
    assert bareiss_determinant(RatMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert bareiss_determinant(RatMatrix.from_rows([[0, 0, 2], [0, 3, 0], [5, 0, 0]])) == -30


def test_bareiss_singular():
    assert bareiss_determinant(RatMatrix.from_rows([[1, 2], [2, 4]])) == 0


@settings(max_examples=150, deadline=None)
@given(square_matrices())
def test_bareiss_matches_cofactor(rows):
    assert bareiss_determinant(RatMatrix.from_rows(rows)) == cofactor_determinant(rows)


@pytest.mark.parametrize("rows,b,expected", [
    ([[2]], [1], [F(1, 2)]),
    ([[1, F(1, 2)], [F(1, 2), F(1, 3)]], [1, F(1, 2)], [1, 0]),
    ([[F(1, 3)]], [F(1, 2)], [F(3, 2)]),
])
def test_solve_examples(rows, b, expected):
    assert solve_exact(RatMatrix.from_rows(rows), b) == expected


def test_solve_errors():
    with pytest.raises(SingularMatrixError):
        solve_exact(RatMatrix.from_rows([[1, 2], [2, 4]]), [1, 1])
    with pytest.raises(DimensionError):
        solve_exact(RatMatrix.from_rows([[1, 2], [2, 4]]), [1])


@settings(max_examples=100, deadline=None)
@given(square_matrices(), st.data())
def test_solve_reproduces_rhs(rows, data):
    A = RatMatrix.from_rows(rows)
    b = [data.draw(small_rationals) for _ in rows]
    if cofactor_determinant(rows) == 0:
        with pytest.raises(SingularMatrixError):
            solve_exact(A, b)
    else:
        assert A.matvec(solve_exact(A, b)) == b


def test_solve_large_hilbert():
    n = 20
    A = RatMatrix.from_rows(hilbert_rows(n))
    b = [F(1)] * n
    assert A.matvec(solve_exact(A, b)) == b


def test_to_double():
    assert to_double(F(1, 2)) == 0.5
    assert to_double(F(1, 3)) == 1 / 3
    assert to_double(F(1, 2160)) == pytest.approx(4.6296e-4, rel=1e-4)
    assert to_double(F(1, 2160)) == 1 / 2160
    with pytest.warns(RuntimeWarning):
        assert to_double(F(-10 ** 400, 3)) == -math.inf
    assert to_double(F(1, 10 ** 400)) == 0.0


@given(small_rationals, small_rationals, small_rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def test_matrix_validation():
    with pytest.raises(DimensionError):
        RatMatrix(2, 2, (1, 2, 3))
    with pytest.raises(DimensionError):
        RatMatrix.from_rows([[1, 2], [3]])
    m = RatMatrix.from_rows([[1, 2], [3, 4]])
    assert m[1, 0] == 3
    assert m.transpose().to_rows() == [[1, 3], [2, 4]]
    assert RatMatrix.identity(2).matvec([F(1, 2), 3]) == [F(1, 2), 3]

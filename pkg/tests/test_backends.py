from fractions import Fraction

import pytest

from smearlab.backends import (
    EXACT,
    FLOAT,
    ExactComplex,
    ExactSqrtError,
    backend_of,
    get_backend,
    rational_sqrt,
)


def test_rational_sqrt_perfect_squares():
    assert rational_sqrt(Fraction(1, 4)) == Fraction(1, 2)
    assert rational_sqrt(Fraction(9, 16)) == Fraction(3, 4)
    assert rational_sqrt(0) == 0
    assert rational_sqrt(1) == 1
    assert rational_sqrt(Fraction(49)) == 7


def test_rational_sqrt_rejects_non_squares():
    for bad in (Fraction(1, 2), Fraction(3, 10), 2, Fraction(5, 4)):
        with pytest.raises(ExactSqrtError):
            rational_sqrt(bad)
    with pytest.raises(ExactSqrtError):
        rational_sqrt(-1)


def test_exact_complex_field_axioms():
    a = ExactComplex(Fraction(1, 3), Fraction(-2, 7))
    b = ExactComplex(Fraction(5, 2), Fraction(1, 11))
    c = ExactComplex(Fraction(-4), Fraction(9, 13))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == 0
    assert a * (b / b) == a
    assert (a / b) * b == a
    assert a - b == -(b - a)


def test_exact_complex_conjugate_and_abs2():
    a = ExactComplex(Fraction(3, 5), Fraction(4, 5))
    assert a.abs2() == 1
    assert a * a.conjugate() == ExactComplex(a.abs2())
    assert complex(a) == complex(0.6, 0.8)


def test_exact_complex_int_interop():
    a = ExactComplex(2, 3)
    assert a + 1 == ExactComplex(3, 3)
    assert 2 * a == ExactComplex(4, 6)
    assert a - Fraction(1, 2) == ExactComplex(Fraction(3, 2), 3)
    assert 1 / ExactComplex(0, 1) == ExactComplex(0, -1)


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ExactComplex(1) / ExactComplex(0)


def test_backend_lookup_and_inference():
    assert get_backend("float") is FLOAT
    assert get_backend("exact") is EXACT
    with pytest.raises(ValueError):
        get_backend("symbolic")
    assert backend_of(FLOAT.eye(2)) is FLOAT
    assert backend_of(EXACT.eye(2)) is EXACT


def test_exact_backend_eye_entries_independent():
    eye = EXACT.zeros((2, 2))
    eye[0, 0] = ExactComplex(5)
    assert eye[1, 1] == ExactComplex(0)

from fractions import Fraction

import pytest
from hypothesis import given

from calpanic import Coefficient
from conftest import coefficients


def test_lowest_terms():
    c = Coefficient(Fraction(6, -4), Fraction(2, 4))
    assert (c.re.numerator, c.re.denominator) == (-3, 2)
    assert (c.im.numerator, c.im.denominator) == (1, 2)


def test_rejects_floats():
    with pytest.raises(TypeError):
        Coefficient.of(0.5)
    with pytest.raises(TypeError):
        Coefficient.of(1 + 2j)


def test_complex_product():
    assert Coefficient(1, 2) * Coefficient(3, -1) == Coefficient(5, 5)
    assert Coefficient(0, 1) * Coefficient(0, 1) == -1


def test_division():
    assert Coefficient(5, 5) / Coefficient(3, -1) == Coefficient(1, 2)
    with pytest.raises(ZeroDivisionError):
        Coefficient(1) / 0


@pytest.mark.parametrize(
    "a, b, overlap",
    [
        (Coefficient(1), Coefficient(-1), Coefficient(1)),
        (Coefficient(-10), Coefficient(7), Coefficient(-7)),
        (Coefficient(2), Coefficient(3), Coefficient(0)),
        (Coefficient(2, -3), Coefficient(-5, -1), Coefficient(2, 0)),
        (Coefficient(0, 4), Coefficient(3, -1), Coefficient(0, 1)),
    ],
)
def test_overlap(a, b, overlap):
    assert a.overlap(b) == overlap
    assert a.opposes(b) == bool(overlap)


@given(coefficients(complex_=True), coefficients(complex_=True))
def test_overlap_bounded_by_both(a, b):
    d = a.overlap(b)
    for dc, ac, bc in zip(d.components(), a.components(), b.components()):
        assert abs(dc) <= min(abs(ac), abs(bc))
        assert dc * ac >= 0

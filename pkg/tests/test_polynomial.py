from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from calpanic import CalpanicNumber, make_term
from calpanic.errors import DegenerateRHS, Unsupported
from calpanic.polynomial import (
    FamilyEquation,
    family_sides,
    parse_equation,
    solve_family,
    verify_solution,
)
from conftest import rationals


def test_solve_examples():
    assert solve_family(FamilyEquation(1, 5)) == make_term(5, 1)
    assert solve_family(FamilyEquation(2, 3)) == make_term(3, 1)
    with pytest.raises(DegenerateRHS):
        FamilyEquation(1, 0)


def test_verify_examples():
    eq = FamilyEquation(1, 5)
    lhs, rhs = family_sides(eq, make_term(5, 1))
    assert lhs == rhs == CalpanicNumber({0: 5})
    assert verify_solution(eq, make_term(5, 1))
    assert not verify_solution(eq, make_term(4, 1))

    # 8ka^3 - 8ka^3 = 8ka^2 and 2 * (2ka)^2 = 8ka^2
    eq = FamilyEquation(3, 2)
    lhs, rhs = family_sides(eq, make_term(2, 1))
    assert lhs == rhs == CalpanicNumber({2: 8})


@given(st.integers(1, 5), rationals(), rationals())
def test_only_k_ka_among_monomials(n, k, c):
    eq = FamilyEquation(n, k)
    assert verify_solution(eq, solve_family(eq))
    assume(c != k)
    assert not verify_solution(eq, make_term(c, 1))


@pytest.mark.parametrize(
    "text, n, k",
    [
        ("x - x = 5", 1, 5),
        ("x^1 - x^1 = 5*x^0", 1, 5),
        ("x^2 - x^2 = 3*x", 2, 3),
        ("x^3 - x^3 = 2*x^2", 3, 2),
        ("x^4-x^4 = -x^3", 4, -1),
        ("x - x = 7/3", 1, Fraction(7, 3)),
        ("x^2 - x^2 = -2*x^1", 2, -2),
    ],
)
def test_parse_equation(text, n, k):
    assert parse_equation(text) == FamilyEquation(n, k)


@pytest.mark.parametrize(
    "text",
    [
        "x^2 - x^2 = 2*ka + 1",  # the open two-term right-hand side
        "x^2 - x^2 = 3",
        "x^2 - x = 3*x",
        "x + x = 5",
        "x^3 - x^3 = 2*x",
        "x - x",
    ],
)
def test_parse_equation_unsupported(text):
    with pytest.raises(Unsupported):
        parse_equation(text)


def test_parse_equation_degenerate():
    with pytest.raises(DegenerateRHS):
        parse_equation("x - x = 0")

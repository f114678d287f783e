"""The equation family ``x^n - x^n = k * x^(n-1)``.

Since ``ka - ka = 1``, the monomial ``x = k*ka`` satisfies every member:
``(k ka)^n - (k ka)^n = k^n ka^(n-1) = k * (k ka)^(n-1)``.  Candidates are
checked by substitution only; nothing is ever moved across the ``=`` sign,
because ``A + B = C + D`` does not give ``A + B - D = C`` here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import number as core
from .errors import DegenerateRHS, Unsupported
from .expr import BinaryOp, Negate, RationalLiteral, RealCollapse, Unknown, evaluate, parse
from .number import CalpanicNumber


@dataclass(frozen=True)
class FamilyEquation:
    n: int
    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k", Fraction(self.k))
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.k == 0:
            raise DegenerateRHS("k = 0 would need a scalar-zero coefficient")

    def __str__(self) -> str:
        lhs = "x - x" if self.n == 1 else f"x^{self.n} - x^{self.n}"
        if self.n == 1:
            rhs = str(self.k)
        elif self.n == 2:
            rhs = f"{self.k}*x"
        else:
            rhs = f"{self.k}*x^{self.n - 1}"
        return f"{lhs} = {rhs}"


def solve_family(eq: FamilyEquation) -> CalpanicNumber:
    if eq.k == 0:
        raise DegenerateRHS("k must be nonzero")
    return core.make_term(eq.k, 1)


def family_sides(eq: FamilyEquation, candidate: CalpanicNumber) -> tuple[CalpanicNumber, CalpanicNumber]:
    xn = core.pow_int(candidate, eq.n)
    lhs = core.subtract(xn, xn)
    rhs = core.multiply(core.make_real(eq.k), core.pow_int(candidate, eq.n - 1))
    return lhs, rhs


def verify_solution(eq: FamilyEquation, candidate: CalpanicNumber) -> bool:
    lhs, rhs = family_sides(eq, candidate)
    return core.equals_canonical(lhs, rhs)


# ---------------------------------------------------------------- text form


def _unknown_power(e) -> int | None:
    """``x`` -> 1, ``x^m`` -> m, anything else -> None."""
    if isinstance(e, Unknown):
        return 1
    if (
        isinstance(e, BinaryOp)
        and e.op == "^"
        and isinstance(e.left, Unknown)
        and isinstance(e.right, RationalLiteral)
        and e.right.integer
    ):
        return int(e.right.value)
    return None


def _mentions_unknown(e) -> bool:
    if isinstance(e, Unknown):
        return True
    if isinstance(e, (Negate, RealCollapse)):
        return _mentions_unknown(e.child)
    if isinstance(e, BinaryOp):
        return _mentions_unknown(e.left) or _mentions_unknown(e.right)
    return False


def _constant(e) -> Fraction:
    value = evaluate(e)
    if value.is_monomial and value.terms[0][0] <= -1:
        raise DegenerateRHS("right-hand side coefficient evaluates to a zero")
    if not (value.is_monomial and value.terms[0][0] == 0 and value.terms[0][1].is_real):
        raise Unsupported("right-hand side coefficient must be a nonzero real")
    return value.terms[0][1].re


def _rhs_parts(e) -> tuple[Fraction, int] | None:
    """Split ``k * x^m`` (or ``x^m``, ``-x^m``, plain ``k``) into ``(k, m)``."""
    if not _mentions_unknown(e):
        return _constant(e), 0
    m = _unknown_power(e)
    if m is not None:
        return Fraction(1), m
    if isinstance(e, Negate):
        inner = _rhs_parts(e.child)
        return None if inner is None else (-inner[0], inner[1])
    if isinstance(e, BinaryOp) and e.op == "*" and not _mentions_unknown(e.left):
        m = _unknown_power(e.right)
        if m is not None:
            return _constant(e.left), m
    return None


def parse_equation(text: str) -> FamilyEquation:
    """Recognise ``x^n - x^n = k*x^(n-1)`` text.

    Anything else with the unknown, such as ``x^2 - x^2 = k1*ka + k0``, raises
    :class:`Unsupported`: no solution procedure is known for it.
    """
    if text.count("=") != 1:
        raise Unsupported("expected exactly one '='")
    left_text, right_text = text.split("=")
    lhs = parse(left_text, allow_unknown=True)
    rhs = parse(right_text, allow_unknown=True)
    if not (isinstance(lhs, BinaryOp) and lhs.op == "-"):
        raise Unsupported("left-hand side must have the form x^n - x^n")
    n1, n2 = _unknown_power(lhs.left), _unknown_power(lhs.right)
    if n1 is None or n1 != n2 or n1 < 1:
        raise Unsupported("left-hand side must have the form x^n - x^n")
    parts = _rhs_parts(rhs) if n1 == 1 or _mentions_unknown(rhs) else None
    if parts is None or parts[1] != n1 - 1:
        raise Unsupported(
            f"right-hand side must be k*x^{n1 - 1}; other right-hand sides have no known solution method"
        )
    return FamilyEquation(n1, parts[0])

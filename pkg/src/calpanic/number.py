"""Calpanic numbers: finite sums ``c * ka^n`` over integer orders ``n``.

Order ``n >= 1`` is an n-th order singularity, order 0 a plain scalar and
order ``-m`` the m-th order zero ``0^m`` (since ``0 = 1/ka``).  Zeros carry a
sign and a grade, so ``+0``, ``-0`` and ``0^2`` are three different values.

Addition is a left fold.  The right operand's terms are merged into the left
one from the highest order down.  When two coefficients at the same order
oppose in sign, the overlap does not disappear but is released one order
lower, signed like the left operand::

    1 - 1     -> +0          -1 + 1    -> -0
    ka - ka   -> 1           10ka - 7ka -> 3ka + 7
    0 - 0     -> 0^2

This makes addition neither commutative nor associative, so every fold order
used below is fixed and part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .coefficient import Coefficient
from .errors import (
    NegativeExponent,
    NoSuchOrder,
    NonMonomialDivisor,
    SingularValue,
    UnsupportedBase,
    UnsupportedExponent,
    UnsupportedOperand,
    ZeroCoefficient,
)


class CalpanicNumber:
    """Immutable canonical value.

    Terms are stored as ``(order, coefficient)`` pairs in descending order;
    orders are distinct, coefficients nonzero and there is at least one term.
    ``==`` is canonical identity (see :func:`equals_canonical`).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        seen: dict[int, Coefficient] = {}
        for order, coeff in items:
            if not isinstance(order, int) or isinstance(order, bool):
                raise TypeError(f"order must be an int, got {order!r}")
            if order in seen:
                raise ValueError(f"duplicate order {order}")
            c = Coefficient.of(coeff)
            if not c:
                raise ZeroCoefficient(f"zero coefficient at order {order}")
            seen[order] = c
        if not seen:
            raise ValueError("a Calpanic number has at least one term")
        object.__setattr__(self, "_terms", tuple(sorted(seen.items(), reverse=True)))

    def __setattr__(self, name, value):
        raise AttributeError("CalpanicNumber is immutable")

    @classmethod
    def _trusted(cls, terms: dict[int, Coefficient]) -> "CalpanicNumber":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_terms", tuple(sorted(terms.items(), reverse=True)))
        return obj

    @property
    def terms(self) -> tuple[tuple[int, Coefficient], ...]:
        return self._terms

    def as_dict(self) -> dict[int, Coefficient]:
        return dict(self._terms)

    def coeff(self, order: int) -> Coefficient:
        """Coefficient at ``order``, scalar zero when the order is unoccupied."""
        for n, c in self._terms:
            if n == order:
                return c
        return Coefficient(0)

    def orders(self) -> tuple[int, ...]:
        return tuple(n for n, _ in self._terms)

    def __iter__(self) -> Iterator[tuple[int, Coefficient]]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __eq__(self, other) -> bool:
        if isinstance(other, CalpanicNumber):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}: {c}" for n, c in self._terms)
        return f"CalpanicNumber({{{inner}}})"

    def __str__(self) -> str:
        from .expr import render

        return render(self)

    # operator sugar; plain ints and Fractions are embedded with make_real
    def __neg__(self):
        return negate(self)

    def __add__(self, other):
        return add(self, _coerce(other))

    def __radd__(self, other):
        return add(_coerce(other), self)

    def __sub__(self, other):
        return subtract(self, _coerce(other))

    def __rsub__(self, other):
        return subtract(_coerce(other), self)

    def __mul__(self, other):
        return multiply(self, _coerce(other))

    def __rmul__(self, other):
        return multiply(_coerce(other), self)

    def __truediv__(self, other):
        return divide(self, _coerce(other))

    def __rtruediv__(self, other):
        return divide(_coerce(other), self)

    def __pow__(self, k):
        if isinstance(k, CalpanicNumber):
            return pow_zero_exponent(self, k)
        return pow_int(self, k)


def _coerce(value) -> CalpanicNumber:
    if isinstance(value, CalpanicNumber):
        return value
    return make_real(value)


@dataclass(frozen=True)
class LogValue:
    """A multiple of the formal unit ``Λ = LOG(ka)``."""

    lambda_multiple: int

    def __neg__(self) -> "LogValue":
        return LogValue(-self.lambda_multiple)

    def __str__(self) -> str:
        m = self.lambda_multiple
        if m == 0:
            return "0"
        if m == 1:
            return "Λ"
        if m == -1:
            return "-Λ"
        return f"{m}Λ"


def make_real(r) -> CalpanicNumber:
    """Embed a scalar; the scalar 0 becomes the first-order zero ``+0``."""
    c = Coefficient.of(r)
    if not c:
        return POS_ZERO
    return CalpanicNumber._trusted({0: c})


def make_term(c, n: int) -> CalpanicNumber:
    c = Coefficient.of(c)
    if not c:
        raise ZeroCoefficient("a term cannot carry a scalar-zero coefficient")
    return CalpanicNumber._trusted({n: c})


def negate(x: CalpanicNumber) -> CalpanicNumber:
    return CalpanicNumber._trusted({n: -c for n, c in x.terms})


def _release(acc: Coefficient, incoming: Coefficient) -> Coefficient:
    # sign follows the accumulator: 1 - 1 = +0, -1 + 1 = -0
    return acc.overlap(incoming)


def _fold_term(terms: dict[int, Coefficient], order: int, coeff: Coefficient) -> int:
    """Merge one term into ``terms`` in place; returns the number of merge steps."""
    steps = 0
    while True:
        steps += 1
        existing = terms.get(order)
        if existing is None:
            terms[order] = coeff
            return steps
        released = _release(existing, coeff)
        total = existing + coeff
        if total:
            terms[order] = total
        else:
            del terms[order]
        if not released:
            return steps
        order -= 1
        coeff = released


def add_traced(x: CalpanicNumber, y: CalpanicNumber) -> tuple[CalpanicNumber, int]:
    """:func:`add` plus the total number of single-term merge steps it took."""
    terms = x.as_dict()
    steps = 0
    for order, coeff in y.terms:
        steps += _fold_term(terms, order, coeff)
    return CalpanicNumber._trusted(terms), steps


def add(x: CalpanicNumber, y: CalpanicNumber) -> CalpanicNumber:
    """Fold ``y`` into ``x`` term by term, highest order first."""
    return add_traced(x, y)[0]


def subtract(x: CalpanicNumber, y: CalpanicNumber) -> CalpanicNumber:
    return add(x, negate(y))


def pair_products(x: CalpanicNumber, y: CalpanicNumber) -> Iterator[tuple[int, Coefficient, int, Coefficient]]:
    """Yield ``(n_x, c_x, n_y, c_y)`` in the order :func:`multiply` accumulates them."""
    for nx, cx in x.terms:
        for ny, cy in y.terms:
            yield nx, cx, ny, cy


def accumulate(monomials: Iterable[CalpanicNumber]) -> CalpanicNumber | None:
    """Left fold of ``add`` over ``monomials``; None for an empty input."""
    acc = None
    for m in monomials:
        acc = m if acc is None else add(acc, m)
    return acc


def multiply(x: CalpanicNumber, y: CalpanicNumber) -> CalpanicNumber:
    """Distribute term by term; ``ka * 0 = 1`` falls out of exponent addition."""
    return accumulate(
        CalpanicNumber._trusted({nx + ny: cx * cy}) for nx, cx, ny, cy in pair_products(x, y)
    )


def divide(x: CalpanicNumber, y: CalpanicNumber) -> CalpanicNumber:
    if not y.is_monomial:
        raise NonMonomialDivisor("division is only defined for single-term divisors")
    (ny, cy), = y.terms
    return CalpanicNumber._trusted({nx - ny: cx / cy for nx, cx in x.terms})


def pow_int(x: CalpanicNumber, k: int) -> CalpanicNumber:
    if k < 0:
        raise NegativeExponent("negative powers are not supported; divide by a monomial instead")
    if k == 0:
        return ONE
    acc = x
    for _ in range(k - 1):
        acc = multiply(acc, x)
    return acc


def _is_unit_monomial(x: CalpanicNumber) -> bool:
    return x.is_monomial and x.terms[0][1] == 1


def pow_zero_exponent(base: CalpanicNumber, zexp: CalpanicNumber) -> CalpanicNumber:
    """``ka^n`` raised to a signed or graded zero is 1.

    ``ka^(±0) = e^(±0 * LOG ka)`` reduces to ``ka * 0 = 1``; the same reduction
    goes through for any unit monomial base.
    """
    if not _is_unit_monomial(base):
        raise UnsupportedBase("zero exponents are only defined for unit monomials ka^n")
    if not (zexp.is_monomial and zexp.terms[0][0] <= -1):
        raise UnsupportedExponent("exponent must be a single zero term")
    return ONE


def real_collapse(x: CalpanicNumber) -> Coefficient:
    """Read off the order-0 coefficient, discarding every zero term."""
    if x.terms[0][0] >= 1:
        raise SingularValue(f"cannot collapse a value with a ka^{x.terms[0][0]} term")
    return x.coeff(0)


def log_k(x: CalpanicNumber) -> LogValue:
    if not _is_unit_monomial(x):
        raise UnsupportedOperand("LOG is only defined on unit monomials ka^n")
    return LogValue(x.terms[0][0])


def equals_canonical(x: CalpanicNumber, y: CalpanicNumber) -> bool:
    return x.terms == y.terms


def observable_part(x: CalpanicNumber) -> tuple[tuple[int, Coefficient], ...]:
    return tuple((n, c) for n, c in x.terms if n >= 0)


def observable_equals(x: CalpanicNumber, y: CalpanicNumber) -> bool:
    """Compare only the terms of order >= 0."""
    return observable_part(x) == observable_part(y)


def elimination_partner(x: CalpanicNumber, n: int) -> Coefficient:
    """Coefficient an addend needs at order ``n`` to clear that order from ``x``."""
    c = x.coeff(n)
    if not c:
        raise NoSuchOrder(f"no term of order {n}")
    return -c


def order_span(x: CalpanicNumber) -> tuple[int, int]:
    return (x.terms[-1][0], x.terms[0][0])


def is_singularity_free(x: CalpanicNumber) -> bool:
    return order_span(x)[1] <= 0


def first_difference(x: CalpanicNumber, y: CalpanicNumber) -> int | None:
    """Highest order at which ``x`` and ``y`` differ, or None if identical."""
    for n in sorted(set(x.orders()) | set(y.orders()), reverse=True):
        if x.coeff(n) != y.coeff(n):
            return n
    return None


ONE = CalpanicNumber._trusted({0: Coefficient(1)})
KA = CalpanicNumber._trusted({1: Coefficient(1)})
POS_ZERO = CalpanicNumber._trusted({-1: Coefficient(1)})
NEG_ZERO = CalpanicNumber._trusted({-1: Coefficient(-1)})
I_UNIT = CalpanicNumber._trusted({0: Coefficient(0, 1)})


def zero(m: int = 1, sign: int = 1) -> CalpanicNumber:
    """The m-th order zero ``±0^m``."""
    return make_term(Fraction(sign), -m)

"""Seeded generators of random exact values for the property suites and scripts."""

from __future__ import annotations

import random
from fractions import Fraction

from .coefficient import Coefficient
from .number import CalpanicNumber


def rational(rng: random.Random, max_num: int = 9, max_den: int = 4, nonzero: bool = True) -> Fraction:
    lo = 1 if nonzero else 0
    q = Fraction(rng.randint(lo, max_num), rng.randint(1, max_den))
    return q if rng.random() < 0.5 else -q


def coefficient(rng: random.Random, complex_rate: float = 0.0) -> Coefficient:
    if rng.random() < complex_rate:
        while True:
            c = Coefficient(rational(rng, nonzero=False), rational(rng, nonzero=False))
            if c:
                return c
    return Coefficient(rational(rng))


def number(
    rng: random.Random,
    min_order: int = -4,
    max_order: int = 3,
    max_terms: int = 5,
    complex_rate: float = 0.0,
) -> CalpanicNumber:
    """A random canonical value with 1..max_terms terms in [min_order, max_order]."""
    span = list(range(min_order, max_order + 1))
    k = rng.randint(1, min(max_terms, len(span)))
    orders = rng.sample(span, k)
    return CalpanicNumber({n: coefficient(rng, complex_rate) for n in orders})

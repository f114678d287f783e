"""Exact arithmetic with a reciprocal of zero, ``ka = 1/0``, and signed, graded zeros."""

from .coefficient import Coefficient
from .errors import (
    CalpanicError,
    CalpanicSyntaxError,
    DegenerateRHS,
    NegativeExponent,
    NonMonomialDivisor,
    NoSuchOrder,
    ShapeMismatch,
    SingularValue,
    Unsupported,
    UnsupportedBase,
    UnsupportedExponent,
    UnsupportedOperand,
    ZeroCoefficient,
)
from .expr import equivalent, evaluate, evaluate_text, from_json, parse, render, to_json
from .number import (
    KA,
    NEG_ZERO,
    ONE,
    POS_ZERO,
    CalpanicNumber,
    LogValue,
    add,
    divide,
    elimination_partner,
    equals_canonical,
    is_singularity_free,
    log_k,
    make_real,
    make_term,
    multiply,
    negate,
    observable_equals,
    order_span,
    pow_int,
    pow_zero_exponent,
    real_collapse,
    subtract,
)

__all__ = [name for name in dir() if not name.startswith("_")]

"""Expression syntax for Calpanic values.

Grammar::

    expr    := term { ("+"|"-") term }          left-assoc
    term    := factor { ("*"|"/") factor }      left-assoc
    factor  := [ "-" | "+" ] power
    power   := atom [ "^" ( integer | atom ) ]
    atom    := number | "ka" | "i" | "(" expr ")" | "real(" expr ")"
    number  := integer | decimal

``ka`` (or the glyph ``क``) is 1/0.  The literal ``0`` is the first-order
zero ``+0``; ``-0`` is its negation.  Trees keep the source grouping exactly,
because regrouping a sum changes its value.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import number as core
from .coefficient import Coefficient
from .errors import CalpanicError, CalpanicSyntaxError, UnsupportedExponent
from .number import CalpanicNumber

# ---------------------------------------------------------------- tree


@dataclass(frozen=True)
class RationalLiteral:
    value: Fraction
    pos: int = 0
    integer: bool = True  # written without a decimal point


@dataclass(frozen=True)
class ImaginaryLiteral:
    pos: int = 0


@dataclass(frozen=True)
class KaSymbol:
    pos: int = 0


@dataclass(frozen=True)
class Unknown:
    """The single unknown ``x``; only produced when the parser allows it."""

    pos: int = 0


@dataclass(frozen=True)
class Negate:
    child: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class BinaryOp:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"
    pos: int = 0


@dataclass(frozen=True)
class RealCollapse:
    child: "Expr"
    pos: int = 0


Expr = Union[RationalLiteral, ImaginaryLiteral, KaSymbol, Unknown, Negate, BinaryOp, RealCollapse]


def shape(e: Expr):
    """Position-free nested tuple for structural comparison."""
    if isinstance(e, RationalLiteral):
        return ("num", e.value)
    if isinstance(e, ImaginaryLiteral):
        return ("i",)
    if isinstance(e, KaSymbol):
        return ("ka",)
    if isinstance(e, Unknown):
        return ("x",)
    if isinstance(e, Negate):
        return ("neg", shape(e.child))
    if isinstance(e, RealCollapse):
        return ("real", shape(e.child))
    return (e.op, shape(e.left), shape(e.right))


# ---------------------------------------------------------------- lexer

_ALIASES = {"×": "*", "÷": "/", "−": "-", "क": "ka"}

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?|\.\d+)
  | (?P<name>[A-Za-z_]+|क)
  | (?P<op>[-+*/^()×÷−])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str  # num, ka, i, x, real, op, eof
    text: str
    pos: int


def tokenize(text: str, allow_unknown: bool = False) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise CalpanicSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        s = m.group()
        if kind == "num":
            tokens.append(Token("num", s, pos))
        elif kind == "name":
            s = _ALIASES.get(s, s)
            if s == "ka":
                tokens.append(Token("ka", s, pos))
            elif s == "i":
                tokens.append(Token("i", s, pos))
            elif s == "real":
                tokens.append(Token("real", s, pos))
            elif s == "x" and allow_unknown:
                tokens.append(Token("x", s, pos))
            else:
                raise CalpanicSyntaxError(f"unknown name {s!r}", text, pos)
        elif kind == "op":
            tokens.append(Token("op", _ALIASES.get(s, s), pos))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


# ---------------------------------------------------------------- parser


class _Parser:
    def __init__(self, text: str, allow_unknown: bool):
        self.text = text
        self.tokens = tokenize(text, allow_unknown)
        self.i = 0
        self.allow_unknown = allow_unknown

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def _is_op(self, *ops: str) -> bool:
        return self.tok.kind == "op" and self.tok.text in ops

    def _fail(self, expected) -> None:
        t = self.tok
        what = "end of input" if t.kind == "eof" else repr(t.text)
        raise CalpanicSyntaxError(f"unexpected {what}", self.text, t.pos, expected)

    def _expect_op(self, op: str) -> Token:
        if not self._is_op(op):
            self._fail({repr(op)})
        t = self.tok
        self.i += 1
        return t

    def parse(self) -> Expr:
        e = self.expr()
        if self.tok.kind != "eof":
            self._fail({"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"})
        return e

    def expr(self) -> Expr:
        left = self.term()
        while self._is_op("+", "-"):
            t = self.tok
            self.i += 1
            left = BinaryOp(t.text, left, self.term(), t.pos)
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self._is_op("*", "/"):
            t = self.tok
            self.i += 1
            left = BinaryOp(t.text, left, self.factor(), t.pos)
        return left

    def factor(self) -> Expr:
        if self._is_op("-"):
            t = self.tok
            self.i += 1
            return Negate(self.power(), t.pos)
        if self._is_op("+"):
            self.i += 1
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self._is_op("^"):
            t = self.tok
            self.i += 1
            if self.tok.kind == "num":
                if "." in self.tok.text:
                    self._fail({"integer", "'('"})
                exp = RationalLiteral(Fraction(int(self.tok.text)), self.tok.pos)
                self.i += 1
            else:
                exp = self.atom()
            return BinaryOp("^", base, exp, t.pos)
        return base

    def atom(self) -> Expr:
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return RationalLiteral(Fraction(t.text), t.pos, "." not in t.text)
        if t.kind == "ka":
            self.i += 1
            return KaSymbol(t.pos)
        if t.kind == "i":
            self.i += 1
            return ImaginaryLiteral(t.pos)
        if t.kind == "x":
            self.i += 1
            return Unknown(t.pos)
        if t.kind == "real":
            self.i += 1
            self._expect_op("(")
            inner = self.expr()
            self._expect_op(")")
            return RealCollapse(inner, t.pos)
        if self._is_op("("):
            self.i += 1
            inner = self.expr()
            self._expect_op(")")
            return inner
        expected = {"number", "'ka'", "'i'", "'('", "'real('"}
        if self.allow_unknown:
            expected.add("'x'")
        self._fail(expected)


def parse(text: str, allow_unknown: bool = False) -> Expr:
    """Parse ``text``; raises :class:`CalpanicSyntaxError` on malformed input."""
    return _Parser(text, allow_unknown).parse()


# ---------------------------------------------------------------- evaluation


def _annotate(err: CalpanicError, pos: int) -> CalpanicError:
    if err.position is None:
        err.position = pos
    return err


def evaluate(e: Expr, x: CalpanicNumber | None = None) -> CalpanicNumber:
    """Evaluate left before right, delegating each node to the core algebra.

    ``x`` is substituted for :class:`Unknown` nodes.
    """
    try:
        return _eval(e, x)
    except CalpanicError as err:
        raise _annotate(err, e.pos)


def _eval(e: Expr, x: CalpanicNumber | None) -> CalpanicNumber:
    if isinstance(e, RationalLiteral):
        return core.make_real(e.value)
    if isinstance(e, KaSymbol):
        return core.KA
    if isinstance(e, ImaginaryLiteral):
        return core.I_UNIT
    if isinstance(e, Unknown):
        if x is None:
            raise CalpanicError("no value bound for the unknown x")
        return x
    if isinstance(e, Negate):
        return core.negate(evaluate(e.child, x))
    if isinstance(e, RealCollapse):
        return core.make_real(core.real_collapse(evaluate(e.child, x)))
    left = evaluate(e.left, x)
    if e.op == "^":
        return _power(left, e.right, x)
    right = evaluate(e.right, x)
    if e.op == "+":
        return core.add(left, right)
    if e.op == "-":
        return core.subtract(left, right)
    if e.op == "*":
        return core.multiply(left, right)
    if e.op == "/":
        return core.divide(left, right)
    raise ValueError(f"unknown operator {e.op!r}")


def _power(base: CalpanicNumber, exp: Expr, x) -> CalpanicNumber:
    # a bare integer literal is a repetition count, anything else must be a zero term
    if isinstance(exp, RationalLiteral) and exp.integer and exp.value.denominator == 1:
        return core.pow_int(base, int(exp.value))
    value = evaluate(exp, x)
    if not (value.is_monomial and value.terms[0][0] <= -1):
        raise _annotate(
            UnsupportedExponent("exponent must be an integer literal or a single zero term"), exp.pos
        )
    return core.pow_zero_exponent(base, value)


def evaluate_text(text: str) -> CalpanicNumber:
    return evaluate(parse(text))


def equivalent(e1: Expr, e2: Expr) -> tuple[bool, str]:
    """Canonical-form identity of two expressions, with a short explanation."""
    v1, v2 = evaluate(e1), evaluate(e2)
    n = core.first_difference(v1, v2)
    if n is None:
        return True, f"both sides are {render(v1)}"
    return False, (
        f"{render(v1)} and {render(v2)} first differ at order {n}: "
        f"{_coeff_text(v1.coeff(n))} vs {_coeff_text(v2.coeff(n))}"
    )


# ---------------------------------------------------------------- rendering


def _coeff_text(c: Coefficient) -> str:
    if c.im == 0:
        return str(c.re)
    return _complex_text(c)


def _complex_text(c: Coefficient) -> str:
    if c.re == 0:
        return _imag_text(c.im)
    sep = " + " if c.im > 0 else " - "
    return f"({c.re}{sep}{_imag_text(abs(c.im))})"


def _imag_text(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def _sign_and_magnitude(c: Coefficient) -> tuple[int, Coefficient]:
    """Pull out an overall sign when the coefficient lies on one axis."""
    if c.im == 0:
        return (1 if c.re > 0 else -1), Coefficient(abs(c.re))
    if c.re == 0:
        return (1 if c.im > 0 else -1), Coefficient(0, abs(c.im))
    return 1, c


def _monomial_text(mag: Coefficient, order: int) -> str:
    """Text for a monomial whose coefficient has no pulled-out sign."""
    if mag.im == 0:
        scalar = str(mag.re)
        unit = mag.re == 1
    else:
        scalar = _complex_text(mag)
        unit = False
    if order == 0:
        return scalar
    if order >= 1:
        sym = "ka" if order == 1 else f"ka^{order}"
        return sym if unit else f"{scalar}*{sym}"
    m = -order
    if m == 1:
        return "0" if unit else f"{scalar}*0"
    return f"{scalar}*0^{m}"


def render(x: CalpanicNumber) -> str:
    """Text form, highest order first, e.g. ``3*ka + 7`` or ``3 + 7*0``.

    ``parse`` and ``evaluate`` turn the output back into ``x`` exactly.
    """
    parts = []
    for idx, (order, c) in enumerate(x.terms):
        sign, mag = _sign_and_magnitude(c)
        body = _monomial_text(mag, order)
        if idx == 0:
            if order == -1 and mag == 1:
                parts.append("+0" if sign > 0 else "-0")
            else:
                parts.append(body if sign > 0 else "-" + body)
        else:
            parts.append((" + " if sign > 0 else " - ") + body)
    return "".join(parts)


def to_json(x: CalpanicNumber) -> str:
    return json.dumps(to_obj(x))


def to_obj(x: CalpanicNumber) -> dict:
    return {"terms": [{"order": n, "re": str(c.re), "im": str(c.im)} for n, c in x.terms]}


def from_json(data: str | dict) -> CalpanicNumber:
    obj = json.loads(data) if isinstance(data, str) else data
    return CalpanicNumber(
        [(int(t["order"]), Coefficient(Fraction(t["re"]), Fraction(t.get("im", "0")))) for t in obj["terms"]]
    )

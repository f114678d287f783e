"""Executable checks of the Calpanic laws, each run on fixed witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import number as core
from .errors import CalpanicError, ZeroCoefficient
from .expr import evaluate_text as ev
from .expr import render


@dataclass(frozen=True)
class LawEntry:
    law_id: str
    anchor: str  # the law as a formula
    passed: bool
    witness: str


@dataclass
class LawReport:
    entries: list[LawEntry] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __getitem__(self, law_id: str) -> LawEntry:
        for e in self.entries:
            if e.law_id == law_id:
                return e
        raise KeyError(law_id)

    def table(self) -> str:
        width = max(len(e.law_id) for e in self.entries)
        lines = []
        for e in self.entries:
            mark = "PASS" if e.passed else "FAIL"
            lines.append(f"{mark}  {e.law_id.ljust(width)}  {e.anchor}")
            lines.append(f"      {' ' * width}  witness: {e.witness}")
        return "\n".join(lines)


def _show(*pairs: tuple[str, core.CalpanicNumber]) -> str:
    return " ; ".join(f"{src} = {render(v)}" for src, v in pairs)


def _ka_times_zero():
    a, b, c, d = ev("ka*0"), ev("0*ka"), ev("1/0"), ev("1/ka")
    ok = a == core.ONE and b == core.ONE and c == core.KA and d == core.POS_ZERO
    return ok, _show(("ka*0", a), ("0*ka", b), ("1/0", c), ("1/ka", d))


def _signed_zero_distinct():
    pos, neg, prod = ev("0"), ev("-0"), ev("ka*-0")
    try:
        core.make_term(0, -1)
        refused = False
    except ZeroCoefficient:
        refused = True
    ok = pos != neg and prod == core.make_real(-1) and refused
    return ok, _show(("0", pos), ("-0", neg), ("ka*-0", prod)) + f" ; 0-coefficient term refused: {refused}"


def _zero_order_preserved():
    first, second = ev("0"), ev("0*0")
    return first != second and second == core.zero(2), _show(("0", first), ("0*0", second))


def _self_difference_to_zero():
    same, general = ev("2-2"), ev("5-2")
    expected_general = core.add(core.make_real(3), core.make_term(2, -1))
    ok = same == core.make_term(2, -1) and general == expected_general
    return ok, _show(("2-2", same), ("(2+3)-2", general))


def _repeated_zero_sum():
    zeros, mixed = ev("0+0+0"), ev("0+2+3")
    ok = zeros == core.make_term(3, -1) and mixed.coeff(-1) == 1 and mixed.coeff(0) == 5
    return ok, _show(("0+0+0", zeros), ("0+2+3", mixed))


def _signed_zero_conventions():
    a, b = ev("1-1"), ev("-1+1")
    return a == core.POS_ZERO and b == core.NEG_ZERO, _show(("1-1", a), ("-1+1", b))


def _noncommutative_addition():
    one, minus = core.make_real(1), core.make_real(-1)
    ab, ba = core.add(one, minus), core.add(minus, one)
    ok = ab == core.POS_ZERO and ba == core.NEG_ZERO and ab != ba
    return ok, _show(("1+(-1)", ab), ("(-1)+1", ba))


def _self_difference_nonzero():
    zz, mm = ev("0-0"), ev("-1-(-1)")
    ok = zz == core.zero(2) and zz != core.POS_ZERO and mm == core.NEG_ZERO
    return ok, _show(("0-0", zz), ("-1-(-1)", mm))


def _no_transposition():
    # A=2, B=3, C=4, D=1: A+B = C+D once collapsed, yet A+B-D is not C
    lhs = ev("2+3-1")
    ok = lhs == core.add(core.make_real(4), core.POS_ZERO) and lhs != core.make_real(4)
    return ok, _show(("2+3-1", lhs)) + " ; C = 4"


def _ka_minus_ka():
    v = ev("ka-ka")
    return v == core.ONE, _show(("ka-ka", v))


def _minus_ka_plus_ka():
    v = ev("-ka+ka")
    return v == core.make_real(-1), _show(("-ka+ka", v))


def _nonassociative_addition():
    left, right = ev("(ka-ka)+ka"), ev("ka+(-ka+ka)")
    ok = left == core.add(core.KA, core.ONE) and right == core.add(core.KA, core.make_real(-1))
    return ok and left != right, _show(("(ka-ka)+ka", left), ("ka+(-ka+ka)", right))


def _log_of_zero():
    lz, lk = core.log_k(core.POS_ZERO), core.log_k(core.KA)
    return lz == -lk and lz.lambda_multiple == -1, f"LOG(0) = {lz} ; LOG(ka) = {lk}"


def _ka_to_signed_zero():
    p = core.pow_zero_exponent(core.KA, core.POS_ZERO)
    n = core.pow_zero_exponent(core.KA, core.NEG_ZERO)
    return p == core.ONE and n == core.ONE, _show(("ka^(+0)", p), ("ka^(-0)", n))


LAWS: tuple[tuple[str, str, Callable[[], tuple[bool, str]]], ...] = (
    ("ka-times-zero", "ka = 1/0 ; 0 = 1/ka ; ka*0 = 0*ka = 1", _ka_times_zero),
    ("signed-zero-distinct", "+0 != -0 ; ka*(-0) = -1 ; no scalar-zero terms", _signed_zero_distinct),
    ("zero-order-preserved", "0 != 0*0 (zero order is preserved)", _zero_order_preserved),
    ("self-difference-to-zero", "A - A = A*0 ; (A+C) - A = C + A*0", _self_difference_to_zero),
    ("repeated-zero-sum", "0+...+0 (n times) = n*0 ; 0 + x2 + ... keeps the 0", _repeated_zero_sum),
    ("signed-zero-conventions", "1 - 1 = +0 ; -1 + 1 = -0", _signed_zero_conventions),
    ("noncommutative-addition", "A + B != B + A for A=1, B=-1", _noncommutative_addition),
    ("self-difference-nonzero", "A - A need not be 0: 0 - 0 = 0*0", _self_difference_nonzero),
    ("no-transposition", "A+B = C+D does not give A+B-D = C", _no_transposition),
    ("ka-minus-ka", "ka - ka = 1", _ka_minus_ka),
    ("minus-ka-plus-ka", "-ka + ka = -1", _minus_ka_plus_ka),
    ("nonassociative-addition", "(A+B)+C != A+(B+C) for A=ka, B=-ka, C=ka", _nonassociative_addition),
    ("log-of-zero", "LOG(0) = -LOG(ka)", _log_of_zero),
    ("ka-to-signed-zero", "ka^(+0) = ka^(-0) = 1", _ka_to_signed_zero),
)


def run_laws() -> LawReport:
    report = LawReport()
    for law_id, anchor, check in LAWS:
        try:
            passed, witness = check()
        except CalpanicError as err:
            passed, witness = False, f"error: {type(err).__name__}: {err}"
        report.entries.append(LawEntry(law_id, anchor, bool(passed), witness))
    return report

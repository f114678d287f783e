"""Matrices with Calpanic entries.

Products use a fixed dot-product fold (k ascending, left to right), since the
order in which entries are summed changes the zero bookkeeping.

Two multiplication modes exist.  ``STRICT`` keeps every pair product,
including real x zero terms such as ``a12 * 0``.  ``PAPER`` drops those
real x zero pair products before accumulating, which reproduces the classic
printed form of ``A I``::

    [[(a11 + b11 ka) + b12,  b11 + (a12 + b12 ka)],
     [(a21 + b21 ka) + b22,  b21 + (a22 + b22 ka)]]
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import number as core
from .errors import ShapeMismatch
from .expr import evaluate, parse, render
from .number import CalpanicNumber


class MulMode(enum.Enum):
    STRICT = "strict_conservation"
    PAPER = "paper_display"

    @classmethod
    def from_flag(cls, flag: str) -> "MulMode":
        return {"strict": cls.STRICT, "paper": cls.PAPER}.get(flag) or cls(flag)


@dataclass(frozen=True)
class CalpanicMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[CalpanicNumber, ...], ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ShapeMismatch("matrices need at least one row and column")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ShapeMismatch("entry grid does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[CalpanicNumber]]) -> "CalpanicMatrix":
        grid = tuple(tuple(r) for r in rows)
        return cls(len(grid), len(grid[0]) if grid else 0, grid)

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "CalpanicMatrix":
        return cls.from_rows([[evaluate(parse(s)) for s in r] for r in rows])

    @classmethod
    def from_json(cls, text: str) -> "CalpanicMatrix":
        return cls.from_strings(json.loads(text))

    def __getitem__(self, ij: tuple[int, int]) -> CalpanicNumber:
        i, j = ij
        return self.entries[i][j]

    def to_strings(self) -> list[list[str]]:
        return [[render(v) for v in r] for r in self.entries]

    def __str__(self) -> str:
        cells = self.to_strings()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[ " + "  ".join(c.ljust(width) for c in r) + " ]" for r in cells)


def identity(n: int) -> CalpanicMatrix:
    """Ones on the diagonal, ``+0`` elsewhere."""
    if n < 1:
        raise ShapeMismatch("identity needs n >= 1")
    return CalpanicMatrix.from_rows(
        [[core.ONE if i == j else core.POS_ZERO for j in range(n)] for i in range(n)]
    )


def mat_add(a: CalpanicMatrix, b: CalpanicMatrix) -> CalpanicMatrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ShapeMismatch(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return CalpanicMatrix.from_rows(
        [[core.add(a[i, j], b[i, j]) for j in range(a.cols)] for i in range(a.rows)]
    )


def _is_real_times_zero(nx: int, ny: int) -> bool:
    return (nx == 0 and ny <= -1) or (ny == 0 and nx <= -1)


def _entry_product(x: CalpanicNumber, y: CalpanicNumber, mode: MulMode) -> CalpanicNumber | None:
    if mode is MulMode.STRICT:
        return core.multiply(x, y)
    return core.accumulate(
        core.make_term(cx * cy, nx + ny)
        for nx, cx, ny, cy in core.pair_products(x, y)
        if not _is_real_times_zero(nx, ny)
    )


def mat_mul(a: CalpanicMatrix, b: CalpanicMatrix, mode: MulMode = MulMode.STRICT) -> CalpanicMatrix:
    """Entry (i, j) is the left fold over ascending k of ``a[i,k] * b[k,j]``.

    In ``PAPER`` mode a product can vanish entirely; it is then skipped, and an
    entry with no surviving contribution is ``+0``.
    """
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    out = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            products = (_entry_product(a[i, k], b[k, j], mode) for k in range(a.cols))
            acc = core.accumulate(p for p in products if p is not None)
            row.append(core.POS_ZERO if acc is None else acc)
        out.append(row)
    return CalpanicMatrix.from_rows(out)


def _require_2x2(a: CalpanicMatrix) -> None:
    if (a.rows, a.cols) != (2, 2):
        raise ShapeMismatch("only 2x2 determinants are defined")


def det2(a: CalpanicMatrix) -> CalpanicNumber:
    _require_2x2(a)
    return core.subtract(core.multiply(a[0, 0], a[1, 1]), core.multiply(a[0, 1], a[1, 0]))


@dataclass(frozen=True)
class DetProductReport:
    equal: bool  # canonical identity
    observably_equal: bool
    lhs: CalpanicNumber  # det(AB)
    rhs: CalpanicNumber  # det(A) * det(B)


def det_product_check(a: CalpanicMatrix, b: CalpanicMatrix, mode: MulMode = MulMode.STRICT) -> DetProductReport:
    _require_2x2(a)
    _require_2x2(b)
    lhs = det2(mat_mul(a, b, mode))
    rhs = core.multiply(det2(a), det2(b))
    return DetProductReport(
        core.equals_canonical(lhs, rhs), core.observable_equals(lhs, rhs), lhs, rhs
    )


@dataclass(frozen=True)
class CommutationReport:
    condition_holds: bool  # b11 == b22 and b21 == b12
    observable_equal: bool
    canonical_equal: bool
    discrepancies: tuple[tuple[int, int], ...]  # entries where AI and IA differ canonically
    ai: CalpanicMatrix
    ia: CalpanicMatrix

    @property
    def passed(self) -> bool:
        return self.observable_equal or not self.condition_holds


def identity_commutation_check(a: CalpanicMatrix, mode: MulMode = MulMode.STRICT) -> CommutationReport:
    _require_2x2(a)
    ident = identity(2)
    ai = mat_mul(a, ident, mode)
    ia = mat_mul(ident, a, mode)
    b = [[a[i, j].coeff(1) for j in range(2)] for i in range(2)]
    cells = [(i, j) for i in range(2) for j in range(2)]
    return CommutationReport(
        condition_holds=b[0][0] == b[1][1] and b[1][0] == b[0][1],
        observable_equal=all(core.observable_equals(ai[c], ia[c]) for c in cells),
        canonical_equal=all(core.equals_canonical(ai[c], ia[c]) for c in cells),
        discrepancies=tuple(c for c in cells if not core.equals_canonical(ai[c], ia[c])),
        ai=ai,
        ia=ia,
    )


def mixed_entry(a, b) -> CalpanicNumber:
    """``a + b*ka`` built term by term; both zero gives ``+0``."""
    if b == 0:
        return core.make_real(a)
    if a == 0:
        return core.make_term(b, 1)
    return core.add(core.make_term(b, 1), core.make_real(a))


def search_det_witness(
    grid: Iterable = (-1, 0, 1), b: CalpanicMatrix | None = None, mode: MulMode = MulMode.STRICT
) -> tuple[CalpanicMatrix, DetProductReport] | None:
    """First 2x2 ``A = [a_mn + b_mn ka]`` over ``grid`` with some b_mn != 0 and
    ``det(AB) != det(A) det(B)``; ``B`` defaults to the identity."""
    b = identity(2) if b is None else b
    grid = tuple(grid)
    for reals in itertools.product(grid, repeat=4):
        for sings in itertools.product(grid, repeat=4):
            if not any(sings):
                continue
            entries = [mixed_entry(r, s) for r, s in zip(reals, sings)]
            a = CalpanicMatrix.from_rows([entries[:2], entries[2:]])
            report = det_product_check(a, b, mode)
            if not report.equal:
                return a, report
    return None


# printed forms of A I and I A for A = [a_mn + b_mn ka]
AI_DISPLAY = (
    ("(a11 + b11*ka) + b12", "b11 + (a12 + b12*ka)"),
    ("(a21 + b21*ka) + b22", "b21 + (a22 + b22*ka)"),
)
IA_DISPLAY = (
    ("(a11 + b11*ka) + b21", "b22 + (a12 + b12*ka)"),
    ("(a21 + b21*ka) + b11", "b12 + (a22 + b22*ka)"),
)


def symbolic_matrix(reals, sings) -> CalpanicMatrix:
    """``[[a11 + b11 ka, ...]]`` from 2x2 nested sequences of scalars."""
    return CalpanicMatrix.from_rows(
        [[mixed_entry(reals[i][j], sings[i][j]) for j in range(2)] for i in range(2)]
    )


def instantiate(template: str, reals, sings) -> CalpanicNumber:
    """Evaluate a display template with ``a_mn``/``b_mn`` replaced by values."""
    text = template
    for i in range(2):
        for j in range(2):
            text = text.replace(f"a{i + 1}{j + 1}", f"({reals[i][j]})")
            text = text.replace(f"b{i + 1}{j + 1}", f"({sings[i][j]})")
    return evaluate(parse(text))


def display_matrix(templates, reals, sings) -> CalpanicMatrix:
    return CalpanicMatrix.from_rows([[instantiate(t, reals, sings) for t in row] for row in templates])

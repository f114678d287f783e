"""Exhaustive searches for determinant and multiplication witnesses on small grids."""

import argparse
import itertools
from dataclasses import dataclass

from calpanic import CalpanicNumber, multiply, render
from calpanic.matrix import MulMode, search_det_witness


@dataclass(frozen=True)
class SearchConfig:
    bound: int = 2
    det_grid: tuple[int, ...] = (-1, 0, 1)
    mode: MulMode = MulMode.STRICT


def small_values(bound: int) -> list[CalpanicNumber]:
    out = []
    for c1, c0 in itertools.product(range(-bound, bound + 1), repeat=2):
        terms = {n: c for n, c in ((1, c1), (0, c0)) if c}
        if terms:
            out.append(CalpanicNumber(terms))
    return out


def noncommuting_pairs(bound: int):
    values = small_values(bound)
    for x, y in itertools.product(values, repeat=2):
        if multiply(x, y) != multiply(y, x):
            yield x, y


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=SearchConfig.bound)
    ap.add_argument("--mode", choices=["strict", "paper"], default="strict")
    args = ap.parse_args()
    cfg = SearchConfig(bound=args.bound, mode=MulMode.from_flag(args.mode))

    pairs = list(noncommuting_pairs(cfg.bound))
    total = len(small_values(cfg.bound)) ** 2
    print(f"xy != yx: {len(pairs)} of {total} ordered pairs (|c| <= {cfg.bound}, orders 0 and 1)")
    for x, y in pairs[:5]:
        print(f"  x = {render(x)}, y = {render(y)}: xy = {render(multiply(x, y))}, yx = {render(multiply(y, x))}")

    found = search_det_witness(grid=cfg.det_grid, mode=cfg.mode)
    if found is None:
        print("no determinant witness")
        return
    a, report = found
    print(f"det(AI) != det(A)det(I) ({cfg.mode.value}) for A = {a.to_strings()}")
    print(f"  det(AI)       = {render(report.lhs)}")
    print(f"  det(A)det(I)  = {render(report.rhs)}")


if __name__ == "__main__":
    main()

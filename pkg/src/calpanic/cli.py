"""Command line front end.

Exit codes: 0 success / equivalent / all laws pass, 1 not equivalent or a
law failed, 2 syntax error, 3 evaluation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import TextIO

from .errors import CalpanicError, CalpanicSyntaxError
from .expr import equivalent, evaluate, parse, render, to_obj
from .laws import run_laws
from .matrix import (
    AI_DISPLAY,
    IA_DISPLAY,
    CalpanicMatrix,
    MulMode,
    det2,
    display_matrix,
    identity,
    mat_mul,
    symbolic_matrix,
)
from .polynomial import parse_equation, solve_family, verify_solution

EXIT_OK, EXIT_FALSE, EXIT_SYNTAX, EXIT_EVAL = 0, 1, 2, 3


def _fail(err: CalpanicError, err_stream: TextIO) -> int:
    if isinstance(err, CalpanicSyntaxError):
        print(f"syntax error: {err}", file=err_stream)
        return EXIT_SYNTAX
    where = "" if err.position is None else f" (at offset {err.position})"
    print(f"error: {type(err).__name__}: {err}{where}", file=err_stream)
    return EXIT_EVAL


def cmd_eval(args, out: TextIO, err: TextIO) -> int:
    value = evaluate(parse(args.expression))
    print(render(value), file=out)
    if args.json:
        print(json.dumps(to_obj(value)), file=out)
    return EXIT_OK


def cmd_equiv(args, out: TextIO, err: TextIO) -> int:
    same, why = equivalent(parse(args.left), parse(args.right))
    print(f"{'true' if same else 'false'}: {why}", file=out)
    return EXIT_OK if same else EXIT_FALSE


def cmd_laws(args, out: TextIO, err: TextIO) -> int:
    report = run_laws()
    print(report.table(), file=out)
    return EXIT_OK if report.all_passed else EXIT_FALSE


def cmd_solve(args, out: TextIO, err: TextIO) -> int:
    eq = parse_equation(args.equation)
    x = solve_family(eq)
    assert verify_solution(eq, x)
    print(f"x = {render(x)}", file=out)
    return EXIT_OK


def _load_matrix(source: str) -> CalpanicMatrix:
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            source = fh.read()
    return CalpanicMatrix.from_json(source)


def _print_matrix(name: str, m: CalpanicMatrix, out: TextIO, as_json: bool) -> None:
    if as_json:
        print(json.dumps({name: m.to_strings()}), file=out)
    else:
        print(f"{name} =", file=out)
        print(m, file=out)


def cmd_matrix(args, out: TextIO, err: TextIO) -> int:
    mode = MulMode.from_flag(args.mode)
    if args.action == "mul":
        if len(args.operands) != 2:
            print("matrix mul takes two matrices", file=err)
            return EXIT_SYNTAX
        a, b = (_load_matrix(s) for s in args.operands)
        _print_matrix("AB", mat_mul(a, b, mode), out, args.json)
    elif args.action == "det":
        if len(args.operands) != 1:
            print("matrix det takes one matrix", file=err)
            return EXIT_SYNTAX
        value = det2(_load_matrix(args.operands[0]))
        print(render(value), file=out)
    else:
        if args.operands and args.operands != ["identity"]:
            print("the only demo is 'identity'", file=err)
            return EXIT_SYNTAX
        _identity_demo(mode, out)
    return EXIT_OK


# generic entries: distinct positive values, so no cancellation hides structure
DEMO_REALS = ((2, 5), (11, 17))
DEMO_SINGS = ((3, 7), (13, 19))


def _identity_demo(mode: MulMode, out: TextIO) -> None:
    a = symbolic_matrix(DEMO_REALS, DEMO_SINGS)
    ident = identity(2)
    print(f"mode: {mode.value}", file=out)
    print(f"a_mn = {DEMO_REALS}, b_mn = {DEMO_SINGS}", file=out)
    _print_matrix("A", a, out, False)
    for name, product, templates in (
        ("AI", mat_mul(a, ident, mode), AI_DISPLAY),
        ("IA", mat_mul(ident, a, mode), IA_DISPLAY),
    ):
        expected = display_matrix(templates, DEMO_REALS, DEMO_SINGS)
        _print_matrix(name, product, out, False)
        for i in range(2):
            for j in range(2):
                same = product[i, j] == expected[i, j]
                print(
                    f"  {name}[{i + 1},{j + 1}]  {templates[i][j]:<22} "
                    f"{'matches' if same else 'differs from'} {render(expected[i, j])}",
                    file=out,
                )
        print(f"  {name} == A: {product == a}", file=out)


def repl(inp: TextIO, out: TextIO, prompt: str = "calpanic> ") -> list[str]:
    """Evaluate one expression per line.  ``:history`` lists past input,
    ``:quit`` leaves.  Returns the session history."""
    history: list[str] = []
    interactive = inp.isatty() if hasattr(inp, "isatty") else False
    while True:
        if interactive:
            out.write(prompt)
            out.flush()
        line = inp.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line in (":quit", ":q"):
            break
        if line == ":history":
            for n, h in enumerate(history, 1):
                print(f"{n:4d}  {h}", file=out)
            continue
        history.append(line)
        try:
            print(render(evaluate(parse(line))), file=out)
        except CalpanicError as exc:
            _fail(exc, out)
    return history


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="calpanic", description="Exact arithmetic with ka = 1/0.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate an expression")
    e.add_argument("expression")
    e.add_argument("--json", action="store_true", help="also print the JSON form")

    q = sub.add_parser("equiv", help="compare two expressions by canonical form")
    q.add_argument("left")
    q.add_argument("right")

    sub.add_parser("laws", help="run every law on its fixed witnesses")
    sub.add_parser("repl", help="interactive evaluator")

    s = sub.add_parser("solve", help="solve x^n - x^n = k*x^(n-1)")
    s.add_argument("equation")

    m = sub.add_parser("matrix", help="matrix commands")
    m.add_argument("action", choices=["mul", "det", "demo"])
    m.add_argument("operands", nargs="*", help="JSON arrays of expression strings, or files holding them")
    m.add_argument("--mode", choices=["strict", "paper"], default="strict")
    m.add_argument("--json", action="store_true")
    return p


COMMANDS = {
    "eval": cmd_eval,
    "equiv": cmd_equiv,
    "laws": cmd_laws,
    "solve": cmd_solve,
    "matrix": cmd_matrix,
}


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    if args.command == "repl":
        repl(sys.stdin, out)
        return EXIT_OK
    try:
        return COMMANDS[args.command](args, out, err)
    except CalpanicError as exc:
        return _fail(exc, err)
    except (json.JSONDecodeError, TypeError, IndexError) as exc:
        print(f"bad matrix input: {exc}", file=err)
        return EXIT_SYNTAX


if __name__ == "__main__":
    sys.exit(main())

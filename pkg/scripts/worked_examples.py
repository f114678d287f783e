"""Evaluate a batch of expressions and show the canonical form of each."""

import argparse
from dataclasses import dataclass, field

from calpanic import evaluate, parse, render
from calpanic.errors import CalpanicError

DEFAULTS = (
    "ka*0", "1/0", "1/ka", "1-1", "-1+1", "0-0", "0+0", "0*0",
    "ka-ka", "-ka+ka", "(ka-ka)+ka", "ka+(-ka+ka)", "2+3-1",
    "5/0", "10-7", "10*ka-7*ka", "5*ka^2-5*ka^2", "ka^(+0)", "real(ka*ka - ka*ka)",
)


@dataclass
class ExampleConfig:
    expressions: tuple[str, ...] = field(default=DEFAULTS)


def run(cfg: ExampleConfig) -> list[tuple[str, str]]:
    rows = []
    for text in cfg.expressions:
        try:
            shown = render(evaluate(parse(text)))
        except CalpanicError as exc:
            shown = f"error: {type(exc).__name__}: {exc}"
        rows.append((text, shown))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("expr", nargs="*", help="expressions (default: a built-in set)")
    args = ap.parse_args()
    cfg = ExampleConfig(tuple(args.expr)) if args.expr else ExampleConfig()
    rows = run(cfg)
    width = max(len(t) for t, _ in rows)
    for text, shown in rows:
        print(f"{text:<{width}}  =>  {shown}")


if __name__ == "__main__":
    main()

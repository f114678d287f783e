import io
import json
import subprocess
import sys

import pytest

from calpanic import evaluate, parse
from calpanic.cli import main, repl


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize(
    "expr, shown",
    [("5/0", "5*ka"), ("10 - 7", "3 + 7*0"), ("real(10 - 7)", "3"), ("10*ka - 7*ka", "3*ka + 7")],
)
def test_eval(expr, shown):
    code, out, _ = run("eval", expr)
    assert code == 0
    assert out.strip() == shown
    # output re-parses to the same value
    assert evaluate(parse(out)) == evaluate(parse(expr))


def test_eval_json():
    code, out, _ = run("eval", "10 - 7", "--json")
    text, blob = out.strip().splitlines()
    assert text == "3 + 7*0"
    assert json.loads(blob)["terms"][1] == {"order": -1, "re": "7", "im": "0"}


def test_exit_codes():
    assert run("eval", "1 +* 2")[0] == 2
    code, _, err = run("eval", "1/(1 + ka)")
    assert code == 3 and "NonMonomialDivisor" in err
    assert run("eval", "real(ka)")[0] == 3


@pytest.mark.parametrize(
    "left, right, code",
    [("0+0", "2*0", 0), ("0", "0*0", 1), ("ka - ka", "1", 0), ("(", "1", 2)],
)
def test_equiv(left, right, code):
    got, out, _ = run("equiv", left, right)
    assert got == code
    if code < 2:
        assert out.startswith("true" if code == 0 else "false")


def test_laws():
    code, out, _ = run("laws")
    assert code == 0
    assert "FAIL" not in out
    assert "(ka-ka)+ka = ka + 1 ; ka+(-ka+ka) = ka - 1" in out


def test_solve():
    assert run("solve", "x - x = 5")[1].strip() == "x = 5*ka"
    assert run("solve", "x^3 - x^3 = 2*x^2")[1].strip() == "x = 2*ka"
    code, _, err = run("solve", "x^2 - x^2 = 2*ka + 1")
    assert code == 3 and "Unsupported" in err


def test_matrix_mul_and_det(tmp_path):
    path = tmp_path / "a.json"
    path.write_text('[["1 + 2*ka","3"],["0","ka"]]', encoding="utf-8")
    code, out, _ = run("matrix", "mul", str(path), '[["1","0"],["0","1"]]', "--mode", "paper", "--json")
    assert code == 0
    # real x zero products drop; 0 * 0 and ka * 0 survive
    assert json.loads(out) == {"AB": [["2*ka + 1", "5"], ["1", "ka + 1*0^2"]]}
    code, out, _ = run("matrix", "det", '[["ka","1"],["1","0"]]')
    assert (code, out.strip()) == (0, "+0")
    assert run("matrix", "det", "[[1]]")[0] == 2
    assert run("matrix", "det", '[["1"]]')[0] == 3


def test_matrix_demo_paper():
    code, out, _ = run("matrix", "demo", "identity", "--mode", "paper")
    assert code == 0
    assert out.count("matches") == 8
    assert "AI[1,1]  (a11 + b11*ka) + b12" in out


def test_repl():
    out = io.StringIO()
    history = repl(io.StringIO("10*ka - 7*ka\n\n1/(1+ka)\n:history\n:quit\n5/0\n"), out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "3*ka + 7"
    assert lines[1].startswith("error: NonMonomialDivisor")
    assert history == ["10*ka - 7*ka", "1/(1+ka)"]
    assert "5*ka" not in out.getvalue()


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "calpanic", "eval", "क × 0"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1"

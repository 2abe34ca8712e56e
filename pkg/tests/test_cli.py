import subprocess
import sys
from pathlib import Path

import pytest

from golden_cases import CASES
from lpa.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *args):
    args = [str(DATA / a) if a.endswith(".graph") else a for a in args]
    rc = main(args)
    out = capsys.readouterr()
    return rc, out.out, out.err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(capsys, name):
    rc, out, _ = run(capsys, *CASES[name])
    assert rc == 0
    assert out == (GOLDEN / f"{name}.out").read_text()


def test_ring_flag_before_subcommand(capsys):
    assert run(capsys, "--ring=mod:4", "classify", "A3.graph")[1] == "M_3(Z/4), dim 9\n"


def test_domain_error_exit_code(capsys):
    rc, out, err = run(capsys, "classify", "T.graph")
    assert rc == 1 and out == ""
    assert "not acyclic (witness cycle e)" in err


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("vertex u\nedge e u\n")
    rc, _, err = run(capsys, "info", str(bad))
    assert rc == 2
    assert "line 2" in err and "expected 3 arguments" in err


def test_unknown_identifier_is_a_parse_error(capsys):
    rc, _, err = run(capsys, "eq", "R2.graph", "v", "g g*")
    assert rc == 2 and "unknown identifier 'g'" in err


def test_bad_ring_is_a_parse_error(capsys):
    assert run(capsys, "info", "R2.graph", "--ring=real")[0] == 2


@pytest.mark.parametrize("args,expected", [
    (["normalform", "R2.graph", "e e*"], "v - f f*\n"),
    (["mul", "T.graph", "e* + f*", "e + f"], "u + v\n"),
    (["mul", "T.graph", "e + f", "e* + f*"], "u\n"),
    (["pi", "R2.graph", "v - e e*"], "1*Z(v|v\\{e})\n"),
    (["pi-inv", "R2.graph", "1*Z(v|v\\{e})"], "f f*\n"),
    (["convolve", "R2.graph", "Z(e|v)", "Z(v|e)"], "1*Z(e|e)\n"),
    (["isotropy", "T.graph", "f"], "trivial\n"),
    (["st-reduce", "R2.graph", "Z(e|f)"], "C=Z(f|e) V=Z(f|f) r=1\nverified: 1_Z(f|e) * h * 1_Z(f|f) = 1*Z(f|f)\n"),
])
def test_other_subcommands(capsys, args, expected):
    rc, out, _ = run(capsys, *args)
    assert rc == 0 and out == expected


def test_reduction_failure_is_a_domain_error(capsys, tmp_path):
    g = tmp_path / "trunc.graph"
    g.write_text("vertex v\nedge e v v\nedge f v v\nsingular v\n")
    rc, _, err = run(capsys, "reduce", str(g), "v + e e* + f f*")
    assert rc == 1 and "insufficient truncation at singular vertex v" in err


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lpa.cli", "isotropy", str(DATA / "R2.graph"), ";(e,f)"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "infinite cyclic, period 2\n"

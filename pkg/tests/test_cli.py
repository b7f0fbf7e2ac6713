import json
import subprocess
import sys

import pytest

from hfkbraid.cli import main
from hfkbraid.laurent import LaurentPoly

from strategies import COUNTER, GENUS1, MIXED4


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_hfk_text(capsys):
    code, out, _ = run(capsys, "hfk", GENUS1)
    assert code == 0
    assert "1   3   1" in out
    assert out.count("  0   1   0") == 4


def test_alex_json_roundtrip(capsys):
    code, out, _ = run(capsys, "alex", MIXED4, "--json")
    data = json.loads(out)
    assert LaurentPoly.from_pairs(data["alexander"]["pairs"]) == LaurentPoly({-2: 1, -1: -14, 0: 34, 1: -14, 2: 1})
    assert data["input"] == MIXED4


def test_staircase_mismatch(capsys):
    code, out, _ = run(capsys, "staircase", COUNTER)
    assert code == 0
    assert "MISMATCH: HF+ total 2 != H* total 3" in out


@pytest.mark.parametrize("argv,code", [
    (["alex", "b=3: s1 x2"], 1),
    (["alex", "b=4: s1 s2 s3"], 2),
    (["alex", "b=3: s1^2"], 2),
    (["tree", "b=3: s1^2"], 2),
    (["tree", MIXED4, "--max-crossings", "4"], 3),
    (["hfk", "b=3: s1 s2"], 2),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_tree_dot_and_no_leaf_invariants(capsys):
    _, out, _ = run(capsys, "tree", GENUS1, "--dot")
    assert out.startswith("digraph")
    _, out, _ = run(capsys, "tree", GENUS1, "--json", "--no-leaf-invariants")
    data = json.loads(out)
    assert data["leaves"] == 5 and all(r["alexander"] is None for r in data["census"])


def test_qprime(capsys):
    _, out, _ = run(capsys, "qprime", MIXED4, "--json")
    assert json.loads(out)["in_Q_prime"] is True


def test_report_deterministic():
    cmd = [sys.executable, "-m", "hfkbraid.cli", "report", MIXED4, "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    data = json.loads(a)
    assert data["tree"]["leaves"] == 8
    assert data["warnings"]

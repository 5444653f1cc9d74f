from __future__ import annotations

import json

import pytest

from walled_brauer.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_reduce(capsys):
    assert run(capsys, "reduce", "s2 s2", "--r", "2", "--s", "1")[:2] == (0, "d * s2")
    assert run(capsys, "reduce", "s1 s1", "--r", "2", "--s", "1")[:2] == (0, "e")
    assert run(capsys, "reduce", "s2 s2 s2", "--r", "2", "--s", "1")[:2] == (0, "d^2 * s2")
    assert run(capsys, "reduce", "s2 s2", "--r", "2", "--s", "1", "--delta", "3")[:2] == (0, "3 * s2")
    code, out, _ = run(capsys, "reduce", "s2 s2", "--r", "2", "--s", "1", "--output", "structured")
    assert json.loads(out) == {"delta_exp": 1, "word": [2], "text": "d * s2"}


def test_basis(capsys):
    assert run(capsys, "basis", "--r", "2", "--s", "1", "--count")[:2] == (0, "6")
    assert run(capsys, "basis", "--r", "2", "--s", "1", "--genfun")[:2] == (0, "1 2 2 1")
    assert run(capsys, "basis", "--r", "2", "--s", "1", "--f", "0")[:2] == (0, "e\ns1")
    code, out, _ = run(capsys, "basis", "--r", "2", "--s", "1", "--graded")
    assert out.splitlines() == ["f=0", "e", "s1", "f=1", "s2", "s2 s1", "s1 s2", "s1 s2 s1"]
    code, out, _ = run(capsys, "basis", "--r", "1", "--s", "1", "--output", "structured")
    assert json.loads(out) == {"basis": [[], [1]]}


def test_mul(capsys):
    assert run(capsys, "mul", "s2", "s2", "--r", "2", "--s", "1")[:2] == (0, "d*s2")
    assert run(capsys, "mul", "s2 + d*e", "s2", "--r", "2", "--s", "1", "--delta", "3")[:2] == (0, "6*s2")
    code, out, _ = run(capsys, "mul", "s1", "s1", "--r", "2", "--s", "1", "--output", "structured")
    assert json.loads(out) == {"product": [{"word": [], "coeff": "1"}]}


def test_diagram(capsys):
    code, out, _ = run(capsys, "diagram", "s2 s2", "--r", "2", "--s", "1")
    assert code == 0 and out.startswith("loops=1") and "u2 -- u3" in out
    code, out, _ = run(capsys, "diagram", "s2", "--r", "2", "--s", "1", "--output", "structured")
    assert json.loads(out)["diagram"]["edges"] == [["u1", "d1"], ["u2", "u3"], ["d2", "d3"]]


def test_modules(capsys):
    code, out, _ = run(capsys, "modules", "--r", "2", "--s", "1")
    assert code == 0
    assert [line.split()[-1] for line in out.splitlines()] == ["dim=1", "dim=1", "dim=2"]


def test_act(capsys):
    code, out, _ = run(capsys, "act", "s2", "--label", "f=1 L=[1] R=[]", "--r", "2", "--s", "1")
    assert (code, out) == (0, "(d)*|2->3; [[1]]; []>")
    code, out, _ = run(capsys, "act", "s2 - d*e", "--label", "f=1 L=[1] R=[]", "--r", "2", "--s", "1")
    assert (code, out) == (0, "0")
    vec = json.dumps({"matching": [[1, 3]], "tL": [[1]], "tR": []})
    code, out, _ = run(capsys, "act", "s1", "--label", "f=1 L=[1] R=[]", "--vector", vec, "--r", "2", "--s", "1")
    assert (code, out) == (0, "|2->3; [[1]]; []>")
    code, _, err = run(capsys, "act", "s1", "--label", "f=1 L=[1] R=[]", "--vector", "{", "--r", "2", "--s", "1")
    assert code == 2 and "bad --vector" in err


def test_annihilator(capsys):
    code, out, _ = run(capsys, "annihilator", "--label", "f=1 L=[1] R=[]", "--r", "2", "--s", "1")
    assert code == 0 and len(out.splitlines()) == 4
    code, out, _ = run(capsys, "annihilator", "--label", "f=1 L=[] R=[]", "--r", "1", "--s", "1",
                       "--output", "structured")
    assert json.loads(out)["count"] == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--r", "1", "--s", "1")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2
    assert all(line.startswith("PASS") for line in lines)
    assert "PASS f=1 L=[] R=[] rank=2" in out
    code, out, _ = run(capsys, "verify", "--r", "2", "--s", "1", "--label", "f=1 L=[1] R=[]", "--exact")
    assert code == 0 and "rank=6" in out


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck", "--max", "4")
    assert code == 0 and out and all(line.startswith("PASS") for line in out.splitlines())


@pytest.mark.parametrize(
    "argv",
    [
        ["reduce", "s7", "--r", "2", "--s", "1"],
        ["reduce", "s1", "--r", "6", "--s", "6"],
        ["reduce", "s1", "--r", "2"],
        ["reduce", "s1", "--r", "0", "--s", "1"],
        ["mul", "s1 +", "s1", "--r", "2", "--s", "1"],
        ["act", "s1", "--label", "f=2 L=[] R=[]", "--r", "2", "--s", "1"],
        ["act", "s1", "--label", "nonsense", "--r", "2", "--s", "1"],
        ["reduce", "s1", "--r", "2", "--s", "1", "--delta", "abc"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_safety_cap(capsys, monkeypatch):
    monkeypatch.setenv("WB_SAFETY_CAP", "3")
    assert run(capsys, "basis", "--count", "--r", "2", "--s", "2")[0] == 2
    assert run(capsys, "basis", "--count", "--r", "2", "--s", "2", "--force")[:2] == (0, "24")
    monkeypatch.setenv("WB_SAFETY_CAP", "x")
    assert run(capsys, "basis", "--count", "--r", "1", "--s", "1")[0] == 2

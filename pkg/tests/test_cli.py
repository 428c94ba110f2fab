from __future__ import annotations

import json
import subprocess
import sys

import pytest

from torelli_bcj.bcj import mixed_bscc
from torelli_bcj.cli import main
from torelli_bcj.symplectic import a, b
from torelli_bcj.wordfile import render_word
from torelli_bcj.words import BSCC, TorelliWord, Twist, standard_bp, standard_bscc


@pytest.fixture
def wordfile(tmp_path):
    def make(w, name="w.json"):
        p = tmp_path / name
        p.write_text(render_word(w) if isinstance(w, TorelliWord) else w)
        return str(p)

    return make


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_sigma(wordfile, capsys):
    assert run(["sigma", wordfile(TorelliWord(3, (standard_bscc(3, 1),)))], capsys)[:2] == (0, "a1*b1\n")
    assert run(["sigma", wordfile(TorelliWord(3, ()))], capsys)[:2] == (0, "0\n")
    code, out, _ = run(["sigma", "--format", "json", wordfile(TorelliWord(3, (standard_bp(3, 1),)))], capsys)
    assert code == 0
    assert json.loads(out)["monomials"] == [["a1", "b1"], ["a1", "b1", "b2"]]


def test_sigma_errors(wordfile, capsys):
    code, _, err = run(["sigma", wordfile(TorelliWord(3, (standard_bscc(3, 1), Twist(a(3, 1)))))], capsys)
    assert code == 3 and "letter 1" in err
    code, _, err = run(["sigma", wordfile(TorelliWord(2, (BSCC(((a(2, 1), a(2, 2)),)),)))], capsys)
    assert code == 3 and "letter 0" in err
    assert run(["sigma", wordfile("{oops")], capsys)[0] == 2
    assert run(["sigma", "/nonexistent/file.json"], capsys)[0] == 2
    bad = '{"genus": 2, "letters": [{"type": "bscc", "pairs": [[[1,0,0,0],[0,0,1,0]]]}, {"type": "nope"}]}'
    code, _, err = run(["sigma", wordfile(bad)], capsys)
    assert code == 2 and "letter 1" in err


def test_rohlin(wordfile, capsys):
    assert run(["rohlin", wordfile(TorelliWord(3, ()))], capsys)[:2] == (0, "0\n")
    assert run(["rohlin", wordfile(TorelliWord(2, (mixed_bscc(2),)))], capsys)[:2] == (0, "1\n")
    assert run(["rohlin", wordfile(TorelliWord(4, (standard_bscc(4, 2),)))], capsys)[:2] == (0, "0\n")
    assert run(["rohlin", wordfile(TorelliWord(2, (Twist(b(2, 1)),)))], capsys)[0] == 3


def test_coinv(capsys):
    code, out, _ = run(["coinv", "--genus", "4", "--degree", "3", "--module", "boolean", "--assert-paper", "--format", "json"], capsys)
    assert code == 0
    rows = json.loads(out)["rows"]
    assert [r["dimension"] for r in rows] == [1, 1, 2, 1]
    assert rows[3]["representatives"] == ["1"]
    code, out, _ = run(["coinv", "--genus", "4", "--module", "lambda3", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["rows"][0]["dimension"] == 0
    code, out, _ = run(["coinv", "--genus", "3", "--degree", "3", "--assert-paper"], capsys)
    assert code == 0
    assert "(B3)_GL dim 3" in out and "[matches published]" not in out.splitlines()[-1]
    assert run(["coinv", "--genus", "12"], capsys)[0] == 2


def test_verify(capsys):
    code, out, _ = run(["verify", "--suite", "ia"], capsys)
    assert code == 0 and json.loads(out)["ok"]
    assert run(["verify", "--suite", "nope"], capsys)[0] == 2
    assert run(["verify", "--suite", "luft", "--genus", "3"], capsys)[0] == 2
    code, out, _ = run(["verify", "--suite", "sg-lifts", "--genus", "3", "--format", "text"], capsys)
    assert code == 0 and out.count("[PASS]") == 6


def test_verify_all(capsys):
    code, out, _ = run(["verify", "--suite", "all"], capsys)
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert [s["suite"] for s in report["suites"]] == ["sg-lifts", "luft", "ia", "lantern", "equivariance", "lemma-coinv"]


def test_assemble(tmp_path, capsys):
    samples = tmp_path / "s.json"
    samples.write_text(json.dumps({"genus": 3, "words": [json.loads(render_word(TorelliWord(3, (standard_bscc(3, 1),))))]}))
    table = tmp_path / "t.json"
    table.write_text(json.dumps({"x": 1, "trivialization": {"kind": "zero"}, "cocycle": {"kind": "zero"}}))
    code, out, _ = run(["assemble", str(samples), str(table)], capsys)
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["values"] == [0]
    table.write_text(json.dumps({"trivialization": {"kind": "letter-pair-parity"}, "cocycle": {"kind": "coboundary"}}))
    code, out, _ = run(["assemble", str(samples), str(table)], capsys)
    status = {r["name"]: r["status"] for r in json.loads(out)["reports"]}
    assert code == 1
    assert status["trivialization"] == "sampled-pass" and status["cocycle conditions"] == "sampled-fail"
    table.write_text(json.dumps({"trivialization": {"kind": "letter-pair-parity"}, "cocycle": {"kind": "letter-count"}}))
    code, out, _ = run(["assemble", str(samples), str(table)], capsys)
    assert code == 1
    assert any(v["condition"] == "3" for r in json.loads(out)["reports"] for v in r["violations"])
    table.write_text(json.dumps({"trivialization": {"kind": "table", "values": {}}}))
    assert run(["assemble", str(samples), str(table)], capsys)[0] == 2
    table.write_text(json.dumps({"trivialization": {"kind": "table", "values": {}, "default": 0}}))
    assert run(["assemble", str(samples), str(table)], capsys)[0] == 0
    table.write_text(json.dumps({"trivialization": {"kind": "mystery"}}))
    assert run(["assemble", str(samples), str(table)], capsys)[0] == 2


def test_deterministic_output(wordfile):
    path = wordfile(TorelliWord(2, (mixed_bscc(2), standard_bscc(2, 2))))
    outs = [
        subprocess.run([sys.executable, "-m", "torelli_bcj", "sigma", "--format", "json", path], capture_output=True, check=True).stdout
        for _ in range(2)
    ]
    assert outs[0] == outs[1]

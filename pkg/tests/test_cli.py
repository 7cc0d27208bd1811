import json
import subprocess
import sys

import pytest

from lfbirkhoff import boolean_lattice
from lfbirkhoff.cli import main, parse_covering, parse_element


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_literals():
    assert parse_element("(0,-1)") == (0, -1)
    assert parse_element("{3,1}") == (1, 3)
    assert parse_element("∅") == ()
    assert parse_element("[1, 2]") == (1, 2)
    assert parse_covering("(0,0)<(1,0)") == ((0, 0), (1, 0))
    assert parse_covering("{1,3}⋖{1,3,5}") == ((1, 3), (1, 3, 5))
    assert parse_covering("6<12", labels=True) == ("6", "12")
    with pytest.raises(ValueError):
        parse_covering("(0,0)")


def test_classify_commands(capsys):
    code, out, _ = run(capsys, "classify", "zgrid2", "(0,0)<(1,0)", "--budget", "32")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "budget_exceeded" and d["oracleKind"] == "secondary"
    _, out, _ = run(capsys, "classify", "bfin", "{1,3}<{1,3,5}")
    d = json.loads(out)
    assert d["verdict"] == "principal" and d["generator"] == [5] and d["chainLength"] == 3
    _, out, _ = run(capsys, "classify", "bfin", "∅<{5}")
    assert json.loads(out)["chainLength"] == 1
    _, out, _ = run(capsys, "classify", "finite:divisor:12", "6<12")
    assert json.loads(out)["generator"] == "4"


def test_classify_rejects_non_covering(capsys):
    code, _, err = run(capsys, "classify", "zgrid2", "(0,0)<(2,0)")
    assert code == 2 and "NotACovering" in err


def test_window_command(capsys):
    _, out, _ = run(capsys, "window", "bfin", "∅", "{1,2,3}", "--covering", "{1}<{1,2}")
    d = json.loads(out)
    assert d["size"] == 8 and d["distributive"] and d["separator"]["generator"] == [2]


def test_components_commands(capsys):
    _, out, _ = run(capsys, "components", "zgrid2")
    assert len(json.loads(out)["classes"]) == 9
    _, out, _ = run(capsys, "components", "--poset", "antichain:3")
    assert json.loads(out)["counts"]["finiteClasses"] == 1
    _, out, _ = run(capsys, "components", "zgrid2", "--probe")
    assert json.loads(out)["primeWindowWidth"] == 2


def test_birkhoff_command(capsys):
    code, out, _ = run(capsys, "birkhoff", "divisor:12")
    d = json.loads(out)
    assert code == 0 and d["holds"] and d["joinIrreducibles"] == ["2", "3", "4"]
    assert sorted(d["forward"]["6"]) == ["2", "3"]
    code, _, err = run(capsys, "birkhoff", "m3")
    assert code == 2 and "NotDistributive" in err


def test_dot_command(capsys):
    _, out, _ = run(capsys, "dot", "lattice", "chain:3")
    assert out.count("->") == 2
    _, out, _ = run(capsys, "dot", "idealGraph", "antichain:3")
    assert out.count("--") == 12
    code, _, _ = run(capsys, "dot", "filterLattice", "boolean:4", "--limit", "8")
    assert code == 2


def test_gen_is_seeded(capsys):
    _, a, _ = run(capsys, "gen", "poset", "--seed", "4", "--size", "6")
    _, b, _ = run(capsys, "gen", "poset", "--seed", "4", "--size", "6")
    assert a == b and json.loads(a)["n"] == 6
    _, out, _ = run(capsys, "gen", "lattice", "--seed", "1")
    assert 2 <= json.loads(out)["n"] <= 16


def test_verify_small_run(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, err = run(capsys, "verify", "--instances", "5", "--suite", "birkhoff", "--json", str(out))
    rep = json.loads(out.read_text())
    assert code == 0 and rep["ok"] and rep["failureCount"] == 0
    assert "birkhoff_isomorphism" in err


def test_verify_fault_injection(tmp_path, capsys):
    B = boolean_lattice(2)
    meet = B.meet.tolist()
    meet[1][2] = meet[2][1] = 3
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 4, "covers": [list(c) for c in B.poset.covers], "meet": meet}))
    code, _, err = run(capsys, "verify", "--instances", "1", "--max-poset", "1", "--suite", "birkhoff",
                       "--lattice", str(bad), "--json", str(tmp_path / "r.json"))
    rep = json.loads((tmp_path / "r.json").read_text())
    assert code == 1 and not rep["ok"]
    assert rep["firstFailure"]["instance"] == "extra#0"
    assert rep["firstFailure"]["lemma"] in {r["lemma"] for r in rep["lemmas"]}
    assert "first failure in" in err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "lfbirkhoff", "dot", "primePoset", "divisor:12"],
                       capture_output=True, text=True, check=True)
    assert r.stdout.count("->") == 1

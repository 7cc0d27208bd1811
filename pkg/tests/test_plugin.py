import io
import json
import sys

import pytest

from lfbirkhoff import BFin, Covering, LatticeError, ZGrid, classify_prime, interval, rank_diff
from lfbirkhoff.plugin import PluginLattice, serve


def _static_file(tmp_path, L, requests):
    lines = []
    for op, args in requests:
        out = io.StringIO()
        serve(L, io.StringIO(json.dumps({"op": op, "args": args}) + "\n"), out)
        lines.append(json.dumps({"op": op, "args": args, **json.loads(out.getvalue())}))
    path = tmp_path / "oracle.jsonl"
    path.write_text("\n".join(lines) + "\n")
    return path


@pytest.fixture
def zgrid_plugin():
    L = PluginLattice.from_command([sys.executable, "-m", "lfbirkhoff", "serve", "zgrid2"], name="zgrid-plugin")
    yield L
    L.close()


def test_subprocess_plugin_matches_builtin(zgrid_plugin):
    P, Z = zgrid_plugin, ZGrid(2)
    assert P.leq((0, 0), (1, 2)) and not P.leq((1, 0), (0, 1))
    assert P.meet((2, -1), (0, 3)) == (0, -1)
    assert P.lower_covers((1, 1)) == [(0, 1), (1, 0)]
    W = interval(P, (0, 0), (2, 2))
    assert len(W) == 9 and W.as_lattice.distributive
    assert rank_diff(P, (0, 0), (2, 3)) == rank_diff(Z, (0, 0), (2, 3)) == 5
    v = classify_prime(P, Covering((0, 0), (1, 0)), 8)
    assert v.verdict == "budget_exceeded" and v.oracle_kind is None
    assert [c.upper for c in v.chain] == [c.upper for c in classify_prime(Z, Covering((0, 0), (1, 0)), 8).chain]


def test_plugin_window_separator(zgrid_plugin):
    W = interval(zgrid_plugin, (0, 0), (3, 3))
    assert W.separator((1, 1), (2, 1)).generator == (2, 0)


def test_static_plugin(tmp_path):
    B = BFin()
    reqs = [("leq", [[], [5]]), ("leq", [[5], [5]]), ("leq", [[], []]), ("leq", [[5], []]),
            ("lower_covers", [[5]]), ("lower_covers", [[]]), ("meet", [[], [5]]), ("meet", [[5], []]),
            ("meet", [[], []]), ("join", [[], [5]])]
    path = _static_file(tmp_path, B, reqs)
    P = PluginLattice.from_file(str(path))
    assert P.is_covering((), (5,))
    v = classify_prime(P, Covering((), (5,)), 4)
    assert v.verdict == "principal" and v.generator == (5,)
    with pytest.raises(LatticeError):
        P.leq((1,), (2,))


def test_plugin_reports_server_errors():
    out = io.StringIO()
    serve(ZGrid(2), io.StringIO('{"op": "explode", "args": []}\n'), out)
    assert "error" in json.loads(out.getvalue())

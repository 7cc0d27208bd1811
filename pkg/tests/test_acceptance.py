"""Acceptance criteria.  Each test prints one PASS/FAIL line.

The verification suites run once per module at the default configuration
(seed 0, all posets up to 5 elements, 500 random posets up to 8 elements,
200 random distributive lattices up to 16 elements, window radius 10,
chain budget 32) and each criterion inspects the checks it owns.
"""
import json
import time
from pathlib import Path

import pytest

from lfbirkhoff import BFin, ZGrid, components_symbolic
from lfbirkhoff.cli import main
from lfbirkhoff.verify import SUITES, SuiteConfig

GOLDEN = Path(__file__).parent / "golden"
CFG = SuiteConfig()


@pytest.fixture(scope="module")
def runs():
    out = {}
    for name, suite in SUITES.items():
        t0 = time.perf_counter()
        R = suite(CFG)
        out[name] = (R, time.perf_counter() - t0)
    return out


def verdict(capsys, number, title, ok, detail):
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})")
    return ok


def lemma_stats(R, names):
    reps = [R.get(n) for n in names]
    return sum(r.instances for r in reps), [w for r in reps for w in r.failures]


def test_birkhoff_exhaustive(runs, capsys):
    R, secs = runs["birkhoff"]
    n, fails = lemma_stats(R, ["birkhoff_isomorphism"])
    # 1 + 2 + 7 + 40 + 357 naturally labelled posets on 1..5 elements, then 500 random ones
    ok = n == 407 + CFG.random_instances and not fails and secs < 120
    assert verdict(capsys, 1, "Birkhoff isomorphism on all posets <=5 and 500 random <=8",
                   ok, f"{n} lattices, {len(fails)} failures, {secs:.1f}s"), fails[:3]


def test_filter_algebra_oracle(runs, capsys):
    R, secs = runs["filters"]
    per_lattice = ["filter_enumeration_matches_bruteforce", "filters_all_principal", "prime_test_matches_definition"]
    n, fails = lemma_stats(R, per_lattice)
    nj, fj = lemma_stats(R, ["filter_join_irreducible_iff_prime"])
    ok = n == 3 * CFG.filter_lattices and nj > 0 and not fails and not fj and secs < 300
    assert verdict(capsys, 2, "filter enumeration, prime test and join-irreducible/prime equivalence",
                   ok, f"{CFG.filter_lattices} lattices, {len(fails) + len(fj)} failures, {secs:.1f}s"), (fails + fj)[:3]


def test_union_meet_join_algebra(runs, capsys):
    R, _ = runs["filters"]
    names = ["union_meet_contains_both_and_is_meet_closure", "union_join_contains_both_and_is_join_closure",
             "filter_lattice_meet_join_are_glb_lub", "filter_lattice_distributive"]
    n, fails = lemma_stats(R, names)
    nm, fm = lemma_stats(R, ["union_meet_rejects_nondistributive", "union_meet_raw_set_on_m3"])
    ok = n == len(names) * CFG.filter_lattices and nm == 3 and not fails and not fm
    assert verdict(capsys, 3, "union-meet/union-join algebra and the M3 rejection",
                   ok, f"{n + nm} checks, {len(fails) + len(fm)} failures"), (fails + fm)[:3]


def test_separation(runs, capsys):
    R, _ = runs["filters"]
    n, fails = lemma_stats(R, ["prime_separates_incomparable_pair", "prime_separates_filter_from_element"])
    ok = n == 2 * CFG.filter_lattices and not fails
    assert verdict(capsys, 4, "primes separate incomparable pairs and filters from elements",
                   ok, f"{n} lattice checks, {len(fails)} failures"), fails[:3]


def test_locally_finite_vs_window(runs, capsys):
    R, secs = runs["locally_finite"]
    names = ["raise_matches_window_search", "lower_matches_window_search", "separator_matches_window_search",
             "rank_diff_matches_window_search", "covering_has_one_separator", "phi_difference_is_rank_through_meet"]
    counts = {k: R.get(k).instances for k in names}
    n, fails = lemma_stats(R, names)
    ok = all(c == 2 * CFG.lf_cases for c in counts.values()) and not fails and secs < 60
    assert verdict(capsys, 5, "raise/lower/separator/rank_diff against window search on ZGrid(2) and BFin",
                   ok, f"{n} cases, {len(fails)} failures, {secs:.1f}s"), (counts, fails[:3])


def test_transpose_lemmas(runs, capsys):
    R, _ = runs["transpose"]
    names = ["transpose_chain_links", "transpose_transitive", "transpose_directed", "transpose_preserves_separator"]
    n, fails = lemma_stats(R, names)
    _, dfails = lemma_stats(R, ["descent_stops_at_generator"])
    # ZGrid(2) chains at the budget, BFin chains to the end, finite-lattice coverings
    expected = CFG.grid_chains + CFG.lf_cases // 4 + CFG.lf_cases
    chains = R.get("transpose_chain_links").instances
    ok = chains == expected and not fails and not dfails
    assert verdict(capsys, 6, "transitivity, directedness and separator preservation along descent chains",
                   ok, f"{chains} chains, {len(fails) + len(dfails)} failures"), (fails + dfails)[:3]


def test_classifier_ground_truth(runs, capsys):
    R, _ = runs["classifier"]
    names = ["classifier_bfin_principal", "classifier_zgrid_budget_exceeded", "classifier_ngrid_principal"]
    n, fails = lemma_stats(R, names)
    ok = n == 3 * CFG.lf_cases and not fails
    assert verdict(capsys, 7, "BFin principal, ZGrid(2) budget exceeded/secondary, NGrid(2) principal",
                   ok, f"{n} coverings, {len(fails)} contradictions"), fails[:3]


def test_representation_roundtrips(runs, capsys):
    R, _ = runs["representation"]
    names = ["inverse_phi_after_phi_is_identity", "phi_after_inverse_phi_is_identity"]
    n, fails = lemma_stats(R, names)
    ok = all(R.get(k).instances == 3 * CFG.lf_cases for k in names) and not fails
    assert verdict(capsys, 8, "phi / inverse_phi round trips with |symmetric difference| cover moves",
                   ok, f"{n} round trips, {len(fails)} failures"), fails[:3]


def test_component_reports_golden(capsys):
    def dump(L):
        return json.dumps(components_symbolic(L).to_json(), indent=2, ensure_ascii=False, sort_keys=True) + "\n"

    z2 = dump(ZGrid(2)) == (GOLDEN / "components_zgrid2.json").read_text(encoding="utf-8")
    bf = dump(BFin()) == (GOLDEN / "components_bfin.json").read_text(encoding="utf-8")
    assert verdict(capsys, 9, "symbolic component reports match golden files",
                   z2 and bf, f"zgrid2 {'match' if z2 else 'differs'}, bfin {'match' if bf else 'differs'}")


def test_verify_is_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    codes = []
    for p in paths:
        codes.append(main(["verify", "--seed", "7", "--json", str(p)]))
        capsys.readouterr()
    same = paths[0].read_bytes() == paths[1].read_bytes()
    assert verdict(capsys, 10, "two verify runs with the same seed give byte-identical reports",
                   same and codes == [0, 0], f"exit codes {codes}, identical={same}")

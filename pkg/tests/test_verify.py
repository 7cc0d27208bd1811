import json

import numpy as np
import pytest

from lfbirkhoff import boolean_lattice, lattice_from_json
from lfbirkhoff.verify import (
    Reports, SuiteConfig, check_birkhoff, check_filters, random_distributive_lattices, random_poset,
    report_json, run_verify,
)

SMALL = SuiteConfig(max_poset_size=3, random_instances=10, filter_lattices=5, lf_cases=10, grid_chains=2)


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(random_instances=0)


def test_random_lattices_are_bounded_and_distributive():
    for L in random_distributive_lattices(np.random.default_rng(0), 20, 16):
        assert 2 <= L.n <= 16 and L.distributive


def test_random_poset_is_reproducible():
    a = random_poset(np.random.default_rng(3), 6)
    b = random_poset(np.random.default_rng(3), 6)
    assert (a.leq == b.leq).all()


def test_small_run_passes_and_is_deterministic():
    r1, r2 = run_verify(SMALL), run_verify(SMALL)
    assert r1["ok"], r1["firstFailure"]
    assert report_json(r1) == report_json(r2)
    assert run_verify(SuiteConfig(**{**SMALL.__dict__, "seed": 1}))["config"]["seed"] == 1


def _corrupted_boolean():
    B = boolean_lattice(2)
    meet = B.meet.tolist()
    meet[1][2] = meet[2][1] = 3
    return lattice_from_json({"n": 4, "covers": [list(c) for c in B.poset.covers], "meet": meet})


def test_corrupted_meet_table_is_reported():
    R = Reports()
    check_birkhoff(R, _corrupted_boolean(), "bad")
    failed = {w["lemma"] for w in R.failures}
    assert failed and "ideal_lattice_distributive" in failed | {"birkhoff_isomorphism"}
    assert all(w["instance"] == "bad" for w in R.failures)


def test_failures_are_collected_not_fail_fast():
    rep = run_verify(SMALL, suites=["birkhoff"], extra_lattices=[_corrupted_boolean(), _corrupted_boolean()])
    assert not rep["ok"]
    instances = {w["instance"] for r in rep["lemmas"] for w in r["failures"]}
    assert instances == {"extra#0", "extra#1"}
    json.dumps(rep)


def test_filter_checks_on_boolean():
    R = Reports()
    check_filters(R, boolean_lattice(3), "bool3")
    assert not R.failures and len(R.by_name) >= 15

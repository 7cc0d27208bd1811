import json

import numpy as np
import pytest
from hypothesis import given, settings

from lfbirkhoff import (
    NotALattice, NotDistributive, birkhoff_iso_check, boolean_lattice, chain_lattice, divisor_lattice,
    ideal_lattice, is_distributive, join_irreducibles, lattice_from_json, lattice_from_poset, m3,
    meet_irreducibles, n5, poset_from_covers, rank_info,
)
from lfbirkhoff.finlat import birkhoff_map

from test_poset import posets


def labels(L, idx):
    return sorted(L.label(i) for i in idx)


def test_divisor_lattice_tables():
    L = divisor_lattice(12)
    i = L.index_of
    assert L.label(int(L.meet[i("4"), i("6")])) == "2"
    assert L.label(int(L.join[i("4"), i("6")])) == "12"
    assert L.label(L.bottom) == "1" and L.label(L.top) == "12"


def test_not_a_lattice():
    # two minimal elements below two maximal ones: no meet of the maxima
    P = poset_from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    with pytest.raises(NotALattice):
        lattice_from_poset(P)


def test_distributivity_examples():
    assert is_distributive(divisor_lattice(12))
    assert is_distributive(boolean_lattice(3))
    L = m3()
    x, y, z = L.distributivity_witness
    assert L.meet[x, L.join[y, z]] != L.join[L.meet[x, y], L.meet[x, z]]
    assert not is_distributive(n5())
    with pytest.raises(NotDistributive):
        n5().require_distributive()


def test_join_irreducibles_examples():
    assert labels(divisor_lattice(12), join_irreducibles(divisor_lattice(12))) == ["2", "3", "4"]
    assert labels(divisor_lattice(12), meet_irreducibles(divisor_lattice(12))) == ["3", "4", "6"]
    B = boolean_lattice(3)
    assert labels(B, join_irreducibles(B)) == ["{0}", "{1}", "{2}"]
    assert list(join_irreducibles(chain_lattice(4))) == [1, 2, 3]


def test_birkhoff_divisor_12():
    L = divisor_lattice(12)
    rep = birkhoff_iso_check(L)
    assert rep.holds and rep.size == 6 and rep.ideal_count == 6
    six = L.index_of("6")
    _, idx = L.join_irreducible_poset
    assert labels(L, [idx[k] for k in birkhoff_map(L, six)]) == ["2", "3"]


def test_birkhoff_refuses_nondistributive():
    with pytest.raises(NotDistributive):
        birkhoff_iso_check(m3())


def test_rank_info():
    ri = rank_info(divisor_lattice(12))
    L = divisor_lattice(12)
    assert ri.graded and ri.rank[L.index_of("12")] == 3
    assert not rank_info(n5()).graded


def test_corrupted_meet_table_detected():
    B = boolean_lattice(2)
    data = {"n": 4, "covers": [list(c) for c in B.poset.covers], "meet": B.meet.tolist()}
    data["meet"][1][2] = data["meet"][2][1] = 3
    L = lattice_from_json(json.loads(json.dumps(data)))
    rep = birkhoff_iso_check(L) if L.distributive else None
    assert rep is None or not rep.holds


@settings(max_examples=60, deadline=None)
@given(posets(max_n=7))
def test_ideal_lattices_are_distributive_and_birkhoff(P):
    L = ideal_lattice(P)
    assert L.distributive
    assert birkhoff_iso_check(L).holds
    # join-irreducible ideals are exactly the principal down-sets
    assert {L.element_masks[j] for j in join_irreducibles(L)} == set(P.down)


@settings(max_examples=40, deadline=None)
@given(posets(max_n=6))
def test_tables_agree_with_order(P):
    L = ideal_lattice(P)
    ref = lattice_from_poset(L.poset)
    assert np.array_equal(L.meet, ref.meet) and np.array_equal(L.join, ref.join)

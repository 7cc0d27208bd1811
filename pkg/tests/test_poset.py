import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lfbirkhoff import (
    CycleDetected, antichain, chain, ideal_lattice, ideal_masks, is_order_filter, is_order_ideal,
    poset_from_covers, poset_from_json, poset_to_json, width,
)
from lfbirkhoff.poset import Poset, transitive_closure
from lfbirkhoff.verify import natural_posets

from conftest import brute_ideals


def test_chain_from_covers():
    P = poset_from_covers(3, [(0, 1), (1, 2)])
    assert int(P.leq.sum()) == 6
    assert P.covers == [(0, 1), (1, 2)]


def test_cycle_rejected():
    with pytest.raises(CycleDetected):
        poset_from_covers(2, [(0, 1), (1, 0)])


def test_redundant_cover_is_dropped():
    P = poset_from_covers(3, [(0, 1), (1, 2), (0, 2)])
    assert P.covers == [(0, 1), (1, 2)]


def test_fence_has_five_ideals():
    # 0 < 1 > 2: ideals are {}, {0}, {2}, {0,2}, {0,1,2}
    P = poset_from_covers(3, [(0, 1), (2, 1)])
    want = {frozenset(s) for s in [(), (0,), (2,), (0, 2), (0, 1, 2)]}
    got = {frozenset(i for i in range(3) if m >> i & 1) for m in ideal_masks(P)}
    assert got == want
    assert len(ideal_lattice(P)) == 5


def test_ideal_counts_small():
    assert len(ideal_masks(antichain(3))) == 8
    assert len(ideal_masks(chain(4))) == 5
    assert len(ideal_masks(antichain(0))) == 1


def test_ideals_in_canonical_order():
    masks = ideal_masks(antichain(2))
    assert masks == [0b00, 0b01, 0b10, 0b11]


def test_order_ideal_and_filter_predicates():
    P = chain(3)
    assert is_order_ideal(P, 0b011)
    assert not is_order_ideal(P, 0b010)
    assert is_order_filter(P, 0b110)
    assert not is_order_filter(P, 0b011)


def test_width_examples():
    assert width(chain(5)) == 1
    assert width(antichain(4)) == 4
    # two chains 0<1<2 and 3<4 -> width 2
    assert width(poset_from_covers(5, [(0, 1), (1, 2), (3, 4)])) == 2
    assert width(antichain(0)) == 0


def _brute_width(leq):
    n = len(leq)
    for r in range(n, 0, -1):
        for S in itertools.combinations(range(n), r):
            if all(not leq[a][b] and not leq[b][a] for a, b in itertools.combinations(S, 2)):
                return r
    return 0


@st.composite
def posets(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            rel[i, j] = draw(st.booleans())
    perm = draw(st.permutations(range(n)))
    return Poset(transitive_closure(rel)[np.ix_(perm, perm)])


@settings(max_examples=80, deadline=None)
@given(posets())
def test_width_matches_bruteforce(P):
    assert width(P) == _brute_width(P.leq.tolist())


@settings(max_examples=80, deadline=None)
@given(posets())
def test_ideals_match_bruteforce(P):
    got = {frozenset(i for i in range(P.n) if m >> i & 1) for m in ideal_masks(P)}
    assert got == set(brute_ideals(P.leq.tolist()))


@settings(max_examples=50, deadline=None)
@given(posets())
def test_covers_are_transitive_reduction(P):
    lt = P.leq & ~np.eye(P.n, dtype=bool)
    want = [(i, j) for i in range(P.n) for j in range(P.n)
            if lt[i, j] and not any(lt[i, k] and lt[k, j] for k in range(P.n))]
    assert P.covers == want


def test_json_roundtrip():
    P = poset_from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)], labels=list("abcd"))
    Q = poset_from_json(poset_to_json(P))
    assert (Q.leq == P.leq).all() and Q.labels == P.labels


def _canonical(P):
    n = P.n
    return min(tuple(P.leq[np.ix_(p, p)].ravel()) for p in itertools.permutations(range(n)))


@pytest.mark.parametrize("n, labelled, classes", [(1, 1, 1), (2, 2, 2), (3, 7, 5), (4, 40, 16), (5, 357, 63)])
def test_natural_posets_cover_every_isomorphism_class(n, labelled, classes):
    Ps = natural_posets(n)
    assert len(Ps) == labelled
    assert len({_canonical(P) for P in Ps}) == classes

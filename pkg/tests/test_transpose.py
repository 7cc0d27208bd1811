import pytest

from lfbirkhoff import (
    BFin, Covering, FiniteAdapter, HypothesisFailed, NGrid, NotACovering, ZGrid, classify_prime, descend,
    directedness_witness, divisor_lattice, down_step, is_downward_transpose,
)
from lfbirkhoff.verify import random_distributive_lattices

Z2 = ZGrid(2)
B = BFin()


def C(a, b):
    return Covering(a, b)


def test_downward_transpose_examples():
    assert is_downward_transpose(Z2, C((0, 0), (1, 0)), C((0, -1), (1, -1)))
    assert not is_downward_transpose(Z2, C((0, 0), (1, 0)), C((0, 0), (0, 1)))
    assert not is_downward_transpose(Z2, C((0, 0), (1, 0)), C((0, 0), (1, 0)))
    assert is_downward_transpose(Z2, C((0, 0), (1, 0)), C((0, 0), (1, 0)), proper=False)
    with pytest.raises(NotACovering):
        is_downward_transpose(Z2, C((0, 0), (2, 0)), C((0, 0), (1, 0)))


def test_down_step_examples():
    assert down_step(Z2, C((0, 0), (1, 0))) == C((0, -1), (1, -1))
    assert down_step(B, C((), (5,))) is None
    assert down_step(B, C((1,), (1, 5))) == C((), (5,))


def test_classify_examples():
    v = classify_prime(B, C((1, 3), (1, 3, 5)), 32)
    assert v.verdict == "principal" and v.generator == (5,) and v.chain_length == 3
    assert [c.upper for c in v.chain] == [(1, 3, 5), (1, 5), (5,)]
    v = classify_prime(Z2, C((0, 0), (1, 0)), 32)
    assert v.verdict == "budget_exceeded" and v.oracle_kind == "secondary" and v.chain_length == 32
    D = divisor_lattice(12)
    A = FiniteAdapter(D)
    v = classify_prime(A, C(D.index_of("6"), D.index_of("12")), 32)
    assert v.verdict == "principal" and D.label(v.generator) == "4"
    assert v.separator.generator == v.generator
    v = classify_prime(B, C((), (5,)), 32)
    assert v.chain_length == 1


def test_classify_ngrid():
    N = NGrid(2)
    v = classify_prime(N, C((3, 5), (4, 5)), 32)
    assert v.verdict == "principal" and v.generator == (4, 0) and v.chain_length == 6


def test_verdict_json():
    v = classify_prime(B, C((1, 3), (1, 3, 5)), 32)
    d = v.to_json(B)
    assert d["generator"] == [5] and d["chainLength"] == 3 and d["verdict"] == "principal"
    assert d["covering"] == {"lower": [1, 3], "upper": [1, 3, 5]}
    d = classify_prime(Z2, C((0, 0), (1, 0)), 4).to_json(Z2)
    assert "generator" not in d and d["budget"] == 4 and d["oracleKind"] == "secondary"
    with pytest.raises(ValueError):
        classify_prime(B, C((), (5,)), 0)


def test_directedness_examples():
    x, y, z = C((0, 0), (1, 0)), C((0, -1), (1, -1)), C((0, -2), (1, -2))
    assert directedness_witness(Z2, x, y, z) == z
    assert directedness_witness(Z2, x, y, y) == y
    with pytest.raises(HypothesisFailed):
        directedness_witness(Z2, x, C((0, 0), (0, 1)), y)


def test_chains_verify():
    chain, finished = descend(Z2, C((2, 2), (2, 3)), 10)
    assert not finished and len(chain) == 10 and chain.verify(Z2)
    chain, finished = descend(B, C((0, 2, 4), (0, 2, 4, 7)), 10)
    assert finished and chain.verify(B) and chain.coverings[-1].upper == (7,)


def test_directedness_on_finite_lattices(rng):
    for L in random_distributive_lattices(rng, 30, 16):
        A = FiniteAdapter(L)
        for lo, hi in L.poset.covers:
            x = C(lo, hi)
            ts = [C(a, b) for a, b in L.poset.covers if is_downward_transpose(A, x, C(a, b), proper=False)]
            for y in ts:
                for z in ts:
                    w = directedness_witness(A, x, y, z)
                    assert A.is_covering(w.lower, w.upper)

import itertools

import pytest

from lfbirkhoff import (
    NotDistributive, NotPrime, boolean_lattice, chain_lattice, complement, divisor_lattice,
    enumerate_filters, is_lattice_filter, is_prime_filter, ji_prime_check, m3, phi, prime_poset,
    principal_filter, separating_prime, union_meet,
)
from lfbirkhoff.filters import LatticeFilter, union_meet_raw
from lfbirkhoff.verify import bruteforce_filters, meet_closure, prime_by_definition


def mask(L, names):
    return sum(1 << L.index_of(s) for s in names)


def names(L, m):
    return sorted(L.label(i) for i in range(L.n) if m >> i & 1)


def test_principal_filters():
    assert names(chain_lattice(3), principal_filter(chain_lattice(3), 1).mask) == ["1", "2"]
    B = boolean_lattice(2)
    assert principal_filter(B, B.bottom).mask == 0b1111
    D = divisor_lattice(12)
    assert names(D, principal_filter(D, D.index_of("2")).mask) == ["12", "2", "4", "6"]


def test_is_lattice_filter():
    B = boolean_lattice(2)
    assert is_lattice_filter(B, mask(B, ["{0}", "{0,1}"]))
    assert not is_lattice_filter(B, mask(B, ["{0}", "{1}", "{0,1}"]))
    assert not is_lattice_filter(B, 0)


@pytest.mark.parametrize("L", [chain_lattice(3), boolean_lattice(2), divisor_lattice(12), m3()],
                         ids=["chain3", "bool2", "div12", "m3"])
def test_is_lattice_filter_matches_bruteforce(L):
    want = set(bruteforce_filters(L))
    for m in range(1 << L.n):
        assert is_lattice_filter(L, m) == (m in want)


def test_union_meet_examples():
    B = boolean_lattice(2)
    a, b = principal_filter(B, B.index_of("{0}")), principal_filter(B, B.index_of("{1}"))
    assert union_meet(a, b).mask == 0b1111
    assert union_meet(a, a) == a


def test_union_meet_on_m3():
    L = m3()
    a, b = principal_filter(L, L.index_of("a")), principal_filter(L, L.index_of("b"))
    assert names(L, union_meet_raw(a, b)) == ["0", "1", "a", "b"]
    with pytest.raises(NotDistributive):
        union_meet(a, b)


def test_enumerate_filters_examples():
    F = enumerate_filters(chain_lattice(3))
    assert [f.members for f in F] == [(2,), (1, 2), (0, 1, 2)]
    assert len(enumerate_filters(boolean_lattice(2))) == 4
    F = enumerate_filters(divisor_lattice(12))
    assert len(F) == 6 and F.all_principal
    FL = F.as_lattice
    assert FL.distributive


def test_filter_lattice_of_boolean_is_boolean():
    FL = enumerate_filters(boolean_lattice(2)).as_lattice
    assert sorted(int(v) for v in FL.leq.sum(axis=0)) == [1, 2, 2, 4]


def test_prime_filter_examples():
    B = boolean_lattice(2)
    assert is_prime_filter(principal_filter(B, B.index_of("{0}")))
    assert not is_prime_filter(principal_filter(B, B.top))
    assert not is_prime_filter(principal_filter(B, B.bottom))


def test_complement_examples():
    C = chain_lattice(3)
    assert complement(principal_filter(C, 1)).members == (0,)
    B = boolean_lattice(2)
    assert names(B, complement(principal_filter(B, B.index_of("{0}"))).mask) == ["{1}", "{}"]
    with pytest.raises(NotPrime):
        complement(principal_filter(B, B.top))


def test_prime_poset_examples():
    PP = prime_poset(chain_lattice(3))
    assert PP.principal_witness == [2, 1]
    assert PP.order.leq[1, 0] and not PP.order.leq[0, 1]
    PP = prime_poset(boolean_lattice(3))
    assert len(PP) == 3 and len(PP.order.covers) == 0
    D = divisor_lattice(12)
    PP = prime_poset(D)
    gens = [D.label(w) for w in PP.principal_witness]
    assert sorted(gens) == ["2", "3", "4"]
    two, four = gens.index("2"), gens.index("4")
    assert PP.order.covers == [(two, four)]


def test_phi_examples():
    D = divisor_lattice(12)
    PP = prime_poset(D)
    gens = [D.label(w) for w in PP.principal_witness]
    got = sorted(gens[k] for k in range(len(PP)) if phi(D, D.index_of("6")) >> k & 1)
    assert got == ["2", "3"]
    assert phi(D, D.top) == (1 << len(PP)) - 1
    B = boolean_lattice(2)
    PB = prime_poset(B)
    assert [B.label(PB.principal_witness[k]) for k in range(len(PB)) if phi(B, B.index_of("{0}")) >> k & 1] == ["{0}"]


def test_ji_prime_check_examples():
    for L in (chain_lattice(3), boolean_lattice(2), divisor_lattice(30)):
        assert ji_prime_check(L).ok


def test_separating_prime():
    D = divisor_lattice(12)
    p = separating_prime(D, D.index_of("4"), D.index_of("6"))
    assert D.index_of("4") in p and D.index_of("6") not in p


def test_oracles_on_all_subsets_of_small_lattice():
    L = divisor_lattice(12)
    for f in enumerate_filters(L):
        assert is_prime_filter(f) == prime_by_definition(L, f.mask)
    for f, g in itertools.product(enumerate_filters(L), repeat=2):
        assert union_meet(f, g).mask == meet_closure(L, f.mask | g.mask)

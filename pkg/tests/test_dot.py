import re

from lfbirkhoff import antichain, chain_lattice, divisor_lattice
from lfbirkhoff.dot import filter_lattice_dot, ideal_graph_dot, lattice_dot, prime_poset_dot


def nodes(text):
    return re.findall(r"^\s+n\d+ \[", text, flags=re.M)


def edges(text, arrow):
    return re.findall(rf"^\s+n\d+ {arrow} n\d+;", text, flags=re.M)


def test_chain_lattice_dot():
    t = lattice_dot(chain_lattice(3))
    assert len(nodes(t)) == 3 and len(edges(t, "->")) == 2
    assert "rankdir=BT" in t


def test_prime_poset_dot():
    t = prime_poset_dot(divisor_lattice(12))
    assert len(nodes(t)) == 3 and len(edges(t, "->")) == 1
    (e,) = edges(t, "->")
    labels = dict(re.findall(r"(n\d+) \[label=\"([^\"]+)\"", t))
    a, b = re.findall(r"n\d+", e)
    assert (labels[a], labels[b]) == ("PF(2)", "PF(4)")


def test_ideal_graph_dot_is_a_cube():
    t = ideal_graph_dot(antichain(3))
    assert len(nodes(t)) == 8 and len(edges(t, "--")) == 12
    assert len(set(re.findall(r"fillcolor=(\w+)", t))) == 1


def test_filter_lattice_dot_and_determinism():
    t = filter_lattice_dot(divisor_lattice(12))
    assert len(nodes(t)) == 6 and len(edges(t, "->")) == 7
    assert t == filter_lattice_dot(divisor_lattice(12))

"""Graphviz DOT text for Hasse diagrams and ideal graphs.

Output is deterministic: nodes and edges are emitted in index order.
"""
from __future__ import annotations

from ._bits import bits
from .filters import enumerate_filters, prime_poset
from .representation import components_finite, ideal_graph

PALETTE = ["lightblue", "lightsalmon", "palegreen", "khaki", "plum", "lightgray", "pink", "wheat"]


def _quote(s):
    return '"' + str(s).replace('"', '\\"') + '"'


def _heights(P):
    h = [0] * P.n
    for i in sorted(range(P.n), key=lambda k: bin(P.down[k]).count("1")):
        if P.lower_covers[i]:
            h[i] = 1 + max(h[c] for c in P.lower_covers[i])
    return h


def hasse_dot(P, name="P"):
    """Hasse diagram; edges point upward and nodes of equal height share a rank."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for i in range(P.n):
        lines.append(f"  n{i} [label={_quote(P.label(i))}];")
    h = _heights(P)
    for level in range(max(h, default=-1) + 1):
        same = " ".join(f"n{i};" for i in range(P.n) if h[i] == level)
        lines.append(f"  {{rank=same; {same}}}")
    for a, b in P.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dot(L, name="L"):
    return hasse_dot(L.poset, name)


def filter_lattice_dot(L, name="F"):
    return hasse_dot(enumerate_filters(L).as_lattice.poset, name)


def prime_poset_dot(L, name="P"):
    return hasse_dot(prime_poset(L).order, name)


def ideal_graph_dot(P, name="I"):
    """Ideals of ``P`` joined when they differ by one element, colored by component."""
    masks, edges = ideal_graph(P)
    comp = components_finite(P).labels
    lines = [f"graph {_quote(name)} {{"]
    for i, m in enumerate(masks):
        label = "{" + ",".join(P.label(k) for k in bits(m)) + "}"
        color = PALETTE[comp[i] % len(PALETTE)]
        lines.append(f"  n{i} [label={_quote(label)}, style=filled, fillcolor={color}];")
    for a, b in edges:
        lines.append(f"  n{a} -- n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"

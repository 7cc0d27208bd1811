"""Order ideals of the prime poset at finite symmetric difference.

For a built-in lattice every element ``x`` maps to the ideal ``phi(x)`` of
primes containing it, and the image of ``phi`` is exactly the set of
ideals at finite symmetric difference from ``phi(x0)`` for any fixed
``x0``.  ``inverse_phi`` walks back from such an ideal to its element one
cover move at a time.  The rest of the module sorts ideals into connected
components, finitely (for finite posets) or symbolically (for the
built-in infinite families).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._bits import bits
from .descriptors import (
    EMPTY_SET, FULL_SET, INF, ComplementDescriptor, LevelIdeal, PeriodicSet, SetIdeal,
)
from .errors import IncomparableBases, InvariantViolation, NotAnIdeal, UnsupportedLattice
from .lazylf import (
    BFinLattice, FiniteAdapter, GridLattice, interval, lowering, raising,
)
from .poset import Poset, ideal_masks, width


def _family(L):
    if L.family is None:
        raise IncomparableBases(f"{L.name} has no symbolic primes; ideal bases cannot be compared")
    return L.family


def phi(L, x):
    return _family(L).phi(x)


def ideal_from(L, base, delta=()):
    """The ideal ``base △ delta``; raises NotAnIdeal if it is not down-closed."""
    return _family(L).from_base_delta(base, list(delta))


def in_dp(L, Q, P0):
    """True iff ``Q △ P0`` is finite."""
    return _family(L).in_dp(Q, P0)


def dp_ops(L, Q1, Q2):
    """``(Q1 ∩ Q2, Q1 ∪ Q2)`` for two ideals in the same component."""
    fam = _family(L)
    if not fam.in_dp(Q1, Q2):
        raise ValueError("ideals lie in different components")
    return fam.meet_ideal(Q1, Q2), fam.join_ideal(Q1, Q2)


def _extreme_first(fam, primes, maximal):
    """Order primes so each comes before everything below (``maximal``) or
    above it; ties broken by the family's sort key."""
    rest = sorted(primes, key=fam.sort_key)
    out = []
    while rest:
        for p in rest:
            others = (q for q in rest if q != p)
            if maximal and not any(fam.leq(p, q) for q in others):
                break
            if not maximal and not any(fam.leq(q, p) for q in others):
                break
        rest.remove(p)
        out.append(p)
    return out


@dataclass
class Step:
    action: str       # "delete" or "add"
    prime: object
    element: object


@dataclass
class InverseTrace:
    element: object
    steps: list = field(default_factory=list)


def inverse_phi_trace(L, x0, Q):
    """Walk from ``x0`` to the element whose ideal is ``Q``.

    All deletions (maximal prime first, each a lowering) precede all
    additions (minimal prime first, each a raising).  Every step is checked
    to be a single cover move changing the ideal by exactly one prime.
    """
    fam = _family(L)
    if hasattr(fam, "is_ideal") and not fam.is_ideal(Q):
        raise NotAnIdeal(f"{Q} is not an order ideal of the prime poset")
    cur_ideal = fam.phi(x0)
    if not fam.in_dp(cur_ideal, Q):
        raise ValueError("target ideal is not at finite distance from phi(x0)")
    diff = fam.sym_diff(cur_ideal, Q)
    removals = _extreme_first(fam, [p for p in diff if fam.contains(cur_ideal, p)], maximal=True)
    additions = _extreme_first(fam, [p for p in diff if not fam.contains(cur_ideal, p)], maximal=False)
    trace = InverseTrace(x0)
    cur = x0
    for action, seq in (("delete", removals), ("add", additions)):
        for p in seq:
            if action == "delete":
                nxt = lowering(L, cur, ComplementDescriptor(p))
                covered = L.is_covering(nxt, cur)
            else:
                nxt = raising(L, cur, p)
                covered = L.is_covering(cur, nxt)
            step_diff = fam.sym_diff(fam.phi(cur), fam.phi(nxt))
            if not covered or step_diff != [p]:
                raise InvariantViolation(f"{action} {p} at {cur} gave {nxt}, changing {step_diff}")
            cur = nxt
            trace.steps.append(Step(action, p, cur))
    trace.element = cur
    if fam.normalize(fam.phi(cur)) != fam.normalize(Q):
        raise InvariantViolation(f"walk ended at {cur} whose ideal differs from the target")
    return trace


def inverse_phi(L, x0, Q):
    return inverse_phi_trace(L, x0, Q).element


# -- component reports ------------------------------------------------------------

@dataclass
class ComponentClass:
    label: str
    representative: object
    iso_type: str

    def to_json(self):
        rep = self.representative
        return {"label": self.label,
                "representative": rep.to_json() if hasattr(rep, "to_json") else rep,
                "isoType": self.iso_type}


@dataclass
class ComponentReport:
    lattice: str
    classes: list
    finite_classes: int | None
    unbounded_note: str | None = None
    edges: list = field(default_factory=list, repr=False)
    labels: list = field(default_factory=list, repr=False)

    def to_json(self):
        counts = {"finiteClasses": self.finite_classes}
        if self.unbounded_note:
            counts["unboundedNote"] = self.unbounded_note
        return {"lattice": self.lattice, "classes": [c.to_json() for c in self.classes], "counts": counts}


def ideal_graph(P):
    """Vertices: order ideals of ``P`` (masks); edges: pairs differing in one element."""
    masks = ideal_masks(P)
    index = {m: i for i, m in enumerate(masks)}
    edges = []
    for i, m in enumerate(masks):
        for e in range(P.n):
            j = index.get(m ^ (1 << e))
            if j is not None and i < j:
                edges.append((i, j))
    return masks, edges


def components_finite(P):
    masks, edges = ideal_graph(P)
    m = len(masks)
    rows = [a for a, _ in edges]
    cols = [b for _, b in edges]
    graph = coo_matrix((np.ones(len(edges)), (rows, cols)), shape=(m, m))
    count, labels = connected_components(graph, directed=False)
    classes = []
    for c in range(count):
        members = [masks[i] for i in range(m) if labels[i] == c]
        rep = members[0]
        classes.append(ComponentClass(f"component {c}", {"ideal": list(bits(rep)), "size": len(members)},
                                      f"ideal lattice of a {P.n}-element poset"))
    return ComponentReport(f"finite({P.n})", classes, count, None, edges, [int(v) for v in labels])


_ISO_GRID = {False: "ℤ", True: "ℕ"}


def _grid_classes(L):
    fam = L.family
    tags = ("-inf", "fin", "+inf") if not L.nonneg else ("fin", "+inf")
    value = {"-inf": -INF, "fin": 0, "+inf": INF}
    classes = []
    for combo in itertools.product(tags, repeat=L.n):
        k = combo.count("fin")
        iso = "×".join([_ISO_GRID[L.nonneg]] * k) if k else "𝟙"
        label = "central" if k == L.n else "(" + ",".join(combo) + ")"
        rep = fam.normalize(LevelIdeal(tuple(value[t] for t in combo)))
        classes.append(ComponentClass(label, rep, iso))
    classes.sort(key=lambda c: (c.label != "central", c.label))
    return classes


def components_symbolic(L, middle_bases=(PeriodicSet.make(2, [0]),)):
    """Connected components of the ideal lattice of the prime poset.

    Grids: each prime chain sits independently at level -inf, finite or
    +inf, so ``Z^n`` has ``3^n`` classes and ``N^n`` has ``2^n``.  BFin: the
    bottom (finite ideals), the top (cofinite ideals) and uncountably many
    middle classes, of which only representatives built from
    ``middle_bases`` are listed.
    """
    if isinstance(L, GridLattice):
        classes = _grid_classes(L)
        return ComponentReport(L.name, classes, len(classes))
    if isinstance(L, BFinLattice):
        classes = [
            ComponentClass("bottom", SetIdeal.make(EMPTY_SET), "𝔹_fin"),
            ComponentClass("top", SetIdeal.make(FULL_SET), "𝔹_cofin"),
        ]
        for b in middle_bases:
            if b.is_empty or b.is_full:
                raise ValueError("middle representatives need an infinite, co-infinite base")
            classes.append(ComponentClass("middle", SetIdeal.make(b), "𝔹_fin × 𝔹_cofin"))
        note = ("middle: uncountably many classes, one per infinite co-infinite set "
                "up to finite difference; representatives only")
        return ComponentReport(L.name, classes, 2, note)
    raise UnsupportedLattice(f"no symbolic component analysis for {L.name}")


def component_label(L, Q):
    """Label of the symbolic class containing the ideal ``Q``."""
    if isinstance(L, BFinLattice):
        if Q.base.is_empty:
            return "bottom"
        return "top" if Q.base.is_full else "middle"
    if isinstance(L, GridLattice):
        combo = L.family.component_class(Q)
        return "central" if all(t == "fin" for t in combo) else "(" + ",".join(combo) + ")"
    raise UnsupportedLattice(f"no symbolic component analysis for {L.name}")


# -- exploration ---------------------------------------------------------------------

def _probe_window(L, radius):
    if isinstance(L, GridLattice):
        lo = 0 if L.nonneg else -radius
        return interval(L, (lo,) * L.n, (radius,) * L.n)
    if isinstance(L, BFinLattice):
        return interval(L, (), tuple(range(radius)))
    if isinstance(L, FiniteAdapter):
        return interval(L, L.L.bottom, L.L.top)
    raise UnsupportedLattice(f"{L.name}: pass window=(a, b) explicitly")


def _poset_of(elements, leq):
    m = len(elements)
    rel = np.array([[leq(a, b) for b in elements] for a in elements], dtype=bool).reshape(m, m)
    return Poset(rel, check=False)


def conjecture_probe(L, radius=3, window=None):
    """Widths of finite windows of the lattice and of its prime poset, next
    to the symbolic component count.  Reports numbers only."""
    W = interval(L, *window) if window is not None else _probe_window(L, radius)
    out = {"lattice": L.name, "radius": radius, "windowSize": len(W),
           "latticeWindowWidth": width(_poset_of(W.elements, L.leq))}
    if L.family is None:
        out.update(primeWindowWidth=None, components=None)
        return out
    fam = L.family
    primes = fam.primes_in_range(-radius, radius)
    out["primeWindowSize"] = len(primes)
    out["primeWindowWidth"] = width(_poset_of(primes, fam.leq)) if primes else 0
    if isinstance(L, FiniteAdapter):
        out["components"] = len(components_finite(fam.prime_poset.order).classes)
    elif isinstance(L, BFinLattice):
        out["components"] = "uncountable"
    elif isinstance(L, GridLattice):
        out["components"] = len(_grid_classes(L))
    else:
        out["components"] = None
    return out

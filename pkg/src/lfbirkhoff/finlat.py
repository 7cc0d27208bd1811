"""Finite lattices: meet/join tables, distributivity, irreducibles, grading
and the Birkhoff correspondence with order ideals of join-irreducibles.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ._bits import bits, to_mask
from .errors import InvariantViolation, NotALattice, NotDistributive, SizeLimitExceeded
from .poset import OrderIdeal, Poset, ideal_masks, poset_from_covers, poset_from_json

DEFAULT_MAX_ELEMENTS = 4096


def _bound_table(leq):
    """Greatest-lower-bound table of ``leq``; raises NotALattice on failure."""
    n = leq.shape[0]
    downsize = leq.sum(axis=0)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        lb = leq[:, i][:, None] & leq          # lb[z, j]: z <= i and z <= j
        if not lb.any(axis=0).all():
            j = int(np.argmin(lb.any(axis=0)))
            raise NotALattice((i, j))
        score = np.where(lb, downsize[:, None], -1)
        cand = score.argmax(axis=0)
        ok = (~lb | leq[:, cand]).all(axis=0)
        if not ok.all():
            raise NotALattice((i, int(np.argmin(ok))))
        table[i] = cand
    return table


class FiniteLattice:
    """A finite lattice stored as its poset plus full meet and join tables.

    With ``check=True`` (the default) the tables are verified to be the
    glb/lub of ``poset``.  ``check=False`` exists for fault-injection
    fixtures that deliberately carry corrupted tables.
    """

    def __init__(self, poset, meet, join, check=True):
        n = poset.n
        if n == 0:
            raise NotALattice((), kind="bottom")
        if n > DEFAULT_MAX_ELEMENTS:
            raise SizeLimitExceeded(f"{n} elements exceed the table limit {DEFAULT_MAX_ELEMENTS}")
        meet = np.array(meet, dtype=np.int64)
        join = np.array(join, dtype=np.int64)
        meet.flags.writeable = False
        join.flags.writeable = False
        self.poset = poset
        self.meet = meet
        self.join = join
        self.n = n
        if check:
            self._check_tables()
        downsize = poset.leq.sum(axis=0)
        self.bottom = int(np.argmin(downsize))
        self.top = int(np.argmax(downsize))

    def _check_tables(self):
        leq = self.poset.leq
        for table, rel, kind in ((self.meet, leq, "meet"), (self.join, leq.T, "join")):
            for i in range(self.n):
                m = table[i]
                below_both = rel[:, i][:, None] & rel
                good = rel[m, i] & rel[m, np.arange(self.n)] & (~below_both | rel[:, m]).all(axis=0)
                if not good.all():
                    raise NotALattice((i, int(np.argmin(good))), kind=kind)

    @property
    def leq(self):
        return self.poset.leq

    def label(self, i):
        return self.poset.label(i)

    def index_of(self, label):
        label = str(label)
        for i in range(self.n):
            if self.label(i) == label:
                return i
        raise KeyError(label)

    @cached_property
    def distributivity_witness(self):
        """First triple ``(x, y, z)`` with ``x^(y v z) != (x^y) v (x^z)``, or None."""
        meet, join = self.meet, self.join
        for x in range(self.n):
            lhs = meet[x][join]
            mx = meet[x]
            rhs = join[mx[:, None], mx[None, :]]
            bad = lhs != rhs
            if bad.any():
                y, z = (int(v) for v in np.argwhere(bad)[0])
                return (x, y, z)
        return None

    @property
    def distributive(self):
        return self.distributivity_witness is None

    def require_distributive(self):
        if not self.distributive:
            raise NotDistributive(witness=self.distributivity_witness)

    def up_mask(self, x):
        return self.poset.up[x]

    def down_mask(self, x):
        return self.poset.down[x]

    @cached_property
    def join_irreducible_mask(self):
        return _irreducibles(self, self.poset.lower_covers, self.join, self.leq)

    @cached_property
    def meet_irreducible_mask(self):
        return _irreducibles(self, self.poset.upper_covers, self.meet, self.leq.T)

    @cached_property
    def join_irreducible_poset(self):
        """``(J, idx)``: the subposet of join-irreducibles and their lattice indices."""
        idx = list(bits(self.join_irreducible_mask))
        return self.poset.subposet(idx), idx

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, covers={self.poset.covers})"


def _irreducibles(L, covers_below, op, rel):
    by_cover = to_mask(x for x in range(L.n) if len(covers_below[x]) == 1)
    lt = rel & ~np.eye(L.n, dtype=bool)
    by_def = 0
    for x in range(L.n):
        below = np.nonzero(lt[:, x])[0]
        if below.size == 0:
            continue  # the bound is the empty join/meet, never irreducible
        if not (op[np.ix_(below, below)] == x).any():
            by_def |= 1 << x
    if by_cover != by_def:
        raise InvariantViolation(
            f"cover criterion {sorted(bits(by_cover))} disagrees with definition {sorted(bits(by_def))}")
    return by_cover


def lattice_from_poset(P):
    """Compute meet and join tables for ``P``; raises NotALattice if impossible."""
    meet = _bound_table(P.leq)
    join = _bound_table(P.leq.T)
    return FiniteLattice(P, meet, join, check=False)


def is_distributive(L):
    return L.distributive


def join_irreducibles(L):
    """Indices of the join-irreducible elements, ascending."""
    return list(bits(L.join_irreducible_mask))


def meet_irreducibles(L):
    return list(bits(L.meet_irreducible_mask))


def birkhoff_map(L, x):
    """Join-irreducibles below ``x``, as an order ideal of the join-irreducible poset."""
    L.require_distributive()
    J, idx = L.join_irreducible_poset
    return OrderIdeal(J, to_mask(k for k, j in enumerate(idx) if L.leq[j, x]))


@dataclass
class IsoReport:
    holds: bool
    witness: dict | None
    size: int
    ideal_count: int
    forward: tuple = field(repr=False, default=())
    inverse: dict = field(repr=False, default_factory=dict)

    def to_json(self):
        return {"holds": self.holds, "witness": self.witness,
                "size": self.size, "idealCount": self.ideal_count}


def birkhoff_iso_check(L):
    """Check that ``x -> birkhoff_map(L, x)`` is a lattice isomorphism onto
    the order ideals of the join-irreducible poset.

    The inverse sends an ideal to the join of its members (bottom for the
    empty ideal).
    """
    L.require_distributive()
    J, idx = L.join_irreducible_poset
    ideals = ideal_masks(J)
    forward = tuple(to_mask(k for k, j in enumerate(idx) if L.leq[j, x]) for x in range(L.n))

    inverse = {}
    for mask in ideals:
        y = L.bottom
        for k in bits(mask):
            y = int(L.join[y, idx[k]])
        inverse[mask] = y

    def fail(check, **kw):
        return IsoReport(False, {"check": check, **kw}, L.n, len(ideals), forward, inverse)

    if len(set(forward)) != L.n:
        seen = {}
        for x, m in enumerate(forward):
            if m in seen:
                return fail("injective", elements=[seen[m], x])
            seen[m] = x
    if set(forward) != set(ideals):
        missing = sorted(set(ideals) - set(forward))
        return fail("surjective", ideal=list(bits(missing[0])) if missing else None)
    for x in range(L.n):
        if inverse[forward[x]] != x:
            return fail("inverse", elements=[x])
        for y in range(x, L.n):
            if forward[L.meet[x, y]] != forward[x] & forward[y]:
                return fail("meet_to_intersection", elements=[x, y])
            if forward[L.join[x, y]] != forward[x] | forward[y]:
                return fail("join_to_union", elements=[x, y])
    return IsoReport(True, None, L.n, len(ideals), forward, inverse)


@dataclass(frozen=True)
class RankInfo:
    graded: bool
    rank: tuple  # longest-chain height above bottom; the rank function when graded


def rank_info(L):
    order = np.argsort(L.leq.sum(axis=0), kind="stable")
    lo = [0] * L.n
    hi = [0] * L.n
    seen = [False] * L.n
    lower = L.poset.lower_covers
    for x in order:
        x = int(x)
        if lower[x]:
            lo[x] = 1 + min(lo[c] for c in lower[x])
            hi[x] = 1 + max(hi[c] for c in lower[x])
        seen[x] = True
    return RankInfo(lo == hi, tuple(hi))


# Fixtures used throughout the tests, notebooks and the verification suite.

def chain_lattice(k):
    return lattice_from_poset(poset_from_covers(k, [(i, i + 1) for i in range(k - 1)]))


def boolean_lattice(k):
    n = 1 << k
    covers = [(s, s | 1 << i) for s in range(n) for i in range(k) if not s >> i & 1]
    labels = ["{" + ",".join(str(i) for i in bits(s)) + "}" for s in range(n)]
    return lattice_from_poset(poset_from_covers(n, covers, labels))


def divisor_lattice(m):
    divs = [d for d in range(1, m + 1) if m % d == 0]
    covers = [(i, j) for i, a in enumerate(divs) for j, b in enumerate(divs)
              if b != a and b % a == 0 and all(not (c % a == 0 and b % c == 0) for c in divs if c not in (a, b))]
    return lattice_from_poset(poset_from_covers(len(divs), covers, [str(d) for d in divs]))


def m3():
    """Diamond with three atoms: 0 < a, b, c < 1."""
    return lattice_from_poset(poset_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
                                                ["0", "a", "b", "c", "1"]))


def n5():
    """Pentagon: 0 < a < c < 1 and 0 < b < 1."""
    return lattice_from_poset(poset_from_covers(5, [(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
                                                ["0", "a", "b", "c", "1"]))


def lattice_from_json(data):
    """Lattice from the poset JSON schema; optional ``meet``/``join`` tables
    are taken verbatim (unchecked) when present."""
    P = poset_from_json(data)
    if isinstance(data, dict) and "meet" in data:
        return FiniteLattice(P, data["meet"], data.get("join", _bound_table(P.leq.T)), check=False)
    return lattice_from_poset(P)

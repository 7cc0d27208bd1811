"""Finite posets, order ideals and filters, Hasse covers and width.

Elements are the integers ``0..n-1``.  Subsets of a poset are plain Python
ints used as bitmasks (bit ``i`` set means element ``i`` is a member), so
unions and intersections are single integer operations.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ._bits import bits, canonical_key, popcount, to_mask
from .errors import CycleDetected, SizeLimitExceeded

DEFAULT_MAX_IDEALS = 1 << 20


def transitive_closure(rel):
    """Reflexive-transitive closure of a square boolean matrix."""
    r = np.array(rel, dtype=bool, copy=True)
    np.fill_diagonal(r, True)
    for k in range(r.shape[0]):
        r |= np.outer(r[:, k], r[k, :])
    return r


def transitive_reduction(leq):
    """Cover pairs ``(i, j)`` of a partial order given as its ``leq`` matrix."""
    lt = leq.copy()
    np.fill_diagonal(lt, False)
    between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
    cov = lt & ~between
    return [(int(i), int(j)) for i, j in zip(*np.nonzero(cov))]


class Poset:
    """Immutable finite partial order on ``range(n)``.

    ``leq[i, j]`` is True iff ``i <= j``.  ``covers`` is the Hasse diagram
    as sorted ``(lower, upper)`` pairs.
    """

    def __init__(self, leq, labels=None, check=True):
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        if leq.shape != (n, n):
            raise ValueError(f"leq must be square, got {leq.shape}")
        if check:
            if not leq.diagonal().all():
                raise ValueError("leq is not reflexive")
            both = leq & leq.T
            np.fill_diagonal(both, False)
            if both.any():
                i, j = (int(v) for v in np.argwhere(both)[0])
                raise CycleDetected(f"elements {i} and {j} are mutually below each other")
            if (transitive_closure(leq) != leq).any():
                raise ValueError("leq is not transitive")
        leq.flags.writeable = False
        self.n = n
        self.leq = leq
        if labels is not None:
            labels = [str(s) for s in labels]
            if len(labels) != n:
                raise ValueError("labels must have one entry per element")
        self.labels = labels

    @classmethod
    def from_covers(cls, n, covers, labels=None):
        return poset_from_covers(n, covers, labels)

    @cached_property
    def covers(self):
        return transitive_reduction(self.leq)

    @cached_property
    def down(self):
        """``down[i]`` is the mask of all ``z <= i``."""
        return [to_mask(np.nonzero(self.leq[:, i])[0]) for i in range(self.n)]

    @cached_property
    def up(self):
        return [to_mask(np.nonzero(self.leq[i, :])[0]) for i in range(self.n)]

    @cached_property
    def lower_covers(self):
        out = [[] for _ in range(self.n)]
        for a, b in self.covers:
            out[b].append(a)
        return out

    @cached_property
    def upper_covers(self):
        out = [[] for _ in range(self.n)]
        for a, b in self.covers:
            out[a].append(b)
        return out

    def label(self, i):
        return self.labels[i] if self.labels is not None else str(i)

    def subposet(self, indices):
        """Induced subposet on ``indices`` (kept in the given order)."""
        idx = list(indices)
        labels = [self.label(i) for i in idx]
        return Poset(self.leq[np.ix_(idx, idx)], labels=labels, check=False)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, Poset) and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.leq.tobytes())

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers})"


def poset_from_covers(n, covers, labels=None):
    """Build a poset from generating pairs ``(lower, upper)``.

    The pairs need not be a transitive reduction; redundant pairs are
    dropped when ``covers`` is re-derived.
    """
    rel = np.zeros((n, n), dtype=bool)
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"pair {(a, b)} out of range for n={n}")
        rel[a, b] = True
    leq = transitive_closure(rel)
    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = (int(v) for v in np.argwhere(both)[0])
        raise CycleDetected(f"cycle through elements {i} and {j}")
    return Poset(leq, labels=labels, check=False)


def chain(k):
    return poset_from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k):
    return poset_from_covers(k, [])


@dataclass(frozen=True)
class OrderIdeal:
    """A down-closed subset of ``base``, stored as a bitmask."""

    base: Poset
    mask: int

    @property
    def members(self):
        return tuple(bits(self.mask))

    def __contains__(self, i):
        return bool(self.mask >> i & 1)

    def __iter__(self):
        return bits(self.mask)

    def __len__(self):
        return popcount(self.mask)

    def __repr__(self):
        return f"OrderIdeal({set(self.members) or '{}'})"


def is_order_ideal(P, S):
    return all(P.down[i] & ~S == 0 for i in bits(S))


def is_order_filter(P, S):
    return all(P.up[i] & ~S == 0 for i in bits(S))


def ideal_masks(P, max_ideals=DEFAULT_MAX_IDEALS):
    """All order ideals of ``P`` as bitmasks, in canonical order.

    Walks the cover graph of the ideal lattice: from each ideal, add one
    element whose strict down-set is already inside.
    """
    strict_down = [P.down[i] & ~(1 << i) for i in range(P.n)]
    seen = {0}
    queue = deque([0])
    while queue:
        cur = queue.popleft()
        for e in range(P.n):
            if cur >> e & 1 or strict_down[e] & ~cur:
                continue
            nxt = cur | (1 << e)
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > max_ideals:
                    raise SizeLimitExceeded(f"more than {max_ideals} order ideals")
                queue.append(nxt)
    return sorted(seen, key=canonical_key)


def order_ideals(P, max_ideals=DEFAULT_MAX_IDEALS):
    return [OrderIdeal(P, m) for m in ideal_masks(P, max_ideals)]


def order_filter_masks(P, max_ideals=DEFAULT_MAX_IDEALS):
    """All up-closed subsets, as complements of the order ideals."""
    full = (1 << P.n) - 1
    return sorted((full & ~m for m in ideal_masks(P, max_ideals)), key=canonical_key)


def ideal_lattice(P, max_ideals=DEFAULT_MAX_IDEALS):
    """The distributive lattice of order ideals of ``P`` under inclusion.

    The result carries ``element_masks``: the ideal (bitmask over ``P``)
    that each lattice element stands for.
    """
    from .finlat import FiniteLattice, DEFAULT_MAX_ELEMENTS

    masks = ideal_masks(P, max_ideals)
    m = len(masks)
    if m > DEFAULT_MAX_ELEMENTS:
        raise SizeLimitExceeded(f"{m} ideals exceed the lattice table limit {DEFAULT_MAX_ELEMENTS}")
    if P.n < 64:
        arr = np.array(masks, dtype=np.uint64)
        order = np.argsort(arr)
        srt = arr[order]

        def lookup(vals):
            return order[np.searchsorted(srt, vals)].astype(np.int64)

        leq = (arr[:, None] & ~arr[None, :]) == 0
        meet = lookup(arr[:, None] & arr[None, :])
        join = lookup(arr[:, None] | arr[None, :])
    else:
        index = {mk: i for i, mk in enumerate(masks)}
        leq = np.array([[a & ~b == 0 for b in masks] for a in masks], dtype=bool)
        meet = np.array([[index[a & b] for b in masks] for a in masks], dtype=np.int64)
        join = np.array([[index[a | b] for b in masks] for a in masks], dtype=np.int64)
    labels = ["{" + ",".join(P.label(k) for k in bits(mk)) + "}" for mk in masks]
    L = FiniteLattice(Poset(leq, labels=labels, check=False), meet, join)
    L.element_masks = tuple(masks)
    return L


def width(P):
    """Size of a maximum antichain (Dilworth: n minus a maximum matching)."""
    if P.n == 0:
        return 0
    lt = P.leq.copy()
    np.fill_diagonal(lt, False)
    match = maximum_bipartite_matching(csr_matrix(lt.astype(np.int8)), perm_type="column")
    return P.n - int((match >= 0).sum())


def poset_to_json(P):
    d = {"n": P.n, "covers": [list(c) for c in P.covers]}
    if P.labels is not None:
        d["labels"] = list(P.labels)
    return d


def poset_from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    return poset_from_covers(int(data["n"]), [tuple(c) for c in data.get("covers", [])],
                             labels=data.get("labels"))

"""Lattice filters and ideals of a finite lattice, the filter lattice,
prime filters, the prime poset and the map sending an element to the set
of primes that contain it.

Filters are ordered by *inverse* inclusion throughout: ``f <= g`` in the
filter lattice means ``g`` is a subset of ``f``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._bits import bits, canonical_key, popcount
from .errors import InvariantViolation, NotAFilter, NotPrime, NotSeparable, SizeLimitExceeded
from .finlat import FiniteLattice
from .poset import Poset, order_filter_masks
from .report import LemmaReport

DEFAULT_MAX_FILTER_BASE = 64


@dataclass(frozen=True, eq=False)
class _Sub:
    base: FiniteLattice
    mask: int

    @property
    def members(self):
        return tuple(bits(self.mask))

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __len__(self):
        return popcount(self.mask)

    def __eq__(self, other):
        return type(self) is type(other) and self.base is other.base and self.mask == other.mask

    def __hash__(self):
        return hash((type(self).__name__, id(self.base), self.mask))

    @property
    def is_proper(self):
        return self.mask != (1 << self.base.n) - 1

    def labels(self):
        return [self.base.label(i) for i in bits(self.mask)]

    def __repr__(self):
        return f"{type(self).__name__}({{{', '.join(self.labels())}}})"


class LatticeFilter(_Sub):
    """Nonempty, meet-closed, up-closed subset of a finite lattice."""

    @cached_property
    def generator(self):
        """The minimum element if the filter has one, else None."""
        for x in bits(self.mask):
            if self.mask & ~self.base.up_mask(x) == 0:
                return x
        return None


class LatticeIdeal(_Sub):
    """Nonempty, join-closed, down-closed subset of a finite lattice."""


def _members(L, S):
    return np.array([bool(S >> i & 1) for i in range(L.n)])


def _closed(L, S, table, closure):
    idx = np.fromiter(bits(S), dtype=np.int64)
    if idx.size == 0:
        return False
    if any(closure(L, i) & ~S for i in idx):
        return False
    inside = _members(L, S)
    return bool(inside[table[np.ix_(idx, idx)]].all())


def is_lattice_filter(L, S):
    return _closed(L, S, L.meet, FiniteLattice.up_mask)


def is_lattice_ideal(L, S):
    return _closed(L, S, L.join, FiniteLattice.down_mask)


def principal_filter(L, x):
    return LatticeFilter(L, L.up_mask(x))


def principal_ideal(L, x):
    return LatticeIdeal(L, L.down_mask(x))


def union_meet_raw(f, g):
    """The set ``{x ^ y : x in f, y in g}`` with no closure and no checks."""
    L = f.base
    a = np.fromiter(bits(f.mask), dtype=np.int64)
    b = np.fromiter(bits(g.mask), dtype=np.int64)
    return sum(1 << int(v) for v in np.unique(L.meet[np.ix_(a, b)]))


def union_join_raw(f, g):
    L = f.base
    a = np.fromiter(bits(f.mask), dtype=np.int64)
    b = np.fromiter(bits(g.mask), dtype=np.int64)
    return sum(1 << int(v) for v in np.unique(L.join[np.ix_(a, b)]))


def union_meet(f, g):
    """Pairwise meets of two filters; the meet in the filter lattice.

    The raw set is verified to be a filter, never closed up silently.
    """
    if f.base is not g.base:
        raise ValueError("filters over different lattices")
    f.base.require_distributive()
    raw = union_meet_raw(f, g)
    if not is_lattice_filter(f.base, raw):
        raise InvariantViolation(f"union-meet {sorted(bits(raw))} is not a lattice filter")
    return LatticeFilter(f.base, raw)


def union_join(f, g):
    if f.base is not g.base:
        raise ValueError("ideals over different lattices")
    f.base.require_distributive()
    raw = union_join_raw(f, g)
    if not is_lattice_ideal(f.base, raw):
        raise InvariantViolation(f"union-join {sorted(bits(raw))} is not a lattice ideal")
    return LatticeIdeal(f.base, raw)


def is_prime_filter(f):
    if not f.is_proper:
        return False
    L = f.base
    inside = _members(L, f.mask)
    hit = inside[L.join]
    return bool((~hit | inside[:, None] | inside[None, :]).all())


def is_prime_ideal(f):
    if not f.is_proper:
        return False
    L = f.base
    inside = _members(L, f.mask)
    hit = inside[L.meet]
    return bool((~hit | inside[:, None] | inside[None, :]).all())


def complement(f):
    """The set complement of a prime filter, checked to be a prime ideal."""
    L = f.base
    rest = ((1 << L.n) - 1) & ~f.mask
    if not is_lattice_ideal(L, rest):
        raise NotPrime(f"complement {[L.label(i) for i in bits(rest)]} is not a lattice ideal")
    ideal = LatticeIdeal(L, rest)
    if not is_prime_ideal(ideal):
        raise NotPrime("complement is not a prime ideal")
    return ideal


class FilterLattice:
    """All lattice filters of ``L`` and the lattice they form.

    ``as_lattice`` has join table = intersection and meet table =
    union-meet; construction verifies these are the lub/glb for inverse
    inclusion.
    """

    def __init__(self, base, filters):
        self.base = base
        self.filters = list(filters)
        self.index = {f.mask: i for i, f in enumerate(self.filters)}

    @cached_property
    def as_lattice(self):
        masks = [f.mask for f in self.filters]
        m = len(masks)
        leq = np.array([[b & ~a == 0 for b in masks] for a in masks], dtype=bool)
        join = np.empty((m, m), dtype=np.int64)
        meet = np.empty((m, m), dtype=np.int64)
        for i, f in enumerate(self.filters):
            for j in range(i, m):
                g = self.filters[j]
                jn = self.index.get(f.mask & g.mask)
                mt = self.index.get(union_meet(f, g).mask)
                if jn is None or mt is None:
                    raise InvariantViolation(f"filters {i},{j}: intersection or union-meet is not a listed filter")
                join[i, j] = join[j, i] = jn
                meet[i, j] = meet[j, i] = mt
        labels = ["{" + ",".join(f.labels()) + "}" for f in self.filters]
        return FiniteLattice(Poset(leq, labels=labels), meet, join, check=True)

    @property
    def all_principal(self):
        return all(f.generator is not None for f in self.filters)

    def __len__(self):
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)


def enumerate_filters(L, max_elements=DEFAULT_MAX_FILTER_BASE):
    """Every lattice filter of ``L`` in canonical order.

    Enumerates up-sets and keeps the meet-closed ones.  For a finite lattice
    each must be principal, so the count must equal ``|L|``; this is
    asserted rather than assumed.
    """
    if L.n > max_elements:
        raise SizeLimitExceeded(f"filter enumeration limited to {max_elements} elements")
    filters = [LatticeFilter(L, m) for m in order_filter_masks(L.poset)
               if m and is_lattice_filter(L, m)]
    F = FilterLattice(L, filters)
    if not F.all_principal or len(F) != L.n:
        raise InvariantViolation(f"{len(F)} filters on a {L.n}-element lattice, not all principal")
    return F


@dataclass
class PrimePoset:
    primes: list
    order: Poset
    principal_witness: list

    def __len__(self):
        return len(self.primes)

    def index(self, f):
        return next(i for i, p in enumerate(self.primes) if p.mask == f.mask)


def _prime_masks(L):
    """Prime filters of a finite distributive lattice, by pair scan over up-sets."""
    out = []
    for m in order_filter_masks(L.poset):
        if m and is_lattice_filter(L, m) and is_prime_filter(LatticeFilter(L, m)):
            out.append(m)
    return out


def prime_poset(L, max_elements=DEFAULT_MAX_FILTER_BASE):
    """Prime filters of ``L`` under inverse inclusion, with generators.

    Each generator is checked against the join-irreducibles of ``L``.
    """
    L.require_distributive()
    if L.n > max_elements:
        raise SizeLimitExceeded(f"prime enumeration limited to {max_elements} elements")
    cached = getattr(L, "_prime_poset", None)
    if cached is not None:
        return cached
    primes = [LatticeFilter(L, m) for m in _prime_masks(L)]
    primes.sort(key=lambda f: canonical_key(f.mask))
    leq = np.array([[q.mask & ~p.mask == 0 for q in primes] for p in primes], dtype=bool).reshape(len(primes), len(primes))
    witness = [p.generator for p in primes]
    if sorted(w for w in witness if w is not None) != list(bits(L.join_irreducible_mask)) or None in witness:
        raise InvariantViolation("prime generators differ from the join-irreducibles")
    labels = ["PF(" + L.label(w) + ")" for w in witness]
    PP = PrimePoset(primes, Poset(leq, labels=labels, check=False), witness)
    L._prime_poset = PP
    return PP


def phi(L, x):
    """Bitmask over ``prime_poset(L)`` of the primes containing ``x``."""
    PP = prime_poset(L)
    return sum(1 << k for k, p in enumerate(PP.primes) if x in p)


def separating_prime(L, x, y):
    """First prime (canonical order) containing ``x`` but not ``y``."""
    L.require_distributive()
    if L.leq[x, y]:
        raise NotSeparable(f"{L.label(x)} <= {L.label(y)}")
    for p in prime_poset(L).primes:
        if x in p and y not in p:
            return p
    raise InvariantViolation(f"no prime separates {L.label(x)} from {L.label(y)}")


def ji_prime_check(L):
    """Join-irreducibles of the filter lattice versus its prime filters."""
    rep = LemmaReport("filter_join_irreducible_iff_prime")
    F = enumerate_filters(L)
    FL = F.as_lattice
    ji = set(bits(FL.join_irreducible_mask))
    for i, f in enumerate(F.filters):
        prime = is_prime_filter(f)
        rep.record((i in ji) == prime, {"filter": f.labels(), "join_irreducible": i in ji, "prime": prime})
    return rep

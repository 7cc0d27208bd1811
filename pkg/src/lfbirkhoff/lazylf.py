"""Locally-finite distributive lattices given by oracles.

A ``LocallyFiniteLattice`` answers ``leq``, ``meet``, ``join`` and cover
queries for single elements; nothing infinite is ever materialized.  The
built-in families (integer grids, finite subsets of the naturals, finite
lattices, products) also carry a ``PrimeFamily`` describing every prime
filter symbolically, which is what makes raising, lowering, separators and
the ideal algebra exactly computable.

Finite intervals can be cut out as ``WindowLattice`` objects; brute-force
searches over a window are the ground truth the closed forms are tested
against.
"""
from __future__ import annotations

import itertools
from collections import deque
from functools import cached_property

import numpy as np

from .descriptors import (
    INF, ComplementDescriptor, ContainsPrime, FiniteIdeal, FinitePrime, LevelIdeal, PeriodicSet,
    ProductIdeal, ProductPrime, SetIdeal, ThresholdPrime, WindowPrime, EMPTY_SET,
)
from .errors import (
    AlreadyMember, IncomparableBases, InvariantViolation, NotACovering, NotAnIdeal, NotComparable,
    UnsupportedLattice, WindowTooLarge,
)
from .finlat import FiniteLattice
from .poset import Poset

DEFAULT_MAX_WINDOW = 4096


class LocallyFiniteLattice:
    """Oracle interface.  Subclasses implement the five lattice queries."""

    name = "oracle"
    has_bottom = False
    has_top = False
    family = None

    def leq(self, x, y):
        raise NotImplementedError

    def meet(self, x, y):
        raise NotImplementedError

    def join(self, x, y):
        raise NotImplementedError

    def lower_covers(self, x):
        raise NotImplementedError

    def upper_covers(self, x):
        """Upper covers of ``x``; may be an infinite iterator (e.g. ``BFin``)."""
        raise NotImplementedError

    def upper_covers_below(self, x, b):
        return [c for c in self.upper_covers(x) if self.leq(c, b)]

    def key(self, x):
        """Canonical total order used for every tie-break."""
        return x

    def coerce(self, x):
        return x

    def encode(self, x):
        return x

    def is_covering(self, lo, hi):
        return lo != hi and self.leq(lo, hi) and lo in self.lower_covers(hi)

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def __repr__(self):
        return self.name


# -- integer grids -------------------------------------------------------------

class GridLattice(LocallyFiniteLattice):
    """``Z^n`` (``nonneg=False``) or ``N^n`` (``nonneg=True``), componentwise."""

    def __init__(self, n, nonneg=False):
        self.n = n
        self.nonneg = nonneg
        self.name = f"{'ngrid' if nonneg else 'zgrid'}{n}"
        self.has_bottom = nonneg
        self.bottom = (0,) * n if nonneg else None
        self.family = GridFamily(self)

    def coerce(self, x):
        x = tuple(int(v) for v in x)
        if len(x) != self.n or (self.nonneg and min(x, default=0) < 0):
            raise ValueError(f"{x} is not an element of {self.name}")
        return x

    def encode(self, x):
        return list(x)

    def leq(self, x, y):
        return all(a <= b for a, b in zip(x, y))

    def meet(self, x, y):
        return tuple(min(a, b) for a, b in zip(x, y))

    def join(self, x, y):
        return tuple(max(a, b) for a, b in zip(x, y))

    def lower_covers(self, x):
        out = []
        for i in range(self.n):
            if not self.nonneg or x[i] > 0:
                out.append(x[:i] + (x[i] - 1,) + x[i + 1:])
        return sorted(out)

    def upper_covers(self, x):
        return sorted(x[:i] + (x[i] + 1,) + x[i + 1:] for i in range(self.n))


def ZGrid(n):
    return GridLattice(n, nonneg=False)


def NGrid(n):
    return GridLattice(n, nonneg=True)


# -- finite subsets of N ---------------------------------------------------------

class BFinLattice(LocallyFiniteLattice):
    """Finite subsets of ``{0, 1, 2, ...}`` under inclusion, as sorted tuples."""

    name = "bfin"
    has_bottom = True
    bottom = ()

    def __init__(self):
        self.family = ContainsFamily(self)

    def coerce(self, x):
        x = tuple(sorted({int(v) for v in x}))
        if x and x[0] < 0:
            raise ValueError("BFin elements are subsets of the naturals")
        return x

    def encode(self, x):
        return list(x)

    def leq(self, x, y):
        return set(x) <= set(y)

    def meet(self, x, y):
        return tuple(sorted(set(x) & set(y)))

    def join(self, x, y):
        return tuple(sorted(set(x) | set(y)))

    def lower_covers(self, x):
        return sorted(x[:i] + x[i + 1:] for i in range(len(x)))

    def upper_covers(self, x):
        s = set(x)
        return (tuple(sorted(s | {k})) for k in itertools.count() if k not in s)

    def upper_covers_below(self, x, b):
        s = set(x)
        return sorted(tuple(sorted(s | {k})) for k in b if k not in s)


def BFin():
    return BFinLattice()


# -- finite lattices ---------------------------------------------------------------

class FiniteAdapter(LocallyFiniteLattice):
    """A ``FiniteLattice`` seen through the oracle interface; elements are indices."""

    has_bottom = True
    has_top = True

    def __init__(self, L, name="finite"):
        self.L = L
        self.name = name
        self.bottom = L.bottom
        self.family = FiniteFamily(self)

    def coerce(self, x):
        if isinstance(x, str):
            return self.L.index_of(x)
        if not 0 <= int(x) < self.L.n:
            raise ValueError(f"element index {x} outside 0..{self.L.n - 1}")
        return int(x)

    def encode(self, x):
        return self.L.label(x)

    def leq(self, x, y):
        return bool(self.L.leq[x, y])

    def meet(self, x, y):
        return int(self.L.meet[x, y])

    def join(self, x, y):
        return int(self.L.join[x, y])

    def lower_covers(self, x):
        return sorted(self.L.poset.lower_covers[x])

    def upper_covers(self, x):
        return sorted(self.L.poset.upper_covers[x])


# -- products --------------------------------------------------------------------

class ProductLattice(LocallyFiniteLattice):
    def __init__(self, A, B):
        self.A, self.B = A, B
        self.name = f"product({A.name},{B.name})"
        self.has_bottom = A.has_bottom and B.has_bottom
        self.has_top = A.has_top and B.has_top
        self.bottom = (A.bottom, B.bottom) if self.has_bottom else None
        self.family = ProductFamily(self) if A.family and B.family else None

    def coerce(self, x):
        return (self.A.coerce(x[0]), self.B.coerce(x[1]))

    def encode(self, x):
        return [self.A.encode(x[0]), self.B.encode(x[1])]

    def key(self, x):
        return (self.A.key(x[0]), self.B.key(x[1]))

    def leq(self, x, y):
        return self.A.leq(x[0], y[0]) and self.B.leq(x[1], y[1])

    def meet(self, x, y):
        return (self.A.meet(x[0], y[0]), self.B.meet(x[1], y[1]))

    def join(self, x, y):
        return (self.A.join(x[0], y[0]), self.B.join(x[1], y[1]))

    def lower_covers(self, x):
        out = [(a, x[1]) for a in self.A.lower_covers(x[0])]
        out += [(x[0], b) for b in self.B.lower_covers(x[1])]
        return sorted(out, key=self.key)

    def upper_covers(self, x):
        left = ((a, x[1]) for a in self.A.upper_covers(x[0]))
        right = ((x[0], b) for b in self.B.upper_covers(x[1]))
        return itertools.chain(left, right)

    def upper_covers_below(self, x, b):
        out = [(a, x[1]) for a in self.A.upper_covers_below(x[0], b[0])]
        out += [(x[0], c) for c in self.B.upper_covers_below(x[1], b[1])]
        return sorted(out, key=self.key)


def Product(A, B):
    return ProductLattice(A, B)


def builtin(name, *args):
    """Construct a built-in lattice by name.

    Accepts ``"zgrid", n`` / ``"zgrid2"``, ``"ngrid", n`` / ``"ngrid3"``,
    ``"bfin"``, ``"finite", L`` and ``"product", A, B``.
    """
    key = name.lower()
    for prefix, ctor in (("zgrid", ZGrid), ("ngrid", NGrid)):
        if key.startswith(prefix):
            n = int(key[len(prefix):]) if key != prefix else int(args[0])
            return ctor(n)
    if key == "bfin":
        return BFin()
    if key == "finite":
        return FiniteAdapter(args[0])
    if key == "product":
        return Product(args[0], args[1])
    raise UnsupportedLattice(f"unknown built-in lattice {name!r}")


# -- prime families ----------------------------------------------------------------

class PrimeFamily:
    """Symbolic description of every prime filter of a built-in lattice,
    together with the algebra of finitely presented order ideals of the
    prime poset."""

    lattice = None
    structure = ""

    def describe(self):
        return {"lattice": self.lattice.name, "structure": self.structure}

    def sort_key(self, p):
        return str(p.to_json())


def _level_set_to_level(base, toggled):
    """Turn ``{k <= base} △ toggled`` into a single level, or None if that
    set is not a down-set of the integers."""
    toggled = sorted(set(toggled))
    if not toggled:
        return base
    if base in (INF, -INF):
        return None
    above = [k for k in toggled if k > base]
    below = [k for k in toggled if k <= base]
    if above and below:
        return None
    if above:
        return base + len(above) if above == list(range(base + 1, base + 1 + len(above))) else None
    return base - len(below) if below == list(range(base - len(below) + 1, base + 1)) else None


class GridFamily(PrimeFamily):
    """Primes of ``Z^n`` / ``N^n``: one chain ``{x : x[i] >= k}`` per axis.

    In ``Z^n`` every one of them is secondary; in ``N^n`` (``k >= 1``) each
    is ``PF(k * e_i)``.
    """

    def __init__(self, lattice):
        self.lattice = lattice
        self.n = lattice.n
        self.nonneg = lattice.nonneg
        self.structure = f"{self.n} disjoint chains indexed by " + ("k>=1" if self.nonneg else "Z")

    def prime(self, axis, level):
        if self.nonneg:
            if level < 1:
                raise ValueError("N^n thresholds start at 1")
            gen = tuple(level if i == axis else 0 for i in range(self.n))
            return ThresholdPrime(axis, level, gen)
        return ThresholdPrime(axis, level)

    def prime_from_json(self, d):
        return self.prime(int(d["axis"]), int(d["level"]))

    def sort_key(self, p):
        return (p.axis, p.level)

    def leq(self, p, q):
        return p.axis == q.axis and p.level <= q.level

    def primes_in_range(self, lo, hi):
        lo = max(lo, 1) if self.nonneg else lo
        return [self.prime(i, k) for i in range(self.n) for k in range(lo, hi + 1)]

    def phi(self, x):
        return LevelIdeal(tuple(x))

    def contains(self, Q, p):
        return p.level <= Q.levels[p.axis]

    def normalize(self, Q):
        if self.nonneg:
            return LevelIdeal(tuple(max(v, 0) for v in Q.levels))
        return Q

    def from_base_delta(self, base, delta):
        levels = list(self.normalize(base).levels)
        for axis in range(self.n):
            toggled = [p.level for p in delta if p.axis == axis]
            new = _level_set_to_level(levels[axis], toggled)
            if new is None:
                raise NotAnIdeal(f"axis {axis}: level {levels[axis]} toggled by {sorted(toggled)}")
            levels[axis] = new
        return LevelIdeal(tuple(levels))

    def in_dp(self, Q1, Q2):
        Q1, Q2 = self.normalize(Q1), self.normalize(Q2)
        for a, b in zip(Q1.levels, Q2.levels):
            finite = (abs(a) != INF, abs(b) != INF)
            if finite == (True, True):
                continue
            if a != b:
                return False
        return True

    def sym_diff(self, Q1, Q2):
        if not self.in_dp(Q1, Q2):
            raise ValueError("symmetric difference is infinite")
        Q1, Q2 = self.normalize(Q1), self.normalize(Q2)
        out = []
        for i, (a, b) in enumerate(zip(Q1.levels, Q2.levels)):
            if a != b:
                out += [self.prime(i, k) for k in range(int(min(a, b)) + 1, int(max(a, b)) + 1)]
        return out

    def meet_ideal(self, Q1, Q2):
        return LevelIdeal(tuple(min(a, b) for a, b in zip(Q1.levels, Q2.levels)))

    def join_ideal(self, Q1, Q2):
        return LevelIdeal(tuple(max(a, b) for a, b in zip(Q1.levels, Q2.levels)))

    def separator(self, lo, hi):
        diff = [i for i in range(self.n) if lo[i] != hi[i]]
        return self.prime(diff[0], hi[diff[0]])

    def raising(self, x, p):
        if p.member(x):
            raise AlreadyMember(f"{x} already in {p}")
        return x[:p.axis] + (p.level,) + x[p.axis + 1:]

    def lowering(self, x, p):
        if not p.member(x):
            raise AlreadyMember(f"{x} already in the complement of {p}")
        return x[:p.axis] + (p.level - 1,) + x[p.axis + 1:]

    def component_class(self, Q):
        Q = self.normalize(Q)
        tags = []
        for v in Q.levels:
            if v == INF:
                tags.append("+inf")
            elif v == -INF:
                tags.append("-inf")
            else:
                tags.append("fin")
        return tuple(tags)

    def element_of(self, Q):
        """Element with ``phi == Q`` when every level is finite."""
        Q = self.normalize(Q)
        if any(abs(v) == INF for v in Q.levels):
            return None
        return tuple(int(v) for v in Q.levels)


class ContainsFamily(PrimeFamily):
    """Primes of ``BFin``: the antichain ``{S : k in S}``, all principal."""

    structure = "antichain indexed by N"

    def __init__(self, lattice):
        self.lattice = lattice

    def prime(self, k):
        return ContainsPrime(int(k))

    def prime_from_json(self, d):
        return self.prime(d["k"])

    def sort_key(self, p):
        return p.k

    def leq(self, p, q):
        return p == q

    def primes_in_range(self, lo, hi):
        return [ContainsPrime(k) for k in range(max(lo, 0), hi + 1)]

    def phi(self, x):
        return SetIdeal.make(EMPTY_SET, x)

    def contains(self, Q, p):
        return p.k in Q

    def normalize(self, Q):
        return Q

    def from_base_delta(self, base, delta):
        return SetIdeal.make(base.base, set(base.delta) ^ {p.k for p in delta})

    def in_dp(self, Q1, Q2):
        return Q1.base == Q2.base

    def sym_diff(self, Q1, Q2):
        if not self.in_dp(Q1, Q2):
            raise ValueError("symmetric difference is infinite")
        return [ContainsPrime(k) for k in sorted(Q1.delta ^ Q2.delta)]

    def _combine(self, Q1, Q2, op):
        base = Q1.base.combine(Q2.base, op)
        delta = {k for k in Q1.delta | Q2.delta if op(k in Q1, k in Q2) != (k in base)}
        return SetIdeal.make(base, delta)

    def meet_ideal(self, Q1, Q2):
        return self._combine(Q1, Q2, lambda a, b: a and b)

    def join_ideal(self, Q1, Q2):
        return self._combine(Q1, Q2, lambda a, b: a or b)

    def separator(self, lo, hi):
        (k,) = set(hi) - set(lo)
        return ContainsPrime(k)

    def raising(self, x, p):
        if p.member(x):
            raise AlreadyMember(f"{x} already contains {p.k}")
        return tuple(sorted(x + (p.k,)))

    def lowering(self, x, p):
        if not p.member(x):
            raise AlreadyMember(f"{x} does not contain {p.k}")
        return tuple(v for v in x if v != p.k)

    def component_class(self, Q):
        return Q.base

    def element_of(self, Q):
        return tuple(sorted(Q.delta)) if Q.base.is_empty else None


class FiniteFamily(PrimeFamily):
    """Primes of a finite distributive lattice, from explicit filter enumeration."""

    def __init__(self, lattice):
        self.lattice = lattice
        self.structure = "finite prime poset"

    @cached_property
    def prime_poset(self):
        from .filters import prime_poset
        return prime_poset(self.lattice.L)

    @cached_property
    def primes(self):
        return [FinitePrime(f.mask, f.generator) for f in self.prime_poset.primes]

    @cached_property
    def _index(self):
        return {p: i for i, p in enumerate(self.primes)}

    def prime_from_json(self, d):
        members = d["members"]
        mask = sum(1 << int(i) for i in members)
        for p in self.primes:
            if p.mask == mask:
                return p
        raise ValueError(f"{members} is not a prime filter")

    def sort_key(self, p):
        return self._index[p]

    def leq(self, p, q):
        return q.mask & ~p.mask == 0

    def primes_in_range(self, lo=None, hi=None):
        return list(self.primes)

    def phi(self, x):
        return FiniteIdeal(sum(1 << i for i, p in enumerate(self.primes) if p.member(x)))

    def contains(self, Q, p):
        return bool(Q.mask >> self._index[p] & 1)

    def normalize(self, Q):
        return Q

    def is_ideal(self, Q):
        from .poset import is_order_ideal
        return is_order_ideal(self.prime_poset.order, Q.mask)

    def from_base_delta(self, base, delta):
        Q = FiniteIdeal(base.mask ^ sum(1 << self._index[p] for p in delta))
        if not self.is_ideal(Q):
            raise NotAnIdeal(f"{Q} is not down-closed")
        return Q

    def in_dp(self, Q1, Q2):
        return True

    def sym_diff(self, Q1, Q2):
        d = Q1.mask ^ Q2.mask
        return [p for i, p in enumerate(self.primes) if d >> i & 1]

    def meet_ideal(self, Q1, Q2):
        return FiniteIdeal(Q1.mask & Q2.mask)

    def join_ideal(self, Q1, Q2):
        return FiniteIdeal(Q1.mask | Q2.mask)

    def separator(self, lo, hi):
        diff = self.sym_diff(self.phi(lo), self.phi(hi))
        if len(diff) != 1:
            raise InvariantViolation(f"covering has {len(diff)} separating primes")
        return diff[0]

    def raising(self, x, p):
        if p.member(x):
            raise AlreadyMember(f"{x} already in {p}")
        return int(self.lattice.L.join[x, p.generator])

    def lowering(self, x, p):
        if not p.member(x):
            raise AlreadyMember(f"{x} already in the complement of {p}")
        L = self.lattice.L
        rest = [i for i in range(L.n) if not p.member(i)]
        top = rest[0]
        for i in rest[1:]:
            top = int(L.join[top, i])
        return int(L.meet[x, top])

    def component_class(self, Q):
        return "all"

    def element_of(self, Q):
        for x in range(self.lattice.L.n):
            if self.phi(x) == Q:
                return x
        return None


class ProductFamily(PrimeFamily):
    """Primes of ``A x B``: pull-backs of primes of either factor.

    A pull-back is principal iff the factor prime is principal and the
    other factor has a bottom.
    """

    def __init__(self, lattice):
        self.lattice = lattice
        self.fams = (lattice.A.family, lattice.B.family)
        self.structure = f"disjoint union of ({self.fams[0].structure}) and ({self.fams[1].structure})"

    def wrap(self, side, inner):
        other = self.lattice.B if side == 0 else self.lattice.A
        gen = None
        if inner.generator is not None and other.has_bottom:
            gen = (inner.generator, other.bottom) if side == 0 else (other.bottom, inner.generator)
        return ProductPrime(side, inner, gen)

    def prime_from_json(self, d):
        side = int(d["side"])
        return self.wrap(side, self.fams[side].prime_from_json(d["inner"]))

    def sort_key(self, p):
        return (p.side, self.fams[p.side].sort_key(p.inner))

    def leq(self, p, q):
        return p.side == q.side and self.fams[p.side].leq(p.inner, q.inner)

    def primes_in_range(self, lo, hi):
        return [self.wrap(s, q) for s in (0, 1) for q in self.fams[s].primes_in_range(lo, hi)]

    def phi(self, x):
        return ProductIdeal(self.fams[0].phi(x[0]), self.fams[1].phi(x[1]))

    def contains(self, Q, p):
        return self.fams[p.side].contains((Q.left, Q.right)[p.side], p.inner)

    def normalize(self, Q):
        return ProductIdeal(self.fams[0].normalize(Q.left), self.fams[1].normalize(Q.right))

    def from_base_delta(self, base, delta):
        parts = [[p.inner for p in delta if p.side == s] for s in (0, 1)]
        return ProductIdeal(self.fams[0].from_base_delta(base.left, parts[0]),
                            self.fams[1].from_base_delta(base.right, parts[1]))

    def in_dp(self, Q1, Q2):
        return self.fams[0].in_dp(Q1.left, Q2.left) and self.fams[1].in_dp(Q1.right, Q2.right)

    def sym_diff(self, Q1, Q2):
        return ([self.wrap(0, p) for p in self.fams[0].sym_diff(Q1.left, Q2.left)]
                + [self.wrap(1, p) for p in self.fams[1].sym_diff(Q1.right, Q2.right)])

    def meet_ideal(self, Q1, Q2):
        return ProductIdeal(self.fams[0].meet_ideal(Q1.left, Q2.left), self.fams[1].meet_ideal(Q1.right, Q2.right))

    def join_ideal(self, Q1, Q2):
        return ProductIdeal(self.fams[0].join_ideal(Q1.left, Q2.left), self.fams[1].join_ideal(Q1.right, Q2.right))

    def separator(self, lo, hi):
        side = 0 if lo[0] != hi[0] else 1
        return self.wrap(side, self.fams[side].separator(lo[side], hi[side]))

    def raising(self, x, p):
        part = self.fams[p.side].raising(x[p.side], p.inner)
        return (part, x[1]) if p.side == 0 else (x[0], part)

    def lowering(self, x, p):
        part = self.fams[p.side].lowering(x[p.side], p.inner)
        return (part, x[1]) if p.side == 0 else (x[0], part)

    def component_class(self, Q):
        return (self.fams[0].component_class(Q.left), self.fams[1].component_class(Q.right))

    def element_of(self, Q):
        a, b = self.fams[0].element_of(Q.left), self.fams[1].element_of(Q.right)
        return None if a is None or b is None else (a, b)


# -- windows -----------------------------------------------------------------------

class WindowLattice:
    """The finite interval ``[a, b]`` of a locally-finite lattice.

    Elements are listed in canonical order; ``to_global``/``from_global``
    translate between window indices and ambient elements.  The explicit
    ``FiniteLattice`` is built lazily, since the brute-force searches only
    need the element list.
    """

    def __init__(self, L, a, b, max_size=DEFAULT_MAX_WINDOW):
        if not L.leq(a, b):
            raise NotComparable(f"{a} is not below {b}")
        self.ambient = L
        self.a, self.b = a, b
        seen = {b}
        queue = deque([b])
        while queue:
            z = queue.popleft()
            for c in L.lower_covers(z):
                if c not in seen and L.leq(a, c):
                    seen.add(c)
                    if len(seen) > max_size:
                        raise WindowTooLarge(f"interval [{a}, {b}] has more than {max_size} elements")
                    queue.append(c)
        self.elements = sorted(seen, key=L.key)
        self.index = {z: i for i, z in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def to_global(self, i):
        return self.elements[i]

    def from_global(self, x):
        return self.index[x]

    def lower_covers(self, x):
        return [c for c in self.ambient.lower_covers(x) if c in self.index]

    @cached_property
    def as_lattice(self):
        """Explicit lattice; construction checks the window is a sublattice."""
        L, els = self.ambient, self.elements
        m = len(els)
        leq = np.array([[L.leq(x, y) for y in els] for x in els], dtype=bool)
        meet = np.empty((m, m), dtype=np.int64)
        join = np.empty((m, m), dtype=np.int64)
        for i, x in enumerate(els):
            for j in range(i, m):
                y = els[j]
                meet[i, j] = meet[j, i] = self.index[L.meet(x, y)]
                join[i, j] = join[j, i] = self.index[L.join(x, y)]
        labels = [str(L.encode(x)) for x in els]
        return FiniteLattice(Poset(leq, labels=labels, check=False), meet, join, check=True)

    @cached_property
    def join_irreducibles(self):
        return [z for z in self.elements if len(self.lower_covers(z)) == 1]

    def phi(self, x):
        """Window primes containing ``x``, named by their generators."""
        return frozenset(j for j in self.join_irreducibles if self.ambient.leq(j, x))

    def prime(self, j):
        members = frozenset(z for z in self.elements if self.ambient.leq(j, z))
        return WindowPrime((self.a, self.b), j, members)

    def separator(self, lo, hi):
        diff = self.phi(hi) - self.phi(lo)
        if len(diff) != 1 or not self.phi(lo) <= self.phi(hi):
            raise InvariantViolation(f"covering {lo} < {hi} has {len(diff)} window separators")
        return self.prime(next(iter(diff)))

    def restrict(self, p):
        """Members of a prime descriptor that lie in the window."""
        return frozenset(z for z in self.elements if p.member(z))


def interval(L, a, b, max_size=DEFAULT_MAX_WINDOW):
    return WindowLattice(L, L.coerce(a), L.coerce(b), max_size)


# -- brute-force window searches (ground truth for the closed forms) ----------------

def _fold(op, items):
    acc = items[0]
    for z in items[1:]:
        acc = op(acc, z)
    return acc


def window_raise(W, x, p):
    """Minimum of ``{z in W : z >= x, z in p}`` by exhaustive search.

    A minimum exists iff the meet of all candidates is itself a candidate.
    """
    L = W.ambient
    cands = [z for z in W.elements if L.leq(x, z) and p.member(z)]
    if not cands:
        return None
    m = _fold(L.meet, cands)
    return m if m in set(cands) else None


def window_lower(W, x, p_ideal):
    L = W.ambient
    cands = [z for z in W.elements if L.leq(z, x) and p_ideal.member(z)]
    if not cands:
        return None
    m = _fold(L.join, cands)
    return m if m in set(cands) else None


def window_rank_diff(W, x, y):
    """Shortest and longest cover-path length from ``x`` up to ``y`` inside ``W``."""
    L = W.ambient
    memo = {x: (0, 0)}

    def walk(z):
        if z not in memo:
            below = [walk(c) for c in W.lower_covers(z) if L.leq(x, c)]
            memo[z] = (1 + min(b[0] for b in below), 1 + max(b[1] for b in below))
        return memo[z]

    if not (L.leq(x, y) and x in W and y in W):
        raise NotComparable(f"{x}, {y} are not an ordered pair of the window")
    return walk(y)


# -- operations --------------------------------------------------------------------

def primes_of(L):
    if L.family is None:
        raise UnsupportedLattice(f"{L.name} has no symbolic prime family")
    return L.family


def require_covering(L, lo, hi):
    if not L.is_covering(lo, hi):
        raise NotACovering(f"{lo} is not covered by {hi}")


def raising(L, x, p):
    """Least element above ``x`` that lies in the prime ``p``."""
    return primes_of(L).raising(x, p)


def lowering(L, x, p_ideal):
    """Greatest element below ``x`` that lies in the prime ideal ``p_ideal``."""
    p = p_ideal.prime if isinstance(p_ideal, ComplementDescriptor) else p_ideal
    return primes_of(L).lowering(x, p)


def separator(L, lo, hi, window=None):
    """The unique prime containing ``hi`` but not ``lo`` for a covering.

    With ``window`` the answer is computed inside that finite interval
    (the only option for bare oracles).
    """
    require_covering(L, lo, hi)
    if window is not None or L.family is None:
        if window is None:
            raise UnsupportedLattice(f"{L.name}: separator needs a window")
        return window.separator(lo, hi)
    return L.family.separator(lo, hi)


def rank_diff(L, x, y):
    """Length of a saturated chain from ``x`` up to ``y`` (greedy descent)."""
    if not L.leq(x, y):
        raise NotComparable(f"{x} is not below {y}")
    steps, cur = 0, y
    while cur != x:
        cur = next(c for c in L.lower_covers(cur) if L.leq(x, c))
        steps += 1
    return steps


def phi_restricted(L, x, region):
    """Primes in a finite region that contain ``x``.

    ``region`` is an index range ``(lo, hi)`` or an explicit list of primes.
    """
    if isinstance(region, tuple) and len(region) == 2 and all(isinstance(v, int) for v in region):
        region = primes_of(L).primes_in_range(*region)
    return [p for p in region if p.member(x)]


def raise_then_lower_roundtrip(L, x, p):
    y = raising(L, x, p)
    return y, lowering(L, y, ComplementDescriptor(p))


__all__ = [
    "LocallyFiniteLattice", "GridLattice", "ZGrid", "NGrid", "BFin", "BFinLattice", "FiniteAdapter",
    "Product", "ProductLattice", "builtin", "PrimeFamily", "GridFamily", "ContainsFamily",
    "FiniteFamily", "ProductFamily", "WindowLattice", "interval", "window_raise", "window_lower",
    "window_rank_diff", "primes_of", "raising", "lowering", "separator", "rank_diff",
    "phi_restricted", "require_covering", "IncomparableBases", "PeriodicSet",
]

"""Finitely presented prime filters and order ideals of prime posets.

A prime descriptor is a small hashable value with a ``member`` predicate.
An ideal descriptor names a (possibly infinite) down-closed set of primes
in a form where membership, finite symmetric difference, meet and join are
decidable exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

INF = math.inf


def _level_json(v):
    if v == INF:
        return "+inf"
    if v == -INF:
        return "-inf"
    return int(v)


def _level_from_json(v):
    if v in ("+inf", "inf", "∞", "+∞"):
        return INF
    if v in ("-inf", "-∞", "−∞"):
        return -INF
    return int(v)


# -- primes ------------------------------------------------------------------

@dataclass(frozen=True)
class PrimeDescriptor:
    """Base class.  ``generator`` is the element ``g`` with ``PF(g) == self``
    when the prime is principal, else None (a secondary prime)."""

    @property
    def kind(self):
        return "principal" if self.generator is not None else "secondary"

    def member(self, x):
        raise NotImplementedError


@dataclass(frozen=True)
class ThresholdPrime(PrimeDescriptor):
    """``{x : x[axis] >= level}`` in an integer grid."""

    axis: int
    level: int
    generator: tuple | None = field(default=None, compare=False)

    def member(self, x):
        return x[self.axis] >= self.level

    def to_json(self):
        return {"family": "threshold", "axis": self.axis, "level": self.level, "kind": self.kind}

    def __str__(self):
        return f"x[{self.axis}]>={self.level}"


@dataclass(frozen=True)
class ContainsPrime(PrimeDescriptor):
    """``{S : k in S}`` among finite subsets of the naturals."""

    k: int

    @property
    def generator(self):
        return (self.k,)

    def member(self, x):
        return self.k in x

    def to_json(self):
        return {"family": "contains", "k": self.k, "kind": self.kind}

    def __str__(self):
        return f"P_{self.k}"


@dataclass(frozen=True)
class FinitePrime(PrimeDescriptor):
    """A prime filter of a finite lattice, as a bitmask over its elements."""

    mask: int
    generator: int | None = field(default=None, compare=False)

    def member(self, x):
        return bool(self.mask >> x & 1)

    def to_json(self):
        return {"family": "finite", "members": [i for i in range(self.mask.bit_length()) if self.mask >> i & 1],
                "generator": self.generator, "kind": self.kind}

    def __str__(self):
        return f"PF({self.generator})" if self.generator is not None else f"F{self.mask:#x}"


@dataclass(frozen=True)
class ProductPrime(PrimeDescriptor):
    """Pull-back of a prime of one factor of a product lattice."""

    side: int
    inner: PrimeDescriptor
    generator: tuple | None = field(default=None, compare=False)

    def member(self, x):
        return self.inner.member(x[self.side])

    def to_json(self):
        return {"family": "product", "side": self.side, "inner": self.inner.to_json(), "kind": self.kind}

    def __str__(self):
        return f"pi{self.side}^-1({self.inner})"


@dataclass(frozen=True)
class WindowPrime(PrimeDescriptor):
    """Prime filter of a finite window lattice, ``PF(generator)`` inside it."""

    window_bounds: tuple
    generator: object
    members: frozenset = field(compare=False, default=frozenset())

    @property
    def kind(self):
        return "window"

    def member(self, x):
        return x in self.members

    def to_json(self):
        return {"family": "window", "bounds": list(self.window_bounds), "generator": self.generator}

    def __str__(self):
        return f"PF_W({self.generator})"


@dataclass(frozen=True)
class ComplementDescriptor:
    """The prime ideal ``L \\ prime``."""

    prime: PrimeDescriptor

    def member(self, x):
        return not self.prime.member(x)

    def to_json(self):
        return {"complementOf": self.prime.to_json()}

    def __str__(self):
        return f"L\\{self.prime}"


def complement_of(p):
    return ComplementDescriptor(p)


# -- ideals ------------------------------------------------------------------

@dataclass(frozen=True)
class LevelIdeal:
    """Down-set of a disjoint union of prime chains, one level per chain.

    Chain ``i`` contributes its primes with level ``<= levels[i]``; a level
    may be ``-inf`` (none) or ``+inf`` (all).
    """

    levels: tuple

    def to_json(self):
        return {"levels": [_level_json(v) for v in self.levels]}

    @classmethod
    def from_json(cls, d):
        return cls(tuple(_level_from_json(v) for v in d["levels"]))

    def __str__(self):
        return "(" + ", ".join(str(_level_json(v)) for v in self.levels) + ")"


@dataclass(frozen=True)
class PeriodicSet:
    """Subset of the naturals invariant under ``k -> k + period``."""

    period: int
    residues: frozenset

    @classmethod
    def make(cls, period, residues):
        period = int(period)
        res = frozenset(int(r) % period for r in residues)
        for d in range(1, period + 1):
            if period % d == 0 and all((r in res) == ((r % d) in res) for r in range(period)):
                return cls(d, frozenset(r for r in res if r < d))
        return cls(period, res)

    def __contains__(self, k):
        return k % self.period in self.residues

    @property
    def is_empty(self):
        return not self.residues

    @property
    def is_full(self):
        return len(self.residues) == self.period

    def combine(self, other, op):
        p = math.lcm(self.period, other.period)
        return PeriodicSet.make(p, [r for r in range(p) if op(r in self, r in other)])

    def to_json(self):
        return {"period": self.period, "residues": sorted(self.residues)}

    def __str__(self):
        if self.is_empty:
            return "∅"
        if self.is_full:
            return "ℕ"
        return "{k ≡ " + ",".join(map(str, sorted(self.residues))) + f" mod {self.period}}}"


EMPTY_SET = PeriodicSet(1, frozenset())
FULL_SET = PeriodicSet(1, frozenset({0}))


@dataclass(frozen=True)
class SetIdeal:
    """``base △ delta`` for a periodic base and finite ``delta`` (normalized)."""

    base: PeriodicSet
    delta: frozenset

    @classmethod
    def make(cls, base, delta=()):
        return cls(base, frozenset(int(k) for k in delta))

    def __contains__(self, k):
        return (k in self.base) != (k in self.delta)

    def to_json(self):
        return {"base": self.base.to_json(), "delta": sorted(self.delta)}

    @classmethod
    def from_json(cls, d):
        b = d.get("base", {"period": 1, "residues": []})
        return cls.make(PeriodicSet.make(b["period"], b["residues"]), d.get("delta", []))

    def __str__(self):
        return f"{self.base} △ {{{','.join(map(str, sorted(self.delta)))}}}"


@dataclass(frozen=True)
class FiniteIdeal:
    """Order ideal of a finite prime poset, as a bitmask over its primes."""

    mask: int

    def to_json(self):
        return {"primes": [i for i in range(self.mask.bit_length()) if self.mask >> i & 1]}


@dataclass(frozen=True)
class ProductIdeal:
    left: object
    right: object

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json()}

    def __str__(self):
        return f"({self.left}) ⊔ ({self.right})"


def lcm_all(values):
    return reduce(math.lcm, values, 1)

"""Downward transposes between coverings and the descent classifier that
tells principal separators from secondary ones.

A covering ``y`` is a downward transpose of ``x`` when
``x.upper == x.lower v y.upper`` and ``y.lower == x.lower ^ y.upper``.
Starting from a covering and repeatedly stepping to a transpose with a
strictly smaller upper element either stops (the separator is principal,
generated by the last upper element) or runs on forever (secondary).  The
descent is a semi-decision, so without a symbolic oracle the classifier
reports a budget overrun instead of claiming "secondary".
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import HypothesisFailed, NotACovering
from .lazylf import separator


@dataclass(frozen=True)
class Covering:
    lower: object
    upper: object

    def to_json(self, L=None):
        enc = L.encode if L is not None else (lambda v: v)
        return {"lower": enc(self.lower), "upper": enc(self.upper)}

    def __str__(self):
        return f"{self.lower} ⋖ {self.upper}"


def check_covering(L, c):
    if not L.is_covering(c.lower, c.upper):
        raise NotACovering(f"{c} is not a covering in {L.name}")


def is_downward_transpose(L, x, y, proper=True):
    """True iff ``y`` is a downward transpose of ``x``.

    The defining equations also hold for ``y == x``; ``proper=True``
    excludes that trivial case, which chains never use.
    """
    check_covering(L, x)
    check_covering(L, y)
    if proper and x == y:
        return False
    return L.join(x.lower, y.upper) == x.upper and L.meet(x.lower, y.upper) == y.lower


def down_step(L, c, window=None):
    """One descent step from covering ``c``, or None if ``c.upper`` has no
    other lower cover.

    Picks the least lower cover of ``c.upper`` other than ``c.lower`` (in
    ``L.key`` order) and pairs it with its meet with ``c.lower``.  With a
    ``window``, candidates are restricted to the window.
    """
    lower = L.lower_covers(c.upper)
    if window is not None:
        lower = [z for z in lower if z in window]
    cands = sorted((z for z in lower if z != c.lower), key=L.key)
    if not cands:
        return None
    yp = cands[0]
    nxt = Covering(L.meet(yp, c.lower), yp)
    if not is_downward_transpose(L, c, nxt):
        raise HypothesisFailed(f"{nxt} is not a downward transpose of {c}")
    return nxt


@dataclass
class TransposeChain:
    coverings: list = field(default_factory=list)

    def verify(self, L):
        for a, b in zip(self.coverings, self.coverings[1:]):
            if not is_downward_transpose(L, a, b) or not L.lt(b.upper, a.upper):
                return False
        return True

    def __len__(self):
        return len(self.coverings)

    def __iter__(self):
        return iter(self.coverings)


def descend(L, c, budget, window=None):
    """Follow ``down_step`` from ``c``.  Returns ``(chain, finished)``; the
    chain holds at most ``budget`` coverings."""
    check_covering(L, c)
    chain = TransposeChain([c])
    while True:
        nxt = down_step(L, chain.coverings[-1], window)
        if nxt is None:
            return chain, True
        if len(chain) >= budget:
            return chain, False
        chain.coverings.append(nxt)


@dataclass
class Verdict:
    verdict: str               # "principal" or "budget_exceeded"
    covering: Covering
    chain: TransposeChain
    budget: int
    generator: object = None
    separator: object = None
    oracle_kind: str | None = None

    @property
    def chain_length(self):
        return len(self.chain)

    def to_json(self, L):
        out = {
            "covering": self.covering.to_json(L),
            "separator": None if self.separator is None else self.separator.to_json(),
            "verdict": self.verdict,
            "chain": [c.to_json(L) for c in self.chain],
            "budget": self.budget,
        }
        if self.verdict == "principal":
            out["generator"] = L.encode(self.generator)
            out["chainLength"] = self.chain_length
        if self.oracle_kind is not None:
            out["oracleKind"] = self.oracle_kind
        return out


def classify_prime(L, c, budget=32, window=None):
    """Classify the separator of covering ``c`` by downward descent."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    chain, finished = descend(L, c, budget, window)
    sep = kind = None
    if L.family is not None:
        sep = separator(L, c.lower, c.upper)
        kind = sep.kind
    if finished:
        last = chain.coverings[-1]
        return Verdict("principal", c, chain, budget, generator=last.upper, separator=sep, oracle_kind=kind)
    return Verdict("budget_exceeded", c, chain, budget, separator=sep, oracle_kind=kind)


def directedness_witness(L, x, y, z):
    """Common downward transpose of two transposes ``y``, ``z`` of ``x``."""
    for t in (y, z):
        if not is_downward_transpose(L, x, t, proper=False):
            raise HypothesisFailed(f"{t} is not a downward transpose of {x}")
    w = Covering(L.meet(y.lower, z.lower), L.meet(y.upper, z.upper))
    if not L.is_covering(w.lower, w.upper):
        raise HypothesisFailed(f"{w} is not a covering")
    if not (is_downward_transpose(L, y, w, proper=False) and is_downward_transpose(L, z, w, proper=False)):
        raise HypothesisFailed(f"{w} is not a downward transpose of both inputs")
    return w

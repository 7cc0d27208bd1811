"""Seeded verification suites for every structural claim the library relies on.

Each check is recorded under a descriptive name in a ``LemmaReport``;
failures are collected, never fail-fast, so one run documents every
regression.  All randomness comes from ``SuiteConfig.seed`` and instances
are processed in a fixed order, so equal seeds give identical reports.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass, field

import numpy as np

from ._bits import bits, popcount
from .descriptors import EMPTY_SET, INF, ComplementDescriptor, LevelIdeal, PeriodicSet, SetIdeal
from .errors import AlreadyMember, NotAnIdeal, NotDistributive
from .filters import (
    LatticeFilter, LatticeIdeal, complement, enumerate_filters, is_lattice_filter, is_lattice_ideal,
    is_prime_filter, is_prime_ideal, ji_prime_check, phi, prime_poset, principal_filter, principal_ideal,
    separating_prime, union_join, union_meet, union_meet_raw,
)
from .finlat import birkhoff_iso_check, lattice_from_poset, m3, n5, rank_info
from .lazylf import (
    BFin, BFinLattice, FiniteAdapter, GridLattice, NGrid, ZGrid, interval, lowering, raising, rank_diff, separator,
    window_lower, window_raise, window_rank_diff,
)
from .poset import Poset, ideal_lattice, ideal_masks, is_order_ideal, transitive_closure
from .report import LemmaReport
from .representation import (
    component_label, components_finite, components_symbolic, dp_ops, ideal_graph, inverse_phi_trace,
)
from .transpose import Covering, classify_prime, descend, directedness_witness, is_downward_transpose


@dataclass
class SuiteConfig:
    max_poset_size: int = 5
    random_instances: int = 500
    seed: int = 0
    window_radius: int = 10
    chain_budget: int = 32
    random_poset_size: int = 8
    filter_lattices: int = 200
    max_filter_lattice: int = 16
    lf_cases: int = 200
    grid_chains: int = 8

    def __post_init__(self):
        for k, v in asdict(self).items():
            if k != "seed" and v < 1:
                raise ValueError(f"{k} must be positive, got {v}")

    def rng(self, stream):
        """Independent generator per suite, so suites reproduce in isolation."""
        return np.random.default_rng([self.seed, stream])


# -- report plumbing -------------------------------------------------------------------

def _plain(v):
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v, key=repr) if isinstance(v, (set, frozenset)) else v
        return [_plain(x) for x in items]
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (int, np.integer)):
        return int(v)
    if v is None or isinstance(v, str):
        return v
    if isinstance(v, float):
        return v if abs(v) != INF else ("+inf" if v > 0 else "-inf")
    return str(v)


class Reports:
    def __init__(self):
        self.by_name = {}

    def get(self, lemma):
        if lemma not in self.by_name:
            self.by_name[lemma] = LemmaReport(lemma)
        return self.by_name[lemma]

    def record(self, lemma, instance, ok, detail=None):
        witness = None if ok else _plain({"lemma": lemma, "instance": instance, **(detail or {})})
        self.get(lemma).record(bool(ok), witness)

    def check(self, lemma, instance, fn):
        """Run ``fn() -> bool | (bool, detail)``; any exception is a failure."""
        try:
            out = fn()
        except Exception as exc:  # a raised error is itself a verification failure
            self.record(lemma, instance, False, {"error": type(exc).__name__, "message": str(exc)})
            return False
        ok, detail = out if isinstance(out, tuple) else (out, None)
        self.record(lemma, instance, ok, detail)
        return ok

    def merge_report(self, rep, instance):
        target = self.get(rep.lemma)
        target.instances += rep.instances
        target.failures.extend(_plain({"lemma": rep.lemma, "instance": instance, **(w or {})})
                               for w in rep.failures)

    def extend(self, other):
        for name, rep in other.by_name.items():
            self.get(name).merge(rep)
        return self

    @property
    def failures(self):
        return [w for r in self.by_name.values() for w in r.failures]

    def to_list(self):
        return [r.to_json() for r in self.by_name.values()]


# -- instance generators ----------------------------------------------------------------

def natural_posets(n):
    """Every partial order on ``range(n)`` refining the natural order.

    Each isomorphism class has at least one naturally labelled
    representative, so this covers all posets of size ``n``.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for choice in itertools.product((False, True), repeat=len(pairs)):
        rel = np.eye(n, dtype=bool)
        for (i, j), on in zip(pairs, choice):
            rel[i, j] = on
        if (transitive_closure(rel) == rel).all():
            out.append(Poset(rel, check=False))
    return out


def random_poset(rng, n, density=None):
    """Random order: closure of a random DAG on a random labelling."""
    if density is None:
        density = float(rng.uniform(0.05, 0.6))
    rel = np.triu(rng.random((n, n)) < density, k=1)
    perm = rng.permutation(n)
    leq = transitive_closure(rel)[np.ix_(perm, perm)]
    return Poset(leq, check=False)


def random_distributive_lattices(rng, count, max_size):
    """Ideal lattices of random posets, with at least two and at most
    ``max_size`` elements.  Distributive by construction."""
    out = []
    while len(out) < count:
        P = random_poset(rng, int(rng.integers(1, 7)))
        if 2 <= len(ideal_masks(P)) <= max_size:
            out.append(ideal_lattice(P))
    return out


# -- finite lattices: Birkhoff -----------------------------------------------------------

def check_birkhoff(R, L, inst, P=None):
    iso = {}

    def iso_holds():
        iso["r"] = birkhoff_iso_check(L)
        return iso["r"].holds, {"witness": iso["r"].witness}

    R.check("ideal_lattice_distributive", inst,
            lambda: (L.distributive, {"triple": L.distributivity_witness}))
    R.check("birkhoff_isomorphism", inst, iso_holds)
    # join-irreducibles are computed two ways internally; a disagreement raises
    R.check("join_irreducible_two_criteria", inst, lambda: L.join_irreducible_mask >= 0)
    if P is not None:
        R.check("join_irreducibles_recover_poset", inst,
                lambda: {L.element_masks[j] for j in bits(L.join_irreducible_mask)} == set(P.down))
    if "r" not in iso:
        return
    fw = np.array(iso["r"].forward, dtype=np.uint64)

    def cover_adds_one():
        for a, b in L.poset.covers:
            if int(fw[a]) & ~int(fw[b]) or popcount(int(fw[b]) & ~int(fw[a])) != 1:
                return False, {"covering": [a, b]}
        return True

    def rank_counts():
        ri = rank_info(L)
        if not ri.graded:
            return False, {"graded": False}
        rank = np.array(ri.rank)
        gained = np.bitwise_count(fw[None, :] & ~fw[:, None]).astype(np.int64)
        bad = L.leq & (gained != rank[None, :] - rank[:, None])
        if bad.any():
            return False, {"pair": np.argwhere(bad)[0].tolist()}
        return True

    R.check("cover_adds_one_join_irreducible", inst, cover_adds_one)
    R.check("rank_difference_counts_join_irreducibles", inst, rank_counts)


def birkhoff_suite(cfg):
    R = Reports()
    for n in range(1, cfg.max_poset_size + 1):
        for k, P in enumerate(natural_posets(n)):
            check_birkhoff(R, ideal_lattice(P), f"poset{n}#{k}", P)
    rng = cfg.rng(1)
    for k in range(cfg.random_instances):
        P = random_poset(rng, int(rng.integers(1, cfg.random_poset_size + 1)))
        check_birkhoff(R, ideal_lattice(P), f"random#{k}", P)
    return R


# -- finite lattices: filter algebra ----------------------------------------------------

def bruteforce_filters(L):
    """Every nonempty up-closed meet-closed subset, by scanning all subsets."""
    n = L.n
    S = np.arange(1 << n, dtype=np.int64)
    mem = ((S[:, None] >> np.arange(n)) & 1).astype(bool)
    ok = S != 0
    for i in range(n):
        up = L.up_mask(i)
        ok &= ~mem[:, i] | ((S & up) == up)
    for i in range(n):
        for j in range(i + 1, n):
            ok &= ~(mem[:, i] & mem[:, j]) | mem[:, int(L.meet[i, j])]
    return sorted(int(s) for s in S[ok])


def prime_by_definition(L, mask):
    if mask == (1 << L.n) - 1:
        return False
    for x in range(L.n):
        for y in range(L.n):
            if mask >> int(L.join[x, y]) & 1 and not (mask >> x & 1 or mask >> y & 1):
                return False
    return True


def meet_closure(L, mask, table=None):
    table = L.meet if table is None else table
    cur = mask
    while True:
        idx = np.fromiter(bits(cur), dtype=np.int64)
        nxt = cur
        for v in np.unique(table[np.ix_(idx, idx)]):
            nxt |= 1 << int(v)
        if nxt == cur:
            return cur
        cur = nxt


def check_filters(R, L, inst):
    F = {}

    def enumeration():
        F["F"] = enumerate_filters(L)
        got = sorted(f.mask for f in F["F"])
        want = bruteforce_filters(L)
        return got == want and len(got) == L.n, {"enumerated": len(got), "bruteforce": len(want)}

    R.check("filter_enumeration_matches_bruteforce", inst, enumeration)
    if "F" not in F:
        return
    F = F["F"]
    R.check("filters_all_principal", inst, lambda: F.all_principal and len(F) == L.n)
    R.check("prime_test_matches_definition", inst,
            lambda: all(is_prime_filter(f) == prime_by_definition(L, f.mask) for f in F))
    R.merge_report(ji_prime_check(L), inst)

    def um():
        for f, g in itertools.product(F.filters, repeat=2):
            h = union_meet(f, g).mask
            if f.mask & ~h or g.mask & ~h:
                return False, {"f": f.labels(), "g": g.labels(), "contains": False}
            if h != meet_closure(L, f.mask | g.mask):
                return False, {"f": f.labels(), "g": g.labels(), "closure": False}
        return True

    R.check("union_meet_contains_both_and_is_meet_closure", inst, um)

    def uj():
        ideals = [principal_ideal(L, x) for x in range(L.n)]
        for f, g in itertools.product(ideals, repeat=2):
            h = union_join(f, g).mask
            if f.mask & ~h or g.mask & ~h or h != meet_closure(L, f.mask | g.mask, L.join):
                return False, {"f": f.labels(), "g": g.labels()}
        return True

    R.check("union_join_contains_both_and_is_join_closure", inst, uj)

    FLbox = {}

    def flattice():
        FL = FLbox["FL"] = F.as_lattice
        ref = lattice_from_poset(FL.poset)
        return bool((FL.meet == ref.meet).all() and (FL.join == ref.join).all())

    R.check("filter_lattice_meet_join_are_glb_lub", inst, flattice)
    if "FL" in FLbox:
        FL = FLbox["FL"]
        R.check("filter_lattice_distributive", inst, lambda: FL.distributive)
    full = (1 << L.n) - 1

    def filter_ideal():
        for f in F:
            prime = is_prime_filter(f)
            rest = full & ~f.mask
            as_ideal = is_lattice_ideal(L, rest) and is_prime_ideal(LatticeIdeal(L, rest))
            if prime != as_ideal:
                return False, {"filter": f.labels(), "prime": prime}
            if prime and complement(f).mask != rest:
                return False, {"filter": f.labels()}
        return True

    R.check("prime_iff_complement_is_prime_ideal", inst, filter_ideal)
    ji = L.join_irreducible_mask
    R.check("principal_prime_iff_join_irreducible", inst,
            lambda: all(is_prime_filter(principal_filter(L, x)) == bool(ji >> x & 1) for x in range(L.n)))

    def equiv():
        if "FL" not in FLbox:
            return False, {"missing": "filter lattice"}
        for x in range(L.n):
            pf = principal_filter(L, x)
            px = F.index[pf.mask]
            for fi, f in enumerate(F.filters):
                a = bool(FLbox["FL"].leq[fi, px])
                b = pf.mask & ~f.mask == 0
                c = x in f
                if not a == b == c:
                    return False, {"x": x, "filter": f.labels()}
        return True

    R.check("filter_order_equivalences", inst, equiv)

    def pf_embed():
        pfs = [principal_filter(L, x).mask for x in range(L.n)]
        if len(set(pfs)) != L.n:
            return False, {"injective": False}
        for x in range(L.n):
            for y in range(L.n):
                fx, fy = principal_filter(L, x), principal_filter(L, y)
                if pfs[int(L.meet[x, y])] != union_meet(fx, fy).mask or pfs[int(L.join[x, y])] != fx.mask & fy.mask:
                    return False, {"pair": [x, y]}
        return True

    R.check("principal_filter_embedding", inst, pf_embed)
    PP = prime_poset(L)

    def phi_embed():
        ph = [phi(L, x) for x in range(L.n)]
        if len(set(ph)) != L.n:
            return False, {"injective": False}
        for x in range(L.n):
            if not is_order_ideal(PP.order, ph[x]):
                return False, {"x": x, "ideal": False}
            for y in range(L.n):
                if ph[int(L.meet[x, y])] != ph[x] & ph[y] or ph[int(L.join[x, y])] != ph[x] | ph[y]:
                    return False, {"pair": [x, y]}
        return True

    R.check("phi_embedding", inst, phi_embed)

    def finitary():
        if any(w is None for w in PP.principal_witness):
            return False, {"secondary": True}
        for I in ideal_masks(PP.order):
            top = L.bottom
            for k in bits(I):
                top = int(L.join[top, PP.principal_witness[k]])
            if phi(L, top) != I:
                return False, {"ideal": list(bits(I))}
        return True

    R.check("finitary_phi_onto_prime_ideals", inst, finitary)

    def separates_pairs():
        for x in range(L.n):
            for y in range(L.n):
                if L.leq[x, y]:
                    continue
                p = separating_prime(L, x, y)
                if not (x in p and y not in p and is_prime_filter(p)):
                    return False, {"pair": [x, y]}
        return True

    R.check("prime_separates_incomparable_pair", inst, separates_pairs)

    def separates_filters():
        for f in F:
            for x in range(L.n):
                if x in f:
                    continue
                if not any(f.mask & ~p.mask == 0 and x not in p for p in PP.primes):
                    return False, {"filter": f.labels(), "x": x}
        return True

    R.check("prime_separates_filter_from_element", inst, separates_filters)


def check_nondistributive_rejected(R):
    for name, L in (("M3", m3()), ("N5", n5())):
        def rejected(L=L):
            if L.distributive:
                return False, {"distributive": True}
            a, b = (principal_filter(L, L.index_of(s)) for s in ("a", "b"))
            raw = union_meet_raw(a, b)
            try:
                union_meet(a, b)
            except NotDistributive:
                return True, None
            return False, {"raw": [L.label(i) for i in bits(raw)]}

        R.check("union_meet_rejects_nondistributive", name, rejected)

    def m3_raw():
        L = m3()
        raw = union_meet_raw(*(principal_filter(L, L.index_of(s)) for s in ("a", "b")))
        return [L.label(i) for i in bits(raw)] == ["0", "a", "b", "1"] and not is_lattice_filter(L, raw)

    R.check("union_meet_raw_set_on_m3", "M3", m3_raw)


def filter_suite(cfg):
    R = Reports()
    rng = cfg.rng(2)
    for k, L in enumerate(random_distributive_lattices(rng, cfg.filter_lattices, cfg.max_filter_lattice)):
        check_filters(R, L, f"lattice#{k}")
    check_nondistributive_rejected(R)
    return R


# -- locally-finite lattices ------------------------------------------------------------

def _grid_point(rng, n, lo, hi):
    return tuple(int(v) for v in rng.integers(lo, hi + 1, size=n))


def _subset(rng, universe, p=0.5):
    return tuple(sorted(int(k) for k in universe if rng.random() < p))


class _LFCases:
    """Random elements, coverings and primes for one built-in inside a window."""

    def __init__(self, L, rng, radius):
        self.L, self.rng, self.r = L, rng, radius
        self.grid = isinstance(L, GridLattice)
        self.lo = 0 if self.grid and L.nonneg else -radius

    def point(self):
        if self.grid:
            return _grid_point(self.rng, self.L.n, self.lo, self.r)
        return _subset(self.rng, range(self.r))

    def covering(self):
        while True:
            x = self.point()
            if self.grid:
                axis = int(self.rng.integers(self.L.n))
                if x[axis] < self.r:
                    return Covering(x, x[:axis] + (x[axis] + 1,) + x[axis + 1:])
            else:
                missing = [k for k in range(self.r) if k not in x]
                if missing:
                    k = int(self.rng.choice(missing))
                    return Covering(x, tuple(sorted(x + (k,))))

    def prime_outside(self, x):
        """A prime not containing ``x`` whose raise stays in the window, or None."""
        fam = self.L.family
        if self.grid:
            axes = [i for i in range(self.L.n) if x[i] < self.r]
            if not axes:
                return None
            axis = int(self.rng.choice(axes))
            return fam.prime(axis, int(self.rng.integers(x[axis] + 1, self.r + 1)))
        missing = [k for k in range(self.r) if k not in x]
        return fam.prime(int(self.rng.choice(missing))) if missing else None

    def prime_inside(self, x):
        fam = self.L.family
        if self.grid:
            axes = [i for i in range(self.L.n) if x[i] > self.lo]
            if not axes:
                return None
            axis = int(self.rng.choice(axes))
            return fam.prime(axis, int(self.rng.integers(self.lo + 1, x[axis] + 1)))
        return fam.prime(int(self.rng.choice(x))) if x else None


def _is_zgrid(L):
    return isinstance(L, GridLattice) and not L.nonneg


def _big_window(L, radius):
    if isinstance(L, BFinLattice):
        return interval(L, (), tuple(range(radius)))
    lo = 0 if L.nonneg else -radius
    return interval(L, (lo,) * L.n, (radius,) * L.n)


def check_lf(R, L, cfg, rng):
    fam = L.family
    W = _big_window(L, cfg.window_radius)
    C = _LFCases(L, rng, cfg.window_radius)
    name = L.name
    for k in range(cfg.lf_cases):
        inst = f"{name}#{k}"
        x = C.point()
        p = C.prime_outside(x)
        if p is not None:
            R.check("raise_matches_window_search", inst,
                    lambda: (raising(L, x, p) == window_raise(W, x, p), {"x": x, "prime": str(p)}))
        q = C.prime_inside(x)
        if q is not None:
            R.check("lower_matches_window_search", inst,
                    lambda: (lowering(L, x, ComplementDescriptor(q)) == window_lower(W, x, ComplementDescriptor(q)),
                             {"x": x, "prime": str(q)}))
        c = C.covering()

        def sep_check():
            s = separator(L, c.lower, c.upper)
            ws = W.separator(c.lower, c.upper)
            return ws.members == W.restrict(s), {"covering": str(c), "separator": str(s)}

        R.check("separator_matches_window_search", inst, sep_check)

        def diff_one():
            d = fam.sym_diff(fam.phi(c.lower), fam.phi(c.upper))
            wd = W.phi(c.upper) - W.phi(c.lower)
            return len(d) == 1 and len(wd) == 1 and W.phi(c.lower) <= W.phi(c.upper), {"covering": str(c)}

        R.check("covering_has_one_separator", inst, diff_one)
        a, b = C.point(), C.point()
        lo, hi = L.meet(a, b), L.join(a, b)

        def rank_check():
            r = rank_diff(L, lo, hi)
            short, long_ = window_rank_diff(W, lo, hi)
            sym = len(fam.sym_diff(fam.phi(lo), fam.phi(hi)))
            return r == short == long_ == sym, {"pair": [lo, hi], "rank": r, "window": [short, long_], "phi": sym}

        R.check("rank_diff_matches_window_search", inst, rank_check)

        def diff_n():
            sym = len(fam.sym_diff(fam.phi(a), fam.phi(b)))
            m = L.meet(a, b)
            return sym == rank_diff(L, m, a) + rank_diff(L, m, b), {"pair": [a, b]}

        R.check("phi_difference_is_rank_through_meet", inst, diff_n)
        _check_add_delete(R, L, C, inst)
    _check_window_structure(R, L, cfg, rng)


def _check_add_delete(R, L, C, inst):
    fam = L.family
    x = C.point()
    base = fam.phi(x)
    if C.grid:
        axis = int(C.rng.integers(L.n))
        level = int(x[axis] + C.rng.integers(-2, 4))
        p = fam.prime(axis, level) if not (C.lo == 0 and level < 1) else None
    else:
        p = fam.prime(int(C.rng.integers(0, C.r + 3)))
    if p is None:
        return
    if not p.member(x):
        def add():
            try:
                target = fam.from_base_delta(base, [p])
            except NotAnIdeal:
                y = raising(L, x, p)
                return not L.is_covering(x, y), {"x": x, "prime": str(p), "ideal": False}
            y = raising(L, x, p)
            ok = L.is_covering(x, y) and fam.normalize(fam.phi(y)) == fam.normalize(target)
            back = lowering(L, y, ComplementDescriptor(p)) == x
            return ok and back, {"x": x, "prime": str(p)}

        R.check("raise_adds_exactly_one_prime", inst, add)
    else:
        def delete():
            try:
                target = fam.from_base_delta(base, [p])
            except NotAnIdeal:
                y = lowering(L, x, ComplementDescriptor(p))
                return not L.is_covering(y, x), {"x": x, "prime": str(p), "ideal": False}
            y = lowering(L, x, ComplementDescriptor(p))
            ok = L.is_covering(y, x) and fam.normalize(fam.phi(y)) == fam.normalize(target)
            return ok and raising(L, y, p) == x, {"x": x, "prime": str(p)}

        R.check("lower_deletes_exactly_one_prime", inst, delete)


def _check_window_structure(R, L, cfg, rng):
    fam = L.family
    name = L.name
    small = _big_window(L, 4 if isinstance(L, BFinLattice) else 2)
    SL = small.as_lattice
    R.check("window_lattice_distributive", name, lambda: SL.distributive)
    for p in fam.primes_in_range(-3, 4):
        members = small.restrict(p)
        if not members or len(members) == len(small):
            continue
        mask = sum(1 << small.from_global(z) for z in members)
        R.check("descriptor_restricts_to_window_prime", f"{name}:{p}",
                lambda: is_lattice_filter(SL, mask) and is_prime_filter(LatticeFilter(SL, mask)))
    big = _big_window(L, cfg.window_radius)
    C = _LFCases(L, rng, 4 if isinstance(L, BFinLattice) else 2)
    for k in range(20):
        c = C.covering()
        R.check("separator_stable_under_window_growth", f"{name}#{k}",
                lambda: small.separator(c.lower, c.upper).members
                == big.separator(c.lower, c.upper).members & frozenset(small.elements))
    if _is_zgrid(L):
        lo = -cfg.window_radius
        for j in big.join_irreducibles:
            R.check("window_join_irreducibles_on_boundary", f"{name}:{j}", lambda: lo in j)


def lf_suite(cfg):
    R = Reports()
    for stream, L in ((3, ZGrid(2)), (4, BFin())):
        check_lf(R, L, cfg, cfg.rng(stream))
    return R


# -- transposes -------------------------------------------------------------------------

def check_chain(R, L, chain, inst, window=None):
    cs = chain.coverings
    R.check("transpose_chain_links", inst, lambda: chain.verify(L))

    def transitive():
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if not is_downward_transpose(L, cs[i], cs[j]):
                    return False, {"links": [i, j]}
        return True

    R.check("transpose_transitive", inst, transitive)

    def directed():
        for i in range(len(cs)):
            for j in range(i, len(cs)):
                for k in range(j, len(cs)):
                    w = directedness_witness(L, cs[i], cs[j], cs[k])
                    if w != cs[k]:
                        return False, {"links": [i, j, k]}
        return True

    R.check("transpose_directed", inst, directed)

    def preserved():
        if L.family is not None:
            seps = {separator(L, c.lower, c.upper) for c in cs}
        else:
            seps = set()
        wseps = set()
        if window is not None:
            wseps = {window.separator(c.lower, c.upper).members for c in cs}
        return len(seps) <= 1 and len(wseps) <= 1

    R.check("transpose_preserves_separator", inst, preserved)


def _chain_window(L, cs):
    lo = cs[0].lower
    hi = cs[0].upper
    for c in cs:
        lo, hi = L.meet(lo, c.lower), L.join(hi, c.upper)
    return interval(L, lo, hi)


def check_descent(R, L, c, budget, inst):
    chain, finished = descend(L, c, budget)
    W = _chain_window(L, chain.coverings)
    check_chain(R, L, chain, inst, W)
    if finished:
        g = chain.coverings[-1].upper

        def sound():
            members = frozenset(z for z in W.elements if L.leq(g, z))
            ok = len(L.lower_covers(g)) == 1 and members == W.separator(c.lower, c.upper).members
            if L.family is not None:
                ok = ok and separator(L, c.lower, c.upper).generator == g
            return ok, {"generator": g}

        R.check("descent_stops_at_generator", inst, sound)
    return chain, finished


def transpose_suite(cfg):
    R = Reports()
    rng = cfg.rng(5)
    Z = ZGrid(2)
    CZ = _LFCases(Z, rng, cfg.window_radius)
    for k in range(cfg.grid_chains):
        check_descent(R, Z, CZ.covering(), cfg.chain_budget, f"ZGrid(2)#{k}")
    B = BFin()
    CB = _LFCases(B, rng, cfg.window_radius)
    for k in range(cfg.lf_cases // 4):
        c = CB.covering()
        check_descent(R, B, c, len(c.upper) + 1, f"BFin#{k}")
    lattices = random_distributive_lattices(rng, cfg.lf_cases, cfg.max_filter_lattice)
    for k, FLat in enumerate(lattices):
        A = FiniteAdapter(FLat)
        a, b = (int(v) for v in rng.choice(FLat.poset.covers)) if FLat.poset.covers else (0, 0)
        check_descent(R, A, Covering(a, b), FLat.n + 1, f"finite#{k}")
    return R


def check_classifier(R, L, c, budget, inst):
    v = classify_prime(L, c, budget)
    if isinstance(L, BFinLattice):
        (k,) = set(c.upper) - set(c.lower)
        ok = (v.verdict == "principal" and v.generator == (k,) and v.chain_length == len(c.upper)
              and v.oracle_kind == "principal")
        R.record("classifier_bfin_principal", inst, ok, {"covering": str(c), "verdict": v.verdict})
    elif _is_zgrid(L):
        ok = v.verdict == "budget_exceeded" and v.oracle_kind == "secondary" and v.chain_length == budget
        R.record("classifier_zgrid_budget_exceeded", inst, ok, {"covering": str(c), "verdict": v.verdict})
    else:
        ok = (v.verdict == "principal" and v.oracle_kind == "principal"
              and v.separator.generator == v.generator)
        R.record("classifier_ngrid_principal", inst, ok, {"covering": str(c), "verdict": v.verdict})


def classifier_suite(cfg):
    R = Reports()
    rng = cfg.rng(6)
    for L in (BFin(), ZGrid(2), NGrid(2)):
        C = _LFCases(L, rng, cfg.window_radius)
        for k in range(cfg.lf_cases):
            check_classifier(R, L, C.covering(), cfg.chain_budget, f"{L.name}#{k}")
    return R


# -- representation ----------------------------------------------------------------------

def _random_ideal(L, C):
    """A finitely presented ideal built from ``phi(x0)`` and an explicit delta."""
    fam = L.family
    x0 = C.point()
    target = C.point()
    if C.grid:
        delta = [fam.prime(i, k) for i in range(L.n)
                 for k in range(min(x0[i], target[i]) + 1, max(x0[i], target[i]) + 1)]
    else:
        delta = [fam.prime(k) for k in sorted(set(x0) ^ set(target))]
    return x0, fam.from_base_delta(fam.phi(x0), delta)


def check_representation(R, L, cfg, rng):
    fam = L.family
    C = _LFCases(L, rng, cfg.window_radius)
    name = L.name
    for k in range(cfg.lf_cases):
        inst = f"{name}#{k}"
        x, x0 = C.point(), C.point()

        def roundtrip():
            tr = inverse_phi_trace(L, x0, fam.phi(x))
            steps = len(fam.sym_diff(fam.phi(x0), fam.phi(x)))
            return tr.element == x and len(tr.steps) == steps, {"x0": x0, "x": x}

        R.check("inverse_phi_after_phi_is_identity", inst, roundtrip)
        y0, Q = _random_ideal(L, C)

        def back():
            tr = inverse_phi_trace(L, y0, Q)
            ok = fam.normalize(fam.phi(tr.element)) == fam.normalize(Q)
            moves = all(L.is_covering(a, b) or L.is_covering(b, a)
                        for a, b in zip([y0] + [s.element for s in tr.steps], [s.element for s in tr.steps]))
            return ok and moves and len(tr.steps) == len(fam.sym_diff(fam.phi(y0), Q)), {"x0": y0, "ideal": str(Q)}

        R.check("phi_after_inverse_phi_is_identity", inst, back)
    for k in range(cfg.lf_cases // 4):
        inst = f"{name}#{k}"
        a, b = C.point(), C.point()
        Qa, Qb = fam.phi(a), fam.phi(b)

        def closure():
            lo, hi = dp_ops(L, Qa, Qb)
            ok = all(fam.in_dp(R_, Q_) for R_ in (lo, hi) for Q_ in (Qa, Qb))
            return ok and lo == fam.phi(L.meet(a, b)) and hi == fam.phi(L.join(a, b))

        R.check("finite_difference_ideals_closed_under_meet_join", inst, closure)
        R.check("finite_difference_ideals_convex", inst, lambda: _convex(L, C, a))
    _check_components(R, L, rng)


def _convex(L, C, a):
    """Every ideal between ``phi(a)`` and a small enlargement of it is at
    finite distance; the count of such ideals matches the expected shape."""
    fam = L.family
    Q1 = fam.phi(a)
    if C.grid:
        ups = [int(v) for v in C.rng.integers(0, 3, size=L.n)]
        delta = [fam.prime(i, a[i] + d) for i in range(L.n) for d in range(1, ups[i] + 1)]
        expected = int(np.prod([u + 1 for u in ups]))
    else:
        extra = [k for k in range(C.r, C.r + 6) if C.rng.random() < 0.5]
        delta = [fam.prime(k) for k in extra]
        expected = 1 << len(delta)
    count = 0
    for r in range(len(delta) + 1):
        for S in itertools.combinations(delta, r):
            try:
                R_ = fam.from_base_delta(Q1, list(S))
            except NotAnIdeal:
                continue
            count += 1
            if not fam.in_dp(R_, Q1):
                return False, {"ideal": str(R_)}
    return count == expected, {"count": count, "expected": expected}


def _check_components(R, L, rng):
    name = L.name
    rep = components_symbolic(L)
    labels = {c.label for c in rep.classes}
    fam = L.family
    for k in range(50):
        if isinstance(L, BFinLattice):
            base = [EMPTY_SET, PeriodicSet.make(1, [0]), PeriodicSet.make(3, [1])][k % 3]
            Q = SetIdeal.make(base, set(int(v) for v in rng.integers(0, 12, size=3)))
        else:
            Q = LevelIdeal(tuple(rng.choice([-INF, INF, int(rng.integers(-5, 6))]) for _ in range(L.n)))
        R.check("ideal_belongs_to_one_component_class", f"{name}#{k}",
                lambda: component_label(L, Q) in labels | {"middle"})
        if _is_zgrid(L):
            reps = [c for c in rep.classes if fam.in_dp(c.representative, Q)]
            R.check("ideal_belongs_to_one_component_class", f"{name}#{k}:rep", lambda: len(reps) == 1)


def components_finite_suite(cfg, R):
    for n in range(1, cfg.max_poset_size + 1):
        for k, P in enumerate(natural_posets(n)):
            def edges_are_covers(P=P):
                masks, edges = ideal_graph(P)
                L = ideal_lattice(P)
                pos = {m: i for i, m in enumerate(L.element_masks)}
                mapped = sorted(tuple(sorted((pos[masks[a]], pos[masks[b]]))) for a, b in edges)
                return (mapped == sorted(tuple(sorted(c)) for c in L.poset.covers)
                        and components_finite(P).finite_classes == 1)

            R.check("ideal_graph_edges_are_covers", f"poset{n}#{k}", edges_are_covers)

    def symbolic_counts():
        z2 = components_symbolic(ZGrid(2))
        b = components_symbolic(BFin())
        z1 = components_symbolic(ZGrid(1))
        return (len(z2.classes) == 9 and z2.classes[0].iso_type == "ℤ×ℤ" and len(z1.classes) == 3
                and [c.label for c in b.classes] == ["bottom", "top", "middle"])

    R.check("symbolic_component_counts", "builtins", symbolic_counts)


def representation_suite(cfg):
    R = Reports()
    for stream, L in ((7, ZGrid(2)), (8, ZGrid(3)), (9, BFin())):
        check_representation(R, L, cfg, cfg.rng(stream))
    components_finite_suite(cfg, R)
    return R


# -- driver ------------------------------------------------------------------------------

SUITES = {
    "birkhoff": birkhoff_suite,
    "filters": filter_suite,
    "locally_finite": lf_suite,
    "transpose": transpose_suite,
    "classifier": classifier_suite,
    "representation": representation_suite,
}


def check_extra_lattice(R, L, inst):
    """Checks applicable to an arbitrary user-supplied finite lattice."""
    check_birkhoff(R, L, inst)
    if L.n <= 16 and L.distributive:
        check_filters(R, L, inst)


def run_verify(cfg=None, suites=None, extra_lattices=()):
    """Run the selected suites (all by default) and return the JSON report."""
    cfg = cfg or SuiteConfig()
    R = Reports()
    names = list(SUITES) if suites is None else list(suites)
    for name in names:
        R.extend(SUITES[name](cfg))
    for k, L in enumerate(extra_lattices):
        check_extra_lattice(R, L, f"extra#{k}")
    lemmas = R.to_list()
    failures = R.failures
    return {
        "config": asdict(cfg),
        "suites": names,
        "lemmas": lemmas,
        "totalInstances": sum(r["instances"] for r in lemmas),
        "failureCount": len(failures),
        "firstFailure": failures[0] if failures else None,
        "ok": not failures,
    }


def report_json(report):
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

"""A tour of the finite case: a distributive lattice is the lattice of
order ideals of its join-irreducibles, and its prime filters are exactly
the principal filters of those join-irreducibles.

Run with ``python3 notebooks/01_birkhoff_tour.py``.
"""
import numpy as np

from lfbirkhoff import (
    birkhoff_iso_check, divisor_lattice, enumerate_filters, ideal_lattice, join_irreducibles, m3,
    poset_from_covers, prime_poset, separating_prime, union_meet,
)
from lfbirkhoff.errors import NotDistributive

# %% Divisors of 12 under divisibility
L = divisor_lattice(12)
print("elements:", [L.label(x) for x in range(L.n)])
print("join-irreducibles:", [L.label(j) for j in join_irreducibles(L)])

# %% The Birkhoff map sends each element to the join-irreducibles below it
rep = birkhoff_iso_check(L)
J, idx = L.join_irreducible_poset
for x, mask in enumerate(rep.forward):
    below = [L.label(idx[k]) for k in range(len(idx)) if mask >> k & 1]
    print(f"  {L.label(x):>3} -> {{{', '.join(below)}}}")
print("isomorphism holds:", rep.holds, "| ideals of J:", rep.ideal_count)

# %% Going the other way: a poset gives a lattice of ideals
fence = poset_from_covers(4, [(0, 1), (2, 1), (2, 3)])
F = ideal_lattice(fence)
print("fence ideals:", F.n)
print("meet table of the fence ideal lattice:")
print(np.asarray(F.meet))

# %% Filters ordered by reverse inclusion; the primes are PF(j)
filters = enumerate_filters(L)
print("filters:", len(filters.filters))
PP = prime_poset(L)
print("prime filters:", PP.order.labels)

# %% Primes separate elements
labels = [L.label(z) for z in range(L.n)]
x, y = labels.index("4"), labels.index("6")
p = separating_prime(L, x, y)
print("a prime containing 4 but not 6:", p.labels())

# %% Union-meet of filters is the meet-closure of their union; M3 is rejected
f, g = filters.filters[1], filters.filters[2]
print(f, "and", g, "-> union-meet", union_meet(f, g))
try:
    enumerate_filters(m3())
except NotDistributive as exc:
    print("M3:", exc)

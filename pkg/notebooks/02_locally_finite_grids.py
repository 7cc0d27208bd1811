"""Infinite but locally finite: the grid Z^2 and the finite subsets of N.

Elements are handled lazily.  Primes are symbolic, so raising, lowering and
separators never enumerate anything infinite; a finite interval is only
built to cross-check the symbolic answers.

Run with ``python3 notebooks/02_locally_finite_grids.py``.
"""
from lfbirkhoff import BFin, ComplementDescriptor, ZGrid, interval, lowering, raising, rank_diff, separator
from lfbirkhoff.lazylf import window_raise

# %% Z^2: every covering is separated by a threshold prime
Z = ZGrid(2)
lo, hi = (0, 0), (1, 0)
p = separator(Z, lo, hi)
print("separator of (0,0) < (1,0):", p)
print("raise (0,-3) through it:", raising(Z, (0, -3), p))

# %% The same answer inside a finite window
W = interval(Z, (-3, -3), (3, 3))
print("window size:", len(W), "| distributive:", W.as_lattice.distributive)
print("window raise agrees:", window_raise(W, (0, -3), p) == raising(Z, (0, -3), p))

# %% Rank differences along saturated chains
print("rank_diff (0,0) -> (2,3):", rank_diff(Z, (0, 0), (2, 3)))

# %% BFin: finite subsets of N, primes are 'contains k'
B = BFin()
q = separator(B, (1, 3), (1, 3, 5))
print("separator of {1,3} < {1,3,5}:", q)
print("lower {2,5,7} out of it:", lowering(B, (2, 5, 7), ComplementDescriptor(q)))
print("rank_diff {} -> {0,4,9}:", rank_diff(B, (), (0, 4, 9)))

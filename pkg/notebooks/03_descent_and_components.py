"""Telling principal separators from secondary ones by descending through
downward transposes, and counting the components of the ideal space.

Run with ``python3 notebooks/03_descent_and_components.py``.
"""
import json

from lfbirkhoff import (
    BFin, Covering, NGrid, ZGrid, antichain, classify_prime, components_finite, components_symbolic,
    conjecture_probe, ideal_from, inverse_phi_trace,
)

# %% BFin: the descent stops at the singleton generating the separator
B = BFin()
v = classify_prime(B, Covering((1, 3), (1, 3, 5)))
print("BFin:", v.verdict, "generator", v.generator, "chain length", v.chain_length)
for c in v.chain:
    print("   ", c)

# %% N^2 stops at an axis point; Z^2 never stops
print("NGrid(2):", classify_prime(NGrid(2), Covering((2, 3), (3, 3))).verdict)
v = classify_prime(ZGrid(2), Covering((0, 0), (1, 0)), budget=12)
print("ZGrid(2):", v.verdict, "after", v.chain_length, "coverings; oracle says", v.oracle_kind)

# %% Walking from an element to a nearby ideal, one cover move per prime
Z = ZGrid(2)
fam = Z.family
Q = ideal_from(Z, fam.phi((0, 0)), [fam.prime(0, 1), fam.prime(0, 2), fam.prime(1, 0)])
trace = inverse_phi_trace(Z, (0, 0), Q)
for s in trace.steps:
    print(f"   {s.action:<6} {s.prime}  ->  {s.element}")
print("element:", trace.element)

# %% Components of the ideal space
print(json.dumps(components_symbolic(ZGrid(2)).to_json()["counts"]))
print(json.dumps(components_symbolic(BFin()).to_json()["counts"], ensure_ascii=False))
print("antichain of 3, finite ideal graph:", components_finite(antichain(3)).finite_classes, "component")

# %% Widths next to component counts, numbers only
print(conjecture_probe(ZGrid(2), radius=2))

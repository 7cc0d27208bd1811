"""Distributive lattices, their prime filters, and representations of
locally-finite distributive lattices by order ideals of the prime poset."""

from .errors import *  # noqa: F401,F403
from .poset import (
    OrderIdeal, Poset, antichain, chain, ideal_lattice, ideal_masks, is_order_filter, is_order_ideal,
    order_ideals, poset_from_covers, poset_from_json, poset_to_json, width,
)
from .finlat import (
    FiniteLattice, IsoReport, birkhoff_iso_check, birkhoff_map, boolean_lattice, chain_lattice,
    divisor_lattice, is_distributive, join_irreducibles, lattice_from_json, lattice_from_poset, m3,
    meet_irreducibles, n5, rank_info,
)
from .filters import (
    FilterLattice, LatticeFilter, LatticeIdeal, PrimePoset, complement, enumerate_filters,
    is_lattice_filter, is_lattice_ideal, is_prime_filter, is_prime_ideal, ji_prime_check, phi,
    prime_poset, principal_filter, principal_ideal, separating_prime, union_join, union_meet,
)
from .descriptors import (
    ComplementDescriptor, ContainsPrime, FiniteIdeal, FinitePrime, LevelIdeal, PeriodicSet,
    ProductIdeal, ProductPrime, SetIdeal, ThresholdPrime, WindowPrime,
)
from .lazylf import (
    BFin, FiniteAdapter, LocallyFiniteLattice, NGrid, Product, WindowLattice, ZGrid, builtin,
    interval, lowering, phi_restricted, primes_of, raising, rank_diff, separator,
)
from .transpose import (
    Covering, TransposeChain, Verdict, classify_prime, descend, directedness_witness, down_step,
    is_downward_transpose,
)
from .representation import (
    ComponentReport, components_finite, components_symbolic, conjecture_probe, dp_ops, ideal_from,
    in_dp, inverse_phi, inverse_phi_trace,
)
from .plugin import PluginLattice
from .verify import SuiteConfig, run_verify

__version__ = "0.1.0"

"""Optimal cycle-covering orientation families for complete graphs, with
exhaustive verifiers, facet-orientation rounds, and k-independent set
families."""

from .core import (
    OrientationFamily,
    Tournament,
    Witness,
    deserialize,
    direction,
    has_hamiltonian_cycle,
    induced_subtournament,
    serialize,
)
from .cycling import (
    ConstructionParams,
    clockwise_gap,
    construct_family,
    exact_min_search,
    f_value,
    lower_bound,
    pigeonhole_witness,
)
from .verifier import check_all_orderings, check_increasing, check_weak
from .simplex import (
    FacetSigning,
    SimplexRoundFamily,
    check_simplex_family,
    induced_sign,
    is_consistent,
    lll_round_budget,
    max_consistent_per_round,
    permutation_parity,
    randomized_construct,
)
from .indep import (
    SetFamily,
    derive_orientations,
    is_k_independent,
    randomized_family,
    w_upper_pipeline,
)

__version__ = "0.1.0"

__all__ = [
    "ConstructionParams",
    "FacetSigning",
    "OrientationFamily",
    "SetFamily",
    "SimplexRoundFamily",
    "Tournament",
    "Witness",
    "check_all_orderings",
    "check_increasing",
    "check_simplex_family",
    "check_weak",
    "clockwise_gap",
    "construct_family",
    "derive_orientations",
    "deserialize",
    "direction",
    "exact_min_search",
    "f_value",
    "has_hamiltonian_cycle",
    "induced_sign",
    "induced_subtournament",
    "is_consistent",
    "is_k_independent",
    "lll_round_budget",
    "lower_bound",
    "max_consistent_per_round",
    "permutation_parity",
    "pigeonhole_witness",
    "randomized_construct",
    "randomized_family",
    "serialize",
    "w_upper_pipeline",
]

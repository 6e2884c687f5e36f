"""Monomial ideal combinatorics.

Exact arithmetic on monomial ideals (minimal generators, colon, product,
intersection), primary decomposition with independent brute-force oracles,
exchange-property checks and constructors for structured families,
classifiers for unmixed structure, and exhaustive verification harnesses.
"""

from .classify import (
    Classification,
    HeightBoundsReport,
    HypergraphProfile,
    MaximalPower,
    NotUnmixed,
    PrimePowerProduct,
    PrimePowerTimesMatroidal,
    UnmixedMatroidal,
    classify_unmixed_polymatroidal,
    cm_shape,
    height_bounds_report,
    hypergraph_profile,
    is_cohen_macaulay,
    is_connected_in_codim_one,
    reconstruct,
)
from .config import VERSION as __version__
from .decomposition import (
    IrreducibleComponent,
    PrimePowerDecomposition,
    associated_primes,
    brute_force_ass,
    height,
    irreducible_decomposition,
    is_unmixed,
    minimal_primes,
    prime_power_decomposition,
)
from .harness import (
    EnumerationSpec,
    VerificationReport,
    cross_check_ass,
    enumerate_matroidal,
    reference_cases,
    sample_polymatroidal,
    verify_classification_cases,
    verify_closure_properties,
    verify_unmixed_profile_equivalence,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariablePrime,
    colon,
    equigenerated_degree,
    intersect,
    minimalize,
    multiply,
    restrict_to_support,
    support,
)
from .polymatroid import (
    BlockPartition,
    VeroneseTypeSpec,
    colon_equivalence_blocks,
    construct_multipartite_edge_ideal,
    construct_prime_power_product,
    construct_veronese_type,
    is_matroidal,
    is_polymatroidal,
)
from .textio import emit_report, parse_ideal, parse_monomial

"""Exact invariants of nilpotent Lie algebras given by structure constants.

The package constructs free-nilpotent, metabelian, graph, and filiform
algebras over the rationals and computes the index (minimal stabilizer
dimension of a linear functional) together with supporting invariants,
using randomized modular rank with an optional certified exact route.
"""

from __future__ import annotations

from .algebra import (
    LieAlgebra,
    NotAbelianError,
    NotAnIdealError,
    Subspace,
    abelian_witness,
    bracket_span,
    center,
    centralizer,
    check_jacobi,
    derived_subalgebra_pair,
    ideal_closure,
    is_abelian_subalgebra,
    lower_central_series,
    nilpotency_class,
    quotient,
    subalgebra_generated,
)
from .filiform import (
    FiliformAlgebra,
    IndexOneResult,
    achievable_indices,
    adapted_violation,
    build_G,
    build_L,
    build_Q,
    filiform_ideals,
    index_one_criterion,
    lower_bound,
    make_filiform,
    random_adapted_deformation,
)
from .free_nilpotent import (
    DEFAULT_MAX_DIM,
    FreeNilpotentAlgebra,
    HallBasisElement,
    ResourceLimitError,
    build_fg3_explicit_basis,
    build_free_nilpotent,
    build_metabelian,
    witt_dimension,
    witt_layer,
)
from .graphs import (
    GraphIndexResult,
    SimpleGraph,
    build_graph_algebra,
    graph_index,
    matching_functional,
    matching_number,
    matching_number_exhaustive,
    matching_stabilizer_dim,
    maximum_matching,
    validate_matching,
)
from .index import (
    CERTIFY_DIM_LIMIT,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    AlphaSandwich,
    CertifySizeError,
    IndexReport,
    LinearFunctional,
    OomsResult,
    StabilizerResult,
    StructureMatrix,
    alpha_sandwich,
    b_ell_matrix,
    certified_generic_rank,
    generic_rank,
    index,
    index_by_sampling,
    ooms_criterion,
    stabilizer,
)
from .linalg import DEFAULT_PRIME
from .serialize import (
    algebra_from_dict,
    algebra_to_dict,
    dumps,
    format_scalar,
    functional_from_dict,
    functional_to_dict,
    parse_scalar,
    report_to_dict,
    stabilizer_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaSandwich",
    "CERTIFY_DIM_LIMIT",
    "CertifySizeError",
    "DEFAULT_MAX_DIM",
    "DEFAULT_PRIME",
    "DEFAULT_SEED",
    "DEFAULT_TRIALS",
    "FiliformAlgebra",
    "FreeNilpotentAlgebra",
    "GraphIndexResult",
    "HallBasisElement",
    "IndexOneResult",
    "IndexReport",
    "LieAlgebra",
    "LinearFunctional",
    "NotAbelianError",
    "NotAnIdealError",
    "OomsResult",
    "ResourceLimitError",
    "SimpleGraph",
    "StabilizerResult",
    "StructureMatrix",
    "Subspace",
    "abelian_witness",
    "achievable_indices",
    "adapted_violation",
    "algebra_from_dict",
    "algebra_to_dict",
    "alpha_sandwich",
    "b_ell_matrix",
    "bracket_span",
    "build_G",
    "build_L",
    "build_Q",
    "build_fg3_explicit_basis",
    "build_free_nilpotent",
    "build_graph_algebra",
    "build_metabelian",
    "center",
    "centralizer",
    "certified_generic_rank",
    "check_jacobi",
    "derived_subalgebra_pair",
    "dumps",
    "filiform_ideals",
    "format_scalar",
    "functional_from_dict",
    "functional_to_dict",
    "generic_rank",
    "graph_index",
    "ideal_closure",
    "index",
    "index_by_sampling",
    "index_one_criterion",
    "is_abelian_subalgebra",
    "lower_bound",
    "lower_central_series",
    "make_filiform",
    "matching_functional",
    "matching_number",
    "matching_number_exhaustive",
    "matching_stabilizer_dim",
    "maximum_matching",
    "nilpotency_class",
    "ooms_criterion",
    "parse_scalar",
    "quotient",
    "random_adapted_deformation",
    "report_to_dict",
    "stabilizer",
    "stabilizer_to_dict",
    "subalgebra_generated",
    "validate_matching",
    "witt_dimension",
    "witt_layer",
]

"""Exact-arithmetic path algebras of acyclic quivers and their derivation
structure: ordinary, Jordan and Lie derivation spaces, standard
decompositions, Pierce/triangular block analysis, and a batch CLI.
"""

from .algebra import (
    Path,
    PathAlgebra,
    Relation,
    build_algebra,
    enumerate_paths,
    load_algebra,
    multiply_paths,
)
from .derivations import (
    DecompositionReport,
    LinMap,
    MapSpace,
    center,
    center_valued_derivations_trivial,
    central_map_space,
    center_valued_map_space,
    commutator_subspace,
    derivation_space,
    derivation_support_check,
    generalized_jordan_space,
    inner_derivation,
    is_derivation,
    is_jordan_derivation,
    is_lie_derivation,
    jordan_derivation_space,
    jordan_generalized_space,
    lie_characterization_check,
    lie_derivation_space,
    lie_vertex_constants,
    standard_decompose,
)
from .errors import (
    BlockLeakError,
    CharTwoFieldError,
    CyclicQuiverError,
    DimensionMismatchError,
    DisconnectedQuiverError,
    HasRelationsError,
    NonUniqueDecompositionError,
    NotASourceError,
    NotIdempotentError,
    NotLieDerivationError,
    ParseError,
    PathAlgError,
    RelationError,
    TheoremViolationError,
)
from .fields import PrimeField, QQ, Rationals, field_from_name
from .linalg import Matrix, Subspace, subspace_eq, subspace_intersect, subspace_sum
from .parser import QuiverDocument, RelationSpec, parse_quiver, serialize_quiver
from .quiver import Quiver, is_connected, sinks, sources, validate_acyclic
from .structure import (
    PeelReport,
    PierceBlocks,
    TriangularForm,
    bimodule_faithful,
    extract_triangular_form,
    left_annihilator,
    one_point_peel,
    pierce_decompose,
    right_annihilator,
    saturated_subalgebra,
    source_peel_verify,
)

__version__ = "0.1.0"

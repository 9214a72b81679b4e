"""Skew-polynomial matroids over finite fields.

Arithmetic in twisted polynomial rings, conjugacy classes and the warping
map, minimal polynomials with their closure operator, the induced matroid
(flats, rank, representation over the base field, flat metric), the
subspace-to-flat isometry, and a network-coding simulator whose packets are
single field elements.
"""

from .conjugacy import (
    class_elements,
    class_invariance_holds,
    class_label,
    class_of,
    conjugate,
    unwarp,
    unwarp_method1,
    unwarp_method2,
    warp,
)
from .errors import (
    BadDegreeDivisibility,
    DivisionByZero,
    DivisionByZeroPoly,
    DomainError,
    EmptyInput,
    FieldTooLarge,
    GcdViolation,
    InapplicableField,
    MixedClasses,
    MixedContexts,
    NonPrimeP,
    NonPrimitiveModpoly,
    NotC1Flat,
    NotClosed,
    ParseError,
    RankOutOfRange,
    SpecInvalid,
    TooLargeToEnumerate,
    WrongClass,
    ZeroArgument,
    ZeroConjugator,
    ZeroInput,
)
from .field import Fe, FieldCtx, ONE, ZERO, field_from_spec, get_field
from .matroid import (
    Flat,
    IsometryReport,
    RepMatrix,
    Subspace,
    all_subspaces,
    class_flat,
    columns_independent,
    dist,
    flats,
    matroid_closure,
    phi,
    phi_inverse,
    rank,
    representation,
    subspace_dist,
    subspace_sum,
    verify_isometry,
)
from .minimal import (
    canonical_points,
    closure,
    decompose_check,
    is_p_independent,
    lift,
    minimal_poly,
    p_basis,
    rank_of,
)
from .netsim import (
    NetSpec,
    OracleTrialReport,
    TrialReport,
    encode_message,
    relay_forward,
    rlnc_oracle_trial,
    run_trial,
    simulate,
)
from .skewpoly import AssocPoly, SkewPoly, eval_product, grcd, llcm

__version__ = "0.1.0"

__all__ = [
    "AssocPoly",
    "BadDegreeDivisibility",
    "DivisionByZero",
    "DivisionByZeroPoly",
    "DomainError",
    "EmptyInput",
    "Fe",
    "FieldCtx",
    "FieldTooLarge",
    "Flat",
    "GcdViolation",
    "InapplicableField",
    "IsometryReport",
    "MixedClasses",
    "MixedContexts",
    "NetSpec",
    "NonPrimeP",
    "NonPrimitiveModpoly",
    "NotC1Flat",
    "NotClosed",
    "ONE",
    "OracleTrialReport",
    "ParseError",
    "RankOutOfRange",
    "RepMatrix",
    "SkewPoly",
    "SpecInvalid",
    "Subspace",
    "TooLargeToEnumerate",
    "TrialReport",
    "WrongClass",
    "ZERO",
    "ZeroArgument",
    "ZeroConjugator",
    "ZeroInput",
    "all_subspaces",
    "canonical_points",
    "class_elements",
    "class_flat",
    "class_invariance_holds",
    "class_label",
    "class_of",
    "closure",
    "columns_independent",
    "conjugate",
    "decompose_check",
    "dist",
    "encode_message",
    "eval_product",
    "field_from_spec",
    "flats",
    "get_field",
    "grcd",
    "is_p_independent",
    "lift",
    "llcm",
    "matroid_closure",
    "minimal_poly",
    "p_basis",
    "phi",
    "phi_inverse",
    "rank",
    "rank_of",
    "relay_forward",
    "representation",
    "rlnc_oracle_trial",
    "run_trial",
    "simulate",
    "subspace_dist",
    "subspace_sum",
    "unwarp",
    "unwarp_method1",
    "unwarp_method2",
    "verify_isometry",
    "warp",
]

"""Exact K-ring calculator for degree-zero vector bundles on an elliptic curve.

Tensor arithmetic of Atiyah bundles, an independent Laurent-character oracle,
and the classification of S(E), R(E), and the minimal trivializing group
scheme, with the dimension correspondence dim R(E) = dim G checkable on any
grid of inputs.
"""

from .bundles import (
    BundleSum,
    ContextMismatchError,
    IndecomposableBundle,
    KRingElement,
    TorsionContext,
    det_exponent,
    dual,
    rank,
    sym_power_f2,
    tensor,
    tensor_indec,
    tensor_power,
)
from .characters import (
    BivariateCharacter,
    NotACharacterError,
    OracleCheck,
    bracket,
    character,
    decompose_character,
    oracle_check,
)
from .classify import (
    ClassificationReport,
    GridCell,
    GroupScheme,
    IndexFamily,
    IntegerPolynomial,
    P1SSet,
    PresentationKind,
    RingPresentation,
    SSetDescription,
    classify,
    correspondence_grid,
    express_in_generator,
    krull_dimension,
    p1_classify,
    p1_s_set_enumerate,
    s_set_enumerate,
    s_set_reachable,
    s_set_symbolic,
)
from .expressions import (
    ExpressionError,
    evaluate_expression,
    format_bundle_sum,
    parse_expression,
)

__version__ = "0.1.0"

__all__ = [
    "BivariateCharacter",
    "BundleSum",
    "ClassificationReport",
    "ContextMismatchError",
    "ExpressionError",
    "GridCell",
    "GroupScheme",
    "IndecomposableBundle",
    "IndexFamily",
    "IntegerPolynomial",
    "KRingElement",
    "NotACharacterError",
    "OracleCheck",
    "P1SSet",
    "PresentationKind",
    "RingPresentation",
    "SSetDescription",
    "TorsionContext",
    "bracket",
    "character",
    "classify",
    "correspondence_grid",
    "decompose_character",
    "det_exponent",
    "dual",
    "evaluate_expression",
    "express_in_generator",
    "format_bundle_sum",
    "krull_dimension",
    "oracle_check",
    "p1_classify",
    "p1_s_set_enumerate",
    "parse_expression",
    "rank",
    "s_set_enumerate",
    "s_set_reachable",
    "s_set_symbolic",
    "sym_power_f2",
    "tensor",
    "tensor_indec",
    "tensor_power",
]

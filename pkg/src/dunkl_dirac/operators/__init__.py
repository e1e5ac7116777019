"""Operator expressions, Dunkl-Dirac operators and their realizations."""

from .dunkl import dirac_D, dunkl_T, euler, laplace, norm2, pair_operator, position_X, reflection_product
from .expr import (
    IDENTITY,
    ZERO,
    CliffordLeft,
    Compose,
    EvaluationCache,
    Identity,
    MulCoord,
    Named,
    OperatorExpr,
    ParityFlip,
    Partial,
    Reflect,
    ReflectionQuotient,
    ScalarMul,
    Sum,
    anticommutator,
    commutator,
    scalar,
    scaled,
)
from .oracle import EqualityResult, operators_equal_on_degree
from .realization import (
    CliffordRealization,
    Realization,
    RealizationKind,
    ScalarRealization,
    get_realization,
    osp_relations,
    square_relations,
)
from .scalar import scalar_D, scalar_gamma, scalar_X

__all__ = [
    "IDENTITY",
    "ZERO",
    "CliffordLeft",
    "CliffordRealization",
    "Compose",
    "EqualityResult",
    "EvaluationCache",
    "Identity",
    "MulCoord",
    "Named",
    "OperatorExpr",
    "ParityFlip",
    "Partial",
    "Realization",
    "RealizationKind",
    "Reflect",
    "ReflectionQuotient",
    "ScalarMul",
    "ScalarRealization",
    "Sum",
    "anticommutator",
    "commutator",
    "dirac_D",
    "dunkl_T",
    "euler",
    "get_realization",
    "laplace",
    "norm2",
    "operators_equal_on_degree",
    "osp_relations",
    "pair_operator",
    "position_X",
    "reflection_product",
    "scalar",
    "scalar_D",
    "scalar_X",
    "scalar_gamma",
    "scaled",
    "square_relations",
]

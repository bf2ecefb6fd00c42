"""Exact twisted loop algebras of the second kind and their finite-dimensional irreducibles."""

from .classifier import (
    ClassificationResult,
    classify_case,
    classify_general,
    detect_recurrence,
    synthesize_general,
    synthesize_moments,
)
from .combinatorics import Monoid
from .dynkin import affine_diagram, parse_diagram
from .field import Scalar, format_scalar, parse_scalar
from .lie import get_case
from .moments import MomentData
from .representations import TensorModule, highest_weight_functional, simple_quotient_dim, tensor_from_params

__all__ = [
    "ClassificationResult",
    "MomentData",
    "Monoid",
    "Scalar",
    "TensorModule",
    "affine_diagram",
    "classify_case",
    "classify_general",
    "detect_recurrence",
    "format_scalar",
    "get_case",
    "highest_weight_functional",
    "parse_diagram",
    "parse_scalar",
    "simple_quotient_dim",
    "synthesize_general",
    "synthesize_moments",
    "tensor_from_params",
]

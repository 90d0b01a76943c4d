"""Irredundant orthogonal arrays from linear codes over small finite fields."""

from ._version import __version__
from .caps import DEFAULT_CAPS, Caps
from .code import (
    LinearCode,
    WeightDistribution,
    code_from_generator,
    dual,
    dual_distance,
    is_mds,
    is_self_dual,
    min_distance,
    same_code,
    weight_distribution,
)
from .constructions import (
    GRMParams,
    GRSSpec,
    grm_code,
    grm_evaluation_matrix,
    grm_params,
    grs_code,
    grs_generator,
    grs_spec,
    rm_code,
    rm_dimension,
    rm_generator,
    search_self_dual_grs,
)
from .exceptions import CapExceeded, IroaError, ParameterError
from .field import FieldElement, FieldSpec, field_create, gf, parse_field
from .matrix import GFMatrix, mat_mul, nullspace, rank, rref, transpose
from .oa import (
    OrthogonalArray,
    ball_volume,
    covering_radius,
    is_irredundant_direct,
    is_irredundant_via_distance,
    min_distance_array,
    oa_from_code,
    strength,
)
from .lab import Certificate, Claim, classify_dual_pair

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]

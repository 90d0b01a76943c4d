"""Input validation shared by the estimator wrappers."""

from __future__ import annotations

import numpy as np
from sklearn.utils.validation import check_array

from .exceptions import ParameterError
from .field import FieldSpec, gf


def check_field(q=None, field: FieldSpec | None = None) -> FieldSpec:
    if field is not None:
        if q is not None and field.q != q:
            raise ParameterError(f"q={q} does not match field of order {field.q}")
        return field
    if q is None:
        raise ParameterError("either q or field is required")
    return gf(int(q))


def check_symbols(X, q: int, name: str = "X") -> np.ndarray:
    """2-D integer array with every entry in ``[0, q)``."""
    X = check_array(X, dtype=np.int64, ensure_2d=True, ensure_all_finite=True, input_name=name)
    if X.size and (X.min() < 0 or X.max() >= q):
        raise ParameterError(f"{name} entries must lie in [0, {q})")
    return X


def check_width(X: np.ndarray, n: int, name: str = "X"):
    if X.shape[1] != n:
        raise ParameterError(f"{name} has {X.shape[1]} columns, expected {n}")
    return X

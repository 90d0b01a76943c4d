"""Estimator-style wrappers around the array and code analyses.

``fit`` computes every quantity once and stores it in trailing-underscore
attributes. ``transform`` maps query words to distances from the array rows
(or messages to codewords), so the objects compose with the usual pipeline
tooling for parameters and cloning.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_field, check_symbols, check_width
from .caps import Caps
from .code import code_from_generator, dual, min_distance
from .exceptions import ParameterError
from .lab import check_basic, check_covering_bounds, check_distance_bounds, check_extremal, classify_dual_pair
from .matrix import GFMatrix
from .oa import (
    OrthogonalArray,
    covering_radius,
    is_irredundant_direct,
    is_irredundant_via_distance,
    min_distance_array,
    oa_from_code,
    strength,
)


class _CapsMixin:
    def _caps(self) -> Caps:
        return Caps(enum=self.cap_enum, subsets=self.cap_subsets, space=self.cap_space)


class OrthogonalArrayAnalyzer(_CapsMixin, TransformerMixin, BaseEstimator):
    """Strength, index, distance, irredundancy and covering radius of an array.

    ``X`` is an ``M x n`` matrix of symbols in ``[0, q)`` with distinct rows.
    """

    def __init__(self, q=2, compute_covering=True, cap_enum=2**24, cap_subsets=10**6, cap_space=2**24,
                 random_state=0):
        self.q = q
        self.compute_covering = compute_covering
        self.cap_enum = cap_enum
        self.cap_subsets = cap_subsets
        self.cap_space = cap_space
        self.random_state = random_state

    def fit(self, X, y=None):
        X = check_symbols(X, self.q)
        caps = self._caps()
        seed = int(self.random_state or 0)
        A = OrthogonalArray(X, int(self.q))
        rep = strength(A, caps, seed)
        self.array_ = A
        self.n_features_in_ = A.n
        self.strength_ = rep.t
        self.lambda_ = rep.lam
        self.strength_exhaustive_ = rep.exhaustive
        self.min_distance_ = min_distance_array(A, caps)
        irr = is_irredundant_direct(A, caps, seed)
        self.irredundant_ = irr.irredundant
        self.irredundant_exhaustive_ = irr.exhaustive
        self.irredundant_witness_ = irr.witness
        self.irredundant_via_distance_ = is_irredundant_via_distance(A, caps)
        self.covering_radius_ = covering_radius(A, caps).rho if self.compute_covering else None
        return self

    def transform(self, X):
        """Hamming distance from each query word to each array row."""
        check_is_fitted(self, "array_")
        X = check_width(check_symbols(X, self.q), self.n_features_in_)
        rows = self.array_.rows.astype(np.int64)
        return (X[:, None, :] != rows[None, :, :]).sum(axis=2)

    def predict(self, X):
        """Index of the nearest row (first one on ties)."""
        return np.argmin(self.transform(X), axis=1)


class LinearCodeAnalyzer(_CapsMixin, TransformerMixin, BaseEstimator):
    """Parameters of a code given by its generator, and of its dual pair.

    ``fit`` takes a ``k x n`` generator over F_q; ``transform`` encodes
    ``k``-symbol messages.
    """

    def __init__(self, q=2, compute_covering=True, cap_enum=2**24, cap_subsets=10**6, cap_space=2**24,
                 random_state=0):
        self.q = q
        self.compute_covering = compute_covering
        self.cap_enum = cap_enum
        self.cap_subsets = cap_subsets
        self.cap_space = cap_space
        self.random_state = random_state

    def fit(self, G, y=None):
        F = check_field(self.q)
        G = check_symbols(G, F.q, "G")
        caps = self._caps()
        seed = int(self.random_state or 0)
        C = code_from_generator(GFMatrix(F, G))
        self.code_ = C
        self.n_ = C.n
        self.k_ = C.k
        self.n_features_in_ = G.shape[1]
        self.d_ = min_distance(C, caps.enum, caps.subsets)
        self.certificates_ = []
        if C.k == C.n:
            raise ParameterError("the full space has a zero dual; no array to analyze")
        self.dual_ = dual(C)
        verdict = classify_dual_pair(C, caps, seed)
        self.verdict_ = verdict
        self.d_dual_ = verdict.d_dual
        self.t_ = verdict.t
        A = oa_from_code(C, caps)
        self.array_ = A
        self.lambda_ = A.lam
        self.irredundant_ = verdict.direct_primal
        self.dual_irredundant_ = verdict.direct_dual
        self.irredundant_via_distance_ = verdict.primal_irredundant
        self.covering_radius_ = None
        self.certificates_.append(verdict.certificate("dual-pair"))
        if A.t >= 1:
            self.certificates_ += [check_basic(A, "array", caps, seed), check_extremal(A, "array", caps, seed),
                                   check_distance_bounds(A, "array", caps, seed)]
        if self.compute_covering:
            cr = covering_radius(A, caps)
            self.covering_radius_ = cr.rho
            self.covering_method_ = cr.method
            if A.t >= 1:
                self.certificates_.append(check_covering_bounds(A, cr, "array", caps, seed))
        return self

    def transform(self, X):
        check_is_fitted(self, "code_")
        X = check_width(check_symbols(X, self.q, "messages"), self.k_, "messages")
        return self.code_.encode(X)

"""Reed-Muller, generalized Reed-Muller and generalized Reed-Solomon codes."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .caps import DEFAULT_ENUM_CAP, DEFAULT_SEARCH_CAP
from .code import LinearCode, code_from_generator, is_mds, is_self_dual
from .exceptions import (
    DuplicatePoints,
    ParamOutOfRange,
    SearchCapExceeded,
    ZeroMultiplier,
)
from .field import FieldSpec, gf
from .matrix import GFMatrix, mat_mul, transpose


def binom(x: int, y: int) -> int:
    """Binomial coefficient, zero when ``y < 0`` or ``x < y``."""
    if y < 0 or x < y:
        return 0
    return math.comb(x, y)


# -- binary Reed-Muller ---------------------------------------------------------


def _rm_array(r: int, m: int) -> np.ndarray:
    if r == 0:
        return np.ones((1, 2**m), dtype=np.int64)
    if r == m:
        return np.eye(2**m, dtype=np.int64)
    top = _rm_array(r, m - 1)
    bottom = _rm_array(r - 1, m - 1)
    return np.block([[top, top], [np.zeros_like(bottom), bottom]])


def rm_generator(r: int, m: int) -> GFMatrix:
    """Recursive generator matrix G(r, m) of the binary Reed-Muller code.

    Blocks are ``[[G(r, m-1), G(r, m-1)], [0, G(r-1, m-1)]]`` with
    ``G(0, m)`` the all-ones row and ``G(m, m)`` the identity.
    """
    if m < 0 or not 0 <= r <= m:
        raise ParamOutOfRange(f"need 0 <= r <= m, got r={r}, m={m}")
    return GFMatrix(gf(2), _rm_array(r, m))


def rm_code(r: int, m: int) -> LinearCode:
    return code_from_generator(rm_generator(r, m))


def rm_dimension(r: int, m: int) -> int:
    return sum(math.comb(m, i) for i in range(r + 1))


# -- generalized Reed-Muller ----------------------------------------------------


@dataclass(frozen=True)
class GRMParams:
    """Closed-form parameters of R_q(r, m).

    ``r = a(q-1) + b`` with ``0 <= b < q-1``; ``r_dual = m(q-1) - 1 - r``.
    ``d_dual``, ``a_dual`` and ``b_dual`` are None when the dual is the
    zero code (``r = m(q-1)``).
    """

    q: int
    r: int
    m: int
    a: int
    b: int
    r_dual: int
    k: int
    d: int
    a_dual: int | None
    b_dual: int | None
    k_dual: int
    d_dual: int | None

    @property
    def n(self) -> int:
        return self.q**self.m


def grm_dimension(q: int, r: int, m: int) -> int:
    """Alternating-sum formula for dim R_q(r, m); zero for ``r < 0``."""
    if r < 0:
        return 0
    return sum((-1) ** i * math.comb(m, i) * binom(m + r - i * q, r - i * q) for i in range(m + 1))


def _grm_distance(q, m, a, b):
    e = m - a - 1
    if e >= 0:
        return (q - b) * q**e
    # r = m(q-1): a = m, b = 0 and the code is the full space
    return (q - b) // q


def grm_params(q: int, r: int, m: int) -> GRMParams:
    if q < 2 or m < 1 or not 0 <= r <= m * (q - 1):
        raise ParamOutOfRange(f"need 0 <= r <= m(q-1), got q={q}, r={r}, m={m}")
    a, b = divmod(r, q - 1)
    r_dual = m * (q - 1) - 1 - r
    if r_dual >= 0:
        a_dual, b_dual = m - a - 1, q - b - 2
        d_dual = (b + 2) * q**a
        # the substituted form must describe the same code
        assert a_dual * (q - 1) + b_dual == r_dual and 0 <= b_dual < q - 1
        assert d_dual == _grm_distance(q, m, a_dual, b_dual)
    else:
        a_dual = b_dual = d_dual = None
    return GRMParams(
        q=q, r=r, m=m, a=a, b=b, r_dual=r_dual,
        k=grm_dimension(q, r, m),
        d=_grm_distance(q, m, a, b),
        a_dual=a_dual, b_dual=b_dual,
        k_dual=grm_dimension(q, r_dual, m),
        d_dual=d_dual,
    )


def grm_monomials(q: int, r: int, m: int) -> list[tuple]:
    """Exponent vectors with entries < q and total degree <= r.

    Ordered by total degree, then lexicographically.
    """
    exps = [e for e in itertools.product(range(q), repeat=m) if sum(e) <= r]
    return sorted(exps, key=lambda e: (sum(e), e))


def grm_points(field: FieldSpec, m: int) -> np.ndarray:
    """All points of F_q^m in lexicographic canonical order (q^m x m)."""
    return np.array(list(itertools.product(range(field.q), repeat=m)), dtype=np.int64).reshape(-1, m)


def grm_evaluation_matrix(q: int, r: int, m: int, field: FieldSpec | None = None) -> GFMatrix:
    """One row per monomial: its values at every point of F_q^m."""
    if q < 2 or m < 1 or not 0 <= r <= m * (q - 1):
        raise ParamOutOfRange(f"need 0 <= r <= m(q-1), got q={q}, r={r}, m={m}")
    F = field or gf(q)
    pts = grm_points(F, m)
    powers = np.array([F.power(np.arange(q), e) for e in range(q)], dtype=np.int64)  # [exp, x]
    rows = []
    for exps in grm_monomials(q, r, m):
        val = np.ones(pts.shape[0], dtype=np.int64)
        for i, e in enumerate(exps):
            if e:
                val = F.mul(val, powers[e][pts[:, i]]).astype(np.int64)
        rows.append(val)
    return GFMatrix(F, np.array(rows))


def grm_code(q: int, r: int, m: int, cap: int = DEFAULT_ENUM_CAP, field: FieldSpec | None = None) -> LinearCode:
    if q**m > cap:
        raise ParamOutOfRange(f"length q^m = {q**m} exceeds cap {cap}")
    return code_from_generator(grm_evaluation_matrix(q, r, m, field))


# -- generalized Reed-Solomon ---------------------------------------------------


@dataclass(frozen=True)
class GRSSpec:
    field: FieldSpec
    points: tuple
    multipliers: tuple
    k: int

    @property
    def n(self) -> int:
        return len(self.points)

    def validate(self):
        if len(self.multipliers) != self.n:
            raise ParamOutOfRange("points and multipliers differ in length")
        if not 1 <= self.n <= self.field.q:
            raise ParamOutOfRange(f"need 1 <= n <= q, got n={self.n}, q={self.field.q}")
        if len(set(self.points)) != self.n:
            raise DuplicatePoints(f"evaluation points must be distinct: {self.points}")
        if any(not 0 <= a < self.field.q for a in self.points + self.multipliers):
            raise ParamOutOfRange("points and multipliers must be field elements")
        if any(v == 0 for v in self.multipliers):
            raise ZeroMultiplier(f"multipliers must be nonzero: {self.multipliers}")
        if not 1 <= self.k <= self.n:
            raise ParamOutOfRange(f"need 1 <= k <= n, got k={self.k}, n={self.n}")
        return self


def grs_spec(field: FieldSpec, n: int, k: int, points=None, multipliers=None) -> GRSSpec:
    """GRS spec with defaults: the first ``n`` elements and unit multipliers."""
    if points is None:
        if n > field.q:
            raise ParamOutOfRange(f"need n <= q, got n={n}, q={field.q}")
        points = range(n)
    if multipliers is None:
        multipliers = [1] * n
    return GRSSpec(field, tuple(int(a) for a in points), tuple(int(v) for v in multipliers), int(k)).validate()


def grs_generator(spec: GRSSpec) -> GFMatrix:
    """Entry ``(i, j) = v_j * alpha_j ** i`` for ``0 <= i < k``."""
    spec.validate()
    F = spec.field
    pts = np.array(spec.points)
    v = np.array(spec.multipliers)
    rows = [F.mul(v, F.power(pts, i)) for i in range(spec.k)]
    return GFMatrix(F, np.array(rows, dtype=np.int64))


def grs_code(spec: GRSSpec) -> LinearCode:
    return code_from_generator(grs_generator(spec))


def search_self_dual_grs(field: FieldSpec, n: int, cap: int = DEFAULT_SEARCH_CAP, enum_cap: int = DEFAULT_ENUM_CAP):
    """First multiplier vector (lexicographic) giving a self-dual GRS code.

    Points are the first ``n`` field elements and ``k = n/2``. Returns
    ``(code, multipliers)`` or None; a returned code has been checked to be
    self-dual and MDS.
    """
    q = field.q
    if n % 2 or n < 2:
        raise ParamOutOfRange(f"n must be even and positive, got {n}")
    if n > q:
        raise ParamOutOfRange(f"need n <= q for distinct points, got n={n}, q={q}")
    candidates = (q - 1) ** n
    if candidates > cap:
        raise SearchCapExceeded(candidates, cap, f"{q - 1}^{n} multiplier vectors")
    k = n // 2
    base = grs_generator(grs_spec(field, n, k))
    for v in itertools.product(range(1, q), repeat=n):
        G = GFMatrix(field, field.mul(base.data, np.array(v)[None, :]))
        if mat_mul(G, transpose(G)).is_zero():
            C = code_from_generator(G)
            if not (is_self_dual(C) and is_mds(C, enum_cap)):
                raise AssertionError(f"multipliers {v} gave G G^T = 0 but not a self-dual MDS code")
            return C, v
    return None

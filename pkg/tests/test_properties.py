"""Property tests: algebraic invariants on random small instances."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from iroa.code import code_from_generator, dual, min_distance, same_code, weight_distribution
from iroa.constructions import grs_code, grs_spec
from iroa.exceptions import ZeroMatrix
from iroa.field import gf
from iroa.matrix import GFMatrix, mat_mul, nullspace, rank, rref, transpose
from iroa.oa import OrthogonalArray, covering_radius, is_irredundant_direct, min_distance_array, oa_from_code, strength

QS = [2, 3, 4, 5, 7, 8, 9]


@st.composite
def matrices(draw, max_rows=5, max_cols=8):
    q = draw(st.sampled_from(QS))
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    data = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=c, max_size=c), min_size=r, max_size=r))
    return GFMatrix(gf(q), data)


@st.composite
def codes(draw, max_size=4096):
    M = draw(matrices(max_rows=4, max_cols=8))
    try:
        C = code_from_generator(M)
    except ZeroMatrix:
        C = code_from_generator(GFMatrix(M.field, np.eye(1, M.cols, dtype=np.int64)))
    return C


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent_and_rank_nullity(M):
    R, r, piv = rref(M)
    R2, r2, _ = rref(R)
    assert R2 == R and r2 == r
    N = nullspace(M)
    assert N.rows == M.cols - r
    if N.rows:
        assert mat_mul(M, transpose(N)).is_zero()
        assert rank(N) == N.rows


@settings(max_examples=60, deadline=None)
@given(codes())
def test_dual_is_an_involution(C):
    if C.k < C.n:
        D = dual(C)
        assert D.k == C.n - C.k
        assert mat_mul(C.gen, transpose(D.gen)).is_zero()
        if D.k < D.n:
            assert same_code(dual(D), C)


@settings(max_examples=40, deadline=None)
@given(codes())
def test_weight_distribution_totals(C):
    if C.size <= 4096:
        w = weight_distribution(C)
        assert sum(w.counts) == C.size and w[0] == 1
        assert w.min_distance == min_distance(C)


@settings(max_examples=40, deadline=None)
@given(codes())
def test_oa_invariants(C):
    if C.k >= C.n or C.size > 2048:
        return
    A = oa_from_code(C)
    d = min_distance_array(A)
    assert A.M == A.lam * A.q**A.t
    # Singleton-type bound for arrays: d <= n - t
    assert d <= A.n - A.t + 1
    if A.t < A.n:
        irr = is_irredundant_direct(A)
        assert irr.irredundant == (d >= A.t + 1)
    if A.t > 0:
        plain = OrthogonalArray(A.rows, A.q)
        assert strength(plain).t == A.t
    if A.q ** (A.n - C.k) <= 4096 and A.q**A.n <= 4096:
        assert covering_radius(A, method="exhaustive").rho == covering_radius(A, method="syndrome").rho


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([5, 7, 8, 9]), st.data())
def test_grs_is_mds(q, data):
    n = data.draw(st.integers(2, q))
    k = data.draw(st.integers(1, n))
    pts = data.draw(st.permutations(range(q)))[:n]
    v = data.draw(st.lists(st.integers(1, q - 1), min_size=n, max_size=n))
    C = grs_code(grs_spec(gf(q), n, k, pts, v))
    assert min_distance(C) == n - k + 1
    if k < n:
        assert min_distance(dual(C)) == k + 1

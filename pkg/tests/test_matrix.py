import numpy as np
import pytest

from iroa.constructions import grm_evaluation_matrix, rm_generator
from iroa.corpus import hamming74, tetracode
from iroa.exceptions import DimensionMismatch, FieldMismatch, ParameterError
from iroa.field import gf
from iroa.matrix import (
    GFMatrix,
    format_matrix,
    mat_mul,
    nullspace,
    parse_matrix,
    rank,
    row_space_equal,
    rref,
    transpose,
)

F2 = gf(2)


def test_rref_identity_and_zero():
    I = GFMatrix.identity(F2, 4)
    R, r, piv = rref(I)
    assert R == I and r == 4 and list(piv) == [0, 1, 2, 3]
    Z = GFMatrix.zeros(F2, 3, 4)
    R, r, _ = rref(Z)
    assert R == Z and r == 0


def test_rref_is_reduced_over_f5():
    M = GFMatrix(gf(5), [[2, 4, 1], [1, 2, 3], [3, 1, 0]])
    R, r, piv = rref(M)
    for i, c in enumerate(piv):
        col = R.data[:, c]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert r == rank(M)


def test_rank_of_g12():
    assert rank(rm_generator(1, 2)) == 3


def test_nullspace_examples():
    B = nullspace(GFMatrix(F2, [[1, 1, 1, 1]]))
    assert B.shape == (3, 4) and rank(B) == 3
    assert mat_mul(GFMatrix(F2, [[1, 1, 1, 1]]), transpose(B)).is_zero()
    assert nullspace(GFMatrix.identity(F2, 5)).shape == (0, 5)
    H = nullspace(hamming74().gen)
    assert H.shape == (3, 7)
    assert mat_mul(hamming74().gen, transpose(H)).is_zero()


def test_row_space_equal_examples():
    G = rm_generator(1, 3)
    perm = GFMatrix(F2, G.data[::-1])
    assert row_space_equal(G, perm)
    assert row_space_equal(grm_evaluation_matrix(2, 1, 2), rm_generator(1, 2))
    assert not row_space_equal(GFMatrix(F2, [[1, 0]]), GFMatrix(F2, [[0, 1]]))


def test_mat_mul_examples_and_errors():
    A = GFMatrix(gf(3), [[1, 2, 0], [2, 2, 1]])
    assert mat_mul(A, GFMatrix.identity(gf(3), 3)) == A
    G = tetracode().gen
    assert mat_mul(G, transpose(G)).is_zero()
    with pytest.raises(DimensionMismatch):
        mat_mul(A, A)
    with pytest.raises(FieldMismatch):
        mat_mul(A, GFMatrix.identity(gf(5), 3))


def test_entries_out_of_range():
    with pytest.raises(ParameterError):
        GFMatrix(F2, [[0, 2]])


def test_text_roundtrip():
    M = GFMatrix(gf(8), [[1, 7, 3], [0, 2, 5]])
    text = format_matrix(M, header="# code test")
    assert text.splitlines()[1] == "2 3 8"
    back, headers = parse_matrix(text)
    assert back == M and headers == ["# code test"]


def test_text_roundtrip_custom_modulus():
    from iroa.field import parse_field

    F = parse_field("2^3:1,0,1,1")
    M = GFMatrix(F, [[1, 6, 3]])
    back, _ = parse_matrix(format_matrix(M))
    assert back.field == F and back == M


def test_parse_rejects_bad_shape():
    with pytest.raises(ParameterError):
        parse_matrix("2 2 2\n1 0\n")

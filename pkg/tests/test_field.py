import itertools

import numpy as np
import pytest

from iroa.exceptions import DivisionByZero, FieldMismatch, NotPrime, ReducibleModulus, UnsupportedOrder
from iroa.field import (
    DEFAULT_MODULI,
    elements,
    field_create,
    format_field,
    gf,
    gf_add,
    gf_inv,
    gf_mul,
    is_irreducible,
    parse_field,
    prime_power,
)

SMALL = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
ALL = SMALL + [25, 27, 32, 49, 64]


def test_prime_field_creation():
    F = field_create(2)
    assert F.q == 2 and F.modulus == (0, 1)


def test_f4_with_explicit_modulus():
    F = field_create(2, 2, [1, 1, 1])
    assert F.q == 4


def test_reducible_modulus_rejected():
    with pytest.raises(ReducibleModulus):
        field_create(2, 2, [1, 0, 1])


def test_non_prime_and_unsupported():
    with pytest.raises(NotPrime):
        field_create(4)
    with pytest.raises(UnsupportedOrder):
        gf(2**17)
    with pytest.raises(Exception):
        prime_power(12)


@pytest.mark.parametrize("q", sorted(DEFAULT_MODULI))
def test_default_moduli_irreducible(q):
    p, _ = prime_power(q)
    assert is_irreducible(DEFAULT_MODULI[q], p)


def test_spec_arithmetic_examples():
    F4, F5 = gf(4), gf(5)
    assert int(F4.add(2, 3)) == 1
    assert int(F5.add(3, 4)) == 2
    assert int(F4.mul(2, 2)) == 3
    assert int(F4.mul(2, 3)) == 1
    assert int(F5.inv(2)) == 3
    assert int(F4.inv(2)) == 3
    assert [int(x) for x in elements(gf(4))] == [0, 1, 2, 3]
    assert [int(x) for x in elements(gf(3))] == [0, 1, 2]


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        gf(7).inv(0)
    with pytest.raises(ZeroDivisionError):
        gf(4)(1) / gf(4)(0)


def test_element_wrapper_and_mismatch():
    a, b = gf(4)(2), gf(4)(3)
    assert int(a * b) == 1 and int(a + b) == 1 and int(a**3) == 1
    assert int(gf_mul(a, a)) == 3 and int(gf_inv(a)) == 3
    with pytest.raises(FieldMismatch):
        gf_add(a, gf(5)(1))


@pytest.mark.parametrize("q", SMALL)
def test_field_axioms_exhaustive(q):
    F = gf(q)
    x = np.arange(q)
    A, B = np.meshgrid(x, x, indexing="ij")
    add, mul = F.add(A, B), F.mul(A, B)
    assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
    # every row of the addition table and every nonzero row of the
    # multiplication table is a permutation
    assert all(sorted(r) == list(range(q)) for r in add)
    assert all(sorted(r) == list(range(1, q)) for r in mul[1:, 1:].tolist())
    for a, b, c in itertools.product(range(q), repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert np.all(F.add(x, F.neg(x)) == 0)


@pytest.mark.parametrize("q", ALL)
def test_fermat_and_inverse(q):
    F = gf(q)
    nz = np.arange(1, q)
    assert np.all(F.power(nz, q - 1) == 1)
    assert np.array_equal(F.inv(F.inv(nz)), nz)
    assert np.all(F.mul(nz, F.inv(nz)) == 1)
    assert int(F.power(0, 0)) == 1


@pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
def test_multiplicative_group_is_cyclic(q):
    F = gf(q)
    orders = []
    for a in range(1, q):
        k, x = 1, a
        while x != 1:
            x = int(F.mul(x, a))
            k += 1
        orders.append(k)
    assert max(orders) == q - 1


def test_field_strings_roundtrip():
    assert parse_field("q=8") == gf(8)
    assert parse_field("9") == gf(9)
    F = parse_field("2^3:1,0,1,1")
    assert F.q == 8 and F != gf(8)
    assert parse_field(format_field(F)) == F
    assert format_field(gf(8)) == "q=8"

"""Arithmetic in finite fields F_q, q = p^e.

Elements are encoded as integers ``0 <= x < q``. The base-p digits of ``x``
are the coefficients of a polynomial over F_p (least significant digit is
the constant term), reduced modulo a monic irreducible polynomial of
degree ``e``. Integer order of the encodings is the canonical element order
used everywhere else in the package.

All array operations on :class:`FieldSpec` are vectorized over numpy
integer arrays of encodings; :class:`FieldElement` is a thin scalar wrapper
with operator overloading.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, total_ordering

import numpy as np

from .exceptions import (
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    ParameterError,
    ReducibleModulus,
    UnsupportedOrder,
)

# coefficient lists, constant term first
DEFAULT_MODULI = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    16: (1, 1, 0, 0, 1),
    32: (1, 0, 1, 0, 0, 1),
    64: (1, 1, 0, 0, 0, 0, 1),
    9: (2, 2, 1),
    27: (1, 2, 0, 1),
    25: (2, 4, 1),
    49: (3, 6, 1),
}

_TABLE_LIMIT = 256
MAX_ORDER = 2**16


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            break
    e, rest = 0, q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1 or not is_prime(p):
        raise NotPrime(f"{q} is not a prime power")
    return p, e


# -- polynomials over F_p as coefficient lists (constant term first) ---------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a, b, p):
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bc) % p
        a = _trim(a)
    return a


def is_irreducible(coeffs, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    f = _trim(coeffs)
    deg = len(f) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def _poly_mul_mod(a, b, mod, p):
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, mod, p) if prod else []


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q with an explicit modulus.

    Build instances with :func:`field_create` (or :func:`gf`), which
    validates primality and irreducibility.
    """

    p: int
    e: int
    modulus: tuple

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def order(self) -> int:
        return self.q

    @property
    def is_prime_field(self) -> bool:
        return self.e == 1

    @property
    def dtype(self):
        return np.uint8 if self.q <= 256 else np.uint32

    def __repr__(self):
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={list(self.modulus)})"

    def __str__(self):
        return f"GF({self.q})"

    # -- encoding ---------------------------------------------------------

    def to_coeffs(self, x: int) -> list[int]:
        digits = []
        for _ in range(self.e):
            digits.append(x % self.p)
            x //= self.p
        return digits

    def from_coeffs(self, coeffs) -> int:
        x = 0
        for c in reversed(list(coeffs)):
            x = x * self.p + int(c)
        return x

    def _mul_scalar(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        res = _poly_mul_mod(_trim(self.to_coeffs(a)), _trim(self.to_coeffs(b)), list(self.modulus), self.p)
        return self.from_coeffs(res + [0] * (self.e - len(res)))

    # -- lookup tables ------------------------------------------------------

    @cached_property
    def add_table(self) -> np.ndarray:
        q = self.q
        digits = np.array([self.to_coeffs(x) for x in range(q)], dtype=np.int64)
        s = (digits[:, None, :] + digits[None, :, :]) % self.p
        weights = self.p ** np.arange(self.e)
        return (s @ weights).astype(self.dtype)

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        if self.e == 1:
            a = np.arange(q)
            return ((a[:, None] * a[None, :]) % q).astype(self.dtype)
        t = np.zeros((q, q), dtype=self.dtype)
        for a in range(1, q):
            for b in range(a, q):
                t[a, b] = t[b, a] = self._mul_scalar(a, b)
        return t

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array(
            [self.from_coeffs([(-c) % self.p for c in self.to_coeffs(x)]) for x in range(self.q)],
            dtype=self.dtype,
        )

    @cached_property
    def inv_table(self) -> np.ndarray:
        inv = np.zeros(self.q, dtype=self.dtype)
        for a in range(1, self.q):
            inv[a] = self.pow_scalar(a, self.q - 2)
        return inv

    # -- vectorized arithmetic on encodings ---------------------------------

    def _tabled(self):
        return self.q <= _TABLE_LIMIT

    def add(self, x, y):
        x = np.asarray(x)
        y = np.asarray(y)
        if self.p == 2:
            return np.bitwise_xor(x, y).astype(self.dtype, copy=False)
        if self.e == 1:
            return ((x.astype(np.int64) + y) % self.p).astype(self.dtype)
        if self._tabled():
            return self.add_table[x, y]
        return np.vectorize(self._add_scalar, otypes=[self.dtype])(x, y)

    def _add_scalar(self, a, b):
        return self.from_coeffs([(u + v) % self.p for u, v in zip(self.to_coeffs(int(a)), self.to_coeffs(int(b)))])

    def neg(self, x):
        x = np.asarray(x)
        if self.p == 2:
            return x.astype(self.dtype, copy=False)
        if self.e == 1:
            return ((-x.astype(np.int64)) % self.p).astype(self.dtype)
        if self._tabled():
            return self.neg_table[x]
        return np.vectorize(
            lambda a: self.from_coeffs([(-c) % self.p for c in self.to_coeffs(int(a))]), otypes=[self.dtype]
        )(x)

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def mul(self, x, y):
        x = np.asarray(x)
        y = np.asarray(y)
        if self.e == 1:
            return ((x.astype(np.int64) * y) % self.p).astype(self.dtype)
        if self._tabled():
            return self.mul_table[x, y]
        return np.vectorize(lambda a, b: self._mul_scalar(int(a), int(b)), otypes=[self.dtype])(x, y)

    def inv(self, x):
        x = np.asarray(x)
        if np.any(x == 0):
            raise DivisionByZero("0 has no multiplicative inverse")
        if self._tabled():
            return self.inv_table[x]
        return np.vectorize(lambda a: self.pow_scalar(int(a), self.q - 2), otypes=[self.dtype])(x)

    def pow_scalar(self, a: int, n: int) -> int:
        """Square-and-multiply exponentiation of a single encoding."""
        result, base = 1, int(a)
        if n == 0:
            return 1
        while n:
            if n & 1:
                result = self._mul_scalar(result, base)
            base = self._mul_scalar(base, base)
            n >>= 1
        return result

    def power(self, x, n: int):
        """Elementwise ``x**n`` with the convention ``0**0 == 1``."""
        x = np.asarray(x)
        table = np.array([self.pow_scalar(a, n) for a in range(self.q)], dtype=self.dtype)
        return table[x]

    def dot(self, x, y):
        """Standard inner product of two vectors."""
        acc = 0
        for term in np.atleast_1d(self.mul(x, y)):
            acc = self.add(acc, term)
        return int(acc)

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, v) for v in range(self.q)]

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)


@total_ordering
class FieldElement:
    """A single element of a :class:`FieldSpec`, stored by encoding."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise ParameterError(f"{value} is not an element of {field}")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.field, other).value
        return NotImplemented

    def _wrap(self, value):
        return FieldElement(self.field, int(value))

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def inverse(self):
        if self.value == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return self._wrap(self.field.pow_scalar(self.value, self.field.q - 2))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self * self._wrap(b).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return self._wrap(self.field.pow_scalar(self.value, n))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < self._coerce(other)

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __repr__(self):
        return f"{self.value} in {self.field}"


def field_create(p: int, e: int = 1, modulus=None) -> FieldSpec:
    """Validate and build F_{p^e}.

    ``modulus`` is a coefficient list, constant term first, of a monic
    degree-``e`` polynomial. When omitted, a built-in table covers every
    prime power up to 64.
    """
    p, e = int(p), int(e)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if e < 1:
        raise ParameterError(f"extension degree must be >= 1, got {e}")
    q = p**e
    if q > MAX_ORDER:
        raise UnsupportedOrder(f"q = {q} exceeds the supported maximum {MAX_ORDER}")
    if modulus is None:
        if e == 1:
            modulus = (0, 1)
        elif q in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[q]
        else:
            raise UnsupportedOrder(f"no built-in modulus for q = {q}; pass one explicitly")
    modulus = tuple(int(c) % p for c in modulus)
    if len(modulus) != e + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {e}, got {list(modulus)}")
    if not is_irreducible(modulus, p):
        raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return FieldSpec(p, e, modulus)


_FIELD_CACHE: dict = {}


def gf(q: int) -> FieldSpec:
    """Cached default field of order ``q``."""
    if q not in _FIELD_CACHE:
        p, e = prime_power(q)
        _FIELD_CACHE[q] = field_create(p, e)
    return _FIELD_CACHE[q]


def parse_field(text: str) -> FieldSpec:
    """Parse ``"q=<int>"``, ``"<int>"`` or ``"p^e:c0,c1,...,ce"``."""
    text = text.strip()
    if ":" in text:
        head, coeffs = text.split(":", 1)
        p, e = (int(s) for s in head.split("^"))
        return field_create(p, e, [int(c) for c in coeffs.split(",")])
    if text.startswith("q="):
        text = text[2:]
    return gf(int(text))


def format_field(field: FieldSpec) -> str:
    if field.e == 1 or DEFAULT_MODULI.get(field.q) == field.modulus:
        return f"q={field.q}"
    return f"{field.p}^{field.e}:" + ",".join(str(c) for c in field.modulus)


def _check_pair(a: FieldElement, b: FieldElement):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


def gf_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a + b


def gf_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a - b


def gf_neg(a: FieldElement) -> FieldElement:
    return -a


def gf_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_pair(a, b)
    return a * b


def gf_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def elements(field: FieldSpec) -> list[FieldElement]:
    return field.elements()

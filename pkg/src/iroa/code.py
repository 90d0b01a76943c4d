"""Linear [n, k, d]_q codes.

Codes are stored by their RREF generator. Codewords are enumerated by
message vectors in lexicographic order of the canonical element order
(first message symbol most significant), so codeword ``i`` is ``m(i) G``
where ``m(i)`` is the base-q expansion of ``i`` with ``k`` digits.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass

import numpy as np

from .caps import DEFAULT_ENUM_CAP, DEFAULT_SUBSET_CAP
from .exceptions import DegenerateDual, EnumerationCapExceeded, ZeroMatrix
from .field import FieldSpec
from .matrix import GFMatrix, mat_mul, nullspace, rank_array, row_space_equal, rref_array, transpose

_BLOCK_ENTRIES = 1 << 21


def _digits(index: np.ndarray, base: int, width: int) -> np.ndarray:
    """Base-``base`` digits of each index, most significant first."""
    out = np.empty((index.size, width), dtype=np.int64)
    rest = np.array(index, dtype=np.int64)
    for j in range(width - 1, -1, -1):
        out[:, j] = rest % base
        rest //= base
    return out


def span_table(field: FieldSpec, G: np.ndarray) -> np.ndarray:
    """All ``q**rows`` combinations of the rows of ``G`` in message order."""
    q = field.q
    n = G.shape[1]
    table = np.zeros((1, n), dtype=field.dtype)
    for row in G:
        multiples = field.mul(np.arange(q)[:, None], row[None, :])  # q x n
        table = field.add(table[:, None, :], multiples[None, :, :]).reshape(-1, n)
    return table


class LinearCode:
    """A linear code given by a full-rank generator in RREF.

    The minimum distances are cached on first computation. Concurrent
    computations may race, but every writer stores the same value.
    """

    def __init__(self, gen: GFMatrix, *, _reduced=False):
        if not _reduced:
            R, r, _ = rref_array(gen.field, gen.data)
            if r == 0:
                raise ZeroMatrix("generator matrix has rank 0")
            gen = GFMatrix(gen.field, R[:r])
        self.gen = gen
        self._lock = threading.Lock()
        self.cached_d = None
        self.cached_dperp = None
        self.min_weight_word = None
        self._dual = None

    @property
    def field(self) -> FieldSpec:
        return self.gen.field

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def size(self) -> int:
        return self.q**self.k

    def __repr__(self):
        d = "?" if self.cached_d is None else self.cached_d
        return f"LinearCode([{self.n}, {self.k}, {d}]_{self.q})"

    def __eq__(self, other):
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.gen == other.gen

    def __hash__(self):
        return hash(self.gen)

    def _store(self, attr, value):
        with self._lock:
            current = getattr(self, attr)
            if current is not None and current != value:
                raise AssertionError(f"inconsistent cached {attr}: {current} vs {value}")
            setattr(self, attr, value)

    # -- enumeration ----------------------------------------------------------

    def iter_codeword_blocks(self, cap: int = DEFAULT_ENUM_CAP):
        """Yield ``(start, block)`` covering all codewords in message order."""
        q, k, n = self.q, self.k, self.n
        if q**k > cap:
            raise EnumerationCapExceeded(q**k, cap, f"enumerating {q}^{k} codewords")
        F = self.field
        G = self.gen.data
        low = 0
        while low < k and q ** (low + 1) * n <= _BLOCK_ENTRIES:
            low += 1
        low = max(low, min(k, 1))
        low_table = span_table(F, G[k - low:])
        high_rows = G[: k - low]
        step = q**low
        for h, msg in enumerate(itertools.product(range(q), repeat=k - low)):
            if k - low:
                offset = np.zeros(n, dtype=F.dtype)
                for coef, row in zip(msg, high_rows):
                    if coef:
                        offset = F.add(offset, F.mul(coef, row))
                block = F.add(low_table, offset[None, :])
            else:
                block = low_table
            yield h * step, block

    def codewords(self, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
        blocks = [b for _, b in self.iter_codeword_blocks(cap)]
        return np.concatenate(blocks, axis=0)

    def encode(self, messages) -> np.ndarray:
        messages = np.atleast_2d(np.asarray(messages, dtype=np.int64))
        M = GFMatrix(self.field, messages)
        return mat_mul(M, self.gen).data

    def syndrome_matrix(self) -> GFMatrix:
        """Parity-check matrix, i.e. a generator of the dual code."""
        return nullspace(self.gen)


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple

    @property
    def n(self):
        return len(self.counts) - 1

    @property
    def min_distance(self):
        return next(w for w, c in enumerate(self.counts) if w and c)

    def __getitem__(self, w):
        return self.counts[w]

    def tolist(self):
        return list(self.counts)


def code_from_generator(M: GFMatrix) -> LinearCode:
    """Row-reduce ``M``; dependent rows are dropped."""
    return LinearCode(M)


def dual(C: LinearCode) -> LinearCode:
    if C.k == C.n:
        raise DegenerateDual(f"dual of the full space [{C.n},{C.n}] is the zero code")
    with C._lock:
        if C._dual is None:
            D = LinearCode(nullspace(C.gen), _reduced=True)
            D.cached_d, D.cached_dperp = C.cached_dperp, C.cached_d
            D._dual = C
            C._dual = D
        return C._dual


def _min_distance_enumerate(C: LinearCode, cap: int):
    best, word = C.n + 1, None
    for _, block in C.iter_codeword_blocks(cap):
        w = np.count_nonzero(block, axis=1)
        w[w == 0] = C.n + 1
        i = int(np.argmin(w))
        if w[i] < best:
            best, word = int(w[i]), block[i].copy()
    return best, word


def _min_distance_parity(C: LinearCode, subset_cap: int):
    """Smallest linearly dependent set of parity-check columns.

    A minimal dependent column set of size ``w`` carries a codeword with
    support exactly that set, so the first size with a dependent subset is
    the minimum distance. Subsets are scanned in lexicographic order.
    """
    F = C.field
    H = nullspace(C.gen).data if C.k < C.n else np.zeros((0, C.n), dtype=F.dtype)
    r = H.shape[0]
    n = C.n
    done = 0
    for w in range(1, min(n, r + 1) + 1):
        for cols in itertools.combinations(range(n), w):
            done += 1
            if done > subset_cap:
                raise EnumerationCapExceeded(done, subset_cap, "parity-check column search")
            sub = H[:, cols]
            if rank_array(F, sub) < w:
                kernel = nullspace(GFMatrix(F, sub)).data[0]
                word = np.zeros(n, dtype=F.dtype)
                word[list(cols)] = kernel
                return w, word
    raise AssertionError("no dependent column set found")  # unreachable for k >= 1


def min_distance(C: LinearCode, cap: int = DEFAULT_ENUM_CAP, subset_cap: int = DEFAULT_SUBSET_CAP) -> int:
    """Exact minimum weight of a nonzero codeword.

    Codewords are enumerated when ``q**k <= cap``. Larger codes fall back to
    an exhaustive search over parity-check column subsets, which is cheap
    exactly when the code has high rate and small distance; if that search
    also outgrows ``subset_cap`` the enumeration error is raised.
    """
    if C.cached_d is not None:
        return C.cached_d
    if C.size <= cap:
        d, word = _min_distance_enumerate(C, cap)
    else:
        try:
            d, word = _min_distance_parity(C, subset_cap)
        except EnumerationCapExceeded:
            raise EnumerationCapExceeded(C.size, cap, f"enumerating {C.q}^{C.k} codewords") from None
    C._store("cached_d", d)
    if C.min_weight_word is None:
        C.min_weight_word = word
    if C._dual is not None:
        C._dual._store("cached_dperp", d)
    return d


def dual_distance(C: LinearCode, cap: int = DEFAULT_ENUM_CAP, subset_cap: int = DEFAULT_SUBSET_CAP) -> int:
    if C.cached_dperp is not None:
        return C.cached_dperp
    dp = min_distance(dual(C), cap, subset_cap)
    C._store("cached_dperp", dp)
    return dp


def weight_distribution(C: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> WeightDistribution:
    counts = np.zeros(C.n + 1, dtype=np.int64)
    for _, block in C.iter_codeword_blocks(cap):
        counts += np.bincount(np.count_nonzero(block, axis=1), minlength=C.n + 1)
    return WeightDistribution(tuple(int(c) for c in counts))


def is_self_dual(C: LinearCode) -> bool:
    if C.n != 2 * C.k:
        return False
    return mat_mul(C.gen, transpose(C.gen)).is_zero()


def is_mds(C: LinearCode, cap: int = DEFAULT_ENUM_CAP, subset_cap: int = DEFAULT_SUBSET_CAP) -> bool:
    return min_distance(C, cap, subset_cap) == C.n - C.k + 1


def same_code(A: LinearCode, B: LinearCode) -> bool:
    return row_space_equal(A.gen, B.gen)

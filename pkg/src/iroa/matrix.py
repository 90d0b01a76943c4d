"""Dense matrices over F_q: RREF, rank, nullspace, row-space comparison.

A matrix is stored as a read-only 2-D numpy array of element encodings
together with its :class:`~iroa.field.FieldSpec`.
"""

from __future__ import annotations

import numpy as np

from .exceptions import DimensionMismatch, FieldMismatch, ParameterError
from .field import FieldSpec, format_field, gf, parse_field


class GFMatrix:
    """Immutable dense matrix over a finite field."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64, ndmin=2, copy=True)
        if arr.ndim != 2:
            raise ParameterError(f"expected a 2-D array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ParameterError(f"entries must lie in [0, {field.q})")
        arr = arr.astype(field.dtype)
        arr.setflags(write=False)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "data", arr)

    def __setattr__(self, name, value):
        raise AttributeError("GFMatrix is immutable")

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field, n):
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    @property
    def T(self):
        return transpose(self)

    def is_zero(self) -> bool:
        return not self.data.any()

    def tolist(self):
        return self.data.tolist()

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, GFMatrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self):
        return hash((self.field, self.shape, self.data.tobytes()))

    def __repr__(self):
        return f"GFMatrix({self.field}, {self.rows}x{self.cols})\n{self.data}"


def transpose(A: GFMatrix) -> GFMatrix:
    return GFMatrix(A.field, A.data.T)


def mat_mul(A: GFMatrix, B: GFMatrix) -> GFMatrix:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.cols != B.rows:
        raise DimensionMismatch(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    F = A.field
    if F.is_prime_field:
        out = (A.data.astype(np.int64) @ B.data.astype(np.int64)) % F.p
        return GFMatrix(F, out)
    out = np.zeros((A.rows, B.cols), dtype=F.dtype)
    for j in range(A.cols):
        out = F.add(out, F.mul(A.data[:, j][:, None], B.data[j, :][None, :]))
    return GFMatrix(F, out)


def rref_array(field: FieldSpec, data: np.ndarray):
    """RREF of a raw encoding array; returns ``(R, rank, pivots)``.

    Leftmost pivot column, first nonzero row at or below the current pivot
    row, scaled to 1, eliminated above and below.
    """
    R = np.array(data, dtype=field.dtype, copy=True)
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            R[[r, i]] = R[[i, r]]
        lead = R[r, c]
        if lead != 1:
            R[r] = field.mul(field.inv(lead), R[r])
        col = R[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            R[hit] = field.sub(R[hit], field.mul(col[hit][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
    return R, r, pivots


def rref(M: GFMatrix):
    """Return ``(R, rank, pivots)`` where ``R`` is the unique RREF of ``M``."""
    R, rank, pivots = rref_array(M.field, M.data)
    return GFMatrix(M.field, R), rank, pivots


def rank(M: GFMatrix) -> int:
    return rref_array(M.field, M.data)[1]


def rank_array(field: FieldSpec, data) -> int:
    return rref_array(field, data)[1]


def nullspace(M: GFMatrix) -> GFMatrix:
    """Basis of ``{v : M v^T = 0}`` as the rows of a matrix in RREF."""
    F = M.field
    R, r, pivots = rref_array(F, M.data)
    n = M.cols
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=F.dtype)
    for row, f in enumerate(free):
        basis[row, f] = 1
        for i, pc in enumerate(pivots):
            basis[row, pc] = F.neg(R[i, f])
    if basis.shape[0]:
        basis = rref_array(F, basis)[0]
    return GFMatrix(F, basis)


def row_space_equal(A: GFMatrix, B: GFMatrix) -> bool:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.cols != B.cols:
        raise DimensionMismatch(f"column counts differ: {A.cols} vs {B.cols}")
    RA, ra, _ = rref_array(A.field, A.data)
    RB, rb, _ = rref_array(B.field, B.data)
    return ra == rb and np.array_equal(RA[:ra], RB[:rb])


# -- text format -------------------------------------------------------------
#
#   rows cols q
#   a00 a01 ...
#
# An optional "# code" header marks a generator matrix file; a "# field ..."
# comment carries a non-default modulus.


def format_matrix(M: GFMatrix, header: str | None = None) -> str:
    lines = []
    if header:
        lines.append(header)
    if M.field.e > 1 and format_field(M.field) != f"q={M.field.q}":
        lines.append(f"# field {format_field(M.field)}")
    lines.append(f"{M.rows} {M.cols} {M.field.q}")
    lines.extend(" ".join(str(int(x)) for x in row) for row in M.data)
    return "\n".join(lines) + "\n"


def parse_matrix(text: str, field: FieldSpec | None = None):
    """Parse the matrix text format; returns ``(GFMatrix, headers)``."""
    headers = []
    body = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            headers.append(line)
        else:
            body.append(line)
    if not body:
        raise ParameterError("empty matrix file")
    try:
        rows, cols, q = (int(x) for x in body[0].split())
        data = [[int(x) for x in line.split()] for line in body[1:]]
    except ValueError as exc:
        raise ParameterError(f"malformed matrix file: {exc}") from None
    for h in headers:
        if h.startswith("# field "):
            field = parse_field(h[len("# field "):])
    if field is None:
        field = gf(q)
    if field.q != q:
        raise FieldMismatch(f"file declares q={q}, field has q={field.q}")
    if len(data) != rows or any(len(r) != cols for r in data):
        raise ParameterError(f"matrix body does not match declared shape {rows}x{cols}")
    return GFMatrix(field, np.array(data, dtype=np.int64).reshape(rows, cols)), headers

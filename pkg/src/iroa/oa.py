"""Orthogonal arrays as explicit M x n symbol matrices.

Column subsets are always visited in lexicographic order, so every witness
returned by a check is deterministic. When the number of subsets exceeds
the subset cap, checks switch to sampled mode: they inspect ``caps.samples``
random subsets drawn from a seeded generator and say so in their result.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field

import numpy as np

from .caps import DEFAULT_CAPS, Caps
from .code import LinearCode, dual, min_distance
from .exceptions import (
    DegenerateDual,
    DuplicateRows,
    NotAnOA,
    PairCapExceeded,
    ParameterError,
    SpaceCapExceeded,
)
from .field import FieldSpec, gf


def _row_keys(rows: np.ndarray, q: int) -> np.ndarray | None:
    """Pack rows into int64 keys (base q); None if they would overflow."""
    width = rows.shape[1]
    if width == 0:
        return np.zeros(rows.shape[0], dtype=np.int64)
    if width * math.log2(q) >= 62:
        return None
    weights = q ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return rows.astype(np.int64) @ weights


def _first_duplicate(rows: np.ndarray, q: int):
    """Return the first duplicate row pair ``(i, j)`` with ``i < j``, or None."""
    keys = _row_keys(rows, q)
    if keys is None:
        _, inverse = np.unique(rows, axis=0, return_inverse=True)
        keys = inverse.ravel().astype(np.int64)
    order = np.argsort(keys, kind="stable")
    sk = keys[order]
    same = np.nonzero(sk[1:] == sk[:-1])[0]
    if same.size == 0:
        return None
    # smallest first index over all duplicate groups
    firsts = order[same]
    seconds = order[same + 1]
    p = int(np.argmin(firsts * rows.shape[0] + seconds))
    return int(firsts[p]), int(seconds[p])


def _subsets(n: int, size: int, caps: Caps, rng: np.random.Generator):
    """Column subsets to inspect and whether the scan is exhaustive."""
    total = math.comb(n, size)
    if total <= caps.subsets:
        return itertools.combinations(range(n), size), True
    samples = set()
    while len(samples) < min(caps.samples, total):
        samples.add(tuple(sorted(rng.choice(n, size=size, replace=False).tolist())))
    return iter(sorted(samples)), False


@dataclass
class OrthogonalArray:
    """A set of M distinct rows of length n over ``q`` symbols.

    ``t`` and ``lam`` are single-assignment caches for the (maximal)
    strength and index; ``origin`` remembers the linear code the rows
    were enumerated from, which enables the linear shortcuts.
    """

    rows: np.ndarray
    q: int
    field: FieldSpec | None = None
    origin: LinearCode | None = None
    t: int | None = None
    lam: int | None = None
    strength_exhaustive: bool | None = None
    name: str = ""
    _d: int | None = dc_field(default=None, repr=False)
    _irr: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        rows = np.array(self.rows, copy=True)
        if rows.ndim != 2 or rows.shape[0] == 0:
            raise ParameterError(f"an array needs at least one row, got shape {rows.shape}")
        if rows.min() < 0 or rows.max() >= self.q:
            raise ParameterError(f"symbols must lie in [0, {self.q})")
        rows = rows.astype(np.uint8 if self.q <= 256 else np.uint32)
        dup = _first_duplicate(rows, self.q)
        if dup is not None:
            raise DuplicateRows(f"rows {dup[0]} and {dup[1]} coincide; arrays are sets of rows")
        rows.setflags(write=False)
        self.rows = rows
        if self.field is None and self.origin is not None:
            self.field = self.origin.field

    @property
    def M(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    def __repr__(self):
        t = "?" if self.t is None else self.t
        return f"OA({self.M}, {self.n}, {self.q}, {t})"

    def require_t(self) -> int:
        if self.t is None:
            strength(self)
        return self.t


@dataclass(frozen=True)
class StrengthReport:
    t: int
    lam: int
    exhaustive: bool
    unbalanced: tuple | None
    dual_distance_agrees: bool | None = None


@dataclass(frozen=True)
class IrredundancyReport:
    irredundant: bool
    exhaustive: bool
    witness: tuple | None = None  # (columns, (row_i, row_j))

    def __bool__(self):
        return self.irredundant


def oa_from_code(C: LinearCode, caps: Caps = DEFAULT_CAPS, name: str = "") -> OrthogonalArray:
    """All q^k codewords as an array of strength ``d_dual - 1``."""
    if C.k >= C.n:
        raise DegenerateDual(f"[{C.n},{C.k}] code has a zero dual; strength is undefined")
    rows = C.codewords(caps.enum)
    t = min_distance(dual(C), caps.enum, caps.subsets) - 1
    A = OrthogonalArray(rows, C.q, field=C.field, origin=C, name=name)
    A.t = t
    A.lam = C.size // C.q**t
    A._d = min_distance(C, caps.enum, caps.subsets)
    return A


def _balanced(rows: np.ndarray, q: int, cols) -> bool:
    keys = _row_keys(rows[:, list(cols)], q)
    size = q ** len(cols)
    if rows.shape[0] % size:
        return False
    counts = np.bincount(keys, minlength=size)
    return bool(np.all(counts == rows.shape[0] // size))


def projection_balanced(A: OrthogonalArray, t: int, caps: Caps = DEFAULT_CAPS, seed: int = 0):
    """Check every t-column projection for balance.

    Returns ``(ok, exhaustive, witness_columns)``; the scan stops at the
    first unbalanced subset.
    """
    if t == 0:
        return True, True, None
    if A.M % A.q**t:
        return False, True, tuple(range(t))
    subsets, exhaustive = _subsets(A.n, t, caps, np.random.default_rng(seed))
    for cols in subsets:
        if not _balanced(A.rows, A.q, cols):
            return False, exhaustive, cols
    return True, exhaustive, None


def strength(A: OrthogonalArray, caps: Caps = DEFAULT_CAPS, seed: int = 0) -> StrengthReport:
    """Maximal strength and index of ``A``.

    For arrays enumerated from a code the candidate ``d_dual - 1`` is tested
    first: balance at that strength, and imbalance of the projection onto
    the support of a minimum-weight dual codeword. Otherwise strengths are
    tried upward from 1 until some projection is unbalanced.
    """
    agrees = None
    if A.origin is not None and A.origin.k < A.origin.n:
        D = dual(A.origin)
        dperp = min_distance(D, caps.enum, caps.subsets)
        t0 = dperp - 1
        ok, exhaustive, _ = projection_balanced(A, t0, caps, seed)
        support = tuple(int(i) for i in np.nonzero(D.min_weight_word)[0]) if D.min_weight_word is not None else None
        above = support is not None and len(support) == t0 + 1 and not _balanced(A.rows, A.q, support)
        if ok and above:
            agrees = True
            report = StrengthReport(t0, A.M // A.q**t0, exhaustive, support, True)
            _cache_strength(A, report)
            return report
        agrees = False
    t, exhaustive_all, witness = 0, True, None
    while t < A.n:
        ok, exhaustive, cols = projection_balanced(A, t + 1, caps, seed)
        exhaustive_all &= exhaustive
        if not ok:
            witness = cols
            break
        t += 1
    if t == 0:
        raise NotAnOA(f"column {witness[0]} is unbalanced; not an OA of positive strength", witness)
    report = StrengthReport(t, A.M // A.q**t, exhaustive_all, witness, agrees)
    _cache_strength(A, report)
    return report


def _cache_strength(A: OrthogonalArray, report: StrengthReport):
    if A.t is not None and A.t != report.t:
        raise AssertionError(f"cached strength {A.t} disagrees with computed {report.t}")
    A.t = report.t
    A.lam = report.lam
    A.strength_exhaustive = report.exhaustive


def is_irredundant_direct(A: OrthogonalArray, caps: Caps = DEFAULT_CAPS, seed: int = 0) -> IrredundancyReport:
    """Every (n - t)-column projection has pairwise distinct rows.

    On failure the witness is the first offending column set together with
    the first coinciding row pair. Results are memoized per (caps, seed).
    """
    key = (caps, seed)
    if key in A._irr:
        return A._irr[key]
    t = A.require_t()
    report = IrredundancyReport(True, True)
    subsets, exhaustive = _subsets(A.n, A.n - t, caps, np.random.default_rng(seed))
    for cols in subsets:
        dup = _first_duplicate(A.rows[:, list(cols)], A.q)
        if dup is not None:
            report = IrredundancyReport(False, exhaustive, (tuple(cols), dup))
            break
    else:
        report = IrredundancyReport(True, exhaustive)
    A._irr[key] = report
    return report


def min_distance_array(A: OrthogonalArray, caps: Caps = DEFAULT_CAPS) -> int:
    """Minimum pairwise Hamming distance between rows."""
    if A._d is not None:
        return A._d
    if A.M == 1:
        raise ParameterError("a single-row array has no minimum distance")
    if A.origin is not None:
        d = min_distance(A.origin, caps.enum, caps.subsets)
    else:
        pairs = A.M * (A.M - 1) // 2
        if pairs > caps.pairs:
            raise PairCapExceeded(pairs, caps.pairs, "pairwise distances")
        d = A.n
        rows = A.rows
        block = max(1, (1 << 22) // max(1, A.M * A.n))
        for s in range(0, A.M, block):
            chunk = rows[s : s + block]
            dist = (chunk[:, None, :] != rows[None, :, :]).sum(axis=2)
            idx = np.arange(s, s + chunk.shape[0])
            dist[np.arange(chunk.shape[0]), idx] = A.n + 1
            d = min(d, int(dist.min()))
    A._d = d
    return d


def is_irredundant_via_distance(A: OrthogonalArray, caps: Caps = DEFAULT_CAPS) -> bool:
    return min_distance_array(A, caps) >= A.require_t() + 1


# -- covering radius -----------------------------------------------------------


@dataclass(frozen=True)
class CoveringRadius:
    rho: int
    method: str
    witness: tuple  # farthest vector (full scan) or farthest syndrome


def _hamming_bfs(sources: np.ndarray, q: int, n: int) -> np.ndarray:
    """Multi-source BFS distances over the Hamming graph on q^n vectors."""
    size = q**n
    dist = np.full(size, -1, dtype=np.int16)
    dist[sources] = 0
    frontier = np.unique(sources)
    place = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        found = []
        for j in range(n):
            digit = (frontier // place[j]) % q
            for delta in range(1, q):
                nb = frontier + (((digit + delta) % q) - digit) * place[j]
                nb = nb[dist[nb] < 0]
                dist[nb] = level
                found.append(nb)
        frontier = np.unique(np.concatenate(found)) if found else np.empty(0, dtype=np.int64)
    return dist


def covering_radius_exhaustive(A: OrthogonalArray, caps: Caps = DEFAULT_CAPS) -> CoveringRadius:
    """max over all q^n vectors of the distance to the nearest row."""
    space = A.q**A.n
    if space > caps.space:
        raise SpaceCapExceeded(space, caps.space, f"scanning {A.q}^{A.n} vectors")
    keys = _row_keys(A.rows, A.q)
    dist = _hamming_bfs(keys, A.q, A.n)
    far = int(np.argmax(dist))
    vec = tuple(int(x) for x in np.base_repr(far, A.q).zfill(A.n)) if A.q <= 36 else (far,)
    return CoveringRadius(int(dist[far]), "exhaustive", vec)


def covering_radius_syndrome(C: LinearCode, caps: Caps = DEFAULT_CAPS) -> CoveringRadius:
    """Coset-leader BFS over the q^(n-k) syndromes of a linear code."""
    F = C.field
    q, n, r = C.q, C.n, C.n - C.k
    if r == 0:
        return CoveringRadius(0, "syndrome", ())
    space = q**r
    if space > caps.space:
        raise SpaceCapExceeded(space, caps.space, f"scanning {q}^{r} syndromes")
    H = C.syndrome_matrix().data  # r x n
    place = q ** np.arange(r - 1, -1, -1, dtype=np.int64)
    steps = np.unique(
        [int(F.mul(a, H[:, j]).astype(np.int64) @ place) for j in range(n) for a in range(1, q)]
    )
    step_digits = np.array([[int(x) for x in np.base_repr(s, q).zfill(r)] for s in steps], dtype=np.int64)
    dist = np.full(space, -1, dtype=np.int16)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        fd = (frontier[:, None] // place[None, :]) % q
        found = []
        for sd in step_digits:
            nb = F.add(fd, sd[None, :]).astype(np.int64) @ place
            nb = nb[dist[nb] < 0]
            dist[nb] = level
            found.append(nb)
        frontier = np.unique(np.concatenate(found))
    far = int(np.argmax(dist))
    syn = tuple(int(x) for x in (far // place) % q)
    return CoveringRadius(int(dist[far]), "syndrome", syn)


def covering_radius(A: OrthogonalArray, caps: Caps = DEFAULT_CAPS, method: str = "auto") -> CoveringRadius:
    """Exact covering radius.

    ``method`` is ``"exhaustive"``, ``"syndrome"`` (linear-origin arrays) or
    ``"auto"``, which prefers the smaller of the two search spaces.
    """
    if method == "exhaustive":
        return covering_radius_exhaustive(A, caps)
    if method == "syndrome":
        if A.origin is None:
            raise ParameterError("the syndrome method needs a linear-origin array")
        return covering_radius_syndrome(A.origin, caps)
    if A.origin is not None and A.q ** (A.n - A.origin.k) <= min(caps.space, A.q**A.n):
        return covering_radius_syndrome(A.origin, caps)
    return covering_radius_exhaustive(A, caps)


# -- ball volumes --------------------------------------------------------------


@dataclass(frozen=True)
class BallVolume:
    variant: str
    length: int
    rho: int
    q: int
    value: int


def ball_volume(variant: str, length: int, rho: int, q: int) -> BallVolume:
    """Sum_{i<=rho} C(length, i) (q-1)^i.

    ``variant="truncated"`` takes the strength t as ``length``; ``"standard"``
    takes the word length n. The arithmetic is identical.
    """
    if variant not in ("truncated", "standard"):
        raise ParameterError(f"unknown ball-volume variant {variant!r}")
    if not 0 <= rho <= length:
        raise ParameterError(f"radius {rho} outside [0, {length}]")
    value = sum(math.comb(length, i) * (q - 1) ** i for i in range(rho + 1))
    return BallVolume(variant, length, rho, q, value)


# -- text export ---------------------------------------------------------------


def format_array(A: OrthogonalArray, sep: str = " ", irredundant: bool | None = None, extra=()) -> str:
    t = A.require_t()
    tag = "OA" if irredundant is False else "IrOA"
    lines = [f"# {tag} M={A.M} n={A.n} q={A.q} t={t} lambda={A.lam}"]
    lines.extend(extra)
    lines.extend(sep.join(str(int(x)) for x in row) for row in A.rows)
    return "\n".join(lines) + "\n"


def parse_array(text: str) -> OrthogonalArray:
    header, rows, extra = None, [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if header is None:
                header = line
            else:
                extra.append(line)
            continue
        rows.append([int(x) for x in line.replace(",", " ").split()])
    if header is None or not (header.startswith("# IrOA") or header.startswith("# OA")):
        raise ParameterError("missing '# IrOA M=.. n=.. q=.. t=.. lambda=..' header")
    try:
        fields = dict(tok.split("=") for tok in header.split()[2:])
        M, n, q = int(fields["M"]), int(fields["n"]), int(fields["q"])
        t, lam = int(fields["t"]), int(fields["lambda"])
    except (KeyError, ValueError) as exc:
        raise ParameterError(f"malformed array header {header!r}: {exc}") from None
    if len(rows) != M or any(len(r) != n for r in rows):
        raise ParameterError(f"array body does not match header M={M} n={n}")
    A = OrthogonalArray(np.array(rows, dtype=np.int64), q)
    try:
        A.field = gf(q)
    except ParameterError:
        A.field = None
    A.t, A.lam = t, lam
    return A

"""Certificates for the irredundancy results and bounds.

Every check evaluates concrete numbers and records one :class:`Claim` per
statement. Claims marked ``asserted=False`` are evaluate-and-report: their
status is recorded faithfully but never counts as a failure. This applies to
the two covering statements that rest on a ball volume built from C(t, i)
rather than C(n, i), and to a size formula that only matches for q = 2.
"""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any

import numpy as np

from ._version import __version__
from .caps import DEFAULT_CAPS, Caps
from .code import LinearCode, dual, is_mds, is_self_dual, min_distance, same_code
from .constructions import (
    grm_code,
    grm_evaluation_matrix,
    grm_params,
    grs_code,
    grs_spec,
    rm_code,
    rm_dimension,
    search_self_dual_grs,
)
from .corpus import named_codes, random_corpus, subject_seed
from .exceptions import DegenerateDual, NotMDS, ParameterError, ParamOutOfRange, RhoNotExhaustive
from .field import gf
from .matrix import rank
from .oa import (
    CoveringRadius,
    OrthogonalArray,
    ball_volume,
    covering_radius,
    is_irredundant_direct,
    min_distance_array,
    oa_from_code,
    strength,
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"
SAMPLED = "sampled"
STATUSES = (HOLDS, VIOLATED, NOT_APPLICABLE, SAMPLED)


def _plain(x):
    """Convert numpy scalars, tuples and Fractions to JSON-ready values."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return x


@dataclass
class Claim:
    name: str
    anchor: str
    status: str
    lhs: Any = None
    rhs: Any = None
    witness: Any = None
    asserted: bool = True

    def to_dict(self):
        return _plain(asdict(self))


@dataclass
class Certificate:
    subject: str
    claims: list = field(default_factory=list)

    def check(self, name, anchor, ok, lhs, rhs, *, witness=None, exhaustive=True, asserted=True):
        """Record an evaluated claim; a failed one always gets a witness."""
        if ok:
            status = HOLDS if exhaustive else SAMPLED
        else:
            status = VIOLATED
            if witness is None:
                witness = {"lhs": lhs, "rhs": rhs}
        claim = Claim(name, anchor, status, lhs, rhs, witness, asserted)
        self.claims.append(claim)
        return claim

    def skip(self, name, anchor, reason, asserted=True):
        claim = Claim(name, anchor, NOT_APPLICABLE, witness={"reason": reason}, asserted=asserted)
        self.claims.append(claim)
        return claim

    def extend(self, other: Certificate):
        self.claims.extend(other.claims)
        return self

    def get(self, name) -> Claim:
        for c in self.claims:
            if c.name == name:
                return c
        raise KeyError(name)

    def violations(self, asserted_only=True):
        return [c for c in self.claims if c.status == VIOLATED and (c.asserted or not asserted_only)]

    @property
    def ok(self) -> bool:
        return not self.violations()

    def to_dict(self):
        return {"subject": self.subject, "claims": [c.to_dict() for c in self.claims]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=1)


# -- shared helpers --------------------------------------------------------------


def _strength_claim(cert, prefix, A, expected, caps, seed, anchor):
    rep = strength(A, caps, seed)
    cert.check(
        f"{prefix}.strength", anchor, rep.t == expected, rep.t, expected,
        exhaustive=rep.exhaustive,
        witness={"unbalanced_columns": rep.unbalanced, "computed_t": rep.t} if rep.t != expected else None,
    )
    return rep


def _irredundant_claim(cert, prefix, A, expected, caps, seed, anchor):
    rep = is_irredundant_direct(A, caps, seed)
    witness = None
    if rep.irredundant != expected:
        witness = {"columns": rep.witness[0], "rows": rep.witness[1]} if rep.witness else {"irredundant": rep.irredundant}
    cert.check(f"{prefix}.irredundant", anchor, rep.irredundant == expected, rep.irredundant, expected,
               exhaustive=rep.exhaustive, witness=witness)
    return rep


def _iroa_claims(cert, prefix, A, M, n, q, t, caps, seed):
    """Verify an asserted IrOA(M, n, q, t) against the array ``A``."""
    cert.check(f"{prefix}.M", "number of rows", A.M == M, A.M, M)
    cert.check(f"{prefix}.n", "number of columns", A.n == n, A.n, n)
    cert.check(f"{prefix}.q", "alphabet size", A.q == q, A.q, q)
    _strength_claim(cert, prefix, A, t, caps, seed, "maximal strength by projection counts")
    _irredundant_claim(cert, prefix, A, True, caps, seed, "every (n-t)-column projection has distinct rows")
    cert.check(f"{prefix}.length_bound", "n >= 2t", n >= 2 * t, n, 2 * t)


# -- dual pairs ---------------------------------------------------------------------


@dataclass(frozen=True)
class DualPairVerdict:
    n: int
    d: int
    d_dual: int
    t: int
    t_dual: int
    primal_irredundant: bool
    dual_irredundant: bool
    direct_primal: bool
    direct_dual: bool
    exhaustive: bool
    strength_primal: int
    strength_dual: int
    primal_witness: Any = None
    dual_witness: Any = None

    @property
    def category(self) -> str:
        if self.primal_irredundant and self.dual_irredundant:
            return "both"
        return "primal-only" if self.primal_irredundant else "dual-only"

    @property
    def agree(self) -> bool:
        return self.primal_irredundant == self.direct_primal and self.dual_irredundant == self.direct_dual

    def certificate(self, subject: str) -> Certificate:
        cert = Certificate(subject)
        ex = self.exhaustive
        cert.check("dual_pair.primal_criterion", "C irredundant iff d >= d_dual",
                   self.direct_primal == self.primal_irredundant, self.direct_primal, self.primal_irredundant,
                   exhaustive=ex, witness=None if self.direct_primal == self.primal_irredundant else
                   {"d": self.d, "d_dual": self.d_dual, "projection_witness": self.primal_witness})
        cert.check("dual_pair.dual_criterion", "C_dual irredundant iff d_dual >= d",
                   self.direct_dual == self.dual_irredundant, self.direct_dual, self.dual_irredundant,
                   exhaustive=ex, witness=None if self.direct_dual == self.dual_irredundant else
                   {"d": self.d, "d_dual": self.d_dual, "projection_witness": self.dual_witness})
        cert.check("dual_pair.at_least_one", "at least one of C, C_dual is irredundant",
                   self.direct_primal or self.direct_dual, int(self.direct_primal) + int(self.direct_dual), 1,
                   exhaustive=ex)
        both = self.direct_primal and self.direct_dual
        cert.check("dual_pair.both_iff_equal", "both irredundant iff d == d_dual",
                   both == (self.d == self.d_dual), both, self.d == self.d_dual, exhaustive=ex)
        for side, (direct, d, t) in {"primal": (self.direct_primal, self.d, self.t),
                                     "dual": (self.direct_dual, self.d_dual, self.t_dual)}.items():
            cert.check(f"oa.irredundant_iff_distance[{side}]", "irredundant iff d >= t + 1",
                       direct == (d >= t + 1), direct, d >= t + 1, exhaustive=ex,
                       witness=None if direct == (d >= t + 1) else {"d": d, "t": t})
        cert.check("oa.strength_is_dual_distance_minus_one[primal]", "strength = d_dual - 1",
                   self.strength_primal == self.t, self.strength_primal, self.t)
        cert.check("oa.strength_is_dual_distance_minus_one[dual]", "strength of dual = d - 1",
                   self.strength_dual == self.t_dual, self.strength_dual, self.t_dual)
        cert.check("dual_pair.distance_sum", "d + d_dual <= n + 2",
                   self.d + self.d_dual <= self.n + 2, self.d + self.d_dual, self.n + 2)
        cert.check("dual_pair.length_bound", "n >= 2 min(t, t_dual)",
                   self.n >= 2 * min(self.t, self.t_dual), self.n, 2 * min(self.t, self.t_dual))
        return cert


def classify_dual_pair(C: LinearCode, caps: Caps = DEFAULT_CAPS, seed: int = 0) -> DualPairVerdict:
    """Decide which of C, C_dual is irredundant, by distances and by projections."""
    if C.k >= C.n:
        raise DegenerateDual(f"[{C.n},{C.k}] code has a zero dual")
    D = dual(C)
    d = min_distance(C, caps.enum, caps.subsets)
    dp = min_distance(D, caps.enum, caps.subsets)
    A = oa_from_code(C, caps)
    B = oa_from_code(D, caps)
    sa = strength(A, caps, seed)
    sb = strength(B, caps, seed)
    ra = is_irredundant_direct(A, caps, seed)
    rb = is_irredundant_direct(B, caps, seed)
    return DualPairVerdict(
        n=C.n, d=d, d_dual=dp, t=A.t, t_dual=B.t,
        primal_irredundant=d >= dp, dual_irredundant=dp >= d,
        direct_primal=ra.irredundant, direct_dual=rb.irredundant,
        exhaustive=ra.exhaustive and rb.exhaustive,
        strength_primal=sa.t, strength_dual=sb.t,
        primal_witness=ra.witness, dual_witness=rb.witness,
    )


# -- array-level checks ------------------------------------------------------------


def _array_facts(A: OrthogonalArray, caps, seed):
    t = A.require_t()
    if t >= A.n:
        raise ParameterError(f"degenerate array: strength {t} leaves n - t = {A.n - t} columns")
    d = min_distance_array(A, caps)
    irr = is_irredundant_direct(A, caps, seed)
    return t, A.lam, d, irr


def check_basic(A: OrthogonalArray, subject: str = "", caps: Caps = DEFAULT_CAPS, seed: int = 0) -> Certificate:
    """Index, distance and size relations that hold for every OA."""
    cert = Certificate(subject or A.name)
    t, lam, d, irr = _array_facts(A, caps, seed)
    n, q, M = A.n, A.q, A.M
    cert.check("oa.index", "M = lambda q^t", M == lam * q**t, M, lam * q**t)
    cert.check("oa.index_one_iff_singleton_distance", "lambda = 1 iff d = n - t + 1",
               (lam == 1) == (d == n - t + 1), lam == 1, d == n - t + 1, witness=None if
               (lam == 1) == (d == n - t + 1) else {"lambda": lam, "d": d, "n": n, "t": t})
    if lam == 1 and n >= 2 * t:
        cert.check("oa.index_one_implies_irredundant", "lambda = 1 and n >= 2t imply irredundant",
                   irr.irredundant, irr.irredundant, True, exhaustive=irr.exhaustive,
                   witness=None if irr.irredundant else {"projection_witness": irr.witness})
    else:
        cert.skip("oa.index_one_implies_irredundant", "lambda = 1 and n >= 2t imply irredundant",
                  f"lambda = {lam}, n = {n}, 2t = {2 * t}")
    cert.check("oa.irredundant_iff_distance", "irredundant iff d >= t + 1",
               irr.irredundant == (d >= t + 1), irr.irredundant, d >= t + 1, exhaustive=irr.exhaustive,
               witness=None if irr.irredundant == (d >= t + 1) else {"d": d, "t": t, "projection_witness": irr.witness})
    if irr.irredundant:
        cert.check("oa.irredundant_size_bound", "M <= q^(n-t)", M <= q ** (n - t), M, q ** (n - t),
                   exhaustive=irr.exhaustive)
        cert.check("oa.irredundant_length_bound", "n >= 2t", n >= 2 * t, n, 2 * t, exhaustive=irr.exhaustive)
    else:
        cert.skip("oa.irredundant_size_bound", "M <= q^(n-t)", "array is not irredundant")
        cert.skip("oa.irredundant_length_bound", "n >= 2t", "array is not irredundant")
    return cert


def check_extremal(A: OrthogonalArray, subject: str = "", caps: Caps = DEFAULT_CAPS, seed: int = 0) -> Certificate:
    """The two extremal cases n = 2t and M = q^(n-t)."""
    cert = Certificate(subject or A.name)
    t, lam, d, irr = _array_facts(A, caps, seed)
    n, q, M = A.n, A.q, A.M
    anchor = "n = 2t: irredundant iff lambda = 1 iff d = t + 1"
    if n == 2 * t:
        values = [irr.irredundant, lam == 1, d == t + 1]
        cert.check("extremal.half_length_equivalence", anchor, len(set(values)) == 1, values, [values[0]] * 3,
                   exhaustive=irr.exhaustive,
                   witness=None if len(set(values)) == 1 else {"irredundant": values[0], "lambda": lam, "d": d, "t": t})
    else:
        cert.skip("extremal.half_length_equivalence", anchor, f"n = {n} != 2t = {2 * t}")
    anchor = "M = q^(n-t): irredundant iff n = 2t"
    if M == q ** (n - t):
        ok = irr.irredundant == (n == 2 * t)
        cert.check("extremal.max_size_equivalence", anchor, ok, irr.irredundant, n == 2 * t,
                   exhaustive=irr.exhaustive, witness=None if ok else {"n": n, "t": t, "projection_witness": irr.witness})
    else:
        cert.skip("extremal.max_size_equivalence", anchor, f"M = {M} != q^(n-t) = {q ** (n - t)}")
    return cert


def _largest_power_m(lam, q, n, t):
    m = 0
    while lam >= q ** (m + 1) and n >= 2 * t + m + 1:
        m += 1
    return m


def check_distance_bounds(A: OrthogonalArray, subject: str = "", caps: Caps = DEFAULT_CAPS, seed: int = 0) -> Certificate:
    """Upper and lower bounds on d for arrays of index greater than one."""
    cert = Certificate(subject or A.name)
    t, lam, d, irr = _array_facts(A, caps, seed)
    n, q = A.n, A.q
    if lam == 1:
        cert.check("distance.index_one", "lambda = 1 gives d = n - t + 1", d == n - t + 1, d, n - t + 1)
        for name in ("distance.lower", "distance.upper", "distance.upper_conditional", "distance.upper_large_index"):
            cert.skip(name, "index > 1 required", "lambda = 1")
        return cert
    cert.skip("distance.index_one", "lambda = 1 gives d = n - t + 1", f"lambda = {lam}")
    if irr.irredundant:
        cert.check("distance.lower", "IrOA: t + 1 <= d", t + 1 <= d, t + 1, d, exhaustive=irr.exhaustive)
    else:
        cert.skip("distance.lower", "IrOA: t + 1 <= d", "array is not irredundant")
    cert.check("distance.upper", "lambda > 1: d <= n - t", d <= n - t, d, n - t)
    guard = Fraction(lam * (q - 1), lam - 1)
    anchor = "lambda > 1 and n - t > lambda(q-1)/(lambda-1): d <= n - t - 1"
    if n - t > guard:
        cert.check("distance.upper_conditional", anchor, d <= n - t - 1, d, n - t - 1,
                   witness=None if d <= n - t - 1 else {"d": d, "n": n, "t": t, "lambda": lam, "guard": guard})
    else:
        cert.skip("distance.upper_conditional", anchor, f"n - t = {n - t} <= {guard}")
    anchor = "IrOA, lambda >= q^m, n >= 2t + m: d <= n - t - m + 1 (largest such m)"
    m = _largest_power_m(lam, q, n, t)
    if not irr.irredundant:
        cert.skip("distance.upper_large_index", anchor, "array is not irredundant")
    elif m < 1:
        cert.skip("distance.upper_large_index", anchor, "no m >= 1 with lambda >= q^m and n >= 2t + m")
    else:
        cert.check("distance.upper_large_index", anchor, d <= n - t - m + 1, d, n - t - m + 1,
                   exhaustive=irr.exhaustive,
                   witness={"m": m} if d <= n - t - m + 1 else {"m": m, "d": d, "lambda": lam})
    return cert


def check_covering_bounds(A: OrthogonalArray, rho, subject: str = "", caps: Caps = DEFAULT_CAPS,
                          seed: int = 0) -> Certificate:
    """Covering-radius bounds for an array with exact radius ``rho``.

    Delsarte's bound, its two refinements, the sphere-covering inequality,
    rho >= floor((d-1)/2) and, for irredundant arrays with M = q^(n-t),
    rho <= t are asserted. The index-volume inequalities and the exact-value
    statement rho = t are evaluated with both ball-volume variants and
    reported without gating.
    """
    witness_vec = None
    if isinstance(rho, CoveringRadius):
        if rho.method not in ("exhaustive", "syndrome"):
            raise RhoNotExhaustive(f"covering radius from method {rho.method!r} is not exact")
        witness_vec, rho = rho.witness, rho.rho
    elif not isinstance(rho, (int, np.integer)):
        raise RhoNotExhaustive("an exact integer covering radius is required")
    rho = int(rho)
    cert = Certificate(subject or A.name)
    t, lam, d, irr = _array_facts(A, caps, seed)
    n, q, M = A.n, A.q, A.M
    ex = irr.exhaustive

    cert.check("covering.delsarte", "rho <= n - t", rho <= n - t, rho, n - t)
    anchor = "n > t + q - 1: rho <= n - t - 1"
    if n > t + q - 1:
        cert.check("covering.refinement_1", anchor, rho <= n - t - 1, rho, n - t - 1)
    else:
        cert.skip("covering.refinement_1", anchor, f"n = {n} <= t + q - 1 = {t + q - 1}")
    anchor = "n > 2(t + q - 1): rho <= n - t - 2"
    if n > 2 * (t + q - 1):
        cert.check("covering.refinement_2", anchor, rho <= n - t - 2, rho, n - t - 2)
    else:
        cert.skip("covering.refinement_2", anchor, f"n = {n} <= 2(t + q - 1) = {2 * (t + q - 1)}")
    cert.check("covering.packing_lower", "rho >= floor((d-1)/2)", rho >= (d - 1) // 2, rho, (d - 1) // 2)
    v_std = ball_volume("standard", n, rho, q).value
    cert.check("covering.sphere_covering", "M V_q(n, rho) >= q^n", M * v_std >= q**n, M * v_std, q**n)

    v_trunc = ball_volume("truncated", t, min(rho, t), q).value
    volumes = {"V_q(t,rho)": v_trunc, "V_q(n,rho)": v_std, "rho": rho, "t": t, "n": n, "lambda": lam}
    cert.check("covering.index_volume[truncated]", "lambda V_q(t, rho) >= q^(n-t)", lam * v_trunc >= q ** (n - t),
               lam * v_trunc, q ** (n - t), witness=volumes if lam * v_trunc < q ** (n - t) else None, asserted=False)
    cert.check("covering.index_volume[standard]", "lambda V_q(n, rho) >= q^(n-t)", lam * v_std >= q ** (n - t),
               lam * v_std, q ** (n - t), witness=volumes if lam * v_std < q ** (n - t) else None, asserted=False)

    if irr.irredundant:
        cert.check("covering.iroa_volume[truncated]", "IrOA: V_q(t, rho) >= q^t", v_trunc >= q**t, v_trunc, q**t,
                   exhaustive=ex, witness=volumes if v_trunc < q**t else None, asserted=False)
        cert.check("covering.iroa_volume[standard]", "IrOA: V_q(n, rho) >= q^t", v_std >= q**t, v_std, q**t,
                   exhaustive=ex, witness=volumes if v_std < q**t else None, asserted=False)
        cert.check("covering.half_strength_lower", "IrOA: floor(t/2) <= rho", t // 2 <= rho, t // 2, rho,
                   exhaustive=ex)
    else:
        for name in ("covering.iroa_volume[truncated]", "covering.iroa_volume[standard]"):
            cert.skip(name, "IrOA volume inequality", "array is not irredundant", asserted=False)
        cert.skip("covering.half_strength_lower", "IrOA: floor(t/2) <= rho", "array is not irredundant")

    if irr.irredundant and M == q ** (n - t):
        cert.check("covering.max_size_upper", "IrOA with M = q^(n-t): rho <= t", rho <= t, rho, t, exhaustive=ex)
        w = dict(volumes, farthest=witness_vec, **{"q^t": q**t})
        cert.check("covering.max_size_exact", "IrOA with M = q^(n-t): rho = t", rho == t, rho, t,
                   exhaustive=ex, witness=w if rho != t else None, asserted=False)
    else:
        reason = "array is not irredundant" if not irr.irredundant else f"M = {M} != q^(n-t) = {q ** (n - t)}"
        cert.skip("covering.max_size_upper", "IrOA with M = q^(n-t): rho <= t", reason)
        cert.skip("covering.max_size_exact", "IrOA with M = q^(n-t): rho = t", reason, asserted=False)
    return cert


# -- code families ---------------------------------------------------------------------


def check_rm_parameters(r: int, m: int, caps: Caps = DEFAULT_CAPS) -> Certificate:
    """Dimension, minimum distance and dual of R(r, m) by brute force."""
    cert = Certificate(f"rm-family(r={r},m={m})")
    C = rm_code(r, m)
    k = rm_dimension(r, m)
    cert.check("rm.dimension", "rank G(r,m) = sum_{i<=r} C(m,i)", C.k == k, C.k, k)
    d = min_distance(C, caps.enum, caps.subsets)
    cert.check("rm.min_distance", "d = 2^(m-r)", d == 2 ** (m - r), d, 2 ** (m - r))
    if r < m:
        ok = same_code(dual(C), rm_code(m - r - 1, m))
        cert.check("rm.dual", "R(r,m)_dual = R(m-r-1,m)", ok, ok, True)
    else:
        cert.skip("rm.dual", "R(r,m)_dual = R(m-r-1,m)", "r = m: the dual is the zero code")
    return cert


def rm_case(r: int, m: int) -> int | None:
    if m == 2 * r + 1:
        return 1
    if 1 <= r <= m < 2 * r + 1:
        return 2
    if m > max(2 * r + 1, r + 2):
        return 3
    return None


def check_rm_theorem(r: int, m: int, caps: Caps = DEFAULT_CAPS, seed: int | None = None) -> Certificate:
    """Which of R(r,m), R(r,m)_dual is an IrOA, and with which parameters."""
    if m < 1 or not 0 <= r <= m:
        raise ParamOutOfRange(f"need 0 <= r <= m, m >= 1; got r={r}, m={m}")
    subject = f"rm-theorem(r={r},m={m})"
    seed = subject_seed(subject) if seed is None else seed
    cert = Certificate(subject)
    case = rm_case(r, m)
    n = 2**m
    cert.check("rm.case", "which irredundancy case applies", True, case, case)
    if case is None:
        cert.skip("rm.iroa", "no case applies", f"r={r}, m={m} outside all guards")
        return cert
    C = rm_code(r, m)
    if case == 1:
        sd = is_self_dual(C)
        cert.check("rm.self_dual", "m = 2r+1: R(r,m) is self-dual", sd, sd, True)
        A = oa_from_code(C, caps)
        cert.check("rm.size_half_length", "M = q^(n/2)", A.M == 2 ** (n // 2), A.M, 2 ** (n // 2))
        cert.check("rm.size_formula", "M = 2^(2^(m-1))", A.M == 2 ** (2 ** (m - 1)), A.M, 2 ** (2 ** (m - 1)))
        _iroa_claims(cert, "rm.iroa", A, 2 ** (2 ** (m - 1)), n, 2, 2 ** (r + 1) - 1, caps, seed)
    elif case == 2:
        k_dual = rm_dimension(m - r - 1, m) if r < m else 0
        if r == m:
            cert.skip("rm.iroa", "dual array IrOA(2^k', 2^m, 2, 2^(m-r)-1)",
                      "r = m: the dual is the zero code (k' = 0, t = 0)")
            return cert
        D = dual(C)
        dd = min_distance(C, caps.enum, caps.subsets)
        ddp = min_distance(D, caps.enum, caps.subsets)
        cert.check("rm.dual_distance_exceeds", "m < 2r+1: d_dual > d", ddp > dd, ddp, dd)
        cert.check("rm.dual_dimension", "k' = sum_{i<=m-r-1} C(m,i)", D.k == k_dual, D.k, k_dual)
        A = oa_from_code(D, caps)
        _iroa_claims(cert, "rm.iroa", A, 2**k_dual, n, 2, 2 ** (m - r) - 1, caps, seed)
    else:
        k = rm_dimension(r, m)
        dd = min_distance(C, caps.enum, caps.subsets)
        ddp = min_distance(dual(C), caps.enum, caps.subsets)
        cert.check("rm.distance_exceeds_dual", "m > 2r+1: d > d_dual", dd > ddp, dd, ddp)
        A = oa_from_code(C, caps)
        _iroa_claims(cert, "rm.iroa", A, 2**k, n, 2, 2 ** (r + 1) - 1, caps, seed)
    return cert


def check_grm_parameters(q: int, r: int, m: int, caps: Caps = DEFAULT_CAPS) -> Certificate:
    """Closed-form GRM parameters against the evaluation matrix."""
    cert = Certificate(f"grm-family(q={q},r={r},m={m})")
    p = grm_params(q, r, m)
    E = grm_evaluation_matrix(q, r, m)
    rk = rank(E)
    cert.check("grm.dimension", "rank of evaluation matrix = alternating-sum formula", rk == p.k, rk, p.k)
    C = grm_code(q, r, m, cap=caps.space)
    d = min_distance(C, caps.enum, caps.subsets)
    cert.check("grm.min_distance", "d = (q-b) q^(m-a-1)", d == p.d, d, p.d, witness=None if d == p.d else
               {"a": p.a, "b": p.b, "d": d})
    if p.r_dual >= 0:
        ok = same_code(dual(C), grm_code(q, p.r_dual, m, cap=caps.space))
        cert.check("grm.dual", "R_q(r,m)_dual = R_q(m(q-1)-1-r, m)", ok, ok, True)
        dp = min_distance(dual(C), caps.enum, caps.subsets)
        cert.check("grm.dual_distance", "d_dual = (b+2) q^a", dp == p.d_dual, dp, p.d_dual)
    else:
        cert.skip("grm.dual", "R_q(r,m)_dual = R_q(m(q-1)-1-r, m)", "r = m(q-1): the dual is the zero code")
        cert.skip("grm.dual_distance", "d_dual = (b+2) q^a", "r = m(q-1): the dual is the zero code")
    return cert


def grm_case(q: int, r: int, m: int) -> int | None:
    a, b = divmod(r, q - 1)
    lhs = m * (q - 1)
    if lhs == 2 * r + 1:
        return 1
    if lhs < 2 * r + 1 and q ** (a + 1) >= 2 * (q - b):
        return 2
    if lhs > 2 * r + 1 and q ** (m - a) >= 2 * (b + 2):
        return 3
    return None


def check_grm_theorem(q: int, r: int, m: int, caps: Caps = DEFAULT_CAPS, seed: int | None = None) -> Certificate:
    subject = f"grm-theorem(q={q},r={r},m={m})"
    seed = subject_seed(subject) if seed is None else seed
    cert = Certificate(subject)
    p = grm_params(q, r, m)
    n = q**m
    if n > caps.space:
        raise ParamOutOfRange(f"q^m = {n} exceeds the space cap")
    case = grm_case(q, r, m)
    cert.check("grm.case", "which irredundancy case applies", True, case, case,
               witness={"a": p.a, "b": p.b, "r_dual": p.r_dual})
    if case is None:
        cert.skip("grm.iroa", "no case applies", f"guards fail for q={q}, r={r}, m={m}")
        return cert
    C = grm_code(q, r, m, cap=caps.space)
    d = min_distance(C, caps.enum, caps.subsets)
    cert.check("grm.min_distance", "d = (q-b) q^(m-a-1)", d == p.d, d, p.d)
    if case == 1:
        cert.check("grm.case1_odd_length", "m = 2a + 1", m == 2 * p.a + 1, m, 2 * p.a + 1)
        cert.check("grm.case1_remainder", "2b + 1 = q - 1", 2 * p.b + 1 == q - 1, 2 * p.b + 1, q - 1)
        sd = is_self_dual(C)
        cert.check("grm.self_dual", "m(q-1) = 2r+1: R_q(r,m) is self-dual", sd, sd, True)
        A = oa_from_code(C, caps)
        cert.check("grm.size_half_length", "M = q^(n/2)", A.M == q ** (n // 2), A.M, q ** (n // 2))
        claimed = q ** (q ** (m - 1))
        cert.check("grm.size_formula", "M = q^(q^(m-1))", A.M == claimed, A.M, claimed, asserted=False,
                   witness=None if A.M == claimed else {"note": "q^(m-1) = n/2 only for q = 2", "n": n})
        _iroa_claims(cert, "grm.iroa", A, q ** (n // 2), n, q, p.d - 1, caps, seed)
        return cert
    if p.r_dual < 0:
        cert.skip("grm.iroa", "dual array IrOA(q^k, q^m, q, d-1)",
                  "r = m(q-1): the dual is the zero code (k = 0, t = 0)")
        return cert
    D = dual(C)
    dp = min_distance(D, caps.enum, caps.subsets)
    cert.check("grm.dual_distance", "d_dual = (b+2) q^a", dp == p.d_dual, dp, p.d_dual)
    if case == 2:
        cert.check("grm.dual_distance_exceeds", "m(q-1) < 2r+1: d_dual > d", dp > d, dp, d)
        cert.check("grm.dual_dimension", "k from the formula at r_dual", D.k == p.k_dual, D.k, p.k_dual)
        cert.check("grm.guard", "q^(a+1) >= 2(q-b)", True, q ** (p.a + 1), 2 * (q - p.b))
        A = oa_from_code(D, caps)
        _iroa_claims(cert, "grm.iroa", A, q**p.k_dual, n, q, p.d - 1, caps, seed)
    else:
        cert.check("grm.distance_exceeds_dual", "m(q-1) > 2r+1: d > d_dual", d > dp, d, dp)
        cert.check("grm.guard", "q^(m-a) >= 2(b+2)", True, q ** (m - p.a), 2 * (p.b + 2))
        A = oa_from_code(C, caps)
        _iroa_claims(cert, "grm.iroa", A, q**p.k, n, q, p.d_dual - 1, caps, seed)
    return cert


def check_mds_theorems(C: LinearCode, subject: str = "", caps: Caps = DEFAULT_CAPS, seed: int | None = None) -> Certificate:
    """Strengths and irredundancy of an MDS code and its dual."""
    subject = subject or f"mds[{C.n},{C.k}]_{C.q}"
    seed = subject_seed(subject) if seed is None else seed
    if not is_mds(C, caps.enum, caps.subsets):
        raise NotMDS(f"{C} has d = {C.cached_d} != n - k + 1 = {C.n - C.k + 1}")
    n, k, q = C.n, C.k, C.q
    cert = Certificate(subject)
    d = min_distance(C, caps.enum, caps.subsets)
    cert.check("mds.singleton", "d = n - k + 1", d == n - k + 1, d, n - k + 1)
    D = dual(C)
    dp = min_distance(D, caps.enum, caps.subsets)
    cert.check("mds.dual_mds", "d_dual = k + 1", dp == k + 1, dp, k + 1)
    A = oa_from_code(C, caps)
    B = oa_from_code(D, caps)
    _strength_claim(cert, "mds.primal", A, k, caps, seed, "C is an OA(q^k, n, q, k)")
    _strength_claim(cert, "mds.dual", B, n - k, caps, seed, "C_dual is an OA(q^(n-k), n, q, n-k)")
    _irredundant_claim(cert, "mds.primal", A, n >= 2 * k, caps, seed, "C irredundant iff n >= 2k")
    _irredundant_claim(cert, "mds.dual", B, n <= 2 * k, caps, seed, "C_dual irredundant iff n <= 2k")
    if is_self_dual(C):
        _iroa_claims(cert, "mds.self_dual_iroa", A, q ** (n // 2), n, q, n // 2, caps, seed)
    else:
        cert.skip("mds.self_dual_iroa", "self-dual MDS gives IrOA(q^(n/2), n, q, n/2)", "code is not self-dual")
    return cert


# -- sweeps -------------------------------------------------------------------------------


def run_subjects(tasks, n_jobs: int = 1) -> list[Certificate]:
    """Run ``(subject, thunk)`` tasks; output is sorted by subject."""
    if n_jobs <= 1:
        certs = [fn() for _, fn in tasks]
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as ex:
            certs = list(ex.map(lambda task: task[1](), tasks))
    return sorted(certs, key=lambda c: c.subject)


def sweep_rm_parameters(max_m: int = 5, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    tasks = [(f"{r},{m}", lambda r=r, m=m: check_rm_parameters(r, m, caps))
             for m in range(1, max_m + 1) for r in range(m + 1)]
    return run_subjects(tasks, n_jobs)


def sweep_rm_theorem(max_m: int = 5, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    tasks = [(f"{r},{m}", lambda r=r, m=m: check_rm_theorem(r, m, caps))
             for m in range(1, max_m + 1) for r in range(m + 1)]
    return run_subjects(tasks, n_jobs)


GRM_GRID = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (4, 1), (4, 2)]


def sweep_grm(grid=GRM_GRID, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    tasks = []
    for q, m in grid:
        for r in range(m * (q - 1) + 1):
            tasks.append((f"p{q},{r},{m}", lambda q=q, r=r, m=m: check_grm_parameters(q, r, m, caps)))
            tasks.append((f"t{q},{r},{m}", lambda q=q, r=r, m=m: check_grm_theorem(q, r, m, caps)))
    return run_subjects(tasks, n_jobs)


def _dual_pair_cert(subject, C, caps):
    return classify_dual_pair(C, caps, subject_seed(subject)).certificate(subject)


def sweep_random(count: int = 200, seed: int = 7, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    tasks = [(s, lambda s=s, C=C: _dual_pair_cert(s, C, caps)) for s, C in random_corpus(count, seed)]
    return run_subjects(tasks, n_jobs)


def mds_corpus(qs=(5, 7, 8), max_n: int = 7, seed: int = 0):
    """GRS codes with the first n points and seeded nonzero multipliers."""
    out = []
    for q in qs:
        F = gf(q)
        for n in range(2, min(q - 1, max_n) + 1):
            for k in range(1, n):
                rng = np.random.default_rng([seed, q, n, k])
                v = rng.integers(1, q, size=n).tolist()
                out.append((f"grs[{n},{k}]_{q} v={''.join(map(str, v))}", grs_code(grs_spec(F, n, k, multipliers=v))))
    return out


def sweep_mds(qs=(5, 7, 8), max_n: int = 7, seed: int = 0, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    tasks = [(s, lambda s=s, C=C: check_mds_theorems(C, s, caps)) for s, C in mds_corpus(qs, max_n, seed)]
    return run_subjects(tasks, n_jobs)


def check_sdgrs(q: int, n: int, caps: Caps = DEFAULT_CAPS) -> Certificate:
    subject = f"sdgrs(q={q},n={n})"
    cert = Certificate(subject)
    found = search_self_dual_grs(gf(q), n, caps.search, caps.enum)
    if found is None:
        cert.skip("sdgrs.found", "a self-dual GRS code exists for these points", "no multiplier vector works")
        return cert
    C, v = found
    cert.check("sdgrs.found", "a self-dual GRS code exists for these points", True, list(v), list(v))
    cert.check("sdgrs.gram", "G G^T = 0", is_self_dual(C), is_self_dual(C), True)
    d = min_distance(C, caps.enum, caps.subsets)
    cert.check("sdgrs.distance", "d = n/2 + 1", d == n // 2 + 1, d, n // 2 + 1)
    return cert.extend(check_mds_theorems(C, subject, caps))


def sweep_sdgrs(qs=(4, 8), n: int = 4, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    tasks = [(str(q), lambda q=q: check_sdgrs(q, n, caps)) for q in qs]
    return run_subjects(tasks, n_jobs)


def _code_arrays(subject, C, caps):
    """The arrays of C and of its dual, when both are nondegenerate."""
    out = [(f"{subject}", oa_from_code(C, caps, subject))]
    if C.n - C.k < C.n:
        out.append((f"{subject}^dual", oa_from_code(dual(C), caps, subject + "^dual")))
    return out


def index_one_suite(caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    """Index-one and n = 2t statements on the small named arrays."""
    codes = named_codes()
    picked = ["tetracode", "rm(0,1)", "rm(1,2)", "rm(1,3)", "grs[4,2]_5"]

    def run(name):
        cert = Certificate(name)
        for sub, A in _code_arrays(name, codes[name], caps):
            seed = subject_seed(sub)
            for c in check_basic(A, sub, caps, seed).claims + check_extremal(A, sub, caps, seed).claims:
                c.name = f"{c.name}[{'dual' if sub.endswith('^dual') else 'primal'}]"
                cert.claims.append(c)
        return cert

    return run_subjects([(p, lambda p=p: run(p)) for p in picked], n_jobs)


def distance_corpus(random_count: int = 200, seed: int = 7):
    return list(named_codes().items()) + random_corpus(random_count, seed)


def distance_suite(random_count: int = 200, seed: int = 7, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    """Distance bounds on every corpus array (code and dual)."""

    def run(subject, C):
        cert = Certificate(subject)
        for sub, A in _code_arrays(subject, C, caps):
            if A.t == 0:
                cert.skip(f"distance.bounds[{sub}]", "positive strength required", "strength 0")
                continue
            for c in check_distance_bounds(A, sub, caps, subject_seed(sub)).claims:
                c.name = f"{c.name}[{'dual' if sub.endswith('^dual') else 'primal'}]"
                cert.claims.append(c)
        return cert

    tasks = [(s, lambda s=s, C=C: run(s, C)) for s, C in distance_corpus(random_count, seed)]
    return run_subjects(tasks, n_jobs)


COVERING_SUBJECTS = ("tetracode", "rm(1,3)", "repetition[3,1]_2", "hamming[7,4]_2")


def covering_suite(subjects=COVERING_SUBJECTS, caps: Caps = DEFAULT_CAPS, n_jobs: int = 1):
    """Exact covering radii by full scan and by syndromes, plus bounds."""
    codes = named_codes()

    def run(name):
        A = oa_from_code(codes[name], caps, name)
        full = covering_radius(A, caps, method="exhaustive")
        syn = covering_radius(A, caps, method="syndrome")
        cert = Certificate(name)
        cert.check("covering.methods_agree", "full scan and syndrome method agree", full.rho == syn.rho,
                   full.rho, syn.rho, witness=None if full.rho == syn.rho else {"full": full.witness, "syndrome": syn.witness})
        return cert.extend(check_covering_bounds(A, full, name, caps, subject_seed(name)))

    return run_subjects([(s, lambda s=s: run(s)) for s in subjects], n_jobs)


# -- reporting ---------------------------------------------------------------------------


def summarize(certs) -> dict:
    """Per-claim status counts; claim names drop a [primal]/[dual] suffix."""
    table: dict = {}
    for cert in certs:
        for c in cert.claims:
            key = c.name.removesuffix("[primal]").removesuffix("[dual]")
            row = table.setdefault(key, Counter({s: 0 for s in STATUSES}))
            row[c.status] += 1
    return {k: dict(v) for k, v in sorted(table.items())}


def asserted_violations(certs):
    return [(cert.subject, c) for cert in certs for c in cert.violations()]


def report_json(certs, config: dict | None = None) -> str:
    payload = {
        "version": __version__,
        "config": config or {},
        "summary": summarize(certs),
        "certificates": [c.to_dict() for c in certs],
    }
    return json.dumps(_plain(payload), sort_keys=True, indent=1)

"""Small named codes and the seeded random corpus used by the sweeps."""

from __future__ import annotations

import zlib

import numpy as np

from .code import LinearCode, code_from_generator
from .constructions import grs_code, grs_spec, rm_code
from .field import gf
from .matrix import GFMatrix, rank_array


def repetition(n: int, q: int = 2) -> LinearCode:
    return code_from_generator(GFMatrix(gf(q), np.ones((1, n), dtype=np.int64)))


def parity_check_code(n: int, q: int = 2) -> LinearCode:
    F = gf(q)
    G = np.zeros((n - 1, n), dtype=np.int64)
    G[:, : n - 1] = np.eye(n - 1, dtype=np.int64)
    G[:, n - 1] = int(F.neg(1))
    return code_from_generator(GFMatrix(F, G))


def hamming74() -> LinearCode:
    return code_from_generator(
        GFMatrix(
            gf(2),
            [
                [1, 0, 0, 0, 0, 1, 1],
                [0, 1, 0, 0, 1, 0, 1],
                [0, 0, 1, 0, 1, 1, 0],
                [0, 0, 0, 1, 1, 1, 1],
            ],
        )
    )


def tetracode() -> LinearCode:
    """The self-dual [4, 2, 3]_3 code, rows (1,0,1,1) and (0,1,1,-1)."""
    return code_from_generator(GFMatrix(gf(3), [[1, 0, 1, 1], [0, 1, 1, 2]]))


def full_space(n: int, q: int = 2) -> LinearCode:
    return code_from_generator(GFMatrix(gf(q), np.eye(n, dtype=np.int64)))


def named_codes() -> dict[str, LinearCode]:
    """The hand-picked corpus, keyed by subject identifier."""
    return {
        "tetracode": tetracode(),
        "hamming[7,4]_2": hamming74(),
        "repetition[3,1]_2": repetition(3, 2),
        "repetition[4,1]_2": repetition(4, 2),
        "repetition[5,1]_3": repetition(5, 3),
        "parity[4,3]_2": parity_check_code(4, 2),
        "rm(0,1)": rm_code(0, 1),
        "rm(1,2)": rm_code(1, 2),
        "rm(1,3)": rm_code(1, 3),
        "rm(1,4)": rm_code(1, 4),
        "rm(2,4)": rm_code(2, 4),
        "grs[4,2]_5": grs_code(grs_spec(gf(5), 4, 2)),
        "grs[6,2]_7": grs_code(grs_spec(gf(7), 6, 2)),
        "grs[6,3]_7": grs_code(grs_spec(gf(7), 6, 3)),
    }


def subject_seed(subject: str, seed: int = 0) -> int:
    """Stable per-subject seed, independent of scheduling order."""
    return (zlib.crc32(subject.encode()) ^ (seed * 0x9E3779B1)) & 0xFFFFFFFF


def random_code(rng: np.random.Generator, q: int, n: int, k: int) -> LinearCode:
    """Uniform k x n generator over F_q, redrawn until it has rank k."""
    F = gf(q)
    while True:
        G = rng.integers(0, q, size=(k, n))
        if rank_array(F, G.astype(F.dtype)) == k:
            return code_from_generator(GFMatrix(F, G))


def random_corpus(count: int = 200, seed: int = 7, qs=(2, 3), n_range=(4, 12)):
    """``count`` seeded random codes as ``(subject, code)`` pairs.

    Code ``i`` depends only on ``(seed, i)``.
    """
    out = []
    for i in range(count):
        rng = np.random.default_rng([seed, i])
        q = int(rng.choice(qs))
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        k = int(rng.integers(1, n))
        out.append((f"random-{seed}-{i:04d}[{n},{k}]_{q}", random_code(rng, q, n, k)))
    return out

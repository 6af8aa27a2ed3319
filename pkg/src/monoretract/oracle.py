"""Brute-force ground truth for the theorem-driven modules.

Nothing here calls ``gamma_sets``, ``characterize_nonzero_rows`` or any
other shortcut whose correctness rests on the structure theorems; the
census squares every candidate, the rank is computed by elimination, and
subalgebra equality is decided by generating monoids.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import CensusTooLargeError, DimensionMismatchError, InputError
from .matrix import ExponentMatrix

CENSUS_CAP = 10**8
CHUNK = 1 << 18


@dataclass(frozen=True)
class Census:
    n: int
    bound: int
    matrices: tuple[ExponentMatrix, ...]
    nondegenerate: tuple[bool, ...]
    standard: tuple[bool, ...]

    def __len__(self):
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def nondegenerate_matrices(self) -> list[ExponentMatrix]:
        return [m for m, nd in zip(self.matrices, self.nondegenerate) if nd]


def _scan_chunk(args):
    n, ranges, start, stop = args
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((idx.size, n * n), dtype=np.int64)
    # mixed radix, last cell varies fastest
    for k in range(n * n - 1, -1, -1):
        idx, digits[:, k] = np.divmod(idx, ranges[k])
    A = digits.reshape(-1, n, n)
    hit = (np.matmul(A, A) == A).all(axis=(1, 2))
    return [tuple(map(int, row)) for row in digits[hit]]


def enumerate_idempotent(n: int, bound: int, prune: bool = True, workers: int | None = None) -> Census:
    """Every ``n x n`` matrix with entries in ``[0, bound]`` and ``M @ M == M``.

    With ``prune`` the diagonal is restricted to {0, 1}; this skips
    candidates only, and never changes the result.
    """
    if n < 1 or bound < 0:
        raise InputError("need n >= 1 and bound >= 0")
    if (bound + 1) ** (n * n) > CENSUS_CAP:
        raise CensusTooLargeError(f"(bound+1)^(n^2) = {(bound + 1) ** (n * n)} exceeds {CENSUS_CAP}")
    diag_range = min(bound, 1) + 1 if prune else bound + 1
    ranges = [diag_range if k // n == k % n else bound + 1 for k in range(n * n)]
    total = math.prod(ranges)
    jobs = [(n, ranges, s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    if workers and workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_scan_chunk, jobs))
    else:
        parts = [_scan_chunk(j) for j in jobs]
    flats = sorted(f for part in parts for f in part)
    mats = tuple(ExponentMatrix(tuple(f[i * n:(i + 1) * n] for i in range(n))) for f in flats)
    return Census(
        n=n,
        bound=bound,
        matrices=mats,
        nondegenerate=tuple(all(any(r) for r in m.rows) for m in mats),
        standard=tuple(all(m[i, i] >= m[i + 1, i + 1] for i in range(n - 1)) for m in mats),
    )


def rational_rank(M: ExponentMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integers."""
    a = [list(r) for r in M.rows]
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        for r in range(rank + 1, rows):
            for k in range(c + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) // prev
            a[r][c] = 0
        prev = a[rank][c]
        rank += 1
        if rank == rows:
            break
    return rank


@lru_cache(maxsize=4096)
def generated_monoid(generators: tuple[tuple[int, ...], ...], cap: int) -> frozenset[tuple[int, ...]]:
    """Sums of the (nonzero) generators whose coordinate sum is at most ``cap``.

    The generators themselves are always members, whatever the cap.
    """
    gens = [g for g in generators if any(g)]
    if not generators:
        return frozenset()
    start = (0,) * len(generators[0])
    seen = {start, *gens}
    frontier = [start, *gens]
    while frontier:
        nxt = []
        for v in frontier:
            s = sum(v)
            for g in gens:
                if s + sum(g) > cap:
                    continue
                w = tuple(a + b for a, b in zip(v, g))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def _nonzero_columns(M: ExponentMatrix) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(set(c for c in M.columns if any(c))))


def default_degree_cap(M: ExponentMatrix, other: ExponentMatrix) -> int:
    return 3 * max(M.max_entry, other.max_entry) * M.n


def monoid_same_image(M: ExponentMatrix, other: ExponentMatrix, degree_cap: int | None = None) -> bool:
    """Each side's nonzero columns lie in the monoid generated by the other side's."""
    if M.n != other.n:
        raise DimensionMismatchError(f"{M.n} vs {other.n}")
    if degree_cap is None:
        degree_cap = default_degree_cap(M, other)
    a, b = _nonzero_columns(M), _nonzero_columns(other)
    zero = ((0,) * M.n,)
    mon_a = generated_monoid(a or zero, degree_cap)
    mon_b = generated_monoid(b or zero, degree_cap)
    return all(c in mon_a for c in b) and all(c in mon_b for c in a)


def is_idempotent_direct(rows: Sequence[Sequence[int]]) -> bool:
    """Square by the textbook triple loop."""
    n = len(rows)
    return all(
        sum(rows[i][k] * rows[k][j] for k in range(n)) == rows[i][j] for i in range(n) for j in range(n)
    )


def render_census(census: Census) -> str:
    lines = [f"census n={census.n} bound={census.bound} count={len(census)}"]
    for k, (m, nd, st) in enumerate(zip(census.matrices, census.nondegenerate, census.standard), start=1):
        lines.append("")
        lines.append(f"matrix {k} nondegenerate={int(nd)} standard={int(st)}")
        lines.extend(" ".join(map(str, r)) for r in m.rows)
    return "\n".join(lines) + "\n"


def parse_census(text: str) -> Census:
    lines = [ln.strip() for ln in text.splitlines()]
    header = lines[0].split()
    if len(header) != 4 or header[0] != "census":
        raise InputError(f"bad census header {lines[0]!r}")
    fields = dict(tok.split("=", 1) for tok in header[1:])
    n, bound, count = int(fields["n"]), int(fields["bound"]), int(fields["count"])
    body = [ln for ln in lines[1:] if ln]
    mats, nds, sts = [], [], []
    for b in range(count):
        tag = body[b * (n + 1)].split()
        flags = dict(tok.split("=", 1) for tok in tag[2:])
        rows = [tuple(int(t) for t in ln.split()) for ln in body[b * (n + 1) + 1:(b + 1) * (n + 1)]]
        mats.append(ExponentMatrix(tuple(rows)))
        nds.append(flags["nondegenerate"] == "1")
        sts.append(flags["standard"] == "1")
    if len(body) != count * (n + 1):
        raise InputError("census body does not match its count")
    return Census(n, bound, tuple(mats), tuple(nds), tuple(sts))

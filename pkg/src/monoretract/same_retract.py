"""Monic monomial retractions that share a retract.

Two nondegenerate idempotent exponent matrices give the same retract
exactly when their nonzero columns agree as multisets.  Starting from one
matrix, the others are obtained by moving each nonzero column ``C_{i_j}``
to a position in its landing set ``gamma[j]``: rows where that column has a
1 and nothing else in the row is nonzero.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass

from .errors import DegenerateError, DimensionMismatchError, NotIdempotentError
from .matrix import ExponentMatrix, is_idempotent


@dataclass(frozen=True)
class GammaSets:
    """``nonzero_columns`` and ``gamma`` are 1-based; ``gamma[j]`` belongs to ``nonzero_columns[j]``."""

    nonzero_columns: tuple[int, ...]
    gamma: tuple[frozenset[int], ...]

    @property
    def count(self) -> int:
        return math.prod(len(g) for g in self.gamma)

    def to_dict(self) -> dict:
        return {
            "nonzero_columns": list(self.nonzero_columns),
            "gamma": [sorted(g) for g in self.gamma],
        }


def _require(M: ExponentMatrix):
    if not is_idempotent(M):
        raise NotIdempotentError("matrix is not idempotent")
    if not M.has_nonzero_rows():
        raise DegenerateError("matrix has a zero row (degenerate retraction)")


def gamma_sets(M: ExponentMatrix) -> GammaSets:
    _require(M)
    single = [sum(1 for a in row if a) == 1 for row in M.rows]
    cols = M.nonzero_columns()
    gamma = tuple(
        frozenset(l + 1 for l in range(M.n) if M[l, c] == 1 and single[l]) for c in cols
    )
    return GammaSets(tuple(c + 1 for c in cols), gamma)


def count_same_retract(M: ExponentMatrix) -> int:
    return gamma_sets(M).count


def iter_same_retract(M: ExponentMatrix):
    """Yield each matrix with the same retract once, unordered."""
    g = gamma_sets(M)
    n = M.n
    for targets in itertools.product(*(sorted(s) for s in g.gamma)):
        cols = [(0,) * n] * n
        for src, dst in zip(g.nonzero_columns, targets):
            cols[dst - 1] = M.column(src - 1)
        yield ExponentMatrix.from_columns(cols)


def enumerate_same_retract(M: ExponentMatrix) -> list[ExponentMatrix]:
    """All matrices with the same retract as ``M``.

    ``M`` itself comes first, the others follow in lexicographic order of
    their entries.
    """
    return [M] + sorted(m for m in iter_same_retract(M) if m != M)


def nonzero_column_multiset(M: ExponentMatrix) -> Counter:
    return Counter(c for c in M.columns if any(c))


def same_image(M: ExponentMatrix, other: ExponentMatrix) -> bool:
    if M.n != other.n:
        raise DimensionMismatchError(f"{M.n} vs {other.n}")
    _require(M)
    _require(other)
    return nonzero_column_multiset(M) == nonzero_column_multiset(other)

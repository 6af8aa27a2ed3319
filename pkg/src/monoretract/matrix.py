"""Exponent matrices of monic monomial maps.

Entry ``(i, j)`` is the exponent of ``X_i`` in the image of ``X_j``, so the
exponents of each image run down a column.  Indices in the public helpers
that talk about rows/columns by number are 1-based; the ``rows`` tuple is
ordinary 0-based Python.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .domain import Domain
from .errors import (
    DegenerateError,
    DimensionMismatchError,
    InputError,
    NotIdempotentError,
    NotMonicError,
    ZeroImageError,
)
from .monomial import ZERO, Monomial, MonomialMap, checked


@dataclass(frozen=True)
class ExponentMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        if n < 1:
            raise InputError("matrix must have size at least 1")
        for r in rows:
            if len(r) != n:
                raise DimensionMismatchError(f"matrix is not square: row {r} in a {n}-row matrix")
            for a in r:
                if isinstance(a, bool) or not isinstance(a, int) or a < 0:
                    raise InputError(f"entries must be non-negative integers, got {a!r}")
                checked(a)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> ExponentMatrix:
        return cls(tuple(tuple(int(a) for a in r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> ExponentMatrix:
        n = len(cols)
        return cls(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))

    @classmethod
    def identity(cls, n: int) -> ExponentMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> ExponentMatrix:
        return cls(((0,) * n,) * n)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        """Column ``j`` (0-based)."""
        return tuple(r[j] for r in self.rows)

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        return tuple(zip(*self.rows))

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.n))

    @property
    def trace(self) -> int:
        return sum(self.diagonal)

    @property
    def max_entry(self) -> int:
        return max(max(r) for r in self.rows)

    def nonzero_columns(self) -> list[int]:
        """0-based indices of nonzero columns, increasing."""
        return [j for j, c in enumerate(self.columns) if any(c)]

    def has_nonzero_rows(self) -> bool:
        return all(any(r) for r in self.rows)

    def flat(self) -> tuple[int, ...]:
        return tuple(a for r in self.rows for a in r)

    def __matmul__(self, other: ExponentMatrix) -> ExponentMatrix:
        if other.n != self.n:
            raise DimensionMismatchError(f"{self.n} vs {other.n}")
        cols = other.columns
        return ExponentMatrix(
            tuple(tuple(checked(sum(a * b for a, b in zip(r, c))) for c in cols) for r in self.rows)
        )

    def __lt__(self, other: ExponentMatrix):
        return (self.n, self.flat()) < (other.n, other.flat())

    def __str__(self):
        return "\n".join(" ".join(str(a) for a in r) for r in self.rows)


def from_monic_map(phi: MonomialMap) -> ExponentMatrix:
    cols = []
    for i, img in enumerate(phi.images, start=1):
        if img is ZERO:
            raise ZeroImageError(f"X{i} maps to 0; exponent matrices need nonzero images")
        if not img.is_monic:
            raise NotMonicError(f"X{i} -> {img} is not monic")
        cols.append(img.exponents)
    return ExponentMatrix.from_columns(cols)


def to_monic_map(M: ExponentMatrix, d: Domain) -> MonomialMap:
    return MonomialMap(M.n, d, tuple(Monomial.monic(d, c) for c in M.columns))


def is_idempotent(M: ExponentMatrix) -> bool:
    return M @ M == M


@dataclass(frozen=True)
class StructureReport:
    """The three structural clauses every idempotent exponent matrix satisfies.

    diagonal_ok
        every diagonal entry is 0 or 1.
    zero_column_rule_ok
        whenever ``a_ii = 1`` and column ``i`` has a nonzero entry in some
        other row ``j``, column ``j`` is zero.
    zero_row_rule_ok
        the same statement for rows.
    is_zero_when_traceless
        a matrix whose diagonal is all zero is the zero matrix.
    """

    diagonal_ok: bool
    zero_column_rule_ok: bool
    zero_row_rule_ok: bool
    trace: int
    is_zero_when_traceless: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.diagonal_ok
            and self.zero_column_rule_ok
            and self.zero_row_rule_ok
            and self.is_zero_when_traceless
        )


def structure_report(M: ExponentMatrix) -> StructureReport:
    n = M.n
    rows, cols = M.rows, M.columns
    column_ok = all(
        not any(cols[j])
        for i in range(n)
        if rows[i][i] == 1
        for j in range(n)
        if j != i and cols[i][j] != 0
    )
    row_ok = all(
        not any(rows[j])
        for i in range(n)
        if rows[i][i] == 1
        for j in range(n)
        if j != i and rows[i][j] != 0
    )
    traceless = not any(M.diagonal)
    return StructureReport(
        diagonal_ok=all(a in (0, 1) for a in M.diagonal),
        zero_column_rule_ok=column_ok,
        zero_row_rule_ok=row_ok,
        trace=M.trace,
        is_zero_when_traceless=(not traceless) or not any(M.flat()),
    )


def nonzero_rows_conditions(M: ExponentMatrix) -> tuple[bool, bool, bool]:
    """The three conditions characterizing idempotents with no zero row.

    The rank ``p`` is read off as the trace, which is what (i) compares the
    number of nonzero columns against.
    """
    if not M.has_nonzero_rows():
        raise DegenerateError("matrix has a zero row")
    nonzero = M.nonzero_columns()
    exactly_p = len(nonzero) == M.trace
    diagonal_one = all(M[j, j] == 1 for j in nonzero)
    clean_rows = all(
        M[i, k] == 0 for i in range(M.n) if M[i, i] == 1 for k in range(M.n) if k != i
    )
    return exactly_p, diagonal_one, clean_rows


def characterize_nonzero_rows(M: ExponentMatrix) -> bool:
    """Idempotency test for matrices without zero rows, without multiplying."""
    return all(nonzero_rows_conditions(M))


def rank(M: ExponentMatrix) -> int:
    """Rank of an idempotent matrix, which equals its trace."""
    if not is_idempotent(M):
        raise NotIdempotentError("rank via trace is only valid for idempotent matrices")
    return M.trace

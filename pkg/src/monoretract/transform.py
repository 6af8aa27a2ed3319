"""Permutation actions: relabelling variables and moving columns."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import DimensionMismatchError, InputError, NotIdempotentError
from .matrix import ExponentMatrix, is_idempotent
from .monomial import ZERO, Monomial, MonomialMap


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``mapping[i-1]`` is the image of ``i``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        mapping = tuple(self.mapping)
        if sorted(mapping) != list(range(1, len(mapping) + 1)):
            raise InputError(f"{list(mapping)} is not a permutation of 1..{len(mapping)}")
        object.__setattr__(self, "mapping", mapping)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> Permutation:
        m = list(range(1, n + 1))
        m[a - 1], m[b - 1] = b, a
        return cls(tuple(m))

    @property
    def n(self) -> int:
        return len(self.mapping)

    def __call__(self, i: int) -> int:
        return self.mapping[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, s in enumerate(self.mapping, start=1):
            inv[s - 1] = i
        return Permutation(tuple(inv))

    def __mul__(self, other: Permutation) -> Permutation:
        """``self * other`` applies ``other`` first."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def __str__(self):
        return " ".join(map(str, self.mapping))


def _check_size(M: ExponentMatrix, sigma: Permutation):
    if M.n != sigma.n:
        raise DimensionMismatchError(f"matrix of size {M.n}, permutation of size {sigma.n}")


def conjugate(M: ExponentMatrix, sigma: Permutation) -> ExponentMatrix:
    """Relabel variables: entry ``(i, j)`` moves to ``(sigma(i), sigma(j))``."""
    _check_size(M, sigma)
    n = M.n
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[sigma(i + 1) - 1][sigma(j + 1) - 1] = M[i, j]
    return ExponentMatrix.from_rows(out)


def conjugate_map(phi: MonomialMap, sigma: Permutation) -> MonomialMap:
    """The map sending ``X_sigma(i)`` to ``sigma(phi(X_i))``."""
    if phi.n != sigma.n:
        raise DimensionMismatchError(f"map on {phi.n} variables, permutation of size {sigma.n}")
    images = [None] * phi.n
    for i, img in enumerate(phi.images, start=1):
        if img is not ZERO:
            exps = [0] * phi.n
            for k, e in enumerate(img.exponents, start=1):
                exps[sigma(k) - 1] = e
            img = Monomial(img.coeff, tuple(exps))
        images[sigma(i) - 1] = img
    return MonomialMap(phi.n, phi.domain, tuple(images))


def permute_columns(M: ExponentMatrix, tau: Permutation) -> ExponentMatrix:
    """Column ``j`` of ``M`` becomes column ``tau(j)``."""
    _check_size(M, tau)
    cols = [None] * M.n
    for j, c in enumerate(M.columns, start=1):
        cols[tau(j) - 1] = c
    return ExponentMatrix.from_columns(cols)


def is_standard(M: ExponentMatrix) -> bool:
    d = M.diagonal
    return all(d[i] >= d[i + 1] for i in range(M.n - 1))


def standardize(M: ExponentMatrix) -> tuple[ExponentMatrix, Permutation]:
    """Conjugate an idempotent matrix into standard form.

    Indices whose diagonal entry is 1 and that already sit in ``1..p`` stay
    put.  The remaining ones are swapped, in increasing order, with the
    increasing list of vacant slots in ``1..p``.  The permutation is thus
    the identity on standard input and an involution in general.
    """
    if not is_idempotent(M):
        raise NotIdempotentError("standardize needs an idempotent matrix")
    diag = M.diagonal
    p = sum(diag)
    movers = [i for i in range(p + 1, M.n + 1) if diag[i - 1] == 1]
    vacant = [i for i in range(1, p + 1) if diag[i - 1] == 0]
    mapping = list(range(1, M.n + 1))
    for a, b in zip(movers, vacant):
        mapping[a - 1], mapping[b - 1] = b, a
    sigma = Permutation(tuple(mapping))
    return conjugate(M, sigma), sigma


def block_form(M: ExponentMatrix) -> tuple[int, list[list[int]]] | None:
    """For a standard matrix of shape ``[I_p 0; P 0]`` return ``(p, P)``.

    Returns ``None`` when the matrix does not have that shape.
    """
    p = M.trace
    n = M.n
    for i in range(n):
        for j in range(n):
            want_identity = i < p and j < p
            if want_identity and M[i, j] != int(i == j):
                return None
            if j >= p and M[i, j] != 0:
                return None
    return p, [list(M.rows[i][:p]) for i in range(p, n)]


def parse_permutation(text: str) -> Permutation:
    """Parse ``perm: 3 1 2`` (the ``perm:`` prefix is optional)."""
    body = text.strip()
    if body.startswith("perm:"):
        body = body[len("perm:"):]
    try:
        return Permutation(tuple(int(t) for t in body.split()))
    except ValueError as exc:
        raise InputError(f"bad permutation {text!r}: {exc}") from exc


def render_permutation(sigma: Permutation) -> str:
    return f"perm: {sigma}"


def permutations_of(n: int) -> Sequence[Permutation]:
    return [Permutation(p) for p in permutations(range(1, n + 1))]

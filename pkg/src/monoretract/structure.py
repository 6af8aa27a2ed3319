"""Structure of monomial retractions and their retracts.

* ``decompose`` splits the variables of a monic retraction into those kept
  (``f_i = X_i * psi_i``) and those sent to 1.
* ``associated_monic`` strips the coefficients off a general monomial
  retraction and audits the coefficient identities that make the stripped
  map a retraction with (possibly) the same image.
* ``polynomial_ring_witness`` certifies that the image of a standard
  nondegenerate monic retraction is a polynomial ring in ``p`` variables by
  exhibiting a left inverse of ``Y_i -> f_i``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .domain import Domain, DomainElement, is_unit
from .errors import (
    DegenerateError,
    InputError,
    NotARetractionError,
    NotIdempotentError,
    NotMonicError,
    NotStandardError,
    ZeroImageError,
)
from .matrix import ExponentMatrix, is_idempotent
from .monomial import (
    ZERO,
    Image,
    Monomial,
    MonomialMap,
    is_monic,
    is_nondegenerate,
    is_retraction,
    substitute_images,
)
from .transform import is_standard

MAX_DECORATION_MODULUS = 30


@dataclass(frozen=True)
class RetractStructure:
    """Kept indices ``N1`` (with ``f_i = X_i * psi_i``) and collapsed indices ``N2``."""

    n: int
    p: int
    N1: tuple[int, ...]
    N2: tuple[int, ...]
    generators: dict[int, Monomial] = field(hash=False)
    psi: dict[int, Monomial] = field(hash=False)

    def __post_init__(self):
        if sorted(self.N1 + self.N2) != list(range(1, self.n + 1)):
            raise ValueError("N1 and N2 must partition 1..n")
        if len(self.N1) != self.p:
            raise ValueError("p must equal |N1|")
        for i in self.N1:
            f, psi = self.generators[i], self.psi[i]
            if f.exponents[i - 1] != 1 or any(psi.exponents[k - 1] for k in self.N1):
                raise ValueError(f"f_{i} = {f} is not X{i} times a monomial in the N2 variables")


def _require_retraction_shape(phi: MonomialMap):
    if not is_retraction(phi):
        raise NotARetractionError(f"{phi} is not a retraction")
    if not is_nondegenerate(phi):
        raise DegenerateError(f"{phi} is degenerate: some variable never occurs in an image")


def decompose(phi: MonomialMap) -> RetractStructure:
    if not is_monic(phi):
        raise NotMonicError(f"{phi} is not monic")
    _require_retraction_shape(phi)
    N1, N2, generators, psi = [], [], {}, {}
    for i, f in enumerate(phi.images, start=1):
        if f is ZERO:
            # unreachable for nondegenerate retractions; kept as a guard
            raise ZeroImageError(f"X{i} maps to 0")
        if not any(f.exponents):
            N2.append(i)
            continue
        N1.append(i)
        generators[i] = f
        exps = list(f.exponents)
        exps[i - 1] -= 1
        psi[i] = Monomial(f.coeff, tuple(exps))
    return RetractStructure(phi.n, len(N1), tuple(N1), tuple(N2), generators, psi)


@dataclass(frozen=True)
class ThetaCheck:
    """Divisibility witness ``lambda_i = lambda_i * lambda_j * theta`` for ``j`` in N2."""

    i: int
    j: int
    theta: DomainElement
    holds: bool


@dataclass(frozen=True)
class MonicAssociation:
    monic_map: MonomialMap
    lambdas: tuple[DomainElement, ...]
    lambda_consistent: bool
    all_lambdas_units: bool
    idempotent_witnesses: tuple[tuple[int, DomainElement], ...]
    structure: RetractStructure = field(hash=False, compare=False)
    theta_checks: tuple[ThetaCheck, ...] = ()


def strip_coefficients(phi: MonomialMap) -> MonomialMap:
    return MonomialMap(
        phi.n,
        phi.domain,
        tuple(img if img is ZERO else Monomial.monic(phi.domain, img.exponents) for img in phi.images),
    )


def decorate(monic: MonomialMap, lambdas: Sequence[DomainElement]) -> MonomialMap:
    """Multiply each image by the matching coefficient."""
    if len(lambdas) != monic.n:
        raise InputError(f"need {monic.n} coefficients, got {len(lambdas)}")
    images = []
    for img, lam in zip(monic.images, lambdas):
        lam = monic.domain(lam)
        images.append(img if img is ZERO else Monomial(img.coeff * lam, img.exponents))
    return MonomialMap(monic.n, monic.domain, tuple(images))


def lambda_consistent(monic: MonomialMap, lambdas: Sequence[DomainElement]) -> bool:
    """``lambda_i == lambda_i * f_i(lambda)`` for every i."""
    return all(lam == lam * f.evaluate(lambdas) for lam, f in zip(lambdas, monic.images))


def associated_monic(phi: MonomialMap) -> MonicAssociation:
    for i, img in enumerate(phi.images, start=1):
        if img is ZERO:
            raise ZeroImageError(f"X{i} maps to 0")
    lambdas = tuple(img.coeff for img in phi.images)
    monic = strip_coefficients(phi)
    consistent = lambda_consistent(monic, lambdas)
    if not is_retraction(phi):
        raise NotARetractionError(
            f"{phi} is not a retraction (coefficient identity holds: {consistent}; "
            f"monic part is a retraction: {is_retraction(monic)})"
        )
    if not is_nondegenerate(phi):
        raise DegenerateError(f"{phi} is degenerate")
    structure = decompose(monic)
    witnesses = []
    for i in structure.N1:
        mu = structure.psi[i].evaluate(lambdas)
        w = lambdas[i - 1] * mu
        if w and not w.is_one and w * w == w:
            witnesses.append((i, w))
    thetas = []
    for j in structure.N2:
        i = next(i for i in structure.N1 if structure.generators[i].exponents[j - 1] > 0)
        exps = list(structure.psi[i].exponents)
        exps[j - 1] -= 1
        theta = lambdas[i - 1] * Monomial.monic(phi.domain, exps).evaluate(lambdas)
        lam_i = lambdas[i - 1]
        thetas.append(ThetaCheck(i, j, theta, lam_i == lam_i * lambdas[j - 1] * theta))
    return MonicAssociation(
        monic_map=monic,
        lambdas=lambdas,
        lambda_consistent=consistent,
        all_lambdas_units=all(is_unit(lam) for lam in lambdas),
        idempotent_witnesses=tuple(witnesses),
        structure=structure,
        theta_checks=tuple(thetas),
    )


def enumerate_decorations(monic: MonomialMap) -> list[tuple[DomainElement, ...]]:
    """Every nonzero coefficient vector that keeps ``monic`` a retraction (Z/m, m <= 30)."""
    d = monic.domain
    if not d.is_modular or d.modulus > MAX_DECORATION_MODULUS:
        raise InputError(f"decorations are only enumerated over Z/m with m <= {MAX_DECORATION_MODULUS}")
    nonzero = [a for a in d.elements() if a]
    return [
        lams for lams in itertools.product(nonzero, repeat=monic.n) if lambda_consistent(monic, lams)
    ]


@dataclass(frozen=True)
class WitnessReport:
    """``alpha: Y_i -> f_i`` and ``beta`` killing ``X_{p+1}..X_n``, with ``beta o alpha`` checked."""

    p: int
    n: int
    alpha: tuple[Image, ...]
    beta: tuple[Image, ...]
    composite: tuple[Image, ...]
    verified: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "alpha": {f"Y{i}": str(f) for i, f in enumerate(self.alpha, start=1)},
            "beta": {f"X{i}": str(g) for i, g in enumerate(self.beta, start=1)},
            "verified": self.verified,
        }


def polynomial_ring_witness(M: ExponentMatrix, d: Domain) -> WitnessReport:
    if not is_idempotent(M):
        raise NotIdempotentError("witness needs an idempotent matrix")
    if not is_standard(M):
        raise NotStandardError("witness needs a standard matrix; call standardize first")
    if not M.has_nonzero_rows():
        raise DegenerateError("witness needs a nondegenerate matrix (no zero rows)")
    n, p = M.n, M.trace
    alpha = tuple(Monomial.monic(d, M.column(i)) for i in range(p))
    beta = tuple(
        Monomial.variable(d, p, i) if i <= p else Monomial.monic(d, (0,) * p) for i in range(1, n + 1)
    )
    composite = tuple(substitute_images(f, beta, p, d) for f in alpha)
    verified = all(composite[i - 1] == Monomial.variable(d, p, i) for i in range(1, p + 1))
    return WitnessReport(p, n, alpha, beta, composite, verified)


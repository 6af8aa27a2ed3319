"""Monomials and monomial self-maps of R[X1, ..., Xn].

A map is stored by the images of the variables.  Each image is either the
``ZERO`` sentinel or a ``Monomial`` with nonzero coefficient; constants such
as ``1`` are monomials with an all-zero exponent vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .domain import Domain, DomainElement
from .errors import DimensionMismatchError, DomainMismatchError, ExponentOverflowError, InputError

INT64_MAX = 2**63 - 1


def checked(value: int) -> int:
    """Return ``value`` unchanged if it fits a signed 64-bit integer."""
    if not -INT64_MAX - 1 <= value <= INT64_MAX:
        raise ExponentOverflowError(f"{value} exceeds the 64-bit exponent range")
    return value


class _Zero:
    """The zero image.  Kept distinct from monomials so coefficients never vanish."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"

    def __str__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


@dataclass(frozen=True)
class Monomial:
    coeff: DomainElement
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.coeff:
            raise InputError("a monomial needs a nonzero coefficient")
        exps = tuple(self.exponents)
        if any(not isinstance(e, int) or e < 0 for e in exps):
            raise InputError(f"exponents must be non-negative integers: {exps}")
        for e in exps:
            checked(e)
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def monic(cls, domain: Domain, exponents: Sequence[int]) -> Monomial:
        return cls(domain.one(), tuple(exponents))

    @classmethod
    def variable(cls, domain: Domain, n: int, i: int) -> Monomial:
        """``X_i`` in n variables, i 1-based."""
        return cls.monic(domain, [1 if k == i - 1 else 0 for k in range(n)])

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def domain(self) -> Domain:
        return self.coeff.domain

    @property
    def is_monic(self) -> bool:
        return self.coeff.is_one

    def __mul__(self, other: Image) -> Image:
        if other is ZERO:
            return ZERO
        if other.n != self.n:
            raise DimensionMismatchError(f"{self.n} vs {other.n} variables")
        c = self.coeff * other.coeff
        if not c:
            return ZERO
        return Monomial(c, tuple(checked(a + b) for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, e: int) -> Image:
        if e < 0:
            raise InputError("negative powers are not supported")
        c = self.coeff**e
        if not c:
            return ZERO
        return Monomial(c, tuple(checked(a * e) for a in self.exponents))

    def evaluate(self, values: Sequence[DomainElement]) -> DomainElement:
        """The coefficient times the product of ``values[i] ** exponent_i``."""
        result = self.coeff
        for v, e in zip(values, self.exponents, strict=True):
            if e:
                result = result * v**e
        return result

    def __str__(self):
        factors = []
        for i, e in enumerate(self.exponents, start=1):
            if e == 1:
                factors.append(f"X{i}")
            elif e > 1:
                factors.append(f"X{i}^{e}")
        if not factors:
            return str(self.coeff)
        if self.is_monic:
            return " ".join(factors)
        return f"{self.coeff} * " + " ".join(factors)


Image = Union[Monomial, _Zero]


def multiply(a: Image, b: Image) -> Image:
    if a is ZERO or b is ZERO:
        return ZERO
    return a * b


@dataclass(frozen=True)
class MonomialMap:
    """The algebra map sending ``X_i`` to ``images[i-1]``."""

    n: int
    domain: Domain
    images: tuple[Image, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if self.n < 1:
            raise InputError("need at least one variable")
        if len(images) != self.n:
            raise DimensionMismatchError(f"expected {self.n} images, got {len(images)}")
        for img in images:
            if img is ZERO:
                continue
            if not isinstance(img, Monomial):
                raise InputError(f"image must be ZERO or a Monomial, got {img!r}")
            if img.n != self.n:
                raise DimensionMismatchError(f"image {img} has {img.n} exponents, expected {self.n}")
            if img.domain != self.domain:
                raise DomainMismatchError(f"image {img} lives over {img.domain}, map over {self.domain}")

    @classmethod
    def identity(cls, n: int, domain: Domain) -> MonomialMap:
        return cls(n, domain, tuple(Monomial.variable(domain, n, i) for i in range(1, n + 1)))

    def __getitem__(self, i: int) -> Image:
        """Image of ``X_i`` (1-based)."""
        return self.images[i - 1]

    def __str__(self):
        return "(" + ", ".join(f"X{i} -> {img}" for i, img in enumerate(self.images, start=1)) + ")"


def substitute(m: Image, phi: MonomialMap) -> Image:
    """Apply ``phi`` to the monomial ``m``."""
    if m is not ZERO and m.n != phi.n:
        raise DimensionMismatchError(f"monomial has {m.n} variables, map has {phi.n}")
    return substitute_images(m, phi.images, phi.n, phi.domain)


def substitute_images(m: Image, images: Sequence[Image], target_n: int, domain: Domain) -> Image:
    """Send the i-th variable of ``m`` to ``images[i]``, a monomial in ``target_n`` variables.

    This is the general form of ``substitute`` for homomorphisms between
    polynomial rings with different numbers of variables.
    """
    if m is ZERO:
        return ZERO
    if m.n != len(images):
        raise DimensionMismatchError(f"monomial has {m.n} variables, {len(images)} images given")
    if m.domain != domain:
        raise DomainMismatchError(f"{m.domain} vs {domain}")
    result: Image = Monomial(m.coeff, (0,) * target_n)
    for img, e in zip(images, m.exponents):
        if e == 0:
            continue
        if img is ZERO:
            return ZERO
        result = multiply(result, img**e)
        if result is ZERO:
            return ZERO
    return result


def compose(phi: MonomialMap, psi: MonomialMap) -> MonomialMap:
    """``phi o psi``: first ``psi``, then ``phi``."""
    if phi.n != psi.n:
        raise DimensionMismatchError(f"{phi.n} vs {psi.n} variables")
    if phi.domain != psi.domain:
        raise DomainMismatchError(f"{phi.domain} vs {psi.domain}")
    return MonomialMap(phi.n, phi.domain, tuple(substitute(img, phi) for img in psi.images))


def is_retraction(phi: MonomialMap) -> bool:
    return compose(phi, phi) == phi


def is_nondegenerate(phi: MonomialMap) -> bool:
    """Every variable occurs in some image."""
    seen = [False] * phi.n
    for img in phi.images:
        if img is ZERO:
            continue
        for k, e in enumerate(img.exponents):
            if e > 0:
                seen[k] = True
    return all(seen)


def is_monic(phi: MonomialMap) -> bool:
    return all(img is ZERO or img.is_monic for img in phi.images)

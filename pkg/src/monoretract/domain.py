"""Exact coefficient domains: the integers, the rationals and Z/m."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainMismatchError, InputError

Number = Union[int, Fraction]


@dataclass(frozen=True)
class Domain:
    """A coefficient ring.  ``kind`` is ``"Z"``, ``"Q"`` or ``"Z/m"``."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "Z/m":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise InputError(f"Z/m requires an integer m >= 2, got {self.modulus!r}")
        elif self.kind in ("Z", "Q"):
            if self.modulus is not None:
                raise InputError(f"{self.kind} takes no modulus")
        else:
            raise InputError(f"unknown domain kind {self.kind!r}")

    def __str__(self):
        if self.kind == "Z/m":
            return f"Z/{self.modulus}"
        return self.kind

    @property
    def is_modular(self) -> bool:
        return self.kind == "Z/m"

    def __call__(self, value) -> DomainElement:
        """Coerce an int, Fraction or ``"a/b"`` string into this domain."""
        if isinstance(value, DomainElement):
            if value.domain != self:
                raise DomainMismatchError(f"{value} is not an element of {self}")
            return value
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"not a number: {value!r}") from exc
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise InputError(f"cannot coerce {value!r} into {self}")
        value = Fraction(value)
        if self.kind == "Q":
            return DomainElement(self, value)
        if self.kind == "Z":
            if value.denominator != 1:
                raise InputError(f"{value} is not an integer")
            return DomainElement(self, value.numerator)
        m = self.modulus
        if math.gcd(value.denominator, m) != 1:
            raise InputError(f"{value} has no image in Z/{m}")
        residue = value.numerator * pow(value.denominator, -1, m) % m
        return DomainElement(self, residue)

    def one(self) -> DomainElement:
        return self(1)

    def zero(self) -> DomainElement:
        return self(0)

    def elements(self):
        """All residues of Z/m in increasing order."""
        if not self.is_modular:
            raise InputError(f"{self} is infinite")
        return [DomainElement(self, r) for r in range(self.modulus)]


INTEGERS = Domain("Z")
RATIONALS = Domain("Q")


def integers_mod(m: int) -> Domain:
    return Domain("Z/m", m)


def parse_domain(token: str) -> Domain:
    """Parse ``Z``, ``Q`` or ``Z/<m>``."""
    token = token.strip()
    if token == "Z":
        return INTEGERS
    if token == "Q":
        return RATIONALS
    if token.startswith("Z/"):
        digits = token[2:].strip()
        if digits.isdigit():
            return integers_mod(int(digits))
    raise InputError(f"unknown ring {token!r}; expected Z, Q or Z/<m>")


@dataclass(frozen=True)
class DomainElement:
    """An exact value tagged with its domain.

    Residues are canonical in ``[0, m-1]`` and rationals are ``Fraction``s,
    so structural equality is ring equality.
    """

    domain: Domain
    value: Number

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.domain}({self.value})"

    def _check(self, other):
        if not isinstance(other, DomainElement):
            other = self.domain(other)
        if other.domain != self.domain:
            raise DomainMismatchError(f"{self.domain} vs {other.domain}")
        return other

    def __mul__(self, other):
        other = self._check(other)
        v = self.value * other.value
        if self.domain.is_modular:
            v %= self.domain.modulus
        return DomainElement(self.domain, v)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise InputError("negative powers are not supported")
        if self.domain.is_modular:
            return DomainElement(self.domain, pow(self.value, e, self.domain.modulus))
        return DomainElement(self.domain, self.value**e)

    def __bool__(self):
        return self.value != 0

    @property
    def is_one(self) -> bool:
        return self.value == 1


def mul(a: DomainElement, b: DomainElement) -> DomainElement:
    return a * b


def is_unit(a: DomainElement) -> bool:
    if not a:
        raise InputError("is_unit is undefined for zero")
    kind = a.domain.kind
    if kind == "Z":
        return a.value in (1, -1)
    if kind == "Q":
        return True
    return math.gcd(a.value, a.domain.modulus) == 1


def is_idempotent_element(a: DomainElement) -> bool:
    return a * a == a


def nontrivial_idempotents(d: Domain) -> set[DomainElement]:
    """Idempotents other than 0 and 1, by scanning every residue.

    Z and Q are domains, so the answer there is empty.
    """
    if not d.is_modular:
        return set()
    return {a for a in d.elements() if a.value not in (0, 1) and is_idempotent_element(a)}

"""Exact scalar arithmetic over the two supported ground fields.

A FieldSpec names either the rationals or a prime field GF(p); a Scalar is an
immutable element of one of them.  All arithmetic is exact: rationals are kept
in lowest terms with a positive denominator, prime-field elements as residues
in [0, p).  Equality is structural and hash-consistent, so scalars (and
anything built from them) can be deduplicated with dicts and sets.

Serialization: rationals render as "a/b", with "/b" omitted when b = 1;
prime-field elements render as their decimal residue.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import FieldMismatchError

RATIONAL = "rational"
PRIME = "prime"

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/([1-9]\d*))?$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field description: kind is "rational" or "prime" (with p)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == RATIONAL:
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        elif self.kind == PRIME:
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"prime field needs a prime modulus, got {self.p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls(RATIONAL)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(PRIME, p)

    @property
    def is_prime_field(self) -> bool:
        return self.kind == PRIME

    def scalar(self, value) -> "Scalar":
        """Coerce an int, Fraction, string literal or Scalar into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"scalar from {value.field} used in {self}")
            return value
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, Fraction):
            if self.kind == PRIME:
                return self.scalar(value.numerator) / self.scalar(value.denominator)
            return Scalar(self, value.numerator, value.denominator)
        if isinstance(value, int):
            return Scalar(self, value, 1)
        raise TypeError(f"cannot coerce {value!r} to a scalar")

    def parse_scalar(self, text: str) -> "Scalar":
        """Parse a canonical literal: "a/b" or "a" (rational), "k" (prime)."""
        m = _SCALAR_RE.match(text.strip())
        if m is None:
            raise ValueError(f"bad scalar literal {text!r}")
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if self.kind == PRIME:
            if den != 1 or num < 0 or num >= self.p:
                raise ValueError(
                    f"bad residue literal {text!r} for GF({self.p}): "
                    f"expected an integer in [0, {self.p})")
            return Scalar(self, num, 1)
        return Scalar(self, num, den)

    def zero(self) -> "Scalar":
        return Scalar(self, 0, 1)

    def one(self) -> "Scalar":
        return Scalar(self, 1, 1)

    def elements(self):
        """All field elements; only available for prime fields."""
        if self.kind != PRIME:
            raise ValueError("cannot enumerate an infinite field")
        return (Scalar(self, k, 1) for k in range(self.p))

    def __str__(self):
        return "QQ" if self.kind == RATIONAL else f"GF({self.p})"


@dataclass(frozen=True)
class Scalar:
    """An exact field element; construction canonicalizes.

    Rational: num/den in lowest terms, den > 0.  Prime: num the residue
    mod p, den fixed at 1.  Structural equality and hashing follow from the
    canonical form.
    """

    field: FieldSpec
    num: int
    den: int = 1

    def __post_init__(self):
        if self.field.kind == PRIME:
            if self.den != 1:
                raise ValueError("prime-field scalars have no denominator")
            object.__setattr__(self, "num", self.num % self.field.p)
        else:
            if self.den == 0:
                raise ZeroDivisionError("scalar with zero denominator")
            num, den = self.num, self.den
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            if g > 1:
                num, den = num // g, den // g
            object.__setattr__(self, "num", num)
            object.__setattr__(self, "den", den)

    def _check(self, other: "Scalar"):
        if not isinstance(other, Scalar):
            raise TypeError(f"expected a Scalar, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot combine {self.field} and {other.field} scalars")

    def __add__(self, other):
        self._check(other)
        if self.field.kind == PRIME:
            return Scalar(self.field, self.num + other.num)
        return Scalar(self.field, self.num * other.den + other.num * self.den,
                      self.den * other.den)

    def __sub__(self, other):
        self._check(other)
        if self.field.kind == PRIME:
            return Scalar(self.field, self.num - other.num)
        return Scalar(self.field, self.num * other.den - other.num * self.den,
                      self.den * other.den)

    def __mul__(self, other):
        self._check(other)
        if self.field.kind == PRIME:
            return Scalar(self.field, self.num * other.num)
        return Scalar(self.field, self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        self._check(other)
        if not other:
            raise ZeroDivisionError(f"division by zero in {self.field}")
        if self.field.kind == PRIME:
            return Scalar(self.field, self.num * pow(other.num, -1, self.field.p))
        return Scalar(self.field, self.num * other.den, self.den * other.num)

    def __neg__(self):
        return Scalar(self.field, -self.num, self.den)

    def __bool__(self):
        return self.num != 0

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self):
        return f"Scalar({self.field}, {self})"

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)

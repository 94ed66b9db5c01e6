"""
Values of the form a + b*sqrt(r) and points of the one-dimension extension.

Extended points carry an extra coordinate +-sqrt(beta_sq) on top of a scaled
rational part. Distances between them are a + b*sqrt(r) with rational a, b
and a square-free integer r, kept canonical so that equality is structural.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import factorint

from core.exceptions import DomainError

from .vectors import ScaledVector, sq_dist

Number = Union[int, Fraction]


def split_square(value: int):
    """Write a positive integer as s^2 * f with f square-free; returns (s, f)"""
    square, free = 1, 1
    for prime, power in factorint(value).items():
        square *= prime ** (power // 2)
        if power % 2:
            free *= prime
    return square, free


@dataclass(frozen=True)
class QuadraticValue:
    """a + b*sqrt(r); canonical: r square-free > 1 with b != 0, or b == 0 and r == 1"""

    a: Fraction
    b: Fraction = Fraction(0)
    r: int = 1

    @classmethod
    def of(cls, a: Number, b: Number, radicand: Number) -> "QuadraticValue":
        """
        Canonical form of a + b*sqrt(radicand) for a rational radicand >= 0.

        Raises:
            DomainError: negative radicand
        """
        a, b, radicand = Fraction(a), Fraction(b), Fraction(radicand)
        if radicand < 0:
            raise DomainError(f"negative radicand {radicand}")
        if b == 0 or radicand == 0:
            return cls(a)
        # sqrt(p/q) = sqrt(p*q)/q
        square, free = split_square(radicand.numerator * radicand.denominator)
        coefficient = b * Fraction(square, radicand.denominator)
        if free == 1:
            return cls(a + coefficient)
        return cls(a, coefficient, free)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.a

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a} {sign} {abs(self.b)}*sqrt({self.r})"


@dataclass(frozen=True)
class RootPoint:
    """Scaled rational part plus an extra coordinate sign*sqrt(beta_sq)"""

    vector: ScaledVector
    beta_sq: Fraction
    sign: int = 1

    def __post_init__(self):
        beta_sq = Fraction(self.beta_sq)
        if beta_sq < 0:
            raise DomainError(f"beta^2 must be non-negative, got {beta_sq}")
        if self.sign not in (1, -1):
            raise DomainError(f"sign must be +1 or -1, got {self.sign}")
        object.__setattr__(self, "beta_sq", beta_sq)
        if beta_sq == 0:
            object.__setattr__(self, "sign", 1)

    @classmethod
    def flat(cls, vector: ScaledVector) -> "RootPoint":
        """Point lying in the hyperplane of the rational part"""
        return cls(vector, Fraction(0), 1)


def quad_sq_dist(p: RootPoint, q: RootPoint) -> QuadraticValue:
    """Exact squared distance between two extended points"""
    rational = sq_dist(p.vector, q.vector).value + p.beta_sq + q.beta_sq
    return QuadraticValue.of(rational, -2 * p.sign * q.sign, p.beta_sq * q.beta_sq)

"""Exact coefficient fields: the rationals and prime fields GF(p)."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Protocol

import sympy

from fibercone.errors import BadParametersError

Scalar = Any
Number = int | Fraction


class ExactField(Protocol):
    """Arithmetic used by the echelon code; elements support +, -, * natively."""

    characteristic: int
    zero: Scalar
    one: Scalar

    def convert(self, value: Number) -> Scalar: ...

    def normalize(self, value: Scalar) -> Scalar: ...

    def inv(self, value: Scalar) -> Scalar: ...

    def render(self, value: Scalar) -> str: ...


class RationalField:
    """Q with elements stored as fractions.Fraction."""

    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value: Number) -> Fraction:
        return Fraction(value)

    def normalize(self, value: Fraction) -> Fraction:
        return value

    def inv(self, value: Fraction) -> Fraction:
        return 1 / value

    def render(self, value: Fraction) -> str:
        return str(value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


class PrimeField:
    """GF(p) with elements stored as ints in [0, p)."""

    zero = 0
    one = 1

    def __init__(self, p: int):
        if not sympy.isprime(p):
            raise BadParametersError("Field characteristic must be prime", characteristic=p)
        self.characteristic = p

    def convert(self, value: Number) -> int:
        p = self.characteristic
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise BadParametersError(
                    "Coefficient denominator vanishes in the prime field",
                    coefficient=str(value),
                    characteristic=p,
                )
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def normalize(self, value: int) -> int:
        return value % self.characteristic

    def inv(self, value: int) -> int:
        return pow(value, -1, self.characteristic)

    def render(self, value: int) -> str:
        # symmetric representative reads better for small coefficients
        p = self.characteristic
        return str(value - p if value > p // 2 else value)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self) -> int:
        return hash(("GF", self.characteristic))

    def __repr__(self) -> str:
        return f"GF({self.characteristic})"


def field_for(characteristic: int) -> RationalField | PrimeField:
    """Field of the given characteristic (0 gives the rationals)."""
    if characteristic == 0:
        return RationalField()
    return PrimeField(characteristic)

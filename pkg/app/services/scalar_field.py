"""
Aritmética exacta sobre el cuerpo base: F_p para p primo, racionales para
característica 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

import sympy

from app.exceptions import (
    CharacteristicMismatchError,
    InvalidCharacteristicError,
    ScalarError,
    ZeroDivisionFieldError,
)

RawValue = Union[int, Fraction]


@dataclass(frozen=True)
class Characteristic:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise InvalidCharacteristicError(f"Característica inválida: {self.value!r}")
        if self.value < 0 or (self.value != 0 and not sympy.isprime(self.value)):
            raise InvalidCharacteristicError(
                f"La característica debe ser 0 o un primo, se recibió {self.value}"
            )

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def scalar(self, raw: Union[RawValue, str, "Scalar"]) -> "Scalar":
        """Reduce un entero, fracción o cadena 'num/den' al cuerpo."""
        if isinstance(raw, Scalar):
            if raw.char != self.value:
                raise CharacteristicMismatchError(
                    f"Escalar de característica {raw.char} usado en característica {self.value}"
                )
            return raw
        if isinstance(raw, str):
            try:
                raw = Fraction(raw.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ScalarError(f"Escalar ilegible '{raw}': {e}")
        return Scalar(raw, self.value)

    def zero(self) -> "Scalar":
        return Scalar(0, self.value)

    def one(self) -> "Scalar":
        return Scalar(1, self.value)

    def elements(self) -> Iterator["Scalar"]:
        """Todos los elementos de F_p en orden 0..p-1."""
        if self.is_zero:
            raise InvalidCharacteristicError("No se pueden enumerar los racionales")
        for r in range(self.value):
            yield Scalar(r, self.value)

    def __str__(self) -> str:
        return str(self.value)


def _reduce(value: RawValue, char: int) -> RawValue:
    if char == 0:
        return Fraction(value)
    if isinstance(value, Fraction):
        if value.denominator % char == 0:
            raise ZeroDivisionFieldError(f"{value} no tiene sentido en característica {char}")
        return (value.numerator * pow(value.denominator, -1, char)) % char
    return int(value) % char


@dataclass(frozen=True)
class Scalar:
    """Elemento inmutable del cuerpo: residuo en [0, p) o fracción reducida."""

    value: RawValue
    char: int

    def __post_init__(self):
        object.__setattr__(self, "value", _reduce(self.value, self.char))

    # -------------------------------------------------------------------------
    # Coerción
    # -------------------------------------------------------------------------

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.char != self.char:
                raise CharacteristicMismatchError(
                    f"No se pueden combinar escalares de característica {self.char} y {other.char}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Scalar(other, self.char)
        return NotImplemented

    # -------------------------------------------------------------------------
    # Operaciones de cuerpo
    # -------------------------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.value + other.value, self.char)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.value, self.char)

    def __sub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.value - other.value, self.char)

    def __rsub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.value * other.value, self.char)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.is_zero:
            raise ZeroDivisionFieldError("El cero no tiene inverso")
        if self.char == 0:
            return Scalar(1 / self.value, 0)
        return Scalar(pow(self.value, -1, self.char), self.char)

    def __truediv__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    # -------------------------------------------------------------------------
    # Consultas y serialización
    # -------------------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    @property
    def is_one(self) -> bool:
        return self.value == 1

    def __bool__(self) -> bool:
        return not self.is_zero

    def is_negative(self) -> bool:
        """Solo los racionales tienen signo; los residuos se escriben en 0..p-1."""
        return self.char == 0 and self.value < 0

    def normalize(self) -> "Scalar":
        return Scalar(self.value, self.char)

    def to_json(self) -> Union[int, str]:
        """Residuo entero en F_p, cadena 'num/den' (o entero) en característica 0."""
        if self.char == 0:
            return str(self.value)
        return int(self.value)

    def __str__(self) -> str:
        return str(self.value)


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_inv(a: Scalar) -> Scalar:
    return a.inverse()

"""Dual-mode scalar arithmetic: exact rationals or IEEE-754 doubles.

All group-law, word-map and region formulas downstream are polynomial with
rational coefficients, so exact mode evaluates them without any rounding and
serves as the oracle for the float path.  Both modes hide behind the single
:class:`Scalar` type; mixing modes in one expression is an error rather than
a silent coercion.
"""

from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import Union

__all__ = [
    "Mode",
    "ModeMismatchError",
    "Scalar",
    "DIAGONAL_FIXED_POINT",
    "fixed_point_residual",
    "is_fixed_point_root",
]


class Mode(Enum):
    EXACT = "exact"
    FLOAT = "float"


class ModeMismatchError(TypeError):
    """Raised when exact and float scalars meet in one operation."""


NumberLike = Union[int, Fraction, float, str, "Scalar"]


class Scalar:
    """An immutable number tagged with its arithmetic mode.

    Exact mode wraps :class:`fractions.Fraction` (arbitrary-precision,
    gcd-normalized, positive denominator); float mode wraps a Python float.
    Plain ints are mode-neutral and may appear on either side of any
    operator, which keeps polynomial formulas like ``(1 - t) * x`` readable.
    """

    __slots__ = ("mode", "value")

    mode: Mode
    value: Union[Fraction, float]

    def __init__(self, mode: Mode, value: Union[Fraction, float]):
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, val):  # pragma: no cover - immutability guard
        raise AttributeError("Scalar is immutable")

    # construction -----------------------------------------------------

    @staticmethod
    def exact(value: Union[int, Fraction, str], den: int = 1) -> "Scalar":
        """Exact rational scalar; accepts ints, Fractions, or strings like "3/4"."""
        return Scalar(Mode.EXACT, Fraction(value) / den if den != 1 else Fraction(value))

    @staticmethod
    def of_float(value: float) -> "Scalar":
        return Scalar(Mode.FLOAT, float(value))

    @staticmethod
    def zero(mode: Mode) -> "Scalar":
        return Scalar(mode, Fraction(0) if mode is Mode.EXACT else 0.0)

    @staticmethod
    def one(mode: Mode) -> "Scalar":
        return Scalar(mode, Fraction(1) if mode is Mode.EXACT else 1.0)

    @staticmethod
    def lift(value: int, mode: Mode) -> "Scalar":
        """Embed a mode-neutral int into the given mode."""
        return Scalar(mode, Fraction(value) if mode is Mode.EXACT else float(value))

    @staticmethod
    def parse(text: str, mode: Mode) -> "Scalar":
        """Parse "p/q" or decimal notation into the requested mode."""
        text = text.strip()
        if mode is Mode.EXACT:
            return Scalar(Mode.EXACT, Fraction(text))
        try:
            return Scalar(Mode.FLOAT, float(text))
        except ValueError:
            return Scalar(Mode.FLOAT, float(Fraction(text)))

    # arithmetic -------------------------------------------------------

    def _coerce(self, other: NumberLike) -> Union[Fraction, float]:
        if isinstance(other, Scalar):
            if other.mode is not self.mode:
                raise ModeMismatchError(
                    f"cannot combine {self.mode.value} and {other.mode.value} scalars"
                )
            return other.value
        if isinstance(other, int):
            return Fraction(other) if self.mode is Mode.EXACT else float(other)
        raise ModeMismatchError(f"cannot combine Scalar with {type(other).__name__}")

    def __add__(self, other: NumberLike) -> "Scalar":
        return Scalar(self.mode, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: NumberLike) -> "Scalar":
        return Scalar(self.mode, self.value - self._coerce(other))

    def __rsub__(self, other: NumberLike) -> "Scalar":
        return Scalar(self.mode, self._coerce(other) - self.value)

    def __mul__(self, other: NumberLike) -> "Scalar":
        return Scalar(self.mode, self.value * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: NumberLike) -> "Scalar":
        divisor = self._coerce(other)
        if divisor == 0:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(self.mode, self.value / divisor)

    def __rtruediv__(self, other: NumberLike) -> "Scalar":
        if self.value == 0:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar(self.mode, self._coerce(other) / self.value)

    def __neg__(self) -> "Scalar":
        return Scalar(self.mode, -self.value)

    def __abs__(self) -> "Scalar":
        return Scalar(self.mode, abs(self.value))

    # comparisons ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.mode is other.mode and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.mode, self.value))

    def __lt__(self, other: NumberLike) -> bool:
        return self.value < self._coerce(other)

    def __le__(self, other: NumberLike) -> bool:
        return self.value <= self._coerce(other)

    def __gt__(self, other: NumberLike) -> bool:
        return self.value > self._coerce(other)

    def __ge__(self, other: NumberLike) -> bool:
        return self.value >= self._coerce(other)

    # views ------------------------------------------------------------

    def to_float(self) -> float:
        """Nearest double to the represented value."""
        return float(self.value)

    def is_exact(self) -> bool:
        return self.mode is Mode.EXACT

    def as_json(self) -> str:
        """Wire format: "p/q" in exact mode, shortest decimal in float mode."""
        return str(self.value) if self.mode is Mode.EXACT else repr(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.as_json()}, {self.mode.value})"

    def __str__(self) -> str:
        return self.as_json()


# The largest diagonal coordinate of the admissible planar region: the root
# of x^2 - 3x + 1 in (0, 1), i.e. (3 - sqrt 5)/2, correctly rounded.
# Irrational, so it exists only as a float-mode constant; exact-mode boundary
# tests use the defining quadratic below instead.
DIAGONAL_FIXED_POINT = Scalar.of_float(0.38196601125010515)


def fixed_point_residual(x: Scalar) -> Scalar:
    """Value of x^2 - 3x + 1, the quadratic whose (0,1) root is the diagonal
    fixed point; vanishes exactly iff x is that point or its conjugate."""
    return x * x - 3 * x + 1


def is_fixed_point_root(x: Scalar) -> bool:
    return fixed_point_residual(x) == 0


assert abs((3 - math.sqrt(5)) / 2 - DIAGONAL_FIXED_POINT.value) <= math.ulp(0.382)

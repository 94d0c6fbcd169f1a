"""Independent oracle: degree-capped free tensor algebra over the rationals.

The package computes the group product from a closed polynomial formula
transcribed by hand.  This module recomputes the same operations from first
principles: elements live in the free associative algebra on two symbols
truncated at degree 3, the group product is log(exp(a) exp(b)) evaluated
there, and coordinates are read off the embedded Lie-subspace basis.  Any
transcription slip in the closed formula shows up as a mismatch against
this longer route, which shares no code with the package internals.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Sequence, Tuple

Word = Tuple[str, ...]
Coeffs = Dict[Word, Fraction]

MAX_DEGREE = 3
WORDS: Tuple[Word, ...] = tuple(
    w for d in range(MAX_DEGREE + 1) for w in product(("x", "y"), repeat=d)
)


class Tensor:
    """Noncommutative polynomial in x, y with all degree > 3 terms dropped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[Word, Fraction] | None = None):
        self.coeffs: Coeffs = {}
        if coeffs:
            for word, value in coeffs.items():
                if value != 0 and len(word) <= MAX_DEGREE:
                    self.coeffs[word] = Fraction(value)

    @staticmethod
    def generator(symbol: str) -> "Tensor":
        return Tensor({(symbol,): Fraction(1)})

    @staticmethod
    def one() -> "Tensor":
        return Tensor({(): Fraction(1)})

    def __getitem__(self, word: Word) -> Fraction:
        return self.coeffs.get(word, Fraction(0))

    def __add__(self, other: "Tensor") -> "Tensor":
        out = dict(self.coeffs)
        for word, value in other.coeffs.items():
            out[word] = out.get(word, Fraction(0)) + value
        return Tensor(out)

    def __sub__(self, other: "Tensor") -> "Tensor":
        out = dict(self.coeffs)
        for word, value in other.coeffs.items():
            out[word] = out.get(word, Fraction(0)) - value
        return Tensor(out)

    def scale(self, factor: Fraction) -> "Tensor":
        return Tensor({w: v * factor for w, v in self.coeffs.items()})

    def __mul__(self, other: "Tensor") -> "Tensor":
        out: Coeffs = {}
        for wa, va in self.coeffs.items():
            for wb, vb in other.coeffs.items():
                if len(wa) + len(wb) > MAX_DEGREE:
                    continue
                word = wa + wb
                out[word] = out.get(word, Fraction(0)) + va * vb
        return Tensor(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tensor) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"Tensor({self.coeffs!r})"


def tensor_exp(n: Tensor) -> Tensor:
    assert n[()] == 0, "exp needs a zero constant term"
    n2 = n * n
    n3 = n2 * n
    return Tensor.one() + n + n2.scale(Fraction(1, 2)) + n3.scale(Fraction(1, 6))


def tensor_log(m: Tensor) -> Tensor:
    assert m[()] == 1, "log needs constant term 1"
    n = m - Tensor.one()
    n2 = n * n
    n3 = n2 * n
    return n - n2.scale(Fraction(1, 2)) + n3.scale(Fraction(1, 3))


# The Lie-subspace basis inside the tensor algebra.  Degree-2 and degree-3
# members are the normalized nested commutators of the generators.
_X = Tensor.generator("x")
_Y = Tensor.generator("y")


def _commutator(a: Tensor, b: Tensor) -> Tensor:
    return a * b - b * a

_E3 = _commutator(_X, _Y).scale(Fraction(1, 2))
_E4 = _commutator(_X, _commutator(_X, _Y)).scale(Fraction(1, 12))
_E5 = _commutator(_Y, _commutator(_Y, _X)).scale(Fraction(1, 12))
BASIS = (_X, _Y, _E3, _E4, _E5)

Coords = Tuple[Fraction, Fraction, Fraction, Fraction, Fraction]


def to_tensor(coords: Sequence[Fraction]) -> Tensor:
    assert len(coords) == 5
    total = Tensor()
    for value, base in zip(coords, BASIS):
        total = total + base.scale(Fraction(value))
    return total


def from_tensor(n: Tensor) -> Coords:
    """Coordinates of a Lie-subspace tensor, with a full consistency check."""
    coords = (
        n[("x",)],
        n[("y",)],
        2 * n[("x", "y")],
        12 * n[("x", "x", "y")],
        12 * n[("y", "y", "x")],
    )
    assert to_tensor(coords) == n, "tensor is not in the Lie subspace"
    return coords


def oracle_multiply(a: Sequence[Fraction], b: Sequence[Fraction]) -> Coords:
    return from_tensor(tensor_log(tensor_exp(to_tensor(a)) * tensor_exp(to_tensor(b))))


def oracle_bracket(a: Sequence[Fraction], b: Sequence[Fraction]) -> Coords:
    return from_tensor(_commutator(to_tensor(a), to_tensor(b)))


def oracle_evaluate(letters: Iterable[Tuple[str, Fraction]]) -> Coords:
    """Evaluate an R-word: the product of exp(t * generator) per letter."""
    total = Tensor.one()
    for symbol, exponent in letters:
        step = Tensor.generator(symbol).scale(Fraction(exponent))
        total = total * tensor_exp(step)
    return from_tensor(tensor_log(total))

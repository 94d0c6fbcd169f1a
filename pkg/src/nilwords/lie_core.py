"""The free 3-step nilpotent Lie algebra on two generators, as a group.

Coordinates c1..c5 are taken w.r.t. the basis (X, Y, half the bracket of X
and Y, one-twelfth of [X,[X,Y]], one-twelfth of [Y,[Y,X]]).  Exponential
coordinates identify the algebra with its group, so exp = log = identity
and the group law is the closed degree-3 polynomial below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from .scalar import Mode, ModeMismatchError, Scalar
from .words import Generator, RWord

__all__ = [
    "AlgebraVector",
    "GroupElement",
    "zero_element",
    "basis",
    "add",
    "sub",
    "neg",
    "scale_div",
    "bracket",
    "multiply",
    "inverse",
    "generator_power",
    "evaluate_word",
    "abelianization_lower_bound",
    "distance_squared",
    "element_to_json",
    "element_from_json",
]


@dataclass(frozen=True)
class AlgebraVector:
    c1: Scalar
    c2: Scalar
    c3: Scalar
    c4: Scalar
    c5: Scalar

    def __post_init__(self):
        modes = {c.mode for c in self.coords()}
        if len(modes) > 1:
            raise ValueError("all coordinates must share one arithmetic mode")

    def coords(self) -> Tuple[Scalar, Scalar, Scalar, Scalar, Scalar]:
        return (self.c1, self.c2, self.c3, self.c4, self.c5)

    @property
    def mode(self) -> Mode:
        return self.c1.mode

    @staticmethod
    def of_ints(c1: int, c2: int, c3: int, c4: int, c5: int, mode: Mode) -> "AlgebraVector":
        return AlgebraVector(*(Scalar.lift(c, mode) for c in (c1, c2, c3, c4, c5)))


# Group elements in exponential coordinates are the same data.
GroupElement = AlgebraVector


def zero_element(mode: Mode) -> AlgebraVector:
    z = Scalar.zero(mode)
    return AlgebraVector(z, z, z, z, z)


def basis(mode: Mode) -> Tuple[AlgebraVector, ...]:
    """The five basis vectors, in coordinate order."""
    return tuple(
        AlgebraVector.of_ints(*(1 if j == i else 0 for j in range(5)), mode=mode)
        for i in range(5)
    )


def add(a: AlgebraVector, b: AlgebraVector) -> AlgebraVector:
    return AlgebraVector(*(x + y for x, y in zip(a.coords(), b.coords())))


def sub(a: AlgebraVector, b: AlgebraVector) -> AlgebraVector:
    return AlgebraVector(*(x - y for x, y in zip(a.coords(), b.coords())))


def neg(a: AlgebraVector) -> AlgebraVector:
    return AlgebraVector(*(-x for x in a.coords()))


def scale_div(a: AlgebraVector, num: int, den: int) -> AlgebraVector:
    """Multiply by the rational num/den (single rounding per coordinate)."""
    return AlgebraVector(*((x * num) / den for x in a.coords()))


def _check_modes(a: AlgebraVector, b: AlgebraVector) -> Mode:
    if a.mode is not b.mode:
        raise ModeMismatchError(
            f"cannot combine {a.mode.value} and {b.mode.value} elements"
        )
    return a.mode


def _raw_multiply(a: tuple, b: tuple) -> tuple:
    # Hot path: plain Fraction or float arithmetic, no Scalar wrappers.
    a1, a2, a3, a4, a5 = a
    b1, b2, b3, b4, b5 = b
    ab3 = 2 * (a1 * b2 - a2 * b1)
    ab4 = 6 * (a1 * b3 - a3 * b1)
    ab5 = -6 * (a2 * b3 - a3 * b2)
    aab4 = 6 * (a1 * ab3)
    aab5 = -6 * (a2 * ab3)
    ba3 = 2 * (b1 * a2 - b2 * a1)
    bba4 = 6 * (b1 * ba3)
    bba5 = -6 * (b2 * ba3)
    return (
        a1 + b1,
        a2 + b2,
        a3 + b3 + ab3 / 2,
        a4 + b4 + ab4 / 2 + aab4 / 12 + bba4 / 12,
        a5 + b5 + ab5 / 2 + aab5 / 12 + bba5 / 12,
    )


def bracket(a: AlgebraVector, b: AlgebraVector) -> AlgebraVector:
    """Lie bracket in coordinates.

    Derived once from the basis: the c3 axis carries half of [X,Y], so
    [X,Y] contributes 2 there, and the two degree-3 axes carry 1/12 of
    their nested brackets, giving the factors 6 and -6.
    """
    mode = _check_modes(a, b)
    a1, a2, a3 = a.c1.value, a.c2.value, a.c3.value
    b1, b2, b3 = b.c1.value, b.c2.value, b.c3.value
    zero = Scalar.zero(mode)
    return AlgebraVector(
        zero,
        zero,
        Scalar(mode, 2 * (a1 * b2 - a2 * b1)),
        Scalar(mode, 6 * (a1 * b3 - a3 * b1)),
        Scalar(mode, -6 * (a2 * b3 - a3 * b2)),
    )


def multiply(a: GroupElement, b: GroupElement) -> GroupElement:
    """Group law: a + b + [a,b]/2 + [a,[a,b]]/12 + [b,[b,a]]/12.

    The series terminates at degree 3 because all deeper brackets vanish,
    so this closed form is the exact product, not a truncation.
    """
    mode = _check_modes(a, b)
    raw = _raw_multiply(
        tuple(c.value for c in a.coords()), tuple(c.value for c in b.coords())
    )
    return AlgebraVector(*(Scalar(mode, v) for v in raw))


def inverse(a: GroupElement) -> GroupElement:
    """Componentwise negation: a and -a commute, so BCH collapses."""
    return neg(a)


def generator_power(g: Generator, t: Scalar) -> GroupElement:
    zero = Scalar.zero(t.mode)
    if g is Generator.X:
        return AlgebraVector(t, zero, zero, zero, zero)
    return AlgebraVector(zero, t, zero, zero, zero)


def evaluate_word(w: RWord, mode: Optional[Mode] = None) -> GroupElement:
    """Left-to-right product of the letter powers; empty word gives 0.

    The mode argument only matters for the empty word, whose letters cannot
    reveal one.
    """
    actual = w.mode(mode if mode is not None else Mode.FLOAT)
    zero = Fraction(0) if actual is Mode.EXACT else 0.0
    state = (zero, zero, zero, zero, zero)
    for letter in w.letters:
        t = letter.exponent.value
        if letter.generator is Generator.X:
            power = (t, zero, zero, zero, zero)
        else:
            power = (zero, t, zero, zero, zero)
        state = _raw_multiply(state, power)
    return AlgebraVector(*(Scalar(actual, v) for v in state))


def abelianization_lower_bound(g: GroupElement) -> Scalar:
    """|c1| + |c2|: no word shorter than this evaluates to g, because the
    quotient by the commutator subgroup adds exponents per generator."""
    return abs(g.c1) + abs(g.c2)


def distance_squared(a: AlgebraVector, b: AlgebraVector) -> Scalar:
    total = Scalar.zero(a.mode)
    for x, y in zip(a.coords(), b.coords()):
        d = x - y
        total = total + d * d
    return total


def element_to_json(g: AlgebraVector) -> list:
    """Five scalars in basis order, in the scalar wire format."""
    return [c.as_json() for c in g.coords()]


def element_from_json(data: Sequence, mode: Mode = Mode.FLOAT) -> AlgebraVector:
    if len(data) != 5:
        raise ValueError(f"expected 5 coordinates, got {len(data)}")
    return AlgebraVector(*(Scalar.parse(str(item), mode) for item in data))

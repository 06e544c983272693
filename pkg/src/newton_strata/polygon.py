"""Exact slope tuples viewed as polygons, and the two partial orders on them.

A polygon of length ``len`` is stored by its slopes: ``slopes[i]`` is the
slope on ``[i, i + 1]`` (0-based).  Vertex heights are recovered with
:func:`partial_sums`.  All arithmetic goes through :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence, Union

from .errors import DimensionError, NotDominantError

RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction; floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class Polygon:
    slopes: tuple[Fraction, ...]
    dominant: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        slopes = tuple(to_rational(s) for s in self.slopes)
        object.__setattr__(self, "slopes", slopes)
        object.__setattr__(
            self, "dominant", all(slopes[i] >= slopes[i + 1] for i in range(len(slopes) - 1))
        )

    def __len__(self) -> int:
        return len(self.slopes)

    def __iter__(self):
        return iter(self.slopes)

    def __getitem__(self, index):
        return self.slopes[index]

    def __add__(self, other: "Polygon") -> "Polygon":
        return add(self, other)

    def __sub__(self, other: "Polygon") -> "Polygon":
        return add(self, negate(other))

    def __neg__(self) -> "Polygon":
        return negate(self)

    def __str__(self) -> str:
        return "(" + ", ".join(str(s) for s in self.slopes) + ")"

    @property
    def total(self) -> Fraction:
        return sum(self.slopes, Fraction(0))


def _check_same_length(a: Polygon, b: Polygon) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} != {len(b)}", left=len(a), right=len(b))


def _require_dominant(p: Polygon, role: str) -> None:
    if not p.dominant:
        raise NotDominantError(f"{role} polygon {p} is not dominant")


def partial_sums(p: Polygon) -> list[Fraction]:
    """Heights of the polygon at x = 1, ..., len."""
    out = []
    acc = Fraction(0)
    for s in p.slopes:
        acc += s
        out.append(acc)
    return out


def breakpoints(p: Polygon) -> list[tuple[int, Fraction]]:
    """Interior integer x where the slope changes, paired with the height there."""
    _require_dominant(p, "breakpoints of")
    heights = partial_sums(p)
    return [
        (x, heights[x - 1])
        for x in range(1, len(p))
        if p.slopes[x - 1] != p.slopes[x]
    ]


def height_at(p: Polygon, x: int) -> Fraction:
    if not 0 <= x <= len(p):
        raise DimensionError(f"x={x} outside [0, {len(p)}]", x=x)
    return sum(p.slopes[:x], Fraction(0))


def has_integer_point_at(p: Polygon, x: int) -> bool:
    return height_at(p, x).denominator == 1


def sorted_dominant(p: Polygon) -> Polygon:
    """Dominant rearrangement; Python's sort is stable, so ties keep input order."""
    return Polygon(tuple(sorted(p.slopes, reverse=True)))


def bruhat_leq(a: Polygon, b: Polygon, *, sort_nondominant: bool = False) -> bool:
    """``a`` lies below ``b`` with the same endpoints.

    Both operands must be dominant.  With ``sort_nondominant=True`` a
    non-dominant right operand is replaced by its dominant rearrangement
    before comparing; the left operand is never rearranged.
    """
    _check_same_length(a, b)
    _require_dominant(a, "left")
    if not b.dominant:
        if not sort_nondominant:
            raise NotDominantError(f"right polygon {b} is not dominant")
        b = sorted_dominant(b)
    sa, sb = partial_sums(a), partial_sums(b)
    if sa and sa[-1] != sb[-1]:
        return False
    return all(x <= y for x, y in zip(sa, sb))


def slopewise_leq(a: Polygon, b: Polygon) -> bool:
    _check_same_length(a, b)
    return all(x <= y for x, y in zip(a.slopes, b.slopes))


def add(a: Polygon, b: Polygon) -> Polygon:
    _check_same_length(a, b)
    return Polygon(tuple(x + y for x, y in zip(a.slopes, b.slopes)))


def negate(a: Polygon) -> Polygon:
    return Polygon(tuple(-x for x in a.slopes))


def scale(a: Polygon, c: RationalLike) -> Polygon:
    c = to_rational(c)
    return Polygon(tuple(c * x for x in a.slopes))


def shift(a: Polygon, c: RationalLike) -> Polygon:
    """Add the constant ``c`` to every slope, i.e. ``a + c * identity``."""
    c = to_rational(c)
    return Polygon(tuple(x + c for x in a.slopes))


def dual(mu: Polygon) -> Polygon:
    """Dominant representative of ``-mu``: the reversed negation."""
    _require_dominant(mu, "dual of")
    return Polygon(tuple(-x for x in reversed(mu.slopes)))


def constant(length: int, value: RationalLike) -> Polygon:
    return Polygon((to_rational(value),) * length)


def zero(length: int) -> Polygon:
    return constant(length, 0)


def identity_cochar(n: int) -> Polygon:
    """All-ones tuple of length 2n."""
    if n < 1:
        raise ValueError("n must be positive")
    return constant(2 * n, 1)


def ordinary_cochar(n: int) -> Polygon:
    """``(1, ..., 1, 0, ..., 0)`` with n ones, length 2n."""
    if n < 1:
        raise ValueError("n must be positive")
    return Polygon((Fraction(1),) * n + (Fraction(0),) * n)


def polygon(values: Iterable[RationalLike]) -> Polygon:
    return Polygon(tuple(values))


def common_denominator(values: Sequence[Fraction]) -> int:
    return lcm(1, *(v.denominator for v in values))

"""Standard Levi subgroups M_alpha of GSp_2n and their combinatorics.

An ordered partition ``alpha = (a_1, ..., a_l)`` of ``m <= n`` cuts a
length-2n tuple into 2l + 1 segments::

    block_1 | ... | block_l | middle | mirror_l | ... | mirror_1

where ``block_i`` covers positions n_{i-1}+1 .. n_i, ``middle`` covers
m+1 .. 2n-m (a GSp_{2(n-m)} factor, empty when m = n) and ``mirror_i`` is
the reflection of ``block_i`` under i -> 2n+1-i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .bg import GSP, NewtonClass
from .errors import (
    DiOutOfRange,
    InternalConsistencyError,
    NonIntegerDi,
    PartitionMismatch,
    ReductionUnavailable,
    ValidationError,
)
from .polygon import Polygon, breakpoints, has_integer_point_at, partial_sums


@dataclass(frozen=True)
class OrderedPartition:
    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if any(not isinstance(a, int) or a < 1 for a in parts):
            raise ValueError(f"parts must be positive integers, got {parts}")
        if sum(parts) > self.n:
            raise ValueError(f"parts {parts} sum to more than n={self.n}")

    @property
    def m(self) -> int:
        return sum(self.parts)

    @property
    def l(self) -> int:
        return len(self.parts)

    @property
    def anchors(self) -> list[int]:
        """``[n_0, n_1, ..., n_l, n_{l+1}]`` with n_0 = 0 and n_{l+1} = n."""
        out = [0]
        for a in self.parts:
            out.append(out[-1] + a)
        out.append(self.n)
        return out

    def gl_ranges(self) -> list[tuple[int, int]]:
        """0-based half-open position ranges of block_1 .. block_l."""
        a = self.anchors
        return [(a[i], a[i + 1]) for i in range(self.l)]

    def mirror_ranges(self) -> list[tuple[int, int]]:
        """0-based ranges of mirror_1 .. mirror_l (same order as the blocks)."""
        two_n = 2 * self.n
        return [(two_n - stop, two_n - start) for start, stop in self.gl_ranges()]

    def middle_range(self) -> tuple[int, int]:
        return (self.m, 2 * self.n - self.m)

    def segments(self) -> list[tuple[int, int]]:
        """All 2l + 1 ranges in positional order; the middle one may be empty."""
        return self.gl_ranges() + [self.middle_range()] + self.mirror_ranges()[::-1]


def _as_polygon(nu: Union[Polygon, NewtonClass]) -> Polygon:
    return nu.nu if isinstance(nu, NewtonClass) else nu


def _symmetry_constant(slopes) -> Fraction:
    return slopes[0] + slopes[-1]


@dataclass(frozen=True)
class LeviCocharacter:
    """A rational cocharacter of M_alpha that is dominant for M_alpha.

    The full 2n-tuple is kept; the block structure lives in ``alpha``.
    """

    alpha: OrderedPartition
    slopes: Polygon

    def __post_init__(self):
        if not isinstance(self.slopes, Polygon):
            object.__setattr__(self, "slopes", Polygon(tuple(self.slopes)))
        s = self.slopes.slopes
        if len(s) != 2 * self.alpha.n:
            raise ValidationError(
                "DimensionError", f"need {2 * self.alpha.n} slopes, got {len(s)}"
            )
        for start, stop in self.alpha.segments():
            for j in range(start, stop - 1):
                if s[j] < s[j + 1]:
                    raise ValidationError(
                        "NotBlockwiseDominant",
                        f"slopes increase at position {j + 2} inside a block",
                        position=j + 2,
                    )
        d = _symmetry_constant(s)
        for i in range(self.alpha.n):
            if s[i] + s[-1 - i] != d:
                raise ValidationError(
                    "SymmetryViolation", f"pair sum at i={i + 1} differs", i=i + 1
                )

    @property
    def symmetry_constant(self) -> Fraction:
        return _symmetry_constant(self.slopes.slopes)


@dataclass(frozen=True)
class LeviBlocks:
    alpha: OrderedPartition
    gl_blocks: tuple[Polygon, ...]
    gsp_block: Polygon
    dual_blocks: tuple[Polygon, ...]

    def reassemble(self) -> Polygon:
        slopes = []
        for p in self.gl_blocks:
            slopes.extend(p.slopes)
        slopes.extend(self.gsp_block.slopes)
        for p in reversed(self.dual_blocks):
            slopes.extend(p.slopes)
        return Polygon(tuple(slopes))


def centralizer_partition(b: NewtonClass) -> OrderedPartition:
    """Partition read off the breakpoints of ``nu_b`` in (0, n].

    The centralizer of ``nu_b`` is M_alpha for this alpha.  A basic class
    gives the empty partition (M_alpha = GSp_2n).
    """
    if b.group.family != GSP:
        raise ValueError("expected a GSp class")
    n = b.group.n
    xs = [x for x, _ in breakpoints(b.nu) if x <= n]
    parts = [x - prev for prev, x in zip([0] + xs, xs)]
    return OrderedPartition(n, tuple(parts))


def has_reduction(nu: Union[Polygon, NewtonClass], alpha: OrderedPartition) -> bool:
    p = _as_polygon(nu)
    return all(has_integer_point_at(p, x) for x in alpha.anchors[1 : alpha.l + 1])


def split_blocks(nu: Union[Polygon, NewtonClass], alpha: OrderedPartition) -> LeviBlocks:
    p = _as_polygon(nu)
    if len(p) != 2 * alpha.n:
        raise ReductionUnavailable(f"polygon length {len(p)} does not match n={alpha.n}")
    if not has_reduction(p, alpha):
        raise ReductionUnavailable(
            f"{p} has no integer point at some anchor of {alpha.parts}",
            anchors=alpha.anchors[1 : alpha.l + 1],
        )
    s = p.slopes
    gl_blocks = tuple(Polygon(s[a:b]) for a, b in alpha.gl_ranges())
    start, stop = alpha.middle_range()
    mirrors = tuple(Polygon(s[a:b]) for a, b in alpha.mirror_ranges())
    return LeviBlocks(alpha, gl_blocks, Polygon(s[start:stop]), mirrors)


def _anchor_positions(alpha: OrderedPartition) -> list[int]:
    """Partial-sum indices where M_alpha's Bruhat order needs equality."""
    n = alpha.n
    eq = list(alpha.anchors[1 : alpha.l + 1])
    if alpha.m == n and n not in eq:
        eq.append(n)
    eq.append(2 * n)
    return eq


def levi_bruhat_leq(a: LeviCocharacter, b: LeviCocharacter) -> bool:
    """Bruhat order of M_alpha on its Newton set.

    Partial sums of ``a`` are bounded by those of ``b`` everywhere, with
    equality at n_1, ..., n_l and at 2n.  The midpoint n is an equality
    anchor only when it coincides with n_l; otherwise the coroots of the
    GSp_{2(n-m)} factor move it.
    """
    if a.alpha != b.alpha:
        raise PartitionMismatch(f"{a.alpha.parts} vs {b.alpha.parts}")
    sa, sb = partial_sums(a.slopes), partial_sums(b.slopes)
    if any(x > y for x, y in zip(sa, sb)):
        return False
    if any(sa[j - 1] != sb[j - 1] for j in _anchor_positions(a.alpha)):
        return False
    two_n = 2 * a.alpha.n
    for j in a.alpha.anchors[1 : a.alpha.l + 1]:
        if j < two_n and sa[two_n - j - 1] != sb[two_n - j - 1]:
            raise InternalConsistencyError(f"mirrored anchor {two_n - j} disagrees")
    return True


def levi_dual(mu: LeviCocharacter) -> LeviCocharacter:
    """Dominant representative of ``-mu`` for M_alpha."""
    alpha = mu.alpha
    n, m = alpha.n, alpha.m
    s = mu.slopes.slopes
    out: list = [None] * (2 * n)
    # GL blocks: reversed negation inside each block
    for i, (start, stop) in enumerate(alpha.gl_ranges()):
        for j in range(stop - start):
            out[start + j] = -s[stop - 1 - j]
    # first half of the middle block mirrors the second half
    for i in range(n - m):
        out[m + i] = -s[2 * n - m - 1 - i]
    # the second half is forced by the symmetry constant
    for i in range(n):
        out[2 * n - 1 - i] = -(s[i] + s[2 * n - 1 - i]) - out[i]
    return LeviCocharacter(alpha, Polygon(tuple(out)))


def levi_degree(mu: LeviCocharacter) -> list[Fraction]:
    """Image in pi_1(M_alpha) = Z^{l+1}, extended to rational tuples.

    Components 1..l are block sums.  The last component is the mean of the
    middle block, which equals its symmetry constant; for m = n the middle
    block is empty and the symmetry constant of ``mu`` is used directly.
    """
    alpha = mu.alpha
    s = mu.slopes.slopes
    out = [sum(s[a:b], Fraction(0)) for a, b in alpha.gl_ranges()]
    k = alpha.n - alpha.m
    if k:
        start, stop = alpha.middle_range()
        out.append(sum(s[start:stop], Fraction(0)) / k)
    else:
        out.append(mu.symmetry_constant)
    return out


def levi_kottwitz(nu: Union[Polygon, NewtonClass], alpha: OrderedPartition) -> list[Fraction]:
    """Kottwitz point of the reduction of ``nu`` to M_alpha (block sums plus similitude)."""
    return levi_degree(LeviCocharacter(alpha, _as_polygon(nu)))


def is_levi_basic(nu: Union[Polygon, NewtonClass], alpha: OrderedPartition) -> bool:
    """Constant on every segment, i.e. central in M_alpha."""
    s = _as_polygon(nu).slopes
    return all(len(set(s[a:b])) <= 1 for a, b in alpha.segments())


@dataclass(frozen=True)
class MuBar:
    mu_bar: LeviCocharacter
    d_vector: tuple[int, ...]


def build_mu_bar(
    nu_b: Union[Polygon, NewtonClass],
    nu_bt: Union[Polygon, NewtonClass],
    alpha: OrderedPartition,
) -> MuBar:
    """Minuscule M_alpha-cocharacter carrying ``nu_b`` to ``nu_bt`` blockwise.

    ``d_i`` is the drop in block sum from ``nu_b`` to ``nu_bt`` on block i,
    and ``d_{l+1} = n - m``.  Block i of the result is ``(1^{d_i}, 0^{a_i - d_i})``
    and the second half is fixed by ``mu_j + mu_{2n+1-j} = 1``.
    """
    pb, pt = _as_polygon(nu_b), _as_polygon(nu_bt)
    n, m = alpha.n, alpha.m
    if len(pb) != 2 * n or len(pt) != 2 * n:
        raise ValidationError("DimensionError", "polygons must have length 2n")
    d_vector = []
    for i, (start, stop) in enumerate(alpha.gl_ranges(), start=1):
        d = sum(pb.slopes[start:stop], Fraction(0)) - sum(pt.slopes[start:stop], Fraction(0))
        if d.denominator != 1:
            raise NonIntegerDi(f"d_{i} = {d} is not an integer", i=i, value=str(d))
        if not 0 <= d <= stop - start:
            raise DiOutOfRange(f"d_{i} = {d} outside [0, {stop - start}]", i=i, value=str(d))
        d_vector.append(int(d))
    d_vector.append(n - m)
    first = []
    sizes = list(alpha.parts) + [n - m]
    for d, size in zip(d_vector, sizes):
        first.extend([1] * d + [0] * (size - d))
    second = [1 - x for x in reversed(first)]
    try:
        mu = LeviCocharacter(alpha, Polygon(tuple(first + second)))
    except ValidationError as exc:
        raise InternalConsistencyError(f"mu_bar is not M_alpha-dominant: {exc}") from exc
    return MuBar(mu, tuple(d_vector))

"""Newton classes of GL_n and GSp_2n.

Both groups have torsion-free fundamental group, so a class is pinned down
by its Newton polygon alone; the Kottwitz point is derived from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from . import kernels
from .errors import CandidateLimitExceeded, DimensionError, ValidationError
from .polygon import (
    Polygon,
    RationalLike,
    breakpoints,
    partial_sums,
    slopewise_leq,
    to_rational,
)

GL = "GL"
GSP = "GSp"


@dataclass(frozen=True)
class GroupTag:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in (GL, GSP):
            raise ValueError(f"unknown group family {self.family!r}")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ValueError(f"rank must be a positive integer, got {self.n!r}")

    @property
    def length(self) -> int:
        """Length of the slope tuples attached to this group."""
        return 2 * self.n if self.family == GSP else self.n

    def __str__(self) -> str:
        return f"{self.family}_{self.length}"


def gl(n: int) -> GroupTag:
    return GroupTag(GL, n)


def gsp(n: int) -> GroupTag:
    return GroupTag(GSP, n)


@dataclass(frozen=True)
class NewtonClass:
    """A validated element of B(G); build it with :func:`validate`."""

    group: GroupTag
    nu: Polygon

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def symmetry_constant(self) -> Fraction:
        """``nu_i + nu_{2n+1-i}`` for a GSp class."""
        if self.group.family != GSP:
            raise ValueError("symmetry constant is only defined for GSp classes")
        return self.nu.slopes[0] + self.nu.slopes[-1]

    def __str__(self) -> str:
        return f"{self.group}{self.nu}"


def symmetry_violation(nu: Polygon) -> Optional[int]:
    """First 1-based i with ``nu_i + nu_{2n+1-i}`` different from ``nu_1 + nu_2n``."""
    s = nu.slopes
    c = s[0] + s[-1]
    for i in range(len(s) // 2):
        if s[i] + s[-1 - i] != c:
            return i + 1
    return None


def validate(group: GroupTag, nu: Polygon) -> NewtonClass:
    """Return the class with Newton polygon ``nu`` or raise :class:`ValidationError`.

    Checks run in a fixed order and the first failure is reported:
    dominance, integer heights at breakpoints (and, for GL, at the right
    endpoint), then for GSp the pair-sum symmetry and the integrality of
    its constant.
    """
    if not isinstance(nu, Polygon):
        nu = Polygon(tuple(nu))
    if len(nu) != group.length:
        raise DimensionError(
            f"{group} needs {group.length} slopes, got {len(nu)}",
            expected=group.length,
            got=len(nu),
        )
    if not nu.dominant:
        raise ValidationError("NotDominant", f"{nu} is not non-increasing")
    for x, y in breakpoints(nu):
        if y.denominator != 1:
            raise ValidationError(
                "NonIntegerBreakpoint", f"height {y} at breakpoint x={x}", x=x
            )
    if group.family == GL:
        total = nu.total
        if total.denominator != 1:
            # The right endpoint is a vertex of every Newton polygon.
            raise ValidationError(
                "NonIntegerBreakpoint", f"height {total} at endpoint", x=len(nu)
            )
    else:
        i = symmetry_violation(nu)
        if i is not None:
            raise ValidationError(
                "SymmetryViolation", f"pair sum at i={i} differs from the first pair", i=i
            )
        c = nu.slopes[0] + nu.slopes[-1]
        if c.denominator != 1:
            raise ValidationError(
                "NonIntegralSymmetryConstant", f"symmetry constant {c} is not an integer"
            )
    return NewtonClass(group, nu)


def is_valid(group: GroupTag, nu: Polygon) -> bool:
    try:
        validate(group, nu)
    except (ValidationError, DimensionError):
        return False
    return True


def kottwitz(b: NewtonClass) -> Fraction:
    total = b.nu.total
    if b.group.family == GL:
        return total
    return total / b.group.n


def is_basic(b: NewtonClass) -> bool:
    return len(set(b.nu.slopes)) <= 1


def embed_gsp_to_gl(b: NewtonClass) -> NewtonClass:
    if b.group.family != GSP:
        raise ValueError("expected a GSp class")
    return validate(gl(2 * b.group.n), b.nu)


def _sort_key(p: Polygon):
    return tuple(partial_sums(p))


def enumerate_gsp(
    n: int,
    lower: Polygon,
    upper: Polygon,
    total: RationalLike,
    *,
    max_candidates: Optional[int] = None,
) -> list[NewtonClass]:
    """All GSp_2n classes ``nu`` with ``lower <= nu <= upper`` slopewise and slope sum ``total``.

    The walk builds the left half [0, n] segment by segment with integer
    heights at every breakpoint and mirrors it through the symmetry
    constant ``total / n``.  Output is ordered lexicographically by
    partial-sum vectors.  Exceeding ``max_candidates`` raises
    :class:`CandidateLimitExceeded` carrying the (sorted) partial result.
    """
    group = gsp(n)
    lower = lower if isinstance(lower, Polygon) else Polygon(tuple(lower))
    upper = upper if isinstance(upper, Polygon) else Polygon(tuple(upper))
    for bound in (lower, upper):
        if len(bound) != group.length:
            raise DimensionError(f"bounds must have length {group.length}")
    total = to_rational(total)
    c = total / n
    if c.denominator != 1 or not slopewise_leq(lower, upper):
        return []
    c = int(c)
    unit = lcm(2, *range(1, n + 1), *(s.denominator for s in lower.slopes + upper.slopes))
    # unit absorbs every bound denominator, so these are exact
    lo = [int(s * unit) for s in lower.slopes]
    hi = [int(s * unit) for s in upper.slopes]
    limit = -1 if max_candidates is None else max_candidates
    paths, truncated = kernels.symplectic_paths(n, c, lo, hi, unit, limit)
    out = []
    for first in paths:
        half = [Fraction(t, unit) for t in first]
        full = half + [c - s for s in reversed(half)]
        out.append(NewtonClass(group, Polygon(tuple(full))))
    out.sort(key=lambda b: _sort_key(b.nu))
    if truncated:
        raise CandidateLimitExceeded(max_candidates, out[:max_candidates])
    return out

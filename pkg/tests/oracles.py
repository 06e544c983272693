"""Independent reference implementations used by the tests.

The brute-force enumerator and the hand-rolled condition check work on
plain tuples of Fractions and never touch the library's kernels.  The
corpus builders do use the library enumerator, which the tests check
against the brute force separately.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import accumulate, combinations_with_replacement
from math import floor, gcd

from newton_strata.bg import GSP, GroupTag, NewtonClass, enumerate_gsp, is_valid
from newton_strata.polygon import Polygon


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def heights(slopes):
    return list(accumulate(slopes))


def corners(slopes):
    """Interior x where the slope changes (slopes assumed non-increasing)."""
    return [i for i in range(1, len(slopes)) if slopes[i - 1] != slopes[i]]


def is_valid_gsp(slopes) -> bool:
    if any(a < b for a, b in zip(slopes, slopes[1:])):
        return False
    hs = heights(slopes)
    if any(hs[x - 1].denominator != 1 for x in corners(slopes)):
        return False
    n = len(slopes) // 2
    c = slopes[0] + slopes[-1]
    return c.denominator == 1 and all(slopes[i] + slopes[-1 - i] == c for i in range(n))


def rational_grid(lo: Fraction, hi: Fraction, max_den: int) -> list[Fraction]:
    out = set()
    for q in range(1, max_den + 1):
        for p in range(floor(lo * q), floor(hi * q) + 1):
            x = Fraction(p, q)
            if lo <= x <= hi:
                out.add(x)
    return sorted(out, reverse=True)


def brute_force_gsp(n, lower, upper, total):
    """All valid GSp_2n slope tuples in the slopewise box with the given total.

    Slopes of a valid polygon have denominators at most 2n, so searching
    that grid is exhaustive.
    """
    total = Fraction(total)
    lo, hi = min(lower), max(upper)
    grid = rational_grid(lo, hi, 2 * n)
    found = set()
    c = total / n
    if c.denominator != 1:
        return found
    for first in combinations_with_replacement(grid, n):
        s = first + tuple(c - x for x in reversed(first))
        if not all(l <= x <= u for l, x, u in zip(lower, s, upper)):
            continue
        if sum(s) == total and is_valid_gsp(s):
            found.add(s)
    return found


def conditions_by_hand(b, bt):
    """The four ordinary-shape conditions on raw tuples, normalized to d = 0."""
    n = len(b) // 2
    star = [0] * n + [-1] * n
    upper = [x + y for x, y in zip(b, star)]
    hb, hu = heights(bt), heights(upper)
    bruhat = all(x <= y for x, y in zip(hb, hu)) and hb[-1] == hu[-1]
    lower_ok = all(x <= y for x, y in zip(bt, b))
    upper_ok = all(x <= y + 1 for x, y in zip(b, bt))
    shared = set(corners(b)) <= set(corners(bt))
    return bruhat, lower_ok, upper_ok, shared


def gap_ok(slopes) -> bool:
    d = sorted(set(slopes))
    return all(y - x > 1 for x, y in zip(d, d[1:]))


def gsp_class(slopes) -> NewtonClass:
    s = tuple(Fraction(x) for x in slopes)
    return NewtonClass(GroupTag(GSP, len(s) // 2), Polygon(s))


def corpus_classes(n: int, bound: int = 3) -> list[NewtonClass]:
    """Valid GSp_2n classes with slopes in [-bound, bound] passing the gap hypothesis."""
    lo = Polygon((Fraction(-bound),) * (2 * n))
    hi = Polygon((Fraction(bound),) * (2 * n))
    out = []
    for c in range(-2 * bound, 2 * bound + 1):
        for b in enumerate_gsp(n, lo, hi, c * n):
            if gap_ok(b.nu.slopes):
                out.append(b)
    return out


def shifted(p: Polygon, k) -> Polygon:
    return Polygon(tuple(x + k for x in p.slopes))


def corpus_candidates(b: NewtonClass) -> list[NewtonClass]:
    """Band candidates for ``b`` at d = 0, widened so negatives show up.

    The exact band is [nu_b - 1, nu_b] with total sum(nu_b) - n; the
    widened band [nu_b - 2, nu_b + 1] and neighbouring totals add
    candidates that violate the conditions.
    """
    n = b.n
    t = b.nu.total - n
    seen = {}
    for total in (t - n, t, t + n):
        for bt in enumerate_gsp(n, shifted(b.nu, -2), shifted(b.nu, 1), total):
            seen[bt.nu] = bt
    return [seen[k] for k in sorted(seen, key=lambda p: heights(p.slopes))]


def random_gsp_slopes(rng: random.Random, n: int, spread: int = 3):
    """A random valid GSp_2n slope tuple, built from a left half of segments."""
    while True:
        c = rng.randint(-spread, spread)
        m = rng.randint(0, n)
        parts, left = [], m
        while left:
            a = rng.randint(1, left)
            parts.append(a)
            left -= a
        slopes = []
        ok = True
        prev = None
        for a in parts:
            h = rng.randint(c * a // 2 + 1, c * a // 2 + spread * a)
            s = Fraction(h, a)
            if s <= Fraction(c, 2) or (prev is not None and s >= prev):
                ok = False
                break
            slopes.extend([s] * a)
            prev = s
        if not ok:
            continue
        slopes.extend([Fraction(c, 2)] * (n - m))
        full = tuple(slopes) + tuple(c - x for x in reversed(slopes))
        if is_valid_gsp(full):
            return full


def random_gap_class(rng: random.Random, n: int, spread: int = 3) -> NewtonClass:
    while True:
        s = random_gsp_slopes(rng, n, spread)
        if gap_ok(s):
            b = gsp_class(s)
            assert is_valid(b.group, b.nu)
            return b


def dominant_in_segments(values, segments):
    """Sort each segment in decreasing order: the brute-force M_alpha dominant representative."""
    out = list(values)
    for a, b in segments:
        out[a:b] = sorted(out[a:b], reverse=True)
    return tuple(out)


def lcm_den(xs) -> int:
    d = 1
    for x in xs:
        d = d * x.denominator // gcd(d, x.denominator)
    return d

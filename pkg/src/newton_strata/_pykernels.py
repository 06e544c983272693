"""Pure-Python hot kernels.

Both kernels work on slopes scaled to a common integer unit: a slope ``s``
is passed as the Python int ``s * unit``.  Python ints keep the arithmetic
exact at any size.  ``_ckernels.pyx`` is a line-for-line compiled twin and
must stay behaviourally identical.
"""

from __future__ import annotations

OK = 0
FAIL_BRUHAT = 1
FAIL_SLOPEWISE_LOWER = 2
FAIL_SLOPEWISE_UPPER = 3
FAIL_BREAKPOINT = 4


def _ceil_div(a, b):
    return -((-a) // b)


def symplectic_paths(n, c, lo, hi, unit, limit):
    """Enumerate symplectic Newton polygons inside a slope band.

    ``lo``/``hi`` are the scaled per-position bounds (length 2n), ``c`` the
    integer symmetry constant.  ``unit`` must be divisible by 2 and by every
    segment length 1..n.  Returns ``(paths, truncated)`` where each path is
    the tuple of the n scaled first-half slopes; the second half is
    ``c * unit - slope`` mirrored.  ``limit < 0`` disables the cap.
    """
    two_n = 2 * n
    cu = c * unit
    mid = cu // 2
    eff_lo = [max(lo[p], cu - hi[two_n - 1 - p]) for p in range(n)]
    eff_hi = [min(hi[p], cu - lo[two_n - 1 - p]) for p in range(n)]
    # middle_ok[x]: the constant slope c/2 fits every position x..n-1
    middle_ok = [True] * (n + 1)
    for p in range(n - 1, -1, -1):
        middle_ok[p] = middle_ok[p + 1] and eff_lo[p] <= mid <= eff_hi[p]

    paths = []
    acc = []
    truncated = False

    def walk(x, prev):
        nonlocal truncated
        if truncated:
            return
        if x == n or middle_ok[x]:
            paths.append(tuple(acc) + (mid,) * (n - x))
            if 0 <= limit < len(paths):
                truncated = True
                return
        seg_lo = None
        seg_hi = None
        for x2 in range(x + 1, n + 1):
            p = x2 - 1
            seg_lo = eff_lo[p] if seg_lo is None else max(seg_lo, eff_lo[p])
            seg_hi = eff_hi[p] if seg_hi is None else min(seg_hi, eff_hi[p])
            if prev is not None:
                seg_hi = min(seg_hi, prev - 1)
            if seg_lo > seg_hi:
                break
            length = x2 - x
            k_lo = max(_ceil_div(seg_lo * length, unit), (mid * length) // unit + 1)
            k_hi = (seg_hi * length) // unit
            step = unit // length
            for k in range(k_lo, k_hi + 1):
                t = k * step
                acc.extend([t] * length)
                walk(x2, t)
                del acc[-length:]
                if truncated:
                    return

    walk(0, None)
    return paths, truncated


def ordinary_conditions(b, bt, unit):
    """First failing condition of the d = 0 ordinary criterion, or OK.

    Checks, in order: ``bt`` below ``b + (0^n, -1^n)`` with equal endpoints;
    ``bt <= b`` slopewise; ``b <= bt + 1`` slopewise; every slope change of
    ``b`` is a slope change of ``bt``.
    """
    two_n = len(b)
    n = two_n // 2
    sb = 0
    st = 0
    for j in range(two_n):
        sb += b[j]
        if j >= n:
            sb -= unit
        st += bt[j]
        if st > sb:
            return FAIL_BRUHAT
    if st != sb:
        return FAIL_BRUHAT
    for j in range(two_n):
        if bt[j] > b[j]:
            return FAIL_SLOPEWISE_LOWER
    for j in range(two_n):
        if b[j] > bt[j] + unit:
            return FAIL_SLOPEWISE_UPPER
    for x in range(1, two_n):
        if b[x - 1] != b[x] and bt[x - 1] == bt[x]:
            return FAIL_BREAKPOINT
    return OK

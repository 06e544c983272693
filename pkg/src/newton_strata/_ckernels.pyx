# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``.

Slope values stay Python ints (arbitrary precision); only indices and
control flow are C-typed.
"""

OK = 0
FAIL_BRUHAT = 1
FAIL_SLOPEWISE_LOWER = 2
FAIL_SLOPEWISE_UPPER = 3
FAIL_BREAKPOINT = 4


cdef inline object _ceil_div(object a, object b):
    return -((-a) // b)


cdef class _Walker:
    cdef Py_ssize_t n
    cdef Py_ssize_t limit
    cdef object unit
    cdef object mid
    cdef list eff_lo
    cdef list eff_hi
    cdef list middle_ok
    cdef list paths
    cdef list acc
    cdef bint truncated

    cdef walk(self, Py_ssize_t x, object prev):
        cdef Py_ssize_t x2, p, length
        cdef object seg_lo, seg_hi, k, k_lo, k_hi, step, t
        if self.truncated:
            return
        if x == self.n or self.middle_ok[x]:
            self.paths.append(tuple(self.acc) + (self.mid,) * (self.n - x))
            if self.limit >= 0 and len(self.paths) > self.limit:
                self.truncated = True
                return
        seg_lo = None
        seg_hi = None
        for x2 in range(x + 1, self.n + 1):
            p = x2 - 1
            if seg_lo is None:
                seg_lo = self.eff_lo[p]
                seg_hi = self.eff_hi[p]
            else:
                if self.eff_lo[p] > seg_lo:
                    seg_lo = self.eff_lo[p]
                if self.eff_hi[p] < seg_hi:
                    seg_hi = self.eff_hi[p]
            if prev is not None and prev - 1 < seg_hi:
                seg_hi = prev - 1
            if seg_lo > seg_hi:
                break
            length = x2 - x
            k_lo = _ceil_div(seg_lo * length, self.unit)
            k = (self.mid * length) // self.unit + 1
            if k > k_lo:
                k_lo = k
            k_hi = (seg_hi * length) // self.unit
            step = self.unit // length
            k = k_lo
            while k <= k_hi:
                t = k * step
                self.acc.extend([t] * length)
                self.walk(x2, t)
                del self.acc[len(self.acc) - length:]
                if self.truncated:
                    return
                k += 1


def symplectic_paths(Py_ssize_t n, object c, list lo, list hi, object unit, Py_ssize_t limit):
    cdef Py_ssize_t p, two_n = 2 * n
    cdef object cu = c * unit
    cdef _Walker w = _Walker()
    w.n = n
    w.limit = limit
    w.unit = unit
    w.mid = cu // 2
    w.eff_lo = [max(lo[p], cu - hi[two_n - 1 - p]) for p in range(n)]
    w.eff_hi = [min(hi[p], cu - lo[two_n - 1 - p]) for p in range(n)]
    w.middle_ok = [True] * (n + 1)
    for p in range(n - 1, -1, -1):
        w.middle_ok[p] = w.middle_ok[p + 1] and w.eff_lo[p] <= w.mid <= w.eff_hi[p]
    w.paths = []
    w.acc = []
    w.truncated = False
    w.walk(0, None)
    return w.paths, bool(w.truncated)


def ordinary_conditions(list b, list bt, object unit):
    cdef Py_ssize_t j, x, two_n = len(b)
    cdef Py_ssize_t n = two_n // 2
    cdef object sb = 0, st = 0
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

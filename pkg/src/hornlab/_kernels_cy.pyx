# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled counting kernels.

Arithmetic expressions mirror _kernels_py.py operation for operation so
both backends make identical boundary decisions; keep the two files in
sync when touching either.
"""

from libc.math cimport sqrt, floor, fabs, isfinite, M_PI

from .errors import CapacityError, NumericsError

DEF INDEX_LIMIT = 9.0e18
DEF COUNT_LIMIT = 4611686018427387904  # 1 << 62


cdef long long _modes_1d(double side, double energy) except -1:
    cdef double x, u
    cdef long long m
    if energy <= 0.0:
        return 0
    x = sqrt(energy) * side / M_PI
    if x > INDEX_LIMIT:
        raise CapacityError("1d mode count exceeds the integer width")
    m = <long long>floor(x)
    while True:
        u = M_PI * (m + 1) / side
        if u * u <= energy:
            m += 1
        else:
            break
    while m >= 1:
        u = M_PI * m / side
        if u * u <= energy:
            break
        m -= 1
    return m


cdef long long _row_count(double side, double acc, double energy) except -1:
    cdef double rem, x, u
    cdef long long l
    rem = energy - acc
    if rem < 0.0:
        return 0
    x = side * sqrt(rem) / M_PI
    if x > INDEX_LIMIT:
        raise CapacityError("row count exceeds the integer width")
    l = <long long>floor(x)
    while True:
        u = M_PI * (l + 1) / side
        if u * u + acc <= energy:
            l += 1
        else:
            break
    while l >= 1:
        u = M_PI * l / side
        if u * u + acc > energy:
            l -= 1
        else:
            break
    return l


def modes_1d(double side, double energy):
    return _modes_1d(side, energy)


def row_count(double side, double acc, double energy):
    return _row_count(side, acc, energy)


def count_dirichlet(double width, double height, double energy):
    cdef double long_side, short_side, t, acc
    cdef long long rows, m, total
    if height <= width:
        long_side, short_side = width, height
    else:
        long_side, short_side = height, width
    rows = _modes_1d(short_side, energy)
    total = 0
    for m in range(1, rows + 1):
        t = M_PI * m / short_side
        acc = t * t
        if acc > energy:
            break
        total += _row_count(long_side, acc, energy)
    return total


def count_mixed(double width, double height, double energy):
    cdef double t, acc
    cdef long long rows, m, total
    rows = _modes_1d(height, energy)
    total = 0
    for m in range(1, rows + 1):
        t = M_PI * m / height
        acc = t * t
        if acc > energy:
            break
        total += _row_count(width, acc, energy) + 1
    return total


cdef long long _cuboid_rec(double[::1] orders, Py_ssize_t i, double acc,
                           double energy) except -1:
    cdef double side = orders[i]
    cdef double t, nxt
    cdef long long total, m, sub
    if i == orders.shape[0] - 1:
        return _row_count(side, acc, energy)
    total = 0
    m = 1
    while True:
        t = M_PI * m / side
        nxt = acc + t * t
        if nxt > energy:
            break
        sub = _cuboid_rec(orders, i + 1, nxt, energy)
        total += sub
        if total > COUNT_LIMIT:
            raise CapacityError("cuboid count exceeds the 64-bit budget")
        m += 1
    return total


def count_cuboid(sides, double energy):
    import numpy as np
    cdef double[::1] orders = np.sort(np.asarray(sides, dtype=np.float64))
    cdef long long total = _cuboid_rec(orders, 0, 0.0, energy)
    if total > COUNT_LIMIT:
        raise CapacityError("cuboid count exceeds the 64-bit budget")
    return total


DEF DBL_EPS = 2.220446049250313e-16


def band_inertia(double[:, ::1] work, double pivmin):
    """Same contract as _kernels_py.band_inertia; plain C loops."""
    import numpy as np
    cdef Py_ssize_t n = work.shape[0]
    cdef Py_ssize_t half = work.shape[1] - 1
    cdef Py_ssize_t i, k, c, r
    cdef long long neg = 0
    cdef double d, wc, local, piv
    cdef bint ok = True
    cdef double[::1] lbuf = np.empty(max(half, 1), dtype=np.float64)
    for i in range(n):
        d = work[i, 0]
        k = half
        if n - 1 - i < k:
            k = n - 1 - i
        if k <= 0:
            if fabs(d) <= pivmin:
                d = -pivmin
            if d < 0.0:
                neg += 1
            continue
        local = fabs(d)
        for c in range(k):
            wc = fabs(work[i, 1 + c])
            if wc > local:
                local = wc
        piv = pivmin
        if DBL_EPS * local > piv:
            piv = DBL_EPS * local
        if fabs(d) <= piv:
            d = -piv
        if d < 0.0:
            neg += 1
        for c in range(k):
            lbuf[c] = work[i, 1 + c] / d
        for c in range(k):
            wc = work[i, 1 + c]
            for r in range(k - c):
                work[i + 1 + c, r] -= lbuf[c + r] * wc
    for i in range(n):
        if not isfinite(work[i, 0]):
            ok = False
            break
    if not ok:
        raise NumericsError("band LDL^T broke down (non-finite pivot)")
    return neg

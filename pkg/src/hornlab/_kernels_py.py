"""Pure Python / numpy fallback for the hot counting kernels.

Every arithmetic expression here is mirrored verbatim in the compiled
extension so the two backends return bit-identical counts: boundary
decisions go through guarded floors that re-test the defining inequality
instead of trusting a rounded quotient.
"""

import math

import numpy as np

from .errors import CapacityError, NumericsError

PI = math.pi

# A computed mode index beyond this cannot be trusted in 64-bit arithmetic.
_INDEX_LIMIT = 9.0e18


def modes_1d(side: float, energy: float) -> int:
    """#{m >= 1 : (pi*m/side)^2 <= energy}, i.e. floor(sqrt(E)*side/pi) guarded.

    The float floor is nudged up/down until the defining inequality is
    satisfied exactly in double precision, so ties (modes exactly at the
    energy) are always counted and never double-counted.
    """
    if energy <= 0.0:
        return 0
    x = math.sqrt(energy) * side / PI
    if x > _INDEX_LIMIT:
        raise CapacityError(f"1d mode count ~{x:.3e} exceeds the integer width")
    m = int(math.floor(x))
    while True:
        u = PI * (m + 1) / side
        if u * u <= energy:
            m += 1
        else:
            break
    while m >= 1:
        u = PI * m / side
        if u * u <= energy:
            break
        m -= 1
    return m


def _row_count(side: float, acc: float, energy: float) -> int:
    """#{l >= 1 : (pi*l/side)^2 + acc <= energy} with the same guard."""
    rem = energy - acc
    if rem < 0.0:
        return 0
    x = side * math.sqrt(rem) / PI
    if x > _INDEX_LIMIT:
        raise CapacityError(f"row count ~{x:.3e} exceeds the integer width")
    l = int(math.floor(x))
    while True:
        u = PI * (l + 1) / side
        if u * u + acc <= energy:
            l += 1
        else:
            break
    while l >= 1:
        u = PI * l / side
        if u * u + acc > energy:
            l -= 1
        else:
            break
    return l


def row_count(side: float, acc: float, energy: float) -> int:
    return _row_count(side, acc, energy)


def count_dirichlet(width: float, height: float, energy: float) -> int:
    """#{(l, m), l,m >= 1 : (pi*l/width)^2 + (pi*m/height)^2 <= energy}.

    Iterates the index of the shorter side (fewer rows) and resolves each
    row in closed form, so cost is O(1 + sqrt(E) * min(width, height)).
    """
    if height <= width:
        long_side, short_side = width, height
    else:
        long_side, short_side = height, width
    rows = modes_1d(short_side, energy)
    total = 0
    for m in range(1, rows + 1):
        t = PI * m / short_side
        acc = t * t
        if acc > energy:
            break
        total += _row_count(long_side, acc, energy)
    return total


def count_mixed(width: float, height: float, energy: float) -> int:
    """#{(l, m), l >= 0, m >= 1 : (pi*l/width)^2 + (pi*m/height)^2 <= energy}.

    The l = 0 column makes the enumeration asymmetric, so rows always run
    over the height index: cost O(1 + sqrt(E) * height).
    """
    rows = modes_1d(height, energy)
    total = 0
    for m in range(1, rows + 1):
        t = PI * m / height
        acc = t * t
        if acc > energy:
            break
        total += _row_count(width, acc, energy) + 1
    return total


def count_cuboid(sides, energy: float) -> int:
    """#{m in N^d, m_i >= 1 : sum (pi*m_i/side_i)^2 <= energy}.

    Short sides are iterated, the longest side is resolved by the 1d
    closed form, so cost tracks the count plus lower-dimensional surface
    terms.  Partial sums of squares are accumulated (never re-subtracted)
    to keep d = 2 bit-identical with count_dirichlet.
    """
    orders = sorted(sides)
    total = _cuboid_rec(orders, 0, 0.0, energy)
    if total > (1 << 62):
        raise CapacityError("cuboid count exceeds the 64-bit budget")
    return total


def _cuboid_rec(orders, i: int, acc: float, energy: float) -> int:
    side = orders[i]
    if i == len(orders) - 1:
        return _row_count(side, acc, energy)
    total = 0
    m = 1
    while True:
        t = PI * m / side
        nxt = acc + t * t
        if nxt > energy:
            break
        total += _cuboid_rec(orders, i + 1, nxt, energy)
        if total > (1 << 62):
            raise CapacityError("cuboid count exceeds the 64-bit budget")
        m += 1
    return total


_DBL_EPS = 2.220446049250313e-16


def band_inertia(work: np.ndarray, pivmin: float) -> int:
    """Eigenvalues <= shift of a symmetric band matrix, by LDL^T inertia.

    ``work`` is the lower band of (A - shift*I), layout work[i, j] =
    A[i+j, i], C-contiguous, and is destroyed.  Near-zero pivots are
    clamped to -max(pivmin, eps * column scale) and counted: a singular
    leading minor means the shift sits on an eigenvalue, and the clamp
    keeps fill bounded when the shift is merely close to one (the count
    then holds for a matrix within that diagonal perturbation).  The
    trailing update runs one column at a time through a sliding Hankel
    window so the O(n*b^2) work stays inside numpy.
    """
    n, width = work.shape
    half = width - 1
    neg = 0
    for i in range(n):
        d = work[i, 0]
        k = min(half, n - 1 - i)
        if k <= 0:
            if abs(d) <= pivmin:
                d = -pivmin
            if d < 0.0:
                neg += 1
            continue
        w = work[i, 1 : k + 1].copy()
        local = max(abs(d), float(np.abs(w).max()))
        piv = max(pivmin, _DBL_EPS * local)
        if abs(d) <= piv:
            d = -piv
        if d < 0.0:
            neg += 1
        lcol = w / d
        padded = np.zeros(2 * k)
        padded[:k] = lcol
        hank = np.lib.stride_tricks.sliding_window_view(padded, k)[:k]
        work[i + 1 : i + 1 + k, 0:k] -= hank * w[:, None]
    if not np.isfinite(work[:, 0]).all():
        raise NumericsError("band LDL^T broke down (non-finite pivot)")
    return neg

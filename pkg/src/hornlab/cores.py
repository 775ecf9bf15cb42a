"""Spectral cores: the finite staircase prefix thick enough to matter at E.

A rectangle contributes modes at energy E exactly when its height passes
b_k >= pi/sqrt(E); the core at E is the union of the first n(E) rectangles.
Core geometry (area, two perimeter conventions) feeds the counting-term
bookkeeping and the growth fits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .domains import SimpleDomain
from .errors import SpecError

PI = math.pi

_SEARCH_LIMIT = 1 << 26


def _in_core(height: float, energy: float) -> bool:
    # b >= pi/sqrt(E), tested in the same form the 1d mode kernel uses for
    # its first mode so truncation and counting can never disagree.
    u = PI / height
    return u * u <= energy


def n_of_E(domain: SimpleDomain, energy: float) -> int:
    """Largest k with b_k >= pi/sqrt(E); 0 when even b_1 is too thin.

    Exponential search then bisection on the non-increasing heights.
    """
    if not (energy > 0 and math.isfinite(energy)):
        return 0
    if not _in_core(domain.b(1), energy):
        return 0
    lo = 1
    hi = 2
    while hi <= _SEARCH_LIMIT and _in_core(domain.b(hi), energy):
        lo = hi
        hi *= 2
    if hi > _SEARCH_LIMIT:
        raise SpecError(
            f"core truncation search passed k={_SEARCH_LIMIT}; "
            "height sequence does not decay"
        )
    domain.require_monotone(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _in_core(domain.b(mid), energy):
            lo = mid
        else:
            hi = mid
    assert _in_core(domain.b(lo), energy) and not _in_core(domain.b(lo + 1), energy)
    return lo


@dataclass(frozen=True)
class SpectralCore:
    energy: float
    n: int
    volume: float
    perimeter_union: float
    perimeter_sum: float


def _two_product(a: float, b: float):
    """Exact double product a*b = hi + lo (Dekker/Veltkamp split)."""
    hi = a * b
    c = 134217729.0 * a  # 2**27 + 1
    ah = c - (c - a)
    al = a - ah
    c = 134217729.0 * b
    bh = c - (c - b)
    bl = b - bh
    lo = ((ah * bh - hi) + ah * bl + al * bh) + al * bl
    return hi, lo


def exact_dot(xs, ys) -> float:
    """Correctly rounded sum of products, via exact two-products + fsum.

    Plain double products of width*height pairs drift by an ulp often
    enough to spoil exact closed-form areas; this keeps the accumulated
    area bit-faithful to the real-number sum of the cached terms.
    """
    pieces = []
    for x, y in zip(xs, ys):
        hi, lo = _two_product(x, y)
        pieces.append(hi)
        pieces.append(lo)
    return math.fsum(pieces)


def core_stats(domain: SimpleDomain, energy: float) -> SpectralCore:
    """Area and boundary length of the core at E, both conventions.

    The union boundary of a monotone staircase telescopes: bottom and top
    runs each total a_{n+1}, the vertical pieces total 2*b_1, so the union
    perimeter is exactly 2*a_{n+1} + 2*b_1.  The per-rectangle sum keeps
    every interior wall instead.
    """
    n = n_of_E(domain, energy)
    if n == 0:
        return SpectralCore(energy, 0, 0.0, 0.0, 0.0)
    fs = [domain.f(k) for k in range(1, n + 1)]
    bs = [domain.b(k) for k in range(1, n + 1)]
    volume = exact_dot(fs, bs)
    perim_sum = math.fsum(2.0 * (f + b) for f, b in zip(fs, bs))
    perim_union = 2.0 * domain.a(n + 1) + 2.0 * domain.b(1)
    return SpectralCore(energy, n, volume, perim_union, perim_sum)


@dataclass(frozen=True)
class GrowthFit:
    exponent: float
    coefficient: float
    r_squared: float
    energy_range: tuple

    def as_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "coefficient": self.coefficient,
            "r_squared": self.r_squared,
            "energy_range": list(self.energy_range),
        }


def fit_growth(samples) -> GrowthFit:
    """Least-squares power law value ~ coefficient * E**exponent.

    Expects >= 10 (energy, value) samples with positive entries, energies
    ideally log-spaced; fits a line in log-log coordinates.
    """
    pts = [(float(e), float(v)) for e, v in samples]
    if len(pts) < 10:
        raise ValueError(f"need at least 10 samples for a growth fit, got {len(pts)}")
    if any(e <= 0 or v <= 0 for e, v in pts):
        raise ValueError("growth fit needs positive energies and values")
    loge = np.log([e for e, _ in pts])
    logv = np.log([v for _, v in pts])
    slope, intercept = np.polyfit(loge, logv, 1)
    resid = logv - (slope * loge + intercept)
    ss_res = float(np.dot(resid, resid))
    centered = logv - logv.mean()
    ss_tot = float(np.dot(centered, centered))
    r2 = 1.0 if ss_tot == 0.0 and ss_res == 0.0 else 1.0 - ss_res / ss_tot
    return GrowthFit(
        exponent=float(slope),
        coefficient=float(math.exp(intercept)),
        r_squared=r2,
        energy_range=(min(e for e, _ in pts), max(e for e, _ in pts)),
    )

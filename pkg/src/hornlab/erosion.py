"""Inner parallel sets of the staircase, estimated on a raster.

The eroded set at depth eps keeps the points at distance >= eps from the
staircase boundary.  Only rectangles with b_k >= 2*eps can contribute, so
the estimator rasters each of those with a per-rectangle grid, computes
the exact distance to the finitely many boundary segments (pruned by a
horizontal window: no interior point is farther than b_1/2 from the
boundary), and classifies cell midpoints.  Cells whose corners straddle
the level set give the reported error bar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .domains import SimpleDomain
from .errors import NumericsError, SpecError

PI = math.pi

_SEARCH_LIMIT = 1 << 24


@dataclass(frozen=True)
class ErosionStats:
    epsilon: float
    volume_estimate: float
    volume_error: float
    perimeter_estimate: float
    perimeter_error: float
    resolution: int
    rectangles: int

    def as_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "volume_estimate": self.volume_estimate,
            "volume_error": self.volume_error,
            "perimeter_estimate": self.perimeter_estimate,
            "perimeter_error": self.perimeter_error,
            "resolution": self.resolution,
            "rectangles": self.rectangles,
        }


def thick_prefix(domain: SimpleDomain, threshold: float) -> int:
    """Largest k with b_k >= threshold (0 if none); needs decaying b."""
    if domain.b(1) < threshold:
        return 0
    lo, hi = 1, 2
    while hi <= _SEARCH_LIMIT and domain.b(hi) >= threshold:
        lo = hi
        hi *= 2
    if hi > _SEARCH_LIMIT:
        raise SpecError("height sequence does not drop below the erosion threshold")
    domain.require_monotone(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if domain.b(mid) >= threshold:
            lo = mid
        else:
            hi = mid
    return lo


def boundary_segments(domain: SimpleDomain, through_k: int):
    """Axis-aligned boundary segments of the staircase up to rectangle k.

    Returns (horizontal, vertical): horizontal rows (x0, x1, y), vertical
    rows (y0, y1, x).  The bottom edge and rectangle tops are horizontal;
    the left wall and the drops between consecutive tops are vertical.  No
    artificial right wall is added: the domain continues, and callers only
    query points farther than b_1 to the left of the truncation.
    """
    horiz = [(0.0, domain.a(through_k + 1), 0.0)]
    vert = [(0.0, domain.b(1), 0.0)]
    for k in range(1, through_k + 1):
        horiz.append((domain.a(k), domain.a(k + 1), domain.b(k)))
        if k < through_k and domain.b(k + 1) < domain.b(k):
            vert.append((domain.b(k + 1), domain.b(k), domain.a(k + 1)))
    return np.asarray(horiz), np.asarray(vert)


def distance_field(px, py, horiz, vert, window):
    """Min distance from broadcastable point arrays to the pruned segments."""
    x0, x1 = window
    d = np.full(np.broadcast(px, py).shape, np.inf)
    for hx0, hx1, hy in horiz:
        if hx1 < x0 or hx0 > x1:
            continue
        dx = np.maximum(0.0, np.maximum(hx0 - px, px - hx1))
        np.minimum(d, np.hypot(dx, py - hy), out=d)
    for vy0, vy1, vx in vert:
        if vx < x0 or vx > x1:
            continue
        dy = np.maximum(0.0, np.maximum(vy0 - py, py - vy1))
        np.minimum(d, np.hypot(px - vx, dy), out=d)
    return d


def donnelly_core_stats(
    domain: SimpleDomain,
    energy: float,
    resolution: int,
    rng: Optional[np.random.Generator] = None,
    delta_frac: float = 0.125,
) -> ErosionStats:
    """Volume and boundary-length estimates of the eroded set at eps = pi/sqrt(E).

    Each contributing rectangle gets a resolution x resolution raster;
    sample points are cell midpoints, or uniformly jittered inside their
    cell when an rng is supplied.  The boundary length comes from a central
    difference of the eroded volume in the depth parameter.  Raises
    NumericsError when the level-crossing error bar dominates the estimate
    (resolution too coarse relative to eps).
    """
    if not (energy > 0 and math.isfinite(energy)):
        raise ValueError(f"energy must be positive and finite, got {energy!r}")
    if resolution < 64:
        raise ValueError(f"resolution must be >= 64, got {resolution}")
    eps = PI / math.sqrt(energy)
    delta = eps * delta_frac
    K = thick_prefix(domain, 2.0 * (eps - delta))
    if K == 0:
        return ErosionStats(eps, 0.0, 0.0, 0.0, 0.0, resolution, 0)
    n_rect = thick_prefix(domain, 2.0 * eps)

    # rectangles far enough right that no rasterized point can see them
    reach = domain.b(1)
    k_seg = K + 1
    while domain.a(k_seg) < domain.a(K + 1) + reach and k_seg < K + 1 + _SEARCH_LIMIT:
        k_seg += 1
    horiz, vert = boundary_segments(domain, k_seg)

    thresholds = (eps, eps - delta, eps + delta)
    vols = [0.0, 0.0, 0.0]
    errs = [0.0, 0.0, 0.0]
    raster_area = 0.0
    for k in range(1, K + 1):
        ax0, ax1 = domain.a(k), domain.a(k + 1)
        bk = domain.b(k)
        dx = (ax1 - ax0) / resolution
        dy = bk / resolution
        cell = dx * dy
        raster_area += (ax1 - ax0) * bk
        window = (ax0 - reach, ax1 + reach)

        cx = ax0 + dx * np.arange(resolution + 1)
        cy = dy * np.arange(resolution + 1)
        dcorner = distance_field(cx[None, :], cy[:, None], horiz, vert, window)

        if rng is None:
            px = ax0 + dx * (np.arange(resolution)[None, :] + 0.5)
            py = dy * (np.arange(resolution)[:, None] + 0.5)
        else:
            px = ax0 + dx * (np.arange(resolution)[None, :] + rng.random((resolution, resolution)))
            py = dy * (np.arange(resolution)[:, None] + rng.random((resolution, resolution)))
        dmid = distance_field(px, py, horiz, vert, window)

        for idx, thr in enumerate(thresholds):
            inside_mid = dmid >= thr
            vols[idx] += cell * float(inside_mid.sum())
            corner_in = dcorner >= thr
            base = corner_in[:-1, :-1]
            mixed = (
                (base ^ corner_in[1:, :-1])
                | (base ^ corner_in[:-1, 1:])
                | (base ^ corner_in[1:, 1:])
                | (base ^ inside_mid)
            )
            errs[idx] += cell * float(mixed.sum())

    vol, vol_lo, vol_hi = vols
    err, err_lo, err_hi = errs
    # diagnostic: the level-crossing band swamps the estimate and is not
    # itself a negligible sliver of the rastered area
    if err > 0.5 * vol and err > 0.02 * raster_area:
        raise NumericsError(
            f"raster resolution {resolution} too coarse relative to eps={eps:.3g}: "
            f"error bar {err:.3g} vs volume {vol:.3g}"
        )
    perim = (vol_lo - vol_hi) / (2.0 * delta)
    perim_err = (err_lo + err_hi) / (2.0 * delta)
    return ErosionStats(eps, vol, err, perim, perim_err, resolution, n_rect)

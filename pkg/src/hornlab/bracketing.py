"""Two-sided counting bounds for the whole staircase domain.

Summing the all-fixed counts of the rectangles bounds the domain count
from below; relaxing the interior walls to free conditions bounds it from
above.  Rectangles beyond the spectral core contribute nothing, so both
series are finite sums, and the gap between them is the exact floor sum
sum_k floor(sqrt(E) b_k / pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from . import _kernels as kern
from .cores import n_of_E
from .domains import SimpleDomain
from .errors import NumericsError

PI = math.pi


@dataclass(frozen=True)
class BracketResult:
    energy: float
    lower: int
    upper: int
    gap: int
    gap_certificate: Optional[float]
    active_rectangles: int

    def as_dict(self) -> dict:
        return {
            "energy": self.energy,
            "lower": self.lower,
            "upper": self.upper,
            "gap": self.gap,
            "gap_certificate": self.gap_certificate,
            "active_rectangles": self.active_rectangles,
        }


def _require_energy(energy: float) -> None:
    if not (energy > 0 and math.isfinite(energy)):
        raise ValueError(f"energy must be positive and finite, got {energy!r}")


def _counts(domain: SimpleDomain, energy: float):
    """(n, lower, upper) with a one-rectangle safety margin past n(E).

    The marginal rectangle must count zero modes by the truncation rule;
    that is asserted rather than assumed so a boundary misclassification
    surfaces instead of corrupting the bracket.
    """
    n = n_of_E(domain, energy)
    domain.warm(n + 1)
    lower = 0
    upper = 0
    for k in range(1, n + 1):
        w = domain.f(k)
        h = domain.b(k)
        lower += kern.count_dirichlet(w, h, energy)
        upper += kern.count_mixed(w, h, energy)
    margin = kern.count_mixed(domain.f(n + 1), domain.b(n + 1), energy)
    if margin != 0:
        raise NumericsError(
            f"truncation misclassified: rectangle {n + 1} holds {margin} modes at E={energy!r}"
        )
    return n, lower, upper


def lower_count(domain: SimpleDomain, energy: float) -> int:
    """Sum of all-fixed rectangle counts: a lower bound for the domain."""
    _require_energy(energy)
    return _counts(domain, energy)[1]


def upper_count(domain: SimpleDomain, energy: float) -> int:
    """Sum of free-wall rectangle counts: an upper bound for the domain."""
    _require_energy(energy)
    return _counts(domain, energy)[2]


def gap_sum(domain: SimpleDomain, energy: float) -> int:
    """sum_{k <= n(E)} floor(sqrt(E) * b_k / pi), evaluated directly."""
    _require_energy(energy)
    n = n_of_E(domain, energy)
    return sum(kern.modes_1d(domain.b(k), energy) for k in range(1, n + 1))


def bracket(domain: SimpleDomain, energy: float) -> BracketResult:
    """Lower/upper counts, their gap, and the summable-height certificate.

    When sum b_k has a closed form the gap is certified by
    (sqrt(E)/pi) * sum b_k; otherwise the certificate is absent.
    """
    _require_energy(energy)
    n, lower, upper = _counts(domain, energy)
    cert = None
    if domain.b_sum_estimate is not None:
        cert = math.sqrt(energy) / PI * domain.b_sum_estimate
    return BracketResult(
        energy=energy,
        lower=lower,
        upper=upper,
        gap=upper - lower,
        gap_certificate=cert,
        active_rectangles=n,
    )

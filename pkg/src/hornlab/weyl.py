"""Per-energy decomposition of the lower count into geometric terms.

lower = area(core)*E/(4 pi) - perimeter(core)*sqrt(E)/(4 pi) + g + residual

Under the per-rectangle perimeter convention the g term is the sum of
exact per-box remainders, so the residual vanishes identically up to
float assembly noise.  Under the union convention the interior walls are
dropped from the perimeter term and the residual absorbs them, staying
O(sqrt(E)) for summable heights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .boxes import BoxSpec, gauss_error
from .bracketing import _counts, bracket
from .cores import SpectralCore, core_stats
from .domains import SimpleDomain
from .errors import SpecError
from .sequences import YES, classify_summable

PI = math.pi

CONVENTIONS = ("sum", "union")


@dataclass(frozen=True)
class WeylDecomposition:
    energy: float
    volume_term: float
    perimeter_term: float
    g_term: float
    reconstruction: int
    residual: float
    perimeter_convention: str
    advisory: bool  # heights not certified summable: residual bound not guaranteed

    def as_dict(self) -> dict:
        return {
            "energy": self.energy,
            "volume_term": self.volume_term,
            "perimeter_term": self.perimeter_term,
            "g_term": self.g_term,
            "reconstruction": self.reconstruction,
            "residual": self.residual,
            "perimeter_convention": self.perimeter_convention,
            "advisory": self.advisory,
        }


def g_term(domain: SimpleDomain, energy: float, n: int) -> float:
    """Summed exact remainders of the first n rectangles."""
    return math.fsum(
        gauss_error(BoxSpec(domain.f(k), domain.b(k)), energy).error
        for k in range(1, n + 1)
    )


def weyl_decomposition(
    domain: SimpleDomain, energy: float, convention: str = "sum"
) -> WeylDecomposition:
    if convention not in CONVENTIONS:
        raise SpecError(f"perimeter convention must be one of {CONVENTIONS}, got {convention!r}")
    core = core_stats(domain, energy)
    n, lower, _ = _counts(domain, energy)
    assert n == core.n
    perim = core.perimeter_sum if convention == "sum" else core.perimeter_union
    vol_term = core.volume * energy / (4.0 * PI)
    perim_term = perim * math.sqrt(energy) / (4.0 * PI)
    g = g_term(domain, energy, n)
    residual = math.fsum((lower, -vol_term, perim_term, -g))
    recon = max(0, round(math.fsum((vol_term, -perim_term, g))))
    return WeylDecomposition(
        energy=energy,
        volume_term=vol_term,
        perimeter_term=perim_term,
        g_term=g,
        reconstruction=recon,
        residual=residual,
        perimeter_convention=convention,
        advisory=classify_summable(domain.b_spec) != YES,
    )


def sweep_row(domain: SimpleDomain, energy: float, convention: str = "sum") -> dict:
    """One table row combining bracket, core geometry and the decomposition."""
    br = bracket(domain, energy)
    core: SpectralCore = core_stats(domain, energy)
    dec = weyl_decomposition(domain, energy, convention)
    return {
        "E": energy,
        "n_E": core.n,
        "N_lower": br.lower,
        "N_upper": br.upper,
        "gap": br.gap,
        "gap_certificate": br.gap_certificate,
        "vol2": core.volume,
        "perim_union": core.perimeter_union,
        "perim_sum": core.perimeter_sum,
        "vol_term": dec.volume_term,
        "perim_term": dec.perimeter_term,
        "g_term": dec.g_term,
        "residual": dec.residual,
    }

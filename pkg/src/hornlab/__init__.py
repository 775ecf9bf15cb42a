"""hornlab: mode-counting brackets and geometry for staircase horn domains.

An infinite staircase of rectangles with decaying heights has a discrete
fixed-membrane spectrum even at infinite area.  This package computes the
exact two-sided counting bounds obtained by summing per-rectangle counts,
decomposes them into area, boundary and lattice-error terms over the
energy-dependent core, and cross-checks everything against an independent
grid discretization.
"""

__version__ = "0.1.0"

from ._kernels import BACKEND
from .boxes import (
    BoxSpec,
    CuboidSpec,
    GaussError,
    count_dirichlet_box,
    count_dirichlet_cuboid,
    count_mixed_box,
    eigens_below,
    gauss_error,
    rect_gap,
)
from .bracketing import BracketResult, bracket, gap_sum, lower_count, upper_count
from .cores import GrowthFit, SpectralCore, core_stats, fit_growth, n_of_E
from .domains import (
    PRESETS,
    SimpleDomain,
    ValidationReport,
    a_of,
    example_domain,
    harmonic_domain,
    load_domain,
    parse_domain,
    validate_domain,
)
from .erosion import ErosionStats, donnelly_core_stats
from .errors import CapacityError, HornLabError, NumericsError, SpecError
from .fdgrid import (
    CrosscheckReport,
    GridOperator,
    assemble_grid,
    crosscheck,
    fd_count_below,
    richardson_slope,
    smallest_eigenvalue,
)
from .sequences import SequenceSpec, eval_sequence, explicit, exponential, power
from .weyl import WeylDecomposition, sweep_row, weyl_decomposition

__all__ = [
    "BACKEND",
    "BoxSpec",
    "BracketResult",
    "CapacityError",
    "CrosscheckReport",
    "CuboidSpec",
    "ErosionStats",
    "GaussError",
    "GridOperator",
    "GrowthFit",
    "HornLabError",
    "NumericsError",
    "PRESETS",
    "SequenceSpec",
    "SimpleDomain",
    "SpecError",
    "SpectralCore",
    "ValidationReport",
    "WeylDecomposition",
    "a_of",
    "assemble_grid",
    "bracket",
    "core_stats",
    "count_dirichlet_box",
    "count_dirichlet_cuboid",
    "count_mixed_box",
    "crosscheck",
    "donnelly_core_stats",
    "eigens_below",
    "eval_sequence",
    "example_domain",
    "explicit",
    "exponential",
    "fd_count_below",
    "fit_growth",
    "gap_sum",
    "gauss_error",
    "harmonic_domain",
    "load_domain",
    "lower_count",
    "n_of_E",
    "parse_domain",
    "power",
    "rect_gap",
    "richardson_slope",
    "smallest_eigenvalue",
    "sweep_row",
    "upper_count",
    "validate_domain",
    "weyl_decomposition",
]

"""Closed-form mode counting on a single rectangle or cuboid.

The fixed-membrane problem on [0,w] x [0,h] has modes (pi*l/w)^2 +
(pi*m/h)^2 with l, m >= 1; replacing the two vertical walls by free
(Neumann) conditions admits l = 0 as well.  Counts treat modes exactly at
the threshold as counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels as kern
from .errors import CapacityError

PI = math.pi

#: Cuboid counting is supported up to this many dimensions.
MAX_CUBOID_DIM = 4

#: eigens_below refuses to materialize more modes than this by default.
DEFAULT_EIGENS_CAP = 2_000_000


@dataclass(frozen=True)
class BoxSpec:
    width: float
    height: float

    def __post_init__(self):
        for name in ("width", "height"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"box {name} must be positive and finite, got {v!r}")

    @property
    def area(self) -> float:
        return self.width * self.height

    @property
    def perimeter(self) -> float:
        return 2.0 * (self.width + self.height)


@dataclass(frozen=True)
class CuboidSpec:
    sides: tuple

    def __post_init__(self):
        object.__setattr__(self, "sides", tuple(float(s) for s in self.sides))
        if not 1 <= len(self.sides) <= MAX_CUBOID_DIM:
            raise ValueError(
                f"cuboid dimension must be 1..{MAX_CUBOID_DIM}, got {len(self.sides)}"
            )
        if any(not (s > 0 and math.isfinite(s)) for s in self.sides):
            raise ValueError("cuboid sides must be positive and finite")


@dataclass(frozen=True)
class GaussError:
    """Exact remainder of the two-term Weyl approximation on one box.

    error = count - area*E/(4 pi) + perimeter*sqrt(E)/(4 pi); dividing by
    the box area (i.e. multiplying by the dual-lattice cell area) gives the
    normalized disc-coverage error for the dual lattice.
    """

    count: int
    disc_quarter_area: float
    cell_area: float
    error: float

    @property
    def normalized(self) -> float:
        return self.error * self.cell_area


def _require_positive_energy(energy: float) -> None:
    if not (energy > 0 and math.isfinite(energy)):
        raise ValueError(f"energy must be positive and finite, got {energy!r}")


def count_dirichlet_box(box: BoxSpec, energy: float) -> int:
    """Modes of the all-fixed rectangle problem with value <= energy."""
    _require_positive_energy(energy)
    return kern.count_dirichlet(box.width, box.height, energy)


def count_mixed_box(box: BoxSpec, energy: float) -> int:
    """Modes <= energy with free vertical walls (l >= 0, m >= 1)."""
    _require_positive_energy(energy)
    return kern.count_mixed(box.width, box.height, energy)


def rect_gap(height: float, energy: float) -> int:
    """floor(sqrt(E)*height/pi): the exact mixed-minus-fixed count gap.

    Holds for every width because the extra modes are exactly the l = 0
    column, whose membership depends on the height alone.
    """
    return kern.modes_1d(height, energy)


def count_dirichlet_cuboid(cuboid: CuboidSpec, energy: float) -> int:
    _require_positive_energy(energy)
    return kern.count_cuboid(cuboid.sides, energy)


def eigens_below(
    box: BoxSpec,
    energy: float,
    boundary_kind: str = "dirichlet",
    cap: int = DEFAULT_EIGENS_CAP,
) -> np.ndarray:
    """All modes <= energy with multiplicity, ascending.

    The total is counted first; anything above ``cap`` raises CapacityError
    instead of exhausting memory.
    """
    _require_positive_energy(energy)
    if boundary_kind == "dirichlet":
        total = count_dirichlet_box(box, energy)
        l_start = 1
    elif boundary_kind == "mixed":
        total = count_mixed_box(box, energy)
        l_start = 0
    else:
        raise ValueError(f"boundary_kind must be 'dirichlet' or 'mixed', got {boundary_kind!r}")
    if total > cap:
        raise CapacityError(f"{total} modes below E={energy!r} exceeds cap={cap}")
    out = np.empty(total)
    pos = 0
    rows = kern.modes_1d(box.height, energy)
    for m in range(1, rows + 1):
        t = PI * m / box.height
        acc = t * t
        if acc > energy:
            break
        row = kern.row_count(box.width, acc, energy)
        for l in range(l_start, row + 1):
            u = PI * l / box.width
            out[pos] = u * u + acc
            pos += 1
    assert pos == total
    out.sort()
    return out


def gauss_error(box: BoxSpec, energy: float) -> GaussError:
    """Exact per-box remainder after the area and perimeter terms."""
    _require_positive_energy(energy)
    count = count_dirichlet_box(box, energy)
    rho = (
        count
        - box.area * energy / (4.0 * PI)
        + box.perimeter * math.sqrt(energy) / (4.0 * PI)
    )
    return GaussError(
        count=count,
        disc_quarter_area=energy / (4.0 * PI),
        cell_area=1.0 / (box.width * box.height),
        error=rho,
    )

"""Sequence specs for staircase heights b_k and widths f(k).

A spec is a closed form (power ``c*k**p`` or exponential ``c*r**k``) or an
explicit prefix followed by a closed-form tail.  Terms are always evaluated
in double precision so that every downstream floor/ceiling decision is
reproducible bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from scipy.special import zeta

from .errors import SpecError

KINDS = ("power", "exponential", "explicit")

#: Tri-state answers for analytic sequence questions.
YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass(frozen=True)
class SequenceSpec:
    """One term rule: ``power`` is c*k**p, ``exponential`` is c*r**k,
    ``explicit`` is a finite prefix, continued by ``tail`` at the global
    index (term k of the tail spec, not term k - len(prefix))."""

    kind: str
    coefficient: float = 1.0
    exponent: float = 0.0
    values: tuple = ()
    tail: Optional["SequenceSpec"] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown sequence kind {self.kind!r}")
        if self.kind in ("power", "exponential"):
            if not (self.coefficient > 0 and math.isfinite(self.coefficient)):
                raise SpecError("coefficient must be a positive finite real")
            if not math.isfinite(self.exponent):
                raise SpecError("exponent must be finite")
            if self.kind == "exponential" and self.exponent <= 0:
                raise SpecError("exponential ratio must be positive")
            if self.values or self.tail is not None:
                raise SpecError(f"{self.kind} spec takes no explicit values or tail")
        else:
            object.__setattr__(self, "values", tuple(float(v) for v in self.values))
            if not self.values:
                raise SpecError("explicit spec needs at least one value")
            if any(not (v > 0 and math.isfinite(v)) for v in self.values):
                raise SpecError("explicit values must be positive finite reals")


def power(coefficient: float, exponent: float) -> SequenceSpec:
    return SequenceSpec("power", coefficient=coefficient, exponent=exponent)


def exponential(coefficient: float, ratio: float) -> SequenceSpec:
    return SequenceSpec("exponential", coefficient=coefficient, exponent=ratio)


def explicit(values, tail: Optional[SequenceSpec] = None) -> SequenceSpec:
    return SequenceSpec("explicit", values=tuple(values), tail=tail)


def eval_sequence(spec: SequenceSpec, k: int) -> float:
    """Term k (1-based) of the sequence; raises SpecError if non-positive."""
    if k < 1:
        raise SpecError(f"sequence index must be >= 1, got {k}")
    if spec.kind == "power":
        v = spec.coefficient * float(k) ** spec.exponent
    elif spec.kind == "exponential":
        v = spec.coefficient * spec.exponent ** k
    else:
        if k <= len(spec.values):
            v = spec.values[k - 1]
        elif spec.tail is not None:
            return eval_sequence(spec.tail, k)
        else:
            raise SpecError(
                f"explicit spec has {len(spec.values)} values and no tail; "
                f"term {k} is undefined"
            )
    if not (v > 0.0 and math.isfinite(v)):
        raise SpecError(f"term {k} evaluated to non-positive or non-finite {v!r}")
    return v


def classify_summable(spec: SequenceSpec) -> str:
    """Analytic summability of sum_k spec(k): yes / no / unknown."""
    if spec.kind == "power":
        return YES if spec.exponent < -1.0 else NO
    if spec.kind == "exponential":
        return YES if spec.exponent < 1.0 else NO
    if spec.tail is not None:
        return classify_summable(spec.tail)
    return UNKNOWN


def classify_converges_to_zero(spec: SequenceSpec) -> str:
    if spec.kind == "power":
        return YES if spec.exponent < 0.0 else NO
    if spec.kind == "exponential":
        return YES if spec.exponent < 1.0 else NO
    if spec.tail is not None:
        return classify_converges_to_zero(spec.tail)
    return UNKNOWN


def classify_bounded_below(spec: SequenceSpec) -> str:
    """Whether inf_k spec(k) > 0 (the width-function requirement)."""
    if spec.kind == "power":
        return YES if spec.exponent >= 0.0 else NO
    if spec.kind == "exponential":
        return YES if spec.exponent >= 1.0 else NO
    if spec.tail is not None:
        return classify_bounded_below(spec.tail)
    return UNKNOWN


def sum_from(spec: SequenceSpec, k0: int) -> Optional[float]:
    """Closed-form sum_{k>=k0} spec(k), or None when divergent/unknown.

    Power sums go through the Riemann zeta function minus the finite
    prefix; exponential tails are geometric.
    """
    if k0 < 1:
        raise SpecError("sum_from needs k0 >= 1")
    if spec.kind == "power":
        if spec.exponent >= -1.0:
            return None
        s = -spec.exponent
        head = math.fsum(float(j) ** spec.exponent for j in range(1, k0))
        return spec.coefficient * (float(zeta(s)) - head)
    if spec.kind == "exponential":
        r = spec.exponent
        if r >= 1.0:
            return None
        return spec.coefficient * r**k0 / (1.0 - r)
    # explicit
    if spec.tail is None:
        return None
    prefix = spec.values[k0 - 1 :]
    tail_start = max(k0, len(spec.values) + 1)
    tail_sum = sum_from(spec.tail, tail_start)
    if tail_sum is None:
        return None
    return math.fsum(prefix) + tail_sum


def sum_value(spec: SequenceSpec) -> Optional[float]:
    """sum_{k>=1} spec(k) when it converges and has a closed form."""
    return sum_from(spec, 1)


# ---------------------------------------------------------------------------
# JSON wire format


_FIELD_KEYS = {"kind", "coefficient", "exponent", "values", "tail"}


def parse_sequence(obj) -> SequenceSpec:
    """Parse one sequence object; unknown fields are rejected."""
    if not isinstance(obj, dict):
        raise SpecError(f"sequence spec must be an object, got {type(obj).__name__}")
    extra = set(obj) - _FIELD_KEYS
    if extra:
        raise SpecError(f"unknown sequence fields: {sorted(extra)}")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise SpecError(f"sequence kind must be one of {KINDS}, got {kind!r}")
    if kind in ("power", "exponential"):
        for key in ("coefficient", "exponent"):
            if key not in obj or not isinstance(obj[key], (int, float)):
                raise SpecError(f"{kind} spec needs numeric field {key!r}")
        if obj.get("values") or obj.get("tail") is not None:
            raise SpecError(f"{kind} spec takes no values/tail")
        return SequenceSpec(
            kind, coefficient=float(obj["coefficient"]), exponent=float(obj["exponent"])
        )
    vals = obj.get("values")
    if not isinstance(vals, list) or not vals:
        raise SpecError("explicit spec needs a non-empty 'values' list")
    if any(not isinstance(v, (int, float)) for v in vals):
        raise SpecError("'values' entries must be numbers")
    if obj.get("coefficient") is not None or obj.get("exponent") is not None:
        raise SpecError("explicit spec takes no coefficient/exponent")
    tail = obj.get("tail")
    return explicit(vals, parse_sequence(tail) if tail is not None else None)

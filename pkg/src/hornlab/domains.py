"""Staircase horn domains: unions of rectangles [a_k, a_k+1] x [0, b_k].

Heights b_k come from one sequence spec, widths f(k) = a_{k+1} - a_k from
another, with a_1 = 0.  A domain memoizes evaluated terms and prefix sums;
the memo grows geometrically and is guarded by a lock so concurrent readers
observe a consistent prefix.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from typing import Optional

from . import sequences as seqs
from .errors import SpecError
from .sequences import SequenceSpec, eval_sequence


class SimpleDomain:
    """Immutable staircase domain except for its internal memo tables."""

    def __init__(self, b_spec: SequenceSpec, f_spec: SequenceSpec):
        self.b_spec = b_spec
        self.f_spec = f_spec
        self._lock = threading.Lock()
        self._b: list[float] = []
        self._f: list[float] = []
        self._a: list[float] = [0.0]  # _a[i] = a_{i+1}, so a_1 = 0
        self._first_b_increase: Optional[int] = None  # k with b_{k+1} > b_k
        self.b_sum_estimate: Optional[float] = seqs.sum_value(b_spec)

    # -- memoized evaluation ------------------------------------------------

    def _grow(self, need: int) -> None:
        with self._lock:
            if len(self._b) >= need:
                return
            target = max(need, 2 * len(self._b), 16)
            for k in range(len(self._b) + 1, target + 1):
                bk = eval_sequence(self.b_spec, k)
                fk = eval_sequence(self.f_spec, k)
                if self._b and bk > self._b[-1] and self._first_b_increase is None:
                    self._first_b_increase = k - 1
                self._b.append(bk)
                self._f.append(fk)
                self._a.append(self._a[-1] + fk)

    def warm(self, k: int) -> None:
        """Pre-grow memo tables through index k (for parallel sections)."""
        self._grow(k)

    def b(self, k: int) -> float:
        if k > len(self._b):
            self._grow(k)
        return self._b[k - 1]

    def f(self, k: int) -> float:
        if k > len(self._f):
            self._grow(k)
        return self._f[k - 1]

    def a(self, k: int) -> float:
        """a_k with a_1 = 0 and a_{k+1} = a_k + f(k)."""
        if k < 1:
            raise SpecError(f"a_k needs k >= 1, got {k}")
        if k - 1 >= len(self._a):
            self._grow(k - 1)
        return self._a[k - 1]

    def require_monotone(self, through_k: int) -> None:
        """Raise unless b is non-increasing over the cached prefix [1, through_k].

        Search routines (core truncation, erosion cutoff) bisect on b and
        silently produce garbage on a non-monotone sequence, so they call
        this after growing the memo.
        """
        self._grow(through_k)
        bad = self._first_b_increase
        if bad is not None and bad < through_k:
            raise SpecError(
                f"height sequence increases at k={bad} (b_{bad}={self._b[bad - 1]!r} "
                f"-> b_{bad + 1}={self._b[bad]!r}); domain is not a valid staircase"
            )


def a_of(domain: SimpleDomain, k: int) -> float:
    return domain.a(k)


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple  # of (name, passed, detail)
    summable_b: str  # yes / no / unknown

    @property
    def ok(self) -> bool:
        return all(passed for _, passed, _ in self.checks)


def validate_domain(domain: SimpleDomain, horizon: int) -> ValidationReport:
    """Check the staircase requirements over k <= horizon.

    Positivity and monotonicity are checked term by term on the prefix;
    decay of b and the positive lower bound of f are certified analytically
    per spec kind, since no finite prefix can decide them.
    """
    if horizon < 2:
        raise SpecError(f"validation horizon must be >= 2, got {horizon}")
    checks = []

    try:
        domain.warm(horizon)
        b_vals = [domain.b(k) for k in range(1, horizon + 1)]
        f_vals = [domain.f(k) for k in range(1, horizon + 1)]
        evaluable = True
        checks.append(("terms evaluable", True, f"evaluated k <= {horizon}"))
    except SpecError as exc:
        evaluable = False
        checks.append(("terms evaluable", False, str(exc)))

    if evaluable:
        checks.append(
            ("b positive", min(b_vals) > 0.0, f"min b over prefix = {min(b_vals)!r}")
        )
        rises = [k for k in range(1, horizon) if b_vals[k] > b_vals[k - 1]]
        checks.append(
            (
                "b non-increasing",
                not rises,
                "monotone over prefix" if not rises else f"increases at k={rises[0]}",
            )
        )
        checks.append(
            ("f positive", min(f_vals) > 0.0, f"min f over prefix = {min(f_vals)!r}")
        )
        a_vals = [domain.a(k) for k in range(1, horizon + 1)]
        increasing = all(a_vals[i] < a_vals[i + 1] for i in range(horizon - 1))
        checks.append(("a strictly increasing", increasing, f"a_{horizon} = {a_vals[-1]!r}"))

    decay = seqs.classify_converges_to_zero(domain.b_spec)
    checks.append(
        (
            "b converges to 0",
            decay == seqs.YES,
            f"analytic classification: {decay}",
        )
    )
    floor = seqs.classify_bounded_below(domain.f_spec)
    checks.append(
        (
            "f bounded below by a positive constant",
            floor == seqs.YES,
            f"analytic classification: {floor}",
        )
    )

    return ValidationReport(
        checks=tuple(checks), summable_b=seqs.classify_summable(domain.b_spec)
    )


# ---------------------------------------------------------------------------
# Presets and the JSON wire format


def example_domain() -> SimpleDomain:
    """f(k) = k^3, b_k = 1/k^2: infinite area, summable heights."""
    return SimpleDomain(b_spec=seqs.power(1.0, -2.0), f_spec=seqs.power(1.0, 3.0))


def harmonic_domain() -> SimpleDomain:
    """b_k = 1/k (not summable), f(k) = k: the negative-path preset."""
    return SimpleDomain(b_spec=seqs.power(1.0, -1.0), f_spec=seqs.power(1.0, 1.0))


PRESETS = {
    "example": example_domain,
    "harmonic": harmonic_domain,
}


def parse_domain(obj) -> SimpleDomain:
    if not isinstance(obj, dict):
        raise SpecError("domain config must be a JSON object")
    extra = set(obj) - {"b", "f"}
    if extra:
        raise SpecError(f"unknown domain fields: {sorted(extra)}")
    if "b" not in obj or "f" not in obj:
        raise SpecError("domain config needs both 'b' and 'f' sequence specs")
    return SimpleDomain(
        b_spec=seqs.parse_sequence(obj["b"]), f_spec=seqs.parse_sequence(obj["f"])
    )


def load_domain(source: str) -> SimpleDomain:
    """Load a domain from a preset name or a JSON file path."""
    if source in PRESETS:
        return PRESETS[source]()
    try:
        with open(source, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read domain config {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"malformed JSON in {source!r}: {exc}") from exc
    return parse_domain(obj)

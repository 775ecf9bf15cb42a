"""Benchmark the compiled kernels against the pure fallback.

Run as ``python -m hornlab.bench``.  Times the rectangle-sum counting
sweep (the inner loop of every table row) and the band inertia count (the
inner loop of the grid validator) on both backends when both are
available.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from . import _kernels_py
from .domains import example_domain
from .fdgrid import assemble_grid


def _load_compiled():
    try:
        from . import _kernels_cy

        return _kernels_cy
    except ImportError:
        return None


def _time(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_counting(impl, domain, energies, n_max):
    def run():
        total = 0
        for e in energies:
            for k in range(1, n_max + 1):
                w, h = domain.f(k), domain.b(k)
                total += impl.count_dirichlet(w, h, e)
                total += impl.count_mixed(w, h, e)
        return total

    return _time(run)


def bench_inertia(impl, band, energy):
    def run():
        work = band.T.copy()
        work[:, 0] -= energy
        return impl.band_inertia(work, 1e-300)

    return _time(run)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--emax", type=float, default=1e10)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--grid", type=float, default=1 / 64)
    args = ap.parse_args(argv)

    domain = example_domain()
    energies = np.logspace(4, np.log10(args.emax), args.samples)
    n_max = 1
    while (np.pi / domain.b(n_max + 1)) ** 2 <= args.emax:
        n_max += 1
    domain.warm(n_max + 1)

    single = domain  # single-rectangle prefix is enough for the grid bench
    op = assemble_grid(single, 1, args.grid)
    band = op.band

    compiled = _load_compiled()
    rows = []
    t_py_count = bench_counting(_kernels_py, domain, energies, n_max)
    t_py_band = bench_inertia(_kernels_py, band, 30.0)
    rows.append(("python", t_py_count, t_py_band))
    if compiled is not None:
        t_cy_count = bench_counting(compiled, domain, energies, n_max)
        t_cy_band = bench_inertia(compiled, band, 30.0)
        rows.append(("cython", t_cy_count, t_cy_band))

    print(f"counting sweep: {args.samples} energies up to {args.emax:g}, "
          f"{n_max} rectangles;  band inertia: {band.shape[1]} unknowns")
    print(f"{'backend':<8} {'count sweep':>12} {'band inertia':>13}")
    for name, tc, tb in rows:
        print(f"{name:<8} {tc * 1e3:>10.2f}ms {tb * 1e3:>11.2f}ms")
    if compiled is not None:
        print(f"speedup  {t_py_count / t_cy_count:>10.1f}x  {t_py_band / t_cy_band:>10.1f}x")
    else:
        print("compiled extension not available; built pure only")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end: domain configs in, CSV/JSON tables out.

Exit codes: 0 success; 1 unexpected failure; 2 usage errors (argparse);
3 malformed config/spec or invalid argument; 4 capacity refusal;
5 numerical diagnostic.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from ._kernels import BACKEND
from .bracketing import bracket
from .cores import core_stats, fit_growth, n_of_E
from .domains import PRESETS, SimpleDomain, load_domain, validate_domain
from .erosion import donnelly_core_stats
from .errors import CapacityError, NumericsError, SpecError
from .fdgrid import crosscheck
from .weyl import CONVENTIONS, sweep_row

SWEEP_COLUMNS = (
    "E",
    "n_E",
    "N_lower",
    "N_upper",
    "gap",
    "gap_certificate",
    "vol2",
    "perim_union",
    "perim_sum",
    "vol_term",
    "perim_term",
    "g_term",
    "residual",
)

_EXIT_CODES = """\
exit codes:
  0  success
  1  unexpected internal failure
  2  usage error (unknown flag, missing argument)
  3  malformed domain config or invalid argument value
  4  capacity refusal (result or grid beyond documented caps)
  5  numerical diagnostic (breakdown, raster too coarse)
"""


def _fmt(value) -> str:
    """CSV cell: reals at 17 significant digits, ints plain, None empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    return format(float(value), ".17g")


def _emit_rows(rows, fmt, out):
    if fmt == "csv":
        out.write(",".join(SWEEP_COLUMNS) + "\n")
        for row in rows:
            out.write(",".join(_fmt(row[c]) for c in SWEEP_COLUMNS) + "\n")
    else:
        json.dump([{c: row[c] for c in SWEEP_COLUMNS} for row in rows], out, indent=2)
        out.write("\n")


def _emit_record(record: dict, out):
    json.dump(record, out, indent=2)
    out.write("\n")


def _energies(emin: float, emax: float, samples: int, spacing: str):
    if not (0 < emin < emax) or not math.isfinite(emax):
        raise SpecError(f"need 0 < emin < emax, got {emin!r}, {emax!r}")
    if samples < 2:
        raise SpecError(f"need at least 2 samples, got {samples}")
    if spacing == "log":
        return list(np.logspace(math.log10(emin), math.log10(emax), samples))
    return list(np.linspace(emin, emax, samples))


def _load(args) -> SimpleDomain:
    if args.domain and args.preset:
        raise SpecError("give either --preset or --domain, not both")
    source = args.preset or args.domain
    if not source:
        raise SpecError(f"a domain is required: --preset {{{','.join(PRESETS)}}} or --domain FILE")
    return load_domain(source)


def _thread_count() -> int:
    raw = os.environ.get("HORNLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _sweep_rows(domain: SimpleDomain, energies, convention: str):
    domain.warm(n_of_E(domain, max(energies)) + 2)
    workers = _thread_count()
    if workers == 1:
        return [sweep_row(domain, e, convention) for e in energies]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda e: sweep_row(domain, e, convention), energies))


def _add_domain_flags(p):
    p.add_argument("--preset", choices=sorted(PRESETS), help="built-in domain")
    p.add_argument("--domain", help="path to a domain JSON config")


def _add_sweep_flags(p, emin, emax, samples):
    p.add_argument("--emin", type=float, default=emin)
    p.add_argument("--emax", type=float, default=emax)
    p.add_argument("--samples", type=int, default=samples)
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--convention", choices=CONVENTIONS, default="sum",
                   help="perimeter convention for the decomposition terms")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hornlab",
        description="Mode-counting brackets and geometric decompositions "
        "for staircase horn domains.",
        epilog=_EXIT_CODES,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version",
                        version=f"hornlab {__version__} (kernels: {BACKEND})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check staircase requirements, report JSON")
    _add_domain_flags(p)
    p.add_argument("--horizon", type=int, default=1000)

    p = sub.add_parser("bracket", help="lower/upper counts at one energy")
    _add_domain_flags(p)
    p.add_argument("--energy", type=float, required=True)

    p = sub.add_parser("sweep", help="per-energy table of counts and terms")
    _add_domain_flags(p)
    _add_sweep_flags(p, 1e2, 1e7, 50)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--seed", type=int, default=None, help="unused by sweep; accepted for config parity")

    p = sub.add_parser("fit", help="log-log growth fit of one sweep column")
    _add_domain_flags(p)
    _add_sweep_flags(p, 1e3, 1e9, 40)
    p.add_argument("--column", choices=[c for c in SWEEP_COLUMNS if c != "E"], required=True)
    p.add_argument("--fit-emin", type=float, default=None,
                   help="fit window low end (default: drop the lowest decade)")
    p.add_argument("--fit-emax", type=float, default=None)
    p.add_argument("--format", choices=("csv", "json"), default="json")

    p = sub.add_parser("fd-check", help="grid-operator counts vs the bracket")
    _add_domain_flags(p)
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--h-list", default="1/16,1/32,1/64",
                   help="comma-separated spacings; fractions like 1/32 allowed")
    p.add_argument("--truncation", type=int, default=None)
    p.add_argument("--max-points", type=int, default=None)

    p = sub.add_parser("core", help="core geometry plus eroded-set estimates")
    _add_domain_flags(p)
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--resolution", type=int, default=256)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--delta-frac", type=float, default=0.125)
    return parser


def _parse_h(token: str) -> float:
    token = token.strip()
    if "/" in token:
        num, den = token.split("/", 1)
        return float(num) / float(den)
    return float(token)


def _run(args, out) -> int:
    if args.command == "validate":
        domain = _load(args)
        report = validate_domain(domain, args.horizon)
        _emit_record(
            {
                "checks": [
                    {"name": n, "passed": p, "detail": d} for n, p, d in report.checks
                ],
                "summable_b": report.summable_b,
                "ok": report.ok,
            },
            out,
        )
    elif args.command == "bracket":
        domain = _load(args)
        _emit_record(bracket(domain, args.energy).as_dict(), out)
    elif args.command == "sweep":
        domain = _load(args)
        energies = _energies(args.emin, args.emax, args.samples, args.spacing)
        _emit_rows(_sweep_rows(domain, energies, args.convention), args.format, out)
    elif args.command == "fit":
        domain = _load(args)
        energies = _energies(args.emin, args.emax, args.samples, args.spacing)
        rows = _sweep_rows(domain, energies, args.convention)
        lo = args.fit_emin if args.fit_emin is not None else args.emin * 10.0
        hi = args.fit_emax if args.fit_emax is not None else args.emax
        pts = [(r["E"], r[args.column]) for r in rows if lo <= r["E"] <= hi]
        fit = fit_growth(pts)
        record = {
            "column": args.column,
            "exponent": fit.exponent,
            "coefficient": fit.coefficient,
            "r_squared": fit.r_squared,
            "window_lo": lo,
            "window_hi": hi,
            "samples_used": len(pts),
        }
        if args.format == "csv":
            keys = list(record)
            out.write(",".join(keys) + "\n")
            out.write(",".join(_fmt(record[k]) for k in keys) + "\n")
        else:
            _emit_record(record, out)
    elif args.command == "fd-check":
        domain = _load(args)
        hs = [_parse_h(tok) for tok in args.h_list.split(",") if tok.strip()]
        if not hs:
            raise SpecError("--h-list needs at least one spacing")
        kwargs = {}
        if args.max_points is not None:
            kwargs["max_points"] = args.max_points
        report = crosscheck(domain, args.energy, hs, truncation=args.truncation, **kwargs)
        _emit_record(report.as_dict(), out)
    elif args.command == "core":
        domain = _load(args)
        core = core_stats(domain, args.energy)
        rng = np.random.default_rng(args.seed) if args.seed is not None else None
        erosion = donnelly_core_stats(
            domain, args.energy, args.resolution, rng=rng, delta_frac=args.delta_frac
        )
        _emit_record(
            {
                "energy": core.energy,
                "n": core.n,
                "vol2": core.volume,
                "perim_union": core.perimeter_union,
                "perim_sum": core.perimeter_sum,
                "erosion": erosion.as_dict(),
            },
            out,
        )
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except (SpecError, ValueError) as exc:
        print(f"hornlab: invalid input: {exc}", file=sys.stderr)
        return 3
    except CapacityError as exc:
        print(f"hornlab: capacity refusal: {exc}", file=sys.stderr)
        return 4
    except NumericsError as exc:
        print(f"hornlab: numerical diagnostic: {exc}", file=sys.stderr)
        return 5
    except Exception as exc:  # pragma: no cover - defensive
        print(f"hornlab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

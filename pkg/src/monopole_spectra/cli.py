"""Command-line front end.

    monopole-spectra spectrum     --kind kratzer --l-max 3 --n-max 2
    monopole-spectra figures      fig1 --output figures/
    monopole-spectra validate     --kind screened --rel-tol 1e-2
    monopole-spectra smap         --alpha-min 0.1 --alpha-max 1 --steps 10
    monopole-spectra wavefunction --kind kratzer --n 1 --l 1
    monopole-spectra potential    --kind screened --l 2

Exit status: 0 success, 1 physics or validation failure, 2 configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from .config import FORMATS, RunConfig, load_config
from .errors import ConfigError, InvalidParameterError, MonopoleSpectraError, ToleranceNotReachedError
from .figures import FIGURE_IDS, default_figure_spec, figure_data
from .model import ModelParams
from .oracle import validate_spectrum
from .spectra import (
    Kind,
    build_spectrum_table,
    max_radial_quantum_number,
    potential,
    wavefunction,
    wavefunction_extent,
)
from .special import monopole_series_S

EXIT_OK, EXIT_PHYSICS, EXIT_CONFIG = 0, 1, 2

PRESETS = {
    "fig1": dict(kind=Kind.KRATZER, params=dict(A=0.5, D=1.0, delta=0.0), l_min=1, l_max=3, n_max=2),
    "fig3": dict(kind=Kind.SCREENED, params=dict(A=2.0, D=4.0, delta=0.001), l_min=0, l_max=4, n_max=2),
}


class PhysicsFailure(MonopoleSpectraError):
    """Command ran but its result signals failure (exit status 1)."""


def _cell(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return "" if value is None else str(value)


def render(records, columns, fmt) -> str:
    """Serialise records as CSV (exact header, 17 significant digits) or JSON."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for rec in records:
            writer.writerow([_cell(rec[c]) for c in columns])
        return buf.getvalue()
    if fmt == "json":
        def plain(v):
            if isinstance(v, (np.integer,)):
                return int(v)
            if isinstance(v, (np.floating, float)):
                v = float(v)
                return v if math.isfinite(v) else None
            if isinstance(v, np.bool_):
                return bool(v)
            return v
        rows = [{c: plain(rec[c]) for c in columns} for rec in records]
        return json.dumps(rows, indent=2) + "\n"
    raise ConfigError(f"unknown format {fmt!r}")


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(text, encoding="utf-8")


# --- commands --------------------------------------------------------------


def cmd_spectrum(config: RunConfig, kind, l_max: int, n_max: int, l_min: int = 0,
                 preset=None):
    """Records ``n,l,alpha,delta,energy`` for every admissible level."""
    params = config.params()
    if preset is not None:
        p = PRESETS[preset]
        kind, l_min, l_max, n_max = p["kind"], p["l_min"], p["l_max"], p["n_max"]
        params = params.replace(hbar=1.0, mass=1.0, charge=1.0, **p["params"])
    kind = Kind(kind)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        table = build_spectrum_table(params, l_max, n_max, kind, l_min=l_min)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    if not table.rows:
        raise PhysicsFailure("no bound states for these parameters")
    records = []
    for row in table.rows:
        if not row.energy < 0:
            raise PhysicsFailure(f"non-negative energy for n={row.n}, l={row.l}")
        if kind is Kind.SCREENED:
            n_allowed = max_radial_quantum_number(params, row.l)
            if n_allowed is None or row.n > n_allowed:
                raise PhysicsFailure(f"n={row.n}, l={row.l} violates the bound on n")
        records.append(dict(n=row.n, l=row.l, alpha=params.alpha, delta=params.delta,
                            energy=row.energy))
    return records


def cmd_figures(config: RunConfig, figure_id: str, points: int = 200):
    """``{file stem: records}`` with columns x,y, one entry per curve."""
    spec = default_figure_spec(figure_id, points)
    data = figure_data(spec, config.params())
    out = {}
    for name, (x, y) in data.items():
        out[f"{figure_id}_{name}"] = [dict(x=a, y=b) for a, b in zip(x, y)]
    return out


def cmd_validate(config: RunConfig, kind, rel_tol: float, l_list=(1, 2), n_list=(0, 1, 2)):
    """Oracle comparison; returns ``(report, records)``."""
    report = validate_spectrum(config.params(), l_list, n_list, kind, rel_tol)
    records = [dict(n=r.n, l=r.l, E_analytic=r.E_analytic, E_numeric=r.E_numeric,
                    abs_err=r.abs_err, rel_err=r.rel_err, passed=r.passed,
                    nodes=r.nodes, note=r.note) for r in report.rows]
    return report, records


def cmd_smap(config: RunConfig, alpha_min: float, alpha_max: float, steps: int):
    """Records ``alpha,S,error_bound``; rows whose tolerance fails carry NaN."""
    if steps < 1 or not 0 < alpha_min <= alpha_max <= 1:
        raise InvalidParameterError("need steps >= 1 and 0 < alpha_min <= alpha_max <= 1")
    records, failures = [], []
    for a in np.linspace(alpha_min, alpha_max, steps):
        try:
            s = monopole_series_S(float(a), config.series.tolerance, config.series.max_terms)
            records.append(dict(alpha=float(a), S=s.value, error_bound=s.error_bound))
        except ToleranceNotReachedError as exc:
            records.append(dict(alpha=float(a), S=math.nan, error_bound=math.nan))
            failures.append(str(exc))
    return records, failures


def cmd_wavefunction(config: RunConfig, kind, n: int, l: int, r_max=None, samples: int = 400):
    """Records ``r,psi`` of the unit-norm reduced radial function on [0, r_max]."""
    params = config.params()
    kind = Kind(kind)
    if r_max is None:
        r_max = wavefunction_extent(kind, params, n, l)
    r = np.linspace(0.0, r_max, samples)
    psi = np.atleast_1d(wavefunction(kind, r, params, n, l))
    return [dict(r=a, psi=b) for a, b in zip(r, psi)]


def cmd_potential(config: RunConfig, kind, l: int, r_min: float, r_max: float, samples: int = 400):
    params = config.params()
    r = np.linspace(r_min, r_max, samples)
    v = np.atleast_1d(potential(Kind(kind), r, params, l))
    return [dict(r=a, V=b) for a, b in zip(r, v)]


# --- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monopole-spectra",
        description="Bound states of Kratzer-type potentials in global-monopole spacetime.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config (default: $MONOPOLE_SPECTRA_CONFIG)")
    common.add_argument("--output", help="output file (directory for 'figures'); default stdout")
    common.add_argument("--format", choices=FORMATS, help="output format (default from config, else csv)")
    kinds = [k.value for k in Kind]
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="table of bound-state energies")
    p.add_argument("--kind", choices=kinds, default="kratzer")
    p.add_argument("--l-min", type=int, default=0)
    p.add_argument("--l-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=2)
    p.add_argument("--preset", choices=sorted(PRESETS))

    p = sub.add_parser("figures", parents=[common], help="x,y curve data for fig1-fig4")
    p.add_argument("figure", choices=FIGURE_IDS + ("all",))
    p.add_argument("--points", type=int, default=200)

    p = sub.add_parser("validate", parents=[common], help="closed forms vs finite-difference oracle")
    p.add_argument("--kind", choices=kinds, default="kratzer")
    p.add_argument("--rel-tol", type=float, default=1e-5)
    p.add_argument("--l", type=int, nargs="+", default=[1, 2])
    p.add_argument("--n", type=int, nargs="+", default=[0, 1, 2])

    p = sub.add_parser("smap", parents=[common], help="self-energy series S(alpha)")
    p.add_argument("--alpha-min", type=float, default=0.1)
    p.add_argument("--alpha-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=10)

    p = sub.add_parser("wavefunction", parents=[common], help="normalised reduced radial function")
    p.add_argument("--kind", choices=kinds, default="kratzer")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--r-max", type=float)
    p.add_argument("--samples", type=int, default=400)

    p = sub.add_parser("potential", parents=[common], help="effective potential on a radial grid")
    p.add_argument("--kind", choices=kinds, default="kratzer")
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--r-min", type=float, default=0.05)
    p.add_argument("--r-max", type=float, default=10.0)
    p.add_argument("--samples", type=int, default=400)
    return parser


def _run(args, config: RunConfig) -> int:
    fmt = args.format or config.output.format
    output = args.output if args.output is not None else config.output.path
    cmd = args.command

    if cmd == "spectrum":
        records = cmd_spectrum(config, args.kind, args.l_max, args.n_max, args.l_min, args.preset)
        _emit(render(records, ["n", "l", "alpha", "delta", "energy"], fmt), output)
        return EXIT_OK

    if cmd == "figures":
        outdir = Path(output or "figures")
        outdir.mkdir(parents=True, exist_ok=True)
        ids = FIGURE_IDS if args.figure == "all" else (args.figure,)
        for fig in ids:
            for stem, records in cmd_figures(config, fig, args.points).items():
                (outdir / f"{stem}.{fmt}").write_text(render(records, ["x", "y"], fmt), encoding="utf-8")
        return EXIT_OK

    if cmd == "validate":
        report, records = cmd_validate(config, args.kind, args.rel_tol, args.l, args.n)
        columns = ["n", "l", "E_analytic", "E_numeric", "abs_err", "rel_err", "passed", "nodes", "note"]
        if output is not None:
            _emit(render(records, columns, fmt), output)
        print("PASS %d/%d" % (len(report.rows), len(report.rows)) if report.passed else "FAIL")
        return EXIT_OK if report.passed else EXIT_PHYSICS

    if cmd == "smap":
        records, failures = cmd_smap(config, args.alpha_min, args.alpha_max, args.steps)
        _emit(render(records, ["alpha", "S", "error_bound"], fmt), output)
        for f in failures:
            print(f"error: {f}", file=sys.stderr)
        return EXIT_PHYSICS if failures else EXIT_OK

    if cmd == "wavefunction":
        records = cmd_wavefunction(config, args.kind, args.n, args.l, args.r_max, args.samples)
        _emit(render(records, ["r", "psi"], fmt), output)
        return EXIT_OK

    if cmd == "potential":
        records = cmd_potential(config, args.kind, args.l, args.r_min, args.r_max, args.samples)
        _emit(render(records, ["r", "V"], fmt), output)
        return EXIT_OK
    raise AssertionError(cmd)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return _run(args, config)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except MonopoleSpectraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PHYSICS


if __name__ == "__main__":
    sys.exit(main())

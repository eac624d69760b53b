"""Command-line interface: reproducible CSV runs of every computation.

Subcommands: force, sweep, isotope-diff, crossover, validate. Output is CSV
with `#`-prefixed metadata (tool version, constant set, backend, config
hash); floats are printed with 9 significant digits and all summation orders
are fixed, so identical configs produce byte-identical files.

Config precedence: command-line flags override `--config` file values, which
override built-in defaults. The config file is flat `key = value` text with
`#` comments, keys named like the long flags with `-` replaced by `_`.

Exit codes: 0 success, 1 numerical non-convergence, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
from pathlib import Path

import numpy as np

from . import __version__
from ._backend import backend_name
from .asymptotics import check_validity, ideal_pressure
from .constants import CONSTANTS, CONSTANTS_ID, Temperature, pascal_to_dyn_per_cm2, \
    thermal_wavelength
from .dielectric import (
    ElectronGasParams,
    IdealConductor,
    PlasmaModel,
    load_tabulated_model,
    plasma_frequency_from_density,
    plasma_shift_from_lattice,
)
from .errors import (
    BracketingError,
    CasimirIsoError,
    ConvergenceError,
    MatsubaraTruncationError,
    TableFormatError,
    TabulatedRangeError,
)
from .gravity import SlabPair, crossover_separation, newtonian_slab_pressure
from .isotope import (
    default_isotope_table_path,
    force_difference_full,
    load_isotope_table,
    relative_force_difference,
)
from .lifshitz import (
    MatsubaraConfig,
    PlateSystem,
    casimir_force_finite_T_detailed,
    casimir_force_zero_T_detailed,
)
from .quadrature import QuadratureConfig
from .validate import run_checks

_NUMERICAL_ERRORS = (ConvergenceError, MatsubaraTruncationError)
_INPUT_ERRORS = (TableFormatError, TabulatedRangeError, BracketingError, ValueError,
                 TypeError, OSError)

_EXPERIMENTAL_RESOLUTION = 1e-2  # current Casimir experiments resolve dF/F ~ 1%


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def _config_hash(params: dict) -> str:
    blob = "\n".join(f"{k}={_fmt(v)}" for k, v in sorted(params.items()) if k != "out")
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def _write_csv(out_path, command, params, header, rows, trailing_comments=()):
    lines = [
        f"# casimir-iso {__version__}",
        f"# constants={CONSTANTS_ID}",
        f"# backend={backend_name()}",
        f"# command={command}",
        f"# config_hash={_config_hash(params)}",
        ",".join(header),
    ]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    lines.extend(trailing_comments)
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _build_model(args):
    if args.model == "ideal":
        return IdealConductor()
    if args.model == "plasma":
        if args.omega_p is None:
            raise ValueError("--model plasma requires --omega-p")
        return PlasmaModel(args.omega_p)
    if args.model == "table":
        if args.eps_file is None:
            raise ValueError("--model table requires --eps-file")
        return load_tabulated_model(args.eps_file)
    raise ValueError(f"unknown model {args.model!r}")


def _resolve_omega_p(args):
    """omega_p from --omega-p, or derived from --n-val (and --m-eff-ratio)."""
    if getattr(args, "omega_p", None) is not None:
        return args.omega_p
    if getattr(args, "n_val", None) is not None:
        params = ElectronGasParams(
            n_val=args.n_val,
            m_eff=args.m_eff_ratio * CONSTANTS.m_e,
            lattice_constant=1e-10,  # not used by the frequency formula
            atoms_per_cell=1,
            valence_per_atom=1.0,
        )
        return plasma_frequency_from_density(params)
    return None


def _force_row(d, T, model, A, qcfg, mcfg_tols):
    """One force evaluation -> row values shared by cmd_force and cmd_sweep."""
    sys_ = PlateSystem(d, A, model)
    if T.kelvin > 0:
        result = casimir_force_finite_T_detailed(
            sys_, MatsubaraConfig(T, *mcfg_tols), qcfg)
    else:
        result = casimir_force_zero_T_detailed(sys_, qcfg)
    pressure = result.force / A
    omega_p = model.omega_p if isinstance(model, PlasmaModel) else None
    if omega_p is not None:
        report = check_validity(d, omega_p, T)
        skin, thermal, in_regime = report.skin_ratio, report.thermal_ratio, report.in_regime
    else:
        skin = 0.0
        thermal = 0.0 if T.kelvin == 0 else d / thermal_wavelength(T)
        in_regime = thermal < 0.1
    if thermal < 0.1:
        regime = "quantum"
    elif thermal <= 1.0:
        regime = "crossover"
    else:
        regime = "thermal"
    correction = result.force / (ideal_pressure(d) * A)
    return [
        d, T.kelvin, model.label(), result.force, pressure,
        pascal_to_dyn_per_cm2(pressure), result.error_estimate, correction,
        skin, thermal, in_regime, regime, "ok",
    ]

_FORCE_HEADER = [
    "d_m", "T_K", "model", "F_N", "P_Pa", "P_dyn_cm2", "err_N",
    "correction_factor", "skin_ratio", "thermal_ratio", "in_regime",
    "regime", "status",
]


def cmd_force(args, params):
    model = _build_model(args)
    qcfg = QuadratureConfig(rel_tol=args.rel_tol)
    row = _force_row(args.d, Temperature(args.T), model, args.A, qcfg,
                     (args.rel_tol, 3))
    _write_csv(args.out, "force", params, _FORCE_HEADER, [row])
    return 0


def cmd_sweep(args, params):
    if not (args.d_min < args.d_max and args.points >= 2):
        raise ValueError("sweep requires d_min < d_max and points >= 2")
    model = _build_model(args)
    qcfg = QuadratureConfig(rel_tol=args.rel_tol)
    ds = np.geomspace(args.d_min, args.d_max, args.points)
    rows = []
    for d in ds:
        try:
            rows.append(_force_row(float(d), Temperature(args.T), model, args.A,
                                   qcfg, (args.rel_tol, 3)))
        except CasimirIsoError as exc:
            # partial failure: annotate the row, keep sweeping
            rows.append([float(d), args.T, model.label()] + ["nan"] * 7
                        + [False, "error", f"error:{type(exc).__name__}"])
    _write_csv(args.out, "sweep", params, _FORCE_HEADER, rows)
    return 0


def cmd_isotope_diff(args, params):
    table_path = args.isotope_table or default_isotope_table_path()
    records = load_isotope_table(table_path)
    omega_p = _resolve_omega_p(args)
    qcfg = QuadratureConfig(rel_tol=args.rel_tol)
    T = Temperature(args.T)
    mcfg = MatsubaraConfig(T, args.rel_tol, 3) if T.kelvin > 0 else None

    header = ["element", "A1", "A2", "T_K", "delta_a_over_a",
              "delta_omega_over_omega", "dF_over_F_eq11", "dF_over_F_full",
              "delta_F_N"]
    rows = []
    max_abs = 0.0
    for rec in records:
        if omega_p is None:
            print(f"skipping {rec.element} {rec.mass_number_1}/{rec.mass_number_2}: "
                  "no --omega-p supplied and none derivable", file=sys.stderr)
            continue
        _, rel_shift = plasma_shift_from_lattice(omega_p, rec.delta_a_over_a)
        closed = relative_force_difference(args.d, omega_p, rec.delta_a_over_a)
        sys_ = PlateSystem(args.d, args.A, PlasmaModel(omega_p))
        delta_f, full = force_difference_full(sys_, rec.delta_a_over_a, qcfg, mcfg)
        max_abs = max(max_abs, abs(full))
        rows.append([rec.element, rec.mass_number_1, rec.mass_number_2,
                     rec.temperature.kelvin, rec.delta_a_over_a, rel_shift,
                     closed, full, delta_f])
    trailing = [
        f"# max_abs_dF_over_F={_fmt(max_abs)}",
        f"# experimental_resolution={_fmt(_EXPERIMENTAL_RESOLUTION)}",
        f"# margin_below_resolution={_fmt(_EXPERIMENTAL_RESOLUTION / max_abs) if max_abs else 'inf'}",
    ]
    _write_csv(args.out, "isotope-diff", params, header, rows, trailing)
    return 0


def cmd_crossover(args, params):
    slabs = SlabPair(args.rho1, args.rho2, args.t1, args.t2, args.lateral)
    root = crossover_separation(slabs, omega_p=args.omega_p)
    p_grav = newtonian_slab_pressure(slabs)
    residual = abs(abs(ideal_pressure(root)) / p_grav - 1.0) if args.omega_p is None \
        else float("nan")
    header = ["rho1_kg_m3", "rho2_kg_m3", "t1_m", "t2_m", "crossover_d_m",
              "casimir_P_Pa", "newton_P_Pa", "residual"]
    rows = [[args.rho1, args.rho2, args.t1, args.t2, root,
             abs(ideal_pressure(root)), p_grav, residual]]
    _write_csv(args.out, "crossover", params, header, rows)
    return 0


def cmd_validate(args, params):
    table = Path(args.isotope_table) if args.isotope_table else default_isotope_table_path()
    if not table.exists():
        raise OSError(f"isotope table not found: {table}")
    checks = run_checks(isotope_table_path=table, rel_tol=args.rel_tol)
    for check in checks:
        print(check.line())
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    return 1 if failed else 0


def _add_common(p):
    p.add_argument("--rel-tol", type=float, default=None,
                   help="relative tolerance for quadrature and summation (default 1e-8)")
    p.add_argument("--out", type=str, default=None, help="output CSV path (default stdout)")
    p.add_argument("--config", type=str, default=None,
                   help="flat key=value config file; flags take precedence")


def _add_geometry(p):
    p.add_argument("--model", choices=("ideal", "plasma", "table"), default=None)
    p.add_argument("--omega-p", type=float, default=None, help="plasma frequency, rad/s")
    p.add_argument("--eps-file", type=str, default=None,
                   help="two-column `xi_rad_per_s, epsilon` permittivity table")
    p.add_argument("--T", type=float, default=None, help="field temperature, K (0 = T=0 integral)")
    p.add_argument("--A", type=float, default=None, help="plate area, m^2")


# (key, converter, default) per subcommand, used for config-file resolution
_DEFAULTS = {
    "force": {"model": (str, "ideal"), "omega_p": (float, None), "eps_file": (str, None),
              "d": (float, 1e-6), "T": (float, 0.0), "A": (float, 1e-4),
              "rel_tol": (float, 1e-8), "out": (str, None)},
    "sweep": {"model": (str, "ideal"), "omega_p": (float, None), "eps_file": (str, None),
              "d_min": (float, 1e-7), "d_max": (float, 1e-5), "points": (int, 21),
              "T": (float, 0.0), "A": (float, 1e-4), "rel_tol": (float, 1e-8),
              "out": (str, None)},
    "isotope-diff": {"isotope_table": (str, None), "omega_p": (float, None),
                     "n_val": (float, None), "m_eff_ratio": (float, 1.0),
                     "d": (float, 4e-6), "T": (float, 0.0), "A": (float, 1e-4),
                     "rel_tol": (float, 1e-9), "out": (str, None)},
    "crossover": {"rho1": (float, 8960.0), "rho2": (float, 8960.0),
                  "t1": (float, 1e-3), "t2": (float, 1e-3), "lateral": (float, 1e-2),
                  "omega_p": (float, None), "rel_tol": (float, 1e-8),
                  "out": (str, None)},
    "validate": {"isotope_table": (str, None), "rel_tol": (float, 1e-8),
                 "out": (str, None)},
}


def _read_config(path):
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


def _resolve(args, command):
    """Apply precedence: flags > config file > defaults. Returns params dict."""
    spec = _DEFAULTS[command]
    config = _read_config(args.config) if args.config else {}
    unknown = set(config) - set(spec)
    if unknown:
        raise ValueError(f"unknown config keys for {command}: {sorted(unknown)}")
    params = {}
    for key, (conv, default) in spec.items():
        value = getattr(args, key, None)
        if value is None and key in config:
            value = conv(config[key])
        if value is None:
            value = default
        setattr(args, key, value)
        if value is not None:
            params[key] = value
    params["command"] = command
    return params


def build_parser():
    parser = argparse.ArgumentParser(
        prog="casimir-iso",
        description="Casimir force between parallel plates (Lifshitz formula), "
                    "isotopic lattice-shift effect, and gravity comparator",
    )
    parser.add_argument("--version", action="version", version=f"casimir-iso {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("force", help="single force evaluation -> one CSV row")
    _add_geometry(p)
    p.add_argument("--d", type=float, default=None, help="plate separation, m")
    _add_common(p)

    p = sub.add_parser("sweep", help="force vs separation, log-spaced CSV")
    _add_geometry(p)
    p.add_argument("--d-min", type=float, default=None)
    p.add_argument("--d-max", type=float, default=None)
    p.add_argument("--points", type=int, default=None)
    _add_common(p)

    p = sub.add_parser("isotope-diff", help="per-record isotopic force differences")
    p.add_argument("--isotope-table", type=str, default=None,
                   help="records CSV (default: shipped Table-1 data)")
    p.add_argument("--omega-p", type=float, default=None)
    p.add_argument("--n-val", type=float, default=None,
                   help="valence electron density, m^-3, to derive omega_p")
    p.add_argument("--m-eff-ratio", type=float, default=None,
                   help="effective mass in units of m_e (with --n-val)")
    p.add_argument("--d", type=float, default=None)
    p.add_argument("--T", type=float, default=None)
    p.add_argument("--A", type=float, default=None)
    _add_common(p)

    p = sub.add_parser("crossover", help="Casimir-gravity crossover separation")
    p.add_argument("--rho1", type=float, default=None, help="slab 1 density, kg/m^3")
    p.add_argument("--rho2", type=float, default=None)
    p.add_argument("--t1", type=float, default=None, help="slab 1 thickness, m")
    p.add_argument("--t2", type=float, default=None)
    p.add_argument("--lateral", type=float, default=None, help="lateral extent, m")
    p.add_argument("--omega-p", type=float, default=None,
                   help="use the plasma-corrected pressure instead of ideal")
    _add_common(p)

    p = sub.add_parser("validate", help="run the built-in consistency suite")
    p.add_argument("--isotope-table", type=str, default=None)
    _add_common(p)

    return parser


_COMMANDS = {
    "force": cmd_force,
    "sweep": cmd_sweep,
    "isotope-diff": cmd_isotope_diff,
    "crossover": cmd_crossover,
    "validate": cmd_validate,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        params = _resolve(args, args.command)
        return _COMMANDS[args.command](args, params)
    except _NUMERICAL_ERRORS as exc:
        print(f"# error={type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except _INPUT_ERRORS as exc:
        print(f"# error={type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

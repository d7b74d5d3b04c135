"""CLI entry point for magnoise.

Every subcommand is a thin wrapper over the library. Frequencies are given in
Hz (converted to rad/s internally) and every numeric flag accepts a unit
suffix. Results go to stdout, or to ``--out``, as JSON or CSV.

Exit status: 0 success, 1 unexpected failure, 2 usage or config error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any

import numpy as np

from . import __version__
from .core.errors import (
    ConfigError,
    DivergenceError,
    DomainError,
    QuadratureError,
    ResolutionError,
    StepSizeError,
)
from .core.model import Material, SlabSystem, unit_vector
from .core.units import Kind, parse_quantity

TWO_PI = 2.0 * math.pi

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_NONCONVERGENCE = 3

CONVENTIONS = ["one-sided", "two-sided"]


def app(argv: list[str] | None = None) -> None:
    """Console script entrypoint (kept as `app` for packaging compatibility)."""
    raise SystemExit(main(argv))


# --- flag parsing -------------------------------------------------------------


def _quantity(kind: Kind) -> Callable[[str], float]:
    def convert(text: str) -> float:
        try:
            return parse_quantity(text, kind)
        except ConfigError as e:
            raise argparse.ArgumentTypeError(str(e)) from e

    convert.__name__ = kind
    return convert


def _vector(text: str) -> tuple[float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    try:
        x, y, z = (float(p) for p in parts)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e
    return (x, y, z)


def _grid(kind: Kind) -> Callable[[str], tuple[float, float, int]]:
    """``start,stop,count`` with unit suffixes on the endpoints."""

    def convert(text: str) -> tuple[float, float, int]:
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected start,stop,count, got {text!r}")
        try:
            start = parse_quantity(parts[0], kind)
            stop = parse_quantity(parts[1], kind)
            count = int(parts[2])
        except (ConfigError, ValueError) as e:
            raise argparse.ArgumentTypeError(str(e)) from e
        if count < 1:
            raise argparse.ArgumentTypeError("grid count must be >= 1")
        return start, stop, count

    convert.__name__ = f"{kind} grid"
    return convert


def _assignment(text: str) -> tuple[str, str]:
    if "=" not in text:
        raise argparse.ArgumentTypeError(f"expected key=value, got {text!r}")
    key, value = (p.strip() for p in text.split("=", 1))
    return key, value


def _log_grid(start: float, stop: float, count: int) -> list[float]:
    if count == 1:
        return [start]
    if not (0 < start and 0 < stop):
        raise ConfigError("log-spaced grids need positive endpoints")
    return [float(x) for x in np.logspace(math.log10(start), math.log10(stop), count)]


def _lin_grid(start: float, stop: float, count: int) -> list[float]:
    return [float(x) for x in np.linspace(start, stop, count)]


def _add_output_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv"], default="json", help="Output format")
    p.add_argument("--out", "-o", type=Path, default=None, help="Write output to this file")


def _add_slab_args(p: argparse.ArgumentParser, two_slab: bool = True) -> None:
    p.add_argument("--d", type=_quantity("length"), required=True, help="Distance to slab (1cm)")
    p.add_argument("--t", type=_quantity("length"), required=True, help="Slab thickness")
    p.add_argument("--sigma", type=_quantity("conductivity"), help="|sigma| in S/m")
    p.add_argument("--phi", type=_quantity("angle"), default=0.0, help="Conductivity phase, rad")
    p.add_argument("--K", type=float, default=1.0, help="Relative permeability, real part")
    p.add_argument("--K-imag", type=float, default=0.0, help="Relative permeability, loss part")
    p.add_argument("--london-depth", type=_quantity("length"), help="Ideal superconductor")
    p.add_argument("--normal", type=_vector, default=(0.0, 0.0, 1.0), help="Slab normal x,y,z")
    if two_slab:
        p.add_argument(
            "--two-slab", action="store_true", help="Midpoint between two slabs (separation 2d)"
        )


def _add_spin_args(p: argparse.ArgumentParser) -> None:
    from .config import GAMMA_ELECTRON_HZ_PER_T

    p.add_argument("--B0", type=_quantity("field"), required=True, help="Static field, T")
    p.add_argument(
        "--gamma",
        type=_quantity("gyromagnetic"),
        default=GAMMA_ELECTRON_HZ_PER_T,
        help="gamma/2pi in Hz/T (default: electron)",
    )
    p.add_argument("--theta", type=_quantity("angle"), default=0.0, help="B0 tilt from normal")


# --- shared builders -------------------------------------------------------------


def _material(args: Any) -> Material:
    if args.london_depth is not None:
        return Material.superconductor(args.london_depth)
    if args.sigma is None:
        raise ConfigError("either --sigma or --london-depth is required")
    return Material.conductor(args.sigma, K=complex(args.K, args.K_imag), phi=args.phi)


def _slab(args: Any) -> SlabSystem:
    config = "two-slab" if getattr(args, "two_slab", False) else "one-slab"
    return SlabSystem(d=args.d, t=args.t, n_hat=args.normal, config=config)


def _spin_axis(args: Any, slab: SlabSystem) -> tuple[float, float, float]:
    """B0 direction tilted by theta from the slab normal."""
    from .core.model import transverse_basis

    x, _, n = transverse_basis(slab.n_hat)
    b = math.cos(args.theta) * n + math.sin(args.theta) * x
    return unit_vector(b)


def _slab_inputs(slab: SlabSystem, material: Material) -> dict[str, Any]:
    return {
        "slab": slab.model_dump(mode="json"),
        "material": material.model_dump(mode="json"),
    }


def _print_warnings(warnings: Sequence[str], stream: Any = None) -> None:
    stream = stream or sys.stdout
    if not warnings:
        return
    print(f"\nWarnings ({len(warnings)}):", file=stream)
    for w in warnings[:10]:
        print(f"  - {w}", file=stream)
    if len(warnings) > 10:
        print(f"  ... and {len(warnings) - 10} more", file=stream)


def _emit(args: Any, text: str, what: str, warnings: Sequence[str] = ()) -> int:
    from .report.emit import write_text

    if args.out is not None:
        path = write_text(args.out, text)
        print(f"✓ {what} written: {path}")
        _print_warnings(warnings)
    else:
        sys.stdout.write(text)
        _print_warnings(warnings, stream=sys.stderr)
    return EXIT_OK


def _run(handler: Callable[[Any], int], args: Any) -> int:
    """Run a handler, mapping failures to exit codes."""
    from pydantic import ValidationError

    try:
        return handler(args)
    except (QuadratureError, DivergenceError, ResolutionError, StepSizeError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except (ConfigError, DomainError, ValidationError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE


# --- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="magnoise",
        description="Thermal magnetic noise, spin relaxation and entanglement near slabs.",
    )
    parser.add_argument(
        "--version", "-v", action="version", version=f"magnoise {__version__}"
    )
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default="WARNING",
        help="Library log level (survey and sweep progress at INFO)",
    )
    parser.add_argument(
        "--convention",
        choices=CONVENTIONS,
        default="one-sided",
        help="Spectral density convention for spectrum output",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p_gamma = sub.add_parser("gamma", help="Dissipation coefficient Gamma at one frequency")
    _add_slab_args(p_gamma)
    p_gamma.add_argument("--f", type=_quantity("frequency"), default=0.0, help="Frequency, Hz")
    p_gamma.add_argument(
        "--method",
        choices=["quadrature", "interpolated", "asymptotic"],
        default="quadrature",
        help="How to evaluate Gamma",
    )
    _add_output_args(p_gamma)

    p_spec = sub.add_parser("spectrum", help="Lab-frame field noise over frequency")
    _add_slab_args(p_spec)
    freq = p_spec.add_mutually_exclusive_group()
    freq.add_argument("--f", type=_quantity("frequency"), default=0.0, help="Frequency, Hz")
    freq.add_argument("--f-grid", type=_grid("frequency"), help="Log grid fmin,fmax,count")
    p_spec.add_argument("--temperature", type=_quantity("temperature"), default=0.0)
    # also accepted after the subcommand; the global value is the default
    p_spec.add_argument("--convention", choices=CONVENTIONS, default=argparse.SUPPRESS)
    p_spec.add_argument("--method", choices=["quadrature", "interpolated"], default="quadrature")
    _add_output_args(p_spec)

    p_relax = sub.add_parser("relax", help="T1, T2 (and T1rho) for a spin near a slab")
    _add_slab_args(p_relax)
    _add_spin_args(p_relax)
    p_relax.add_argument("--temperature", type=_quantity("temperature"), default=0.0)
    p_relax.add_argument("--B1", type=_quantity("field"), help="Spin-lock field, T")
    p_relax.add_argument("--rf-axis", type=_vector, default=(1.0, 0.0, 0.0), help="B1 axis")
    _add_output_args(p_relax)

    p_ent = sub.add_parser("entangle", help="Zero-temperature entanglement probability")
    p_ent.add_argument("--ohmic", action="store_true", help="Ohmic oscillator estimate")
    p_ent.add_argument("--q", type=float, help="Oscillator quality factor (with --ohmic)")
    p_ent.add_argument("--wc-over-w0", type=float, help="Cutoff ratio (with --ohmic)")
    p_ent.add_argument("--d", type=_quantity("length"))
    p_ent.add_argument("--t", type=_quantity("length"))
    p_ent.add_argument("--sigma", type=_quantity("conductivity"))
    p_ent.add_argument("--phi", type=_quantity("angle"), default=0.0)
    p_ent.add_argument("--K", type=float, default=1.0)
    p_ent.add_argument("--K-imag", type=float, default=0.0)
    p_ent.add_argument("--london-depth", type=_quantity("length"))
    p_ent.add_argument("--normal", type=_vector, default=(0.0, 0.0, 1.0))
    p_ent.add_argument("--two-slab", action="store_true")
    p_ent.add_argument("--B0", type=_quantity("field"), help="Static field, T")
    p_ent.add_argument("--gamma", type=_quantity("gyromagnetic"), default=None)
    p_ent.add_argument("--theta", type=_quantity("angle"), default=0.0)
    p_ent.add_argument("--cutoff", type=_quantity("frequency"), help="Hard cutoff of Gamma, Hz")
    p_ent.add_argument("--method", choices=["interpolated", "quadrature"], default="interpolated")
    p_ent.add_argument("--sweep", type=_grid("frequency"), help="Sweep f0 over fmin,fmax,count")
    _add_output_args(p_ent)

    p_field = sub.add_parser("fieldmap", help="E and B of an oscillating dipole near one slab")
    _add_slab_args(p_field, two_slab=False)
    p_field.add_argument("--f", type=_quantity("frequency"), required=True, help="Frequency, Hz")
    p_field.add_argument("--dipole", type=_vector, default=(0.0, 0.0, 1.0), help="Moment, A m^2")
    p_field.add_argument("--x", type=_grid("length"), required=True, help="xmin,xmax,count")
    p_field.add_argument("--z", type=_grid("length"), required=True, help="zmin,zmax,count")
    p_field.add_argument("--y", type=_quantity("length"), default=0.0)
    _add_output_args(p_field)

    p_survey = sub.add_parser("survey", help="Closed-form accuracy over a design grid")
    p_survey.add_argument("--preset", default="full", help="full or smoke")
    p_survey.add_argument("--mode", choices=["interpolation", "two-slab"], default="interpolation")
    p_survey.add_argument("--workers", type=int, default=None, help="Worker processes")
    _add_output_args(p_survey)

    p_oracle = sub.add_parser("bath-oracle", help="Flat-Gamma entanglement three ways")
    p_oracle.add_argument("--bins", type=int, default=512)
    p_oracle.add_argument("--w0-over-wc", type=float, default=0.01)
    p_oracle.add_argument("--gamma-value", type=float, default=1e-3)
    _add_output_args(p_oracle)

    for name, help_text in (
        ("atom-trap", "Two-plate atom trap field noise and EDM noise"),
        ("mrfm", "MRFM tip relaxation with a conductivity sweep"),
        ("kane", "Donor-qubit gate noise with hyperfine amplification"),
    ):
        p_scn = sub.add_parser(name, help=help_text)
        p_scn.add_argument("--config", type=Path, help="key = value config file")
        p_scn.add_argument(
            "--set",
            type=_assignment,
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="Override one parameter (wins over --config)",
        )
        p_scn.add_argument("--sweep-csv", type=Path, help="Also write the sweep table here")
        p_scn.add_argument(
            "--print-config", action="store_true", help="Print the default config and exit"
        )
        _add_output_args(p_scn)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(name)s %(levelname)s: %(message)s")

    handlers: dict[str, Callable[[Any], int]] = {
        "gamma": _cmd_gamma,
        "spectrum": _cmd_spectrum,
        "relax": _cmd_relax,
        "entangle": _cmd_entangle,
        "fieldmap": _cmd_fieldmap,
        "survey": _cmd_survey,
        "bath-oracle": _cmd_bath_oracle,
        "atom-trap": _cmd_scenario,
        "mrfm": _cmd_scenario,
        "kane": _cmd_scenario,
    }
    handler = handlers.get(args.cmd)
    if handler is None:
        parser.print_help()
        return EXIT_USAGE
    return _run(handler, args)


# --- handlers ---------------------------------------------------------------------


def _gamma_kernel(slab: SlabSystem, material: Material, omega: float, method: str) -> Any:
    from .kernel import gamma_asymptotic, gamma_at, gamma_interpolated

    if method == "interpolated":
        return gamma_interpolated(slab, material, omega)
    if method == "asymptotic":
        return gamma_asymptotic(slab, material, omega)
    return gamma_at(slab, material, omega)


def _cmd_gamma(args: Any) -> int:
    from .report.emit import envelope, to_csv, to_json

    slab, material = _slab(args), _material(args)
    omega = TWO_PI * args.f
    kernel = _gamma_kernel(slab, material, omega, args.method)
    if args.format == "csv":
        row = {
            "f_Hz": args.f,
            "omega_rad_per_s": kernel.omega,
            "gamma": kernel.gamma_scalar,
            "method": kernel.method,
            "regime": kernel.regime,
            "abserr": kernel.abserr,
        }
        text = to_csv([row])
    else:
        inputs = {**_slab_inputs(slab, material), "f_Hz": args.f, "method": args.method}
        text = to_json(envelope("gamma", inputs, kernel, kernel.warnings))
    return _emit(args, text, "Gamma", kernel.warnings)


def _cmd_spectrum(args: Any) -> int:
    from .noise import amplitude_density, convention_convert, lab_spectral_density
    from .report.emit import envelope, to_csv, to_json

    slab, material = _slab(args), _material(args)
    freqs = _log_grid(*args.f_grid) if args.f_grid else [args.f]
    method = "interpolated" if args.method == "interpolated" else "quadrature"
    rows, spectra, warnings = [], [], []
    for f in freqs:
        omega = TWO_PI * f
        kernel = _gamma_kernel(slab, material, omega, method)
        spectrum = convention_convert(
            lab_spectral_density(kernel, omega=omega, temperature=args.temperature),
            args.convention,
        )
        spectra.append(spectrum)
        warnings.extend(kernel.warnings)
        rows.append(
            {
                "f_Hz": f,
                "gamma": kernel.gamma_scalar,
                "S_nn_T2_per_Hz": spectrum.component(slab.n_hat),
                "S_trace_T2_per_Hz": spectrum.trace(),
                "B_nn_T_per_sqrtHz": amplitude_density(spectrum, slab.n_hat),
            }
        )
    warnings = list(dict.fromkeys(warnings))
    if args.format == "csv":
        text = to_csv(rows)
    else:
        inputs = {
            **_slab_inputs(slab, material),
            "f_Hz": freqs,
            "temperature_K": args.temperature,
            "convention": args.convention,
            "method": method,
        }
        text = to_json(envelope("spectrum", inputs, {"rows": rows, "spectra": spectra}, warnings))
    return _emit(args, text, "Spectrum", warnings)


def _cmd_relax(args: Any) -> int:
    from .core.model import RFField, SpinContext
    from .kernel import gamma_at
    from .noise import relaxation_times
    from .report.emit import envelope, to_csv, to_json

    slab, material = _slab(args), _material(args)
    rf = None if args.B1 is None else RFField(B1=args.B1, b1_hat=args.rf_axis)
    ctx = SpinContext(
        gamma=TWO_PI * args.gamma,
        B0=args.B0,
        b_hat=_spin_axis(args, slab),
        temperature=args.temperature,
        rf=rf,
    )
    k0 = gamma_at(slab, material, 0.0)
    kw = gamma_at(slab, material, ctx.omega0)
    k1 = None if rf is None else gamma_at(slab, material, ctx.omega1)
    times = relaxation_times(ctx, k0, kw, k1)
    summary = times.summary()
    if args.format == "csv":
        text = to_csv([summary])
    else:
        inputs = {**_slab_inputs(slab, material), "spin": ctx.model_dump(mode="json")}
        text = to_json(envelope("relax", inputs, summary, times.warnings))
    code = _emit(args, text, "Relaxation times", times.warnings)
    if args.out is not None:
        print(f"  1/T1: {times.rate1:.6g} s^-1")
        print(f"  1/T2: {times.rate2:.6g} s^-1")
    return code


def _cmd_entangle(args: Any) -> int:
    from .report.emit import envelope, to_csv, to_json

    if args.ohmic:
        return _entangle_ohmic(args)
    if args.d is None or args.t is None or (args.B0 is None and args.sweep is None):
        raise ConfigError("spin entanglement needs --d, --t and --B0 (or --sweep)")

    from .config import GAMMA_ELECTRON_HZ_PER_T
    from .quantum import gamma_callable, spin_entanglement

    slab, material = _slab(args), _material(args)
    gamma = TWO_PI * (args.gamma if args.gamma is not None else GAMMA_ELECTRON_HZ_PER_T)
    axis = _spin_axis(args, slab)
    cutoff = None if args.cutoff is None else TWO_PI * args.cutoff
    kernel = gamma_callable(slab, material, args.method, cutoff=cutoff)
    if args.sweep is not None:
        omegas = [TWO_PI * f for f in _log_grid(*args.sweep)]
    else:
        omegas = [gamma * args.B0]

    rows, warnings = [], []
    for w0 in omegas:
        result = spin_entanglement(axis, w0, gamma, kernel, n_hat=slab.n_hat, geometry="slab")
        warnings.extend(result.warnings)
        rows.append({"f0_Hz": w0 / TWO_PI, "E": result.E, "method": result.method})
    warnings = list(dict.fromkeys(warnings))
    if args.format == "csv":
        text = to_csv(rows)
    else:
        inputs = {
            **_slab_inputs(slab, material),
            "gamma_rad_per_s_T": gamma,
            "spin_axis": list(axis),
            "cutoff_rad_per_s": cutoff,
            "method": args.method,
        }
        text = to_json(envelope("entangle", inputs, {"rows": rows}, warnings))
    return _emit(args, text, "Entanglement", warnings)


def _entangle_ohmic(args: Any) -> int:
    from .quantum import ohmic_approx
    from .report.emit import envelope, to_csv, to_json

    if args.q is None or args.wc_over_w0 is None:
        raise ConfigError("--ohmic needs --q and --wc-over-w0")
    result = ohmic_approx(args.q, args.wc_over_w0, 1.0)
    if args.format == "csv":
        text = to_csv([{"Q": args.q, "wc_over_w0": args.wc_over_w0, "E": result.E}])
    else:
        inputs = {"Q": args.q, "wc_over_w0": args.wc_over_w0}
        text = to_json(envelope("entangle-ohmic", inputs, result, result.warnings))
    return _emit(args, text, "Entanglement", result.warnings)


def _cmd_fieldmap(args: Any) -> int:
    from .fields import reconstruct_fields
    from .report.emit import envelope, to_csv, to_json

    slab, material = _slab(args), _material(args)
    positions = [
        (x, args.y, z) for z in _lin_grid(*args.z) for x in _lin_grid(*args.x)
    ]
    samples = reconstruct_fields(slab, material, TWO_PI * args.f, args.dipole, positions)
    warnings = list(dict.fromkeys(w for s in samples for w in s.warnings))
    if args.format == "csv":
        rows = []
        for s in samples:
            row: dict[str, float] = dict(zip(("x_m", "y_m", "z_m"), s.position, strict=True))
            for name, vec in (("B", s.B), ("E", s.E)):
                for axis, comp in zip("xyz", vec, strict=True):
                    row[f"{name}{axis}_re"] = comp.real
                    row[f"{name}{axis}_im"] = comp.imag
            rows.append(row)
        text = to_csv(rows)
    else:
        inputs = {
            **_slab_inputs(slab, material),
            "f_Hz": args.f,
            "dipole": list(args.dipole),
        }
        text = to_json(envelope("fieldmap", inputs, {"samples": samples}, warnings))
    return _emit(args, text, "Field map", warnings)


SURVEY_COLUMNS = [
    "d",
    "t",
    "sigma_mag",
    "phi",
    "omega",
    "lam",
    "gamma_quad",
    "gamma_interp",
    "gamma_two_slab",
    "err_db",
    "regime",
    "error",
]


def _cmd_survey(args: Any) -> int:
    from .config import WORKERS
    from .kernel import preset_grid, survey_design_space
    from .report.emit import envelope, to_csv, to_json

    try:
        grid = preset_grid(args.preset, mode=args.mode)
    except ValueError as e:
        raise ConfigError(str(e), key="preset") from e
    workers = WORKERS if args.workers is None else args.workers
    report = survey_design_space(grid, workers=workers)
    if args.format == "csv":
        text = to_csv([p.model_dump() for p in report.points], SURVEY_COLUMNS)
    else:
        inputs = {"preset": args.preset, "grid": grid.model_dump(mode="json")}
        text = to_json(envelope("survey", inputs, report, report.warnings))
    code = _emit(args, text, "Survey", report.warnings)
    if report.max_db is not None and args.out is not None:
        print(f"  Points: {len(report.points)}")
        print(f"  dB range: [{report.min_db:.3f}, {report.max_db:.3f}]")
    return code


def _cmd_bath_oracle(args: Any) -> int:
    from .quantum import oracle_chain
    from .report.emit import envelope, to_csv, to_json

    report = oracle_chain(
        bins=args.bins, omega0=args.w0_over_wc, cutoff=1.0, gamma_value=args.gamma_value
    )
    if args.format == "csv":
        text = to_csv([report.model_dump(exclude={"warnings"})])
    else:
        inputs = {"bins": args.bins, "w0_over_wc": args.w0_over_wc, "gamma": args.gamma_value}
        text = to_json(envelope("bath-oracle", inputs, report, report.warnings))
    return _emit(args, text, "Oracle report", report.warnings)


def _cmd_scenario(args: Any) -> int:
    from .report import SCENARIO_DEFAULTS, SCENARIOS, load_config, render_config
    from .report.emit import write_text

    if args.print_config:
        sys.stdout.write(render_config(SCENARIO_DEFAULTS[args.cmd], title=f"{args.cmd} defaults"))
        return EXIT_OK
    entries = load_config(args.config) if args.config is not None else None
    report = SCENARIOS[args.cmd](file_entries=entries, overrides=dict(args.set))
    text = report.outputs_csv() if args.format == "csv" else report.to_json()
    if args.sweep_csv is not None:
        if not report.sweep:
            raise ConfigError(f"scenario {args.cmd} has no sweep")
        write_text(args.sweep_csv, report.sweep_csv())
    code = _emit(args, text, f"Scenario {args.cmd}", report.warnings)
    if args.out is not None:
        for prov in report.provenance:
            value = f"{prov.computed_value:.4g} {prov.unit}".strip()
            print(f"  {prov.name}: {value} (quoted {prov.quoted_value:g})")
    return code


if __name__ == "__main__":
    app()

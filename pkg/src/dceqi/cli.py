"""Command-line front end: single-point reports, parameter sweeps, presets.

Output is CSV with a fixed column schema.  Rows are emitted in grid order
and every number is formatted with Python's shortest round-trip float
representation, so repeated runs produce byte-identical files.

Exit codes: 0 success, 1 invalid input or usage, 2 numerical failure.
"""

import argparse
import math
import sys
from dataclasses import dataclass, replace
from typing import Iterable, Iterator

from .correlations import (
    CorrelationReport,
    DegeneratePureStateError,
    NonPositiveDeterminantError,
    ReportFlag,
    UnphysicalStateError,
    critical_temperature,
    full_report,
    report_from_state,
)
from .dce import (
    DceParams,
    NonPerturbativeError,
    ThermalOccupations,
    amplitude_for_small_parameter,
    occupations,
    small_parameter,
    temperature_for_occupation,
    thermal_occupation,
)
from .gaussian import ComplexSpectrumError

CSV_HEADER = (
    "epsilon,temperature_K,n_th,f,steering_ab,steering_ba,steering_pert,"
    "ip_a,ip_b,ip_pert,log_neg,physicality_deficit,flags"
)

AXIS_CHOICES = ("epsilon", "temperature", "n_th", "f")
FIGURE_CHOICES = ("fig1", "fig2", "fig3")

_FLAG_ORDER = (ReportFlag.EXACT_SKIPPED_UNPHYSICAL, ReportFlag.PERTURBATIVE_WARNING)

# Default experimental scenario: 10 GHz drive, 0.5 mm effective length,
# v = 1.2e8 m/s, eps = 0.15, 50 mK, zero detuning.  Built through the same
# unit conversions as the CLI flags so defaults match flag values exactly.
STANDARD_PARAMS = DceParams(
    speed=1.2e8,
    drive_angular_freq=2.0 * math.pi * 1.0e9 * 10.0,
    effective_length=1.0e-3 * 0.5,
    amplitude=0.15,
    detuning=2.0 * math.pi * 1.0e9 * 0.0,
    temperature=1.0e-3 * 50.0,
)


class UsageError(Exception):
    """Invalid flags, config entries, or parameter domains (exit code 1)."""


@dataclass(frozen=True)
class SweepAxis:
    """One swept variable: inclusive uniform grid from start to stop."""

    var: str
    start: float
    stop: float
    steps: int

    def __post_init__(self):
        if self.var not in AXIS_CHOICES:
            raise ValueError(f"axis variable must be one of {AXIS_CHOICES}, got {self.var!r}")
        if self.steps < 2:
            raise ValueError("steps must be at least 2")
        if not self.start < self.stop:
            raise ValueError("sweep start must be below stop")

    def grid(self) -> list[float]:
        span = self.stop - self.start
        last = self.steps - 1
        return [self.start + k * span / last for k in range(last)] + [self.stop]


@dataclass(frozen=True)
class SweepSpec:
    """A 1-D or 2-D parameter sweep over a fixed base scenario."""

    axis: SweepAxis
    fixed: DceParams
    second_axis: SweepAxis | None = None
    output: str | None = None  # None writes to stdout

    def __post_init__(self):
        if self.second_axis is not None and self.second_axis.var == self.axis.var:
            raise ValueError("second axis must differ from the first")


@dataclass(frozen=True)
class CsvRow:
    """One evaluated grid point; None fields are emitted empty."""

    epsilon: float | None
    temperature_K: float | None
    n_th: float
    f: float
    steering_ab: float
    steering_ba: float
    steering_pert: float
    ip_a: float
    ip_b: float
    ip_pert: float
    log_neg: float
    physicality_deficit: float
    flags: tuple[str, ...]

    def format(self) -> str:
        cells = [
            _fmt(self.epsilon),
            _fmt(self.temperature_K),
            _fmt(self.n_th),
            _fmt(self.f),
            _fmt(self.steering_ab),
            _fmt(self.steering_ba),
            _fmt(self.steering_pert),
            _fmt(self.ip_a),
            _fmt(self.ip_b),
            _fmt(self.ip_pert),
            _fmt(self.log_neg),
            _fmt(self.physicality_deficit),
            ";".join(self.flags),
        ]
        return ",".join(cells)


def _fmt(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def _flag_tokens(report: CorrelationReport) -> tuple[str, ...]:
    return tuple(flag.value for flag in _FLAG_ORDER if flag in report.flags)


def _row(
    epsilon: float | None,
    temperature: float | None,
    n_th: float,
    f: float,
    report: CorrelationReport,
) -> CsvRow:
    return CsvRow(
        epsilon=epsilon,
        temperature_K=temperature,
        n_th=n_th,
        f=f,
        steering_ab=report.steering_a_to_b,
        steering_ba=report.steering_b_to_a,
        steering_pert=report.steering_perturbative,
        ip_a=report.ip_probe_a,
        ip_b=report.ip_probe_b,
        ip_pert=report.ip_perturbative,
        log_neg=report.log_negativity,
        physicality_deficit=report.physicality_deficit,
        flags=_flag_tokens(report),
    )


def run_point(p: DceParams) -> CsvRow:
    """Evaluate one parameter point into a CSV row."""
    return _row(p.amplitude, p.temperature, occupations(p).mean, small_parameter(p), full_report(p))


def _evaluate(assignments: dict[str, float], fixed: DceParams) -> CsvRow:
    """Evaluate one grid point.

    epsilon/temperature assignments go through the physical parameters;
    n_th/f assignments override the corresponding derived quantity directly,
    and the conjugate column (temperature resp. epsilon) is back-solved from
    the fixed scenario where possible, else left empty.
    """
    params = fixed
    if "epsilon" in assignments:
        params = replace(params, amplitude=assignments["epsilon"])
    if "temperature" in assignments:
        params = replace(params, temperature=assignments["temperature"])

    f_override = assignments.get("f")
    n_override = assignments.get("n_th")
    f = small_parameter(params) if f_override is None else f_override
    if n_override is None:
        occ = occupations(params)
    else:
        occ = ThermalOccupations(n_minus=n_override, n_plus=n_override)

    if f_override is None:
        epsilon_col = params.amplitude
    else:
        backsolved = amplitude_for_small_parameter(params, f_override)
        epsilon_col = backsolved if backsolved < 1.0 else None
    if n_override is None:
        temperature_col = params.temperature
    else:
        temperature_col = temperature_for_occupation(
            params.drive_angular_freq / 2.0, n_override
        )

    return _row(epsilon_col, temperature_col, occ.mean, f, report_from_state(f, occ))


def sweep_rows(spec: SweepSpec) -> Iterator[CsvRow]:
    """Rows of a sweep in grid order (row-major for 2-D grids)."""
    if spec.second_axis is None:
        for value in spec.axis.grid():
            yield _evaluate({spec.axis.var: value}, spec.fixed)
        return
    inner = spec.second_axis.grid()
    for outer_value in spec.axis.grid():
        for inner_value in inner:
            yield _evaluate(
                {spec.axis.var: outer_value, spec.second_axis.var: inner_value},
                spec.fixed,
            )


def run_sweep(spec: SweepSpec) -> None:
    """Evaluate a sweep and write its CSV to the configured destination."""
    write_csv(sweep_rows(spec), spec.output)


def write_csv(rows: Iterable[CsvRow], destination: str | None) -> None:
    lines = [CSV_HEADER]
    lines.extend(row.format() for row in rows)
    text = "\n".join(lines) + "\n"
    _emit(text, destination)


def _emit(text: str, destination: str | None) -> None:
    if destination is None or destination == "-":
        sys.stdout.write(text)
    else:
        with open(destination, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def figure_spec(kind: str, fixed: DceParams = STANDARD_PARAMS, output: str | None = None) -> SweepSpec:
    """Bundled sweep presets.

    fig1: drive-amplitude sweep eps in [0, 0.25], 251 points, at the fixed
          scenario's temperature.
    fig2: thermal sweep n_th in [0, 0.02], 251 points, at the fixed
          scenario's amplitude (temperature column back-solved).
    fig3: 101x101 grid, n_th spanning temperatures from 0 to 35 mK crossed
          with f in [0, 0.05].
    """
    if kind == "fig1":
        return SweepSpec(SweepAxis("epsilon", 0.0, 0.25, 251), fixed, output=output)
    if kind == "fig2":
        return SweepSpec(SweepAxis("n_th", 0.0, 0.02, 251), fixed, output=output)
    if kind == "fig3":
        n_top = thermal_occupation(fixed.drive_angular_freq / 2.0, 0.035)
        return SweepSpec(
            SweepAxis("n_th", 0.0, n_top, 101),
            fixed,
            second_axis=SweepAxis("f", 0.0, 0.05, 101),
            output=output,
        )
    raise UsageError(f"unknown figure preset {kind!r}")


# --- argument and config handling -------------------------------------------

# config key (long flag name without dashes) -> (namespace dest, converter, default)
_PARAM_SPECS = {
    "epsilon": ("epsilon", float, 0.15),
    "temperaturemK": ("temperature_mk", float, 50.0),
    "driveGHz": ("drive_ghz", float, 10.0),
    "leffmm": ("leff_mm", float, 0.5),
    "speed": ("speed", float, 1.2e8),
    "detuningGHz": ("detuning_ghz", float, 0.0),
    "out": ("out", str, None),
    "steps": ("steps", int, None),
    "from": ("start", float, None),
    "to": ("stop", float, None),
    "var": ("var", str, None),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--epsilon", type=float, help="normalized drive amplitude, in [0, 1)")
    common.add_argument("--temperature-mK", dest="temperature_mk", type=float,
                        help="temperature in millikelvin")
    common.add_argument("--drive-GHz", dest="drive_ghz", type=float,
                        help="drive frequency w_d/2pi in GHz")
    common.add_argument("--leff-mm", dest="leff_mm", type=float,
                        help="effective length in mm")
    common.add_argument("--speed", type=float, help="waveguide speed of light in m/s")
    common.add_argument("--detuning-GHz", dest="detuning_ghz", type=float,
                        help="mode-pair detuning dw/2pi in GHz")
    common.add_argument("--config", help="config file with 'key = value' lines")
    common.add_argument("--out", help="output path (default: stdout)")

    parser = _Parser(prog="dceqi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("state", parents=[common],
                   help="report every correlation measure at one parameter point")

    sweep = sub.add_parser("sweep", parents=[common], help="sweep one variable, emit CSV")
    sweep.add_argument("--var", choices=AXIS_CHOICES, help="swept variable")
    sweep.add_argument("--from", dest="start", type=float,
                       help="sweep start (axis units: kelvin for temperature)")
    sweep.add_argument("--to", dest="stop", type=float, help="sweep stop (axis units)")
    sweep.add_argument("--steps", type=int, help="number of grid points (>= 2)")

    figure = sub.add_parser("figure", parents=[common], help="run a bundled sweep preset")
    figure.add_argument("kind", choices=FIGURE_CHOICES)

    critical = sub.add_parser("critical", parents=[common],
                              help="critical temperature where a measure vanishes")
    critical.add_argument("measure", choices=("steering", "entanglement"))

    return parser


def parse_config_file(path: str) -> dict[str, str]:
    """Read 'key = value' lines; '#' starts a comment; unknown keys are errors."""
    entries: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw_lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc}") from exc
    for lineno, raw in enumerate(raw_lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _PARAM_SPECS:
            raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
        entries[key] = value.strip()
    return entries


def _merge(ns: argparse.Namespace, config: dict[str, str]) -> dict[str, object]:
    """Resolve each setting: explicit flag > config entry > built-in default."""
    values: dict[str, object] = {}
    for key, (dest, converter, default) in _PARAM_SPECS.items():
        cli_value = getattr(ns, dest, None)
        if cli_value is not None:
            values[dest] = cli_value
        elif key in config:
            try:
                values[dest] = converter(config[key])
            except ValueError as exc:
                raise UsageError(f"config key {key!r}: invalid value {config[key]!r}") from exc
        else:
            values[dest] = default
    var = values.get("var")
    if var is not None and var not in AXIS_CHOICES:
        raise UsageError(f"config key 'var': must be one of {AXIS_CHOICES}, got {var!r}")
    return values


def _params_from(values: dict[str, object]) -> DceParams:
    try:
        return DceParams(
            speed=values["speed"],
            drive_angular_freq=2.0 * math.pi * 1.0e9 * values["drive_ghz"],
            effective_length=1.0e-3 * values["leff_mm"],
            amplitude=values["epsilon"],
            detuning=2.0 * math.pi * 1.0e9 * values["detuning_ghz"],
            temperature=1.0e-3 * values["temperature_mk"],
        )
    except NonPerturbativeError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _require(values: dict[str, object], dest: str, flag: str) -> object:
    if values[dest] is None:
        raise UsageError(f"{flag} is required for this command")
    return values[dest]


def parse_config(argv: list[str] | None = None):
    """Parse flags plus optional config file into a runnable request.

    Returns (command, payload): ('state', params), ('sweep', SweepSpec),
    ('figure', SweepSpec), or ('critical', (measure, params, out)).
    """
    ns = _build_parser().parse_args(argv)
    config = parse_config_file(ns.config) if ns.config else {}
    values = _merge(ns, config)
    params = _params_from(values)
    out = values["out"]

    if ns.command == "state":
        return "state", (params, out)
    if ns.command == "sweep":
        axis = SweepAxis(
            var=_require(values, "var", "--var"),
            start=_require(values, "start", "--from"),
            stop=_require(values, "stop", "--to"),
            steps=_require(values, "steps", "--steps"),
        )
        return "sweep", SweepSpec(axis, params, output=out)
    if ns.command == "figure":
        return "figure", figure_spec(ns.kind, fixed=params, output=out)
    if ns.command == "critical":
        return "critical", (ns.measure, params, out)
    raise UsageError(f"unknown command {ns.command!r}")


def main(argv: list[str] | None = None) -> int:
    try:
        command, payload = parse_config(argv)
        if command == "state":
            params, out = payload
            write_csv([run_point(params)], out)
        elif command in ("sweep", "figure"):
            run_sweep(payload)
        elif command == "critical":
            measure, params, out = payload
            value = critical_temperature(params, measure)
            _emit(f"{measure} {'none' if value is None else repr(value)}\n", out)
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (
        NonPerturbativeError,
        ComplexSpectrumError,
        NonPositiveDeterminantError,
        UnphysicalStateError,
        DegeneratePureStateError,
    ) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())

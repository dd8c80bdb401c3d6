"""Command-line front end: spectra, time series, sweeps and self-verification.

Emits flat CSV or JSON artifacts only; plotting is left to external tools.
Identical configurations produce byte-identical outputs, and floating-point
values are serialized round-trip exactly.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, replace
from pathlib import Path

from .algebra import ModelParams, reflection_eigenvalue
from .dynamics import TimeGrid, TimeSeries, evaluate_series
from .spectrum import energy
from .states import TruncationError, TruncationPolicy, build_state
from .verify import verification_report

__all__ = ["ExperimentConfig", "build_parser", "main"]

DEFAULT_CHANNELS = ("quadrature", "fidelity", "variance")
SWEEP_KEYS = {"mu": "mu", "omega": "omega", "lambda": "lam", "alpha": "alpha"}


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: physics parameters, grid, truncation and output choice."""

    params: ModelParams
    grid: TimeGrid
    policy: TruncationPolicy
    channels: tuple[str, ...] = DEFAULT_CHANNELS
    output_format: str = "csv"
    output_path: str | None = None

    def __post_init__(self):
        if not self.channels:
            raise ValueError("channel list must not be empty")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.output_format!r}")

    def to_meta(self) -> dict:
        return {
            "mu": self.params.mu,
            "omega": self.params.omega,
            "lambda": self.params.lam,
            "alpha": self.params.alpha,
            "t_start": self.grid.t_start,
            "t_end": self.grid.t_end,
            "samples": self.grid.n_samples,
            "tail_tol": self.policy.tail_tol,
            "n_max_hard": self.policy.n_max_hard,
            "channels": list(self.channels),
            "format": self.output_format,
        }

    @classmethod
    def from_meta(cls, meta: dict) -> "ExperimentConfig":
        return cls(
            params=ModelParams(
                mu=meta["mu"], omega=meta["omega"], lam=meta["lambda"], alpha=meta["alpha"]
            ),
            grid=TimeGrid(meta["t_start"], meta["t_end"], meta["samples"]),
            policy=TruncationPolicy(meta["tail_tol"], meta["n_max_hard"]),
            channels=tuple(meta["channels"]),
            output_format=meta["format"],
        )


def _fmt(x: float) -> str:
    # 17 significant digits: round-trip exact for IEEE doubles.
    return format(float(x), ".17g")


def render_series_csv(series: TimeSeries, channels) -> str:
    lines = ["t," + ",".join(channels)]
    for i, t in enumerate(series.times):
        row = [_fmt(t)] + [_fmt(series.channels[ch][i]) for ch in channels]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def render_series_json(series: TimeSeries, config: ExperimentConfig) -> str:
    data = {"t": [float(t) for t in series.times]}
    for ch in config.channels:
        data[ch] = [float(v) for v in series.channels[ch]]
    return json.dumps({"meta": config.to_meta(), "data": data}, indent=2) + "\n"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _params_from_args(args) -> ModelParams:
    return ModelParams(mu=args.mu, omega=args.omega, lam=args.lam, alpha=args.alpha)


def _grid_from_args(args) -> TimeGrid:
    return TimeGrid(t_start=args.t_start, t_end=args.t_end, n_samples=args.samples)


def _policy_from_args(args) -> TruncationPolicy:
    return TruncationPolicy(tail_tol=args.tail_tol)


def _parse_channels(raw: str) -> tuple[str, ...]:
    names = tuple(name.strip() for name in raw.split(",") if name.strip())
    if not names:
        raise ValueError("channel list must not be empty")
    return names


def cmd_spectrum(args) -> int:
    params = _params_from_args(args)
    if args.n_max < 0:
        raise ValueError(f"n-max must be non-negative, got {args.n_max}")
    levels = []
    previous = None
    for n in range(args.n_max + 1):
        e_n = energy(n, params)
        gap = None if previous is None else e_n - previous
        levels.append((n, reflection_eigenvalue(n), e_n, gap))
        previous = e_n
    if args.format == "csv":
        lines = ["n,parity,energy,gap"]
        for n, par, e_n, gap in levels:
            lines.append(f"{n},{par},{_fmt(e_n)},{'' if gap is None else _fmt(gap)}")
        body = "\n".join(lines) + "\n"
    else:
        doc = {
            "meta": {
                "mu": params.mu,
                "omega": params.omega,
                "lambda": params.lam,
                "n_max": args.n_max,
            },
            "levels": [
                {"n": n, "parity": par, "energy": e_n, "gap": gap} for n, par, e_n, gap in levels
            ],
        }
        body = json.dumps(doc, indent=2) + "\n"
    _write_text(args.out, body)
    return 0


def _render_series(config: ExperimentConfig) -> str:
    state = build_state(config.params, config.policy)
    series = evaluate_series(state, config.grid, config.channels)
    if config.output_format == "csv":
        return render_series_csv(series, config.channels)
    return render_series_json(series, config)


def cmd_evolve(args) -> int:
    config = ExperimentConfig(
        params=_params_from_args(args),
        grid=_grid_from_args(args),
        policy=_policy_from_args(args),
        channels=_parse_channels(args.channels),
        output_format=args.format,
        output_path=args.out,
    )
    _write_text(config.output_path, _render_series(config))
    return 0


def cmd_verify(args) -> int:
    report = verification_report(
        _params_from_args(args),
        grid=_grid_from_args(args),
        policy=_policy_from_args(args),
        dim=args.dim,
        corrupt_energy=args.corrupt_energy,
    )
    _write_text(args.out, json.dumps(report, indent=2) + "\n")
    if not report["pass"]:
        failing = [c["name"] for c in report["checks"] if not c["pass"]]
        print("failed checks: " + ", ".join(failing), file=sys.stderr)
        return 1
    return 0


def _parse_sweep(tokens: list[str]) -> tuple[str, list[str], list[float]]:
    if len(tokens) != 1:
        raise ValueError("sweep over exactly one parameter; pass --sweep once")
    raw = tokens[0]
    key, sep, rest = raw.partition("=")
    key = key.strip()
    if not sep or key not in SWEEP_KEYS:
        raise ValueError(f"sweep must look like key=v1,v2,... with key in {sorted(SWEEP_KEYS)}, got {raw!r}")
    value_tokens = [tok.strip() for tok in rest.split(",") if tok.strip()]
    if not value_tokens:
        raise ValueError(f"sweep {raw!r} lists no values")
    try:
        values = [float(tok) for tok in value_tokens]
    except ValueError as exc:
        raise ValueError(f"sweep value not a number in {raw!r}: {exc}") from None
    return key, value_tokens, values


def cmd_sweep(args) -> int:
    key, value_tokens, values = _parse_sweep(args.sweep)
    base = ExperimentConfig(
        params=_params_from_args(args),
        grid=_grid_from_args(args),
        policy=_policy_from_args(args),
        channels=_parse_channels(args.channels),
        output_format=args.format,
    )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    files = []
    for token, value in zip(value_tokens, values):
        config = replace(base, params=replace(base.params, **{SWEEP_KEYS[key]: value}))
        name = f"{key}_{token}.{base.output_format}"
        (out_dir / name).write_text(_render_series(config))
        files.append(name)
    index = {
        "sweep_parameter": key,
        "values": values,
        "files": files,
        "meta": base.to_meta(),
    }
    # index written last, after every per-value file is complete
    (out_dir / "index.json").write_text(json.dumps(index, indent=2) + "\n")
    return 0


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mu", type=float, default=0.0, help="Dunkl deformation parameter (>= 0)")
    p.add_argument("--omega", type=float, default=20.0, help="field frequency (> 0)")
    p.add_argument("--lambda", dest="lam", type=float, default=1.0, help="Kerr constant (>= 0)")
    p.add_argument("--alpha", type=float, default=2.0, help="coherent amplitude (>= 0)")


def _add_grid_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--t-start", type=float, default=0.0, help="grid start time")
    p.add_argument("--t-end", type=float, default=2.0 * math.pi, help="grid end time")
    p.add_argument("--samples", type=int, default=2048, help="number of grid samples")


def _add_policy_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tail-tol", type=float, default=1e-16, help="relative coefficient tail tolerance")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dunkl-kerr",
        description="Dunkl-deformed Kerr oscillator: exact spectra, coherent-state dynamics and self-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="emit energy levels and neighbor gaps")
    _add_param_flags(p_spec)
    p_spec.add_argument("--n-max", type=int, default=16, help="highest level to emit")
    _add_output_flags(p_spec)
    p_spec.set_defaults(func=cmd_spectrum)

    p_evo = sub.add_parser("evolve", help="emit observable time series")
    _add_param_flags(p_evo)
    _add_grid_flags(p_evo)
    _add_policy_flags(p_evo)
    p_evo.add_argument(
        "--channels",
        default=",".join(DEFAULT_CHANNELS),
        help="comma-separated subset of: quadrature, fidelity, variance, k0_const",
    )
    _add_output_flags(p_evo)
    p_evo.set_defaults(func=cmd_evolve)

    p_ver = sub.add_parser("verify", help="run series-vs-matrix consistency checks")
    _add_param_flags(p_ver)
    _add_grid_flags(p_ver)
    _add_policy_flags(p_ver)
    p_ver.add_argument("--dim", type=int, default=32, help="matrix dimension for algebra checks")
    p_ver.add_argument("--corrupt-energy", action="store_true", help=argparse.SUPPRESS)
    p_ver.add_argument("--out", default=None, help="report path (default: stdout)")
    p_ver.set_defaults(func=cmd_verify)

    p_swp = sub.add_parser("sweep", help="evolve over a list of values of one parameter")
    _add_param_flags(p_swp)
    _add_grid_flags(p_swp)
    _add_policy_flags(p_swp)
    p_swp.add_argument(
        "--channels",
        default=",".join(DEFAULT_CHANNELS),
        help="comma-separated subset of: quadrature, fidelity, variance, k0_const",
    )
    p_swp.add_argument(
        "--sweep",
        action="append",
        required=True,
        metavar="KEY=V1,V2,...",
        help="parameter to sweep: one of mu, omega, lambda, alpha",
    )
    p_swp.add_argument("--format", choices=("csv", "json"), default="csv", help="per-value file format")
    p_swp.add_argument("--out", required=True, help="output directory")
    p_swp.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TruncationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point for the bounds sweep.

Exit codes: 0 success, 1 configuration/validation error, 2 numerical
failure during evaluation.
"""
from __future__ import annotations

import argparse
import sys

from .bounds import DEFAULT_PAIR
from .decoherence import EnvironmentKind, EnvironmentSpec
from .qstate import BellDiagonalState, InvalidStateError
from .specfun import ConvergenceError, SpecialFunctionError
from .sweep import ConfigError, ExperimentConfig, PRESETS, emit, run_sweep, with_output


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sweep",
        description="Sweep entropic-uncertainty and key-rate bounds over time "
        "for a Bell-diagonal state whose memory qubit decoheres in an "
        "Ohmic-like environment.",
    )
    p.add_argument("--preset", choices=sorted(PRESETS), help="named scenario; other physics flags are ignored")
    p.add_argument("--env", choices=["fermionic", "bosonic"], help="environment kind")
    p.add_argument("--s", type=float, help="Ohmicity exponent (> 0)")
    p.add_argument("--coupling", type=float, help="system-environment coupling B")
    p.add_argument("--c1", type=float, help="initial correlation c1")
    p.add_argument("--c2", type=float, help="initial correlation c2")
    p.add_argument("--c3", type=float, help="initial correlation c3")
    p.add_argument("--gamma0", type=float, default=1.0, help="frequency cutoff (default 1)")
    p.add_argument("--nsc", type=float, default=1.0, help="bosonic dual degrees of freedom (default 1)")
    p.add_argument("--epsilon", type=float, default=1.0, help="bosonic UV length cutoff (default 1)")
    p.add_argument("--t-max", type=float, default=20.0, help="sweep end time in 1/gamma0 units (default 20)")
    p.add_argument("--steps", type=int, default=400, help="number of uniform time samples (default 400)")
    p.add_argument("--format", choices=["csv", "json"], default="csv", help="output format")
    p.add_argument("--out", default="-", help="output path, or - for stdout")
    return p


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    if args.preset:
        return with_output(PRESETS[args.preset], args.format, args.out)
    missing = [name for name in ("env", "s", "coupling", "c1", "c2", "c3") if getattr(args, name) is None]
    if missing:
        raise ConfigError(f"missing required flags (or use --preset): {', '.join('--' + m for m in missing)}")
    spec = EnvironmentSpec(
        kind=EnvironmentKind(args.env),
        s=args.s,
        coupling_b=args.coupling,
        gamma0=args.gamma0,
        n_sc=args.nsc,
        epsilon=args.epsilon,
    )
    return ExperimentConfig(
        environment=spec,
        initial_state=BellDiagonalState(args.c1, args.c2, args.c3),
        pair=DEFAULT_PAIR,
        t_max=args.t_max,
        steps=args.steps,
        output_format=args.format,
        output_path=args.out,
    )


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
    except (ConfigError, InvalidStateError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        samples = run_sweep(config)
        payload = emit(samples, config)
    except (ConvergenceError, SpecialFunctionError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    if config.output_path == "-":
        sys.stdout.buffer.write(payload)
    else:
        try:
            with open(config.output_path, "wb") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"error writing {config.output_path}: {exc}", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

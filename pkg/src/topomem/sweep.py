"""Time-sweep orchestration, presets, and CSV/JSON serialization.

``run_sweep`` evaluates the full set of bounds on a uniform time grid;
``emit`` serializes the result. The preset registry pins the six
environment scenarios ({fermionic, bosonic} x s in {0.5, 1, 2.5}) for
each of the two initial states studied.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np

from .bounds import DEFAULT_PAIR, BoundsSample, ObservablePair, bounds_at
from .decoherence import EnvironmentKind, EnvironmentSpec
from .qstate import BellDiagonalState

CSV_HEADER = ",".join(BoundsSample.FIELDS)


class ConfigError(ValueError):
    """Invalid experiment configuration; message names the offending field."""


@dataclass(frozen=True)
class ExperimentConfig:
    environment: EnvironmentSpec
    initial_state: BellDiagonalState
    pair: ObservablePair = DEFAULT_PAIR
    t_max: float = 20.0
    steps: int = 400
    output_format: str = "csv"
    output_path: str = "-"

    def __post_init__(self) -> None:
        if not (self.t_max > 0) or not math.isfinite(self.t_max):
            raise ConfigError(f"t_max: must be a positive finite real, got {self.t_max}")
        if self.steps < 2:
            raise ConfigError(f"steps: must be >= 2, got {self.steps}")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"output_format: expected 'csv' or 'json', got {self.output_format!r}")


def _preset_registry() -> dict[str, ExperimentConfig]:
    ohmicity = {"sub": 0.5, "ohmic": 1.0, "super": 2.5}
    kinds = {"f": EnvironmentKind.FERMIONIC, "b": EnvironmentKind.BOSONIC}
    initial = {
        "fig3": BellDiagonalState(-0.6, 0.5, 0.5),
        "fig4": BellDiagonalState(1.0, -1.0, 1.0),
    }
    registry = {}
    for fig, state in initial.items():
        for kind_tag, kind in kinds.items():
            for s_tag, s in ohmicity.items():
                spec = EnvironmentSpec(kind=kind, s=s, coupling_b=0.1)
                registry[f"{fig}-{kind_tag}-{s_tag}"] = ExperimentConfig(
                    environment=spec, initial_state=state
                )
    return registry


PRESETS = _preset_registry()


def run_sweep(config: ExperimentConfig) -> list[BoundsSample]:
    """Evaluate bounds at ``steps`` uniform times from 0 to t_max."""
    times = np.linspace(0.0, config.t_max, config.steps)
    return [
        bounds_at(config.initial_state, config.pair, float(t), config.environment)
        for t in times
    ]


def _config_dict(config: ExperimentConfig) -> dict:
    env = config.environment
    return {
        "environment": {
            "kind": env.kind.value,
            "s": env.s,
            "coupling_b": env.coupling_b,
            "gamma0": env.gamma0,
            "n_sc": env.n_sc,
            "epsilon": env.epsilon,
        },
        "initial_state": {
            "c1": config.initial_state.c1,
            "c2": config.initial_state.c2,
            "c3": config.initial_state.c3,
        },
        "pair": {"q": list(config.pair.q.n), "r": list(config.pair.r.n)},
        "t_max": config.t_max,
        "steps": config.steps,
    }


def emit(samples: list[BoundsSample], config: ExperimentConfig) -> bytes:
    """Serialize samples as CSV or JSON bytes per the config."""
    if not samples:
        raise ValueError("cannot emit an empty sample list")
    if config.output_format == "csv":
        lines = [CSV_HEADER]
        for s in samples:
            lines.append(
                ",".join(f"{getattr(s, name):.12g}" for name in BoundsSample.FIELDS)
            )
        return ("\n".join(lines) + "\n").encode("ascii")
    payload = {
        "config": _config_dict(config),
        "samples": [
            {name: getattr(s, name) for name in BoundsSample.FIELDS} for s in samples
        ],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("ascii")


def parse_csv(data: bytes) -> list[BoundsSample]:
    """Inverse of the CSV ``emit`` (round-trips to ~1e-10 per field)."""
    lines = data.decode("ascii").strip().split("\n")
    if lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {lines[0]!r}")
    samples = []
    for line in lines[1:]:
        values = [float(v) for v in line.split(",")]
        samples.append(BoundsSample(**dict(zip(BoundsSample.FIELDS, values))))
    return samples


def with_output(config: ExperimentConfig, fmt: str, path: str) -> ExperimentConfig:
    return replace(config, output_format=fmt, output_path=path)

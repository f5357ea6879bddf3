"""Render bounds-sweep CSV files into multi-panel line charts.

A panel spec names a set of input CSVs (one subplot per file), the value
columns to draw against time, legend labels, a title, and an output image
path (PNG or SVG by extension).
"""
from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
# Stable ids so re-rendering identical inputs gives identical output.
matplotlib.rcParams["svg.hashsalt"] = "figviz"
import matplotlib.pyplot as plt

PLOTTABLE_COLUMNS = ("u_berta", "u_adabi", "k_berta", "k_adabi", "alpha")
KEY_RATE_COLUMNS = ("k_berta", "k_adabi")


class PanelSpecError(ValueError):
    """The panel spec is malformed or inconsistent with its inputs."""


@dataclass(frozen=True)
class PanelSpec:
    input_paths: tuple[str, ...]
    columns: tuple[str, ...]
    output_path: str
    labels: tuple[str, ...] = ()
    subplot_titles: tuple[str, ...] = ()
    title: str = ""

    def __post_init__(self) -> None:
        if not self.input_paths:
            raise PanelSpecError("input_paths must not be empty")
        if not self.columns:
            raise PanelSpecError("columns must not be empty")
        unknown = [c for c in self.columns if c not in PLOTTABLE_COLUMNS]
        if unknown:
            raise PanelSpecError(
                f"unknown columns {unknown}; expected a subset of {PLOTTABLE_COLUMNS}"
            )
        if self.labels and len(self.labels) != len(self.columns):
            raise PanelSpecError("labels must be parallel to columns")
        if self.subplot_titles and len(self.subplot_titles) != len(self.input_paths):
            raise PanelSpecError("subplot_titles must be parallel to input_paths")

    @classmethod
    def from_json(cls, path: str | Path) -> "PanelSpec":
        try:
            raw = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise PanelSpecError(f"cannot read panel spec {path}: {exc}") from exc
        try:
            return cls(
                input_paths=tuple(raw["input_paths"]),
                columns=tuple(raw["columns"]),
                output_path=raw["output_path"],
                labels=tuple(raw.get("labels", ())),
                subplot_titles=tuple(raw.get("subplot_titles", ())),
                title=raw.get("title", ""),
            )
        except KeyError as exc:
            raise PanelSpecError(f"panel spec missing required key {exc}") from exc


@dataclass
class Series:
    """Parsed columns of one sweep CSV."""

    times: list[float]
    values: dict[str, list[float]] = field(default_factory=dict)


def load_series(path: str | Path, columns: tuple[str, ...]) -> Series:
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            header = reader.fieldnames or []
            missing = [c for c in ("t", *columns) if c not in header]
            if missing:
                raise PanelSpecError(f"{path}: missing columns {missing}")
            series = Series(times=[], values={c: [] for c in columns})
            for row in reader:
                try:
                    series.times.append(float(row["t"]))
                    for c in columns:
                        series.values[c].append(float(row[c]))
                except (TypeError, ValueError) as exc:
                    raise PanelSpecError(f"{path}: malformed row {row}: {exc}") from exc
    except OSError as exc:
        raise PanelSpecError(f"cannot read {path}: {exc}") from exc
    if not series.times:
        raise PanelSpecError(f"{path}: no data rows")
    return series


def render(panel: PanelSpec) -> Path:
    """Draw the panel and write the image; returns the output path."""
    data = [load_series(p, panel.columns) for p in panel.input_paths]
    n = len(data)
    ncols = math.ceil(math.sqrt(n))
    nrows = math.ceil(n / ncols)
    fig, axes = plt.subplots(
        nrows, ncols, figsize=(4.5 * ncols, 3.2 * nrows), squeeze=False
    )
    labels = panel.labels or panel.columns
    draw_zero_line = any(c in KEY_RATE_COLUMNS for c in panel.columns)
    for i, (series, path) in enumerate(zip(data, panel.input_paths)):
        ax = axes[i // ncols][i % ncols]
        for column, label in zip(panel.columns, labels):
            ax.plot(series.times, series.values[column], label=label)
        if draw_zero_line:
            ax.axhline(0.0, color="gray", linewidth=0.8, linestyle="--")
        if panel.subplot_titles:
            ax.set_title(panel.subplot_titles[i], fontsize=10)
        else:
            ax.set_title(Path(path).stem, fontsize=10)
        ax.set_xlabel("t")
        ax.legend(fontsize=8)
    for j in range(n, nrows * ncols):
        axes[j // ncols][j % ncols].set_visible(False)
    if panel.title:
        fig.suptitle(panel.title)
    fig.tight_layout()
    out = Path(panel.output_path)
    metadata = {"Date": None} if out.suffix.lower() == ".svg" else None
    try:
        fig.savefig(out, metadata=metadata)
    except OSError as exc:
        raise PanelSpecError(f"cannot write {out}: {exc}") from exc
    finally:
        plt.close(fig)
    return out

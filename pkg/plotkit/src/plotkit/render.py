"""Render a CSV of numeric columns into a line chart.

Consumes only the file: columns are looked up by name from the header, one
line is drawn per distinct value of the optional series column, and points
are plotted in ascending x order.  Rendering is deterministic for a given
spec and input (fixed figure geometry, no timestamps embedded), so repeated
runs produce identical files.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

from matplotlib.figure import Figure  # noqa: E402


class MissingColumnError(ValueError):
    """A referenced column is absent from the CSV header."""


class EmptyDataError(ValueError):
    """The CSV contains a header but no data rows."""


@dataclass(frozen=True)
class PlotSpec:
    """What to plot and where to write it."""

    input_csv: Path
    x_column: str
    y_column: str
    output: Path
    series_column: str | None = None
    log_y: bool = False
    title: str = ""
    x_label: str = ""
    y_label: str = ""
    figsize: tuple[float, float] = (8.0, 5.0)
    dpi: int = 120


def _read_series(spec: PlotSpec) -> dict[str, list[tuple[float, float]]]:
    with open(spec.input_csv, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        needed = [spec.x_column, spec.y_column]
        if spec.series_column is not None:
            needed.append(spec.series_column)
        for column in needed:
            if column not in header:
                raise MissingColumnError(
                    f"column {column!r} not in CSV header {header}"
                )
        series: dict[str, list[tuple[float, float]]] = {}
        for row in reader:
            key = row[spec.series_column] if spec.series_column else ""
            x = float(row[spec.x_column])
            y = float(row[spec.y_column])
            series.setdefault(key, []).append((x, y))
    if not series:
        raise EmptyDataError(f"{spec.input_csv} has no data rows")
    for points in series.values():
        points.sort()
    return series


def render(spec: PlotSpec) -> Path:
    """Write the chart described by ``spec``; returns the output path."""
    series = _read_series(spec)
    fig = Figure(figsize=spec.figsize, dpi=spec.dpi)
    ax = fig.add_subplot(111)
    for key in sorted(series):
        xs = [p[0] for p in series[key]]
        ys = [p[1] for p in series[key]]
        ax.plot(xs, ys, marker="o", markersize=3, label=key or None)
    if spec.log_y:
        ax.set_yscale("log")
    ax.set_xlabel(spec.x_label or spec.x_column)
    ax.set_ylabel(spec.y_label or spec.y_column)
    if spec.title:
        ax.set_title(spec.title)
    if spec.series_column is not None:
        ax.legend(title=spec.series_column)
    ax.grid(True, alpha=0.4)
    output = Path(spec.output)
    metadata = {"Date": None} if output.suffix == ".svg" else None
    fig.savefig(output, metadata=metadata)
    return output

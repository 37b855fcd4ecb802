"""Command-line wrapper: one CSV in, one image out."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .render import EmptyDataError, MissingColumnError, PlotSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="Render a CSV of numeric columns into a line chart.",
    )
    parser.add_argument("--csv", required=True, type=Path, help="Input CSV file.")
    parser.add_argument("--x", required=True, help="Column for the x axis.")
    parser.add_argument("--y", required=True, help="Column for the y axis.")
    parser.add_argument(
        "--series", default=None, help="Column whose values split the data into lines."
    )
    parser.add_argument("--log-y", action="store_true", help="Logarithmic y axis.")
    parser.add_argument("--title", default="", help="Figure title.")
    parser.add_argument("--x-label", default="")
    parser.add_argument("--y-label", default="")
    parser.add_argument(
        "--out", required=True, type=Path, help="Output image (.png or .svg)."
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    spec = PlotSpec(
        input_csv=args.csv,
        x_column=args.x,
        y_column=args.y,
        series_column=args.series,
        log_y=args.log_y,
        title=args.title,
        x_label=args.x_label,
        y_label=args.y_label,
        output=args.out,
    )
    try:
        output = render(spec)
    except FileNotFoundError as exc:
        print(f"plotkit: {exc}", file=sys.stderr)
        return 2
    except (MissingColumnError, EmptyDataError) as exc:
        print(f"plotkit: {exc}", file=sys.stderr)
        return 2
    print(output)
    return 0


if __name__ == "__main__":
    sys.exit(main())

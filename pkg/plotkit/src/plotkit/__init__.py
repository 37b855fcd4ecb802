"""CSV-to-chart batch renderer for simulation and probability sweeps."""

from .render import EmptyDataError, MissingColumnError, PlotSpec, render

__version__ = "0.1.0"

__all__ = ["EmptyDataError", "MissingColumnError", "PlotSpec", "render"]

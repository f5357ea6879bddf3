"""Multi-panel chart rendering for bounds-sweep CSV time series."""

from .render import (
    KEY_RATE_COLUMNS,
    PLOTTABLE_COLUMNS,
    PanelSpec,
    PanelSpecError,
    Series,
    load_series,
    render,
)

__all__ = [
    "KEY_RATE_COLUMNS",
    "PLOTTABLE_COLUMNS",
    "PanelSpec",
    "PanelSpecError",
    "Series",
    "load_series",
    "render",
]
__version__ = "0.1.0"

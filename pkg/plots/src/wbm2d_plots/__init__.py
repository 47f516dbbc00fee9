"""Figure rendering for wbm2d experiment CSV files."""

from .figures import PANELS, FigureSpec, SchemaError, Series, load_series, render

__version__ = "0.1.0"

__all__ = [
    "PANELS",
    "FigureSpec",
    "SchemaError",
    "Series",
    "__version__",
    "load_series",
    "render",
]

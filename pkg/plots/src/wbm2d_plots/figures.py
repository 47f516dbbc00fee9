"""Build convergence figures from experiment CSV files.

The input schema is the solver CLI's output: one row per (formulation, T)
cell with columns experiment, formulation, T, N, M, error, cond,
coef_norm, residual_norm, wall_ms. A series is one (experiment,
formulation) pair; weighted-residual series are drawn solid, collocation
dashed, and color follows the experiment variant. All panels use a
logarithmic y axis. Infinite values (the cond column may contain "inf")
are clipped to the largest finite value of their panel so saturated
sweeps still render.
"""

import csv
import dataclasses
import math
import pathlib
from typing import Dict, List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

PANELS = ("error", "cond", "coef_norm")

_PANEL_TITLES = {
    "error": "boundary error",
    "cond": "condition number",
    "coef_norm": "coefficient norm",
}
_LINESTYLES = {"weighted-residual": "-", "collocation": "--"}
_REQUIRED = ("experiment", "formulation", "T", "N", "M", "error", "cond",
             "coef_norm", "residual_norm", "wall_ms")


class SchemaError(ValueError):
    """A CSV file does not match the experiment output schema."""


@dataclasses.dataclass(frozen=True)
class FigureSpec:
    csv_paths: Tuple[str, ...]
    x: str = "N"
    panels: Tuple[str, ...] = PANELS
    group_key: str = "experiment"
    log_y: bool = True

    def __post_init__(self) -> None:
        if not self.csv_paths:
            raise ValueError("need at least one CSV path")
        if self.x not in ("N", "T"):
            raise ValueError(f"x axis must be 'N' or 'T', got {self.x!r}")
        if not self.panels or any(p not in PANELS for p in self.panels):
            raise ValueError(f"panels must be a non-empty subset of {PANELS}")


@dataclasses.dataclass(frozen=True)
class Series:
    experiment: str
    formulation: str
    x: Tuple[float, ...]
    values: Dict[str, Tuple[float, ...]]  # panel name -> y data


def _read_rows(path: str) -> List[Dict[str, str]]:
    with open(path, newline="", encoding="ascii") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in _REQUIRED if c not in header]
        if missing:
            raise SchemaError(f"{path}: missing column(s) {', '.join(missing)}")
        return list(reader)


def load_series(csv_paths: Sequence[str], x: str = "N") -> List[Series]:
    """Group rows into one series per (experiment, formulation) pair.

    Order is first appearance across the given files, so a rerun over the
    same inputs yields an identical list.
    """
    grouped: Dict[Tuple[str, str], Dict[str, List[float]]] = {}
    for path in csv_paths:
        for row in _read_rows(path):
            key = (row["experiment"], row["formulation"])
            bucket = grouped.setdefault(
                key, {"x": []} | {p: [] for p in PANELS}
            )
            bucket["x"].append(float(row[x]))
            for panel in PANELS:
                bucket[panel].append(float(row[panel]))
    return [
        Series(
            experiment=exp,
            formulation=form,
            x=tuple(data["x"]),
            values={p: tuple(data[p]) for p in PANELS},
        )
        for (exp, form), data in grouped.items()
    ]


def _clip_infinite(series: Sequence[Series], panel: str) -> List[List[float]]:
    """Replace non-finite panel values with the panel's largest finite one."""
    finite = [
        v for s in series for v in s.values[panel] if math.isfinite(v)
    ]
    top = max(finite) if finite else 1e16
    return [
        [v if math.isfinite(v) else top for v in s.values[panel]]
        for s in series
    ]


def _draw_panel(ax, figspec: FigureSpec, series: Sequence[Series], panel: str) -> None:
    colors = plt.rcParams["axes.prop_cycle"].by_key()["color"]
    variant_color: Dict[str, str] = {}
    clipped = _clip_infinite(series, panel)
    for s, ys in zip(series, clipped):
        variant = getattr(s, figspec.group_key, s.experiment)
        if variant not in variant_color:
            variant_color[variant] = colors[len(variant_color) % len(colors)]
        ax.plot(
            s.x,
            ys,
            linestyle=_LINESTYLES.get(s.formulation, ":"),
            color=variant_color[variant],
            label=f"{s.experiment} ({s.formulation})",
        )
    if figspec.log_y:
        ax.set_yscale("log")
    ax.set_xlabel(figspec.x)
    ax.set_title(_PANEL_TITLES[panel])
    if series:
        ax.legend(fontsize="x-small")


def build_figure(figspec: FigureSpec, series: Sequence[Series]):
    """The combined figure, one panel per requested quantity."""
    n = len(figspec.panels)
    fig, axes = plt.subplots(1, n, figsize=(4.5 * n, 3.6))
    if n == 1:
        axes = [axes]
    for ax, panel in zip(axes, figspec.panels):
        _draw_panel(ax, figspec, series, panel)
    fig.tight_layout()
    return fig


def build_panel(figspec: FigureSpec, series: Sequence[Series], panel: str):
    fig, ax = plt.subplots(figsize=(4.5, 3.6))
    _draw_panel(ax, figspec, series, panel)
    fig.tight_layout()
    return fig


def render(figspec: FigureSpec, out_dir) -> List[pathlib.Path]:
    """Write the combined figure plus one image per panel; returns paths."""
    series = load_series(figspec.csv_paths, figspec.x)
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    fig = build_figure(figspec, series)
    path = out / "figure.png"
    fig.savefig(path, dpi=150)
    plt.close(fig)
    written.append(path)

    for panel in figspec.panels:
        fig = build_panel(figspec, series, panel)
        path = out / f"{panel}.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)
    return written

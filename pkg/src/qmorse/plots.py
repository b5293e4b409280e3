"""Matplotlib rendering of sweep output, written next to the delimited data.

Import stays lazy-friendly: the Agg backend is forced before pyplot loads so
rendering works headless (CI, containers).
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)
import numpy as np  # noqa: E402

from .sweep import CycleFigure, FIGURES, OutputRecord, PotentialFigure  # noqa: E402

_PANELS = (("Q_h", "heat input $Q_h$"), ("Q_c", "heat output $Q_c$"),
           ("W", "work output $W$"), ("eta", r"efficiency $\eta$"))


def _grid_arrays(records: list[OutputRecord], attr: str):
    xs = sorted({r.axis1 for r in records})
    ys = sorted({r.axis2 for r in records})
    index = {(r.axis1, r.axis2): r for r in records}
    z = np.full((len(ys), len(xs)), np.nan)
    for j, x in enumerate(xs):
        for i, y in enumerate(ys):
            value = getattr(index[(x, y)], attr)
            z[i, j] = math.nan if value is None else value
    return np.array(xs), np.array(ys), z


def render_cycle_figure(records: list[OutputRecord], figure_id: str,
                        path: str, method: str = "sum") -> str:
    """Four-panel heat map (Qh, Qc, W, eta) of one method's records."""
    preset = FIGURES[figure_id]
    assert isinstance(preset, CycleFigure)
    rows = [r for r in records if r.method == method]
    if not rows:
        raise ValueError(f"no records for method {method!r}")
    fig, axes = plt.subplots(2, 2, figsize=(9.0, 7.0), constrained_layout=True)
    for ax, (attr, label) in zip(axes.flat, _PANELS):
        xs, ys, z = _grid_arrays(rows, attr)
        mesh = ax.pcolormesh(xs, ys, z, shading="nearest", cmap="viridis")
        fig.colorbar(mesh, ax=ax, shrink=0.9)
        ax.set_title(label)
        ax.set_xlabel(preset.grid.axis1.name)
        ax.set_ylabel(preset.grid.axis2.name)
    fig.suptitle(f"{preset.title}  [{method} route]")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_potential_figure(rows: list[tuple[float, float, float]],
                            figure_id: str, path: str) -> str:
    """Overlaid V_q(x) curves, one per deformation value."""
    preset = FIGURES[figure_id]
    assert isinstance(preset, PotentialFigure)
    fig, ax = plt.subplots(figsize=(7.0, 5.0), constrained_layout=True)
    for q in preset.q_values:
        pts = [(x, v) for x, qq, v in rows if qq == q]
        ax.plot([p[0] for p in pts], [p[1] for p in pts], label=f"q = {q:g}")
    ax.axhline(0.0, color="0.6", lw=0.8)
    ax.set_xlabel("displacement x")
    ax.set_ylabel("V(x)")
    ax.set_title(preset.title)
    ax.legend()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

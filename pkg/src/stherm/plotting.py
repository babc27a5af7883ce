"""Figure rendering for sweep output.

Heat maps over the (T0, T) plane for the battery quantities and the
amplification/mitigation classification, written as PNG files next to the
delimited output.
"""

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .config import SweepGrid
from .sweep import ResultRow, rows_to_grids

HEATMAP_FIELDS = [
    ("ergotropy", "single-copy ergotropy"),
    ("asymptotic_ergotropy", "asymptotic ergotropy per copy"),
    ("excess_ergotropy", "excess ergotropy per copy"),
    ("erasure_cost", "erasure entropy cost"),
    ("delta_s_bath", "bath entropy change"),
]

CLASS_COLORS = {
    "Amplified": 0.0,
    "Mitigated": 1.0,
    "BreakEven": 2.0,
    "Undefined": 3.0,
}


def _heatmap(ax, grid: SweepGrid, values: np.ndarray, title: str):
    mesh = ax.pcolormesh(
        grid.t_values, grid.t0_values, values, shading="nearest", cmap="viridis"
    )
    ax.set_xlabel("bath temperature T")
    ax.set_ylabel("initial temperature T0")
    ax.set_title(title)
    return mesh


def render_figures(rows: list[ResultRow], grid: SweepGrid, outdir, stem: str = "sweep"):
    """Write one PNG per plotted quantity; returns the created paths."""
    os.makedirs(outdir, exist_ok=True)
    grids = rows_to_grids(rows, grid)
    paths = []
    for field, title in HEATMAP_FIELDS:
        fig, ax = plt.subplots(figsize=(5.2, 4.2), constrained_layout=True)
        mesh = _heatmap(ax, grid, grids[field], title)
        fig.colorbar(mesh, ax=ax)
        path = os.path.join(outdir, f"{stem}_{field}.png")
        fig.savefig(path, dpi=150)
        plt.close(fig)
        paths.append(path)

    coded = np.vectorize(CLASS_COLORS.get)(grids["classification"]).astype(float)
    fig, ax = plt.subplots(figsize=(5.2, 4.2), constrained_layout=True)
    mesh = ax.pcolormesh(
        grid.t_values,
        grid.t0_values,
        coded,
        shading="nearest",
        cmap=plt.get_cmap("viridis", len(CLASS_COLORS)),
        vmin=-0.5,
        vmax=len(CLASS_COLORS) - 0.5,
    )
    cbar = fig.colorbar(mesh, ax=ax, ticks=range(len(CLASS_COLORS)))
    cbar.ax.set_yticklabels(list(CLASS_COLORS))
    ax.set_xlabel("bath temperature T")
    ax.set_ylabel("initial temperature T0")
    ax.set_title("amplification / mitigation map")
    path = os.path.join(outdir, f"{stem}_classification.png")
    fig.savefig(path, dpi=150)
    plt.close(fig)
    paths.append(path)
    return paths

"""Figure rendering for orbit scatters and exponent sweeps.

All figures are written as SVG with a fixed hash salt and a null Date
field, so rendering the same data twice produces identical bytes.  Axis
limits for scatters are clipped to the 1st and 99th percentiles of the
plotted points (recorded in the SVG Description metadata), which keeps a
handful of near-pole excursions from flattening the bulk of an orbit.
"""

from __future__ import annotations

import math
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

matplotlib.rcParams["svg.hashsalt"] = "ratdiff"

#: Output figures are square, this many pixels per side.
FIGURE_PIXELS = 800
_DPI = 72.0

#: Axis clipping percentiles for scatter plots.
CLIP_LO = 1.0
CLIP_HI = 99.0

#: Fixed per-seed palette (matplotlib tab10), cycled when there are
#: more than ten seed groups.
PALETTE = (
    "#1f77b4",
    "#ff7f0e",
    "#2ca02c",
    "#d62728",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#7f7f7f",
    "#bcbd22",
    "#17becf",
)


def percentile(values: Sequence[float], pct: float) -> float:
    """Linear-interpolation percentile of a sequence (pct in [0, 100])."""
    if not values:
        raise ValueError("percentile of an empty sequence")
    data = sorted(values)
    if len(data) == 1:
        return data[0]
    rank = (pct / 100.0) * (len(data) - 1)
    low = math.floor(rank)
    high = math.ceil(rank)
    if low == high:
        return data[low]
    frac = rank - low
    return data[low] * (1.0 - frac) + data[high] * frac


def clipped_limits(
    values: Sequence[float],
    lo_pct: float = CLIP_LO,
    hi_pct: float = CLIP_HI,
    pad_fraction: float = 0.05,
) -> tuple[float, float]:
    """Percentile-clipped axis limits with proportional padding."""
    finite = [x for x in values if math.isfinite(x)]
    if not finite:
        return (-1.0, 1.0)
    lo = percentile(finite, lo_pct)
    hi = percentile(finite, hi_pct)
    if hi <= lo:
        center = lo
        return (center - 0.5, center + 0.5)
    pad = (hi - lo) * pad_fraction
    return (lo - pad, hi + pad)


def _square_figure() -> tuple[plt.Figure, plt.Axes]:
    side = FIGURE_PIXELS / _DPI
    fig, ax = plt.subplots(figsize=(side, side), dpi=_DPI)
    return fig, ax


def _save(fig: plt.Figure, path: str, description: str) -> None:
    # Date=None drops the timestamp; with the fixed hashsalt the bytes
    # depend only on the drawn content.
    fig.savefig(
        path,
        format="svg",
        metadata={"Date": None, "Description": description},
    )
    plt.close(fig)


def scatter_complex(
    groups: Sequence[Sequence[complex]],
    path: str,
    title: str = "",
    labels: Optional[Sequence[str]] = None,
    marker_size: float = 2.0,
) -> None:
    """Scatter one or more groups of complex samples in the plane.

    Each group gets one palette color; axes are clipped to the pooled
    1st and 99th percentiles, equal aspect, and the clipping window is
    recorded in the SVG metadata.
    """
    fig, ax = _square_figure()
    all_re: list[float] = []
    all_im: list[float] = []
    for index, group in enumerate(groups):
        re = [z.real for z in group]
        im = [z.imag for z in group]
        all_re.extend(re)
        all_im.extend(im)
        label = labels[index] if labels is not None else None
        ax.plot(
            re,
            im,
            linestyle="none",
            marker=".",
            markersize=marker_size,
            color=PALETTE[index % len(PALETTE)],
            label=label,
        )
    xlim = clipped_limits(all_re)
    ylim = clipped_limits(all_im)
    ax.set_xlim(*xlim)
    ax.set_ylim(*ylim)
    ax.set_aspect("equal", adjustable="box")
    ax.set_xlabel("Re w")
    ax.set_ylabel("Im w")
    if title:
        ax.set_title(title)
    if labels is not None and len(groups) <= len(PALETTE):
        ax.legend(loc="upper right", fontsize=8, markerscale=4)
    ax.grid(True, alpha=0.3)
    description = (
        "Axes clipped to the {:.0f}th-{:.0f}th percentile of plotted points; "
        "xlim=({:.6g}, {:.6g}), ylim=({:.6g}, {:.6g})".format(
            CLIP_LO, CLIP_HI, xlim[0], xlim[1], ylim[0], ylim[1]
        )
    )
    _save(fig, path, description)


def modulus_series(
    series: Sequence[Sequence[float]],
    path: str,
    title: str = "",
    labels: Optional[Sequence[str]] = None,
) -> None:
    """Line plot of |w_n| against n for one or more orbits."""
    fig, ax = _square_figure()
    for index, values in enumerate(series):
        label = labels[index] if labels is not None else None
        ax.plot(
            range(len(values)),
            values,
            linewidth=0.8,
            color=PALETTE[index % len(PALETTE)],
            label=label,
        )
    ax.set_xlabel("step")
    ax.set_ylabel("|w|")
    if title:
        ax.set_title(title)
    if labels is not None and len(series) <= len(PALETTE):
        ax.legend(loc="upper right", fontsize=8)
    ax.grid(True, alpha=0.3)
    _save(fig, path, "Orbit modulus against step index")


def exponent_heatmap(
    x_edges: Sequence[float],
    y_edges: Sequence[float],
    grid: Sequence[Sequence[float]],
    path: str,
    title: str = "",
    xlabel: str = "Re",
    ylabel: str = "Im",
    colorbar_label: str = "largest Lyapunov exponent",
) -> None:
    """Heatmap of a scalar field sampled on a rectangular grid.

    ``grid[i][j]`` is the value for y_edges[i] x x_edges[j] cell
    centers; NaN cells render blank.
    """
    fig, ax = _square_figure()
    mesh = ax.pcolormesh(
        list(x_edges),
        list(y_edges),
        [list(row) for row in grid],
        shading="auto",
        cmap="viridis",
    )
    fig.colorbar(mesh, ax=ax, label=colorbar_label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    _save(fig, path, "Scalar field on a rectangular parameter grid")

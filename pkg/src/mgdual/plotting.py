"""Figures of Hilbert tables, written straight to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.ticker import MaxNLocator  # noqa: E402


def _finish(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_hilbert(values: dict, path, title=None, label="H"):
    """Bar chart for rank-one gradings, annotated heat map for rank two."""
    k = len(next(iter(values))) if values else 1
    if k == 1:
        fig, ax = plt.subplots(figsize=(6, 3.5))
        xs = [m[0] for m in values]
        ax.bar(xs, list(values.values()), color="#4477aa")
        ax.set_xlabel("degree")
        ax.set_ylabel(label)
        ax.set_xticks(xs)
    elif k == 2:
        i_vals = range(min(m[0] for m in values), max(m[0] for m in values) + 1)
        j_vals = range(min(m[1] for m in values), max(m[1] for m in values) + 1)
        grid = np.full((len(j_vals), len(i_vals)), np.nan)
        for (i, j), d in values.items():
            if d:
                grid[j - j_vals.start, i - i_vals.start] = d
        fig, ax = plt.subplots(figsize=(1.0 + 0.6 * len(i_vals), 1.0 + 0.35 * len(j_vals)))
        image = ax.imshow(grid, origin="lower", cmap="viridis", aspect="auto",
                          extent=(i_vals.start - 0.5, i_vals.stop - 0.5, j_vals.start - 0.5, j_vals.stop - 0.5))
        mid = np.nanmean(grid) if np.isfinite(grid).any() else 0
        for (i, j), d in values.items():
            if d:
                # dark text on the bright end of the colormap
                ax.text(i, j, str(d), ha="center", va="center", fontsize=7, color="black" if d > mid else "white")
        fig.colorbar(image, ax=ax, label=label)
        ax.set_xlabel("i")
        ax.set_ylabel("j")
        ax.set_xticks(list(i_vals))
        ax.yaxis.set_major_locator(MaxNLocator(integer=True))
    else:
        fig, ax = plt.subplots(figsize=(6, 3.5))
        ax.plot(range(len(values)), list(values.values()), "o-")
        ax.set_xticks(range(len(values)))
        ax.set_xticklabels([str(m) for m in values], rotation=90, fontsize=6)
        ax.set_ylabel(label)
    if title:
        ax.set_title(title)
    return _finish(fig, path)


def plot_chain(chain: list, path, labels=None, title=None):
    """Hilbert values of successive quotients ``I : J^p``, one line per ``p`` (rank-one degrees)."""
    fig, ax = plt.subplots(figsize=(6, 3.5))
    for p, table in enumerate(chain):
        xs = list(range(len(table)))
        label = labels[p] if labels else f"p={p}"
        ax.plot(xs, list(table.values()), "o-", label=label)
    degrees = list(chain[0])
    ax.set_xticks(range(len(degrees)))
    ax.set_xticklabels([m[0] if len(m) == 1 else str(m) for m in degrees])
    ax.set_xlabel("degree")
    ax.set_ylabel("H")
    ax.legend()
    if title:
        ax.set_title(title)
    return _finish(fig, path)

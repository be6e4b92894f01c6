"""Matplotlib rendering for the CLI's --plot flag.

Figures are written straight to files (Agg backend, no display); the
delimited data output stays the primary, machine-readable artifact.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


def save_point_clouds(path, clouds, title=""):
    """Scatter one or more 2-D point clouds into a single figure file."""
    fig, ax = plt.subplots(figsize=(6, 6))
    for cloud in clouds:
        if len(cloud) == 0:
            continue
        ax.scatter(cloud.points[:, 0], cloud.points[:, 1], s=4, label=cloud.tag or None)
    ax.set_xlabel("log |z1|")
    ax.set_ylabel("log |z2|")
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    if any(c.tag for c in clouds):
        ax.legend(loc="best", fontsize=8)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_series(path, rows, xlabel, ylabel, title="", loglog=False):
    """Plot (x, y) rows as a marked line, optionally on log-log axes."""
    xs = [r[0] for r in rows]
    ys = [r[1] for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(xs, ys, marker="o")
    if loglog:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.grid(True, which="both", alpha=0.3)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_curves(path, curves, xlabel, ylabel, title=""):
    """Plot several labelled (xs, ys) curves on shared axes."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for xs, ys, label in curves:
        ax.plot(xs, ys, label=label)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    ax.legend(loc="best", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

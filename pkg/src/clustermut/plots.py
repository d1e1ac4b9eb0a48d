"""Figure rendering for the report commands.

Every report path that writes delimited output can also render a figure
next to it; these helpers keep all matplotlib use in one place and force
the non-interactive backend.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_count_series(series: dict[str, list[int]], path: str, ylabel: str = "vertices") -> None:
    """Line plot of cumulative per-depth counts, one line per label."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, counts in series.items():
        ax.plot(range(len(counts)), counts, marker="o", markersize=3, label=label)
    ax.set_xlabel("depth")
    ax.set_ylabel(ylabel)
    if series:
        ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_cycle_histogram(profile, path: str, title: str = "") -> None:
    """Bar chart of a [length, frequency] cycle-basis profile."""
    lengths = [l for l, _ in profile]
    freqs = [f for _, f in profile]
    fig, ax = plt.subplots(figsize=(5, 3.5))
    ax.bar(lengths, freqs, width=0.6)
    ax.set_xlabel("cycle length")
    ax.set_ylabel("basis frequency")
    if title:
        ax.set_title(title)
    ax.set_xticks(lengths)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_metric_bars(rows, path: str) -> None:
    """Accuracy and MCC with standard-error bars, one group per row."""
    names = [f"{r.name}{'+m' if r.include_matrix else ''}" for r in rows]
    xs = range(len(rows))
    fig, ax = plt.subplots(figsize=(max(5, 1.2 * len(rows)), 4))
    ax.errorbar(xs, [r.report.accuracy_mean for r in rows],
                yerr=[r.report.accuracy_se for r in rows],
                fmt="o", capsize=3, label="accuracy")
    ax.errorbar(xs, [r.report.mcc_mean for r in rows],
                yerr=[r.report.mcc_se for r in rows],
                fmt="s", capsize=3, label="MCC")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(names, rotation=30, ha="right", fontsize=8)
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_depth_sweep(depths, rows, path: str) -> None:
    """Accuracy/MCC versus generation depth for a depth-sweep run."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.errorbar(depths, [r.report.accuracy_mean for r in rows],
                yerr=[r.report.accuracy_se for r in rows],
                fmt="-o", capsize=3, label="accuracy")
    ax.errorbar(depths, [r.report.mcc_mean for r in rows],
                yerr=[r.report.mcc_se for r in rows],
                fmt="-s", capsize=3, label="MCC")
    ax.set_xlabel("depth")
    ax.set_ylim(0, 1.05)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)

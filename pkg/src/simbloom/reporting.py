"""CSV and figure output for the bench and eval report paths."""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .harness import EvalRecord, EvalSummary


def linear_fit(xs: list[float], ys: list[float]) -> tuple[float, float, float]:
    """(slope, intercept, r_squared) of a least-squares line."""
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    predicted = slope * x + intercept
    ss_res = float(np.sum((y - predicted) ** 2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else 1.0 - ss_res / ss_tot
    return float(slope), float(intercept), r2


def write_bench_csv(rows: list[tuple[int, float]], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["salt_length", "mean_seconds"])
        writer.writerows(rows)


def render_bench_figure(rows: list[tuple[int, float]], path: Path) -> None:
    """Creation time versus salt length, with the fitted trend line."""
    lengths = [r[0] for r in rows]
    times = [r[1] for r in rows]
    slope, intercept, r2 = linear_fit(lengths, times)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(lengths, times, "o-", label="measured mean")
    xs = np.linspace(min(lengths), max(lengths), 50)
    ax.plot(xs, slope * xs + intercept, "--", label=f"linear fit (R²={r2:.3f})")
    ax.set_xlabel("salt length (octets)")
    ax.set_ylabel("filter creation time (s)")
    ax.set_title("Filter creation time vs salt length")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def write_eval_csv(records: list[EvalRecord], path: Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["base", "variant", "kind", "edit_dist", "delta"])
        for r in records:
            writer.writerow([r.base, r.variant, r.kind, r.edit_dist, f"{r.delta:.6f}"])


def render_eval_figure(
    records: list[EvalRecord], summary: EvalSummary, path: Path
) -> None:
    """Similarity against edit distance, mutations vs unrelated pairs."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for label, marker in (("mutation", "o"), ("unrelated", "x")):
        sel = [
            r for r in records
            if (r.kind == "random-unrelated") == (label == "unrelated")
        ]
        ax.scatter(
            [r.edit_dist for r in sel],
            [r.delta for r in sel],
            marker=marker,
            alpha=0.4,
            label=label,
        )
    ax.axhline(summary.threshold, linestyle="--", color="gray",
               label=f"threshold {summary.threshold}")
    ax.set_xlabel("edit distance")
    ax.set_ylabel("filter similarity")
    ax.set_title(f"Filter similarity vs edit distance (Spearman {summary.spearman:.2f})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)

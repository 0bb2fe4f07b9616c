"""Report figures rendered to files next to the delimited output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .reporting import Report

_FLOOR = 1e-18  # keeps log plots finite when a residual is exactly zero


def _distance_panel(ax, report: Report) -> None:
    curves = report.curves
    times = curves["checkpoint_times"]
    ax.semilogy(times, np.maximum(curves["plain_distance"], _FLOOR),
                "o-", label="plain distance")
    if "quotient_distance" in curves:
        ax.semilogy(times, np.maximum(curves["quotient_distance"], _FLOOR),
                    "s--", label="distance up to phase")
    if "reference_distance" in curves:
        ax.semilogy(times, np.maximum(curves["reference_distance"], _FLOOR),
                    "^:", label="matched-phase distance")
    ax.set_xlabel("checkpoint time")
    ax.set_ylabel("L2 distance")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)


def _density_panel(ax, report: Report) -> None:
    curves = report.curves
    ax.plot(curves["x"], curves["density_a"], label="transform after propagation")
    ax.plot(curves["x"], curves["density_b"], "--", label="propagation after transform")
    ax.set_xlabel("x")
    ax.set_ylabel(r"$|\psi|^2$")
    ax.legend(fontsize=8)


def _convergence_panel(ax, report: Report) -> None:
    curves = report.curves
    dt = curves["dt"]
    mismatch = np.maximum(curves["mismatch"], _FLOOR)
    ax.loglog(dt, mismatch, "o-", label="path mismatch")
    reference = mismatch[0] * (dt / dt[0]) ** 2
    ax.loglog(dt, np.maximum(reference, _FLOOR), ":", label=r"$\propto dt^2$")
    ax.set_xlabel("dt")
    ax.set_ylabel("L2 mismatch")
    ax.legend(fontsize=8)
    ax.grid(True, which="both", alpha=0.3)


def _checks_panel(ax, report: Report) -> None:
    gated = [c for c in report.checks if c.tolerance is not None]
    if not gated:
        ax.set_axis_off()
        return
    values = np.maximum([abs(c.value) for c in gated], _FLOOR)
    tolerances = [c.tolerance for c in gated]
    positions = np.arange(len(gated))
    colors = ["tab:green" if not c.failed else "tab:red" for c in gated]
    ax.barh(positions, values, color=colors, log=True)
    for pos, tol in zip(positions, tolerances):
        ax.plot([tol, tol], [pos - 0.4, pos + 0.4], color="black", lw=1)
    ax.set_yticks(positions)
    ax.set_yticklabels([c.name for c in gated], fontsize=6)
    ax.invert_yaxis()
    ax.set_xlabel("value (ticks: tolerance)")


def render_report_figure(report: Report, path) -> Path:
    """One PNG per report: curves when available, check bars otherwise."""
    path = Path(path)
    has_curves = "checkpoint_times" in report.curves
    has_density = "density_a" in report.curves
    has_convergence = "dt" in report.curves
    panels = 1 + int(has_curves or has_convergence) + int(has_density)
    fig, axes = plt.subplots(panels, 1, figsize=(7.0, 2.8 * panels))
    axes = np.atleast_1d(axes)
    index = 0
    if has_curves:
        _distance_panel(axes[index], report)
        index += 1
    elif has_convergence:
        _convergence_panel(axes[index], report)
        index += 1
    if has_density:
        _density_panel(axes[index], report)
        index += 1
    _checks_panel(axes[index], report)
    fig.suptitle(report.name, fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path

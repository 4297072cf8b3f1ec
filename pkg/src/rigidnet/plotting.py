"""Render a sweep curve to a standalone SVG line chart."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .sweep import SweepCurve

# Fixed hash salt plus suppressed date metadata keep the SVG byte-stable
# across identical invocations.
_SVG_RC = {"svg.hashsalt": "rigidnet"}


def render_sweep_chart(curve: SweepCurve, target) -> None:
    xs = [float(r) for r in curve.ratios]
    k_r = [float(v) for v in curve.k_r_values]
    k_u = [float(v) for v in curve.k_u_values]
    with plt.rc_context(_SVG_RC):
        fig, ax = plt.subplots(figsize=(6.4, 4.2))
        ax.plot(xs, k_r, color="tab:blue", linestyle="-", label="rigidity index")
        ax.plot(xs, k_u, color="tab:red", linestyle="--", label="redundancy index")
        ax.set_xlabel("sensing radius / side length")
        ax.set_ylabel("index value")
        ax.set_xlim(xs[0], xs[-1] if xs[-1] > xs[0] else xs[0] + 1)
        ax.set_ylim(-0.02, 1.02)
        ax.grid(True, alpha=0.3)
        ax.legend(loc="lower right")
        ax.set_title(f"n={curve.n}, side={curve.side:g}, trials={curve.trials}")
        try:
            fig.savefig(target, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)

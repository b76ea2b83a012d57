"""Summary figures for parameter sweeps.

Renders the sweep table (formula, counting bound, constructed maximum
label per size) to a PNG next to the delimited output.  Headless-safe:
the Agg backend is forced before pyplot loads.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_sweep_figure(rows: list[dict], family: str, out_dir: Path) -> Path:
    """Write ``sweep_<family>.png`` under ``out_dir`` and return its path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    ns = [row["n"] for row in rows]
    formula = [row["formula"] for row in rows]
    bound = [row["bound"] for row in rows]
    constructed = [row["constructed"] for row in rows]
    verified = [row["verified"] for row in rows]

    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.plot(ns, formula, "-", color="tab:blue", label="closed form", zorder=1)
    ax.scatter(ns, bound, marker="s", s=36, facecolors="none",
               edgecolors="tab:orange", label="counting bound", zorder=2)
    ax.scatter(ns, constructed, marker="x", s=30, color="tab:green",
               label="constructed max label", zorder=3)
    bad = [n for n, ok in zip(ns, verified) if not ok]
    if bad:
        ax.scatter(bad, [0] * len(bad), marker="v", color="tab:red",
                   label="verification FAILED", zorder=4)
    ax.set_xlabel("n")
    ax.set_ylabel("k")
    ax.set_title(f"{family}: strength vs size ({sum(verified)}/{len(rows)} verified)")
    ax.legend(loc="upper left")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    path = out_dir / f"sweep_{family.replace('-', '_')}.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path

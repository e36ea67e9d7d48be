"""Matplotlib figures written next to the survey CSV."""

from __future__ import annotations

import math
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from platecarree.geo import rad_to_deg  # noqa: E402
from platecarree.survey import BAND_WIDTH_DEG, SurveyRow, band_means  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.labelsize": 9,
    "axes.titlesize": 10,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "legend.fontsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "platecarree",
}


def figsize(width=6.0, height=None):
    golden = (math.sqrt(5) - 1.0) / 2.0
    return (width, height or width * golden)


def plot_survey(rows: list[SurveyRow], path: str | os.PathLike) -> None:
    """Planar error against |midpoint latitude|, with the band means overlaid.

    The file type follows ``path``'s suffix (png, svg, pdf, ...).
    """
    mid = [abs(rad_to_deg((r.a.lat + r.b.lat) / 2)) for r in rows]
    err = [r.error_pct for r in rows]
    means = band_means(rows)

    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=figsize())
        ax.scatter(mid, err, s=4, alpha=0.35, color="#4477aa", linewidths=0, label="pairs")
        centres = [band + BAND_WIDTH_DEG / 2 for band in means]
        ax.plot(
            centres,
            [m for _, m in means.values()],
            "o-",
            color="#cc3311",
            label=f"mean per {BAND_WIDTH_DEG:g}° band",
        )
        if err and min(err) > 0:
            ax.set_yscale("log")
        ax.set_xlim(0, 90)
        ax.set_xlabel("|midpoint latitude| (degrees)")
        ax.set_ylabel("planar distance error (%)")
        ax.set_title("Map distance vs great-circle distance")
        ax.legend(loc="upper left", frameon=False)
        fig.tight_layout()
        fig.savefig(path, metadata=_metadata(path))
        plt.close(fig)


def _metadata(path) -> dict | None:
    # strip timestamps so re-runs produce identical files where the backend allows
    suffix = os.path.splitext(str(path))[1].lower()
    if suffix == ".svg":
        return {"Date": None}
    if suffix == ".pdf":
        return {"CreationDate": None, "ModDate": None}
    if suffix == ".png":
        return {"Software": None}
    return None

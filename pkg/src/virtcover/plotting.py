"""Matplotlib renderings: routed realizations and Gauss diagrams.

Crossing glyphs carry SVG ids (``classical-<id>``, ``virtual-<id>``,
``cut-<n>``) so the files can be inspected without parsing geometry.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle, FancyArrowPatch  # noqa: E402

from .gauss import ExtendedGaussCode, chords  # noqa: E402

SIGN_COLORS = {1: "tab:red", -1: "tab:blue"}
UNDER_GAP = 0.45


def _shorten(p_from, p_to, frac):
    return (p_from[0] + (p_to[0] - p_from[0]) * frac, p_from[1] + (p_to[1] - p_from[1]) * frac)


def draw_realization(realization, path, title=None):
    """Write the routed picture of a realization; the format follows ``path``'s suffix."""
    layout = realization.layout
    plain_comps = [[p for p in comp if p.is_classical] for comp in realization.code.components]
    fig, ax = plt.subplots(figsize=(8, 5))
    for k, i, pts in layout.routes:
        pts = list(pts)
        start, end = plain_comps[k][i], plain_comps[k][(i + 1) % len(plain_comps[k])]
        if not start.is_over:
            pts[0] = _shorten(pts[0], pts[1], UNDER_GAP)
        if not end.is_over:
            pts[-1] = _shorten(pts[-1], pts[-2], UNDER_GAP)
        xs, ys = zip(*pts)
        ax.plot(xs, ys, color="k", lw=1.2, solid_capstyle="butt")
    for c, (x, y) in layout.centers.items():
        dot = ax.scatter([x], [y], s=12, color=SIGN_COLORS[layout.signs[c]], zorder=3)
        dot.set_gid(f"classical-{c}")
        ax.annotate(c, (x, y), xytext=(0, -14), textcoords="offset points", ha="center", fontsize=7)
    for v, (x, y) in layout.virtual_points.items():
        ring = Circle((x, y), 0.35, fill=False, color="tab:gray", lw=0.8)
        ring.set_gid(f"virtual-{v}")
        ax.add_patch(ring)
    for t, (x, y) in enumerate(layout.free_circles):
        loop = Circle((x, y), 2.0, fill=False, color="k", lw=1.2)
        loop.set_gid(f"free-{t}")
        ax.add_patch(loop)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=9)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)


def _draw_gauss(ax, code: ExtendedGaussCode, title=""):
    n = max(code.num_components, 1)
    radius, spacing = 1.0, 2.6
    where = {}
    counts = code.cut_counts()
    cut_no = 0
    for k, comp in enumerate(code.components):
        cx = spacing * (k - (n - 1) / 2)
        ax.add_patch(Circle((cx, 0), radius, fill=False, color="k", lw=1.0))
        m = max(len(comp), 1)

        def at(theta):
            return cx + radius * math.cos(theta), radius * math.sin(theta)

        for i, p in enumerate(comp):
            theta = math.pi / 2 - 2 * math.pi * i / m
            where[k, i] = at(theta)
            if p.is_virtual:
                ax.scatter(*zip(at(theta)), s=10, facecolors="none", edgecolors="tab:gray")
        for s, cnt in counts[k].items():
            for r in range(cnt):
                theta = math.pi / 2 - 2 * math.pi * (s + (r + 1) / (cnt + 1)) / m
                x0, y0 = cx + 0.9 * radius * math.cos(theta), 0.9 * radius * math.sin(theta)
                x1, y1 = cx + 1.1 * radius * math.cos(theta), 1.1 * radius * math.sin(theta)
                (line,) = ax.plot([x0, x1], [y0, y1], color="tab:green", lw=2)
                line.set_gid(f"cut-{cut_no}")
                cut_no += 1
        ax.annotate(str(k + 1), (cx, -radius - 0.25), ha="center", fontsize=8)
    for c, ch in chords(code).items():
        arrow = FancyArrowPatch(
            where[ch.over_pos],
            where[ch.under_pos],
            arrowstyle="-|>",
            mutation_scale=8,
            color=SIGN_COLORS[ch.sign],
            lw=0.9,
            connectionstyle="arc3,rad=0.15",
        )
        arrow.set_gid(f"chord-{c}")
        ax.add_patch(arrow)
    ax.set_xlim(-spacing * n / 2 - 0.2, spacing * n / 2 + 0.2)
    ax.set_ylim(-1.6, 1.4)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title, fontsize=9)


def draw_report_figure(code: ExtendedGaussCode, cover_code, path):
    """Gauss diagram of a diagram (with cut points) beside that of its covering."""
    panels = [(code, "diagram")] + ([(cover_code, "covering")] if cover_code is not None else [])
    widths = [max(c.num_components, 1) for c, _ in panels]
    fig, axes = plt.subplots(
        1, len(panels), figsize=(2.6 * sum(widths) + 1, 3.2), gridspec_kw={"width_ratios": widths}
    )
    if len(panels) == 1:
        axes = [axes]
    for ax, (c, title) in zip(axes, panels):
        _draw_gauss(ax, c, title)
    fig.savefig(path, bbox_inches="tight")
    plt.close(fig)

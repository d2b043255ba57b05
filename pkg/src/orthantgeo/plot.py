"""SVG figures of one- and two-dimensional systems. Floats are used here only for drawing."""

from __future__ import annotations

from .realization.system import HalfspaceSystem


def _bounds(points: list[tuple[float, float]]) -> tuple[float, float, float, float]:
    xs = [p[0] for p in points] or [0.0]
    ys = [p[1] for p in points] or [0.0]
    pad_x = (max(xs) - min(xs)) * 0.25 or 1.0
    pad_y = (max(ys) - min(ys)) * 0.25 or 1.0
    return min(xs) - pad_x, max(xs) + pad_x, min(ys) - pad_y, max(ys) + pad_y


def plot_system(system: HalfspaceSystem, out: str, witnesses: dict | None = None) -> None:
    """Draw arrangement lines, the boundary of K and region labels at their witness points."""
    if system.dimension not in (1, 2):
        raise ValueError("only systems of dimension 1 or 2 can be plotted")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    witnesses = witnesses or {}
    pts = [tuple(float(c) for c in w) + ((0.0,) if system.dimension == 1 else ()) for w in witnesses.values()]
    x0, x1, y0, y1 = _bounds(pts)
    fig, ax = plt.subplots(figsize=(6, 6))
    for group, style in ((system.arrangement, "-"), (system.cone, ":")):
        for h in group:
            a = [float(c) for c in h.coeffs]
            b = float(h.rhs)
            if system.dimension == 1:
                if a[0]:
                    ax.axvline(b / a[0], linestyle=style, color="k" if style == "-" else "gray")
                continue
            if abs(a[1]) > abs(a[0]):
                xs = [x0, x1]
                ys = [(b - a[0] * x) / a[1] for x in xs]
            else:
                ys = [y0, y1]
                xs = [(b - a[1] * y) / a[0] for y in ys]
            ax.plot(xs, ys, linestyle=style, color="k" if style == "-" else "gray", linewidth=1)
    for sign, p in zip(witnesses, pts):
        ax.annotate(str(sign), p, fontsize=6, ha="center")
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0 if system.dimension == 2 else -1, y1 if system.dimension == 2 else 1)
    fig.savefig(out, format="svg")
    plt.close(fig)

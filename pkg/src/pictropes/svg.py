"""Hand-written SVG for a density histogram with a fitted pdf overlaid.

Output depends only on the inputs (fixed number formatting, no timestamps,
no random ids), so identical inputs give identical bytes.
"""

from __future__ import annotations

from typing import Callable, Optional, Sequence

import numpy as np

WIDTH, HEIGHT = 800, 480
LEFT, RIGHT, TOP, BOTTOM = 70, 20, 40, 60
BAR_FILL = "#4c72b0"
CURVE = "#dd4444"


def _esc(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")


def _f(x: float) -> str:
    return f"{x:.2f}"


def _ticks(lo: float, hi: float, count: int = 5) -> list[float]:
    if hi <= lo:
        return [lo]
    raw = (hi - lo) / count
    mag = 10 ** np.floor(np.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = np.ceil(lo / step) * step
    return [float(v) for v in np.arange(first, hi + step * 1e-9, step)]


def _label(v: float) -> str:
    if abs(v) >= 1 or v == 0:
        return f"{v:g}" if abs(v) < 1e6 else f"{v:.3g}"
    return f"{v:.3g}"


def density_histogram_svg(
    bins: Sequence,
    n: int,
    pdf: Optional[Callable[[np.ndarray], np.ndarray]],
    title: str,
    xlabel: str,
    curve_label: str = "",
) -> str:
    """``bins`` are objects with ``lower``, ``width``, ``count``; bar heights are count/(n*width)."""
    x_lo = float(bins[0].lower)
    x_hi = float(bins[-1].lower + bins[-1].width)
    heights = [b.count / (n * b.width) for b in bins]
    y_hi = max(heights) * 1.15 if heights else 1.0

    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(x):
        return LEFT + (x - x_lo) / (x_hi - x_lo) * pw

    def sy(y):
        return TOP + ph - min(y, y_hi) / y_hi * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" font-size="15">{_esc(title)}</text>',
        f'<g fill="{BAR_FILL}" fill-opacity="0.75">',
    ]
    for b, h in zip(bins, heights):
        if b.count == 0:
            continue
        x0, x1 = sx(b.lower), sx(b.lower + b.width)
        y0 = sy(h)
        out.append(f'<rect x="{_f(x0)}" y="{_f(y0)}" width="{_f(x1 - x0)}" height="{_f(TOP + ph - y0)}"/>')
    out.append("</g>")

    if pdf is not None:
        grid = np.linspace(x_lo, x_hi, 400)
        ys = np.nan_to_num(np.asarray(pdf(grid), dtype=np.float64), nan=0.0, posinf=y_hi)
        pts = " ".join(f"{_f(sx(x))},{_f(sy(y))}" for x, y in zip(grid, ys))
        out.append(f'<polyline fill="none" stroke="{CURVE}" stroke-width="2" points="{pts}"/>')

    # axes
    base = TOP + ph
    out.append(f'<line x1="{LEFT}" y1="{base}" x2="{LEFT + pw}" y2="{base}" stroke="black"/>')
    out.append(f'<line x1="{LEFT}" y1="{TOP}" x2="{LEFT}" y2="{base}" stroke="black"/>')
    for t in _ticks(x_lo, x_hi):
        x = sx(t)
        out.append(f'<line x1="{_f(x)}" y1="{base}" x2="{_f(x)}" y2="{base + 5}" stroke="black"/>')
        out.append(f'<text x="{_f(x)}" y="{base + 18}" text-anchor="middle">{_label(t)}</text>')
    for t in _ticks(0.0, y_hi):
        y = sy(t)
        out.append(f'<line x1="{LEFT - 5}" y1="{_f(y)}" x2="{LEFT}" y2="{_f(y)}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{_f(y + 4)}" text-anchor="end">{_label(t)}</text>')
    out.append(f'<text x="{LEFT + pw / 2:.0f}" y="{HEIGHT - 15}" text-anchor="middle">{_esc(xlabel)}</text>')
    out.append(
        f'<text x="16" y="{TOP + ph / 2:.0f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {TOP + ph / 2:.0f})">density</text>'
    )
    if pdf is not None and curve_label:
        lx = LEFT + pw - 220
        out.append(f'<line x1="{lx}" y1="{TOP + 10}" x2="{lx + 25}" y2="{TOP + 10}" stroke="{CURVE}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 32}" y="{TOP + 14}">{_esc(curve_label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

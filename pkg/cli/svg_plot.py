"""Line charts written as plain SVG text: linear axes with 5 ticks, one polyline
per series and a legend. Every coordinate is printed with a fixed format so that
identical data gives identical bytes.
"""
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from consts import Consts
from util.errors import require

COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f")
TICKS = 5
MARGIN = 60


@dataclass(frozen=True)
class PlotSpec:
    width_px: int = Consts.svg_width
    height_px: int = Consts.svg_height
    title: str = ""
    x_label: str = "t"

    def __post_init__(self):
        require(self.width_px > 2 * MARGIN, f"width_px > {2 * MARGIN} (width_px={self.width_px})")
        require(self.height_px > 2 * MARGIN, f"height_px > {2 * MARGIN} (height_px={self.height_px})")


def _range(values: np.ndarray):
    lo, hi = float(np.min(values)), float(np.max(values))
    if hi == lo:
        pad = 1.0 if lo == 0.0 else abs(lo) * 0.1
        return lo - pad, hi + pad
    return lo, hi


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_svg(spec: PlotSpec, xs: Sequence[float], series: Mapping[str, Sequence[float]]) -> str:
    xs = np.asarray(xs, dtype=float)
    require(xs.size >= 2, "at least 2 x values")
    columns = {label: np.asarray(ys, dtype=float) for label, ys in series.items()}
    for label, ys in columns.items():
        require(ys.shape == xs.shape, f"series {label} matches the x values")
    x_lo, x_hi = _range(xs)
    y_lo, y_hi = _range(np.concatenate(list(columns.values())) if columns else np.zeros(1))
    left, right = MARGIN, spec.width_px - MARGIN
    top, bottom = MARGIN, spec.height_px - MARGIN

    def px(x):
        return left + (x - x_lo) / (x_hi - x_lo) * (right - left)

    def py(y):
        return bottom - (y - y_lo) / (y_hi - y_lo) * (bottom - top)

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width_px}" height="{spec.height_px}" '
           f'viewBox="0 0 {spec.width_px} {spec.height_px}">',
           f'<rect x="0" y="0" width="{spec.width_px}" height="{spec.height_px}" fill="white"/>']
    if spec.title:
        out.append(f'<text x="{spec.width_px / 2:.2f}" y="{top / 2:.2f}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="16">{_escape(spec.title)}</text>')
    out.append(f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>')
    out.append(f'<line x1="{left}" y1="{bottom}" x2="{left}" y2="{top}" stroke="black"/>')
    for i in range(TICKS):
        fx = x_lo + (x_hi - x_lo) * i / (TICKS - 1)
        fy = y_lo + (y_hi - y_lo) * i / (TICKS - 1)
        out.append(f'<line x1="{px(fx):.2f}" y1="{bottom}" x2="{px(fx):.2f}" y2="{bottom + 5}" stroke="black"/>')
        out.append(f'<text x="{px(fx):.2f}" y="{bottom + 20}" text-anchor="middle" font-family="sans-serif" '
                   f'font-size="12">{fx:.3g}</text>')
        out.append(f'<line x1="{left - 5}" y1="{py(fy):.2f}" x2="{left}" y2="{py(fy):.2f}" stroke="black"/>')
        out.append(f'<text x="{left - 8}" y="{py(fy) + 4:.2f}" text-anchor="end" font-family="sans-serif" '
                   f'font-size="12">{fy:.3g}</text>')
    out.append(f'<text x="{(left + right) / 2:.2f}" y="{spec.height_px - 15}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="14">{_escape(spec.x_label)}</text>')
    for i, (label, ys) in enumerate(columns.items()):
        color = COLORS[i % len(COLORS)]
        points = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
        ly = top + 10 + 18 * i
        out.append(f'<line x1="{right - 110}" y1="{ly}" x2="{right - 85}" y2="{ly}" stroke="{color}" '
                   f'stroke-width="2"/>')
        out.append(f'<text x="{right - 80}" y="{ly + 4}" font-family="sans-serif" font-size="12">'
                   f'{_escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

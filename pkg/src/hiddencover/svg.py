"""Deterministic SVG rendering of solution documents.

Output is byte-identical across runs for identical inputs: fixed palette,
fixed formatting (9 significant digits, display only), no timestamps or
generated ids.
"""

from __future__ import annotations

from .geometry import Point
from .formats import SolutionDocument

_PALETTE = ("#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2",
            "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac")


def _fmt(value: float) -> str:
    return f"{value:.9g}"


def render_svg(doc: SolutionDocument) -> str:
    """SVG 1.1 figure: polygon outline, translucent cover pieces, hidden
    points as dots, split point as a cross."""
    pts: list[Point] = list(doc.polygon.vertices)
    for piece in doc.cover.pieces:
        pts.extend(piece.vertices)
    pts.extend(doc.hidden.points)
    if doc.split_point is not None:
        pts.append(doc.split_point)
    xs = [float(p.x) for p in pts]
    ys = [float(-p.y) for p in pts]  # flip y so the figure reads y-up
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    width = max(x_hi - x_lo, 1e-9)
    height = max(y_hi - y_lo, 1e-9)
    margin = 0.05 * max(width, height)
    view = (x_lo - margin, y_lo - margin, width + 2 * margin, height + 2 * margin)
    stroke = max(width, height) / 300.0
    dot = max(width, height) * 0.015

    def path_of(vertices) -> str:
        coords = [f"{_fmt(float(v.x))},{_fmt(float(-v.y))}" for v in vertices]
        return "M " + " L ".join(coords) + " Z"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(view[0])} {_fmt(view[1])} {_fmt(view[2])} {_fmt(view[3])}">',
    ]
    for i, piece in enumerate(doc.cover.pieces):
        color = _PALETTE[i % len(_PALETTE)]
        lines.append(f'  <path class="piece" d="{path_of(piece.vertices)}" '
                     f'fill="{color}" fill-opacity="0.45" stroke="{color}" '
                     f'stroke-width="{_fmt(stroke / 2)}"/>')
    lines.append(f'  <path class="outline" d="{path_of(doc.polygon.vertices)}" '
                 f'fill="none" stroke="#000000" stroke-width="{_fmt(stroke)}"/>')
    for p in doc.hidden.points:
        lines.append(f'  <circle class="hidden" cx="{_fmt(float(p.x))}" '
                     f'cy="{_fmt(float(-p.y))}" r="{_fmt(dot)}" fill="#d62728"/>')
    if doc.split_point is not None:
        p = doc.split_point
        cx, cy = float(p.x), float(-p.y)
        d = dot * 1.4
        lines.append(f'  <path class="split" d="M {_fmt(cx - d)},{_fmt(cy - d)} '
                     f'L {_fmt(cx + d)},{_fmt(cy + d)} M {_fmt(cx - d)},{_fmt(cy + d)} '
                     f'L {_fmt(cx + d)},{_fmt(cy - d)}" stroke="#1f1f1f" '
                     f'stroke-width="{_fmt(stroke)}" fill="none"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"

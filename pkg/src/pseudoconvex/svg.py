"""Byte-stable SVG drawings of partitions.

The output depends only on the partition (points, parts, branch) and the
optional cut lines, so re-rendering the same JSON gives identical bytes.
Coordinates are mapped into a fixed canvas with y pointing up.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .partition import Partition

WIDTH = 640
HEIGHT = 680
MARGIN = 20
PALETTE = ("#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999",
           "#66c2a5", "#fc8d62", "#8da0cb", "#e78ac3")


class _Frame:
    def __init__(self, coords):
        xs = [c[0] for c in coords] or [0]
        ys = [c[1] for c in coords] or [0]
        self.x0, self.y0 = min(xs), min(ys)
        span = max(max(xs) - self.x0, max(ys) - self.y0, 1)
        self.scale = Fraction(WIDTH - 2 * MARGIN, span)

    def xy(self, x, y) -> tuple[str, str]:
        px = MARGIN + (Fraction(x) - self.x0) * self.scale
        py = (WIDTH - MARGIN) - (Fraction(y) - self.y0) * self.scale
        return _num(px), _num(py)


def _num(v: Fraction) -> str:
    return f"{float(v):.2f}"


def _cut_segment(direction, offset, frame: _Frame, coords):
    """Clip the line direction . x = offset to the points' bounding box."""
    dx, dy = direction
    xs = [c[0] for c in coords]
    ys = [c[1] for c in coords]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    if dy == 0:
        x = Fraction(offset, dx)
        return (x, lo_y), (x, hi_y)
    a = (lo_x, (offset - dx * lo_x) / Fraction(dy))
    b = (hi_x, (offset - dx * hi_x) / Fraction(dy))
    return a, b


def render_svg(P: Partition, cut_lines=(), direction=None) -> str:
    coords = P.points.coords
    frame = _Frame(coords)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for k, part in enumerate(P.parts):
        colour = PALETTE[k % len(PALETTE)]
        ring = [frame.xy(*coords[i]) for i in part.boundary()]
        pts = " ".join(f"{x},{y}" for x, y in ring)
        if len(ring) >= 3:
            out.append(f'<polygon points="{pts}" fill="{colour}" fill-opacity="0.35" '
                       f'stroke="{colour}" stroke-width="1.5" data-kind="{part.kind.value}"/>')
        elif len(ring) == 2:
            out.append(f'<polyline points="{pts}" fill="none" stroke="{colour}" stroke-width="2" '
                       f'data-kind="{part.kind.value}"/>')
    if direction is not None and coords:
        for offset in cut_lines:
            (ax, ay), (bx, by) = _cut_segment(direction, offset, frame, coords)
            (x1, y1), (x2, y2) = frame.xy(ax, ay), frame.xy(bx, by)
            out.append(f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" '
                       f'stroke-dasharray="6,4" stroke-width="1"/>')
    for i, (x, y) in enumerate(coords):
        px, py = frame.xy(x, y)
        out.append(f'<circle cx="{px}" cy="{py}" r="3" fill="black"><title>{i}</title></circle>')
    caption = escape(f"{P.branch} - {len(P.parts)} parts, n={len(coords)}")
    out.append(f'<text x="{MARGIN}" y="{HEIGHT - 12}" font-family="monospace" font-size="14">{caption}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

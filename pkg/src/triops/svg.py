"""Deterministic SVG rendering of triangle sequences.

Output is a pure function of the input triples: same input, same bytes.
Triangles are drawn as unfilled polygons with strokes cycling through hues;
the y axis is flipped so the picture matches plane coordinates.
"""

from __future__ import annotations

import colorsys
from dataclasses import dataclass

from .errors import InvalidParameters
from .geometry import TriangleTriple

_PAD_FRACTION = 0.05


@dataclass(frozen=True)
class SvgScene:
    """Polygons in SVG (y-down) coordinates plus the padded viewbox."""

    polygons: tuple[tuple[tuple[float, float], ...], ...]
    viewbox: tuple[float, float, float, float]  # min_x, min_y, width, height


def scene_from_triples(triples) -> SvgScene:
    triples = list(triples)
    if not triples:
        raise InvalidParameters("nothing to render")
    polygons = []
    xs, ys = [], []
    for t in triples:
        pts = tuple((z.real, -z.imag) for z in t.vertices)  # flip to y-down
        polygons.append(pts)
        for x, y in pts:
            xs.append(x)
            ys.append(y)
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    span = max(max_x - min_x, max_y - min_y, 1e-12)
    pad = _PAD_FRACTION * span
    return SvgScene(
        polygons=tuple(polygons),
        viewbox=(min_x - pad, min_y - pad, (max_x - min_x) + 2 * pad, (max_y - min_y) + 2 * pad),
    )


def _hex_color(index: int, count: int) -> str:
    hue = (index / max(count, 1)) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.45, 0.85)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def _num(x: float) -> str:
    return format(x, ".10g")


def render_svg(scene: SvgScene) -> bytes:
    min_x, min_y, w, h = scene.viewbox
    stroke_width = 0.006 * max(w, h)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_num(min_x)} {_num(min_y)} {_num(w)} {_num(h)}">',
    ]
    n = len(scene.polygons)
    for i, pts in enumerate(scene.polygons):
        coords = " ".join(f"{_num(x)},{_num(y)}" for x, y in pts)
        lines.append(
            f'<polygon points="{coords}" fill="none" '
            f'stroke="{_hex_color(i, n)}" stroke-width="{_num(stroke_width)}"/>'
        )
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def render_triples(triples) -> bytes:
    return render_svg(scene_from_triples(triples))

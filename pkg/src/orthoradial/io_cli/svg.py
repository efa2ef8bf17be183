"""SVG rendering of drawings: concentric (polar) or unrolled (cylinder)."""

from __future__ import annotations

import math

from ..compaction import OrthoRadialDrawing

R_OUT = 200.0
MARGIN = 20.0


def radius(ring: int, max_ring: int, r_out: float = R_OUT) -> float:
    """Ring 0 on the outer circle; the innermost ring stays clear of the center."""
    return r_out - ring * r_out / (max_ring + 2)


def _header(w: float, h: float) -> list[str]:
    return [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1f}" height="{h:.1f}" '
            f'viewBox="0 0 {w:.1f} {h:.1f}">',
            '<g fill="none" stroke="black" stroke-width="1.5">']


def polar_svg(drawing: OrthoRadialDrawing) -> str:
    c = R_OUT + MARGIN
    top = max((drawing.ring[v] for v in drawing.vertices), default=0)

    def point(v: int) -> tuple[float, float]:
        r = radius(drawing.ring[v], top)
        a = 2 * math.pi * drawing.tick[v] / drawing.phi
        return c + r * math.cos(a), c + r * math.sin(a)  # y points down, so this runs clockwise

    out = _header(2 * c, 2 * c)
    out.append(f'<circle cx="{c:.2f}" cy="{c:.2f}" r="2" fill="gray" stroke="none"/>')
    for e in drawing.edges:
        (x0, y0), (x1, y1) = point(e.u), point(e.v)
        if e.kind == "radial":
            out.append(f'<line x1="{x0:.2f}" y1="{y0:.2f}" x2="{x1:.2f}" y2="{y1:.2f}"/>')
        else:
            r = radius(drawing.ring[e.u], top)
            large = 1 if 2 * e.extent > drawing.phi else 0
            out.append(f'<path d="M {x0:.2f} {y0:.2f} A {r:.2f} {r:.2f} 0 {large} 1 {x1:.2f} {y1:.2f}"/>')
    out.append("</g>")
    for v in drawing.vertices:
        x, y = point(v)
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def cylinder_svg(drawing: OrthoRadialDrawing, step: float = 20.0) -> str:
    top = max((drawing.ring[v] for v in drawing.vertices), default=0)
    w, h = drawing.phi * step + 2 * MARGIN, top * step + 2 * MARGIN

    def x(t: float) -> float:
        return MARGIN + t * step

    def y(r: float) -> float:
        return MARGIN + r * step

    out = _header(w, h)
    out.append(f'<rect x="{x(0):.2f}" y="{y(0):.2f}" width="{drawing.phi * step:.2f}" '
               f'height="{top * step:.2f}" stroke="lightgray" stroke-dasharray="4 4"/>')
    for e in drawing.edges:
        r0, t0 = drawing.ring[e.u], drawing.tick[e.u]
        if e.kind == "radial":
            out.append(f'<line x1="{x(t0):.2f}" y1="{y(r0):.2f}" x2="{x(t0):.2f}" '
                       f'y2="{y(drawing.ring[e.v]):.2f}"/>')
            continue
        end = t0 + e.extent
        if end <= drawing.phi:
            d = f"M {x(t0):.2f} {y(r0):.2f} H {x(end):.2f}"
        else:  # wraps around the seam: two pieces, one element
            d = (f"M {x(t0):.2f} {y(r0):.2f} H {x(drawing.phi):.2f} "
                 f"M {x(0):.2f} {y(r0):.2f} H {x(end - drawing.phi):.2f}")
        out.append(f'<path d="{d}"/>')
    out.append("</g>")
    for v in drawing.vertices:
        out.append(f'<circle cx="{x(drawing.tick[v]):.2f}" cy="{y(drawing.ring[v]):.2f}" '
                   f'r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(drawing: OrthoRadialDrawing, view: str) -> str:
    if view == "polar":
        return polar_svg(drawing)
    if view == "cylinder":
        return cylinder_svg(drawing)
    raise ValueError(f"unknown view {view!r}")

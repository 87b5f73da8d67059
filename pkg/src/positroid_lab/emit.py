"""Write-only text renderings: Graphviz DOT for Johnson graphs, SVG for chord diagrams."""

from __future__ import annotations

import math

from .chordclass import DecoratedPermutation
from .posbij import Positroid
from .smoothgeo import johnson_graph

__all__ = ["johnson_dot", "chord_svg"]


def _label(J) -> str:
    return "".join(map(str, J)) if max(J, default=0) < 10 else ",".join(map(str, J))


def johnson_dot(M: Positroid, name: str = "J_M") -> str:
    """Induced Johnson graph on the bases of ``M``; non-bases are omitted."""
    G = johnson_graph(M)
    lines = [f"graph {name} {{", "  node [shape=ellipse];"]
    for J in M.sorted_bases():
        lines.append(f'  "{_label(J)}" [degree={len(G.adjacency[J])}];')
    for I, J in G.edges():
        lines.append(f'  "{_label(I)}" -- "{_label(J)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def chord_svg(wd: DecoratedPermutation, size: int = 320) -> str:
    """Vertices clockwise from the top; arcs bow toward the centre, loops are small circles."""
    n = wd.n
    c = size / 2
    radius = size * 0.38
    pts = {}
    for i in range(1, n + 1):
        theta = 2 * math.pi * (i - 1) / max(n, 1)
        pts[i] = (c + radius * math.sin(theta), c - radius * math.cos(theta))

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
        "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>",
        f'<circle cx="{c:.2f}" cy="{c:.2f}" r="{radius:.2f}" fill="none" stroke="#bbb"/>',
    ]
    for i in range(1, n + 1):
        j = wd(i)
        x1, y1 = pts[i]
        if j == i:
            orient = "cw" if i in wd.clockwise else "ccw"
            # loop sits just inside the vertex; sweep flag encodes orientation
            dx, dy = c - x1, c - y1
            d = math.hypot(dx, dy) or 1.0
            lx, ly = x1 + 12 * dx / d, y1 + 12 * dy / d
            sweep = 1 if orient == "cw" else 0
            out.append(f'<circle class="loop {orient}" cx="{lx:.2f}" cy="{ly:.2f}" r="10" '
                       f'fill="none" stroke="black"/>')
            out.append(f'<path class="loop-dir {orient}" d="M {lx - 10:.2f} {ly:.2f} '
                       f'A 10 10 0 0 {sweep} {lx:.2f} {ly - 10:.2f}" fill="none" '
                       f'stroke="black" marker-end="url(#head)"/>')
            continue
        x2, y2 = pts[j]
        mx, my = (x1 + x2) / 2, (y1 + y2) / 2
        qx, qy = mx + 0.35 * (c - mx), my + 0.35 * (c - my)
        out.append(f'<path class="arc" data-tail="{i}" data-head="{j}" '
                   f'd="M {x1:.2f} {y1:.2f} Q {qx:.2f} {qy:.2f} {x2:.2f} {y2:.2f}" '
                   f'fill="none" stroke="black" marker-end="url(#head)"/>')
    for i, (x, y) in pts.items():
        out.append(f'<circle class="vertex" cx="{x:.2f}" cy="{y:.2f}" r="3"/>')
        tx, ty = c + (x - c) * 1.15, c + (y - c) * 1.15
        out.append(f'<text x="{tx:.2f}" y="{ty:.2f}" text-anchor="middle" '
                   f'dominant-baseline="middle" font-size="12">{i}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

"""SVG emission: unit edges as segments, lattice components color-coded,
boundary highlighted.  Pure output target, no interactivity."""

from __future__ import annotations

from .graph import MatchstickGraph, _norm_edge, boundary, connectivity

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd",
           "#ff7f0e", "#17becf", "#8c564b", "#e377c2")


def render_svg(g: MatchstickGraph, report=None, scale: float = 48.0) -> str:
    """Render a graph to an SVG document string.

    When a DecompositionReport is given, edges are colored by their lattice
    component; for 2-connected graphs the outer boundary is overdrawn thicker.
    """
    pos = g.positions()
    xs = [p[0] for p in pos.values()]
    ys = [p[1] for p in pos.values()]
    pad = 0.6
    minx, maxx = min(xs) - pad, max(xs) + pad
    miny, maxy = min(ys) - pad, max(ys) + pad
    width = (maxx - minx) * scale
    height = (maxy - miny) * scale

    def pt(v):
        x, y = pos[v]
        return ((x - minx) * scale, (maxy - y) * scale)  # flip y for SVG

    edge_color = {}
    if report is not None:
        for ci, comp in enumerate(report.components):
            color = PALETTE[ci % len(PALETTE)]
            for e in comp.edges:
                edge_color.setdefault(e, color)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.1f}" height="{height:.1f}" '
        f'viewBox="0 0 {width:.1f} {height:.1f}">',
    ]
    for a, b in sorted(g.edges):
        (x1, y1), (x2, y2) = pt(a), pt(b)
        color = edge_color.get(_norm_edge(a, b), "#888888")
        lines.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                     f'stroke="{color}" stroke-width="2"/>')
    if g.validated and connectivity(g).two_connected:
        cycle, _ = boundary(g)
        for i in range(len(cycle)):
            (x1, y1), (x2, y2) = pt(cycle[i]), pt(cycle[(i + 1) % len(cycle)])
            lines.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}" '
                         f'stroke="#000000" stroke-width="3.5" stroke-linecap="round"/>')
    for v in sorted(pos):
        x, y = pt(v)
        lines.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3" fill="#222222"/>')
    lines.append("</svg>")
    return "\n".join(lines)

"""SVG rendering of moment polytopes.

Moment-plane coordinates are scaled by ``scale`` units per lattice step
with the y-axis flipped. The drawing holds one ``<path>`` for the polygon,
one ``<circle>`` per lattice point of the closed polygon, a dashed
``<rect>`` for the bounding rectangle and a ``<text>`` label at each cut
corner.
"""

from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from fractions import Fraction

from .geometry import lattice_points
from .pentagon import MomentPolytope

SVG_NS = "http://www.w3.org/2000/svg"


def _num(q) -> str:
    # display coordinates only; exact values live in the JSON report
    return f"{float(q):.4f}".rstrip("0").rstrip(".")


def render_polytope_svg(mp: MomentPolytope, scale: int = 40) -> str:
    rect = mp.rectangle
    xmin, ymin = rect["LL"].x, rect["LL"].y
    xmax, ymax = rect["HH"].x, rect["HH"].y
    margin = Fraction(1)
    width = (xmax - xmin + 2 * margin) * scale
    height = (ymax - ymin + 2 * margin) * scale

    def sx(x):
        return (x - xmin + margin) * scale

    def sy(y):
        return (ymax - y + margin) * scale

    root = ET.Element(
        "svg",
        {
            "xmlns": SVG_NS,
            "version": "1.1",
            "width": _num(width),
            "height": _num(height),
            "viewBox": f"0 0 {_num(width)} {_num(height)}",
        },
    )
    ET.SubElement(
        root,
        "rect",
        {
            "x": _num(sx(xmin)),
            "y": _num(sy(ymax)),
            "width": _num((xmax - xmin) * scale),
            "height": _num((ymax - ymin) * scale),
            "fill": "none",
            "stroke": "#999999",
            "stroke-dasharray": "4 3",
        },
    )
    d = " ".join(
        f"{'M' if i == 0 else 'L'} {_num(sx(v.x))} {_num(sy(v.y))}"
        for i, v in enumerate(mp.polygon.vertices)
    )
    ET.SubElement(
        root,
        "path",
        {"class": "polygon", "d": d + " Z", "fill": "#cfe3f5", "stroke": "#1f4e79", "stroke-width": "2"},
    )
    r = _num(Fraction(scale, 10))
    for p in lattice_points(mp.polygon):
        ET.SubElement(
            root,
            "circle",
            {"class": "lattice", "cx": _num(sx(p.x)), "cy": _num(sy(p.y)), "r": r, "fill": "#222222"},
        )
    for name in sorted(mp.cut_corners):
        c = rect[name]
        dx = -1 if name[0] == "L" else 1
        dy = -1 if name[1] == "L" else 1
        ET.SubElement(
            root,
            "text",
            {
                "class": "cut-corner",
                "x": _num(sx(c.x) + dx * scale * Fraction(2, 5)),
                "y": _num(sy(c.y) - dy * scale * Fraction(2, 5)),
                "text-anchor": "middle",
                "font-size": _num(math.ceil(scale * 0.3)),
            },
        ).text = f"{name} cut"
    return ET.tostring(root, encoding="unicode", xml_declaration=True)

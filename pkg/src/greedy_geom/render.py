"""Deterministic SVG rendering of a Greedy execution.

Accesses are filled squares, touches filled circles, initial-tree points
hollow circles; a dashed line marks t = 0.
"""
from __future__ import annotations

import xml.etree.ElementTree as ET

from greedy_geom.engine.model import ExecutionTrace, InitialTree

CELL = 24
MARGIN = 48
MARK = 5


def render_svg(trace: ExecutionTrace, init: InitialTree) -> str:
    n = trace.n
    t_min = min((p.time for p in init.points), default=0)
    t_min = min(t_min, 0)
    t_max = max(n, 1)
    max_key = max([n] + [p.key for p in init.points])
    width = 2 * MARGIN + (max_key + 1) * CELL
    height = 2 * MARGIN + (t_max - t_min + 1) * CELL

    def px(key):
        return MARGIN + key * CELL

    def py(time):
        return MARGIN + (t_max - time + 1) * CELL - CELL // 2

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                     width=str(width), height=str(height),
                     viewBox=f"0 0 {width} {height}")
    axis_y = height - MARGIN + CELL // 2
    axes = ET.SubElement(svg, "g", stroke="black", **{"stroke-width": "1"})
    ET.SubElement(axes, "line", x1=str(MARGIN), y1=str(axis_y), x2=str(width - MARGIN // 2), y2=str(axis_y))
    ET.SubElement(axes, "line", x1=str(MARGIN), y1=str(axis_y), x2=str(MARGIN), y2=str(MARGIN // 2))
    label = ET.SubElement(svg, "text", x=str(width - MARGIN // 2), y=str(axis_y + 20),
                          **{"text-anchor": "end", "font-size": "12"})
    label.text = "Key"
    label = ET.SubElement(svg, "text", x=str(MARGIN - 8), y=str(MARGIN // 2),
                          **{"text-anchor": "end", "font-size": "12"})
    label.text = "Time"
    ET.SubElement(svg, "line", {"class": "t0", "x1": str(MARGIN // 2), "y1": str(py(0)),
                                "x2": str(width - MARGIN // 2), "y2": str(py(0)),
                                "stroke": "gray", "stroke-dasharray": "4 3"})

    for p in sorted(init.points, key=lambda p: (p.time, p.key)):
        ET.SubElement(svg, "circle", {"class": "initial", "cx": str(px(p.key)), "cy": str(py(p.time)),
                                      "r": str(MARK), "fill": "none", "stroke": "blue"})
    for p in trace.touch_points():
        ET.SubElement(svg, "circle", {"class": "touch", "cx": str(px(p.key)), "cy": str(py(p.time)),
                                      "r": str(MARK), "fill": "blue"})
    for p in trace.access_points():
        ET.SubElement(svg, "rect", {"class": "access", "x": str(px(p.key) - MARK), "y": str(py(p.time) - MARK),
                                    "width": str(2 * MARK), "height": str(2 * MARK),
                                    "fill": "red", "stroke": "black"})
    return ET.tostring(svg, encoding="unicode") + "\n"

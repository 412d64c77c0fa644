"""Static SVG pictures of rank-2 affine Coxeter complexes."""
from __future__ import annotations

import math
import xml.etree.ElementTree as ET
from typing import Iterable, Optional

from .affine_coxeter import alcove_vertices, cross, fundamental_alcove
from .convexity import a_type_set, dconv_hull
from .galleries import Gallery
from .root_system import RootSystem, Vector


class RenderError(ValueError):
    pass


def _basis(rs: RootSystem):
    # Euclidean images of alpha_1, alpha_2 from the Gram matrix
    g11 = float(rs.form((1, 0), (1, 0)))
    g12 = float(rs.form((1, 0), (0, 1)))
    g22 = float(rs.form((0, 1), (0, 1)))
    a = math.sqrt(g11)
    return (a, 0.0), (g12 / a, math.sqrt(g22 - (g12 / a) ** 2))


class _Canvas:
    def __init__(self, rs, extent, size=640):
        self.e1, self.e2 = _basis(rs)
        self.size = size
        self.scale = (size / 2 - 20) / extent
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            width=f"{size}px",
            height=f"{size}px",
            viewBox=f"0 0 {size} {size}",
        )

    def xy(self, v):
        x = float(v[0]) * self.e1[0] + float(v[1]) * self.e2[0]
        y = float(v[0]) * self.e1[1] + float(v[1]) * self.e2[1]
        c = self.size / 2
        return round(c + self.scale * x, 2), round(c - self.scale * y, 2)

    def group(self, name, **style):
        return ET.SubElement(self.root, "g", id=name, **style)

    def polygon(self, parent, pts, **style):
        s = " ".join(f"{x},{y}" for x, y in map(self.xy, pts))
        return ET.SubElement(parent, "polygon", points=s, **style)

    def dot(self, parent, v, r, **style):
        x, y = self.xy(v)
        return ET.SubElement(parent, "circle", cx=str(x), cy=str(y), r=str(r), **style)


def _norm(canvas, v):
    x, y = canvas.xy(v)
    c = canvas.size / 2
    return math.hypot(x - c, y - c) / canvas.scale


def _alcoves_within(rs, canvas, extent):
    """Flood fill from the fundamental alcove over alcoves inside the disc."""
    start = fundamental_alcove(rs)
    seen = {start}
    stack = [start]
    out = []
    while stack:
        a = stack.pop()
        if max(_norm(canvas, v) for v in alcove_vertices(rs, a)) > extent:
            continue
        out.append(a)
        for g in range(rs.rank + 1):
            b = cross(rs, a, g)
            if b not in seen:
                seen.add(b)
                stack.append(b)
    return sorted(out)


def render_svg(
    rs: RootSystem,
    lam: Vector,
    endpoints: Iterable[Vector] = (),
    gallery: Optional[Gallery] = None,
    marks: Iterable[Vector] = (),
    size: int = 640,
) -> str:
    """SVG text showing the tiling, ``W.lam``, its dual hull, and gallery endpoints."""
    if rs.rank != 2:
        raise RenderError(f"rendering needs rank 2, got {rs.kind}")
    lam = tuple(lam)
    marks = list(marks)
    orbit = sorted(rs.weyl_orbit(lam))
    probe = _Canvas(rs, 1.0, size)
    extent = max([_norm(probe, v) for v in orbit + marks] + [1.0]) * 1.25
    cv = _Canvas(rs, extent, size)

    tiling = cv.group("tiling", fill="none", stroke="#bbbbbb")
    tiling.set("stroke-width", "0.6")
    for a in _alcoves_within(rs, cv, extent * 1.05):
        verts = alcove_vertices(rs, a)
        style = {"fill": "#e8eefc"} if not any(a.levels) else {}
        cv.polygon(tiling, verts, **style)

    hull = dconv_hull(rs, lam)
    box = cv.group("dual-hull", fill="none", stroke="#3465a4")
    box.set("stroke-dasharray", "4 3")
    corners = [(hull.lower[0], hull.lower[1]), (hull.upper[0], hull.lower[1]),
               (hull.upper[0], hull.upper[1]), (hull.lower[0], hull.upper[1])]
    cv.polygon(box, corners)
    if len(orbit) > 2:
        ring = sorted(orbit, key=lambda v: math.atan2(cv.xy(v)[1] - cv.size / 2, cv.xy(v)[0] - cv.size / 2))
        g = cv.group("orbit-hull", fill="#3465a4", stroke="#3465a4")
        g.set("fill-opacity", "0.08")
        cv.polygon(g, ring)

    if gallery is not None and gallery.first_alcove is not None:
        path = cv.group("gallery", fill="none", stroke="#4e9a06")
        path.set("stroke-width", "2")
        pts = [gallery.source]
        for a in gallery.alcoves:
            verts = alcove_vertices(rs, a)
            pts.append(tuple(sum(v[i] for v in verts) / 3 for i in range(2)))
        pts.append(gallery.target)
        ET.SubElement(path, "polyline", points=" ".join(f"{x},{y}" for x, y in map(cv.xy, pts)))

    inside = a_type_set(rs, lam) if all(float(a).is_integer() for a in lam) else set()
    ends = cv.group("endpoints", fill="#cc0000")
    for v in sorted(set(endpoints)):
        cv.dot(ends, v, 3)
    pts = cv.group("orbit", fill="#000000")
    for v in orbit:
        cv.dot(pts, v, 4.5)
    if marks:
        mk = cv.group("marks", fill="none", stroke="#f57900")
        mk.set("stroke-width", "2")
        for v in marks:
            cv.dot(mk, v, 7)
            x, y = cv.xy(v)
            left = x > 0.7 * cv.size
            label = ET.SubElement(mk, "text", x=str(x - 9 if left else x + 9), y=str(y - 9),
                                  fill="#f57900", stroke="none")
            label.set("text-anchor", "end" if left else "start")
            label.text = ("in" if tuple(v) in inside else "not in") + " dual hull"
    ET.indent(cv.root)
    return ET.tostring(cv.root, encoding="unicode")

"""Half-twists as exact piecewise-affine homeomorphisms.

The support of the twist about p_i, p_{i+1} is the L1 ball (a square turned
45 degrees) of radius 5g/4 around their midpoint c, g being the puncture gap.
Inside radius 3g/4 the map is the rotation by pi about c, which swaps the two
punctures.  The annuli 3g/4..g and g..5g/4 are triangulated and mapped
affinely so that the square of radius g turns a quarter and the outer one
stays fixed.  Vertex ``m`` of a square (direction m * 90 degrees) at shift
``s`` goes to vertex ``m + s``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .disc import DiscModel, PLArc, Tag, disc_model
from .geometry import Point, dedupe, orient, point_in_triangle, segment_crossing_params

_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))


class _Twist:
    def __init__(self, model: DiscModel, i: int, sign: int):
        g = model.gap
        pi, pj = model.p(i), model.p(i + 1)
        self.c = ((pi[0] + pj[0]) / 2, (pi[1] + pj[1]) / 2)
        self.radii = (g * Fraction(3, 4), g, g * Fraction(5, 4))
        self.shifts = (2 * sign, sign, 0)
        self.rot = 2 * sign
        # (domain triangle, image triangle) per ring
        self.rings: list[list[tuple[tuple[Point, ...], tuple[Point, ...]]]] = []
        edges: list[tuple[Point, Point]] = []
        for r in self.radii:
            sq = [self._vertex(r, m) for m in range(4)]
            edges.extend((sq[m], sq[(m + 1) % 4]) for m in range(4))
        for m in range(4):
            edges.append((self._vertex(self.radii[0], m), self._vertex(self.radii[2], m)))
        for ring in range(2):
            r_in, r_out = self.radii[ring], self.radii[ring + 1]
            s_in, s_out = self.shifts[ring], self.shifts[ring + 1]
            tris = []
            for m in range(4):
                a0, a1 = (m, r_in), (m + 1, r_in)
                b0, b1 = (m, r_out), (m + 1, r_out)
                if s_in - s_out == 1:
                    pair = ((a0, a1, b1), (a0, b1, b0))
                    diag = (a0, b1)
                else:
                    pair = ((a0, a1, b0), (a1, b1, b0))
                    diag = (a1, b0)
                edges.append(tuple(self._vertex(r, k) for k, r in diag))
                for tri in pair:
                    dom = tuple(self._vertex(r, k) for k, r in tri)
                    img = tuple(self._vertex(r, k + (s_in if r == r_in else s_out)) for k, r in tri)
                    if orient(*dom) != orient(*img):
                        raise AssertionError("twist triangulation folds")
                    tris.append((dom, img))
            self.rings.append(tris)
        self.edges = edges
        rr = self.radii[2]
        self.box = (self.c[0] - rr, self.c[0] + rr, self.c[1] - rr, self.c[1] + rr)

    def _vertex(self, r: Fraction, m: int) -> Point:
        dx, dy = _DIRS[m % 4]
        return (self.c[0] + r * dx, self.c[1] + r * dy)

    def _l1(self, p: Point) -> Fraction:
        return abs(p[0] - self.c[0]) + abs(p[1] - self.c[1])

    def locate(self, p: Point):
        """Region holding p: None (outside the support), "rot", or a triangle pair."""
        rho = self._l1(p)
        if rho >= self.radii[2]:
            return None
        if rho <= self.radii[0]:
            return "rot"
        ring = 0 if rho <= self.radii[1] else 1
        for dom, img in self.rings[ring]:
            if point_in_triangle(p, *dom):
                return (dom, img)
        raise AssertionError("point fell outside the twist triangulation")

    def apply(self, region, p: Point) -> Point:
        if region is None:
            return p
        cx, cy = self.c
        if region == "rot":
            dx, dy = p[0] - cx, p[1] - cy
            for _ in range(self.rot % 4):
                dx, dy = -dy, dx
            return (cx + dx, cy + dy)
        (p0, p1, p2), (q0, q1, q2) = region
        ux, uy = p1[0] - p0[0], p1[1] - p0[1]
        vx, vy = p2[0] - p0[0], p2[1] - p0[1]
        wx, wy = p[0] - p0[0], p[1] - p0[1]
        det = ux * vy - uy * vx
        l1 = (wx * vy - wy * vx) / det
        l2 = (ux * wy - uy * wx) / det
        return (q0[0] + l1 * (q1[0] - q0[0]) + l2 * (q2[0] - q0[0]),
                q0[1] + l1 * (q1[1] - q0[1]) + l2 * (q2[1] - q0[1]))

    def map_point(self, p: Point) -> Point:
        return self.apply(self.locate(p), p)

    def _touches_box(self, a: Point, b: Point) -> bool:
        x0, x1, y0, y1 = self.box
        return not (max(a[0], b[0]) < x0 or min(a[0], b[0]) > x1
                    or max(a[1], b[1]) < y0 or min(a[1], b[1]) > y1)

    def map_polyline(self, verts) -> list[Point]:
        out: list[Point] = [self.map_point(verts[0])]
        for a, b in zip(verts, verts[1:]):
            if not self._touches_box(a, b):
                out.append(b)
                continue
            params = {Fraction(0), Fraction(1)}
            for e0, e1 in self.edges:
                params.update(segment_crossing_params(a, b, e0, e1))
            cuts = sorted(params)
            for s0, s1 in zip(cuts, cuts[1:]):
                if s0 == s1:
                    continue
                p0 = (a[0] + (b[0] - a[0]) * s0, a[1] + (b[1] - a[1]) * s0)
                p1 = (a[0] + (b[0] - a[0]) * s1, a[1] + (b[1] - a[1]) * s1)
                mid = ((p0[0] + p1[0]) / 2, (p0[1] + p1[1]) / 2)
                region = self.locate(mid)
                out.append(self.apply(region, p1))
        return dedupe(out)


@lru_cache(maxsize=None)
def _twist(n: int, i: int, sign: int) -> _Twist:
    return _Twist(disc_model(n), i, sign)


def twist_for(model: DiscModel, i: int, sign: int) -> _Twist:
    if not 1 <= i <= model.n - 1:
        raise ValueError(f"generator index {i} out of range for n={model.n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    # the model is determined by n, so twists are shared between instances
    return _twist(model.n, i, sign)


def map_tag(tag: Tag, i: int) -> Tag:
    if tag is None or tag[0] != "p":
        return tag
    k = tag[1]
    if k == i:
        return ("p", i + 1)
    if k == i + 1:
        return ("p", i)
    return tag


def map_point(model: DiscModel, p: Point, i: int, sign: int) -> Point:
    return twist_for(model, i, sign).map_point(p)


def twist_arc_raw(model: DiscModel, arc: PLArc, i: int, sign: int) -> PLArc:
    """Image of ``arc`` under the half-twist, without simplification."""
    tw = twist_for(model, i, sign)
    verts = tw.map_polyline(arc.vertices)
    return PLArc(tuple(verts), map_tag(arc.start, i), map_tag(arc.end, i))


def support_contains(model: DiscModel, p: Point, i: int) -> Optional[bool]:
    tw = twist_for(model, i, 1)
    return tw._l1(p) < tw.radii[2]

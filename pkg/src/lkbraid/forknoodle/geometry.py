"""Exact planar predicates on rational points.

Points are pairs of :class:`fractions.Fraction`.  Nothing here uses floating
point; every predicate is a sign of an exact determinant.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Point = tuple[Fraction, Fraction]


def pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def sub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def add(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def scale(a: Point, s) -> Point:
    return (a[0] * s, a[1] * s)


def lerp(a: Point, b: Point, s) -> Point:
    return (a[0] + (b[0] - a[0]) * s, a[1] + (b[1] - a[1]) * s)


def cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


# Coordinates stay inside the unit disc, so a float determinant is off by far
# less than this; only near-degenerate triples fall through to exact integers.
_FILTER = 1e-11


def orient(a: Point, b: Point, c: Point) -> int:
    ax, ay = a
    bx, by = b
    cx, cy = c
    fax, fay = float(ax), float(ay)
    d = (float(bx) - fax) * (float(cy) - fay) - (float(by) - fay) * (float(cx) - fax)
    if d > _FILTER:
        return 1
    if d < -_FILTER:
        return -1
    return _orient_exact(ax, ay, bx, by, cx, cy)


def _orient_exact(ax, ay, bx, by, cx, cy) -> int:
    # (bx-ax)(cy-ay) - (by-ay)(cx-ax) over positive denominators, no gcds
    axn, axd = ax.numerator, ax.denominator
    ayn, ayd = ay.numerator, ay.denominator
    n1, d1 = bx.numerator * axd - axn * bx.denominator, bx.denominator * axd
    n2, d2 = cy.numerator * ayd - ayn * cy.denominator, cy.denominator * ayd
    n3, d3 = by.numerator * ayd - ayn * by.denominator, by.denominator * ayd
    n4, d4 = cx.numerator * axd - axn * cx.denominator, cx.denominator * axd
    v = n1 * n2 * d3 * d4 - n3 * n4 * d1 * d2
    return (v > 0) - (v < 0)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def linf_normalize(v: Point) -> Point:
    m = max(abs(v[0]), abs(v[1]))
    if m == 0:
        raise ValueError("zero vector")
    return (v[0] / m, v[1] / m)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p lies on the closed segment ab."""
    if orient(a, b, p) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _bbox_disjoint(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Boxes certainly disjoint (a float test with slack; False may be a false alarm)."""
    ax, ay, bx, by = float(a[0]), float(a[1]), float(b[0]), float(b[1])
    cx, cy, dx, dy = float(c[0]), float(c[1]), float(d[0]), float(d[1])
    e = _FILTER
    return (max(ax, bx) + e < min(cx, dx) or max(cx, dx) + e < min(ax, bx)
            or max(ay, by) + e < min(cy, dy) or max(cy, dy) + e < min(ay, by))


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed segments ab and cd share at least one point."""
    if _bbox_disjoint(a, b, c, d):
        return False
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4 and 0 not in (o1, o2, o3, o4):
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    if o4 == 0 and on_segment(b, c, d):
        return True
    return o1 * o2 < 0 and o3 * o4 < 0


def proper_crossing(a: Point, b: Point, c: Point, d: Point) -> Optional[tuple[Fraction, Fraction]]:
    """Parameters (s, u) of a transverse interior crossing a + s(b-a) = c + u(d-c).

    Returns None when the segments are disjoint.  Raises ``DegenerateError``
    when they touch in a non-transverse way (endpoint contact or overlap).
    """
    if _bbox_disjoint(a, b, c, d):
        return None
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 > 0 or o3 * o4 > 0:
        return None
    if 0 in (o1, o2, o3, o4):
        if segments_intersect(a, b, c, d):
            raise DegenerateError("non-transverse contact between segments")
        return None
    r = sub(b, a)
    s_ = sub(d, c)
    den = cross(r, s_)
    w = sub(c, a)
    return cross(w, s_) / den, cross(w, r) / den


class DegenerateError(Exception):
    """Configuration not in general position."""


def segment_crossing_params(a: Point, b: Point, c: Point, d: Point) -> list[Fraction]:
    """Parameters along ab where it meets segment cd (crossing, touching, or overlap ends)."""
    if _bbox_disjoint(a, b, c, d):
        return []
    r = sub(b, a)
    s_ = sub(d, c)
    den = cross(r, s_)
    w = sub(c, a)
    if den != 0:
        s = cross(w, s_) / den
        u = cross(w, r) / den
        if 0 <= s <= 1 and 0 <= u <= 1:
            return [s]
        return []
    if cross(w, r) != 0:
        return []
    rr = dot(r, r)
    out = []
    for p in (c, d):
        s = dot(sub(p, a), r) / rr
        if 0 <= s <= 1:
            out.append(s)
    return out


def point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Closed triangle test; the triangle may have either orientation."""
    o1, o2, o3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
    has_neg = o1 < 0 or o2 < 0 or o3 < 0
    has_pos = o1 > 0 or o2 > 0 or o3 > 0
    return not (has_neg and has_pos)


def winding_number(poly: Sequence[Point], p: Point) -> int:
    """Winding number of the closed polyline ``poly`` (last joins first) around p."""
    wn = 0
    npts = len(poly)
    py = p[1]
    for k in range(npts):
        a = poly[k]
        b = poly[(k + 1) % npts]
        if a[1] <= py:
            if b[1] > py and orient(a, b, p) > 0:
                wn += 1
        elif b[1] <= py and orient(a, b, p) < 0:
            wn -= 1
    return wn


def polyline_hits_point(poly: Sequence[Point], p: Point, closed: bool = False) -> bool:
    npts = len(poly)
    last = npts if closed else npts - 1
    for k in range(last):
        if on_segment(p, poly[k], poly[(k + 1) % npts]):
            return True
    return npts == 1 and poly[0] == p


def is_simple(poly: Sequence[Point]) -> bool:
    """Open polyline without self-intersection (adjacent segments share only their joint)."""
    segs = list(zip(poly, poly[1:]))
    for a, b in segs:
        if a == b:
            return False
    for i in range(len(segs)):
        a, b = segs[i]
        for j in range(i + 1, len(segs)):
            c, d = segs[j]
            if j == i + 1:
                # collinear fold-back is the only way adjacent segments overlap
                if orient(a, b, d) == 0 and dot(sub(b, a), sub(d, c)) < 0:
                    return False
                continue
            if segments_intersect(a, b, c, d):
                return False
    return True


def dedupe(poly: Iterable[Point]) -> list[Point]:
    out: list[Point] = []
    for p in poly:
        if not out or out[-1] != p:
            out.append(p)
    return out

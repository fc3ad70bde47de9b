"""Isotopies of polyline arcs in the punctured disc.

Every move here sweeps the arc across an explicit region (a triangle or the
polygon between an old and a new sub-path) that is verified exactly to hold
no puncture and no foreign curve, so the isotopy class rel endpoints in
D minus P is preserved by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .disc import DiscModel, PLArc
from .geometry import (DegenerateError, Point, cross, dedupe, linf_normalize, on_segment, orient,
                       point_in_triangle, proper_crossing, segments_intersect, sub, winding_number)

Segment = tuple[Point, Point]


def _fbox(a: Point, b: Point) -> tuple[float, float, float, float]:
    ax, ay, bx, by = float(a[0]), float(a[1]), float(b[0]), float(b[1])
    return (min(ax, bx), max(ax, bx), min(ay, by), max(ay, by))


_SLACK = 1e-9


def _fbox_apart(u, v) -> bool:
    return (u[1] + _SLACK < v[0] or v[1] + _SLACK < u[0]
            or u[3] + _SLACK < v[2] or v[3] + _SLACK < u[2])


class _Obstacles:
    """Segments the moving arc must not sweep across, with float boxes for quick rejection."""

    def __init__(self, polylines: Iterable[Sequence[Point]] = ()):
        self.segs: list[Segment] = []
        self.boxes: list[tuple] = []
        for poly in polylines:
            for a, b in zip(poly, poly[1:]):
                self.segs.append((a, b))
                self.boxes.append(_fbox(a, b))

    def near(self, box):
        for s, bx in zip(self.segs, self.boxes):
            if not _fbox_apart(box, bx):
                yield s


def _tri_box(tri) -> tuple[float, float, float, float]:
    xs = [float(p[0]) for p in tri]
    ys = [float(p[1]) for p in tri]
    return (min(xs), max(xs), min(ys), max(ys))


def _in_cone(v: Point, p: Point, r: Point, d: Point) -> bool:
    """Direction d from corner v points into the closed angle spanned by p - v and r - v."""
    e1, e2 = sub(p, v), sub(r, v)
    o = cross(e1, e2)
    c1, c2 = cross(e1, d), cross(d, e2)
    s = 1 if o > 0 else -1
    return c1 * s >= 0 and c2 * s >= 0


def _segment_meets_triangle(a: Point, b: Point, tri) -> bool:
    p, r, s = tri
    if point_in_triangle(a, p, r, s) or point_in_triangle(b, p, r, s):
        return True
    return (segments_intersect(a, b, p, r) or segments_intersect(a, b, r, s)
            or segments_intersect(a, b, s, p))


def _segment_clear(a: Point, b: Point, tri) -> bool:
    """Segment ab meets the closed triangle at most in a shared corner, from outside."""
    for k, v in enumerate(tri):
        if v == a or v == b:
            other = b if v == a else a
            p, r = tri[(k + 1) % 3], tri[(k + 2) % 3]
            if _in_cone(v, p, r, sub(other, v)):
                return False
            # a straight segment leaving a convex set at a corner cannot re-enter
            return True
    return not _segment_meets_triangle(a, b, tri)


@dataclass
class _Scene:
    punctures: tuple[Point, ...]
    allowed_corners: frozenset  # puncture points the arc may touch (its own endpoints)
    obstacles: _Obstacles

    def triangle_free(self, tri, verts: Sequence[Point], skip: set[int], fbox=None) -> bool:
        """No puncture, no arc segment outside ``skip`` and no obstacle meets tri (beyond corners)."""
        if orient(*tri) == 0:
            return False
        box = fbox or _tri_box(tri)
        for pp in self.punctures:
            if pp in self.allowed_corners and pp in tri:
                continue
            if box[0] - _SLACK <= float(pp[0]) <= box[1] + _SLACK and box[2] - _SLACK <= float(pp[1]) <= box[3] + _SLACK:
                if point_in_triangle(pp, *tri):
                    return False
        for k in range(len(verts) - 1):
            if k in skip:
                continue
            a, b = verts[k], verts[k + 1]
            if _fbox_apart(box, _fbox(a, b)):
                continue
            if not _segment_clear(a, b, tri):
                return False
        for a, b in self.obstacles.near(box):
            if not _segment_clear(a, b, tri):
                return False
        return True


def _scene(model: DiscModel, arc: PLArc, obstacles: Iterable[Sequence[Point]]) -> _Scene:
    allowed = frozenset(model.tag_point(tg) for tg in (arc.start, arc.end) if tg and tg[0] == "p")
    return _Scene(model.punctures, allowed, _Obstacles(obstacles))


def simplify(model: DiscModel, arc: PLArc, obstacles: Iterable[Sequence[Point]] = (),
             pinned: Iterable[Point] = ()) -> PLArc:
    """Greedy vertex removal through empty triangles.

    A vertex is dropped when the triangle it spans with its neighbours holds
    no puncture and meets neither the rest of the arc nor any obstacle.
    """
    scene = _scene(model, arc, obstacles)
    pins = set(pinned)
    verts = list(arc.vertices)
    changed = True
    while changed:
        changed = False
        k = 1
        while k < len(verts) - 1:
            a, b, c = verts[k - 1], verts[k], verts[k + 1]
            if b in pins:
                k += 1
                continue
            o = orient(a, b, c)
            if o == 0:
                if on_segment(b, a, c):
                    del verts[k]
                    changed = True
                    continue
                k += 1
                continue
            # segments k-1 and k are the triangle's own edges
            if scene.triangle_free((a, b, c), verts, {k - 1, k}):
                del verts[k]
                changed = True
                continue
            k += 1
    return PLArc(tuple(verts), arc.start, arc.end)


# -- crossings -------------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    arc_seg: int
    arc_s: Fraction
    ref_seg: int
    ref_u: Fraction
    point: Point

    @property
    def arc_key(self):
        return (self.arc_seg, self.arc_s)

    @property
    def ref_key(self):
        return (self.ref_seg, self.ref_u)


def crossings(arc: Sequence[Point], ref: Sequence[Point]) -> list[Crossing]:
    """Transverse crossings of two polylines, sorted along ``arc``.

    Raises DegenerateError on any non-transverse contact.
    """
    out = []
    rboxes = [_fbox(c, d) for c, d in zip(ref, ref[1:])]
    for i, (a, b) in enumerate(zip(arc, arc[1:])):
        abox = _fbox(a, b)
        for j, (c, d) in enumerate(zip(ref, ref[1:])):
            if _fbox_apart(abox, rboxes[j]):
                continue
            hit = proper_crossing(a, b, c, d)
            if hit is None:
                continue
            s, u = hit
            out.append(Crossing(i, s, j, u, (a[0] + (b[0] - a[0]) * s, a[1] + (b[1] - a[1]) * s)))
    out.sort(key=lambda x: x.arc_key)
    return out


def count_crossings(arc: PLArc, ref: PLArc) -> int:
    return len(crossings(arc.vertices, ref.vertices))


# -- general position ---------------------------------------------------------

_NUDGE_DIRS = ((Fraction(3), Fraction(7)), (Fraction(-7), Fraction(3)),
               (Fraction(-3), Fraction(-7)), (Fraction(7), Fraction(-3)),
               (Fraction(5), Fraction(-2)), (Fraction(-2), Fraction(-5)))


def _first_contact(verts: list[Point], refs: Sequence[Sequence[Point]]):
    """Locate a non-transverse contact: ('vertex', k) or ('split', seg, point)."""
    for ref in refs:
        rsegs = list(zip(ref, ref[1:]))
        rboxes = [_fbox(c, d) for c, d in rsegs]
        for i, (a, b) in enumerate(zip(verts, verts[1:])):
            abox = _fbox(a, b)
            for (c, d), rb in zip(rsegs, rboxes):
                if _fbox_apart(abox, rb):
                    continue
                try:
                    proper_crossing(a, b, c, d)
                except DegenerateError:
                    for k in (i, i + 1):
                        if on_segment(verts[k], c, d):
                            return ("vertex", k)
                    for p in (c, d):
                        if on_segment(p, a, b):
                            return ("split", i, p)
                    raise
    return None


def _nudge(model: DiscModel, scene: _Scene, verts: list[Point], k: int,
           refs: Sequence[Sequence[Point]]) -> bool:
    if k == 0 or k == len(verts) - 1:
        raise DegenerateError("arc endpoint lies on a reference curve")
    v = verts[k]
    prev, nxt = verts[k - 1], verts[k + 1]
    delta = model.gap / 500
    for _ in range(40):
        for dx, dy in _NUDGE_DIRS:
            w = (v[0] + dx * delta, v[1] + dy * delta)
            if not model.inside(w):
                continue
            if any(on_segment(w, c, d) for ref in refs for c, d in zip(ref, ref[1:])):
                continue
            t1, t2 = (prev, v, w), (v, w, nxt)
            if orient(*t1) == 0 or orient(*t2) == 0:
                continue
            if scene.triangle_free(t1, verts, {k - 1, k}) and scene.triangle_free(t2, verts, {k - 1, k}):
                verts[k] = w
                return True
        delta /= 2
    return False


def general_position(model: DiscModel, arc: PLArc, refs: Sequence[PLArc],
                     obstacles: Iterable[Sequence[Point]] = ()) -> PLArc:
    """Perturb the arc until every contact with the references is a transverse crossing."""
    ref_polys = [r.vertices for r in refs]
    verts = list(arc.vertices)
    scene = _scene(model, arc, obstacles)
    for _ in range(10000):
        hit = _first_contact(verts, ref_polys)
        if hit is None:
            return PLArc(tuple(verts), arc.start, arc.end)
        if hit[0] == "split":
            _, i, p = hit
            verts.insert(i + 1, p)
            k = i + 1
        else:
            k = hit[1]
        if not _nudge(model, scene, verts, k, ref_polys):
            raise DegenerateError("could not perturb arc into general position")
    raise DegenerateError("general position did not converge")


# -- digons -------------------------------------------------------------------

def _ref_path(ref: Sequence[Point], x: Crossing, y: Crossing) -> list[Point]:
    """Points of the reference from x to y (either direction along the reference)."""
    if x.ref_key <= y.ref_key:
        inner = list(ref[x.ref_seg + 1:y.ref_seg + 1])
    else:
        inner = list(reversed(ref[y.ref_seg + 1:x.ref_seg + 1]))
    return [x.point] + inner + [y.point]


def _arc_path(verts: Sequence[Point], x: Crossing, y: Crossing) -> list[Point]:
    return [x.point] + list(verts[x.arc_seg + 1:y.arc_seg + 1]) + [y.point]


def find_digon(model: DiscModel, verts: Sequence[Point], ref: Sequence[Point],
               xs: list[Crossing]) -> Optional[tuple[Crossing, Crossing]]:
    """An innermost puncture-free digon as (x, y) with x before y along the arc."""
    if len(xs) < 2:
        return None
    arc_rank = {id(c): r for r, c in enumerate(xs)}
    by_ref = sorted(xs, key=lambda c: c.ref_key)
    for c1, c2 in zip(by_ref, by_ref[1:]):
        if abs(arc_rank[id(c1)] - arc_rank[id(c2)]) != 1:
            continue
        x, y = (c1, c2) if arc_rank[id(c1)] < arc_rank[id(c2)] else (c2, c1)
        poly = _arc_path(verts, x, y)[:-1] + list(reversed(_ref_path(ref, x, y)))[:-1]
        if all(winding_number(poly, p) == 0 for p in model.punctures):
            return x, y
    return None


def _offset_dirs(path: list[Point], far_left: bool) -> list[Point]:
    """Offset directions at each point of ``path`` pointing into its far side."""
    dirs = []
    npts = len(path)
    for k in range(npts):
        if k == 0 or k == npts - 1:
            a, b = (path[0], path[1]) if k == 0 else (path[-2], path[-1])
            d = sub(b, a)
            nrm = (-d[1], d[0]) if far_left else (d[1], -d[0])
            dirs.append(linf_normalize(nrm))
            continue
        w = path[k]
        e1 = linf_normalize(sub(path[k - 1], w))
        e2 = linf_normalize(sub(path[k + 1], w))
        c = cross(e2, e1)
        if c == 0:
            d = sub(path[k + 1], path[k - 1])
            nrm = (-d[1], d[0]) if far_left else (d[1], -d[0])
            dirs.append(linf_normalize(nrm))
            continue
        bis = (e1[0] + e2[0], e1[1] + e2[1])
        # the sum of the edge directions lies in the wedge of angle < pi
        left_small = c > 0
        if left_small != far_left:
            bis = (-bis[0], -bis[1])
        dirs.append(linf_normalize(bis))
    return dirs


def _polyline_segments(poly: Sequence[Point]) -> list[Segment]:
    return list(zip(poly, poly[1:]))


def _clear_path(new: list[Point], forbidden: list[Segment], touch_ok: dict[Point, list[Segment]],
                punctures, model: DiscModel) -> bool:
    segs = _polyline_segments(new)
    for k, (a, b) in enumerate(segs):
        if a == b:
            return False
        box = _fbox(a, b)
        for p in punctures:
            if on_segment(p, a, b):
                return False
        for c, d in forbidden:
            if _fbox_apart(box, _fbox(c, d)):
                continue
            if segments_intersect(a, b, c, d):
                # contact allowed only at designated attachment points
                shared = {a, b} & {c, d}
                if not shared or (c, d) not in touch_ok.get(next(iter(shared)), []):
                    return False
                if orient(a, b, c) == 0 and orient(a, b, d) == 0:
                    return False
        for j in range(k + 2, len(segs)):
            if segments_intersect(a, b, *segs[j]):
                return False
        if k + 1 < len(segs):
            c, d = segs[k + 1]
            if orient(a, b, d) == 0 and (b[0] - a[0]) * (d[0] - c[0]) + (b[1] - a[1]) * (d[1] - c[1]) < 0:
                return False
    return all(model.inside(p) for p in new[1:-1])


def remove_digon(model: DiscModel, verts: list[Point], ref: Sequence[Point], x: Crossing, y: Crossing,
                 protected: Sequence[Sequence[Point]] = ()) -> list[Point]:
    """Push the arc piece between crossings x and y across the reference."""
    rpath = _ref_path(ref, x, y)
    d_arc = sub(verts[x.arc_seg + 1], verts[x.arc_seg])
    inside_left = cross(sub(rpath[1], rpath[0]), d_arc) > 0
    dirs = _offset_dirs(rpath, far_left=not inside_left)
    head = list(verts[:x.arc_seg + 1])
    tail = list(verts[y.arc_seg + 1:])
    prev_v, next_v = head[-1], tail[0]
    old_piece = _arc_path(verts, x, y)
    forbidden = _polyline_segments(head) + _polyline_segments(tail) + _polyline_segments(ref)
    for poly in protected:
        forbidden += _polyline_segments(poly)
    eps = Fraction(1, 64) * model.gap
    mu = Fraction(1, 2)
    for _ in range(60):
        a_pt = (x.point[0] + (prev_v[0] - x.point[0]) * mu, x.point[1] + (prev_v[1] - x.point[1]) * mu)
        b_pt = (y.point[0] + (next_v[0] - y.point[0]) * mu, y.point[1] + (next_v[1] - y.point[1]) * mu)
        offs = [(p[0] + eps * d[0], p[1] + eps * d[1]) for p, d in zip(rpath, dirs)]
        stubs = [(prev_v, a_pt), (b_pt, next_v)]
        touch = {a_pt: [stubs[0]], b_pt: [stubs[1]]}
        # a_pt and b_pt already lie on the far side, so the end offsets can be
        # dropped when they would run along the arc itself
        for body in (offs, offs[1:-1]):
            new = [a_pt] + body + [b_pt]
            if (_clear_path(new, forbidden + stubs, touch, model.punctures, model)
                    and not _touches_old(new, old_piece)):
                region = [a_pt] + old_piece + [b_pt] + list(reversed(body))
                if all(winding_number(region, p) == 0 for p in model.punctures):
                    return dedupe(head + new + tail)
        eps /= 2
        mu /= 2
    raise DegenerateError("digon removal failed to find a clear offset path")


def _touches_old(new: list[Point], old_piece: list[Point]) -> bool:
    """The new path meets the old piece (x .. y) anywhere."""
    for a, b in _polyline_segments(new):
        for c, d in _polyline_segments(old_piece):
            if segments_intersect(a, b, c, d):
                return True
    return False


def tighten(model: DiscModel, arc: PLArc, reference: PLArc,
            protected: Sequence[PLArc] = (), max_rounds: int = 100000) -> PLArc:
    """Remove puncture-free digons between ``arc`` and ``reference`` until none is left.

    ``protected`` curves are never crossed by the new sub-paths, so the
    intersection count with them does not grow either.
    """
    prot = [p.vertices for p in protected]
    verts = list(general_position(model, arc, [reference, *protected]).vertices)
    ref = reference.vertices
    for _ in range(max_rounds):
        xs = crossings(verts, ref)
        dg = find_digon(model, verts, ref, xs)
        if dg is None:
            break
        verts = remove_digon(model, verts, ref, dg[0], dg[1], prot)
        verts = list(general_position(model, PLArc(tuple(verts), arc.start, arc.end),
                                      [reference, *protected]).vertices)
    else:
        raise DegenerateError("tighten did not terminate")
    out = PLArc(tuple(verts), arc.start, arc.end)
    return simplify(model, out, obstacles=[ref, *prot])


def tighten_all(model: DiscModel, arc: PLArc, refs: Sequence[PLArc]) -> PLArc:
    """Tighten against several pairwise disjoint references until digon-free with each."""
    cur = arc
    while True:
        before = [count_crossings(cur, r) for r in refs]
        for k, r in enumerate(refs):
            cur = tighten(model, cur, r, [s for m, s in enumerate(refs) if m != k])
        after = [count_crossings(cur, r) for r in refs]
        if after == before and all(
                find_digon(model, cur.vertices, r.vertices, crossings(cur.vertices, r.vertices)) is None
                for r in refs):
            return cur

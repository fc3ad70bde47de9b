"""Punctured unit disc, polyline arcs, forks and noodles."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .geometry import Point, is_simple, on_segment, pt, winding_number

# endpoint tags: ("p", i) for puncture p_i, ("d", 1) / ("d", 2) for basepoints
Tag = Optional[tuple[str, int]]


@dataclass(frozen=True)
class DiscModel:
    """Punctures p_i = (2i - n - 1) / (2n) on the real axis, basepoints on the lower circle."""

    n: int
    punctures: tuple[Point, ...] = field(init=False)
    d1: Point = field(init=False)
    d2: Point = field(init=False)
    gap: Fraction = field(init=False)

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 punctures, got {self.n}")
        n = self.n
        object.__setattr__(self, "punctures",
                           tuple(pt(Fraction(2 * i - n - 1, 2 * n), 0) for i in range(1, n + 1)))
        object.__setattr__(self, "gap", Fraction(1, n))
        object.__setattr__(self, "d1", pt(Fraction(-3, 5), Fraction(-4, 5)))
        object.__setattr__(self, "d2", pt(Fraction(3, 5), Fraction(-4, 5)))

    def p(self, i: int) -> Point:
        if not 1 <= i <= self.n:
            raise ValueError(f"puncture index {i} out of range 1..{self.n}")
        return self.punctures[i - 1]

    def basepoint(self, k: int) -> Point:
        return self.d1 if k == 1 else self.d2

    def tag_point(self, tag: Tag) -> Optional[Point]:
        if tag is None:
            return None
        kind, idx = tag
        return self.p(idx) if kind == "p" else self.basepoint(idx)

    def inside(self, p: Point) -> bool:
        return p[0] * p[0] + p[1] * p[1] < 1


@lru_cache(maxsize=None)
def disc_model(n: int) -> DiscModel:
    return DiscModel(n)


@dataclass(frozen=True)
class PLArc:
    vertices: tuple[Point, ...]
    start: Tag = None
    end: Tag = None

    def __post_init__(self):
        vs = tuple((Fraction(x), Fraction(y)) for x, y in self.vertices)
        if len(vs) < 2:
            raise ValueError("an arc needs at least two vertices")
        for a, b in zip(vs, vs[1:]):
            if a == b:
                raise ValueError("consecutive vertices must be distinct")
        object.__setattr__(self, "vertices", vs)

    def __len__(self):
        return len(self.vertices)

    def segments(self):
        return zip(self.vertices, self.vertices[1:])

    def reversed(self) -> "PLArc":
        return PLArc(tuple(reversed(self.vertices)), self.end, self.start)

    def validate(self, model: DiscModel) -> None:
        """Raise ValueError unless the arc is simple and meets P only at tagged endpoints."""
        if not is_simple(self.vertices):
            raise ValueError("arc is not simple")
        vs = self.vertices
        for tag, p in ((self.start, vs[0]), (self.end, vs[-1])):
            if tag is not None and model.tag_point(tag) != p:
                raise ValueError(f"endpoint {p} does not match tag {tag}")
        allowed = {model.tag_point(tg) for tg in (self.start, self.end) if tg and tg[0] == "p"}
        for pp in model.punctures:
            if pp in allowed:
                # only the endpoint itself may touch the puncture
                hits = [k for k, (a, b) in enumerate(self.segments()) if on_segment(pp, a, b)]
                ends = {0 if pp == vs[0] else None, len(vs) - 2 if pp == vs[-1] else None}
                if any(k not in ends for k in hits):
                    raise ValueError(f"arc passes through puncture {pp}")
                continue
            for a, b in self.segments():
                if on_segment(pp, a, b):
                    raise ValueError(f"arc passes through puncture {pp}")
        for v in vs:
            if not (model.inside(v) or v in (model.d1, model.d2)):
                raise ValueError(f"vertex {v} leaves the disc")


@dataclass(frozen=True)
class Fork:
    """A fork together with its parallel copy.

    ``handle`` runs from d_1 to ``z`` on ``tine``; ``copy_handle`` runs from
    d_2 to ``z_copy`` on ``copy_tine``.  Both tines run from the same puncture
    to the same puncture, so their orientations are parallel.
    """

    handle: PLArc
    tine: PLArc
    z: Point
    copy_handle: PLArc
    copy_tine: PLArc
    z_copy: Point

    @property
    def tine_ends(self) -> tuple[int, int]:
        return self.tine.start[1], self.tine.end[1]

    def arcs(self) -> tuple[PLArc, PLArc, PLArc, PLArc]:
        return (self.handle, self.tine, self.copy_handle, self.copy_tine)


@dataclass(frozen=True)
class Noodle:
    arc: PLArc

    def __post_init__(self):
        if self.arc.start != ("d", 1) or self.arc.end != ("d", 2):
            raise ValueError("a noodle runs from d_1 to d_2")


def _dip(model: DiscModel) -> Fraction:
    return model.gap * Fraction(3, 11)


def standard_fork(model: DiscModel, j: int, k: int) -> Fork:
    """F_{j,k}: tine p_j -> p_k through the lower half plane, handle from d_1."""
    if not (1 <= j < k <= model.n):
        raise ValueError(f"standard fork needs 1 <= j < k <= {model.n}, got ({j}, {k})")
    g = model.gap
    h = _dip(model)
    e = h / 8
    pj, pk = model.p(j), model.p(k)
    zx = (pj[0] + pk[0]) / 2 + g / 37
    z = pt(zx, -h)
    tine = PLArc((pj, pt(pj[0] + g / 4, -h), z, pt(pk[0] - g / 4, -h), pk), ("p", j), ("p", k))
    z_copy = pt(zx + e / 3, -h - e)
    copy_tine = PLArc((pj, pt(pj[0] + g / 4 - e, -h - e), z_copy, pt(pk[0] - g / 4 + e, -h - e), pk),
                      ("p", j), ("p", k))
    handle = PLArc((model.d1, z), ("d", 1), None)
    copy_handle = PLArc((model.d2, z_copy), ("d", 2), None)
    return Fork(handle, tine, z, copy_handle, copy_tine, z_copy)


def standard_noodle(model: DiscModel, i: int) -> Noodle:
    """N_i: from d_1 up the left of p_i, over it, and down to d_2."""
    if not 1 <= i <= model.n:
        raise ValueError(f"noodle index {i} out of range 1..{model.n}")
    g = model.gap
    x = model.p(i)[0]
    low = -g * Fraction(2, 5)
    top = g / 3
    verts = (model.d1,
             pt(x - g / 3, low),
             pt(x - g / 3, top),
             pt(x + g / 3 + g / 53, top + g / 41),
             pt(x + g / 3 + g / 53, low - g / 29),
             model.d2)
    return Noodle(PLArc(verts, ("d", 1), ("d", 2)))


def horizontal_edge(model: DiscModel, i: int) -> PLArc:
    """E_i: the straight segment from p_i to p_{i+1}."""
    if not 1 <= i < model.n:
        raise ValueError(f"edge index {i} out of range 1..{model.n - 1}")
    return PLArc((model.p(i), model.p(i + 1)), ("p", i), ("p", i + 1))


def closed_noodle_winding(model: DiscModel, noodle: Union[Noodle, PLArc]) -> list[int]:
    """Winding numbers around each puncture of the noodle closed by the chord d_2 -> d_1."""
    arc = noodle.arc if isinstance(noodle, Noodle) else noodle
    return [winding_number(arc.vertices, p) for p in model.punctures]


def real_axis_crossings(arc: PLArc) -> int:
    count = 0
    for a, b in arc.segments():
        if (a[1] < 0 < b[1]) or (b[1] < 0 < a[1]):
            count += 1
        elif a[1] == 0 or b[1] == 0:
            raise ValueError("vertex on the real axis")
    return count


def make_arc(points: Sequence, start: Tag = None, end: Tag = None) -> PLArc:
    return PLArc(tuple(pt(x, y) for x, y in points), start, end)

"""The pairing of a noodle with a fork, computed from intersection data.

Intersections z_1..z_l of the tine with the noodle and z'_1..z'_l of the
parallel tine are read off after the noodle has been tightened against both
tines.  For each pair (i, j) the loop delta_{i,j} in the configuration space
of two points is assembled stage by stage (handles, tines, noodle pieces) and
fed to :func:`phi_loop`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from ..laurent import ZERO, LaurentPoly2
from .disc import DiscModel, Fork, Noodle, PLArc
from .geometry import DegenerateError, Point, cross, dot, on_segment, sign, sub, winding_number
from .tighten import Crossing, crossings, tighten_all

Path = Union[PLArc, Sequence[Point]]


@dataclass(frozen=True)
class IntersectionDatum:
    i: int
    j: int
    a_ij: int
    b_ij: int
    eps_ij: int

    def __post_init__(self):
        if self.eps_ij not in (1, -1):
            raise ValueError(f"eps must be +1 or -1, got {self.eps_ij}")

    @property
    def monomial(self) -> LaurentPoly2:
        return LaurentPoly2.monomial(self.a_ij, self.b_ij)


# -- phi ------------------------------------------------------------------------

def _points(p: Path) -> list[Point]:
    return list(p.vertices) if isinstance(p, PLArc) else [tuple(map(Fraction, v)) for v in p]


def _at(path: list[Point], s: Fraction) -> Point:
    """Point at parameter s of a path whose K segments each take 1/K of [0, 1]."""
    k = len(path) - 1
    if k == 0:
        return path[0]
    x = s * k
    idx = min(int(x), k - 1)
    lam = x - idx
    a, b = path[idx], path[idx + 1]
    return (a[0] + (b[0] - a[0]) * lam, a[1] + (b[1] - a[1]) * lam)


def _sync(p1: list[Point], p2: list[Point]) -> tuple[list[Point], list[Point]]:
    cuts = {Fraction(k, len(p1) - 1) for k in range(len(p1))} if len(p1) > 1 else set()
    cuts |= {Fraction(k, len(p2) - 1) for k in range(len(p2))} if len(p2) > 1 else set()
    cuts |= {Fraction(0), Fraction(1)}
    ss = sorted(cuts)
    return [_at(p1, s) for s in ss], [_at(p2, s) for s in ss]


def _synced_stages(stages: Sequence[tuple[list[Point], list[Point]]]) -> tuple[list[Point], list[Point]]:
    out1: list[Point] = []
    out2: list[Point] = []
    for p1, p2 in stages:
        s1, s2 = _sync(p1, p2)
        if out1:
            if (out1[-1], out2[-1]) != (s1[0], s2[0]):
                raise ValueError("loop stages do not join up")
            s1, s2 = s1[1:], s2[1:]
        out1 += s1
        out2 += s2
    return out1, out2


_LINE_SLOPES = [Fraction(p, q) for p, q in ((1, 7), (-3, 11), (5, 13), (-7, 17), (2, 19), (-11, 23),
                                             (13, 29), (-17, 31), (19, 37), (23, 41))]


def _half_turns(diff: list[Point]) -> int:
    """Signed count of half turns of a path around the origin.

    Equal to the total change in argument divided by pi whenever the end
    direction is parallel to the start direction.
    """
    for r in _LINE_SLOPES:
        u = (Fraction(1), r)
        if all(cross(u, d) != 0 for d in diff):
            break
    else:
        raise DegenerateError("no generic line through the origin")
    total = 0
    for d0, d1 in zip(diff, diff[1:]):
        c0, c1 = cross(u, d0), cross(u, d1)
        if (c0 > 0) == (c1 > 0):
            continue
        lam = c0 / (c0 - c1)
        x = (d0[0] + (d1[0] - d0[0]) * lam, d0[1] + (d1[1] - d0[1]) * lam)
        ray = sign(dot(u, x))
        upward = c1 > 0
        total += 1 if upward == (ray > 0) else -1
    return total


def _phi_synced(model: DiscModel, p1: list[Point], p2: list[Point]) -> tuple[int, int]:
    diff = [(a[0] - b[0], a[1] - b[1]) for a, b in zip(p1, p2)]
    origin = (Fraction(0), Fraction(0))
    for d0, d1 in zip(diff, diff[1:]):
        if on_segment(origin, d0, d1):
            raise DegenerateError("the two points collide")
    for path in (p1, p2):
        for a, b in zip(path, path[1:]):
            if any(on_segment(p, a, b) for p in model.punctures):
                raise DegenerateError("a strand passes through a puncture")
    closed = p1[-1] == p1[0] and p2[-1] == p2[0]
    swapped = p1[-1] == p2[0] and p2[-1] == p1[0]
    if closed:
        a = sum(winding_number(p1, p) + winding_number(p2, p) for p in model.punctures)
    elif swapped:
        loop = p1 + p2[1:]
        a = sum(winding_number(loop, p) for p in model.punctures)
    else:
        raise ValueError("strands neither close up nor swap endpoints")
    return a, _half_turns(diff)


def phi_loop(model: DiscModel, alpha1: Path, alpha2: Path) -> tuple[int, int]:
    """Exponents (a, b) of phi of the two-point loop {alpha1(s), alpha2(s)}.

    Both strands are parameterized uniformly per segment.  A strand may be a
    single point (constant).
    """
    p1, p2 = _sync(_points(alpha1), _points(alpha2))
    return _phi_synced(model, p1, p2)


def phi_stages(model: DiscModel, stages: Sequence[tuple[Path, Path]]) -> tuple[int, int]:
    """phi of a loop given as consecutive stages, each strand pair moving simultaneously."""
    p1, p2 = _synced_stages([(_points(a), _points(b)) for a, b in stages])
    return _phi_synced(model, p1, p2)


# -- pairing --------------------------------------------------------------------

@dataclass
class PairingResult:
    value: LaurentPoly2
    table: list[IntersectionDatum]
    l: int
    noodle: PLArc
    claim_a_violations: list[tuple[int, int]] = field(default_factory=list)
    sign_violations: list[tuple[int, int]] = field(default_factory=list)
    keyclaim_violations: list[tuple[int, int]] = field(default_factory=list)
    geometric_signs: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return not (self.claim_a_violations or self.sign_violations or self.keyclaim_violations)


def _sub_path(poly: Sequence[Point], start_idx: int, c: Crossing) -> list[Point]:
    """From vertex ``start_idx`` of the reference polyline to crossing c on it."""
    r = c.ref_seg
    if r >= start_idx:
        inner = list(poly[start_idx:r + 1])
    else:
        inner = list(reversed(poly[r + 1:start_idx + 1]))
    return inner + [c.point]


def _noodle_to_end(nv: Sequence[Point], c: Crossing, end: int) -> list[Point]:
    """From crossing c along the noodle to d_1 (end=1) or d_2 (end=2)."""
    if end == 1:
        return [c.point] + list(reversed(nv[:c.arc_seg + 1]))
    return [c.point] + list(nv[c.arc_seg + 1:])


def _seg_dir(poly: Sequence[Point], k: int) -> Point:
    return sub(poly[k + 1], poly[k])


def _winding_sum(model: DiscModel, loop: list[Point]) -> int:
    return sum(winding_number(loop, p) for p in model.punctures)


def pairing_details(model: DiscModel, noodle: Union[Noodle, PLArc], fork: Fork,
                    tightened: bool = False) -> PairingResult:
    arc = noodle.arc if isinstance(noodle, Noodle) else noodle
    tine, ctine = fork.tine, fork.copy_tine
    if not tightened:
        arc = tighten_all(model, arc, [tine, ctine])
    nv = arc.vertices
    xs = crossings(nv, tine.vertices)
    ys = crossings(nv, ctine.vertices)
    if len(xs) != len(ys):
        raise DegenerateError(f"tine and parallel tine meet the noodle {len(xs)} and {len(ys)} times")
    merged = sorted([(c.arc_key, 0, c) for c in xs] + [(c.arc_key, 1, c) for c in ys], key=lambda e: e[0])
    zs: list[Crossing] = []
    zps: list[Crossing] = []
    for p in range(0, len(merged), 2):
        kinds = {merged[p][1], merged[p + 1][1]}
        if kinds != {0, 1}:
            raise DegenerateError("parallel crossings are not adjacent along the noodle")
        for _, kind, c in merged[p:p + 2]:
            (zs if kind == 0 else zps).append(c)
    l = len(zs)
    zi_t = tine.vertices.index(fork.z)
    zi_c = ctine.vertices.index(fork.z_copy)
    handle = list(fork.handle.vertices)
    chandle = list(fork.copy_handle.vertices)

    a_total = _winding_sum(model, list(nv))
    a_k = []
    for c in zs:
        loop = handle + _sub_path(tine.vertices, zi_t, c)[1:] + _noodle_to_end(nv, c, 1)[1:-1]
        a_k.append(_winding_sum(model, loop))
    s_t = [sign(cross(_seg_dir(nv, c.arc_seg), _seg_dir(tine.vertices, c.ref_seg))) for c in zs]
    s_c = [sign(cross(_seg_dir(nv, c.arc_seg), _seg_dir(ctine.vertices, c.ref_seg))) for c in zps]

    mono: dict[tuple[int, int], tuple[int, int]] = {}
    before: dict[tuple[int, int], bool] = {}
    for i, zc in enumerate(zs):
        beta1 = _sub_path(tine.vertices, zi_t, zc)
        for j, zpc in enumerate(zps):
            beta2 = _sub_path(ctine.vertices, zi_c, zpc)
            first = zc.arc_key < zpc.arc_key
            before[i, j] = first
            gamma1 = _noodle_to_end(nv, zc, 1 if first else 2)
            gamma2 = _noodle_to_end(nv, zpc, 2 if first else 1)
            mono[i, j] = phi_stages(model, [(handle, chandle), (beta1, beta2), (gamma1, gamma2)])

    res = PairingResult(ZERO, [], l, arc)
    value = ZERO
    for i in range(l):
        for j in range(l):
            a, b = mono[i, j]
            bsum = mono[i, i][1] + b + mono[j, j][1]
            eps = -1 if bsum % 2 == 0 else 1
            value = value + LaurentPoly2.monomial(a, b, eps)
            res.table.append(IntersectionDatum(i + 1, j + 1, a, b, eps))
            if a != a_k[i] + a_k[j] + a_total:
                res.claim_a_violations.append((i + 1, j + 1))
            geo = -s_t[i] * s_c[j] * (1 if before[i, j] else -1)
            res.geometric_signs[i + 1, j + 1] = geo
            if geo != eps:
                res.sign_violations.append((i + 1, j + 1))
    if mono:
        top = max(mono.values())
        for (i, j), m in mono.items():
            if m == top and not (mono[i, i] == m == mono[j, j]):
                res.keyclaim_violations.append((i + 1, j + 1))
    res.value = value
    return res


def pairing(model: DiscModel, noodle: Union[Noodle, PLArc], fork: Fork) -> LaurentPoly2:
    return pairing_details(model, noodle, fork).value


def key_lemma_check(model: DiscModel, noodle: Union[Noodle, PLArc], fork: Fork) -> bool:
    res = pairing_details(model, noodle, fork)
    return res.value.is_zero() == (res.l == 0)

"""Braid words acting on arcs, noodles and forks."""

from __future__ import annotations

from typing import Union

from ..braid import BraidWord, invert
from .disc import DiscModel, Fork, Noodle, PLArc, standard_fork, standard_noodle
from .geometry import Point
from .pairing import PairingResult, pairing_details
from .tighten import simplify
from .twist import twist_arc_raw, twist_for


def apply_generator(model: DiscModel, arc: PLArc, i: int, sign: int) -> PLArc:
    """Image of the arc under sigma_i^sign, simplified."""
    return simplify(model, twist_arc_raw(model, arc, i, sign))


def apply_word(model: DiscModel, arc: PLArc, w: BraidWord) -> PLArc:
    """Image under w; the rightmost letter acts first."""
    if w.strands != model.n:
        raise ValueError("braid and disc model have different strand counts")
    for i, s in reversed(w.letters):
        arc = apply_generator(model, arc, i, s)
    return arc


def apply_word_noodle(model: DiscModel, noodle: Noodle, w: BraidWord) -> Noodle:
    return Noodle(apply_word(model, noodle.arc, w))


def apply_generator_fork(model: DiscModel, fork: Fork, i: int, sign: int) -> Fork:
    """Image of a fork and its parallel copy; the four arcs are simplified jointly."""
    tw = twist_for(model, i, sign)
    arcs = [twist_arc_raw(model, a, i, sign) for a in fork.arcs()]
    z, zc = tw.map_point(fork.z), tw.map_point(fork.z_copy)
    pins: tuple[Point, ...] = (z, zc)
    for k in range(4):
        others = [a.vertices for m, a in enumerate(arcs) if m != k]
        arcs[k] = simplify(model, arcs[k], obstacles=others, pinned=pins)
    return Fork(arcs[0], arcs[1], z, arcs[2], arcs[3], zc)


def apply_word_fork(model: DiscModel, fork: Fork, w: BraidWord) -> Fork:
    if w.strands != model.n:
        raise ValueError("braid and disc model have different strand counts")
    for i, s in reversed(w.letters):
        fork = apply_generator_fork(model, fork, i, s)
    return fork


def pair_image(model: DiscModel, w: BraidWord, noodle_i: int, fork_j: int, fork_k: int,
               route: str = "noodle") -> PairingResult:
    """<N_i, w(F_{j,k})>.

    ``route="fork"`` moves the fork by w.  ``route="noodle"`` moves the noodle
    by the inverse of w instead, which gives the same pairing because the
    pairing is unchanged when one homeomorphism is applied to both curves.
    """
    noodle = standard_noodle(model, noodle_i)
    fork = standard_fork(model, fork_j, fork_k)
    if route == "fork":
        return pairing_details(model, noodle, apply_word_fork(model, fork, w))
    if route == "noodle":
        return pairing_details(model, apply_word_noodle(model, noodle, invert(w)), fork)
    raise ValueError(f"unknown route {route!r}")

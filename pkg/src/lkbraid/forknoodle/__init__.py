"""Curves in the punctured disc: forks, noodles, half-twists and the pairing."""

from .action import (apply_generator, apply_generator_fork, apply_word, apply_word_fork,
                     apply_word_noodle, pair_image)
from .disc import (DiscModel, Fork, Noodle, PLArc, closed_noodle_winding, disc_model,
                   horizontal_edge, make_arc, real_axis_crossings, standard_fork, standard_noodle)
from .geometry import DegenerateError
from .pairing import (IntersectionDatum, PairingResult, key_lemma_check, pairing, pairing_details,
                      phi_loop, phi_stages)
from .tighten import count_crossings, simplify, tighten, tighten_all

__all__ = [
    "DiscModel", "PLArc", "Fork", "Noodle", "IntersectionDatum", "PairingResult", "DegenerateError",
    "disc_model", "standard_fork", "standard_noodle", "horizontal_edge", "make_arc",
    "apply_generator", "apply_word", "apply_word_noodle", "apply_generator_fork", "apply_word_fork",
    "tighten", "tighten_all", "simplify", "count_crossings", "phi_loop", "phi_stages",
    "pairing", "pairing_details", "pair_image", "key_lemma_check",
    "closed_noodle_winding", "real_axis_crossings",
]

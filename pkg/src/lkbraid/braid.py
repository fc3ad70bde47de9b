"""Braid words on n strands.

Words compose from right to left: in ``s1 s2`` the letter ``s2`` acts first.
Every module in the package (matrices, geometry, CLI) uses this order.

The word problem oracle uses Artin's action of B_n on the free group
F_n = <x_1, ..., x_n>, which is faithful, so a braid is trivial iff it fixes
every generator.  No Laurent-polynomial computation is involved.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

Letter = tuple[int, int]  # (generator index i, sign +1/-1)


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.strands}")
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"generator index {i} out of range for B_{self.strands}")
            if s not in (1, -1):
                raise ValueError(f"bad sign {s}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, n: int, ints: Iterable[int]) -> "BraidWord":
        """Signed-integer form: ``[1, -2]`` is s1 s2^-1."""
        letters = []
        for k in ints:
            if k == 0:
                raise ValueError("0 is not a generator")
            letters.append((abs(k), 1 if k > 0 else -1))
        return cls(n, tuple(letters))

    def to_ints(self) -> list[int]:
        return [i * s for i, s in self.letters]

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def __str__(self):
        return format_word(self)


_TOKEN = re.compile(r"^s(\d+)(\^-1)?$")


def parse_word(text: str, n: int) -> BraidWord:
    """Parse ``s1 s2^-1 ...`` or the signed-integer form ``1 -2 ...``."""
    if n < 2:
        raise ValueError(f"need at least 2 strands, got {n}")
    letters = []
    for tok in text.replace(",", " ").split():
        m = _TOKEN.match(tok)
        if m:
            letters.append((int(m.group(1)), -1 if m.group(2) else 1))
            continue
        if re.fullmatch(r"[+-]?\d+", tok) and int(tok) != 0:
            k = int(tok)
            letters.append((abs(k), 1 if k > 0 else -1))
            continue
        raise ValueError(f"malformed braid token {tok!r}")
    return BraidWord(n, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(f"s{i}" if s > 0 else f"s{i}^-1" for i, s in w.letters)


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple((i, -s) for i, s in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[Letter] = []
    for i, s in w.letters:
        if out and out[-1] == (i, -s):
            out.pop()
        else:
            out.append((i, s))
    return BraidWord(w.strands, tuple(out))


@dataclass(frozen=True)
class Permutation:
    """``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self o other (other applied first)."""
        return Permutation(tuple(self(other(k)) for k in range(1, len(self.images) + 1)))

    def is_identity(self) -> bool:
        return all(self.images[k] == k + 1 for k in range(len(self.images)))


def underlying_permutation(w: BraidWord) -> Permutation:
    images = list(range(1, w.strands + 1))
    # rightmost letter acts first, so apply transpositions right to left
    for i, _ in reversed(w.letters):
        images = [i + 1 if v == i else i if v == i + 1 else v for v in images]
    return Permutation(tuple(images))


def full_twist_word(n: int) -> BraidWord:
    """(s1 s2 ... s_{n-1})^n, the full twist."""
    return BraidWord(n, tuple((i, 1) for _ in range(n) for i in range(1, n)))


def random_word(n: int, length: int, seed: int) -> BraidWord:
    if length < 0:
        raise ValueError("length must be non-negative")
    rng = random.Random(seed)
    letters = [(rng.randint(1, n - 1), rng.choice((1, -1))) for _ in range(length)]
    return BraidWord(n, tuple(letters))


# -- word problem via the Artin action on F_n --------------------------------
# Free group words are lists of nonzero ints: k means x_k, -k means x_k^-1.

def _reduce_into(out: list[int], letters: Iterable[int]) -> None:
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)


def _artin_images(i: int, sign: int) -> dict[int, list[int]]:
    # sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    if sign > 0:
        return {i: [i, i + 1, -i], i + 1: [i]}
    # inverse: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    return {i: [i + 1], i + 1: [-(i + 1), i, i + 1]}


def _substitute(word: Sequence[int], images: dict[int, list[int]]) -> list[int]:
    out: list[int] = []
    for x in word:
        img = images.get(abs(x))
        if img is None:
            _reduce_into(out, (x,))
        elif x > 0:
            _reduce_into(out, img)
        else:
            _reduce_into(out, [-y for y in reversed(img)])
    return out


def artin_action(w: BraidWord) -> list[list[int]]:
    """Images of x_1..x_n under the automorphism of F_n induced by w."""
    gens = [[k] for k in range(1, w.strands + 1)]
    # automorphism of w = a_{l1} o ... o a_{lk}; evaluate on x_m innermost first
    for i, s in reversed(w.letters):
        imgs = _artin_images(i, s)
        gens = [_substitute(g, imgs) for g in gens]
    return gens


def oracle_is_trivial(w: BraidWord) -> bool:
    w = free_reduce(w)
    if not w.letters:
        return True
    if not underlying_permutation(w).is_identity():
        return False
    return all(g == [k] for k, g in enumerate(artin_action(w), start=1))


def braid_equal(u: BraidWord, v: BraidWord) -> bool:
    return oracle_is_trivial(u * invert(v))

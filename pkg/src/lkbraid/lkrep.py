"""Lawrence-Krammer matrices over Z[q^{+-1}, t^{+-1}].

Basis vectors v_{j,k} (1 <= j < k <= n) are ordered lexicographically:
(1,2), (1,3), ..., (1,n), (2,3), ...  Column (j,k) of a generator matrix holds
the coordinates of sigma_i(v_{j,k}); matrices act on column vectors, so the
matrix of a word is the product of its letters' matrices in written order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .braid import BraidWord
from .laurent import ONE, ZERO, LaurentPoly2, lp_div_unit, lp_eval, lp_is_unit_monomial

q = LaurentPoly2.monomial(1, 0)
t = LaurentPoly2.monomial(0, 1)


@dataclass(frozen=True, order=True)
class BasisIndex:
    j: int
    k: int

    def __post_init__(self):
        if not (1 <= self.j < self.k):
            raise ValueError(f"basis index needs 1 <= j < k, got ({self.j}, {self.k})")


@lru_cache(maxsize=None)
def basis(n: int) -> tuple[BasisIndex, ...]:
    return tuple(BasisIndex(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1))


@lru_cache(maxsize=None)
def _position(n: int) -> dict[tuple[int, int], int]:
    return {(b.j, b.k): pos for pos, b in enumerate(basis(n))}


def dim(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class LKMatrix:
    n: int
    entries: tuple[tuple[LaurentPoly2, ...], ...]

    def __post_init__(self):
        d = dim(self.n)
        if len(self.entries) != d or any(len(r) != d for r in self.entries):
            raise ValueError(f"LK matrix for n={self.n} must be {d}x{d}")

    @property
    def dim(self) -> int:
        return dim(self.n)

    @classmethod
    def identity(cls, n: int) -> "LKMatrix":
        d = dim(n)
        return cls(n, tuple(tuple(ONE if r == c else ZERO for c in range(d)) for r in range(d)))

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[dict[int, LaurentPoly2]]) -> "LKMatrix":
        d = dim(n)
        rows = [[ZERO] * d for _ in range(d)]
        for c, col in enumerate(columns):
            for r, v in col.items():
                rows[r][c] = v
        return cls(n, tuple(tuple(r) for r in rows))

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def entry(self, row: tuple[int, int], col: tuple[int, int]) -> LaurentPoly2:
        pos = _position(self.n)
        return self.entries[pos[row]][pos[col]]

    def column(self, c: int) -> dict[int, LaurentPoly2]:
        return {r: self.entries[r][c] for r in range(self.dim) if self.entries[r][c]}

    def __matmul__(self, other: "LKMatrix") -> "LKMatrix":
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        d = self.dim
        cols = [other.column(c) for c in range(d)]
        out = [[ZERO] * d for _ in range(d)]
        for r in range(d):
            row = self.entries[r]
            for c, col in enumerate(cols):
                acc = ZERO
                for k, v in col.items():
                    if row[k]:
                        acc = acc + row[k] * v
                out[r][c] = acc
        return LKMatrix(self.n, tuple(tuple(r) for r in out))

    def scale(self, lam: LaurentPoly2) -> "LKMatrix":
        return LKMatrix(self.n, tuple(tuple(lam * e for e in r) for r in self.entries))

    def rows_as_text(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.entries]


def _sigma_column(n: int, i: int, j: int, k: int) -> dict[tuple[int, int], LaurentPoly2]:
    """sigma_i(v_{j,k}) as a map basis pair -> coefficient."""
    if i not in (j - 1, j, k - 1, k):
        return {(j, k): ONE}
    if i == j - 1:
        return {(i, k): q, (i, j): q * q - q, (j, k): 1 - q}
    if i == j and j != k - 1:
        return {(j + 1, k): ONE}
    if i == k - 1 and i != j:
        # the t-term enters with a minus sign; with a plus sign the braid
        # relation s1 s2 s1 = s2 s1 s2 fails already for n = 3
        return {(j, i): q, (j, k): 1 - q, (i, k): -(q * q - q) * t}
    if i == k:
        return {(j, k + 1): ONE}
    # i == j == k - 1
    return {(j, k): -(t * q * q)}


def _check_generator(n: int, i: int) -> None:
    if n < 2:
        raise ValueError(f"need at least 2 strands, got {n}")
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for B_{n}")


@lru_cache(maxsize=None)
def _positive_generator(n: int, i: int) -> LKMatrix:
    pos = _position(n)
    cols = []
    for b in basis(n):
        col = _sigma_column(n, i, b.j, b.k)
        cols.append({pos[key]: v for key, v in col.items() if v})
    return LKMatrix.from_columns(n, cols)


@lru_cache(maxsize=None)
def _negative_generator(n: int, i: int) -> LKMatrix:
    # sigma_i fixes every v_{j,k} with {j,k} disjoint from {i,i+1}, scales
    # v_{i,i+1}, and for each other index m maps the pair (v_{m,i}-type,
    # v_{m,i+1}-type) by a 2x2 block [[0, q], [1, 1-q]] plus a term in
    # v_{i,i+1}.  With M = [[s, r], [0, K]] the inverse is
    # [[1/s, -(1/s) r K^-1], [0, K^-1]]; K^-1 = [[(q-1)/q, 1], [1/q, 0]].
    pos = _position(n)
    d = dim(n)
    m_pos = _positive_generator(n, i)
    e = pos[(i, i + 1)]
    s = m_pos.entries[e][e]
    qinv = LaurentPoly2.monomial(-1, 0)
    cols: list[dict[int, LaurentPoly2]] = [dict() for _ in range(d)]
    cols[e] = {e: lp_div_unit(ONE, s)}
    handled = {e}
    for m in range(1, n + 1):
        if m in (i, i + 1):
            continue
        a_key = (min(m, i), max(m, i))
        b_key = (min(m, i + 1), max(m, i + 1))
        a, b = pos[a_key], pos[b_key]
        # coupling of the block's images into v_{i,i+1}
        r_a, r_b = m_pos.entries[e][a], m_pos.entries[e][b]
        # K^-1 columns
        kinv_a = {a: (q - 1) * qinv, b: qinv}
        kinv_b = {a: ONE}
        for c, kcol in ((a, kinv_a), (b, kinv_b)):
            col = dict(kcol)
            top = ZERO
            for idx, val in kcol.items():
                coupling = r_a if idx == a else r_b
                top = top + coupling * val
            top = -lp_div_unit(top, s)
            if top:
                col[e] = top
            cols[c] = col
            handled.add(c)
    for c in range(d):
        if c not in handled:
            cols[c] = {c: ONE}
    inv = LKMatrix.from_columns(n, cols)
    if not is_identity(m_pos @ inv):
        raise AssertionError(f"block inverse failed for n={n}, i={i}")
    return inv


def generator_matrix(n: int, i: int, sign: int = 1) -> LKMatrix:
    _check_generator(n, i)
    if sign == 1:
        return _positive_generator(n, i)
    if sign == -1:
        return _negative_generator(n, i)
    raise ValueError(f"sign must be +1 or -1, got {sign}")


def _apply_generator_right(m: list[list[LaurentPoly2]], n: int, i: int, sign: int) -> list[list[LaurentPoly2]]:
    g = generator_matrix(n, i, sign)
    d = dim(n)
    cols = [g.column(c) for c in range(d)]
    out = []
    for row in m:
        new_row = []
        for col in cols:
            acc = ZERO
            for k, v in col.items():
                if row[k]:
                    acc = acc + row[k] * v
            new_row.append(acc)
        out.append(new_row)
    return out


def represent(w: BraidWord) -> LKMatrix:
    n = w.strands
    ident = LKMatrix.identity(n)
    m = [list(r) for r in ident.entries]
    for i, s in w.letters:
        m = _apply_generator_right(m, n, i, s)
    return LKMatrix(n, tuple(tuple(r) for r in m))


def is_identity(m: LKMatrix) -> bool:
    return is_scalar(m) == ONE


def is_scalar(m: LKMatrix) -> Optional[LaurentPoly2]:
    lam = m.entries[0][0]
    for r, row in enumerate(m.entries):
        for c, e in enumerate(row):
            if r == c:
                if e != lam:
                    return None
            elif e:
                return None
    return lam


def spot_eval(m: LKMatrix, q0, t0) -> list[list[Fraction]]:
    return [[lp_eval(e, q0, t0) for e in row] for row in m.entries]


def determinant(m: LKMatrix) -> LaurentPoly2:
    """Exact determinant by Laplace expansion along sparse rows (small n only)."""
    return _det(tuple(tuple(r) for r in m.entries))


def _det(rows: tuple[tuple[LaurentPoly2, ...], ...]) -> LaurentPoly2:
    size = len(rows)
    if size == 0:
        return ONE
    if size == 1:
        return rows[0][0]
    # expand along the sparsest row
    r = min(range(size), key=lambda k: sum(1 for e in rows[k] if e))
    total = ZERO
    for c, e in enumerate(rows[r]):
        if not e:
            continue
        minor = tuple(tuple(row[:c] + row[c + 1:]) for k, row in enumerate(rows) if k != r)
        term = e * _det(minor)
        total = total + (term if (r + c) % 2 == 0 else -term)
    return total


def is_unit_determinant(m: LKMatrix) -> bool:
    return lp_is_unit_monomial(determinant(m)) is not None

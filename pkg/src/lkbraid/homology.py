"""Chain-level computation of the second homology of the pair-configuration space.

The space of unordered point pairs is modelled by the Cayley complex of
<x_1..x_n, y | r_{j,k}> with

    r_{j,j} = [x_j, y x_j y],      r_{j,k} = [x_j, y x_k y^-1]   (j < k)

and commutators [a, b] = a^-1 b^-1 a b.  Chains have coefficients in
Z[q^{+-1}, t^{+-1}] with phi(x_j) = q and phi(y) = t.  C_1 has basis
[x_1]..[x_n], [y]; C_2 has one face f_{j,k} per relator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .laurent import ONE, ZERO, LaurentPoly2, Monomial, lp_eval, unit_ratio

q = LaurentPoly2.monomial(1, 0)
t = LaurentPoly2.monomial(0, 1)

Gen = tuple[str, int]  # ("x", j) or ("y", 0)
Y: Gen = ("y", 0)


def X(j: int) -> Gen:
    return ("x", j)


def gen_name(g: Gen) -> str:
    return "y" if g[0] == "y" else f"x[{g[1]}]"


@dataclass(frozen=True)
class GroupWord:
    letters: tuple[tuple[Gen, int], ...] = ()

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -s) for g, s in reversed(self.letters)))

    def __str__(self):
        return " ".join(gen_name(g) + ("" if s > 0 else "^-1") for g, s in self.letters)


def word(*letters: tuple[Gen, int]) -> GroupWord:
    return GroupWord(tuple(letters))


def commutator(a: GroupWord, b: GroupWord) -> GroupWord:
    return a.inverse() * b.inverse() * a * b


def _phi_gen(g: Gen) -> Monomial:
    return Monomial(0, 1) if g[0] == "y" else Monomial(1, 0)


def phi_word(w: GroupWord) -> Monomial:
    m = Monomial(0, 0)
    for g, s in w.letters:
        m = m * (_phi_gen(g) if s > 0 else _phi_gen(g).inverse())
    return m


@dataclass(frozen=True)
class ChainOne:
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coefficients",
                           {g: v for g, v in self.coefficients.items() if v})

    def __getitem__(self, g: Gen) -> LaurentPoly2:
        return self.coefficients.get(g, ZERO)

    def __add__(self, other: "ChainOne") -> "ChainOne":
        out = dict(self.coefficients)
        for g, v in other.coefficients.items():
            out[g] = out.get(g, ZERO) + v
        return ChainOne(out)

    def __sub__(self, other: "ChainOne") -> "ChainOne":
        return self + other.scale(-ONE)

    def scale(self, c: LaurentPoly2) -> "ChainOne":
        return ChainOne({g: c * v for g, v in self.coefficients.items()})

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other):
        return isinstance(other, ChainOne) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def format(self) -> str:
        if not self.coefficients:
            return "0"
        keys = sorted(self.coefficients, key=lambda g: (g[0] == "y", g[1]))
        return " + ".join(f"({self.coefficients[g]})*{gen_name(g)}" for g in keys)


def basis_vector(g: Gen) -> ChainOne:
    return ChainOne({g: ONE})


def fox_vector(w: GroupWord) -> ChainOne:
    """[w] by the rules [1] = 0, [gw] = [g] + phi(g)[w], [g^-1 w] = phi(g)^-1([w] - e_g)."""
    out: dict[Gen, LaurentPoly2] = {}
    prefix = Monomial(0, 0)
    for g, s in w.letters:
        ph = _phi_gen(g)
        if s > 0:
            contrib = prefix.to_poly()
            prefix = prefix * ph
        else:
            prefix = prefix * ph.inverse()
            contrib = -prefix.to_poly()
        out[g] = out.get(g, ZERO) + contrib
    return ChainOne(out)


def relator(j: int, k: int) -> GroupWord:
    if not 1 <= j <= k:
        raise ValueError(f"relator needs 1 <= j <= k, got ({j}, {k})")
    xj, xk, y = word((X(j), 1)), word((X(k), 1)), word((Y, 1))
    if j == k:
        return commutator(xj, y * xj * y)
    return commutator(xj, y * xk * y.inverse())


Face = tuple[int, int]


def face_name(f: Face) -> str:
    return f"f[{f[0]},{f[1]}]"


@dataclass(frozen=True)
class ChainTwo:
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self):
        for j, k in self.coefficients:
            if not 1 <= j <= k:
                raise ValueError(f"face index needs j <= k, got ({j}, {k})")
        object.__setattr__(self, "coefficients",
                           {f: v for f, v in self.coefficients.items() if v})

    def __getitem__(self, f: Face) -> LaurentPoly2:
        return self.coefficients.get(f, ZERO)

    def support(self) -> set[Face]:
        return set(self.coefficients)

    def __eq__(self, other):
        return isinstance(other, ChainTwo) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def format(self) -> str:
        if not self.coefficients:
            return "0"
        return " + ".join(f"({self.coefficients[f]})*{face_name(f)}" for f in sorted(self.coefficients))


def boundary(c: ChainTwo) -> ChainOne:
    out = ChainOne()
    for (j, k), v in c.coefficients.items():
        out = out + fox_vector(relator(j, k)).scale(v)
    return out


def printed_boundary(j: int, k: int) -> ChainOne:
    """The closed forms for the face boundaries as published."""
    if j == k:
        pre = 1 + LaurentPoly2.monomial(-1, -1)
        return ChainOne({X(j): pre * (1 - t), Y: pre * (q - 1)})
    pre = LaurentPoly2.monomial(-1, 0) - LaurentPoly2.monomial(-2, 0)
    return ChainOne({X(j): -pre, X(k): pre * t, Y: -pre * (q - 1)})


def printed_kernel_vector(j: int, k: int) -> ChainTwo:
    """(q-1) f_{j,j} - (q-1) t f_{k,k} + (1-t)(1+qt) f_{j,k}, as published."""
    return ChainTwo({(j, j): q - 1, (k, k): -(q - 1) * t, (j, k): (1 - t) * (1 + q * t)})


def boundary_unit_deviation(j: int, k: int) -> Optional[Monomial]:
    """The unit u with fox_vector(r_{j,k}) == u * printed_boundary(j, k), if any."""
    computed = boundary(ChainTwo({(j, k): ONE}))
    printed = printed_boundary(j, k)
    if set(computed.coefficients) != set(printed.coefficients):
        return None
    unit = None
    for g, v in printed.coefficients.items():
        u = unit_ratio(computed[g], v)
        if u is None or (unit is not None and u != unit):
            return None
        unit = u
    return unit


# -- kernel of the boundary map --------------------------------------------

def _to_sympy(p: LaurentPoly2, sq, st):
    import sympy

    return sympy.Add(*[c * sq ** a * st ** b for (a, b), c in p.items()])


def _from_sympy(expr, sq, st) -> LaurentPoly2:
    import sympy

    poly = sympy.Poly(sympy.expand(expr), sq, st)
    return LaurentPoly2({(int(a), int(b)): int(c) for (a, b), c in poly.terms()})


def _min_shift(ps: Iterable[LaurentPoly2]) -> tuple[int, int]:
    exps = [e for p in ps for e in p.terms]
    return min(a for a, _ in exps), min(b for _, b in exps)


def primitive_part(coeffs: Sequence[LaurentPoly2]) -> list[LaurentPoly2]:
    """Divide a vector over the Laurent ring by the gcd of its entries."""
    import sympy

    sq, st = sympy.symbols("q t")
    nonzero = [c for c in coeffs if c]
    da, db = _min_shift(nonzero)
    polys = [_to_sympy(c.shift(-da, -db), sq, st) for c in coeffs]
    g = sympy.gcd_list([p for p in polys if p != 0])
    out = [_from_sympy(sympy.cancel(p / g), sq, st) if p != 0 else ZERO for p in polys]
    for c, o in zip(coeffs, out):
        # exact check, independent of the sympy path
        if c and _from_sympy(_to_sympy(o, sq, st) * g, sq, st).shift(da, db) != c:
            raise AssertionError("content removal was not exact")
    return out


def _cross(u: Sequence[LaurentPoly2], v: Sequence[LaurentPoly2]) -> list[LaurentPoly2]:
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def _normalize_unit(vec: list[LaurentPoly2]) -> list[LaurentPoly2]:
    # f_{j,j} coefficient: lowest exponent (0, 0), top term positive
    lead = vec[0]
    a, b = min(lead.terms)
    top = lead.terms[max(lead.terms)]
    sign = 1 if top > 0 else -1
    return [c.shift(-a, -b) * sign for c in vec]


def kernel_vector(j: int, k: int) -> ChainTwo:
    """Primitive solution of the 3x3 system supported on f_{j,j}, f_{k,k}, f_{j,k}."""
    if not 1 <= j < k:
        raise ValueError(f"kernel vector needs j < k, got ({j}, {k})")
    faces = [(j, j), (k, k), (j, k)]
    bds = [boundary(ChainTwo({f: ONE})) for f in faces]
    rows = [[b[g] for b in bds] for g in (X(j), X(k), Y)]
    sol = None
    for r1, r2 in ((0, 1), (0, 2), (1, 2)):
        cand = _cross(rows[r1], rows[r2])
        if any(cand):
            sol = cand
            break
    if sol is None:
        raise AssertionError("boundary system has rank < 2")
    sol = _normalize_unit(primitive_part(sol))
    vec = ChainTwo(dict(zip(faces, sol)))
    if not boundary(vec).is_zero():
        raise AssertionError(f"derived v_{j},{k} is not a cycle")
    return vec


def kernel_basis(n: int) -> list[ChainTwo]:
    if n < 2:
        raise ValueError(f"need at least 2 strands, got {n}")
    return [kernel_vector(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]


def all_faces(n: int) -> list[Face]:
    return [(j, k) for j in range(1, n + 1) for k in range(j, n + 1)]


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                f = m[r][col] / m[rank][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def verify_rank(n: int, basis: Sequence[ChainTwo], trials: int = 3, seed: int = 0) -> bool:
    """Independence certificate: the evaluated coefficient matrix has full row rank
    at ``trials`` random nonzero rational points."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if not basis:
        return True
    rng = random.Random(seed)
    faces = all_faces(n)
    for _ in range(trials):
        q0 = Fraction(rng.choice((-1, 1)) * rng.randint(1, 97), rng.randint(1, 89))
        t0 = Fraction(rng.choice((-1, 1)) * rng.randint(1, 97), rng.randint(1, 89))
        rows = [[lp_eval(v[f], q0, t0) for f in faces] for v in basis]
        if _rank(rows) != len(basis):
            return False
    return True


@dataclass
class NormalizationReport:
    """Per-face units relating the derived kernel basis to the published one.

    ``face_units[f]`` is u_f with derived[f] == vector_units[v] * u_f * printed[f]
    for every basis vector v whose support contains f.
    """

    n: int
    face_units: dict
    vector_units: dict
    consistent: bool

    def lines(self) -> list[str]:
        out = [f"n={self.n} consistent={self.consistent}"]
        for f in sorted(self.face_units):
            out.append(f"{face_name(f)} unit {self.face_units[f]}")
        return out


def normalization_report(n: int) -> NormalizationReport:
    face_units: dict = {}
    vector_units: dict = {}
    consistent = True
    for v in kernel_basis(n):
        (j, _), (k, _) = sorted(f for f in v.support() if f[0] == f[1])
        printed = printed_kernel_vector(j, k)
        if v.support() != printed.support():
            consistent = False
            continue
        # fix the per-vector unit by the f_{j,j} entry
        lead = unit_ratio(v[(j, j)], printed[(j, j)])
        if lead is None:
            consistent = False
            continue
        vector_units[(j, k)] = lead
        for f in v.support():
            u = unit_ratio(v[f], printed[f] * lead.to_poly())
            if u is None or face_units.setdefault(f, u) != u:
                consistent = False
    return NormalizationReport(n, face_units, vector_units, consistent)

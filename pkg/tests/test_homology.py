from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lkbraid.homology import (ChainOne, ChainTwo, GroupWord, X, Y, all_faces, basis_vector, boundary,
                              boundary_unit_deviation, fox_vector, kernel_basis, kernel_vector,
                              normalization_report, phi_word, printed_boundary, printed_kernel_vector,
                              relator, verify_rank, word)
from lkbraid.laurent import ONE, LaurentPoly2, Monomial, lp_parse, q, t

x1, x2, y = word((X(1), 1)), word((X(2), 1)), word((Y, 1))

# derived basis vector for (1,2), computed once and cross-checked against a sympy nullspace
KERNEL_12 = {(1, 1): "-1 + q", (2, 2): "t - q*t", (1, 2): "t^-2 - t^-1 + q*t^-1 - q"}


@st.composite
def group_words(draw, n=3, max_len=8):
    gens = [X(j) for j in range(1, n + 1)] + [Y]
    return GroupWord(tuple(draw(st.lists(st.tuples(st.sampled_from(gens), st.sampled_from([1, -1])),
                                         max_size=max_len))))


def _phi_poly(w: GroupWord) -> LaurentPoly2:
    return phi_word(w).to_poly()


def test_phi_word_examples():
    assert phi_word(x1) == Monomial(1, 0)
    assert phi_word(y) == Monomial(0, 1)
    assert phi_word(y * y) == Monomial(0, 2)
    assert phi_word(x1.inverse() * y) == Monomial(-1, 1)


def test_phi_generators_match_quadrature():
    from lkbraid.forknoodle import disc_model
    from oracles import phi_by_quadrature
    m = disc_model(2)
    (px, py), r = m.p(1), Fraction(1, 10)
    xi = [m.d1, (px - r, py - r), (px + r, py - r), (px + r, py + r), (px - r, py + r), (px - r, py - r), m.d1]
    assert phi_by_quadrature(xi, [m.d2], m.punctures) == (1, 0)
    tau1 = [m.d1, m.d2]
    tau2 = [m.d2, (Fraction(1, 2), Fraction(-3, 5)), (Fraction(-1, 2), Fraction(-3, 5)), m.d1]
    assert phi_by_quadrature(tau1, tau2, m.punctures) == (0, 1)


def test_fox_examples():
    assert fox_vector(x1) == basis_vector(X(1))
    assert fox_vector(x1 * y) == ChainOne({X(1): ONE, Y: q})
    assert fox_vector(x1.inverse()) == ChainOne({X(1): -q ** -1})
    assert fox_vector(GroupWord()).is_zero()


def test_relator_examples():
    assert str(relator(1, 1)) == "x[1]^-1 y^-1 x[1]^-1 y^-1 x[1] y x[1] y"
    assert str(relator(1, 2)) == "x[1]^-1 y x[2]^-1 y^-1 x[1] y x[2] y^-1"
    with pytest.raises(ValueError):
        relator(2, 1)


def test_relators_match_sympy_fox():
    from oracles import fox_sympy, relator_letters, sympy_terms
    names = {"y": Y, "x1": X(1), "x2": X(2)}
    for j, k in ((1, 1), (1, 2), (2, 2)):
        ref = fox_sympy(relator_letters(j, k))
        ours = fox_vector(relator(j, k))
        assert {names[g]: sympy_terms(c) for g, c in ref.items() if sympy_terms(c)} == \
            {g: v.terms for g, v in ours.coefficients.items()}


def test_boundary_examples():
    pre = q ** -1 - q ** -2
    assert boundary(ChainTwo({(1, 2): ONE})) == ChainOne({X(1): -pre, X(2): pre * t, Y: -pre * (q - 1)})
    u = boundary_unit_deviation(1, 1)
    assert u is not None
    assert boundary(ChainTwo({(1, 1): ONE})) == printed_boundary(1, 1).scale(u.to_poly())
    assert boundary(ChainTwo()).is_zero()


@pytest.mark.parametrize("n", range(2, 7))
def test_boundary_formulas(n):
    units = set()
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            assert fox_vector(relator(j, k)) == printed_boundary(j, k)
        units.add(boundary_unit_deviation(j, j))
    assert units == {Monomial(-1, -1)}


def test_kernel_examples():
    kb = kernel_basis(4)
    assert len(kb) == 6
    pairs = [(j, k) for j in range(1, 5) for k in range(j + 1, 5)]
    for (j, k), v in zip(pairs, kb):
        assert boundary(v).is_zero()
        assert v.support() == {(j, j), (k, k), (j, k)}
    assert kernel_vector(1, 2) == ChainTwo({f: lp_parse(s) for f, s in KERNEL_12.items()})
    with pytest.raises(ValueError):
        kernel_vector(2, 2)


@pytest.mark.parametrize("jk", [(1, 2), (1, 3), (2, 5)])
def test_kernel_matches_sympy_nullspace(jk):
    import sympy
    from oracles import kernel_nullspace, q as sq, t as st_
    j, k = jk
    ref = kernel_nullspace(j, k)
    v = kernel_vector(j, k)
    ours = [sum(c * sq ** a * st_ ** b for (a, b), c in v[f].items()) for f in ((j, j), (k, k), (j, k))]
    ratio = sympy.simplify(ours[0] / ref[0])
    assert all(sympy.simplify(o - ratio * r) == 0 for o, r in zip(ours, ref))


@pytest.mark.parametrize("n", range(2, 9))
def test_kernel_cycles(n):
    kb = kernel_basis(n)
    assert len(kb) == n * (n - 1) // 2
    assert all(boundary(v).is_zero() for v in kb)


def test_printed_kernel_vector_is_not_a_cycle():
    # the published vector only works after per-face unit changes
    assert not boundary(printed_kernel_vector(1, 2)).is_zero()


@pytest.mark.parametrize("n", [3, 4, 6])
def test_normalization_report(n):
    rep = normalization_report(n)
    assert rep.consistent
    for (j, k), u in rep.face_units.items():
        assert u == (Monomial(0, 0) if j == k else Monomial(0, -2))


def test_verify_rank_examples():
    assert verify_rank(3, kernel_basis(3), trials=3)
    kb = kernel_basis(3)
    assert not verify_rank(3, kb + [kb[0]], trials=3)
    assert verify_rank(3, [], trials=1)
    with pytest.raises(ValueError):
        verify_rank(3, kb, trials=0)


def test_printed_basis_has_full_rank():
    # rank of the published basis at a sample point, checked with sympy
    import sympy
    faces = all_faces(3)
    pts = [(Fraction(2), Fraction(3)), (Fraction(-1, 2), Fraction(5, 7))]
    vecs = [printed_kernel_vector(j, k) for j, k in ((1, 2), (1, 3), (2, 3))]
    for q0, t0 in pts:
        mat = sympy.Matrix([[v[f].evaluate(q0, t0) for f in faces] for v in vecs])
        assert mat.rank() == 3
    assert verify_rank(3, vecs, trials=3)


@settings(max_examples=200, deadline=None)
@given(group_words(), group_words())
def test_fox_cocycle(u, v):
    assert fox_vector(u * v) == fox_vector(u) + fox_vector(v).scale(_phi_poly(u))


@settings(max_examples=200, deadline=None)
@given(group_words())
def test_fox_of_w_winv_vanishes(w):
    assert fox_vector(w * w.inverse()).is_zero()

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lkbraid.braid import BraidWord, full_twist_word, invert, parse_word, random_word
from lkbraid.laurent import ONE, LaurentPoly2, lp_parse, q, t
from lkbraid.lkrep import (BasisIndex, LKMatrix, basis, determinant, generator_matrix, is_identity, is_scalar,
                           is_unit_determinant, represent, spot_eval)

# represent(s1 s2 s1) for n = 3, rows in basis order (1,2), (1,3), (2,3); derived with sympy
BRAID_RELATION_N3 = [
    ["0", "q^3*t - q^4*t", "-q^4*t"],
    ["0", "-q^3*t", "0"],
    ["-q^2*t", "-q^2*t + q^3*t", "0"],
]


def _col(m: LKMatrix, j: int, k: int) -> dict[tuple[int, int], LaurentPoly2]:
    return {(b.j, b.k): m.entry((b.j, b.k), (j, k)) for b in basis(m.n) if not m.entry((b.j, b.k), (j, k)).is_zero()}


def test_basis_order():
    assert [(b.j, b.k) for b in basis(4)] == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    with pytest.raises(ValueError):
        BasisIndex(2, 2)


def test_generator_examples():
    assert generator_matrix(2, 1).entries == ((-t * q ** 2,),)
    assert _col(generator_matrix(3, 1), 2, 3) == {(1, 3): q, (1, 2): q ** 2 - q, (2, 3): 1 - q}
    assert _col(generator_matrix(4, 2), 1, 4) == {(1, 4): ONE}
    assert _col(generator_matrix(3, 2), 1, 2) == {(1, 3): ONE}


def test_generator_remaining_cases():
    # i = j != k-1 and the corrected i = k-1 != j case
    assert _col(generator_matrix(4, 2), 2, 4) == {(3, 4): ONE}
    assert _col(generator_matrix(3, 2), 1, 3) == {(1, 2): q, (1, 3): 1 - q, (2, 3): -(q ** 2 - q) * t}


def test_generator_range():
    with pytest.raises(ValueError):
        generator_matrix(3, 3)
    with pytest.raises(ValueError):
        generator_matrix(3, 1, 2)


def test_represent_examples():
    assert represent(BraidWord(3)) == LKMatrix.identity(3)
    assert is_identity(represent(parse_word("s1 s1^-1", 4)))
    assert represent(parse_word("s1 s2 s1", 3)) == represent(parse_word("s2 s1 s2", 3))
    fixture = tuple(tuple(lp_parse(e) for e in row) for row in BRAID_RELATION_N3)
    assert represent(parse_word("s1 s2 s1", 3)).entries == fixture


def test_braid_relation_fixture_matches_sympy():
    from oracles import lk_word, sympy_terms
    m = lk_word(3, [(1, 1), (2, 1), (1, 1)])
    for r, row in enumerate(BRAID_RELATION_N3):
        for c, text in enumerate(row):
            assert sympy_terms(m[r, c]) == lp_parse(text).terms


def test_inverse_matches_sympy():
    from oracles import lk_word, sympy_terms
    m = lk_word(3, [(2, -1)])
    ours = generator_matrix(3, 2, -1)
    for r in range(3):
        for c in range(3):
            assert sympy_terms(m[r, c]) == ours.entries[r][c].terms


def test_right_to_left():
    # with s2 acting first, column (1,2) of s1 s2 is s1 applied to v_{1,3}
    m = represent(parse_word("s1 s2", 3))
    assert _col(m, 1, 2) == _col(generator_matrix(3, 1), 1, 3)


def test_is_identity_examples():
    assert is_identity(represent(BraidWord(2)))
    assert not is_identity(represent(parse_word("s1", 2)))
    w = random_word(4, 9, 11)
    assert is_identity(represent(w * invert(w)))


def test_is_scalar_examples():
    assert is_scalar(represent(full_twist_word(3))) == q ** 6 * t ** 2
    assert is_scalar(represent(full_twist_word(2))) == q ** 4 * t ** 2
    assert is_scalar(represent(parse_word("s1", 3))) is None
    assert is_scalar(LKMatrix.identity(4)) == ONE


def test_spot_eval_examples():
    assert spot_eval(LKMatrix.identity(3), 3, Fraction(1, 2)) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert spot_eval(represent(parse_word("s1", 2)), 1, -1) == [[1]]
    with pytest.raises(ZeroDivisionError):
        spot_eval(LKMatrix.identity(2), 0, 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_braid_relations_and_commuting(n):
    for i in range(1, n - 1):
        a, b = generator_matrix(n, i), generator_matrix(n, i + 1)
        assert a @ b @ a == b @ a @ b
    for i in range(1, n):
        for j in range(i + 2, n):
            a, b = generator_matrix(n, i), generator_matrix(n, j)
            assert a @ b == b @ a


@pytest.mark.parametrize("n", range(2, 7))
def test_generator_inverses(n):
    for i in range(1, n):
        assert is_identity(generator_matrix(n, i, 1) @ generator_matrix(n, i, -1))
        assert is_identity(generator_matrix(n, i, -1) @ generator_matrix(n, i, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_full_twist_scalar(n):
    assert is_scalar(represent(full_twist_word(n))) == LaurentPoly2.monomial(2 * n, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_generator_determinants_are_units(n):
    for i in range(1, n):
        for s in (1, -1):
            assert is_unit_determinant(generator_matrix(n, i, s))


def test_determinant_values():
    # sympy gives q^3 t for n=3 and -q^4 t for n=4, every i
    for i in (1, 2):
        assert determinant(generator_matrix(3, i)) == q ** 3 * t
    for i in (1, 2, 3):
        assert determinant(generator_matrix(4, i)) == -q ** 4 * t
    d = determinant(generator_matrix(3, 1))
    assert determinant(generator_matrix(3, 1, -1)) * d == ONE


@st.composite
def word_pair(draw):
    n = draw(st.integers(2, 4))
    letters = st.lists(st.tuples(st.integers(1, n - 1), st.sampled_from([1, -1])), max_size=5)
    return BraidWord(n, tuple(draw(letters))), BraidWord(n, tuple(draw(letters)))


@settings(max_examples=40, deadline=None)
@given(word_pair())
def test_represent_homomorphism(pair):
    u, v = pair
    assert represent(u * v) == represent(u) @ represent(v)
    assert is_identity(represent(u) @ represent(invert(u)))


@settings(max_examples=40, deadline=None)
@given(word_pair(), st.sampled_from([Fraction(2), Fraction(-1, 3), Fraction(5, 2)]))
def test_spot_eval_multiplicative(pair, q0):
    u, v = pair
    a, b = spot_eval(represent(u), q0, 3), spot_eval(represent(v), q0, 3)
    prod = [[sum(a[r][k] * b[k][c] for k in range(len(b))) for c in range(len(b))] for r in range(len(a))]
    assert spot_eval(represent(u * v), q0, 3) == prod

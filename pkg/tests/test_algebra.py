from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from cpq.algebra import (
    A,
    ASTAR,
    B0,
    BMINUS,
    BPLUS,
    C,
    CSTAR,
    LETTERS,
    ONE_ELEMENT,
    ZERO_ELEMENT,
    AlgebraElement,
    AlgebraError,
    DegreeOverflow,
    EmptySector,
    Monomial,
    degree_cap,
    format_element,
    get_degree_cap,
    is_cp1,
    monomials_up_to,
    mul,
    normalize,
    parse_element,
    random_element,
    rewrite_word,
    star,
    weights,
    word_product,
)
from cpq.qcoeff import ONE, Q, qpow

from conftest import cp1_elements, elements
from oracles import apply_element, apply_word, vectors_close

PROBES = [{(k, m): 1.0} for k in range(5) for m in (-1, 0, 2)]

# -- defining relations --------------------------------------------------------------

RELATIONS = {
    "ac = q ca": (A * C, (C * A).scale(Q)),
    "c*a* = q a*c*": (CSTAR * ASTAR, (ASTAR * CSTAR).scale(Q)),
    "ac* = q c*a": (A * CSTAR, (CSTAR * A).scale(Q)),
    "ca* = q a*c": (C * ASTAR, (ASTAR * C).scale(Q)),
    "cc* = c*c": (C * CSTAR, CSTAR * C),
    "a*a + c*c = 1": (ASTAR * A + CSTAR * C, ONE_ELEMENT),
    "aa* + q^2 cc* = 1": (A * ASTAR + (C * CSTAR).scale(qpow(2)), ONE_ELEMENT),
}


@pytest.mark.parametrize("name", RELATIONS)
def test_defining_relations(name):
    lhs, rhs = RELATIONS[name]
    assert lhs == rhs


@pytest.mark.parametrize("name", RELATIONS)
def test_relations_hold_in_the_operator_representation(name):
    lhs, rhs = RELATIONS[name]
    for v in PROBES:
        assert vectors_close(apply_element(lhs, v), apply_element(rhs, v))


def test_normal_order_examples():
    assert normalize(["c", "a"]) == (A * C).scale(qpow(-1))
    assert normalize(["a", "a*"]) == ONE_ELEMENT - (C * CSTAR).scale(qpow(2))
    assert normalize(["a*", "a"]) == ONE_ELEMENT - C * CSTAR
    assert str(next(iter((CSTAR * C * ASTAR).terms))) == "a* c c*"
    assert BPLUS == C * ASTAR
    assert BMINUS == A * CSTAR
    assert B0 == C * CSTAR


def test_sphere_generator_products():
    # B- B+ = q^2 B0 (1 - q^2 B0) and B+ B- = B0 (1 - B0)
    assert BMINUS * BPLUS == (B0 - (B0 * B0).scale(qpow(2))).scale(qpow(2))
    assert BPLUS * BMINUS == B0 - B0 * B0
    assert star(BPLUS) == BMINUS


def test_monomial_weights():
    m = Monomial(astar=2, c=1, cstar=3)
    assert m.degree == 6
    assert (m.w_left, m.w_right) == (4, 0)
    assert weights(m) == (4, 0)
    assert Monomial(a=1).w_left == -1 and Monomial(a=1).w_right == 1
    assert is_cp1(B0) and is_cp1(BPLUS) and not is_cp1(A)


def test_monomials_up_to_counts():
    # normal monomials of degree d: (d+1)^2 (a-free part plus a or a* branches)
    assert [sum(1 for m in monomials_up_to(d) if m.degree == d) for d in range(5)] == [1, 4, 9, 16, 25]
    assert all(m.w_left == 0 for m in monomials_up_to(4, 0))


def test_non_normal_monomial_rejected():
    with pytest.raises(AlgebraError):
        AlgebraElement({Monomial(astar=1, a=1): ONE})


def test_degree_cap():
    assert get_degree_cap() == 24
    with degree_cap(3):
        assert get_degree_cap() == 3
        with pytest.raises(DegreeOverflow):
            A ** 2 * C ** 2
    assert get_degree_cap() == 24


def test_random_element_is_deterministic():
    assert random_element(3, 4, 7) == random_element(3, 4, 7)
    assert random_element(3, 4, 7, "cp1").is_cp1()
    assert random_element(4, 3, 7, ("weight", 2)).left_weights() == {2}
    with pytest.raises(EmptySector):
        random_element(1, 2, 0, ("weight", 3))


def test_parse_and_format():
    x = parse_element("(q^-1) a c + 2 c* c - B0 + q^2*Bp")
    assert x == (A * C).scale(qpow(-1)) + B0 + BPLUS.scale(qpow(2))
    assert parse_element(format_element(x)) == x
    assert format_element(ZERO_ELEMENT) == "0"
    assert parse_element("c a") == (A * C).scale(qpow(-1))
    for bad in ["", "a +", "(q", "x"]:
        with pytest.raises((AlgebraError, ValueError)):
            parse_element(bad)


def test_unknown_letter_and_strategy():
    with pytest.raises(AlgebraError):
        rewrite_word(["b"])
    with pytest.raises(ValueError):
        rewrite_word(["a"], strategy="middle")


# -- properties ----------------------------------------------------------------------------

words = st.lists(st.sampled_from(LETTERS), max_size=8)


@given(words)
def test_rewriting_is_confluent(word):
    left = rewrite_word(word, strategy="leftmost")
    assert left == rewrite_word(word, strategy="rightmost")
    assert left == word_product(word)


@given(words)
def test_normal_form_matches_operator_representation(word):
    x = normalize(word)
    for v in PROBES[:6]:
        assert vectors_close(apply_element(x, v), apply_word(word, v))


@given(elements(), elements(), elements())
def test_associativity(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements(), elements())
def test_product_matches_operator_representation(x, y):
    xy = mul(x, y)
    for v in PROBES[:6]:
        assert vectors_close(apply_element(xy, v), apply_element(x, apply_element(y, v)), 1e-7)


@given(elements(), elements())
def test_star_is_an_antimultiplicative_involution(x, y):
    assert star(star(x)) == x
    assert star(x * y) == star(y) * star(x)
    assert star(x + y) == star(x) + star(y)


@given(elements(), elements())
def test_weights_are_additive(x, y):
    for mx in x.terms:
        for my in y.terms:
            prod = AlgebraElement({mx: ONE}) * AlgebraElement({my: ONE})
            assert prod.left_weights() <= {mx.w_left + my.w_left}
            assert prod.right_weights() <= {mx.w_right + my.w_right}


@given(cp1_elements(), cp1_elements())
def test_invariant_subalgebra_is_closed(f, g):
    assert (f * g).is_cp1()
    assert star(f).is_cp1()


@given(st.integers(0, 6), st.integers(0, 6))
def test_c_and_cstar_commute(i, j):
    assert C ** i * CSTAR ** j == CSTAR ** j * C ** i


def test_seeded_confluence_batch():
    rng = random.Random(42)
    for _ in range(200):
        w = [rng.choice(LETTERS) for _ in range(rng.randint(0, 8))]
        assert rewrite_word(w) == rewrite_word(w, strategy="rightmost") == word_product(w)

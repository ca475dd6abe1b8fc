from __future__ import annotations

from fractions import Fraction

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
    random_element,
    rewrite_word,
    star,
)
from cpq.qcoeff import ONE, Q, qint, qpow
from cpq.symmetry import UqGenerator, act, k_power, modular, rep_K2, sigma, sigma_inverse, xz_eigenvalue

from conftest import cp1_elements, elements

HALF = Fraction(1, 2)
S_RANGE = range(1, 6)

# letter -> (coefficient, letter) images of E and F; K acts by q^(w/2)
_E_SEED = {"a": (qpow(1, -1), "c*"), "c": (ONE, "a*")}
_F_SEED = {"a*": (ONE, "c"), "c*": (qpow(-1, -1), "a")}
_W = {"a": -1, "c": -1, "a*": 1, "c*": 1}


def leibniz_on_word(seeds, word) -> AlgebraElement:
    """Apply E or F to a raw (not normal-ordered) word letter by letter:
    X(w1...wn) = sum_i K^-1(w1..w_i-1) X(w_i) K(w_i+1..wn), then normalize."""
    total = ZERO_ELEMENT
    for i, letter in enumerate(word):
        if letter not in seeds:
            continue
        coeff, image = seeds[letter]
        before = sum(_W[x] for x in word[:i])
        after = sum(_W[x] for x in word[i + 1:])
        f = coeff * qpow(Fraction(after - before, 2))
        total = total + rewrite_word(list(word[:i]) + [image] + list(word[i + 1:]), f)
    return total


# -- literal power formulas ----------------------------------------------------------------

@pytest.mark.parametrize("s", S_RANGE)
def test_power_formulas(s):
    qs = Fraction(s, 2)
    assert act("K", A ** s) == (A ** s).scale(qpow(-qs))
    assert act("Kinv", A ** s) == (A ** s).scale(qpow(qs))
    assert act("K", C ** s) == (C ** s).scale(qpow(-qs))
    assert act("K", ASTAR ** s) == (ASTAR ** s).scale(qpow(qs))
    assert act("K", CSTAR ** s) == (CSTAR ** s).scale(qpow(qs))
    assert act("F", A ** s) == ZERO_ELEMENT
    assert act("F", C ** s) == ZERO_ELEMENT
    assert act("F", ASTAR ** s) == (C * ASTAR ** (s - 1)).scale(qpow((1 - s) * HALF) * qint(s))
    assert act("F", CSTAR ** s) == (A * CSTAR ** (s - 1)).scale(-qpow(-(1 + s) * HALF) * qint(s))
    assert act("E", A ** s) == (A ** (s - 1) * CSTAR).scale(-qpow((3 - s) * HALF) * qint(s))
    assert act("E", C ** s) == (C ** (s - 1) * ASTAR).scale(qpow((1 - s) * HALF) * qint(s))
    assert act("E", ASTAR ** s) == ZERO_ELEMENT
    assert act("E", CSTAR ** s) == ZERO_ELEMENT


def test_generator_names():
    assert act(UqGenerator.E, C) == act("E", C) == ASTAR
    with pytest.raises(ValueError):
        act("G", C)


def test_differentials_of_sphere_generators():
    # on invariant elements X+ = q^(1/2) E and X- = q^(-1/2) F
    assert act("Xplus", B0) == CSTAR * ASTAR
    assert act("Xminus", B0) == (C * A).scale(qpow(-1, -1))
    assert act("Xplus", ONE_ELEMENT) == ZERO_ELEMENT
    for f in (B0, BPLUS, BMINUS):
        assert act("Xplus", f) == act("E", f).scale(qpow(HALF))
        assert act("Xminus", f) == act("F", f).scale(qpow(-HALF))


@pytest.mark.parametrize("n", range(-5, 6))
def test_xz_eigenvalue(n):
    assert xz_eigenvalue(n) == -(qpow(n + 1) * qint(n))
    assert xz_eigenvalue(n) == (ONE - qpow(2 * n)) / (ONE - qpow(-2))


def test_sigma_on_generators():
    assert sigma(BPLUS) == BPLUS.scale(qpow(-2))
    assert sigma(BMINUS) == BMINUS.scale(qpow(2))
    assert sigma(B0) == B0
    assert modular(A) == A.scale(qpow(2))
    assert modular(C) == C


def test_rep_k2():
    assert rep_K2(1).diagonal == (qpow(2), ONE, qpow(-2))
    assert rep_K2(HALF).diagonal == (Q, qpow(-1))
    assert len(rep_K2(2)) == 5
    with pytest.raises(ValueError):
        rep_K2(Fraction(1, 3))


# -- properties ------------------------------------------------------------------------------

words = st.lists(st.sampled_from(LETTERS), max_size=6)


@given(words)
def test_action_respects_the_relations(word):
    """E and F computed on raw words agree with E and F on the normal form."""
    x = rewrite_word(word)
    assert act("E", x) == leibniz_on_word(_E_SEED, word)
    assert act("F", x) == leibniz_on_word(_F_SEED, word)


@given(elements(), elements())
def test_module_algebra(x, y):
    assert act("E", x * y) == act("E", x) * act("K", y) + act("Kinv", x) * act("E", y)
    assert act("F", x * y) == act("F", x) * act("K", y) + act("Kinv", x) * act("F", y)
    assert act("K", x * y) == act("K", x) * act("K", y)
    assert act("K", act("Kinv", x)) == x


@given(elements())
def test_quantum_group_relations(x):
    assert act("K", act("E", x)) == act("E", act("K", x)).scale(Q)
    assert act("K", act("F", x)) == act("F", act("K", x)).scale(qpow(-1))
    commutator = act("E", act("F", x)) - act("F", act("E", x))
    assert commutator.scale(Q - qpow(-1)) == k_power(x, 2) - k_power(x, -2)
    xz = act("Xminus", act("Xplus", x)) - act("Xplus", act("Xminus", x)).scale(qpow(2))
    assert xz == act("Xz", x)


@given(cp1_elements())
def test_xplus_star_on_invariants(f):
    assert star(act("Xplus", f)) == act("Xminus", star(f)).scale(qpow(2, -1))
    assert star(act("Xminus", f)) == act("Xplus", star(f)).scale(qpow(-2, -1))


@given(st.integers(-3, 3), st.data())
def test_xplus_star_weighted(n, data):
    x = random_element(4, 3, data.draw(st.integers(0, 10 ** 6)), ("weight", n))
    assert star(act("Xplus", x)) == act("Xminus", star(x)).scale(qpow(2 + n, -1))


@given(st.integers(-3, 3), st.data())
def test_weight_shift(n, data):
    x = random_element(3, 3, data.draw(st.integers(0, 10 ** 6)), ("weight", n))
    assert act("E", x).left_weights() <= {n + 2}
    assert act("F", x).left_weights() <= {n - 2}
    assert act("Xz", x) == x.scale(xz_eigenvalue(n))


@given(cp1_elements(), cp1_elements())
def test_sigma_is_an_automorphism(f, g):
    assert sigma(f * g) == sigma(f) * sigma(g)
    assert sigma_inverse(sigma(f)) == f
    assert sigma(star(sigma(star(f)))) == f


@given(elements(), elements())
def test_modular_is_an_automorphism(x, y):
    assert modular(x * y) == modular(x) * modular(y)

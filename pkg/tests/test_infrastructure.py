from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cpq.algebra import A, ASTAR, B0, C, CSTAR, ONE_ELEMENT, ZERO_ELEMENT
from cpq.linalg import InconsistentSystem, SingularSystem, kernel, solve_unique
from cpq.matrix import Matrix, ShapeMismatch
from cpq.qcoeff import ONE, LaurentPoly, eval_at, qpow
from cpq.report import FAIL, NOTED, PASS, VerificationReport

from conftest import laurent_polys

# -- linear algebra -----------------------------------------------------------------------


def _rank_at(rows, cols, q0) -> int:
    """Plain Fraction Gaussian elimination at q = q0."""
    m = [[eval_at(r.get(c, ONE - ONE), q0) for c in cols] for r in rows]
    rank = 0
    for j in range(len(cols)):
        piv = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                f = m[i][j] / m[rank][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_solve_unique_small():
    x = solve_unique([({"x": ONE, "y": ONE}, 3), ({"x": ONE, "y": -ONE}, qpow(2))], ["x", "y"])
    assert x["x"] == (3 + qpow(2)) / 2
    assert x["y"] == (3 - qpow(2)) / 2
    with pytest.raises(SingularSystem):
        solve_unique([({"x": ONE, "y": ONE}, 1)], ["x", "y"])
    with pytest.raises(InconsistentSystem):
        solve_unique([({"x": ONE}, 1), ({"x": ONE}, 2)], ["x"])


@given(st.lists(st.dictionaries(st.sampled_from("abcd"), laurent_polys(2), max_size=4), min_size=1, max_size=4))
def test_kernel_against_fraction_rank(rows):
    cols = list("abcd")

    def image(col):
        return {i: r[col] for i, r in enumerate(rows) if r.get(col)}

    basis = kernel(cols, image)
    for vec in basis:
        for r in rows:
            assert sum((r.get(c, ONE - ONE) * vec.get(c, ONE - ONE) for c in cols), ONE - ONE) == 0
    rank = max(_rank_at(rows, cols, q0) for q0 in (Fraction(49, 9), Fraction(25, 121)))
    assert len(basis) == len(cols) - rank


# -- matrices ------------------------------------------------------------------------------


def test_matrix_basics():
    m = Matrix([[A, C], [CSTAR, ASTAR]])
    assert m.shape == (2, 2) and m.size == 2
    assert (m - m).is_zero()
    assert m @ Matrix.identity(2) == m
    assert -(-m) == m
    assert m.diag() == [A, ASTAR]
    assert m.star() == Matrix([[ASTAR, C], [CSTAR, A]])
    assert Matrix.zeros(2, 3).shape == (2, 3)
    assert Matrix.diagonal([ONE_ELEMENT, B0])[1, 1] == B0
    with pytest.raises(ShapeMismatch):
        Matrix([[A], [A, C]])
    with pytest.raises(ShapeMismatch):
        m @ Matrix.zeros(3)
    with pytest.raises(ShapeMismatch):
        Matrix.zeros(2, 3).size


def test_weighted_adjoint_and_conjugation():
    m = Matrix([[ZERO_ELEMENT, A], [C, ZERO_ELEMENT]])
    w = [ONE, qpow(2)]
    adj = m.star(w)
    assert adj[0, 1] == C.star().scale(qpow(2))
    assert adj[1, 0] == A.star().scale(qpow(-2))
    conj = m.conjugate_diagonal([qpow(1), ONE])
    assert conj[0, 1] == A.scale(qpow(1)) and conj[1, 0] == C.scale(qpow(-1))


# -- reports -------------------------------------------------------------------------------


def test_report_json_schema():
    r = VerificationReport("x.y.n=1", PASS, value="1", n=1, kind="phi", details=["hidden"])
    assert set(r.to_json()) == {"claim", "n", "kind", "exact", "residual_zero", "value", "paper_expected", "status"}
    json.dumps(r.to_json())
    assert r.ok and VerificationReport("x", NOTED).ok and not VerificationReport("x", FAIL).ok
    assert r.line() == "[pass] x.y.n=1: residual_zero=true value=1"
    assert VerificationReport.from_bool("z", False).status == FAIL


def test_poly_equality_is_exact():
    assert LaurentPoly({0: Fraction(1, 3)}) * 3 == ONE

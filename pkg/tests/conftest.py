from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from cpq.algebra import AlgebraElement, monomials_up_to
from cpq.qcoeff import LaurentPoly

settings.register_profile("cpq", max_examples=40, deadline=None)
settings.load_profile("cpq")

ACCEPTANCE_LINES: list = []

small_fraction = st.fractions(min_value=-3, max_value=3, max_denominator=4)
half_exponent = st.integers(-6, 6).map(lambda k: Fraction(k, 2))


@st.composite
def laurent_polys(draw, max_terms=4):
    terms = draw(st.dictionaries(half_exponent, small_fraction, max_size=max_terms))
    return LaurentPoly(terms)


@st.composite
def nonzero_polys(draw, max_terms=3):
    p = draw(laurent_polys(max_terms))
    return p if p else LaurentPoly({draw(half_exponent): 1})


def _element_strategy(max_degree, pool_filter=None):
    pool = [m for m in monomials_up_to(max_degree) if pool_filter is None or pool_filter(m)]

    @st.composite
    def build(draw, max_terms=4):
        monos = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=max_terms, unique=True))
        coeffs = draw(st.lists(st.integers(-2, 2).map(lambda k: LaurentPoly({k: 1})),
                               min_size=len(monos), max_size=len(monos)))
        signs = draw(st.lists(st.sampled_from((1, -1, 2)), min_size=len(monos), max_size=len(monos)))
        return AlgebraElement({m: c * s for m, c, s in zip(monos, coeffs, signs)})

    return build


elements = _element_strategy(3)
cp1_elements = _element_strategy(4, lambda m: m.w_left == 0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

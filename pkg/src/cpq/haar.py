"""The Haar state, an independent invariance oracle, and the twisted-trace check."""

from __future__ import annotations

import random
from functools import lru_cache

from .algebra import (
    UNIT,
    AlgebraElement,
    Monomial,
    monomials_up_to,
    mul,
    random_element,
)
from .linalg import SingularSystem, solve_unique
from .qcoeff import ONE, ZERO, LaurentPoly, LaurentRational, format_coeff
from .report import FAIL, PASS, VerificationReport
from .symmetry import UqGenerator, act, modular, sigma

__all__ = [
    "SingularSystem",
    "haar",
    "haar_monomial",
    "haar_oracle",
    "twisted_trace_check",
    "ORACLE_MAX_DEGREE",
]

ORACLE_MAX_DEGREE = 8


@lru_cache(maxsize=None)
def _power_value(l: int) -> LaurentRational:
    # (1 - q^2)/(1 - q^(2l+2)) = 1 / (1 + q^2 + ... + q^(2l))
    den = LaurentPoly._raw({4 * j: 1 for j in range(l + 1)})
    return LaurentRational(ONE, den)


def haar_monomial(m: Monomial):
    if m.a or m.astar or m.c != m.cstar:
        return ZERO
    if m.c == 0:
        return ONE
    return _power_value(m.c)


def haar(x: AlgebraElement):
    """Value of the Haar state; a polynomial when possible, else reduced rational."""
    by_power: dict = {}
    for m, c in x.terms.items():
        if m.a or m.astar or m.c != m.cstar:
            continue
        by_power[m.c] = by_power[m.c] + c if m.c in by_power else c
    total = ZERO
    for l in sorted(by_power):
        c = by_power[l]
        total = total + (c if l == 0 else c * _power_value(l))
    if isinstance(total, LaurentRational):
        total = total.simplify()
    return total


def haar_oracle(max_degree: int) -> dict:
    """Solve the invariance equations for h on monomials of degree <= max_degree.

    Imposes ``h(E x) = h(F x) = 0``, ``h(K x) = h(x)`` for every monomial x in
    range, plus ``h(1) = 1``.  Returns a map Monomial -> value.  The left
    actions preserve the right weight, so each right-weight sector is solved
    on its own.
    """
    if max_degree > ORACLE_MAX_DEGREE:
        raise ValueError(f"max_degree {max_degree} exceeds the solver guard {ORACLE_MAX_DEGREE}")
    monos = monomials_up_to(max_degree)
    sectors: dict = {}
    for m in monos:
        sectors.setdefault(m.w_right, []).append(m)
    table = {}
    for wr in sorted(sectors):
        unknowns = sectors[wr]
        allowed = set(unknowns)
        eqs = []
        for m in unknowns:
            x = AlgebraElement._raw({m: ONE})
            for g in (UqGenerator.E, UqGenerator.F):
                img = act(g, x)
                if img.terms:
                    eqs.append((_restrict(img, allowed), ZERO))
            k = act(UqGenerator.K, x) - x
            if k.terms:
                eqs.append((_restrict(k, allowed), ZERO))
        if wr == 0:
            eqs.append(({UNIT: ONE}, ONE))
        table.update(solve_unique(eqs, unknowns))
    return table


def _restrict(x: AlgebraElement, allowed: set) -> dict:
    row = {}
    for m, c in x.terms.items():
        if m not in allowed:
            raise SingularSystem(f"action left the degree range at {m}")
        row[m] = c
    return row


def twisted_trace_check(samples: int, degree: int, seed: int, domain: str = "cp1") -> VerificationReport:
    """Check ``h(x y) = h(s(y) x)`` on seeded pairs.

    On ``cp1`` pairs ``s`` is :func:`sigma`; on ``full`` pairs it is the
    modular automorphism of the whole algebra.
    """
    rng = random.Random(seed)
    auto = sigma if domain == "cp1" else modular
    constraint = "cp1" if domain == "cp1" else "any"
    bad = []
    for _ in range(samples):
        x = random_element(degree, rng.randint(1, 4), rng, constraint)
        y = random_element(degree, rng.randint(1, 4), rng, constraint)
        lhs, rhs = haar(mul(x, y)), haar(mul(auto(y), x))
        if lhs != rhs:
            bad.append(f"x={x} y={y}: {format_coeff(lhs)} != {format_coeff(rhs)}")
    return VerificationReport(
        f"haar.twisted_trace.{domain}.samples={samples}",
        FAIL if bad else PASS,
        residual_zero=not bad,
        value=f"{samples - len(bad)}/{samples} pairs equal",
        paper_expected=f"{samples}/{samples} pairs equal",
        details=bad,
    )

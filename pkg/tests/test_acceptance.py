"""Acceptance criteria 1-11, each at its stated tolerance.

Every test records one ``PASS``/``FAIL`` line, printed in the terminal summary.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

from cpq.algebra import LETTERS, ONE_ELEMENT, random_element, rewrite_word, star, word_product
from cpq.bundles import PHI, PSI, curvature_eigencheck, frame, holo_kernel, projector
from cpq.calculus import d_one, dd, form_star, hodge, partial, partial_bar
from cpq.haar import haar_monomial, haar_oracle, twisted_trace_check
from cpq.qcoeff import as_coeff, eval_at, qint, qpow
from cpq.sigma_model import (
    abs_top,
    charge_identity_check,
    cocycle_suite,
    energy,
    charge_constant,
    qtrace,
    selfduality_residuals,
    top,
    top_unnormalized,
)
from cpq.cli import EXIT_OK, main
from cpq.symmetry import act

from conftest import ACCEPTANCE_LINES

Q_SAMPLES = (Fraction(3, 10), Fraction(1, 2), Fraction(9, 10))
FAMILY_5 = [(m, PHI) for m in range(1, 6)] + [(-m, PSI) for m in range(1, 6)]


def record(number: int, title: str, ok: bool, detail: str, elapsed: float) -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({detail}; {elapsed:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_criterion_01_frame_completeness():
    worst, bad = 0.0, []
    for n, kind in FAMILY_5:
        t = time.perf_counter()
        fr = frame(n, kind)
        ok = fr.completeness() == ONE_ELEMENT
        dt = time.perf_counter() - t
        worst = max(worst, dt)
        if not ok or dt >= 5:
            bad.append(f"{kind}{abs(n)}")
    record(1, "frame completeness |n|=1..5", not bad, f"slowest {worst:.3f}s, bad={bad}", worst)


def test_criterion_02_projectors():
    t = time.perf_counter()
    bad = [f"{k}{abs(n)}" for n, k in FAMILY_5
           if not (projector(n, k).idempotency_residual().is_zero() and projector(n, k).adjoint_residual().is_zero())]
    record(2, "projector idempotency and weighted self-adjointness |n|=1..5", not bad,
           f"bad={bad}", time.perf_counter() - t)


def test_criterion_03_quantum_traces():
    t = time.perf_counter()
    bad = []
    for n, kind in FAMILY_5:
        want = qpow(-n) if kind == PHI else qpow(abs(n))
        v = qtrace(projector(n, kind))
        if not (v.is_scalar() and v.scalar_part() == want):
            bad.append(f"{kind}{abs(n)}")
    record(3, "qTr P^Phi = q^-n, qTr P^Psi = q^|n| for |n|=1..5", not bad, f"bad={bad}", time.perf_counter() - t)


def test_criterion_04_self_duality():
    t = time.perf_counter()
    bad = []
    for n, kind in FAMILY_5:
        p_dbar_p, p_d_p = selfduality_residuals(projector(n, kind))
        if not (p_d_p if kind == PHI else p_dbar_p).is_zero():
            bad.append(f"{kind}{abs(n)}")
    record(4, "P^Phi del P^Phi = 0 and P^Psi delbar P^Psi = 0 for |n|=1..5", not bad,
           f"bad={bad}", time.perf_counter() - t)


def test_criterion_05_charge_identity_and_top():
    t = time.perf_counter()
    bad = []
    for m in range(1, 5):
        for n, kind in ((m, PHI), (-m, PSI)):
            p = projector(n, kind)
            if charge_identity_check(p).status != "pass":
                bad.append(f"identity {kind}{m}")
            value = top(p)
            # normalized value, and the unnormalized one differing by exactly 2
            if as_coeff(value) * 2 != top_unnormalized(n, kind):
                bad.append(f"factor {kind}{m}")
            if abs_top(value) != qpow(1) * qint(m) * Fraction(1, 2):
                bad.append(f"magnitude {kind}{m}")
    assert charge_constant(1, PHI) == -qpow(2)
    record(5, "charge identity |n|=1..4; Top = -+1/2 q[|n|] (unnormalized value is 2x, flagged)",
           not bad, f"bad={bad}", time.perf_counter() - t)


def test_criterion_06_bound():
    t = time.perf_counter()
    bad = []
    for n, kind in FAMILY_5:
        p = projector(n, kind)
        if as_coeff(energy(p)) - as_coeff(abs_top(top(p))):
            bad.append(f"equality {kind}{abs(n)}")
        c = p.complement()
        gap = as_coeff(energy(c)) - as_coeff(abs_top(top(c)))
        if any(eval_at(gap, q0) < 0 for q0 in Q_SAMPLES):
            bad.append(f"complement {kind}{abs(n)}")
    record(6, "S - |Top| = 0 on the families; >= 0 for 1-P at q in {3/10, 1/2, 9/10}", not bad,
           f"bad={bad}", time.perf_counter() - t)


def test_criterion_07_cocycles():
    t = time.perf_counter()
    reports = cocycle_suite(100, 3, 42)
    dt = time.perf_counter() - t
    bad = [r.claim for r in reports if r.status != "pass"]
    record(7, "b phi = 0, lambda tau = tau, lambda^3 phi = phi, phi - tau = b psi, four-point identity (100 tuples)",
           not bad and dt < 60, f"{len(reports)} identities, bad={bad}", dt)


def test_criterion_08_haar():
    t = time.perf_counter()
    cp1 = twisted_trace_check(200, 3, 42, "cp1")
    full = twisted_trace_check(200, 3, 42, "full")
    table = haar_oracle(6)
    oracle_ok = all(v == haar_monomial(m) for m, v in table.items())
    ok = cp1.status == full.status == "pass" and oracle_ok
    record(8, "twisted trace on 200 pairs; oracle = closed form through degree 6", ok,
           f"{cp1.value}, {full.value}, {len(table)} monomials", time.perf_counter() - t)


def test_criterion_09_holomorphic_sections():
    t = time.perf_counter()
    bad = []
    for m in range(1, 5):
        neg, pos = holo_kernel(-m, m + 2), holo_kernel(m, m + 2)
        if not (neg.dimension == m + 1 and neg.stable and pos.dimension == 0 and pos.stable):
            bad.append(m)
    record(9, "dim H0 = n+1 at weight -n and 0 at weight +n, n=1..4, stable at truncation+2", not bad,
           f"bad={bad}", time.perf_counter() - t)


def test_criterion_10_curvature():
    t = time.perf_counter()
    bad = [n for n in range(-5, 6) if curvature_eigencheck(n).status != "pass"]
    record(10, "X_z phi = -q^(n+1)[n] phi on generating sets, |n| <= 5", not bad, f"bad={bad}",
           time.perf_counter() - t)


def test_criterion_11_property_suites(capsys):
    t = time.perf_counter()
    rng = random.Random(42)
    bad = []
    for _ in range(500):
        w = [rng.choice(LETTERS) for _ in range(rng.randint(0, 8))]
        if not rewrite_word(w) == rewrite_word(w, strategy="rightmost") == word_product(w):
            bad.append("confluence")
            break
    for _ in range(200):
        x, y, z = (random_element(3, rng.randint(1, 4), rng) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad.append("associativity")
            break
        if act("E", x * y) != act("E", x) * act("K", y) + act("Kinv", x) * act("E", y) \
                or act("F", x * y) != act("F", x) * act("K", y) + act("Kinv", x) * act("F", y):
            bad.append("module algebra")
            break
    for _ in range(200):
        f = random_element(3, rng.randint(1, 4), rng, "cp1")
        if not d_one(dd(f)).is_zero():
            bad.append("d^2")
        if form_star(partial(f)) != partial_bar(star(f)):
            bad.append("star exchange")
        if hodge(hodge(dd(f))) != dd(f):
            bad.append("hodge")
        if bad:
            break
    full = time.perf_counter()
    code = main(["verify", "all"])
    full_dt = time.perf_counter() - full
    summary = capsys.readouterr().out.splitlines()[-1]
    if code != EXIT_OK:
        bad.append(f"verify all exit {code}")
    record(11, "confluence(500), associativity(200), module algebra, d^2=0, star, Hodge; full verify",
           not bad and full_dt < 600, f"verify all: {summary} in {full_dt:.1f}s, bad={bad}", time.perf_counter() - t)


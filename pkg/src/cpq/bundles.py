"""Line bundles over the quantum projective line: frames, projectors in an
exact square-root-free gauge, the canonical connection and holomorphic
sections."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    ONE_ELEMENT,
    AlgebraElement,
    A,
    ASTAR,
    C,
    CSTAR,
    monomials_up_to,
    star,
)
from .calculus import OneForm, TwoForm, d3
from .linalg import kernel
from .matrix import Matrix
from .qcoeff import ONE, LaurentPoly, alpha, as_coeff, beta, format_coeff, qint, qpow
from .report import FAIL, PASS, VerificationReport
from .symmetry import UqGenerator, act, xz_eigenvalue

__all__ = [
    "BundleError",
    "NotHomogeneous",
    "TruncationTooSmall",
    "Frame",
    "Projector",
    "HoloKernel",
    "frame",
    "projector",
    "generating_set",
    "nabla",
    "nabla_two",
    "curvature_value",
    "curvature_eigencheck",
    "connection_form_check",
    "flatness_check",
    "holo_kernel",
    "quantum_plane_check",
    "in_holo_kernel",
]


class BundleError(ValueError):
    pass


class NotHomogeneous(BundleError):
    pass


class TruncationTooSmall(BundleError):
    pass


PHI, PSI = "phi", "psi"


@dataclass(frozen=True)
class Frame:
    """Unnormalized frame entries and their weights; the true frame is
    ``sqrt(weights[mu]) * entries[mu]``."""

    n: int
    kind: str
    entries: tuple
    weights: tuple

    def completeness(self) -> AlgebraElement:
        """``sum_mu w_mu star(e_mu) e_mu`` (equal to 1 for a valid frame)."""
        total = AlgebraElement.scalar(0)
        for e, w in zip(self.entries, self.weights):
            total = total + (star(e) * e).scale(w)
        return total


def frame(n: int, kind: str) -> Frame:
    if kind == PHI:
        if n < 0:
            raise BundleError("the phi family needs n >= 0")
        entries = tuple(C ** (n - mu) * A ** mu for mu in range(n + 1))
        weights = tuple(alpha(n, mu) for mu in range(n + 1))
    elif kind == PSI:
        if n > 0:
            raise BundleError("the psi family needs n <= 0")
        m = -n
        entries = tuple(CSTAR ** mu * ASTAR ** (m - mu) for mu in range(m + 1))
        weights = tuple(beta(m, mu) for mu in range(m + 1))
    else:
        raise BundleError(f"unknown kind {kind!r}")
    fr = Frame(n, kind, entries, weights)
    if fr.completeness() != ONE_ELEMENT:
        raise BundleError(f"frame ({n}, {kind}) is not complete")
    return fr


@dataclass(frozen=True)
class Projector:
    """Idempotent ``P = D E D^-1`` stored as the gauge matrix ``E`` and ``D^2``.

    ``E[mu][nu] = w_nu e_mu star(e_nu)`` for a frame; complements and
    diagonal conjugates keep the same representation.
    """

    n: int
    kind: str
    gauge_matrix: Matrix
    weights: tuple
    label: str = ""

    @property
    def size(self) -> int:
        return self.gauge_matrix.size

    @property
    def J(self):
        return Fraction(self.size - 1, 2)

    def idempotency_residual(self) -> Matrix:
        e = self.gauge_matrix
        return e @ e - e

    def adjoint_residual(self) -> Matrix:
        e = self.gauge_matrix
        return e.star(self.weights) - e

    def complement(self) -> "Projector":
        one = Matrix.identity(self.size)
        return Projector(self.n, self.kind, one - self.gauge_matrix, self.weights,
                         f"1-{self.label or self.kind}")

    def conjugate(self, lam) -> "Projector":
        """Gauge change ``E -> L E L^-1`` with ``L = diag(lam)`` (weights become ``w / lam^2``)."""
        lam = [as_coeff(x) for x in lam]
        w = tuple(as_coeff(wi) / (li * li) for wi, li in zip(self.weights, lam))
        w = tuple(x.simplify() if hasattr(x, "simplify") else x for x in w)
        return Projector(self.n, self.kind, self.gauge_matrix.conjugate_diagonal(lam), w,
                         f"{self.label or self.kind}^L")


def projector(n: int, kind: str) -> Projector:
    fr = frame(n, kind)
    size = len(fr.entries)
    rows = []
    stars = [star(e) for e in fr.entries]
    for mu in range(size):
        rows.append([(fr.entries[mu] * stars[nu]).scale(fr.weights[nu]) for nu in range(size)])
    p = Projector(n, kind, Matrix(rows), fr.weights, f"{kind}{n}")
    if not p.idempotency_residual().is_zero():
        raise BundleError(f"projector ({n}, {kind}) is not idempotent")
    if not p.adjoint_residual().is_zero():
        raise BundleError(f"projector ({n}, {kind}) is not self-adjoint in its gauge")
    return p


# -- connection ----------------------------------------------------------------------

def generating_set(n: int) -> list:
    """Module generators of the weight-``n`` bundle."""
    if n >= 0:
        return [ASTAR ** mu * CSTAR ** (n - mu) for mu in range(n + 1)]
    m = -n
    return [A ** (m - mu) * C ** mu for mu in range(m + 1)]


def _homogeneous_weight(phi: AlgebraElement) -> int:
    if not phi.terms:
        return 0
    w = phi.left_weight()
    if w is None:
        raise NotHomogeneous(f"{phi} is not homogeneous in the left weight")
    return w


def nabla(phi: AlgebraElement) -> OneForm:
    """``(X- phi) w- + (X+ phi) w+``; ``.plus`` is the holomorphic part."""
    w = _homogeneous_weight(phi)
    return OneForm(act(UqGenerator.XMINUS, phi), act(UqGenerator.XPLUS, phi), w)


def nabla_two(alpha_: OneForm) -> TwoForm:
    """Covariant exterior derivative of a bundle-valued one-form."""
    coeff = act(UqGenerator.XMINUS, alpha_.plus) - act(UqGenerator.XPLUS, alpha_.minus).scale(qpow(2))
    return TwoForm(coeff, alpha_.degree)


def curvature_value(n: int) -> LaurentPoly:
    """``-q^(n+1) [n]``."""
    return -(qpow(n + 1) * qint(n))


def curvature_eigencheck(n: int, max_n: int = 5) -> VerificationReport:
    """``X_z phi = -q^(n+1)[n] phi`` and ``nabla^2 phi = X_z phi w-^w+`` on the generating set."""
    if abs(n) > max_n:
        raise BundleError(f"|n| = {abs(n)} exceeds the guard {max_n}")
    expected = curvature_value(n)
    bad = []
    for phi in generating_set(n):
        lhs = act(UqGenerator.XZ, phi)
        if lhs != phi.scale(expected):
            bad.append(f"X_z on {phi}")
        if nabla_two(nabla(phi)).coeff != lhs:
            bad.append(f"nabla^2 on {phi}")
    return VerificationReport(
        f"bundles.curvature.n={n}", FAIL if bad else PASS, residual_zero=not bad,
        value=format_coeff(xz_eigenvalue(n)), paper_expected=format_coeff(expected), n=n,
        details=bad)


def connection_form_check(n: int) -> VerificationReport:
    """``nabla phi - d phi = q^(n+1)[n] phi w_z`` with the three-dimensional ``d``."""
    coeff = qpow(n + 1) * qint(n)
    bad = []
    for phi in generating_set(n):
        diff = nabla(phi) - d3(phi)
        want = OneForm(degree=n, z=phi.scale(coeff))
        if diff != want:
            bad.append(str(phi))
    return VerificationReport(f"bundles.connection_form.n={n}", FAIL if bad else PASS,
                              residual_zero=not bad, value=format_coeff(coeff),
                              paper_expected=format_coeff(coeff), n=n, details=bad)


def _basis_wedge(b1: str, b2: str):
    """Coefficient of ``w- ^ w+`` in ``b1 ^ b2`` for basis one-forms."""
    if b1 == b2:
        return 0
    return ONE if b1 == "minus" else qpow(2, -1)


def flatness_check(n: int) -> VerificationReport:
    """Both halves of the connection square to zero on the generating set."""
    bad = []
    for phi in generating_set(n):
        xpp = act(UqGenerator.XPLUS, act(UqGenerator.XPLUS, phi))
        xmm = act(UqGenerator.XMINUS, act(UqGenerator.XMINUS, phi))
        if xpp.scale(_basis_wedge("plus", "plus")) or xmm.scale(_basis_wedge("minus", "minus")):
            bad.append(str(phi))
    return VerificationReport(f"bundles.flatness.n={n}", FAIL if bad else PASS,
                              residual_zero=not bad, n=n, details=bad)


# -- holomorphic sections -----------------------------------------------------------------

@dataclass(frozen=True)
class HoloKernel:
    weight: int
    truncation: int
    dimension: int
    basis: tuple
    dimension_next: int

    @property
    def stable(self) -> bool:
        """Truncation certificate: the dimension does not move at truncation + 2."""
        return self.dimension == self.dimension_next


def _xminus_kernel(weight: int, truncation: int) -> list:
    cols = monomials_up_to(truncation, weight)

    def image(m):
        return act(UqGenerator.XMINUS, AlgebraElement._raw({m: ONE})).terms

    vecs = kernel(cols, image)
    return [AlgebraElement(v) for v in vecs]


def holo_kernel(weight: int, truncation: int) -> HoloKernel:
    """Kernel of ``X-`` on left weight ``weight`` up to the given total degree."""
    if truncation < abs(weight):
        raise TruncationTooSmall(f"truncation {truncation} < |weight| = {abs(weight)}")
    basis = _xminus_kernel(weight, truncation)
    nxt = _xminus_kernel(weight, truncation + 2)
    return HoloKernel(weight, truncation, len(basis), tuple(basis), len(nxt))


def in_holo_kernel(x: AlgebraElement) -> bool:
    return not act(UqGenerator.XMINUS, x).terms


def quantum_plane_check(n: int, m: int) -> VerificationReport:
    """Products of holomorphic sections stay holomorphic, and ``a c = q c a``."""
    bad = []
    if A * C != (C * A).scale(qpow(1)):
        bad.append("a c != q c a")
    left, right = generating_set(-n), generating_set(-m)
    for x in left:
        if not in_holo_kernel(x):
            bad.append(f"{x} not holomorphic")
        for y in right:
            xy = x * y
            if not in_holo_kernel(xy) or xy.left_weight() != -(n + m):
                bad.append(f"({x})({y})")
    return VerificationReport(f"bundles.quantum_plane.n={n}.m={m}", FAIL if bad else PASS,
                              residual_zero=not bad, details=bad)

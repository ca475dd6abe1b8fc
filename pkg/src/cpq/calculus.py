"""Two-dimensional covariant calculus over the quantum projective line.

One-forms are kept in left normal form ``x w- + y w+`` (with an optional
``w_z`` component for the vertical direction of the three-dimensional
calculus).  Basis forms move past functions by ``w_pm x = q^{w_L(x)} x w_pm``
and ``w_z x = q^{2 w_L(x)} x w_z``; the top form obeys
``w+ ^ w- = -q^2 w- ^ w+`` and ``w_pm ^ w_pm = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ZERO_ELEMENT, AlgebraElement, star
from .haar import haar
from .matrix import Matrix, ShapeMismatch
from .qcoeff import ONE, qpow
from .symmetry import UqGenerator, act

__all__ = [
    "NotInvariant",
    "SectorError",
    "OneForm",
    "TwoForm",
    "MatOneForm",
    "MatTwoForm",
    "move_past",
    "dd",
    "d3",
    "partial",
    "partial_bar",
    "d_one",
    "partial_one",
    "partial_bar_one",
    "wedge",
    "wedge_shortcut",
    "hodge",
    "form_star",
    "integrate",
    "mat_dd",
    "mat_partial",
    "mat_partial_bar",
    "mat_wedge",
    "mat_hodge",
    "mat_star",
]

MINUS, PLUS, Z = "minus", "plus", "z"


class NotInvariant(ValueError):
    """A function outside the invariant subalgebra was given."""


class SectorError(ValueError):
    """A form coefficient sits in the wrong left-weight sector."""


def _check_sector(x: AlgebraElement, w: int, what: str) -> None:
    bad = {m.w_left for m in x.terms} - {w}
    if bad:
        raise SectorError(f"{what} coefficient has left weight(s) {sorted(bad)}, expected {w}")


def move_past(basis: str, x: AlgebraElement) -> AlgebraElement:
    """Coefficient produced by commuting ``basis`` leftward past ``x``:
    ``basis * x = move_past(basis, x) * basis``."""
    k = 2 if basis == Z else 1
    if basis not in (MINUS, PLUS, Z):
        raise ValueError(f"unknown basis form {basis!r}")
    return x.map_monomials(lambda m: qpow(k * m.w_left) if m.w_left else ONE)


@dataclass(frozen=True)
class OneForm:
    """``minus w- + plus w+ (+ z w_z)`` for a section of left weight ``degree``."""

    minus: AlgebraElement = ZERO_ELEMENT
    plus: AlgebraElement = ZERO_ELEMENT
    degree: int = 0
    z: AlgebraElement = ZERO_ELEMENT

    def __post_init__(self):
        _check_sector(self.minus, self.degree - 2, "w-")
        _check_sector(self.plus, self.degree + 2, "w+")
        _check_sector(self.z, self.degree, "w_z")

    def is_zero(self) -> bool:
        return not (self.minus.terms or self.plus.terms or self.z.terms)

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.minus + other.minus, self.plus + other.plus,
                       _same_degree(self, other), self.z + other.z)

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm(self.minus - other.minus, self.plus - other.plus,
                       _same_degree(self, other), self.z - other.z)

    def __neg__(self) -> "OneForm":
        return OneForm(-self.minus, -self.plus, self.degree, -self.z)

    def scale(self, c) -> "OneForm":
        return OneForm(self.minus.scale(c), self.plus.scale(c), self.degree, self.z.scale(c))

    def lmul(self, f: AlgebraElement) -> "OneForm":
        """``f * self``."""
        w = _weight_of(f)
        return OneForm(f * self.minus, f * self.plus, self.degree + w, f * self.z)

    def rmul(self, f: AlgebraElement) -> "OneForm":
        """``self * f`` brought back to left normal form."""
        w = _weight_of(f)
        return OneForm(self.minus * move_past(MINUS, f), self.plus * move_past(PLUS, f),
                       self.degree + w, self.z * move_past(Z, f))

    def holomorphic(self) -> "OneForm":
        return OneForm(ZERO_ELEMENT, self.plus, self.degree)

    def antiholomorphic(self) -> "OneForm":
        return OneForm(self.minus, ZERO_ELEMENT, self.degree)

    def __str__(self):
        parts = []
        if self.minus.terms:
            parts.append(f"[{self.minus}] w-")
        if self.plus.terms:
            parts.append(f"[{self.plus}] w+")
        if self.z.terms:
            parts.append(f"[{self.z}] wz")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class TwoForm:
    """``coeff w- ^ w+``."""

    coeff: AlgebraElement = ZERO_ELEMENT
    degree: int = 0

    def __post_init__(self):
        _check_sector(self.coeff, self.degree, "w-^w+")

    def is_zero(self) -> bool:
        return not self.coeff.terms

    def __add__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.coeff + other.coeff, _same_degree(self, other))

    def __sub__(self, other: "TwoForm") -> "TwoForm":
        return TwoForm(self.coeff - other.coeff, _same_degree(self, other))

    def __neg__(self) -> "TwoForm":
        return TwoForm(-self.coeff, self.degree)

    def scale(self, c) -> "TwoForm":
        return TwoForm(self.coeff.scale(c), self.degree)

    def lmul(self, f: AlgebraElement) -> "TwoForm":
        return TwoForm(f * self.coeff, self.degree + _weight_of(f))

    def rmul(self, f: AlgebraElement) -> "TwoForm":
        # the top form picks up q^(2 w_L) when moved past f
        return TwoForm(self.coeff * move_past(Z, f), self.degree + _weight_of(f))

    def __str__(self):
        return f"[{self.coeff}] w-^w+" if self.coeff.terms else "0"


def _same_degree(x, y) -> int:
    if x.degree != y.degree:
        raise SectorError(f"cannot add forms of degrees {x.degree} and {y.degree}")
    return x.degree


def _weight_of(f: AlgebraElement) -> int:
    if not f.terms:
        return 0
    w = f.left_weight()
    if w is None:
        raise SectorError("function is not homogeneous in the left weight")
    return w


def _require_cp1(f: AlgebraElement) -> None:
    if not f.is_cp1():
        raise NotInvariant(f"{f} is not in the invariant subalgebra")


def dd(f: AlgebraElement) -> OneForm:
    """``d f = (X- f) w- + (X+ f) w+`` for an invariant function."""
    _require_cp1(f)
    return OneForm(act(UqGenerator.XMINUS, f), act(UqGenerator.XPLUS, f))


def d3(f: AlgebraElement) -> OneForm:
    """Three-dimensional differential of a homogeneous function, including ``w_z``."""
    w = _weight_of(f)
    return OneForm(act(UqGenerator.XMINUS, f), act(UqGenerator.XPLUS, f), w,
                   act(UqGenerator.XZ, f))


def partial(f: AlgebraElement) -> OneForm:
    return dd(f).holomorphic()


def partial_bar(f: AlgebraElement) -> OneForm:
    return dd(f).antiholomorphic()


def d_one(alpha: OneForm) -> TwoForm:
    """``d(x w- + y w+) = (X- y - q^2 X+ x) w- ^ w+``."""
    return partial_one(alpha) + partial_bar_one(alpha)


def partial_one(alpha: OneForm) -> TwoForm:
    """Holomorphic differential of a one-form (only the ``w-`` part contributes)."""
    return TwoForm(act(UqGenerator.XPLUS, alpha.minus).scale(qpow(2, -1)), alpha.degree)


def partial_bar_one(alpha: OneForm) -> TwoForm:
    return TwoForm(act(UqGenerator.XMINUS, alpha.plus), alpha.degree)


_MINUS_Q2 = qpow(2, -1)


def wedge(alpha: OneForm, beta: OneForm) -> TwoForm:
    """Exterior product by commuting basis forms to the right of all coefficients."""
    if alpha.z.terms or beta.z.terms:
        raise SectorError("wedge is only defined on the two-dimensional part")
    coeff = ZERO_ELEMENT
    if alpha.minus.terms and beta.plus.terms:
        coeff = coeff + alpha.minus * move_past(MINUS, beta.plus)
    if alpha.plus.terms and beta.minus.terms:
        coeff = coeff + (alpha.plus * move_past(PLUS, beta.minus)).scale(_MINUS_Q2)
    return TwoForm(coeff, alpha.degree + beta.degree)


def wedge_shortcut(alpha: OneForm, beta: OneForm) -> TwoForm:
    """The shortcut ``(x z - q^2 y t) w- ^ w+``, kept only for comparison with :func:`wedge`."""
    coeff = alpha.minus * beta.plus - (alpha.plus * beta.minus).scale(qpow(2))
    return TwoForm(coeff, alpha.degree + beta.degree)


def hodge(alpha: OneForm) -> OneForm:
    """Hodge star: ``+1`` on ``w+`` and ``-1`` on ``w-``."""
    return OneForm(-alpha.minus, alpha.plus, alpha.degree)


def form_star(alpha: OneForm) -> OneForm:
    """``(x w-)* = -q^{w_L(x*)} x* w+`` and ``(y w+)* = -q^{w_L(y*)} y* w-``."""
    xs, ys = star(alpha.minus), star(alpha.plus)
    return OneForm(-move_past(MINUS, ys), -move_past(PLUS, xs), -alpha.degree)


def integrate(psi: TwoForm):
    """``int_h x w- ^ w+ = h(x)``."""
    _require_cp1(psi.coeff)
    return haar(psi.coeff)


# -- matrix-valued forms ------------------------------------------------------------------

def _move_matrix(basis: str, m: Matrix) -> Matrix:
    return m.map(lambda x: move_past(basis, x))


@dataclass(frozen=True)
class MatOneForm:
    """``minus w- + plus w+`` with matrix coefficients over the invariant subalgebra."""

    minus: Matrix
    plus: Matrix

    def __post_init__(self):
        if self.minus.shape != self.plus.shape:
            raise ShapeMismatch(f"{self.minus.shape} vs {self.plus.shape}")

    @property
    def shape(self):
        return self.minus.shape

    def is_zero(self) -> bool:
        return self.minus.is_zero() and self.plus.is_zero()

    def lmul(self, m: Matrix) -> "MatOneForm":
        return MatOneForm(m @ self.minus, m @ self.plus)

    def rmul(self, m: Matrix) -> "MatOneForm":
        return MatOneForm(self.minus @ _move_matrix(MINUS, m), self.plus @ _move_matrix(PLUS, m))

    def __add__(self, other: "MatOneForm") -> "MatOneForm":
        return MatOneForm(self.minus + other.minus, self.plus + other.plus)

    def __sub__(self, other: "MatOneForm") -> "MatOneForm":
        return MatOneForm(self.minus - other.minus, self.plus - other.plus)

    def entry(self, i: int, j: int) -> OneForm:
        mi, pl = self.minus[i, j], self.plus[i, j]
        w = _weight_of(mi) + 2 if mi.terms else (_weight_of(pl) - 2 if pl.terms else 0)
        return OneForm(mi, pl, w)


@dataclass(frozen=True)
class MatTwoForm:
    coeff: Matrix

    @property
    def shape(self):
        return self.coeff.shape

    def is_zero(self) -> bool:
        return self.coeff.is_zero()

    def lmul(self, m: Matrix) -> "MatTwoForm":
        return MatTwoForm(m @ self.coeff)

    def __add__(self, other: "MatTwoForm") -> "MatTwoForm":
        return MatTwoForm(self.coeff + other.coeff)

    def __sub__(self, other: "MatTwoForm") -> "MatTwoForm":
        return MatTwoForm(self.coeff - other.coeff)


def mat_dd(p: Matrix) -> MatOneForm:
    for _, _, x in p.entries():
        _require_cp1(x)
    return MatOneForm(p.map(lambda x: act(UqGenerator.XMINUS, x)),
                      p.map(lambda x: act(UqGenerator.XPLUS, x)))


def mat_partial(p: Matrix) -> MatOneForm:
    d = mat_dd(p)
    return MatOneForm(Matrix.zeros(*p.shape), d.plus)


def mat_partial_bar(p: Matrix) -> MatOneForm:
    d = mat_dd(p)
    return MatOneForm(d.minus, Matrix.zeros(*p.shape))


def mat_wedge(alpha: MatOneForm, beta: MatOneForm) -> MatTwoForm:
    r, k = alpha.shape
    coeff = Matrix.zeros(r, beta.shape[1])
    if not alpha.minus.is_zero() and not beta.plus.is_zero():
        coeff = coeff + alpha.minus @ _move_matrix(MINUS, beta.plus)
    if not alpha.plus.is_zero() and not beta.minus.is_zero():
        coeff = coeff + (alpha.plus @ _move_matrix(PLUS, beta.minus)).scale(_MINUS_Q2)
    return MatTwoForm(coeff)


def mat_hodge(alpha: MatOneForm) -> MatOneForm:
    return MatOneForm(-alpha.minus, alpha.plus)


def mat_star(alpha: MatOneForm, weights=None) -> MatOneForm:
    """Adjoint of a matrix one-form (gauge-weighted when ``weights`` is given)."""
    ms, ps = alpha.minus.star(weights), alpha.plus.star(weights)
    return MatOneForm(-_move_matrix(MINUS, ps), -_move_matrix(PLUS, ms))

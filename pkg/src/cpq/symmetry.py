"""Left action of U_q(su(2)) on the algebra, the modular automorphism and
the diagonal K^2 representation weights used by the quantum trace."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    UNIT,
    ZERO_ELEMENT,
    AlgebraElement,
    Monomial,
    mul,
)
from .qcoeff import ONE, LaurentPoly, qpow

__all__ = [
    "UqGenerator",
    "RepWeights",
    "act",
    "k_power",
    "sigma",
    "sigma_inverse",
    "modular",
    "xz_eigenvalue",
    "rep_K2",
]


class UqGenerator(Enum):
    E = "E"
    F = "F"
    K = "K"
    KINV = "Kinv"
    XPLUS = "Xplus"
    XMINUS = "Xminus"
    XZ = "Xz"


def k_power(x: AlgebraElement, p: int) -> AlgebraElement:
    """``K^p`` acts on a monomial of left weight ``w`` by ``q^(p w / 2)``."""
    if p == 0:
        return x
    t = {}
    for m, c in x.terms.items():
        t[m] = c * LaurentPoly._raw({p * m.w_left: 1}) if m.w_left else c
    return AlgebraElement._raw(t)


def _split_first(m: Monomial):
    """Split a normal word into its first letter and the (normal) remainder."""
    if m.astar:
        return "a*", m._replace(astar=m.astar - 1)
    if m.a:
        return "a", m._replace(a=m.a - 1)
    if m.c:
        return "c", m._replace(c=m.c - 1)
    return "c*", m._replace(cstar=m.cstar - 1)


_SEEDS = {
    "E": {
        "a": AlgebraElement._raw({Monomial(cstar=1): qpow(1, -1)}),
        "c": AlgebraElement._raw({Monomial(astar=1): ONE}),
        "a*": ZERO_ELEMENT,
        "c*": ZERO_ELEMENT,
    },
    "F": {
        "a*": AlgebraElement._raw({Monomial(c=1): ONE}),
        "c*": AlgebraElement._raw({Monomial(a=1): qpow(-1, -1)}),
        "a": ZERO_ELEMENT,
        "c": ZERO_ELEMENT,
    },
}
_LETTER = {
    "a": Monomial(a=1),
    "a*": Monomial(astar=1),
    "c": Monomial(c=1),
    "c*": Monomial(cstar=1),
}


@lru_cache(maxsize=None)
def _raise_lower_mono(which: str, m: Monomial) -> AlgebraElement:
    # twisted Leibniz: X(xr) = X(x) K(r) + K^-1(x) X(r)
    if m == UNIT:
        return ZERO_ELEMENT
    letter, rest = _split_first(m)
    seed = _SEEDS[which][letter]
    rest_el = AlgebraElement._raw({rest: ONE})
    out = ZERO_ELEMENT
    if seed.terms:
        out = mul(seed, k_power(rest_el, 1))
    tail = _raise_lower_mono(which, rest)
    if tail.terms:
        x = AlgebraElement._raw({_LETTER[letter]: ONE})
        out = out + mul(k_power(x, -1), tail)
    return out


def _raise_lower(which: str, x: AlgebraElement) -> AlgebraElement:
    out = ZERO_ELEMENT
    for m, c in x.terms.items():
        img = _raise_lower_mono(which, m)
        if img.terms:
            out = out + img.scale(c)
    return out


def xz_eigenvalue(n: int) -> LaurentPoly:
    """Eigenvalue of ``X_z`` on left weight ``n``: ``(1 - q^(2n)) / (1 - q^-2)``."""
    return (ONE - qpow(2 * n)).divexact(ONE - qpow(-2))


def act(g, x: AlgebraElement) -> AlgebraElement:
    """Left action ``g |> x`` for a generator or derived operator."""
    g = UqGenerator(g) if not isinstance(g, UqGenerator) else g
    if g is UqGenerator.K:
        return k_power(x, 1)
    if g is UqGenerator.KINV:
        return k_power(x, -1)
    if g is UqGenerator.E:
        return _raise_lower("E", x)
    if g is UqGenerator.F:
        return _raise_lower("F", x)
    if g is UqGenerator.XPLUS:
        return _raise_lower("E", k_power(x, 1)).scale(qpow(Fraction(1, 2)))
    if g is UqGenerator.XMINUS:
        return _raise_lower("F", k_power(x, 1)).scale(qpow(Fraction(-1, 2)))
    # XZ: diagonal on left weights
    return x.map_monomials(lambda m: xz_eigenvalue(m.w_left))


def sigma(x: AlgebraElement) -> AlgebraElement:
    """Modular automorphism on the invariant subalgebra: ``q^(w_R)`` per monomial."""
    return x.map_monomials(lambda m: qpow(m.w_right))


def sigma_inverse(x: AlgebraElement) -> AlgebraElement:
    return x.map_monomials(lambda m: qpow(-m.w_right))


def modular(x: AlgebraElement) -> AlgebraElement:
    """Modular automorphism of the Haar state on the whole algebra.

    Equals ``q^(w_R - w_L)`` per monomial, and agrees with :func:`sigma` on
    left-invariant elements.
    """
    return x.map_monomials(lambda m: qpow(m.w_right - m.w_left))


@dataclass(frozen=True)
class RepWeights:
    """Diagonal of the K^2 matrix in the spin-J representation."""

    J: Fraction
    diagonal: tuple

    def __len__(self) -> int:
        return len(self.diagonal)


def rep_K2(J) -> RepWeights:
    """Entries ``q^(2m)`` for ``m = J, J-1, ..., -J`` (index ``mu`` maps to ``m = J - mu``)."""
    J = Fraction(J)
    if (2 * J).denominator != 1 or J < 0:
        raise ValueError(f"2J must be a nonnegative integer, got J={J}")
    size = int(2 * J) + 1
    return RepWeights(J, tuple(qpow(2 * (J - mu)) for mu in range(size)))

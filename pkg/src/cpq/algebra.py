"""The coordinate *-algebra of quantum SU(2) in a fixed normal form.

Generators ``a, a*, c, c*`` are reduced by the rules::

    c a   -> q^-1 a c        c* a  -> q^-1 a c*
    c a*  -> q a* c          c* a* -> q a* c*
    a a*  -> 1 - q^2 c c*    a* a  -> 1 - c* c
    c* c  -> c c*

Irreducible words are ``a^l c^j c*^k`` and ``a*^i c^j c*^k``.  Products of
normal monomials are computed by a closed formula (memoized); the word
rewriter is kept as an independent path used by :func:`normalize` and by the
confluence tests.
"""

from __future__ import annotations

import contextvars
import random
import re
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .qcoeff import (
    ONE,
    ZERO,
    LaurentPoly,
    LaurentRational,
    as_coeff,
    format_coeff,
    parse_coeff,
    qpow,
)

__all__ = [
    "AlgebraError",
    "DegreeOverflow",
    "EmptySector",
    "Monomial",
    "AlgebraElement",
    "LETTERS",
    "degree_cap",
    "get_degree_cap",
    "normalize",
    "rewrite_word",
    "word_product",
    "format_element",
    "mul",
    "star",
    "weights",
    "is_cp1",
    "random_element",
    "monomials_up_to",
    "parse_element",
    "A",
    "ASTAR",
    "C",
    "CSTAR",
    "B0",
    "BPLUS",
    "BMINUS",
]


class AlgebraError(ValueError):
    pass


class DegreeOverflow(AlgebraError):
    """A product produced a monomial longer than the configured cap."""


class EmptySector(AlgebraError):
    """No monomial satisfies the requested grading constraint."""


DEFAULT_DEGREE_CAP = 24
_cap = contextvars.ContextVar("degree_cap", default=DEFAULT_DEGREE_CAP)


def get_degree_cap() -> int:
    return _cap.get()


@contextmanager
def degree_cap(n: int):
    """Temporarily change the maximal monomial length allowed in products."""
    token = _cap.set(n)
    try:
        yield n
    finally:
        _cap.reset(token)


class Monomial(NamedTuple):
    """Normal-form word ``a*^astar a^a c^c c*^cstar`` with ``astar * a == 0``."""

    astar: int = 0
    c: int = 0
    cstar: int = 0
    a: int = 0

    @property
    def degree(self) -> int:
        return self.astar + self.c + self.cstar + self.a

    @property
    def w_left(self) -> int:
        return (self.astar + self.cstar) - (self.c + self.a)

    @property
    def w_right(self) -> int:
        return (self.a + self.cstar) - (self.astar + self.c)

    def word(self) -> tuple:
        return ("a*",) * self.astar + ("a",) * self.a + ("c",) * self.c + ("c*",) * self.cstar

    def __str__(self) -> str:
        parts = []
        for name, p in (("a*", self.astar), ("a", self.a), ("c", self.c), ("c*", self.cstar)):
            if p == 1:
                parts.append(name)
            elif p > 1:
                parts.append(f"{name}^{p}")
        return " ".join(parts) or "1"


UNIT = Monomial()
LETTERS = ("a", "a*", "c", "c*")
_LETTER_MONO = {
    "a": Monomial(a=1),
    "a*": Monomial(astar=1),
    "c": Monomial(c=1),
    "c*": Monomial(cstar=1),
}


def _zpoly(factors: Iterable[int]) -> list:
    """Expand prod (1 - q^e z) into t-exponent dicts indexed by the z power."""
    poly = [{0: 1}]
    for e in factors:
        k = 2 * e
        out = [dict(c) for c in poly] + [{}]
        for p, coeffs in enumerate(poly):
            tgt = out[p + 1]
            for t, v in coeffs.items():
                s = tgt.get(t + k, 0) - v
                if s:
                    tgt[t + k] = s
                else:
                    tgt.pop(t + k, None)
        poly = out
    return poly


@lru_cache(maxsize=None)
def _mono_mul(m1: Monomial, m2: Monomial) -> tuple:
    """Normal form of ``m1 * m2`` as a tuple of (Monomial, t-exponent dict)."""
    # commute the a-part of m2 leftward past c^j1 c*^k1 of m1
    cc = m1.c + m1.cstar
    shift = 2 * (m2.astar - m2.a) * cc
    l, i = m1.a, m1.astar
    m, l2 = m2.astar, m2.a
    if i == 0 and m == 0:
        base, factors = Monomial(a=l + l2), ()
    elif l == 0 and l2 == 0:
        base, factors = Monomial(astar=i + m), ()
    elif l and m:
        # a^l a*^m
        if m >= l:
            base = Monomial(astar=m - l)
            factors = tuple(2 * j + 2 * (m - l) for j in range(1, l + 1))
        else:
            base = Monomial(a=l - m)
            factors = tuple(2 * j for j in range(1, m + 1))
    else:
        # a*^i a^l2
        if l2 >= i:
            base = Monomial(a=l2 - i)
            factors = tuple(-2 * j - 2 * (l2 - i) for j in range(i))
        else:
            base = Monomial(astar=i - l2)
            factors = tuple(-2 * j for j in range(l2))
    J, K = m1.c + m2.c, m1.cstar + m2.cstar
    out = []
    for p, coeffs in enumerate(_zpoly(factors)):
        if coeffs:
            mono = base._replace(c=J + p, cstar=K + p)
            out.append((mono, {t + shift: v for t, v in coeffs.items()}))
    return tuple(out)


def _check_cap(mono: Monomial) -> None:
    cap = _cap.get()
    if mono.degree > cap:
        raise DegreeOverflow(f"monomial of degree {mono.degree} exceeds the cap {cap}")


class AlgebraElement:
    """Finite linear combination of normal-form monomials.

    Coefficients are :class:`LaurentPoly` or :class:`LaurentRational`; zero
    coefficients are never stored, so equality is term-map equality.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for m, c in dict(terms).items():
                c = as_coeff(c)
                if c:
                    if m.astar and m.a:
                        raise AlgebraError(f"{m!r} is not in normal form")
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "AlgebraElement":
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        c = as_coeff(c)
        return cls._raw({UNIT: c} if c else {})

    @classmethod
    def monomial(cls, mono: Monomial, c=ONE) -> "AlgebraElement":
        return cls({mono: c})

    # -- inspection -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def left_weights(self) -> set:
        return {m.w_left for m in self.terms}

    def right_weights(self) -> set:
        return {m.w_right for m in self.terms}

    def left_weight(self):
        """The common left weight, or ``None`` if not homogeneous (zero -> None)."""
        ws = self.left_weights()
        return next(iter(ws)) if len(ws) == 1 else None

    def is_cp1(self) -> bool:
        return all(m.w_left == 0 for m in self.terms)

    def coefficient(self, mono: Monomial):
        return self.terms.get(mono, ZERO)

    def scalar_part(self):
        return self.terms.get(UNIT, ZERO)

    def is_scalar(self) -> bool:
        return all(m == UNIT for m in self.terms)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            if m in t:
                s = t[m] + c
                if s:
                    t[m] = s
                else:
                    del t[m]
            else:
                t[m] = c
        return AlgebraElement._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> "AlgebraElement":
        c = as_coeff(c)
        if not c:
            return ZERO_ELEMENT
        t = {}
        for m, v in self.terms.items():
            p = v * c
            if p:
                t[m] = p
        return AlgebraElement._raw(t)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction, LaurentPoly, LaurentRational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly, LaurentRational)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative powers are not defined")
        out = ONE_ELEMENT
        for _ in range(n):
            out = out * self
        return out

    def map_coeffs(self, fn) -> "AlgebraElement":
        return AlgebraElement({m: fn(c) for m, c in self.terms.items()})

    def map_monomials(self, fn) -> "AlgebraElement":
        """Apply ``fn(mono) -> coefficient`` diagonally."""
        t = {}
        for m, c in self.terms.items():
            p = c * fn(m)
            if p:
                t[m] = p
        return AlgebraElement._raw(t)

    def star(self) -> "AlgebraElement":
        return star(self)

    def simplify(self) -> "AlgebraElement":
        """Reduce rational coefficients, demoting them to polynomials when possible."""
        return AlgebraElement._raw({
            m: (c.simplify() if isinstance(c, LaurentRational) else c)
            for m, c in self.terms.items()
        })

    # -- comparison / display ----------------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[m] for m, c in self.terms.items())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((m, hash(c)) for m, c in self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: (mc[0].degree, mc[0].a, mc[0].astar, mc[0].c, mc[0].cstar))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"AlgebraElement({format_element(self)!r})"


def _coerce(x):
    if isinstance(x, AlgebraElement):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly, LaurentRational)):
        return AlgebraElement.scalar(x)
    return None


ZERO_ELEMENT = AlgebraElement._raw({})
ONE_ELEMENT = AlgebraElement._raw({UNIT: ONE})
A = AlgebraElement._raw({Monomial(a=1): ONE})
ASTAR = AlgebraElement._raw({Monomial(astar=1): ONE})
C = AlgebraElement._raw({Monomial(c=1): ONE})
CSTAR = AlgebraElement._raw({Monomial(cstar=1): ONE})
B0 = AlgebraElement._raw({Monomial(c=1, cstar=1): ONE})
BMINUS = AlgebraElement._raw({Monomial(a=1, cstar=1): ONE})
BPLUS = AlgebraElement._raw({Monomial(astar=1, c=1): qpow(1)})  # c a* = q a* c


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """Normal form of the product ``x y``."""
    if not x.terms or not y.terms:
        return ZERO_ELEMENT
    if len(y.terms) == 1 and UNIT in y.terms:
        return x.scale(y.terms[UNIT])
    if len(x.terms) == 1 and UNIT in x.terms:
        return y.scale(x.terms[UNIT])
    poly_acc: dict = {}
    gen_acc: dict = {}
    for m1, c1 in x.terms.items():
        p1 = isinstance(c1, LaurentPoly)
        for m2, c2 in y.terms.items():
            if p1 and isinstance(c2, LaurentPoly):
                # fast path: stay on raw t-exponent dicts
                t1, t2 = c1._t, c2._t
                for mono, zc in _mono_mul(m1, m2):
                    acc = poly_acc.get(mono)
                    if acc is None:
                        _check_cap(mono)
                        acc = poly_acc[mono] = {}
                    for k1, v1 in t1.items():
                        for k2, v2 in t2.items():
                            v12 = v1 * v2
                            for k3, v3 in zc.items():
                                k = k1 + k2 + k3
                                acc[k] = acc.get(k, 0) + v12 * v3
            else:
                c12 = c1 * c2
                for mono, zc in _mono_mul(m1, m2):
                    _check_cap(mono)
                    term = c12 * LaurentPoly._raw(zc)
                    gen_acc[mono] = gen_acc[mono] + term if mono in gen_acc else term
    out = {}
    for mono, acc in poly_acc.items():
        p = LaurentPoly._raw({k: v for k, v in acc.items() if v})
        if p:
            out[mono] = p
    for mono, c in gen_acc.items():
        if mono in out:
            c = out[mono] + c
        if c:
            out[mono] = c
        else:
            out.pop(mono, None)
    return AlgebraElement._raw(out)


def star(x: AlgebraElement) -> AlgebraElement:
    """The *-involution (coefficients are real, so only the words change)."""
    t = {}
    for m, c in x.terms.items():
        s = m.c + m.cstar
        if m.a:
            mono, e = Monomial(astar=m.a, c=m.cstar, cstar=m.c), m.a * s
        else:
            mono, e = Monomial(a=m.astar, c=m.cstar, cstar=m.c), -m.astar * s
        t[mono] = c * qpow(e) if e else c
    return AlgebraElement._raw(t)


def weights(m) -> tuple:
    """``(w_L, w_R)`` for a monomial (or a homogeneous element)."""
    if isinstance(m, AlgebraElement):
        wl, wr = m.left_weights(), m.right_weights()
        if len(wl) != 1 or len(wr) != 1:
            raise AlgebraError("element is not bihomogeneous")
        return next(iter(wl)), next(iter(wr))
    return m.w_left, m.w_right


def is_cp1(x: AlgebraElement) -> bool:
    return x.is_cp1()


# -- word rewriting ---------------------------------------------------------------

_RULES = {
    ("c", "a"): ((qpow(-1), ("a", "c")),),
    ("c*", "a"): ((qpow(-1), ("a", "c*")),),
    ("c", "a*"): ((qpow(1), ("a*", "c")),),
    ("c*", "a*"): ((qpow(1), ("a*", "c*")),),
    ("a", "a*"): ((ONE, ()), (qpow(2, -1), ("c", "c*"))),
    ("a*", "a"): ((ONE, ()), (-ONE, ("c*", "c"))),
    ("c*", "c"): ((ONE, ("c", "c*")),),
}


def rewrite_word(word, coeff=ONE, strategy: str = "leftmost") -> AlgebraElement:
    """Normalize a word with the rewrite rules, reducing the leftmost (or
    rightmost) redex first.  Independent of the closed-form product."""
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    for letter in word:
        if letter not in _LETTER_MONO:
            raise AlgebraError(f"unknown letter {letter!r}")
    pending = {tuple(word): as_coeff(coeff)}
    done: dict = {}
    while pending:
        w, c = pending.popitem()
        idx = range(len(w) - 1) if strategy == "leftmost" else range(len(w) - 2, -1, -1)
        redex = next((i for i in idx if (w[i], w[i + 1]) in _RULES), None)
        if redex is None:
            done[w] = done.get(w, ZERO) + c
            continue
        for f, rep in _RULES[w[redex], w[redex + 1]]:
            nw = w[:redex] + rep + w[redex + 2:]
            pending[nw] = pending.get(nw, ZERO) + c * f
            if not pending[nw]:
                del pending[nw]
    terms = {}
    for w, c in done.items():
        if not c:
            continue
        m = Monomial(astar=w.count("a*"), c=w.count("c"), cstar=w.count("c*"), a=w.count("a"))
        terms[m] = terms.get(m, ZERO) + c
    return AlgebraElement(terms)


def normalize(word, coeff=ONE) -> AlgebraElement:
    """Normal form of ``coeff * word`` for a sequence of letters."""
    return rewrite_word(word, coeff)


def word_product(word, coeff=ONE) -> AlgebraElement:
    """Same as :func:`normalize` but via repeated closed-form products."""
    out = AlgebraElement.scalar(coeff)
    for letter in word:
        out = mul(out, AlgebraElement._raw({_LETTER_MONO[letter]: ONE}))
    return out


# -- sampling -------------------------------------------------------------------------

@lru_cache(maxsize=None)
def monomials_up_to(max_degree: int, left_weight=None) -> tuple:
    """All normal monomials of degree <= max_degree (optionally of one left weight)."""
    out = []
    for d in range(max_degree + 1):
        for x in range(d + 1):
            for j in range(d - x + 1):
                k = d - x - j
                cands = [Monomial(a=x, c=j, cstar=k)]
                if x:
                    cands.append(Monomial(astar=x, c=j, cstar=k))
                for m in cands:
                    if left_weight is None or m.w_left == left_weight:
                        out.append(m)
    return tuple(out)


def random_coeff(rng: random.Random) -> LaurentPoly:
    c = qpow(rng.randint(-2, 2), rng.choice([-3, -2, -1, 1, 2, 3]))
    if rng.random() < 0.3:
        c = c + qpow(rng.randint(-2, 2), rng.choice([-1, 1, 2]))
    return c


def random_element(max_degree: int, n_terms: int, seed, constraint="any") -> AlgebraElement:
    """Deterministic pseudo-random element.

    ``constraint`` is ``"any"``, ``"cp1"`` or ``("weight", n)`` (an int ``n``
    is accepted as shorthand for a left-weight constraint).
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    if constraint == "any":
        pool = monomials_up_to(max_degree)
    elif constraint == "cp1":
        pool = monomials_up_to(max_degree, 0)
    else:
        w = constraint[1] if isinstance(constraint, tuple) else int(constraint)
        pool = monomials_up_to(max_degree, w)
    if not pool:
        raise EmptySector(f"no monomial of degree <= {max_degree} satisfies {constraint!r}")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    chosen = rng.sample(pool, min(n_terms, len(pool)))
    return AlgebraElement({m: random_coeff(rng) for m in chosen})


# -- text grammar -------------------------------------------------------------------------

def format_element(x: AlgebraElement) -> str:
    if not x.terms:
        return "0"
    parts = []
    for m, c in x.sorted_terms():
        cs = format_coeff(c)
        if m == UNIT:
            parts.append(f"({cs})")
        elif c == ONE:
            parts.append(str(m))
        else:
            parts.append(f"({cs}) {m}")
    return " + ".join(parts)


_SHORTHAND = {
    "B0": ("c", "c*"),
    "Bm": ("a", "c*"),
    "Bp": ("c", "a*"),
}
_ELEM_TOKEN = re.compile(
    r"\s*(?:(?P<paren>\()|(?P<letter>B0|Bm|Bp|a\*|c\*|a|c)(?:\^(?P<lp>\d+))?"
    r"|(?P<q>q(?:\^(?:-?\d+|\(-?\d+/2\)))?)|(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*]))"
)


def _matching_paren(text: str, start: int) -> int:
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise AlgebraError(f"unbalanced parentheses in {text!r}")


def parse_element(text: str) -> AlgebraElement:
    """Parse ``(coeff) a*^i c^j c*^k a^l + ...``; any word is accepted and normalized.

    ``B0``, ``Bp`` and ``Bm`` abbreviate ``c c*``, ``c a*`` and ``a c*``.
    """
    text = text.strip()
    if not text:
        raise AlgebraError("empty element")
    total = ZERO_ELEMENT
    sign, coeff, word, seen = 1, ONE, [], False
    pos = 0

    def flush():
        nonlocal total
        if not seen:
            raise AlgebraError(f"dangling operator in {text!r}")
        total = total + word_product(word, coeff * sign)

    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _ELEM_TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse element at {text[pos:]!r}")
        if m.group("paren"):
            start = m.start("paren")
            end = _matching_paren(text, start)
            coeff = coeff * parse_coeff(text[start: end + 1])
            seen = True
            pos = end + 1
            continue
        pos = m.end()
        if m.group("letter"):
            letters = _SHORTHAND.get(m.group("letter"), (m.group("letter"),))
            word.extend(letters * int(m.group("lp") or 1))
            seen = True
        elif m.group("q"):
            coeff = coeff * parse_coeff(m.group("q"))
            seen = True
        elif m.group("num"):
            coeff = coeff * parse_coeff(m.group("num"))
            seen = True
        elif m.group("op") == "*":
            continue
        else:
            if seen:
                flush()
                sign, coeff, word, seen = 1, ONE, [], False
            if m.group("op") == "-":
                sign = -sign
    flush()
    return total

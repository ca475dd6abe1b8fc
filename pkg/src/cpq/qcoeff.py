"""Exact coefficients: Laurent polynomials and rational functions in ``q``.

Exponents are kept internally in units of ``t = q^(1/2)`` so that the
group-like generator ``K`` (which acts by half-integer powers of ``q``) stays
inside the coefficient ring.  Public constructors and accessors always speak
in powers of ``q``; half-integer exponents are :class:`fractions.Fraction`.

Coefficients are Python ``int`` or ``Fraction``; there is no floating point.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt

__all__ = [
    "CoefficientError",
    "ExactDivisionFailure",
    "PoleAtSample",
    "LaurentPoly",
    "LaurentRational",
    "ONE",
    "ZERO",
    "Q",
    "as_coeff",
    "qpow",
    "qint",
    "qbinomial",
    "alpha",
    "beta",
    "eval_at",
    "parse_coeff",
    "format_coeff",
]


class CoefficientError(ValueError):
    pass


class ExactDivisionFailure(CoefficientError):
    """A division that must be exact left a remainder."""


class PoleAtSample(CoefficientError):
    """The denominator vanishes at the requested sample point."""


def _rat(x):
    # keep integers as int, everything else as a reduced Fraction
    if isinstance(x, int):
        return x
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _to_t(e) -> int:
    e2 = Fraction(e) * 2
    if e2.denominator != 1:
        raise CoefficientError(f"exponent {e} is not a half-integer")
    return int(e2)


def _from_t(k: int):
    return k // 2 if k % 2 == 0 else Fraction(k, 2)


# -- dense helpers: lists of coefficients, lowest degree first ---------------

def _trim(p):
    while p and p[-1] == 0:
        p.pop()
    return p


def _pdivmod(num, den):
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 0)
    lead = den[-1]
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1]
        if c == 0:
            continue
        f = Fraction(c) / lead if not isinstance(c, int) or c % lead else c // lead
        q[i] = f
        for j, d in enumerate(den):
            num[i + j] -= f * d
    return _trim(q), _trim(num[: len(den) - 1])


def _pgcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    lead = Fraction(a[-1])
    return [_rat(c / lead) for c in a]


class LaurentPoly:
    """Finite sum of rational multiples of (half-integer) powers of ``q``.

    Immutable; the term map never stores zero coefficients, so equality is
    plain dictionary equality.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in dict(terms).items():
                c = _rat(c)
                if c:
                    k = _to_t(e)
                    t[k] = _rat(t.get(k, 0) + c)
                    if not t[k]:
                        del t[k]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict) -> "LaurentPoly":
        obj = object.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "LaurentPoly":
        c = _rat(c)
        return cls._raw({0: c} if c else {})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict:
        """Map ``q``-exponent -> coefficient."""
        return {_from_t(k): v for k, v in self._t.items()}

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_integral(self) -> bool:
        """True when every exponent is an integer power of ``q``."""
        return all(k % 2 == 0 for k in self._t)

    def constant_value(self):
        """The rational value if this is a constant, else ``None``."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        return None

    def degree_range(self):
        if not self._t:
            return None
        return _from_t(min(self._t)), _from_t(max(self._t))

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, LaurentRational):
            return NotImplemented
        other = as_coeff(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not other._t:
            return self
        if not self._t:
            return other
        t = dict(self._t)
        for k, v in other._t.items():
            s = t.get(k, 0) + v
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return LaurentPoly._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, LaurentRational):
            return NotImplemented
        return self + (-as_coeff(other))

    def __rsub__(self, other):
        return as_coeff(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _rat(other)
            if not other:
                return ZERO
            return LaurentPoly._raw({k: _rat(v * other) for k, v in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, vb), = b.items()
            if kb == 0 and vb == 1:
                return self if a is self._t else other
            return LaurentPoly._raw({k + kb: v * vb for k, v in a.items()})
        t = {}
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                k = k1 + k2
                t[k] = t.get(k, 0) + v1 * v2
        return LaurentPoly._raw({k: v for k, v in t.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._t) != 1:
                raise ExactDivisionFailure("negative power of a non-monomial")
            (k, v), = self._t.items()
            return LaurentPoly._raw({k * n: _rat(Fraction(v) ** n)})
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __truediv__(self, other):
        other = as_coeff(other)
        if isinstance(other, LaurentPoly) and len(other._t) == 1:
            (k, v), = other._t.items()
            return LaurentPoly._raw({kk - k: _rat(Fraction(vv) / v) for kk, vv in self._t.items()})
        return LaurentRational(self, ONE) / other

    def __rtruediv__(self, other):
        return LaurentRational(as_coeff(other), self)

    def shift(self, e) -> "LaurentPoly":
        """Multiply by ``q^e``."""
        k = _to_t(e)
        return LaurentPoly._raw({kk + k: v for kk, v in self._t.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient; raises :class:`ExactDivisionFailure` on remainder."""
        other = as_coeff(other)
        if isinstance(other, LaurentRational):
            other = other.as_poly()
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return ZERO
        ns, nd = min(self._t), max(self._t)
        ds, dd = min(other._t), max(other._t)
        num = [self._t.get(ns + i, 0) for i in range(nd - ns + 1)]
        den = [other._t.get(ds + i, 0) for i in range(dd - ds + 1)]
        quo, rem = _pdivmod(num, den)
        if rem:
            raise ExactDivisionFailure("non-zero remainder")
        return LaurentPoly._raw({ns - ds + i: _rat(c) for i, c in enumerate(quo) if c})

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == ({0: other} if other else {})
        if isinstance(other, LaurentRational):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def __repr__(self):
        return f"LaurentPoly({format_coeff(self)!r})"

    def __str__(self):
        return format_coeff(self)

    def __call__(self, q0):
        return eval_at(self, q0)


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({2: 1})


class LaurentRational:
    """Quotient of two Laurent polynomials.

    Arithmetic keeps a shared denominator without reduction when it can
    (cheap on hot paths); :meth:`reduced` brings the fraction to canonical
    form: denominator a primitive integer polynomial with non-zero constant
    term and positive leading coefficient, no common factor with the
    numerator.  Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den", "_reduced")

    def __init__(self, num, den=ONE, reduce=True):
        num, den = as_coeff(num), as_coeff(den)
        if isinstance(num, LaurentRational) or isinstance(den, LaurentRational):
            r = (num if isinstance(num, LaurentRational) else LaurentRational._mk(num, ONE)) * \
                (den.inverse() if isinstance(den, LaurentRational) else LaurentRational._mk(ONE, den))
            num, den = r.num, r.den
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num = num
        self.den = den
        self._reduced = False
        if reduce:
            self._reduce()

    @classmethod
    def _mk(cls, num, den):
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._reduced = False
        return obj

    def _reduce(self):
        if self._reduced:
            return self
        num, den = self.num, self.den
        if num.is_zero():
            self.num, self.den, self._reduced = ZERO, ONE, True
            return self
        ds, dd = min(den._t), max(den._t)
        ns, nd = min(num._t), max(num._t)
        dl = [den._t.get(ds + i, 0) for i in range(dd - ds + 1)]
        nl = [num._t.get(ns + i, 0) for i in range(nd - ns + 1)]
        if len(dl) > 1 and len(nl) > 1:
            g = _pgcd(nl, dl)
            if len(g) > 1:
                nl, r1 = _pdivmod(nl, g)
                dl, r2 = _pdivmod(dl, g)
                assert not r1 and not r2
        elif len(dl) == 1:
            nl = [Fraction(c) / dl[0] for c in nl]
            dl = [1]
        # primitive integer denominator, positive leading coefficient
        dens = 1
        for c in dl:
            if not isinstance(c, int):
                c = Fraction(c)
                dens = dens * c.denominator // gcd(dens, c.denominator)
        ints = [int(c * dens) for c in dl]
        content = 0
        for c in ints:
            content = gcd(content, c)
        if ints[-1] < 0:
            content = -content
        scale = Fraction(dens, content)
        self.den = LaurentPoly._raw({i: _rat(c * scale) for i, c in enumerate(dl) if c})
        self.num = LaurentPoly._raw({ns - ds + i: _rat(c * scale) for i, c in enumerate(nl) if c})
        self._reduced = True
        return self

    def reduced(self) -> "LaurentRational":
        return self._reduce()

    def simplify(self):
        """Reduce, returning a :class:`LaurentPoly` when the denominator is 1."""
        self._reduce()
        return self.num if self.den == ONE else self

    def as_poly(self) -> LaurentPoly:
        self._reduce()
        if self.den != ONE:
            raise ExactDivisionFailure(f"{self} is not a Laurent polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def inverse(self) -> "LaurentRational":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return LaurentRational(self.den, self.num)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentRational):
            return other
        other = as_coeff(other)
        if isinstance(other, LaurentPoly):
            return LaurentRational._mk(other, ONE)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den is o.den or self.den == o.den:
            return LaurentRational._mk(self.num + o.num, self.den)
        return LaurentRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = LaurentRational._mk(-self.num, self.den)
        r._reduced = self._reduced
        return r

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.den is ONE or o.den == ONE:
            if self.den is ONE:
                return LaurentRational._mk(self.num * o.num, ONE)
            return LaurentRational._mk(self.num * o.num, self.den)
        if self.den == ONE:
            return LaurentRational._mk(self.num * o.num, o.den)
        return LaurentRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero")
        return LaurentRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return LaurentRational(as_coeff(other), ONE) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return LaurentRational(self.num ** n, self.den ** n)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        self._reduce()
        if self.den == ONE:
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"LaurentRational({format_coeff(self)!r})"

    def __str__(self):
        return format_coeff(self)

    def __call__(self, q0):
        return eval_at(self, q0)


def as_coeff(x):
    """Coerce ints, Fractions and coefficient objects into the coefficient ring."""
    if isinstance(x, (LaurentPoly, LaurentRational)):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    if isinstance(x, str):
        return parse_coeff(x)
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient")


def qpow(e, c=1) -> LaurentPoly:
    """``c * q^e``; ``e`` may be a half-integer."""
    c = _rat(c)
    return LaurentPoly._raw({_to_t(e): c} if c else {})


# -- q-combinatorics -----------------------------------------------------------

def qint(x: int) -> LaurentPoly:
    """The q-number ``[x] = (q^x - q^-x)/(q - q^-1)`` as a Laurent polynomial."""
    return (qpow(x) - qpow(-x)).divexact(Q - qpow(-1))


def qbinomial(n: int, k: int, base: int = 2) -> LaurentPoly:
    """``prod_{j<k} (1 - q^{b(n-j)}) / (1 - q^{b(j+1)})`` with ``b = base``.

    For ``base=2`` this is the Gaussian binomial in ``q^2``.  The numerator
    and denominator products are formed separately and divided exactly.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    num, den = ONE, ONE
    for j in range(k):
        num = num * (ONE - qpow(base * (n - j)))
        den = den * (ONE - qpow(base * (j + 1)))
    return num.divexact(den)


def alpha(n: int, mu: int) -> LaurentPoly:
    """Frame weight for the holomorphic family: product over ``j < n - mu``."""
    return qbinomial(n, n - mu, 2)


def beta(n: int, mu: int) -> LaurentPoly:
    """Frame weight for the anti-holomorphic family (``n`` is ``|n|``)."""
    return qpow(2 * mu) * qbinomial(n, mu, -2)


# -- evaluation ------------------------------------------------------------------

def _sqrt_fraction(x: Fraction):
    p, r = x.numerator, x.denominator
    sp, sr = isqrt(p), isqrt(r)
    if sp * sp == p and sr * sr == r:
        return Fraction(sp, sr)
    return None


def _eval_poly(p: LaurentPoly, q0: Fraction, t0):
    total = Fraction(0)
    for k, v in p._t.items():
        if k % 2 == 0:
            total += v * q0 ** (k // 2)
        else:
            if t0 is None:
                raise CoefficientError(
                    f"half-integer power of q cannot be evaluated exactly at q={q0}")
            total += v * t0 ** k
    return total


def eval_at(f, q0) -> Fraction:
    """Exact rational value of ``f`` at ``q = q0``."""
    q0 = Fraction(q0)
    if q0 == 0:
        raise PoleAtSample("q0 must be non-zero")
    f = as_coeff(f)
    t0 = _sqrt_fraction(q0) if q0 > 0 else None
    if isinstance(f, LaurentPoly):
        return _eval_poly(f, q0, t0)
    d = _eval_poly(f.den, q0, t0)
    if d == 0:
        raise PoleAtSample(f"denominator of {f} vanishes at q={q0}")
    return _eval_poly(f.num, q0, t0) / d


# -- text grammar --------------------------------------------------------------------

def _fmt_rational(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_exp(k: int) -> str:
    return str(k // 2) if k % 2 == 0 else f"({k}/2)"


def _fmt_poly(p: LaurentPoly) -> str:
    if not p._t:
        return "0"
    parts = []
    for k in sorted(p._t):
        c = p._t[k]
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fmt_rational(a)
        elif a == 1:
            body = f"q^{_fmt_exp(k)}"
        else:
            body = f"{_fmt_rational(a)}*q^{_fmt_exp(k)}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


def format_coeff(x) -> str:
    """Render a coefficient, e.g. ``q^-2``, ``3/2 + q^2``, ``1/(1 + q^2)``."""
    x = as_coeff(x)
    if isinstance(x, LaurentPoly):
        return _fmt_poly(x)
    x = x.reduced()
    if x.den == ONE:
        return _fmt_poly(x.num)
    num = _fmt_poly(x.num)
    if len(x.num._t) > 1:
        num = f"({num})"
    return f"{num}/({_fmt_poly(x.den)})"


_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|(\^)|([-+*/()]))")


def parse_coeff(text: str):
    """Parse the coefficient grammar produced by :func:`format_coeff`.

    Accepts sums, products and quotients of rationals and powers ``q^e``
    where ``e`` is an integer, ``-k`` or a parenthesised half-integer.
    """
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise CoefficientError(f"unexpected input at {text[pos:]!r}")
        pos = m.end()
        num, qq, caret, op = m.groups()
        if num is not None:
            tokens.append(("num", int(num)))
        elif qq:
            tokens.append(("q", None))
        elif caret:
            tokens.append(("^", None))
        else:
            tokens.append((op, None))
    tokens.append(("end", None))
    i = 0

    def peek():
        return tokens[i][0]

    def take(kind=None):
        nonlocal i
        tok = tokens[i]
        if kind is not None and tok[0] != kind:
            raise CoefficientError(f"expected {kind!r}, found {tok[0]!r} in {text!r}")
        i += 1
        return tok

    def exponent():
        sign = 1
        if peek() == "-":
            take()
            sign = -1
        if peek() == "(":
            take()
            e = expr()
            take(")")
            v = e.constant_value() if isinstance(e, LaurentPoly) else None
            if v is None:
                raise CoefficientError("exponent must be a number")
            return sign * Fraction(v)
        return sign * take("num")[1]

    def atom():
        kind = peek()
        if kind == "num":
            return LaurentPoly.const(take()[1])
        if kind == "q":
            take()
            if peek() == "^":
                take()
                return qpow(exponent())
            return Q
        if kind == "(":
            take()
            e = expr()
            take(")")
            return e
        if kind == "-":
            take()
            return -atom()
        raise CoefficientError(f"unexpected {kind!r} in {text!r}")

    def term():
        v = atom()
        while peek() in ("*", "/"):
            op = take()[0]
            rhs = atom()
            v = v * rhs if op == "*" else v / rhs
        return v

    def expr():
        if peek() == "-":
            take()
            v = -term()
        else:
            v = term()
        while peek() in ("+", "-"):
            op = take()[0]
            rhs = term()
            v = v + rhs if op == "+" else v - rhs
        return v

    out = expr()
    take("end")
    if isinstance(out, LaurentRational):
        out = out.simplify()
    return out


"""Independent numeric oracles.

The algebra acts faithfully on sparse vectors indexed by ``(k, m)`` with
``k >= 0``:

    a e(k, m)  = sqrt(1 - q^2k) e(k-1, m)      c e(k, m)  = q^k e(k, m+1)
    a* e(k, m) = sqrt(1 - q^2k+2) e(k+1, m)    c* e(k, m) = q^k e(k, m-1)

and the invariant state is ``(1 - q^2) sum_k q^2k <e(k,0), x e(k,0)>``.
Nothing here uses the package's multiplication or closed forms.
"""

from __future__ import annotations

import math
from fractions import Fraction

from cpq.qcoeff import eval_at

Q0 = Fraction(1, 4)  # a perfect square, so half-integer powers evaluate exactly
QF = float(Q0)


def _apply_letter(letter: str, vec: dict) -> dict:
    out: dict = {}
    for (k, m), v in vec.items():
        if letter == "a":
            if k == 0:
                continue
            key, f = (k - 1, m), math.sqrt(1 - QF ** (2 * k))
        elif letter == "a*":
            key, f = (k + 1, m), math.sqrt(1 - QF ** (2 * k + 2))
        elif letter == "c":
            key, f = (k, m + 1), QF ** k
        else:
            key, f = (k, m - 1), QF ** k
        out[key] = out.get(key, 0.0) + f * v
    return out


def apply_word(word, vec: dict) -> dict:
    """Apply a word (leftmost letter acts last)."""
    for letter in reversed(list(word)):
        vec = _apply_letter(letter, vec)
    return vec


def apply_element(x, vec: dict) -> dict:
    out: dict = {}
    for mono, c in x.terms.items():
        cf = float(eval_at(c, Q0))
        for key, v in apply_word(mono.word(), vec).items():
            out[key] = out.get(key, 0.0) + cf * v
    return out


def vectors_close(u: dict, v: dict, tol: float = 1e-9) -> bool:
    return all(abs(u.get(k, 0.0) - v.get(k, 0.0)) <= tol for k in set(u) | set(v))


def state(x, terms: int = 40) -> float:
    total = 0.0
    for k in range(terms):
        total += QF ** (2 * k) * apply_element(x, {(k, 0): 1.0}).get((k, 0), 0.0)
    return (1 - QF ** 2) * total


def state_of_product(x, y, terms: int = 40) -> float:
    """State of ``x y`` computed from the two operators, without multiplying."""
    total = 0.0
    for k in range(terms):
        v = apply_element(x, apply_element(y, {(k, 0): 1.0}))
        total += QF ** (2 * k) * v.get((k, 0), 0.0)
    return (1 - QF ** 2) * total

"""Exact sparse Gaussian elimination over Laurent-rational coefficients."""

from __future__ import annotations

from .qcoeff import LaurentPoly, LaurentRational, as_coeff

__all__ = ["SingularSystem", "InconsistentSystem", "row_reduce", "solve_unique", "kernel"]


class SingularSystem(ArithmeticError):
    """The system does not determine every unknown."""


class InconsistentSystem(ArithmeticError):
    """The system has no solution."""


_RHS = object()  # key for the augmented column


def _cost(c) -> int:
    if isinstance(c, LaurentPoly):
        return len(c._t)
    return len(c.num._t) + len(c.den._t) + 1


def _tidy(c):
    if isinstance(c, LaurentRational):
        return c.simplify()
    return c


def row_reduce(rows, order):
    """Reduce sparse rows (dicts column -> coefficient) to echelon form.

    ``order`` lists the unknown columns; an optional ``_RHS`` entry is carried
    along.  Returns ``(pivots, reduced_rows)`` with ``pivots[i]`` the pivot
    column of ``reduced_rows[i]``; pivot entries are normalized to 1 and
    eliminated from every other row.
    """
    work = []
    for r in rows:
        r = {k: as_coeff(v) for k, v in r.items() if v}
        if r:
            work.append(r)
    pivots, done = [], []
    for col in order:
        cands = [r for r in work if col in r]
        if not cands:
            continue
        piv = min(cands, key=lambda r: (_cost(r[col]), len(r)))
        work.remove(piv)
        inv = piv[col]
        piv = {k: _tidy(v / inv) for k, v in piv.items()}
        piv[col] = as_coeff(1)
        new_work = []
        for r in work:
            f = r.get(col)
            if f is not None:
                r = dict(r)
                for k, v in piv.items():
                    s = _tidy(r.get(k, 0) - f * v) if k in r else _tidy(-f * v)
                    if s:
                        r[k] = s
                    else:
                        r.pop(k, None)
            if r:
                new_work.append(r)
        work = new_work
        for i, r in enumerate(done):
            f = r.get(col)
            if f is not None:
                r = dict(r)
                for k, v in piv.items():
                    s = _tidy(r.get(k, 0) - f * v) if k in r else _tidy(-f * v)
                    if s:
                        r[k] = s
                    else:
                        r.pop(k, None)
                done[i] = r
        pivots.append(col)
        done.append(piv)
    for r in work:
        if _RHS in r:
            raise InconsistentSystem("system has no solution")
    return pivots, done


def solve_unique(equations, unknowns):
    """Solve ``sum_k coeff_k x_k = rhs`` for every unknown.

    ``equations`` is an iterable of ``(row_dict, rhs)``.  Raises
    :class:`SingularSystem` unless the solution is unique.
    """
    rows = []
    for row, rhs in equations:
        r = dict(row)
        if rhs:
            r[_RHS] = as_coeff(rhs)
        rows.append(r)
    pivots, reduced = row_reduce(rows, list(unknowns))
    if len(pivots) != len(unknowns):
        missing = [u for u in unknowns if u not in set(pivots)]
        raise SingularSystem(f"{len(missing)} unknown(s) not determined, e.g. {missing[0]!r}")
    return {col: _tidy(r.get(_RHS, as_coeff(0))) for col, r in zip(pivots, reduced)}


def kernel(columns, rows_of):
    """Basis of the null space of a linear map.

    ``columns`` are the unknowns; ``rows_of(col)`` returns the image of the
    basis vector ``col`` as a dict row-key -> coefficient.  Each returned
    vector is a dict column -> coefficient, normalized to 1 on its free column.
    """
    columns = list(columns)
    images = {col: rows_of(col) for col in columns}
    row_keys = []
    seen = set()
    for col in columns:
        for k in images[col]:
            if k not in seen:
                seen.add(k)
                row_keys.append(k)
    rows = []
    for rk in row_keys:
        rows.append({col: images[col][rk] for col in columns if rk in images[col]})
    pivots, reduced = row_reduce(rows, columns)
    free = [c for c in columns if c not in set(pivots)]
    basis = []
    for f in free:
        vec = {f: as_coeff(1)}
        for col, r in zip(pivots, reduced):
            v = r.get(f)
            if v:
                vec[col] = _tidy(-v)
        basis.append(vec)
    return basis

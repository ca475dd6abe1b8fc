"""Dense matrices with algebra-valued entries."""

from __future__ import annotations

from .algebra import ONE_ELEMENT, ZERO_ELEMENT, AlgebraElement, star
from .qcoeff import LaurentRational, as_coeff

__all__ = ["ShapeMismatch", "Matrix"]


class ShapeMismatch(ValueError):
    pass


def _as_element(x) -> AlgebraElement:
    return x if isinstance(x, AlgebraElement) else AlgebraElement.scalar(x)


class Matrix:
    """Immutable rectangular matrix over the algebra."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(_as_element(x) for x in r) for r in rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ShapeMismatch("ragged rows")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE_ELEMENT if i == j else ZERO_ELEMENT for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "Matrix":
        return cls([[ZERO_ELEMENT] * (r if c is None else c) for _ in range(r)])

    @classmethod
    def diagonal(cls, entries) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO_ELEMENT for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def size(self) -> int:
        r, c = self.shape
        if r != c:
            raise ShapeMismatch(f"matrix of shape {self.shape} is not square")
        return r

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for i, r in enumerate(self.rows):
            for j, x in enumerate(r):
                yield i, j, x

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in r] for r in self.rows])

    def _check_same(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        c = as_coeff(c)
        return self.map(lambda x: x.scale(c))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        r, k = self.shape
        k2, c = other.shape
        if k != k2:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = ZERO_ELEMENT
                for x, y in zip(row, col):
                    if x.terms and y.terms:
                        acc = acc + x * y
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def is_zero(self) -> bool:
        return all(not x.terms for r in self.rows for x in r)

    def diag(self) -> list:
        return [self.rows[i][i] for i in range(self.size)]

    def star(self, weights=None) -> "Matrix":
        """Conjugate transpose; with ``weights`` it is the adjoint in the gauge
        ``P = D E D^-1`` with ``D^2 = diag(weights)``:
        ``(M^+)_{mu nu} = star(M_{nu mu}) w_nu / w_mu``."""
        r, c = self.shape
        out = []
        for mu in range(c):
            row = []
            for nu in range(r):
                x = star(self.rows[nu][mu])
                if weights is not None and x.terms:
                    f = as_coeff(weights[nu]) / as_coeff(weights[mu])
                    if isinstance(f, LaurentRational):
                        f = f.simplify()
                    x = x.scale(f)
                row.append(x)
            out.append(row)
        return Matrix(out)

    def conjugate_diagonal(self, lam) -> "Matrix":
        """``L M L^-1`` for a scalar diagonal ``L = diag(lam)``."""
        out = []
        for i, r in enumerate(self.rows):
            row = []
            for j, x in enumerate(r):
                f = as_coeff(lam[i]) / as_coeff(lam[j])
                if isinstance(f, LaurentRational):
                    f = f.simplify()
                row.append(x.scale(f))
            out.append(row)
        return Matrix(out)

    def simplify(self) -> "Matrix":
        return self.map(lambda x: x.simplify())

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            x == y for r, s in zip(self.rows, other.rows) for x, y in zip(r, s))

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.rows]!r})"

"""Exact dense linear algebra over the rationals.

Every hom-space, kernel and cokernel computation in the package bottoms out
here.  Entries are :class:`fractions.Fraction`; nothing is ever rounded.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted")
    return Fraction(x)


class ExactMatrix:
    """Immutable dense matrix of Fractions.

    ``rows`` and ``cols`` are stored explicitly so that 0 x n and n x 0
    matrices behave (they show up constantly as maps into zero spaces).
    """

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Sequence[Sequence], rows: Optional[int] = None,
                 cols: Optional[int] = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in data)
        if rows is None:
            rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"ragged or mis-sized matrix data for shape {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self._data = data
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def _raw(cls, data, rows, cols) -> "ExactMatrix":
        m = cls.__new__(cls)
        m.rows, m.cols, m._data, m._hash = rows, cols, data, None
        return m

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)), rows, cols)

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n))
                              for i in range(n)), n, n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "ExactMatrix":
        columns = [tuple(as_scalar(x) for x in c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("column length mismatch")
        return cls._raw(tuple(tuple(c[i] for c in columns) for i in range(rows)),
                        rows, len(columns))

    @classmethod
    def from_flat(cls, rows: int, cols: int, entries: Sequence) -> "ExactMatrix":
        if len(entries) != rows * cols:
            raise ValueError("entries length must equal rows * cols")
        e = [as_scalar(x) for x in entries]
        return cls._raw(tuple(tuple(e[i * cols:(i + 1) * cols]) for i in range(rows)),
                        rows, cols)

    # -- access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def flat(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    # -- algebra ----------------------------------------------------------
    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = other.columns()
        data = tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in ocols)
            for r in self._data)
        return ExactMatrix._raw(data, self.rows, other.cols)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), ZERO) for r in self._data)

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch in addition")
        return ExactMatrix._raw(tuple(tuple(a + b for a, b in zip(r, s))
                                      for r, s in zip(self._data, other._data)),
                                self.rows, self.cols)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(tuple(-a for a in r) for r in self._data),
                                self.rows, self.cols)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def scale(self, c) -> "ExactMatrix":
        c = as_scalar(c)
        return ExactMatrix._raw(tuple(tuple(c * a for a in r) for r in self._data),
                                self.rows, self.cols)

    @property
    def T(self) -> "ExactMatrix":
        return ExactMatrix._raw(tuple(self.column(j) for j in range(self.cols)),
                                self.cols, self.rows)

    def is_zero(self) -> bool:
        return all(not x for r in self._data for x in r)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "ExactMatrix":
        rows, cols = list(rows), list(cols)
        return ExactMatrix._raw(tuple(tuple(self._data[i][j] for j in cols) for i in rows),
                                len(rows), len(cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._data))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    # -- elimination ------------------------------------------------------
    def rref(self) -> tuple["ExactMatrix", list[int]]:
        return rref(self)

    def rank(self) -> int:
        return len(rref(self)[1])

    def kernel_basis(self) -> list[tuple]:
        return kernel_basis(self)

    def inverse(self) -> "ExactMatrix":
        if self.rows != self.cols:
            raise ValueError("only square matrices are invertible")
        n = self.rows
        red, piv = rref(hstack([self, ExactMatrix.identity(n)]))
        if piv[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = [list(r) for r in self._data]
        n, d = self.rows, ONE
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            d *= a[c][c]
            inv = ONE / a[c][c]
            for r in range(c + 1, n):
                f = a[r][c] * inv
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return d


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan on a list of row lists; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pr = rows[r]
        inv = ONE / pr[c]
        if inv != ONE:
            pr = [x * inv for x in pr]
            rows[r] = pr
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [x - f * y for x, y in zip(rows[i], pr)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    rows = [list(r) for r in m._data]
    pivots = _rref_rows(rows, m.cols)
    return ExactMatrix._raw(tuple(tuple(r) for r in rows), m.rows, m.cols), pivots


def rank(m: ExactMatrix) -> int:
    return len(rref(m)[1])


def kernel_basis(m: ExactMatrix) -> list[tuple]:
    """Basis of the right null space, one tuple per vector.

    The vectors are the standard ones read off the RREF: one per free
    column, with a 1 in that column.
    """
    red, pivots = rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [ZERO] * m.cols
        v[free] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i, free]
        basis.append(tuple(v))
    return basis


def solve(m: ExactMatrix, b: Sequence) -> Optional[tuple]:
    """Some x with m x = b, or ``None`` if the system is inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length must equal the row count")
    rows = [list(r) + [as_scalar(x)] for r, x in zip(m._data, b)]
    pivots = _rref_rows(rows, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.cols]
    return tuple(x)


def solve_matrix(m: ExactMatrix, b: ExactMatrix) -> Optional[ExactMatrix]:
    """Some X with m X = b (column by column), or ``None``."""
    if m.rows != b.rows:
        raise ValueError("row count mismatch")
    rows = [list(r) + list(s) for r, s in zip(m._data, b._data)]
    pivots = _rref_rows(rows, m.cols + b.cols)
    if pivots and pivots[-1] >= m.cols:
        return None
    out = [[ZERO] * b.cols for _ in range(m.cols)]
    for i, p in enumerate(pivots):
        out[p] = rows[i][m.cols:]
    return ExactMatrix(out, m.cols, b.cols)


def hstack(ms: Sequence[ExactMatrix], rows: Optional[int] = None) -> ExactMatrix:
    if not ms:
        return ExactMatrix.zeros(rows or 0, 0)
    r = ms[0].rows
    if any(m.rows != r for m in ms):
        raise ValueError("hstack row mismatch")
    return ExactMatrix._raw(tuple(sum((m._data[i] for m in ms), ()) for i in range(r)),
                            r, sum(m.cols for m in ms))


def vstack(ms: Sequence[ExactMatrix], cols: Optional[int] = None) -> ExactMatrix:
    if not ms:
        return ExactMatrix.zeros(0, cols or 0)
    c = ms[0].cols
    if any(m.cols != c for m in ms):
        raise ValueError("vstack column mismatch")
    return ExactMatrix._raw(sum((m._data for m in ms), ()), sum(m.rows for m in ms), c)


def block_diag(ms: Sequence[ExactMatrix]) -> ExactMatrix:
    R = sum(m.rows for m in ms)
    C = sum(m.cols for m in ms)
    out = [[ZERO] * C for _ in range(R)]
    r0 = c0 = 0
    for m in ms:
        for i in range(m.rows):
            out[r0 + i][c0:c0 + m.cols] = m._data[i]
        r0 += m.rows
        c0 += m.cols
    return ExactMatrix(out, R, C)


def column_space(m: ExactMatrix) -> ExactMatrix:
    """Matrix whose columns are a basis of the column space of ``m``."""
    _, piv = rref(m)
    return m.submatrix(range(m.rows), piv)


def left_null(m: ExactMatrix) -> ExactMatrix:
    """Rows spanning {q : q m = 0}; a surjection onto the cokernel of ``m``."""
    vecs = kernel_basis(m.T)
    return ExactMatrix(vecs, len(vecs), m.rows)


def right_inverse(q: ExactMatrix) -> ExactMatrix:
    """R with q R = I for a matrix of full row rank."""
    r = solve_matrix(q, ExactMatrix.identity(q.rows))
    if r is None:
        raise ValueError("matrix does not have full row rank")
    return r


def left_inverse(b: ExactMatrix) -> ExactMatrix:
    """L with L b = I for a matrix of full column rank."""
    return right_inverse(b.T).T


class SubspaceReducer:
    """Reduce vectors modulo a fixed subspace.

    After elimination the pivot coordinates of a reduced vector vanish, so the
    remaining (free) coordinates are canonical coordinates of its class in the
    quotient.
    """

    def __init__(self, generators: Sequence[Sequence], dim: int):
        rows = [[as_scalar(x) for x in g] for g in generators]
        pivots = _rref_rows(rows, dim)
        self.dim = dim
        self.rows = rows[:len(pivots)]
        self.pivots = pivots
        ps = set(pivots)
        self.free = [c for c in range(dim) if c not in ps]

    @property
    def subspace_dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: Sequence) -> list[Fraction]:
        v = [as_scalar(x) for x in v]
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def quotient_coords(self, v: Sequence) -> tuple:
        w = self.reduce(v)
        return tuple(w[c] for c in self.free)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))


class Coordinates:
    """Coordinates of vectors with respect to a fixed linearly independent list."""

    def __init__(self, basis: Sequence[Sequence], dim: int):
        self.n = len(basis)
        self.dim = dim
        # Augment each basis vector with a unit tag so elimination records the
        # change of basis.
        rows = [list(map(as_scalar, b)) + [ONE if i == k else ZERO for k in range(self.n)]
                for i, b in enumerate(basis)]
        pivots = _rref_rows(rows, dim)
        if len(pivots) != self.n:
            raise ValueError("basis vectors are linearly dependent")
        self._rows = rows
        self._pivots = pivots

    def __call__(self, v: Sequence) -> Optional[tuple]:
        v = [as_scalar(x) for x in v] + [ZERO] * self.n
        if len(v) != self.dim + self.n:
            raise ValueError("vector length mismatch")
        for row, p in zip(self._rows, self._pivots):
            f = v[p]
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        if any(v[:self.dim]):
            return None
        # v = -sum(coeffs) encoded in the tag part
        return tuple(-x for x in v[self.dim:])


def matrix_power(m: ExactMatrix, k: int) -> ExactMatrix:
    out = ExactMatrix.identity(m.rows)
    base = m
    while k:
        if k & 1:
            out = out @ base
        base = base @ base
        k >>= 1
    return out

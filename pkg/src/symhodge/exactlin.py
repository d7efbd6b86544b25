"""Exact rational linear algebra.

Everything downstream (cohomology ranks, subspace equalities, map
classifications) reduces to computations in this module, and every verdict
is a rank statement, so all arithmetic is done with `fractions.Fraction`.
Subspaces are kept in reduced row echelon form, which is a canonical
representative: two subspaces are equal iff their RREF bases are
structurally equal.

Matrices are dense; ambient dimensions stay below ~100 for every input this
package handles, so no sparsity tricks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Dense rational matrix. Rows and cols may be zero."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: Sequence[Sequence]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        grid = [[_frac(x) for x in row] for row in data]
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ValueError("entry grid does not match declared shape")
        self.rows = rows
        self.cols = cols
        self.data = grid

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        grid = [[_frac(x) for x in row] for row in rows]
        ncols = len(grid[0]) if grid else 0
        return cls(len(grid), ncols, grid)

    @classmethod
    def from_cols(cls, cols: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        cols = [list(c) for c in cols]
        if nrows is None:
            if not cols:
                raise ValueError("from_cols with no columns needs an explicit row count")
            nrows = len(cols[0])
        m = cls.zeros(nrows, len(cols))
        for j, c in enumerate(cols):
            if len(c) != nrows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(c):
                m.data[i][j] = _frac(x)
        return m

    def copy(self) -> "Matrix":
        return Matrix(self.rows, self.cols, [row[:] for row in self.data])

    def col(self, j: int) -> list[Fraction]:
        return [self.data[i][j] for i in range(self.rows)]

    def columns(self) -> list[list[Fraction]]:
        return [self.col(j) for j in range(self.cols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(tuple(r) for r in self.data)))

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.data!r})"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)])

    def scale(self, c) -> "Matrix":
        c = _frac(c)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.data])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch in product: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = Matrix.zeros(self.rows, other.cols)
        for i in range(self.rows):
            rowi = self.data[i]
            for k in range(self.cols):
                a = rowi[k]
                if a == 0:
                    continue
                rowk = other.data[k]
                orow = out.data[i]
                for j in range(other.cols):
                    b = rowk[j]
                    if b != 0:
                        orow[j] += a * b
        return out

    def apply(self, vec: Sequence) -> list[Fraction]:
        v = [_frac(x) for x in vec]
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum((row[j] * v[j] for j in range(self.cols)), ZERO) for row in self.data]

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def _same_shape(self, other: "Matrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("matrix shape mismatch")


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ValueError("row count mismatch in hstack")
    return Matrix(a.rows, a.cols + b.cols,
                  [ra + rb for ra, rb in zip(a.data, b.data)])


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row echelon form of m: (R, pivot columns, rank)."""
    r = m.copy()
    pivots: list[int] = []
    prow = 0
    for pcol in range(r.cols):
        sel = None
        for i in range(prow, r.rows):
            if r.data[i][pcol] != 0:
                sel = i
                break
        if sel is None:
            continue
        r.data[prow], r.data[sel] = r.data[sel], r.data[prow]
        piv = r.data[prow][pcol]
        if piv != 1:
            r.data[prow] = [x / piv for x in r.data[prow]]
        for i in range(r.rows):
            if i == prow:
                continue
            f = r.data[i][pcol]
            if f != 0:
                ri, rp = r.data[i], r.data[prow]
                r.data[i] = [a - f * b for a, b in zip(ri, rp)]
        pivots.append(pcol)
        prow += 1
        if prow == r.rows:
            break
    return r, tuple(pivots), len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


class SubspaceBasis:
    """A subspace of Q^n, held as the RREF basis of its span (canonical)."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Iterable[Iterable] = ()):
        self.ambient_dim = ambient_dim
        vecs = [[_frac(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        if vecs:
            r, _, rk = rref(Matrix.from_rows(vecs))
            self.basis = [tuple(r.data[i]) for i in range(rk)]
        else:
            self.basis = []

    @classmethod
    def full(cls, n: int) -> "SubspaceBasis":
        return cls(n, Matrix.identity(n).data)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SubspaceBasis)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, tuple(self.basis)))

    def __repr__(self):
        return f"SubspaceBasis(dim {self.dim} in Q^{self.ambient_dim})"

    def as_matrix(self) -> Matrix:
        """Basis vectors as columns (ambient_dim x dim)."""
        return Matrix.from_cols([list(v) for v in self.basis], nrows=self.ambient_dim)

    def contains(self, vec: Sequence) -> bool:
        v = [_frac(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        if self.dim == 0:
            return all(x == 0 for x in v)
        return solve(self.as_matrix(), v) is not None

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        self._check_ambient(other)
        return all(self.contains(v) for v in other.basis)

    def _check_ambient(self, other: "SubspaceBasis"):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")


def kernel(m: Matrix) -> SubspaceBasis:
    """Basis of the null space {x : m x = 0}."""
    r, pivots, rk = rref(m)
    free = [j for j in range(m.cols) if j not in pivots]
    vecs = []
    for fj in free:
        v = [ZERO] * m.cols
        v[fj] = ONE
        for i, pj in enumerate(pivots):
            v[pj] = -r.data[i][fj]
        vecs.append(v)
    return SubspaceBasis(m.cols, vecs)


def image(m: Matrix) -> SubspaceBasis:
    """Basis of the column space of m."""
    return SubspaceBasis(m.rows, [m.col(j) for j in range(m.cols)])


def solve(m: Matrix, rhs: Sequence) -> Optional[list[Fraction]]:
    """Some x with m x = rhs, or None if the system is inconsistent."""
    b = [_frac(x) for x in rhs]
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    aug = hstack(m, Matrix.from_cols([b], nrows=m.rows))
    r, pivots, rk = rref(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for i, pj in enumerate(pivots):
        x[pj] = r.data[i][m.cols]
    return x


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    a._check_ambient(b)
    return SubspaceBasis(a.ambient_dim, list(a.basis) + list(b.basis))


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Canonical basis of a ∩ b.

    x ∈ a∩b iff x = A u = B v; pairs (u, -v) form the kernel of [A | B].
    """
    a._check_ambient(b)
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis(a.ambient_dim)
    am = a.as_matrix()
    bm = b.as_matrix()
    ker = kernel(hstack(am, bm))
    vecs = [am.apply(v[: a.dim]) for v in ker.basis]
    return SubspaceBasis(a.ambient_dim, vecs)


def subspace_equal(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    a._check_ambient(b)
    return a.basis == b.basis


def quotient_map(sub: SubspaceBasis, total: SubspaceBasis) -> tuple[Matrix, Matrix]:
    """Coordinates on total/sub.

    Returns (projection, lift): projection maps a vector of `total` (given in
    ambient coordinates) to its coordinates in a chosen complement of `sub`
    inside `total`; lift is a right inverse sending quotient coordinates to
    representative vectors, so projection @ lift = identity.
    """
    sub._check_ambient(total)
    if not total.contains_subspace(sub):
        raise ValueError("sub is not contained in total")
    n = sub.ambient_dim
    cols = [list(v) for v in sub.basis]
    s = len(cols)
    # complement of sub inside total, then completion to a basis of Q^n
    chosen = []
    cur_rank = s
    for v in total.basis:
        cand = cols + chosen + [list(v)]
        if rank(Matrix.from_cols(cand, nrows=n)) > cur_rank:
            chosen.append(list(v))
            cur_rank += 1
    q = len(chosen)
    ext = []
    for j in range(n):
        if cur_rank == n:
            break
        unit = [ZERO] * n
        unit[j] = ONE
        cand = cols + chosen + ext + [unit]
        if rank(Matrix.from_cols(cand, nrows=n)) > cur_rank:
            ext.append(unit)
            cur_rank += 1
    full = Matrix.from_cols(cols + chosen + ext, nrows=n)
    inv = invert(full)
    projection = Matrix(q, n, [inv.data[s + i] for i in range(q)])
    lift = Matrix.from_cols(chosen, nrows=n) if q else Matrix.zeros(n, 0)
    return projection, lift


def invert(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ValueError("only square matrices can be inverted")
    n = m.rows
    r, pivots, rk = rref(hstack(m, Matrix.identity(n)))
    if pivots[:n] != tuple(range(n)):
        raise ValueError("matrix is singular")
    return Matrix(n, n, [row[n:] for row in r.data])

"""Exact rational matrices: minors, solving, rank, and flatness witnesses.

All arithmetic is done with fractions.Fraction, so every result is exact.
Matrices are immutable after construction and safe to share between workers.
"""

from __future__ import annotations

from fractions import Fraction


def frac(x) -> Fraction:
    """Coerce ints, strings like "p/q", and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


class Matrix:
    """Dense matrix over the rationals with optional column labels.

    Entries are stored row-major as Fractions. Column labels, when present,
    must be distinct and one per column (they name ground-set elements such
    as graph edges).
    """

    __slots__ = ("rows", "cols", "entries", "labels")

    def __init__(self, entries, labels=None):
        entries = [[frac(x) for x in row] for row in entries]
        if not entries:
            raise ValueError("matrix must have at least one row")
        ncols = len(entries[0])
        if any(len(row) != ncols for row in entries):
            raise ValueError("ragged rows")
        if labels is not None:
            labels = list(labels)
            if len(labels) != ncols:
                raise ValueError("labels must match column count")
            if len(set(labels)) != ncols:
                raise ValueError("labels must be distinct")
        self.rows = len(entries)
        self.cols = ncols
        self.entries = entries
        self.labels = labels

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.entries == other.entries

    def __repr__(self):
        return f"Matrix({self.entries!r})"

    def entry(self, i, j) -> Fraction:
        return self.entries[i][j]

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        for i in row_idx:
            if not 0 <= i < self.rows:
                raise IndexError(f"row index {i} out of range")
        for j in col_idx:
            if not 0 <= j < self.cols:
                raise IndexError(f"column index {j} out of range")
        return Matrix([[self.entries[i][j] for j in col_idx] for i in row_idx])

    def transpose(self) -> "Matrix":
        return Matrix([[self.entries[i][j] for i in range(self.rows)]
                       for j in range(self.cols)])

    def det(self) -> Fraction:
        """Determinant by exact Gaussian elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = [row[:] for row in self.entries]
        det = Fraction(1)
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                a[c], a[piv] = a[piv], a[c]
                det = -det
            det *= a[c][c]
            inv = 1 / a[c][c]
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    f = a[r][c] * inv
                    for k in range(c, n):
                        a[r][k] -= f * a[c][k]
        return det

    def minor(self, row_idx, col_idx) -> Fraction:
        """Determinant of the submatrix selected by the given index sets."""
        row_idx, col_idx = list(row_idx), list(col_idx)
        if len(row_idx) != len(col_idx):
            raise ValueError("minor needs equally many rows and columns")
        return self.submatrix(row_idx, col_idx).det()

    def _rref(self):
        """Reduced row echelon form; returns (matrix rows, pivot columns)."""
        a = [row[:] for row in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            if r == self.rows:
                break
            piv = next((i for i in range(r, self.rows) if a[i][c] != 0), None)
            if piv is None:
                continue
            a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return a, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def kernel_basis(self):
        """Basis of the right kernel, one vector per free column."""
        a, pivots = self._rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for r, c in enumerate(pivots):
                v[c] = -a[r][free]
            basis.append(v)
        return basis

    def solve(self, b):
        """Solve A x = b exactly.

        Returns (particular solution, kernel basis) or None when the system
        is inconsistent.
        """
        b = [frac(x) for x in b]
        if len(b) != self.rows:
            raise ValueError("right-hand side length must equal row count")
        aug = Matrix([row + [bv] for row, bv in zip(self.entries, b)])
        a, pivots = aug._rref()
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for r, c in enumerate(pivots):
            x[c] = a[r][self.cols]
        return x, self.kernel_basis()

    def apply(self, x):
        """Matrix-vector product A x."""
        if len(x) != self.cols:
            raise ValueError("vector length must equal column count")
        return [sum((row[j] * x[j] for j in range(self.cols)), Fraction(0))
                for row in self.entries]


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dot of vectors of unequal length")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def flat_witness(A: Matrix):
    """Linear form h with h(column) = 1 for every column, or None.

    The witness is the particular solution of the row-reduced system; any
    witness serves since downstream polynomials do not depend on the choice.
    """
    ones = [Fraction(1)] * A.cols
    sol = A.transpose().solve(ones)
    if sol is None:
        return None
    return sol[0]

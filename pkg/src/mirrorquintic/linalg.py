"""Exact matrices over duck-typed field elements, and 1-forms on the moduli chart.

Matrix entries may be rationals or MultiRat values; they only need +, -, *, /
and equality against 0.  Inverses go through the adjugate with exact
determinants (all matrices in scope are at most 4x4), which keeps expression
swell bounded without needing polynomial gcds.
"""

from __future__ import annotations

from .errors import SingularMatrix
from .multipoly import MultiRat
from .rational import RAT_ZERO


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be non-empty and rectangular")
        self.rows = rows

    @classmethod
    def identity(cls, n: int, one, zero) -> "Matrix":
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.nrows, self.ncols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    __hash__ = None  # type: ignore[assignment]

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(x) for x in row] for row in self.rows])

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows])

    def scale(self, c) -> "Matrix":
        return Matrix([[a * c for a in row] for row in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return self.scale(other)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        cols = other.transpose().rows
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = None
                for a, b in zip(row, col):
                    term = a * b
                    acc = term if acc is None else acc + term
                out_row.append(acc)
            out.append(out_row)
        return Matrix(out)

    def det(self):
        """Exact determinant by expansion along the first remaining column,
        memoized over row subsets."""
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        rows = self.rows
        memo = {}

        def minor(row_ids, col):
            key = row_ids
            if key in memo:
                return memo[key]
            if len(row_ids) == 1:
                val = rows[row_ids[0]][col]
            else:
                val = None
                for k, r in enumerate(row_ids):
                    entry = rows[r][col]
                    if entry == 0:
                        continue
                    rest = row_ids[:k] + row_ids[k + 1 :]
                    term = entry * minor(rest, col + 1)
                    if k % 2:
                        term = -term
                    val = term if val is None else val + term
                if val is None:
                    val = rows[row_ids[0]][col] - rows[row_ids[0]][col]  # ring zero
            memo[key] = val
            return val

        return minor(tuple(range(n)), 0)

    def _cofactor(self, i: int, j: int):
        sub = [
            [self.rows[r][c] for c in range(self.ncols) if c != j]
            for r in range(self.nrows)
            if r != i
        ]
        d = Matrix(sub).det()
        return -d if (i + j) % 2 else d

    def inverse(self) -> "Matrix":
        d = self.det()
        if d == 0:
            raise SingularMatrix("zero determinant")
        n = self.nrows
        return Matrix(
            [[self._cofactor(j, i) / d for j in range(n)] for i in range(n)]
        )


class OneForm:
    """A 1-form a0 dt0 + ... + a4 dt4 with rational-function components."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if len(components) != 5:
            raise ValueError("one-forms here have exactly five components dt0..dt4")
        self.components = components

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return all(a == b for a, b in zip(self.components, other.components))

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "OneForm") -> "OneForm":
        return OneForm([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other: "OneForm") -> "OneForm":
        return OneForm([a - b for a, b in zip(self.components, other.components)])

    def __neg__(self) -> "OneForm":
        return OneForm([-a for a in self.components])

    def scale(self, c) -> "OneForm":
        return OneForm([a * c for a in self.components])

    def pair(self, vector) -> MultiRat:
        """Contract with a vector field (five components)."""
        acc = None
        for a, v in zip(self.components, vector):
            term = a * v
            acc = term if acc is None else acc + term
        return acc


def solve_rational(matrix_rows, rhs):
    """Exact Gaussian elimination over Q.

    Returns (solution, free_columns) where free columns get value 0, or
    (None, None) when the system is inconsistent.  ``matrix_rows`` is a list of
    coefficient lists, ``rhs`` the right-hand sides.
    """
    m = [list(row) + [b] for row, b in zip(matrix_rows, rhs)]
    nrows, ncols = len(m), len(matrix_rows[0])
    piv_rows = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != RAT_ZERO), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pr = m[r]
        inv = 1 / pr[c]
        for i in range(nrows):
            if i != r and m[i][c] != RAT_ZERO:
                f = m[i][c] * inv
                mi = m[i]
                for j in range(c, ncols + 1):
                    mi[j] = mi[j] - f * pr[j]
        piv_rows.append((r, c))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if m[i][ncols] != RAT_ZERO:
            return None, None
    solution = [RAT_ZERO] * ncols
    pivot_cols = {c for _, c in piv_rows}
    for i, c in piv_rows:
        solution[c] = m[i][ncols] / m[i][c]
    free = [c for c in range(ncols) if c not in pivot_cols]
    return solution, free

"""Dense exact matrices of RingElements.

Over a field (a BaseRing with no variables) the usual reductions are
available: rref, rank, nullspace, solving, inversion.  Over a polynomial ring
only the module operations (addition, multiplication, comparison) are used.
"""

from __future__ import annotations

from .errors import InputError
from .poly import BaseRing, RingElement


class Matrix:
    """An immutable rows x cols matrix over a BaseRing."""

    __slots__ = ("ring", "rows", "cols", "data")

    def __init__(self, ring: BaseRing, rows: int, cols: int, data=None):
        self.ring = ring
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = tuple(tuple(ring.zero() for _ in range(cols)) for _ in range(rows))
        else:
            norm = []
            if len(data) != rows:
                raise InputError("row count mismatch")
            for row in data:
                if len(row) != cols:
                    raise InputError("column count mismatch")
                norm.append(tuple(ring.element(e) for e in row))
            self.data = tuple(norm)

    # -- constructors

    @classmethod
    def identity(cls, ring: BaseRing, n: int) -> "Matrix":
        return cls(ring, n, n, [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, ring: BaseRing, rows: int, cols: int) -> "Matrix":
        return cls(ring, rows, cols)

    @classmethod
    def from_rows(cls, ring: BaseRing, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(ring, len(rows), ncols, rows)

    @classmethod
    def diagonal(cls, ring: BaseRing, entries) -> "Matrix":
        n = len(entries)
        return cls(ring, n, n, [[entries[i] if i == j else ring.zero() for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, ring: BaseRing, n: int, value) -> "Matrix":
        value = ring.element(value)
        return cls.diagonal(ring, [value] * n)

    # -- access

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and other.ring == self.ring
            and other.rows == self.rows
            and other.cols == self.cols
            and other.data == self.data
        )

    def __hash__(self):
        return hash((self.ring, self.rows, self.cols, self.data))

    # -- arithmetic

    def __add__(self, other):
        self._compatible(other)
        return Matrix(
            self.ring,
            self.rows,
            self.cols,
            [[self.data[i][j] + other.data[i][j] for j in range(self.cols)] for i in range(self.rows)],
        )

    def __sub__(self, other):
        self._compatible(other)
        return Matrix(
            self.ring,
            self.rows,
            self.cols,
            [[self.data[i][j] - other.data[i][j] for j in range(self.cols)] for i in range(self.rows)],
        )

    def _compatible(self, other):
        if not isinstance(other, Matrix) or other.rows != self.rows or other.cols != self.cols:
            raise InputError("matrix shape mismatch")

    def scale(self, value) -> "Matrix":
        value = self.ring.element(value)
        return Matrix(
            self.ring,
            self.rows,
            self.cols,
            [[value * self.data[i][j] for j in range(self.cols)] for i in range(self.rows)],
        )

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if other.rows != self.cols:
            raise InputError("matrix multiplication shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    acc = acc + self.data[i][k] * other.data[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(self.ring, self.rows, other.cols, out)

    def apply(self, vector):
        if len(vector) != self.cols:
            raise InputError("vector length mismatch")
        return [
            sum((self.data[i][j] * vector[j] for j in range(self.cols)), self.ring.zero())
            for i in range(self.rows)
        ]

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.data for e in row)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, self.cols, self.rows, [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def hstack(self, other: "Matrix") -> "Matrix":
        if other.rows != self.rows:
            raise InputError("hstack shape mismatch")
        return Matrix(
            self.ring,
            self.rows,
            self.cols + other.cols,
            [list(self.data[i]) + list(other.data[i]) for i in range(self.rows)],
        )

    # -- field reductions

    def _require_field(self):
        if not self.ring.is_field:
            raise InputError("operation requires field coefficients")

    def rref(self):
        """(reduced matrix, pivot column list); field coefficients only."""
        self._require_field()
        m = [list(row) for row in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = None
            for i in range(r, self.rows):
                if not m[i][c].is_zero:
                    pivot = i
                    break
            if pivot is None:
                continue
            m[r], m[pivot] = m[pivot], m[r]
            inv = m[r][c].inverse_unit()
            m[r] = [inv * e for e in m[r]]
            for i in range(self.rows):
                if i != r and not m[i][c].is_zero:
                    factor = m[i][c]
                    m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(self.ring, self.rows, self.cols, m), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self):
        """Basis of the right kernel, as a list of column vectors."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            vec = [self.ring.zero()] * self.cols
            vec[fc] = self.ring.one()
            for r, pc in enumerate(pivots):
                vec[pc] = -red.data[r][fc]
            basis.append(vec)
        return basis

    def solve(self, rhs):
        """One solution x of self @ x = rhs over a field, or None."""
        self._require_field()
        if len(rhs) != self.rows:
            raise InputError("rhs length mismatch")
        aug = Matrix(
            self.ring,
            self.rows,
            self.cols + 1,
            [list(self.data[i]) + [self.ring.element(rhs[i])] for i in range(self.rows)],
        )
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        x = [self.ring.zero()] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = red.data[r][self.cols]
        return x

    def inverse(self) -> "Matrix | None":
        self._require_field()
        if self.rows != self.cols:
            return None
        aug = self.hstack(Matrix.identity(self.ring, self.rows))
        red, pivots = aug.rref()
        if pivots != list(range(self.rows)):
            return None
        return Matrix(
            self.ring,
            self.rows,
            self.rows,
            [[red.data[i][self.rows + j] for j in range(self.rows)] for i in range(self.rows)],
        )

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    # -- display

    def __str__(self):
        rows = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.data)
        return f"[{rows}]"

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over {self.ring.kind}: {self})"

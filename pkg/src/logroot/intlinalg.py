"""Exact integer matrix algebra: Smith normal form and friends.

Matrices are lists of lists of Python ints (arbitrary precision), row-major.
Everything here is elementary and dense; the package only ever meets tiny
matrices.
"""

from __future__ import annotations

IntMatrix = list


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> IntMatrix:
    mat = zeros(n, n)
    for i in range(n):
        mat[i][i] = 1
    return mat


def copy_matrix(m: IntMatrix) -> IntMatrix:
    return [row[:] for row in m]


def shape(m: IntMatrix) -> tuple[int, int]:
    return (len(m), len(m[0]) if m else 0)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    ra, ca = shape(a)
    rb, cb = shape(b)
    assert ca == rb, "dimension mismatch"
    out = zeros(ra, cb)
    for i in range(ra):
        arow = a[i]
        orow = out[i]
        for k in range(ca):
            aik = arow[k]
            if aik == 0:
                continue
            brow = b[k]
            for j in range(cb):
                orow[j] += aik * brow[j]
    return out


def mat_vec(a: IntMatrix, v: list[int]) -> list[int]:
    ra, ca = shape(a)
    assert len(v) == ca, "dimension mismatch"
    return [sum(a[i][k] * v[k] for k in range(ca)) for i in range(ra)]


def transpose(m: IntMatrix) -> IntMatrix:
    rows, cols = shape(m)
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def det(m: IntMatrix) -> int:
    """Determinant via fraction-free (Bareiss) elimination."""
    n, c = shape(m)
    assert n == c, "determinant needs a square matrix"
    if n == 0:
        return 1
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class SmithNormalForm:
    """U @ M @ V = D with U, V unimodular and D in Smith form.

    Inverses of the transforms are tracked during the reduction, so mapping
    coset representatives back and forth needs no extra work.
    """

    def __init__(self, m: IntMatrix):
        rows, cols = shape(m)
        self.rows = rows
        self.cols = cols
        d = copy_matrix(m)
        u = identity(rows)
        uinv = identity(rows)
        v = identity(cols)
        vinv = identity(cols)

        def row_op(i, j, q):
            # row_i -= q * row_j  (and the inverse op on uinv columns)
            for k in range(cols):
                d[i][k] -= q * d[j][k]
            for k in range(rows):
                u[i][k] -= q * u[j][k]
            for k in range(rows):
                uinv[k][j] += q * uinv[k][i]

        def col_op(i, j, q):
            # col_i -= q * col_j
            for k in range(rows):
                d[k][i] -= q * d[k][j]
            for k in range(cols):
                v[k][i] -= q * v[k][j]
            for k in range(cols):
                vinv[j][k] += q * vinv[i][k]

        def row_swap(i, j):
            d[i], d[j] = d[j], d[i]
            u[i], u[j] = u[j], u[i]
            for k in range(rows):
                uinv[k][i], uinv[k][j] = uinv[k][j], uinv[k][i]

        def col_swap(i, j):
            for k in range(rows):
                d[k][i], d[k][j] = d[k][j], d[k][i]
            for k in range(cols):
                v[k][i], v[k][j] = v[k][j], v[k][i]
            vinv[i], vinv[j] = vinv[j], vinv[i]

        def row_negate(i):
            for k in range(cols):
                d[i][k] = -d[i][k]
            for k in range(rows):
                u[i][k] = -u[i][k]
            for k in range(rows):
                uinv[k][i] = -uinv[k][i]

        t = 0
        limit = min(rows, cols)
        while t < limit:
            # find a pivot of smallest absolute value in the trailing block
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    e = d[i][j]
                    if e != 0 and (best is None or abs(e) < best):
                        best = abs(e)
                        pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if d[t][t] < 0:
                row_negate(t)
            # clear row and column t, restarting when a remainder shrinks
            dirty = True
            while dirty:
                dirty = False
                for i in range(t + 1, rows):
                    if d[i][t] != 0:
                        q = d[i][t] // d[t][t]
                        row_op(i, t, q)
                        if d[i][t] != 0:
                            row_swap(t, i)
                            if d[t][t] < 0:
                                row_negate(t)
                            dirty = True
                for j in range(t + 1, cols):
                    if d[t][j] != 0:
                        q = d[t][j] // d[t][t]
                        col_op(j, t, q)
                        if d[t][j] != 0:
                            col_swap(t, j)
                            if d[t][t] < 0:
                                row_negate(t)
                            dirty = True
            # enforce divisibility d[t][t] | d[i][j] on the trailing block
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if d[i][j] % d[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is not None:
                # add offending row to row t and redo this step
                for k in range(cols):
                    d[t][k] += d[offender][k]
                for k in range(rows):
                    u[t][k] += u[offender][k]
                for k in range(rows):
                    uinv[k][offender] -= uinv[k][t]
                continue
            t += 1

        self.u = u
        self.uinv = uinv
        self.v = v
        self.vinv = vinv
        self.d = d
        self.diag = [d[i][i] for i in range(min(rows, cols))]
        self.rank = sum(1 for e in self.diag if e != 0)

    def solve(self, b: list[int]) -> list[int] | None:
        """A particular integer solution x of M x = b, or None.

        The solution is the canonical one with all free Smith coordinates
        equal to zero.
        """
        assert len(b) == self.rows
        c = mat_vec(self.u, b)
        y = [0] * self.cols
        for i in range(self.rows):
            di = self.d[i][i] if i < min(self.rows, self.cols) else 0
            if di == 0:
                if c[i] != 0:
                    return None
            else:
                if c[i] % di != 0:
                    return None
                y[i] = c[i] // di
        return mat_vec(self.v, y)

    def kernel_basis(self) -> list[list[int]]:
        """Basis of the integer kernel of M (as column vectors)."""
        basis = []
        for j in range(self.cols):
            dj = self.d[j][j] if j < min(self.rows, self.cols) else 0
            if j >= self.rank or dj == 0:
                basis.append([self.v[i][j] for i in range(self.cols)])
        return basis


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U @ M @ V = D in Smith normal form."""
    snf = SmithNormalForm(m)
    return snf.u, snf.d, snf.v

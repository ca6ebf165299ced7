"""Small exact linear algebra over Fraction.

Matrices are lists of row tuples/lists of Fractions.  Pivoting always
selects the first nonzero entry, never by magnitude; there is no floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Vec = tuple[Fraction, ...]


def vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Vec) -> Vec:
    c = Fraction(c)
    return tuple(c * a for a in u)


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def unit(n: int, i: int) -> Vec:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


class Echelon:
    """Incremental row-echelon basis for span membership and extension."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    def reduce(self, v) -> list[Fraction]:
        v = list(map(Fraction, v))
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def contains(self, v) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def add(self, v) -> bool:
        """Add v to the span; True if the dimension grew."""
        v = self.reduce(v)
        pivot = next((i for i, x in enumerate(v) if x != 0), None)
        if pivot is None:
            return False
        inv = 1 / v[pivot]
        v = [x * inv for x in v]
        for row in self.rows:
            if row[pivot] != 0:
                f = row[pivot]
                row[:] = [x - f * y for x, y in zip(row, v)]
        idx = next((k for k, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, pivot)
        return True

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self) -> list[Vec]:
        return [tuple(r) for r in self.rows]


def kernel_basis(rows: Sequence[Sequence[Fraction]]) -> list[Vec]:
    """Basis of the right kernel {x : M x = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vec | None:
    """One solution of M x = rhs, or None if inconsistent."""
    aug = [list(row) + [Fraction(v)] for row, v in zip(matrix, rhs)]
    n = len(matrix[0]) if matrix else 0
    reduced, pivots = rref(aug)
    x = [Fraction(0)] * n
    for row, p in zip(reduced, pivots):
        if p == n:
            return None
        x[p] = row[n]
    return tuple(x)


def matmul(a, b):
    return [
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    ]


def matvec(a, v: Vec) -> Vec:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in a)


def identity_matrix(n: int):
    return [unit(n, i) for i in range(n)]


def invert(matrix) -> list[Vec]:
    n = len(matrix)
    aug = [list(matrix[i]) + list(unit(n, i)) for i in range(n)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [tuple(reduced[i][n:]) for i in range(n)]


def determinant(matrix) -> Fraction:
    m = [list(map(Fraction, row)) for row in matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return det


def leading_principal_minors(matrix) -> list[Fraction]:
    n = len(matrix)
    return [
        determinant([row[: k + 1] for row in matrix[: k + 1]]) for k in range(n)
    ]

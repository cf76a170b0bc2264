"""Small exact linear algebra over the rationals.

Matrices are lists of rows of Fractions (or numpy object arrays holding
Fractions).  Sizes stay below ~100, so plain Gauss-Jordan is adequate.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np


def to_fraction_rows(M) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in np.asarray(M, dtype=object).tolist()]


def rref(M) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = to_fraction_rows(M)
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        pv = A[r][c]
        if pv != 1:
            A[r] = [x / pv for x in A[r]]
        row_r = A[r]
        nz = [j for j in range(c, cols) if row_r[j]]
        for i in range(rows):
            if i != r:
                f = A[i][c]
                if f:
                    row_i = A[i]
                    for j in nz:
                        row_i[j] -= f * row_r[j]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def nullspace(M, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : M x = 0}; vectors are scaled to integer entries."""
    rows = to_fraction_rows(M)
    if not rows:
        n = ncols or 0
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    n = len(rows[0])
    R, pivots = rref(rows)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i][f]
        basis.append(_integerize(v))
    return basis


def _integerize(v: Sequence[Fraction]) -> list[Fraction]:
    den = lcm(*(x.denominator for x in v)) if v else 1
    return [x * den for x in v]


def inverse(M) -> list[list[Fraction]]:
    A = to_fraction_rows(M)
    n = len(A)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def is_positive_definite(M) -> bool:
    """Exact test: symmetric Gaussian elimination with all pivots positive.

    Equivalent to positivity of all leading principal minors.
    """
    A = to_fraction_rows(M)
    n = len(A)
    for i in range(n):
        for j in range(n):
            if A[i][j] != A[j][i]:
                return False
    for k in range(n):
        piv = A[k][k]
        if piv <= 0:
            return False
        for i in range(k + 1, n):
            f = A[i][k] / piv
            if f:
                for j in range(k, n):
                    A[i][j] -= f * A[k][j]
    return True


def frac_array(rows) -> np.ndarray:
    out = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            out[i, j] = Fraction(x)
    return out


class CoordinateSolver:
    """Exact coordinates of vectors in the span of linearly independent rows.

    Picks pivot entries once, so each solve is an integer matrix product.
    """

    def __init__(self, basis_rows):
        B = np.asarray(basis_rows)
        self.basis = B
        self.dim = B.shape[0]
        _, pivots = rref(B)
        if len(pivots) != self.dim:
            raise ValueError("basis rows are linearly dependent")
        self.pivots = pivots
        inv = inverse(B[:, pivots])
        self.inv = inv
        self.den = lcm(*(x.denominator for row in inv for x in row)) if self.dim else 1
        inv_num = [[int(x * self.den) for x in row] for row in inv]
        self.inv_num = np.array(inv_num, dtype=np.int64).reshape(self.dim, self.dim)

    def solve_int(self, vectors: np.ndarray) -> tuple[np.ndarray, int]:
        """Rows of ``vectors`` -> (integer numerators, common denominator).

        Raises ValueError if some row is not in the span.
        """
        V = np.asarray(vectors, dtype=np.int64)
        if V.size and np.abs(V).max() * max(1, np.abs(self.inv_num).max()) * self.dim > 2**40:
            raise OverflowError("entries too large for the int64 coordinate solver")
        num = V[:, self.pivots] @ self.inv_num
        recon = num @ self.basis.astype(np.int64)
        if not np.array_equal(recon, V * self.den):
            raise ValueError("vector not in the span of the basis")
        return num, self.den

    def solve(self, vector) -> list[Fraction]:
        """Exact rational coordinates of one (possibly rational) vector."""
        v = [Fraction(x) for x in vector]
        coords = [
            sum((v[p] * self.inv[i][j] for i, p in enumerate(self.pivots)), Fraction(0))
            for j in range(self.dim)
        ]
        for e in range(len(v)):
            acc = sum((coords[j] * int(self.basis[j, e]) for j in range(self.dim) if self.basis[j, e]),
                      Fraction(0))
            if acc != v[e]:
                raise ValueError("vector not in the span of the basis")
        return coords

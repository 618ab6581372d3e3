"""Exact integer linear algebra: rank, determinant, unitriangular inverse.

Rank and determinant use fraction-free (Bareiss) elimination with Python
integers, so no overflow and no rounding.  The unitriangular inverse works
on int64 numpy arrays; entries of the inverse of a 0/1 incidence matrix
stay far below the int64 range for any size handled here.
"""

from __future__ import annotations

import numpy as np


def fraction_free_rank(rows) -> int:
    """Rank over the rationals of an integer matrix given as row lists."""
    a = [[int(x) for x in row] for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(rank, nrows) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pivot = a[rank][col]
        for i in range(rank + 1, nrows):
            factor = a[i][col]
            for j in range(col, ncols):
                # Bareiss step: the division by the previous pivot is exact
                a[i][j] = (a[i][j] * pivot - factor * a[rank][j]) // prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def bareiss_determinant(mat) -> int:
    """Exact determinant of a square integer matrix."""
    a = [[int(x) for x in row] for row in mat]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def unitriangular_inverse(z: np.ndarray) -> np.ndarray:
    """Inverse of an upper unitriangular integer matrix, by back substitution."""
    z = np.asarray(z, dtype=np.int64)
    m = z.shape[0]
    if z.shape != (m, m):
        raise ValueError("matrix must be square")
    if not np.array_equal(np.diag(z), np.ones(m, dtype=np.int64)):
        raise ValueError("matrix must have unit diagonal")
    if np.any(np.tril(z, -1)):
        raise ValueError("matrix must be upper triangular")
    inv = np.zeros_like(z)
    for i in range(m - 1, -1, -1):
        inv[i, i] = 1
        if i + 1 < m:
            inv[i] -= z[i, i + 1 :] @ inv[i + 1 :]
    return inv

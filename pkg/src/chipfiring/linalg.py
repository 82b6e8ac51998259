"""Exact integer and rational matrix algebra.

Matrices are plain lists of rows; integer matrices hold Python ints
(arbitrary precision), rational ones hold ``fractions.Fraction`` (always
canonical: lowest terms, positive denominator). Everything here is exact
except ``smallest_reduced_eigenvalue``, which is the package's single
approximate routine and feeds only diagnostics and bound checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import BadVertexId, DimensionMismatch, NotSquare, NotSymmetric, Singular

IntMatrix = list[list[int]]
FracMatrix = list[list[Fraction]]


def _dims(matrix: Sequence[Sequence]) -> tuple[int, int]:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    for row in matrix:
        if len(row) != cols:
            raise DimensionMismatch("ragged matrix")
    return rows, cols


def _require_square(matrix: Sequence[Sequence]) -> int:
    rows, cols = _dims(matrix)
    if rows != cols:
        raise NotSquare(f"matrix is {rows}x{cols}")
    return rows


def _identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_vec(matrix: Sequence[Sequence], vector: Sequence) -> list:
    rows, cols = _dims(matrix)
    if len(vector) != cols:
        raise DimensionMismatch(f"vector length {len(vector)} != {cols} columns")
    return [sum(row[j] * vector[j] for j in range(cols)) for row in matrix]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    ra, ca = _dims(a)
    rb, cb = _dims(b)
    if ca != rb:
        raise DimensionMismatch(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    return [
        [sum(a[i][k] * b[k][j] for k in range(ca)) for j in range(cb)]
        for i in range(ra)
    ]


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    The 0x0 matrix has determinant 1 (empty product), which makes the
    spanning-tree count of the one-vertex graph come out right.
    """
    n = _require_square(matrix)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in matrix]
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
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfDecomposition:
    """U * M * V = S with U, V unimodular and S in Smith normal form."""

    u: IntMatrix
    s: IntMatrix
    v: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        rows, cols = _dims(self.s)
        return [self.s[i][i] for i in range(min(rows, cols))]

    @property
    def invariant_factors(self) -> list[int]:
        """Diagonal entries > 1 (unit and zero factors dropped)."""
        return [d for d in self.diagonal if d > 1]


def _nearest_quotient(a: int, b: int) -> int:
    """Integer q minimizing |a - q*b|, for b > 0. Keeps entries moderate."""
    q, r = divmod(a, b)
    if 2 * r > b:
        q += 1
    return q


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> SnfDecomposition:
    """Diagonalize over the integers by elementary row/column operations.

    Always reduces against a smallest-magnitude nonzero pivot, which keeps
    intermediate entries small in practice. Diagonal entries come out
    nonnegative with each dividing the next.
    """
    rows, cols = _dims(matrix)
    s = [[int(x) for x in row] for row in matrix]
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        srow, drow = s[src], s[dst]
        for k in range(cols):
            drow[k] += c * srow[k]
        srow, drow = u[src], u[dst]
        for k in range(rows):
            drow[k] += c * srow[k]

    def add_col(src, dst, c):
        for row in s:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def negate_row(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    entry = abs(s[i][j])
                    if entry and (best is None or entry < best):
                        best = entry
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            if s[t][t] < 0:
                negate_row(t)
            p = s[t][t]
            for i in range(t + 1, rows):
                if s[i][t]:
                    add_row(t, i, -_nearest_quotient(s[i][t], p))
            if any(s[i][t] for i in range(t + 1, rows)):
                continue  # a remainder became the new smallest pivot
            for j in range(t + 1, cols):
                if s[t][j]:
                    add_col(t, j, -_nearest_quotient(s[t][j], p))
            if any(s[t][j] for j in range(t + 1, cols)):
                continue
            stray = next(
                (
                    (i, j)
                    for i in range(t + 1, rows)
                    for j in range(t + 1, cols)
                    if s[i][j] % p
                ),
                None,
            )
            if stray is None:
                break
            add_row(stray[0], t, 1)  # pull the non-multiple into row t
        if t < min(rows, cols) and s[t][t] == 0:
            break
    return SnfDecomposition(u=u, s=s, v=v)


def exact_inverse(matrix: Sequence[Sequence]) -> FracMatrix:
    """Inverse over the rationals via Gauss-Jordan; raises Singular if det=0."""
    n = _require_square(matrix)
    aug = [
        [Fraction(matrix[i][j]) for j in range(n)]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise Singular("matrix has no inverse")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [x / pivot for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def generalized_inverse_lq(laplacian_matrix: Sequence[Sequence[int]], q: int) -> FracMatrix:
    """Inverse of the reduced Laplacian, padded with a zero row/column at q.

    The result L satisfies Q*L = I + R where R is -1 along row q and zero
    elsewhere, hence Q*L*Q = Q. Singular input means the underlying graph
    was not connected.
    """
    n = _require_square(laplacian_matrix)
    if not (0 <= q < n):
        raise BadVertexId(f"index {q} outside range [0, {n})")
    keep = [i for i in range(n) if i != q]
    reduced = [[laplacian_matrix[i][j] for j in keep] for i in keep]
    inv = exact_inverse(reduced)
    padded = [[Fraction(0)] * n for _ in range(n)]
    for a, i in enumerate(keep):
        for b, j in enumerate(keep):
            padded[i][j] = inv[a][b]
    return padded


def solve_integer(
    matrix: Sequence[Sequence[int]],
    rhs: Sequence[int],
    decomposition: SnfDecomposition | None = None,
) -> list[int] | None:
    """Find integer x with M*x = rhs, or None when no integer solution exists.

    Works through the Smith form: with U*M*V = S, solve S*y = U*rhs and
    map back via x = V*y. Singular and rectangular matrices are fine.
    A precomputed decomposition of M can be passed to amortize repeat solves.
    """
    rows, cols = _dims(matrix)
    if len(rhs) != rows:
        raise DimensionMismatch(f"rhs length {len(rhs)} != {rows} rows")
    snf = decomposition if decomposition is not None else smith_normal_form(matrix)
    c = mat_vec(snf.u, rhs)
    y = [0] * cols
    for i in range(min(rows, cols)):
        d = snf.s[i][i]
        if d:
            if c[i] % d:
                return None
            y[i] = c[i] // d
        elif c[i]:
            return None
    for i in range(min(rows, cols), rows):
        if c[i]:
            return None
    return mat_vec(snf.v, y)


def floor_rational_vector(vector: Sequence) -> list[int]:
    """Entrywise floor toward minus infinity (so -1/3 -> -1)."""
    return [math.floor(x) for x in vector]


def smallest_reduced_eigenvalue(matrix: Sequence[Sequence[int]]) -> float:
    """Smallest eigenvalue of a symmetric integer matrix, via LAPACK.

    Returns +inf for the empty matrix (reduced Laplacian of a one-vertex
    graph), which degrades the move bounds to zero gracefully.
    """
    rows, cols = _dims(matrix)
    if rows != cols:
        raise NotSymmetric(f"matrix is {rows}x{cols}")
    for i in range(rows):
        for j in range(i + 1, cols):
            if matrix[i][j] != matrix[j][i]:
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
    if rows == 0:
        return math.inf
    eigenvalues = np.linalg.eigvalsh(np.array(matrix, dtype=np.float64))
    return float(eigenvalues[0])

"""Small exact linear-algebra helpers over the rationals (Fraction based)."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[Fraction]]


def _to_fractions(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot column indices)."""
    mat = _to_fractions(rows)
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                factor = mat[i][c]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def kernel_primitive(rows) -> tuple[int, ...]:
    """Primitive integer generator of a one-dimensional kernel.

    Raises ValueError when the kernel is not one-dimensional.  The sign is
    normalized so all entries are positive (raises if mixed signs).
    """
    mat, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    if len(free) != 1:
        raise ValueError(f"kernel dimension is {len(free)}, expected 1")
    f = free[0]
    vec = [Fraction(0)] * ncols
    vec[f] = Fraction(1)
    for row, p in zip(mat, pivots):
        vec[p] = -row[f]
    denom = 1
    for x in vec:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    if all(x < 0 for x in ints):
        ints = [-x for x in ints]
    if any(x <= 0 for x in ints):
        raise ValueError(f"kernel generator is not positive: {ints}")
    return tuple(ints)


def solve_exact(rows, rhs) -> tuple[Fraction, ...]:
    """Solve a square nonsingular system exactly."""
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    mat, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(mat[i][n] for i in range(n))


def leading_minors_positive(rows) -> bool:
    """Sylvester criterion for positive definiteness, exact arithmetic."""
    n = len(rows)
    for k in range(1, n + 1):
        sub = [[Fraction(rows[i][j]) for j in range(k)] for i in range(k)]
        if _det(sub) <= 0:
            return False
    return True


def _det(mat: Matrix) -> Fraction:
    n = len(mat)
    mat = [row[:] for row in mat]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        for i in range(c + 1, n):
            factor = mat[i][c] / mat[c][c]
            mat[i] = [a - factor * b for a, b in zip(mat[i], mat[c])]
    return det

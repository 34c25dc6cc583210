"""Small exact linear algebra over GaussRat (dense, list-of-rows).

The matrices in play are tiny (Lie algebra dimension, or (m+1)-dimensional
operator blocks), so plain Gaussian elimination over the exact field is both
adequate and simplest.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar import GaussRat, ONE, ZERO, _coerce_gauss

Matrix = list  # list[list[GaussRat]]


class SingularMatrixError(ArithmeticError):
    """Inversion or basis change with a singular matrix."""


def as_matrix(rows) -> Matrix:
    return [[_coerce_gauss(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return [[ZERO] * m for _ in range(n)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]

def mat_scale(a: Matrix, c) -> Matrix:
    c = _coerce_gauss(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = zeros(n, m)
    for i in range(n):
        for t in range(k):
            c = a[i][t]
            if c.is_zero:
                continue
            row_b = b[t]
            row_o = out[i]
            for j in range(m):
                row_o[j] = row_o[j] + c * row_b[j]
    return out


def mat_vec(a: Matrix, v) -> list:
    return [sum((c * x for c, x in zip(row, v)), ZERO) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero for row in a for x in row)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def _eliminate(a: Matrix):
    """Row-reduce a copy; returns (echelon rows, pivot columns, det_factor)."""
    rows = [list(r) for r in a]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    det = ONE
    pivots = []
    r = 0
    for c in range(m):
        pivot = next((i for i in range(r, n) if not rows[i][c].is_zero), None)
        if pivot is None:
            continue
        if pivot != r:
            rows[r], rows[pivot] = rows[pivot], rows[r]
            det = -det
        det = det * rows[r][c]
        inv = ONE / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and not rows[i][c].is_zero:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows, pivots, det


def rank(a: Matrix) -> int:
    if not a:
        return 0
    _, pivots, _ = _eliminate(a)
    return len(pivots)


def det(a: Matrix) -> GaussRat:
    n = len(a)
    _, pivots, d = _eliminate(a)
    return d if len(pivots) == n else ZERO


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + identity(n)[i] for i, row in enumerate(a)]
    rows, pivots, _ = _eliminate(aug)
    if len(pivots) < n or pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in rows]


def solve(a: Matrix, rhs: list):
    """Solve a x = rhs exactly; returns None when inconsistent or underdetermined."""
    m = len(a[0]) if a else 0
    aug = [list(row) + [rhs[i]] for i, row in enumerate(a)]
    rows, pivots, _ = _eliminate(aug)
    if any(p == m for p in pivots):
        return None  # pivot in the rhs column: inconsistent
    if len(pivots) < m:
        return None
    sol = [ZERO] * m
    for r, p in enumerate(pivots):
        sol[p] = rows[r][m]
    return sol


def char_poly(a: Matrix) -> list:
    """Coefficients c_0..c_n of det(T*1 - a), lowest degree first (Faddeev-LeVerrier)."""
    n = len(a)
    coeffs = [ZERO] * n + [ONE]
    m_k = identity(n)
    for k in range(1, n + 1):
        m_k = mat_mul(a, m_k)
        tr = sum((m_k[i][i] for i in range(n)), ZERO)
        c = -tr / GaussRat(Fraction(k))
        coeffs[n - k] = c
        for i in range(n):
            m_k[i][i] = m_k[i][i] + c
    return coeffs

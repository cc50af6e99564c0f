"""Small exact linear algebra over ``fractions.Fraction``, plus exact square roots."""
from __future__ import annotations

import math
from fractions import Fraction


class InconsistentSystem(ValueError):
    """The linear system has no exact solution."""


def exact_sqrt(x) -> Fraction:
    """Square root of a non-negative rational that is a perfect square of a rational."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative argument")
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        raise ValueError(f"{x} is not the square of a rational")
    return Fraction(rn, rd)


def is_rational_square(x) -> bool:
    try:
        exact_sqrt(x)
        return True
    except (ValueError, TypeError):
        return False


def solve(A, b):
    """Solve the (possibly overdetermined) consistent system A x = b exactly.

    Parameters
    ----------
    A : list of list
        Rows of rational coefficients.
    b : list
        Right-hand side.

    Returns
    -------
    list of Fraction
        The unique solution.

    Raises
    ------
    InconsistentSystem
        If the system has no solution or the solution is not unique.
    """
    rows = [[Fraction(v) for v in r] + [Fraction(bi)] for r, bi in zip(A, b)]
    m = len(rows)
    n = len(rows[0]) - 1 if rows else 0
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
        if r == m:
            break
    if any(rows[i][n] != 0 for i in range(r, m)):
        raise InconsistentSystem("no exact solution")
    if len(piv_cols) < n:
        raise InconsistentSystem("solution is not unique")
    x = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = rows[i][n]
    return x


def inverse(A):
    """Exact inverse of a square rational matrix."""
    n = len(A)
    cols = []
    for k in range(n):
        e = [Fraction(int(i == k)) for i in range(n)]
        cols.append(solve(A, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]

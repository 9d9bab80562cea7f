"""Exact rational simplex and integer positive-definiteness certification.

Small, dense, and entirely in Fraction / bigint arithmetic.  These back the
certified bounds in the spectrum module; nothing here is a general-purpose
optimization surface.
"""

from __future__ import annotations

import math
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class UnboundedError(Exception):
    """The LP has unbounded objective (a bug in the caller's model)."""


def simplex_max(
    c: list[Fraction],
    rows: list[list[Fraction]],
    rhs: list[Fraction],
) -> tuple[Fraction, list[Fraction]]:
    """Maximize c.y subject to rows.y <= rhs, y >= 0, with rhs >= 0.

    Dense tableau simplex with Bland's rule (finite by anti-cycling).
    Returns (optimum, argument).  The slack basis is feasible because
    rhs is nonnegative, so no phase-1 is needed.
    """
    m = len(rows)
    n = len(c)
    for b in rhs:
        if b < 0:
            raise ValueError("rhs must be nonnegative for the slack start")
    # tableau columns: n structurals, m slacks, then the rhs
    tab = [list(map(Fraction, rows[i])) + [ONE if j == i else ZERO for j in range(m)] + [Fraction(rhs[i])] for i in range(m)]
    cost = list(map(Fraction, c)) + [ZERO] * (m + 1)  # reduced costs; last is -objective
    basis = [n + i for i in range(m)]

    while True:
        enter = -1
        for j in range(n + m):  # Bland: smallest index with positive reduced cost
            if cost[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave < 0:
            raise UnboundedError("objective unbounded above")
        piv = tab[leave][enter]
        prow = tab[leave]
        inv = ONE / piv
        for j in range(n + m + 1):
            prow[j] *= inv
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                row = tab[i]
                for j in range(n + m + 1):
                    row[j] -= f * prow[j]
        f = cost[enter]
        for j in range(n + m + 1):
            cost[j] -= f * prow[j]
        basis[leave] = enter

    y = [ZERO] * n
    for i, b in enumerate(basis):
        if b < n:
            y[b] = tab[i][-1]
    return -cost[-1], y


def is_positive_definite(matrix: list[list[Fraction]]) -> bool:
    """Sylvester test with fraction-free (Bareiss) elimination, exact.

    Expects a symmetric rational matrix.  Returns True iff it is strictly
    positive definite; a zero pivot (merely semidefinite) returns False,
    callers add a margin when they need to certify a PSD fact.
    """
    n = len(matrix)
    if n == 0:
        return True
    denom_lcm = 1
    for row in matrix:
        for x in row:
            denom_lcm = math.lcm(denom_lcm, Fraction(x).denominator)
    a = [[int(Fraction(x) * denom_lcm) for x in row] for row in matrix]
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        if pivot <= 0:
            return False
        for i in range(k + 1, n):
            aik = a[i][k]
            rowi = a[i]
            rowk = a[k]
            for j in range(k + 1, n):
                rowi[j] = (pivot * rowi[j] - aik * rowk[j]) // prev
        prev = pivot
    return True

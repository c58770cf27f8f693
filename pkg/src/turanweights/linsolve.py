"""Exact rational linear solving via fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def solve_linear_system(rows: Sequence[Sequence[Fraction]],
                        rhs: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve a square rational system exactly; None when no unique solution exists.

    Each row is scaled to integers, then eliminated fraction-free: with the
    Bareiss update every intermediate entry stays an exact integer and the
    division by the previous pivot is exact, which keeps growth polynomial.
    Back substitution is done in rationals.
    """
    k = len(rows)
    if any(len(row) != k for row in rows) or len(rhs) != k:
        raise ValueError("system must be square with a matching right-hand side")
    if k == 0:
        return []

    m: list[list[int]] = []
    for row, b in zip(rows, rhs):
        den = lcm(*[Fraction(x).denominator for x in row], Fraction(b).denominator)
        m.append([int(x * den) for x in row] + [int(b * den)])

    prev = 1
    for col in range(k):
        piv = next((r for r in range(col, k) if m[r][col]), None)
        if piv is None:
            return None
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        pivot = m[col][col]
        for r in range(col + 1, k):
            factor = m[r][col]
            row_r = m[r]
            row_c = m[col]
            for c in range(col + 1, k + 1):
                row_r[c] = (pivot * row_r[c] - factor * row_c[c]) // prev
            row_r[col] = 0
        prev = pivot

    out = [Fraction(0)] * k
    for i in range(k - 1, -1, -1):
        acc = Fraction(m[i][k])
        for j in range(i + 1, k):
            acc -= m[i][j] * out[j]
        out[i] = acc / m[i][i]
    return out

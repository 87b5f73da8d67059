"""Fraction-free (Bareiss) elimination over the integers.

Rational input is handled by scaling each row by the positive lcm of its
denominators, which changes determinants by a positive factor only, so
signs and vanishing are preserved.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

__all__ = ["to_fraction", "integer_rows", "bareiss_det", "bareiss_rank", "RationalMatrix"]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use 'p/q' strings")
    return Fraction(x)


def integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [to_fraction(x) for x in row]
        m = lcm(*(f.denominator for f in fr)) if fr else 1
        out.append([int(f * m) for f in fr])
    return out


def bareiss_det(mat: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix."""
    a = [list(row) for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        p = a[c][c]
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                a[r][j] = (a[r][j] * p - a[r][c] * a[c][j]) // prev
            a[r][c] = 0
        prev = p
    return sign * a[n - 1][n - 1]


def bareiss_rank(mat: Sequence[Sequence[int]]) -> int:
    """Rank of a rectangular integer matrix."""
    a = [list(row) for row in mat]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        if rank == rows:
            break
        pivot = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            for j in range(c + 1, cols):
                a[r][j] = (a[r][j] * p - a[r][c] * a[rank][j]) // prev
            a[r][c] = 0
        prev = p
        rank += 1
    return rank


class RationalMatrix:
    """An exact k x n matrix of Fractions."""

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = [[to_fraction(x) for x in row] for row in rows]
        widths = {len(row) for row in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.k = len(self.rows)
        self.n = widths.pop() if widths else 0
        self._int = integer_rows(self.rows)

    def minor(self, cols: Sequence[int]) -> int:
        """Positively rescaled minor on 1-based columns ``cols``; sign and zeros are exact."""
        return bareiss_det([[row[c - 1] for c in cols] for row in self._int])

    def exact_minor(self, cols: Sequence[int]) -> Fraction:
        scale = 1
        for row in self.rows:
            scale *= lcm(*(f.denominator for f in row)) if row else 1
        return Fraction(self.minor(cols), scale)

    def rank(self) -> int:
        return bareiss_rank(self._int)

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(x) for x in row] for row in self.rows]})"

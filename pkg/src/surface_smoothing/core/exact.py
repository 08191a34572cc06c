"""Exact integer/rational linear algebra.

Everything here works on plain Python ints and :class:`fractions.Fraction`, so
results never overflow and never round.  Elimination is fraction-free
(Bareiss): every intermediate entry is an integer minor of the input.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from surface_smoothing.core.errors import IdentityFailure

Number = int | Fraction


def _copy(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    matrix = [list(map(int, row)) for row in rows]
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    return matrix


def leading_minors(rows: Sequence[Sequence[int]]) -> list[int]:
    """Return the leading principal minors D_1, ..., D_n of an integer matrix.

    Bareiss elimination without pivoting keeps the k-th pivot equal to D_k.
    If a pivot vanishes the elimination cannot continue without row swaps,
    so the list stops at that zero minor.
    """
    a = _copy(rows)
    n = len(a)
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    a = _copy(rows)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve(rows: Sequence[Sequence[int]], rhs: Sequence[Number]) -> list[Fraction]:
    """Solve ``A x = rhs`` exactly for a nonsingular integer matrix ``A``.

    The right-hand side may hold Fractions; it is scaled to a common
    denominator so that the forward pass stays fraction-free.
    """
    a = _copy(rows)
    n = len(a)
    if len(rhs) != n:
        raise ValueError(f"right-hand side has {len(rhs)} entries, expected {n}")
    values = [Fraction(v) for v in rhs]
    scale = math.lcm(*(v.denominator for v in values)) if values else 1
    for i in range(n):
        a[i].append(int(values[i] * scale))

    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                raise ZeroDivisionError("singular matrix")
            a[k], a[swap] = a[swap], a[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n]) - sum((a[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        x[i] = acc / a[i][i]
    return [v / scale for v in x]


def ceil_fraction(value: Number) -> int:
    return math.ceil(Fraction(value))


def render_rational(value: Number) -> str:
    """Canonical ``p/q`` rendering in lowest terms; integers render as ``p``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_integer(value: Number, what: str) -> int:
    """Return ``value`` as an int, raising if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise IdentityFailure(f"{what} should be an integer, got {render_rational(value)}")
    return value.numerator

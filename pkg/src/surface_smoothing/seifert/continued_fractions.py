from __future__ import annotations

import math
from typing import Sequence

from surface_smoothing.core.errors import InputError


def validate_arm(n: int, q: int) -> None:
    if n < 2:
        raise InputError(f"arm n/q = {n}/{q}: n must be >= 2")
    if not 0 < q < n:
        raise InputError(f"arm n/q = {n}/{q}: need 0 < q < n")
    if math.gcd(n, q) != 1:
        raise InputError(f"arm n/q = {n}/{q}: n and q must be coprime")


def hj_expand(n: int, q: int) -> list[int]:
    """Hirzebruch-Jung expansion n/q = b_1 - 1/(b_2 - 1/(...)), every b_j >= 2."""
    validate_arm(n, q)
    bs: list[int] = []
    while q:
        b = -(-n // q)
        bs.append(b)
        n, q = q, b * q - n
    return bs


def hj_value(bs: Sequence[int]) -> tuple[int, int]:
    """Inverse of :func:`hj_expand`."""
    if not bs:
        raise InputError("continued fraction must be nonempty")
    if any(b < 2 for b in bs):
        raise InputError(f"continued fraction entries must be >= 2, got {list(bs)}")
    n, q = bs[-1], 1
    for b in reversed(bs[:-1]):
        n, q = b * n - q, n
    return n, q

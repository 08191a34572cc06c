"""Brute-force reference computations.

These search small integer boxes with numpy instead of running the monotone
algorithms, and are used by the test-suite and ``selftest`` to cross-check
the fundamental cycle, the Giraud round-up and negative definiteness.  Box
entries are small, so int64 arithmetic is exact here.
"""
from __future__ import annotations

import itertools
import logging
import math
import random
from typing import Optional, Sequence

import numpy as np

from surface_smoothing.core import exact
from surface_smoothing.core.errors import InputError
from surface_smoothing.graph import lattice
from surface_smoothing.graph.model import Cycle, ResolutionGraph
from surface_smoothing.seifert.star import SeifertData

logger = logging.getLogger(__name__)

FUNDAMENTAL_CYCLE_BOUND = 8
ROUNDING_WIDTH = 6


def _box(lows: Sequence[int], highs: Sequence[int]) -> np.ndarray:
    """All integer vectors v with lows <= v <= highs, one per row."""
    axes = [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in zip(lows, highs)]
    grid = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def _least_element(candidates: np.ndarray) -> Optional[np.ndarray]:
    """Componentwise minimum of the rows, if it is itself one of the rows."""
    if candidates.shape[0] == 0:
        return None
    low = candidates.min(axis=0)
    if not (candidates == low).all(axis=1).any():
        return None
    return low


def brute_force_fundamental_cycle(
    graph: ResolutionGraph, bound: int = FUNDAMENTAL_CYCLE_BOUND
) -> Optional[Cycle]:
    """Least nonzero cycle with C . E_i <= 0 and multiplicities in [0, bound]."""
    matrix = np.array(lattice.intersection_form(graph).rows, dtype=np.int64)
    n = len(graph)
    box = _box([0] * n, [bound] * n)
    box = box[box.any(axis=1)]
    valid = box[(box @ matrix <= 0).all(axis=1)]
    low = _least_element(valid)
    if low is None:
        return None
    return Cycle(graph.ids, tuple(int(m) for m in low))


def brute_force_round(
    graph: ResolutionGraph, degrees: Sequence[int], width: int = ROUNDING_WIDTH
) -> Optional[Cycle]:
    """Least integral D with D . E_i <= degrees[i], searched in [ceil(a), ceil(a) + width].

    Returns None when no admissible cycle lies in the box.
    """
    rows = lattice.intersection_form(graph).rows
    start = [exact.ceil_fraction(a) for a in exact.solve(rows, degrees)]
    box = _box(start, [s + width for s in start])
    matrix = np.array(rows, dtype=np.int64)
    valid = box[(box @ matrix <= np.array(degrees, dtype=np.int64)).all(axis=1)]
    low = _least_element(valid)
    if low is None:
        return None
    return Cycle(graph.ids, tuple(int(m) for m in low))


def random_seifert_data(rng: random.Random, max_n: int = 7, max_arms: int = 4) -> SeifertData:
    """A uniformly drawn valid SeifertData with genus 0, n_i <= max_n and at most max_arms arms."""
    while True:
        arms = []
        for _ in range(rng.randint(0, max_arms)):
            n = rng.randint(2, max_n)
            q = rng.choice([q for q in range(1, n) if math.gcd(n, q) == 1])
            arms.append((n, q))
        b = rng.randint(1, max_arms + 1)
        try:
            return SeifertData(0, b, tuple(arms))
        except InputError:
            continue


def brute_force_negative_definite(rows: Sequence[Sequence[int]]) -> bool:
    """Every principal minor of -M is positive."""
    n = len(rows)
    negated = [[-x for x in row] for row in rows]
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            minor = exact.determinant([[negated[i][j] for j in subset] for i in subset])
            if minor <= 0:
                return False
    return True

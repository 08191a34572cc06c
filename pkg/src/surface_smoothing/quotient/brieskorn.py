"""Brieskorn hypersurfaces f = sum z_i^{a_i} with a diagonal cyclic group action.

The generator acts by z_i -> zeta^{w_i} z_i, zeta a primitive r-th root of
unity.  Characters of the cyclic group are residues mod r.
"""
from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from surface_smoothing.core.errors import InputError

logger = logging.getLogger(__name__)

COVARIANT = "covariant"
DUAL = "dual"
CONVENTIONS = (COVARIANT, DUAL)

# The convention under which the Euler relation and both character checks hold.
ACTION_CONVENTION = COVARIANT


@dataclass(frozen=True)
class BrieskornQuotient:
    exponents: tuple[int, ...]
    order: int = 1
    weights: Optional[tuple[int, ...]] = None
    explicit_basis: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))
        if self.order < 1:
            raise InputError(f"group order must be >= 1, got {self.order}")
        weights = self.weights if self.weights is not None else (1,) * len(self.exponents)
        object.__setattr__(self, "weights", tuple(int(w) % self.order for w in weights))

        if len(self.exponents) < 2:
            raise InputError("need at least two variables (dimension n >= 1)")
        if len(self.weights) != len(self.exponents):
            raise InputError(f"{len(self.exponents)} exponents but {len(self.weights)} weights")
        for i, a in enumerate(self.exponents, start=1):
            if a < 2:
                raise InputError(f"exponent a_{i} = {a} must be >= 2")

        if self.explicit_basis is not None:
            basis = tuple(tuple(int(m) for m in vector) for vector in self.explicit_basis)
            for vector in basis:
                if len(vector) != len(self.exponents):
                    raise InputError(f"basis monomial {list(vector)} has the wrong number of entries")
                if any(m < 0 for m in vector):
                    raise InputError(f"basis monomial {list(vector)} has a negative exponent")
            if len(set(basis)) != len(basis):
                raise InputError("basis monomials must be distinct")
            if not basis:
                raise InputError("explicit basis is empty")
            object.__setattr__(self, "explicit_basis", basis)

    @property
    def dimension(self) -> int:
        """n, the dimension of the hypersurface singularity."""
        return len(self.exponents) - 1

    @property
    def det_weight(self) -> int:
        return sum(self.weights) % self.order

    @property
    def in_SL(self) -> bool:
        return self.det_weight == 0


@dataclass(frozen=True)
class CharacterCounts:
    """counts[c] is the multiplicity of the character with residue c."""

    counts: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, residue: int) -> int:
        return self.counts[residue % self.order]

    def shifted(self, by: int) -> CharacterCounts:
        """Twist by the character ``by``: new[c] = old[c - by]."""
        return CharacterCounts(tuple(int(x) for x in np.roll(np.array(self.counts), by % self.order)))


def validate(q: BrieskornQuotient) -> list[str]:
    violations = []
    for i, (a, w) in enumerate(zip(q.exponents, q.weights), start=1):
        if (a * w) % q.order:
            violations.append(f"invariance fails at i={i}: a_i * w_i = {a * w} is not divisible by {q.order}")
    for i, w in enumerate(q.weights, start=1):
        if math.gcd(w, q.order) != 1:
            violations.append(f"freeness fails at i={i}: gcd(w_i, r) = gcd({w}, {q.order}) != 1")
    return violations


def require_valid(q: BrieskornQuotient) -> None:
    violations = validate(q)
    if violations:
        raise InputError("; ".join(violations))


def _sign(convention: str) -> int:
    if convention not in CONVENTIONS:
        raise InputError(f"unknown action convention {convention!r}; expected one of {CONVENTIONS}")
    return 1 if convention == COVARIANT else -1


def monomial_basis(q: BrieskornQuotient) -> np.ndarray:
    """Exponent vectors of the Jacobian algebra basis, one per row."""
    if q.explicit_basis is not None:
        return np.array(q.explicit_basis, dtype=np.int64)
    ranges = [np.arange(a - 1, dtype=np.int64) for a in q.exponents]
    grid = np.meshgrid(*ranges, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def milnor_number(q: BrieskornQuotient) -> int:
    require_valid(q)
    if q.explicit_basis is not None:
        return len(q.explicit_basis)
    return math.prod(a - 1 for a in q.exponents)


def det_residue(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> int:
    return (_sign(convention) * sum(q.weights)) % q.order


def nu_residue(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> int:
    """Residue of det^{-1}."""
    return (-det_residue(q, convention)) % q.order


def jacobian_counts(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> CharacterCounts:
    require_valid(q)
    basis = monomial_basis(q)
    characters = (_sign(convention) * (basis @ np.array(q.weights, dtype=np.int64))) % q.order
    counts = np.bincount(characters, minlength=q.order)
    return CharacterCounts(tuple(int(c) for c in counts))


def h_counts(q: BrieskornQuotient, convention: str = ACTION_CONVENTION) -> CharacterCounts:
    """H^n(M) as J (x) det."""
    return jacobian_counts(q, convention).shifted(det_residue(q, convention))


def sweep(max_order: int = 6, max_exponent: int = 8, max_variables: int = 4) -> Iterator[BrieskornQuotient]:
    """Every valid input up to permutation of the variables."""
    for order in range(1, max_order + 1):
        # invariance plus freeness force r | a_i
        exponents = [a for a in range(2, max_exponent + 1) if a % order == 0]
        weights = [w for w in range(order) if math.gcd(w, order) == 1]
        pairs = list(itertools.product(exponents, weights))
        for size in range(2, max_variables + 1):
            for combo in itertools.combinations_with_replacement(pairs, size):
                q = BrieskornQuotient(
                    exponents=tuple(a for a, _ in combo),
                    order=order,
                    weights=tuple(w for _, w in combo),
                )
                if not validate(q):
                    yield q


def parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


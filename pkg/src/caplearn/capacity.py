"""Capacities: monotone set functions on criteria subsets, with their
structural predicates (axioms, q-maxitivity, q-minitivity, conjugation).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .scale import Scale, iota
from .subsets import (
    cardinality,
    check_criteria_count,
    check_mask,
    complement,
    drop_one_bit,
    add_one_bit,
    full_mask,
    subset_label,
)


@dataclass(frozen=True)
class Capacity:
    """A set function on 2^C stored as a table indexed by subset mask.

    Construction validates the shape and scale membership of every entry;
    the capacity axioms (boundary values and monotonicity) are diagnosed
    separately by :func:`capacity_violations` so that suspect tables can be
    inspected rather than rejected outright.
    """

    n: int
    scale: Scale
    values: tuple[float, ...]

    def __post_init__(self) -> None:
        check_criteria_count(self.n)
        size = 1 << self.n
        if len(self.values) != size:
            raise DomainError(
                f"capacity on {self.n} criteria needs {size} values, got {len(self.values)}"
            )
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        for mask, v in enumerate(self.values):
            self.scale.require(v, f"value of {subset_label(mask)}")

    def __getitem__(self, mask: int) -> float:
        return self.values[check_mask(mask, self.n)]

    @property
    def full(self) -> int:
        return full_mask(self.n)


def conjugate(mu: Capacity) -> Capacity:
    """The conjugate capacity: negate the value of the complementary subset."""
    values = tuple(
        iota(mu.scale, mu.values[complement(mask, mu.n)]) for mask in range(1 << mu.n)
    )
    return Capacity(mu.n, mu.scale, values)


def capacity_violations(
    values: Sequence[float], n: int, scale: Scale | None = None
) -> list[str]:
    """All boundary and monotonicity violations of a candidate table.

    Monotonicity is checked on covering pairs (A, A + {i}) only, which is
    sufficient and keeps the scan at n * 2^(n-1) comparisons.  Every
    violation is reported, not just the first, so callers can show a full
    diagnostic.
    """
    check_criteria_count(n)
    size = 1 << n
    out: list[str] = []
    if len(values) != size:
        return [f"expected {size} values for n={n}, got {len(values)}"]
    if scale is not None:
        for mask, v in enumerate(values):
            if not scale.contains(v):
                out.append(f"value({subset_label(mask)}) = {v!r} is not on the scale")
    if values[0] != 0.0:
        out.append(f"value of the empty set must be 0, got {values[0]!r}")
    top = size - 1
    if values[top] != 1.0:
        out.append(f"value of the full set must be 1, got {values[top]!r}")
    for mask in range(size):
        for bigger in add_one_bit(mask, n):
            if values[mask] > values[bigger]:
                out.append(
                    f"monotonicity violated: value({subset_label(mask)}) = {values[mask]!r}"
                    f" > value({subset_label(bigger)}) = {values[bigger]!r}"
                )
    return out


def is_capacity(values: Sequence[float], n: int, scale: Scale | None = None) -> bool:
    return not capacity_violations(values, n, scale)


def _check_q(q: int, n: int) -> int:
    if not isinstance(q, int) or not 1 <= q <= n:
        raise DomainError(f"q must be an integer in 1..{n}, got {q!r}")
    return q


def max_over_small_subsets(values: Sequence[float], n: int, q: int) -> list[float]:
    """Table of max{values[Y] : Y subset of X, |Y| <= q}, for every X.

    Computed over the lattice in ascending cardinality; entries at
    cardinality <= q hold values[X] itself, and larger subsets take the max
    over their covered entries, which grounds out on the size-q layer.
    """
    out = [0.0] * (1 << n)
    for mask in range(1 << n):
        if cardinality(mask) <= q:
            out[mask] = values[mask]
        else:
            out[mask] = max(out[sub] for sub in drop_one_bit(mask))
    return out


def min_over_large_supersets(values: Sequence[float], n: int, q: int) -> list[float]:
    """Table of min{values[Y] : Y superset of X, |Y| >= n - q}, for every X."""
    out = [0.0] * (1 << n)
    low = n - q
    for mask in sorted(range(1 << n), key=cardinality, reverse=True):
        if cardinality(mask) >= low:
            out[mask] = values[mask]
        else:
            out[mask] = min(out[sup] for sup in add_one_bit(mask, n))
    return out


def is_q_maxitive(mu: Capacity, q: int) -> bool:
    """True iff values above cardinality q are the max of their small subsets.

    Every capacity is n-maxitive, so q = n always returns True.
    """
    _check_q(q, mu.n)
    table = max_over_small_subsets(mu.values, mu.n, q)
    return all(
        mu.values[mask] == table[mask]
        for mask in range(1 << mu.n)
        if cardinality(mask) > q
    )


def is_q_minitive(mu: Capacity, q: int) -> bool:
    """True iff values below cardinality n - q are the min of their large supersets.

    Dual of :func:`is_q_maxitive`: a capacity is q-minitive exactly when its
    conjugate is q-maxitive.
    """
    _check_q(q, mu.n)
    table = min_over_large_supersets(mu.values, mu.n, q)
    return all(
        mu.values[mask] == table[mask]
        for mask in range(1 << mu.n)
        if cardinality(mask) < mu.n - q
    )

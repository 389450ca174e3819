"""Shared generators and independent-oracle helpers for the test suite.

Everything random takes an explicit ``random.Random`` so failures replay.
The closed-form solvers here intentionally avoid the library's residuated
products: they recompute the extremal vectors from blocking index sets and
are used to cross-check the solver, not to reuse it.
"""

from __future__ import annotations

import random

from caplearn import (
    Capacity,
    RelationalSystem,
    Scale,
    SystemKind,
    TrainingSet,
    index_sets,
)
from caplearn.subsets import (
    cardinality,
    complement,
    drop_one_bit,
    full_mask,
    members,
)

CHAIN21 = Scale.uniform_chain(20)
FIVE_LEVELS = (0.0, 0.25, 0.5, 0.75, 1.0)

# Three-item, three-criteria dataset used across the suite; small enough to
# check every derived quantity by hand.
REFERENCE_PAIRS = (
    ((0.15, 0.2, 0.3), 0.2),
    ((0.5, 0.25, 0.3), 0.3),
    ((0.4, 0.7, 0.35), 0.4),
)

# Greatest and lowest capacities representing the reference data, indexed by
# subset mask (bit i-1 = criterion i).
MU_E_VALUES = (0.0, 0.3, 0.4, 1.0, 0.2, 1.0, 1.0, 1.0)
MU_F_VALUES = (0.0, 0.0, 0.0, 0.4, 0.0, 0.3, 0.2, 1.0)


def reference_training_set(scale: Scale = CHAIN21) -> TrainingSet:
    return TrainingSet.from_pairs(3, scale, REFERENCE_PAIRS)


def by_cardinality(labels):
    """The display order used for matrices: size first, then mask."""
    return sorted(labels, key=lambda mask: (cardinality(mask), mask))


def random_capacity(rng: random.Random, n: int, levels, scale: Scale | None = None) -> Capacity:
    """Monotone table built bottom-up: each value at least its covered ones."""
    size = 1 << n
    values = [0.0] * size
    for mask in range(1, size - 1):
        floor = max(values[sub] for sub in drop_one_bit(mask))
        values[mask] = rng.choice([v for v in levels if v >= floor])
    values[size - 1] = 1.0
    return Capacity(n, scale or Scale.unit_interval(), tuple(values))


def random_object(rng: random.Random, n: int, levels) -> tuple[float, ...]:
    return tuple(rng.choice(levels) for _ in range(n))


def random_system(
    rng: random.Random, kind: SystemKind, n_rows: int, n_cols: int, levels
) -> RelationalSystem:
    matrix = tuple(
        tuple(rng.choice(levels) for _ in range(n_cols)) for _ in range(n_rows)
    )
    rhs = tuple(rng.choice(levels) for _ in range(n_rows))
    return RelationalSystem(kind, matrix, rhs, tuple(range(n_cols)), Scale.unit_interval())


def random_training_set(rng: random.Random, n: int, size: int, levels) -> TrainingSet:
    scale = Scale.finite_chain(levels) if 0.0 in levels and 1.0 in levels else Scale.unit_interval()
    return TrainingSet.from_pairs(
        n,
        scale,
        [(random_object(rng, n, levels), rng.choice(levels)) for _ in range(size)],
    )


def representable_training_set(rng: random.Random, n: int, size: int, levels):
    """Data generated from a hidden capacity, plus that capacity."""
    from caplearn import sugeno_maxmin

    mu = random_capacity(rng, n, levels)
    pairs = []
    for _ in range(size):
        x = random_object(rng, n, levels)
        pairs.append((x, sugeno_maxmin(mu, x)))
    return TrainingSet.from_pairs(n, Scale.unit_interval(), pairs), mu


def closed_form_greatest(ts: TrainingSet) -> dict[int, float]:
    """Greatest solution per blocking sets: min target over items whose
    in-subset minimum overshoots, 1 when none does."""
    j_map, _ = index_sets(ts)
    return {
        mask: min((ts.items[k].alpha for k in ks), default=1.0)
        for mask, ks in j_map.items()
    }


def closed_form_lowest(ts: TrainingSet) -> dict[int, float]:
    _, k_map = index_sets(ts)
    return {
        mask: max((ts.items[k].alpha for k in ks), default=0.0)
        for mask, ks in k_map.items()
    }


def capacity_leq(a: Capacity, b: Capacity) -> bool:
    return all(x <= y for x, y in zip(a.values, b.values))


def brute_force_conjugate(mu: Capacity) -> tuple[float, ...]:
    """Direct complement-then-negate loop over all subsets."""
    from caplearn import iota

    n = mu.n
    return tuple(iota(mu.scale, mu.values[complement(mask, n)]) for mask in range(1 << n))


def exhaustive_capacity_check(values, n) -> bool:
    """Full O(4^n) pairwise monotonicity plus boundaries; n <= 4 only."""
    size = 1 << n
    if values[0] != 0.0 or values[size - 1] != 1.0:
        return False
    for a in range(size):
        for b in range(size):
            if a & b == a and values[a] > values[b]:
                return False
    return True


def brute_q_maxitive(mu: Capacity, q: int) -> bool:
    """Literal definition: max over all strictly contained small subsets."""
    for mask in range(1 << mu.n):
        if cardinality(mask) <= q:
            continue
        best = max(
            mu.values[sub]
            for sub in range(1 << mu.n)
            if sub != mask and sub & mask == sub and cardinality(sub) <= q
        )
        if mu.values[mask] != best:
            return False
    return True


def brute_q_minitive(mu: Capacity, q: int) -> bool:
    full = full_mask(mu.n)
    for mask in range(1 << mu.n):
        if cardinality(mask) >= mu.n - q:
            continue
        best = min(
            mu.values[sup]
            for sup in range(1 << mu.n)
            if sup != mask and sup & mask == mask and cardinality(sup) >= mu.n - q
        )
        if mu.values[mask] != best:
            return False
    return True


def brute_sugeno_maxmin(mu: Capacity, x) -> float:
    """Term-by-term evaluation without the shared min tables."""
    best = 0.0
    for mask in range(1, 1 << mu.n):
        inner = min(x[i - 1] for i in members(mask))
        best = max(best, min(inner, mu.values[mask]))
    return best



"""Evaluation scales: finite chains in [0, 1] and the unit interval itself.

A scale is the totally ordered value set shared by objects, targets and
capacities.  Both kinds come with the order-reversing negation ``iota``:
positional reversal on a finite chain, ``1 - v`` on the unit interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .errors import DomainError

DEFAULT_TOLERANCE = 1e-9


class ScaleKind(Enum):
    FINITE_CHAIN = "finite_chain"
    UNIT_INTERVAL = "unit_interval"


@dataclass(frozen=True)
class Scale:
    """An evaluation scale with a tolerance for comparing derived values.

    ``tol`` is only used when comparing quantities that left the lattice
    (Chebyshev distances and approximate solutions involve subtraction and
    halving).  Pure lattice operations on scale members are exact and never
    consult it.

    Finite chains keep their levels as given; membership tests use exact
    float equality, so data must be produced by the same parse/arithmetic
    as the levels themselves.  Values not on a declared chain are rejected,
    never rounded.
    """

    kind: ScaleKind
    levels: tuple[float, ...] | None = None
    tol: float = DEFAULT_TOLERANCE
    _level_index: dict[float, int] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self) -> None:
        if not isinstance(self.tol, (int, float)) or math.isnan(self.tol) or self.tol < 0:
            raise DomainError(f"tolerance must be a nonnegative real, got {self.tol!r}")
        if self.kind is ScaleKind.UNIT_INTERVAL:
            if self.levels is not None:
                raise DomainError("unit-interval scale does not take levels")
            return
        levels = self.levels
        if levels is None or len(levels) < 2:
            raise DomainError("finite chain needs at least the two levels 0 and 1")
        if any(not math.isfinite(v) for v in levels):
            raise DomainError("chain levels must be finite")
        if levels[0] != 0.0 or levels[-1] != 1.0:
            raise DomainError("chain levels must start at 0 and end at 1")
        if any(a >= b for a, b in zip(levels, levels[1:])):
            raise DomainError("chain levels must be strictly increasing")
        object.__setattr__(
            self, "_level_index", {v: i for i, v in enumerate(levels)}
        )

    @classmethod
    def unit_interval(cls, tol: float = DEFAULT_TOLERANCE) -> Scale:
        return cls(ScaleKind.UNIT_INTERVAL, None, tol)

    @classmethod
    def finite_chain(cls, levels: Iterable[float], tol: float = DEFAULT_TOLERANCE) -> Scale:
        return cls(ScaleKind.FINITE_CHAIN, tuple(float(v) for v in levels), tol)

    @classmethod
    def uniform_chain(cls, steps: int, tol: float = DEFAULT_TOLERANCE) -> Scale:
        """Chain 0, 1/steps, 2/steps, ..., 1 built by exact float division."""
        if steps < 1:
            raise DomainError("uniform chain needs at least one step")
        return cls.finite_chain((i / steps for i in range(steps + 1)), tol)

    def contains(self, value: float) -> bool:
        if self.kind is ScaleKind.UNIT_INTERVAL:
            return isinstance(value, (int, float)) and 0.0 <= value <= 1.0
        return value in self._level_index

    def require(self, value: float, what: str = "value") -> float:
        if not self.contains(value):
            raise DomainError(f"{what} {value!r} is not a member of {self.describe()}")
        return float(value)

    def describe(self) -> str:
        if self.kind is ScaleKind.UNIT_INTERVAL:
            return "the unit interval [0, 1]"
        return f"the {len(self.levels)}-level chain"

    def negate(self, value: float) -> float:
        """Order-reversing negation; involutive on finite chains by position."""
        return iota(self, value)

    def is_close(self, a: float, b: float) -> bool:
        """Tolerance comparison for derived (off-lattice) quantities."""
        return abs(a - b) <= self.tol


def iota(scale: Scale, value: float) -> float:
    """Reverse a value on its scale: level i of l maps to level l-i+1, or 1 - v.

    Raises DomainError when the value is not a scale member.
    """
    scale.require(value)
    if scale.kind is ScaleKind.UNIT_INTERVAL:
        return 1.0 - value
    idx = scale._level_index[value]
    return scale.levels[len(scale.levels) - 1 - idx]

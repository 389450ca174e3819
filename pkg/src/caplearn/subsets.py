"""Bitmask encoding of criteria subsets.

Criteria are numbered 1..n externally; internally criterion i occupies bit
i-1, so a subset is an unsigned mask below 2**n.  The canonical ordering
used for matrix columns and serialization is ascending mask value.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DomainError

# Matrix columns and capacity tables are O(2**n); anything beyond this is a
# construction error rather than a silent attempt.
MAX_CRITERIA = 24


def check_criteria_count(n: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"criteria count must be a positive integer, got {n!r}")
    if n > MAX_CRITERIA:
        raise DomainError(f"criteria count {n} exceeds the supported cap of {MAX_CRITERIA}")
    return n


def full_mask(n: int) -> int:
    return (1 << n) - 1


def check_mask(mask: int, n: int) -> int:
    if not isinstance(mask, int) or not 0 <= mask < (1 << n):
        raise DomainError(f"subset mask {mask!r} out of range for n={n}")
    return mask


def cardinality(mask: int) -> int:
    return mask.bit_count()


def complement(mask: int, n: int) -> int:
    return full_mask(n) ^ mask


def members(mask: int) -> tuple[int, ...]:
    """1-based criteria indices contained in the subset."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def mask_of(criteria: Iterable[int], n: int) -> int:
    mask = 0
    for i in criteria:
        if not 1 <= i <= n:
            raise DomainError(f"criterion {i} out of range 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def subset_label(mask: int) -> str:
    return "{" + ",".join(str(i) for i in members(mask)) + "}"


def iter_subsets(n: int) -> Iterator[int]:
    return iter(range(1 << n))


def iter_nonempty(n: int) -> Iterator[int]:
    return iter(range(1, 1 << n))


def iter_proper(n: int) -> Iterator[int]:
    return iter(range(full_mask(n)))


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and itself), ascending."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def drop_one_bit(mask: int) -> Iterator[int]:
    """Submasks obtained by removing exactly one member."""
    m = mask
    while m:
        low = m & -m
        yield mask ^ low
        m ^= low


def add_one_bit(mask: int, n: int) -> Iterator[int]:
    """Supersets obtained by adding exactly one missing member."""
    missing = complement(mask, n)
    while missing:
        low = missing & -missing
        yield mask | low
        missing ^= low

"""Integer partitions: the value type, enumeration and basic statistics."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

# Exhaustive enumeration is refused past this size; p(60) is ~1e6.
MAX_ENUMERATION_N = 60


class PartitionError(ValueError):
    """Raised for malformed partitions or out-of-range arguments."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Behaves like a plain tuple (hashable, ordered, indexable from 0) so
    partitions can be used directly as set members and dict keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool):
                raise PartitionError(f"part {p!r} is not an integer")
            if p <= 0:
                raise PartitionError(f"part {p} is not positive")
            if i and parts[i - 1] < p:
                raise PartitionError(
                    f"parts {parts} are not weakly decreasing at index {i}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part access; positions past the end read as 0."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


class QuotRem(NamedTuple):
    q: int
    rem: int


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(parts)


def format_partition(parts: Iterable[int]) -> str:
    """Canonical text form: ``"15,9,7,3,1"``; the empty partition is ``""``."""
    return ",".join(str(p) for p in parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise PartitionError(f"cannot parse partition {text!r}") from None
    return Partition(parts)


def _check_n(n: int) -> None:
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    if n > MAX_ENUMERATION_N:
        raise PartitionError(
            f"refusing to enumerate partitions of n={n}; "
            f"the limit is n={MAX_ENUMERATION_N}")


def _iter_partitions(n: int) -> Iterator[tuple[int, ...]]:
    # Zoghbi-Stojmenovic ZS1: successive partitions in descending
    # lexicographic order, amortised O(1) per step.
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m = 1  # number of parts
    h = 1  # index of the last part greater than 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            rval = x[h] - 1
            t = m - h + 1
            x[h] = rval
            while t >= rval:
                h += 1
                x[h] = rval
                t -= rval
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1:m + 1])


@lru_cache(maxsize=None)
def enumerate_all(n: int) -> tuple[Partition, ...]:
    """Every partition of ``n`` exactly once, in descending lexicographic order."""
    _check_n(n)
    return tuple(Partition._trusted(p) for p in _iter_partitions(n))


def multiplicity(lam: Sequence[int], k: int) -> int:
    if k < 1:
        raise PartitionError(f"k must be positive, got {k}")
    return sum(1 for p in lam if p == k)


def stat_K(lam: Sequence[int]) -> int:
    """Number of distinct part values."""
    return len(set(lam))


def stat_S(lam: Sequence[int]) -> int:
    """Number of maximal runs of consecutive integers among the parts.

    Counts the gaps ``lam[i] > lam[i+1] + 1`` between adjacent parts, plus
    one; no zero sentinel is appended after the last part.
    """
    if not lam:
        return 0
    return 1 + sum(1 for a, b in zip(lam, lam[1:]) if a > b + 1)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return Partition()
    out = []
    count = len(lam)
    for j in range(1, lam[0] + 1):
        while lam[count - 1] < j:
            count -= 1
        out.append(count)
    return Partition._trusted(out)


def quot_rem(part: int, r: int) -> QuotRem:
    if r < 1:
        raise PartitionError(f"modulus must be positive, got {r}")
    return QuotRem(*divmod(part, r))


def partition_count(n: int) -> int:
    """p(n) by the coin-change recurrence over part sizes 1..n."""
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]

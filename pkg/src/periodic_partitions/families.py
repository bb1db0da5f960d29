"""Membership predicates, generators and counting oracles for the partition
families: r-regular / r-class-regular, the residue-j families and their
alternating-exponent partners, the periodic-pattern families with their
three length variants, and the BCP/BRP pair.

All predicates are total: they accept any partition and the empty partition
belongs to every family.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Callable, Sequence

from periodic_partitions.core import (
    Partition,
    PartitionError,
    enumerate_all,
    multiplicity,
)


class Variant(enum.Enum):
    FREE = "free"  # length unconstrained
    FULL_PERIOD = "full"  # length a multiple of r
    ZERO_TAIL = "zerotail"  # length = 0 or s_{t-1} mod r

    @classmethod
    def parse(cls, text: str) -> "Variant":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise PartitionError(
                f"unknown variant {text!r}; expected free, full or zerotail"
            ) from None


@dataclass(frozen=True)
class PeriodPattern:
    """Modulus ``r`` with cut points ``0 < s_1 < ... < s_{t-1} < r``.

    The exponent blocks repeat with sizes ``s_1, s_2 - s_1, ..., r - s_{t-1}``.
    An empty ``s`` is the degenerate single-block pattern ``(r,)``; only the
    RP side accepts it.
    """

    r: int
    s: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", tuple(self.s))
        if self.r < 2:
            raise PartitionError(f"pattern modulus must be >= 2, got {self.r}")
        prev = 0
        for v in self.s:
            if not prev < v < self.r:
                raise PartitionError(
                    f"cut points {self.s} must be strictly increasing "
                    f"inside [1, {self.r - 1}]")
            prev = v

    @property
    def t(self) -> int:
        return len(self.s) + 1

    @property
    def blocks(self) -> tuple[int, ...]:
        cuts = (0, *self.s, self.r)
        return tuple(b - a for a, b in zip(cuts, cuts[1:]))

    def __str__(self) -> str:
        return f"r={self.r},s={'+'.join(map(str, self.s))}"


def all_patterns(r: int) -> list[PeriodPattern]:
    """Every pattern with modulus ``r`` and nonempty ``s``, lexicographic in ``s``."""
    from itertools import combinations

    out = []
    for size in range(1, r):
        out.extend(PeriodPattern(r, s) for s in combinations(range(1, r), size))
    return sorted(out, key=lambda p: p.s)


def is_r_regular(lam: Sequence[int], r: int) -> bool:
    return all(m < r for _, m in exponent_blocks(lam))


def is_r_class_regular(lam: Sequence[int], r: int) -> bool:
    return all(p % r for p in lam)


def exponent_blocks(lam: Sequence[int]) -> list[tuple[int, int]]:
    """Run-length encoding ``[(value, multiplicity), ...]``, largest value first."""
    out: list[tuple[int, int]] = []
    for p in lam:
        if out and out[-1][0] == p:
            out[-1] = (p, out[-1][1] + 1)
        else:
            out.append((p, 1))
    return out


def _check_legacy(r: int, j: int) -> None:
    if not 1 <= j <= r - 1:
        raise PartitionError(f"residue j={j} must lie in [1, {r - 1}]")


def is_rp_legacy(lam: Sequence[int], r: int, j: int) -> bool:
    """Exponents alternate j, r-j, j, r-j, ... and stop after a whole block."""
    _check_legacy(r, j)
    for idx, (_, m) in enumerate(exponent_blocks(lam)):
        if m != (j if idx % 2 == 0 else r - j):
            return False
    return True


def is_cp_legacy(lam: Sequence[int], r: int, j: int) -> bool:
    _check_legacy(r, j)
    return all(p % r == j for p in lam)


def is_rp_pattern(lam: Sequence[int], pattern: PeriodPattern,
                  variant: Variant = Variant.FREE) -> bool:
    blocks = pattern.blocks
    t = len(blocks)
    runs = exponent_blocks(lam)
    for idx, (_, m) in enumerate(runs):
        if m != blocks[idx % t]:
            return False
    if variant is Variant.FULL_PERIOD:
        return len(runs) % t == 0
    if variant is Variant.ZERO_TAIL:
        return len(runs) % t in (0, t - 1)
    return True


def is_cp_pattern(lam: Sequence[int], pattern: PeriodPattern,
                  variant: Variant = Variant.FREE) -> bool:
    r, s = pattern.r, pattern.s
    if not s:
        raise PartitionError("the CP side needs at least one cut point")
    qr = [divmod(p, r) for p in lam]
    present = set(qr)
    last = s[-1]

    def has_lower(q: int, upto: int) -> bool:
        # (q, s_a) occurs for every a < upto (0-based)
        return all((q, s[a]) in present for a in range(upto))

    for i, (q, rem) in enumerate(qr, start=1):
        if rem == 0 or rem not in s:
            return False
        if q >= i and (rem != last or not has_lower(i - 1, len(s) - 1)):
            return False
        if q == i - 1 and not has_lower(i - 1, s.index(rem)):
            return False
        if variant is Variant.FULL_PERIOD and q == i - 1:
            return False
        if variant is Variant.ZERO_TAIL and q >= i - 1 and rem != last:
            return False
    return True


def is_bcp(lam: Sequence[int], r: int, *, all_positions: bool = False) -> bool:
    """Class-regular, and for each i with ``lam_i > r(i-1)`` no later part with
    quotient ``i-1`` has a larger remainder than ``lam_i``.

    ``all_positions=True`` also compares parts before position i; that reading
    breaks the BCP/BRP count equality from r=3, n=9 on and is kept only for
    exploration.
    """
    if r < 2:
        raise PartitionError(f"r must be >= 2, got {r}")
    if not is_r_class_regular(lam, r):
        return False
    for i, lam_i in enumerate(lam, start=1):
        if lam_i <= r * (i - 1):
            continue
        rem_i = lam_i % r
        others = lam if all_positions else lam[i - 1:]
        for p in others:
            if p // r == i - 1 and p % r > rem_i:
                return False
    return True


def is_brp(lam: Sequence[int], r: int) -> bool:
    if r < 2:
        raise PartitionError(f"r must be >= 2, got {r}")
    if not is_r_regular(lam, r):
        return False
    length = len(lam)

    def part(j: int) -> int:
        return lam[j - 1] if 1 <= j <= length else 0

    def mult(v: int) -> int:
        return multiplicity(lam, v) if v > 0 else 0

    i = 1
    while r * i <= length:
        a, b = part(r * i), part(r * i + 1)
        if a <= b:
            return False
        if a == b + 1 and mult(a) > max(mult(part(r * (i + 1))),
                                        r * (i + 1) - length):
            return False
        i += 1
    return True


class Side(enum.Enum):
    CP = "cp"
    RP = "rp"


class Kind(enum.Enum):
    PLAIN = "plain"
    LEGACY = "legacy"
    PATTERN = "pattern"
    B = "b"


@dataclass(frozen=True)
class FamilySelector:
    """Addresses one family. Build with the classmethods rather than directly."""

    side: Side
    kind: Kind
    r: int
    j: int | None = None
    pattern: PeriodPattern | None = None
    variant: Variant = Variant.FREE

    def __post_init__(self) -> None:
        if self.r < 1:
            raise PartitionError(f"r must be positive, got {self.r}")
        if self.kind is Kind.LEGACY:
            if self.j is None:
                raise PartitionError("legacy family needs j")
            _check_legacy(self.r, self.j)
        if self.kind is Kind.PATTERN:
            if self.pattern is None:
                raise PartitionError("pattern family needs a pattern")
            if self.side is Side.CP and not self.pattern.s:
                raise PartitionError("the CP side needs at least one cut point")
        if self.kind is Kind.B and self.r < 2:
            raise PartitionError("B families need r >= 2")

    @classmethod
    def plain(cls, side: Side, r: int) -> "FamilySelector":
        return cls(side, Kind.PLAIN, r)

    @classmethod
    def legacy(cls, side: Side, r: int, j: int) -> "FamilySelector":
        return cls(side, Kind.LEGACY, r, j=j)

    @classmethod
    def of_pattern(cls, side: Side, pattern: PeriodPattern,
                   variant: Variant = Variant.FREE) -> "FamilySelector":
        return cls(side, Kind.PATTERN, pattern.r, pattern=pattern, variant=variant)

    @classmethod
    def boundary(cls, side: Side, r: int) -> "FamilySelector":
        return cls(side, Kind.B, r)

    def partner(self) -> "FamilySelector":
        other = Side.RP if self.side is Side.CP else Side.CP
        return FamilySelector(other, self.kind, self.r, self.j, self.pattern,
                              self.variant)

    def predicate(self) -> Callable[[Sequence[int]], bool]:
        # Resolved through module globals at call time, so a patched
        # predicate is picked up by every caller.
        g = globals()
        cp = self.side is Side.CP
        if self.kind is Kind.PLAIN:
            fn = g["is_r_class_regular" if cp else "is_r_regular"]
            return lambda lam: fn(lam, self.r)
        if self.kind is Kind.LEGACY:
            fn = g["is_cp_legacy" if cp else "is_rp_legacy"]
            return lambda lam: fn(lam, self.r, self.j)
        if self.kind is Kind.PATTERN:
            fn = g["is_cp_pattern" if cp else "is_rp_pattern"]
            return lambda lam: fn(lam, self.pattern, self.variant)
        fn = g["is_bcp" if cp else "is_brp"]
        return lambda lam: fn(lam, self.r)

    def contains(self, lam: Sequence[int]) -> bool:
        return self.predicate()(lam)

    def __str__(self) -> str:
        if self.kind is Kind.B:
            return f"b{self.side.value}:r={self.r}"
        head = f"{self.side.value}:r={self.r}"
        if self.kind is Kind.LEGACY:
            return f"{head},j={self.j}"
        if self.kind is Kind.PATTERN:
            s = "+".join(map(str, self.pattern.s))
            return f"{head},s={s},variant={self.variant.value}"
        return head


_SELECTOR_RE = re.compile(r"^\s*(bcp|brp|cp|rp)\s*:\s*(.*)$", re.IGNORECASE)


def parse_selector(text: str) -> FamilySelector:
    """Parse ``cp:r=3``, ``rp:r=3,j=1``, ``rp:r=6,s=1+3,variant=full``,
    ``bcp:r=2`` and friends."""
    match = _SELECTOR_RE.match(text)
    if not match:
        raise PartitionError(f"cannot parse family selector {text!r}")
    head, body = match.group(1).lower(), match.group(2)
    fields: dict[str, str] = {}
    for item in filter(None, (x.strip() for x in body.split(","))):
        key, sep, value = item.partition("=")
        if not sep or key.strip() in fields:
            raise PartitionError(f"bad field {item!r} in selector {text!r}")
        fields[key.strip().lower()] = value.strip()
    unknown = set(fields) - {"r", "j", "s", "variant"}
    if unknown or "r" not in fields:
        raise PartitionError(f"selector {text!r} needs r and only r, j, s, variant")
    try:
        r = int(fields["r"])
        j = int(fields["j"]) if "j" in fields else None
        s = tuple(int(x) for x in fields["s"].split("+") if x) if "s" in fields else None
    except ValueError:
        raise PartitionError(f"non-integer value in selector {text!r}") from None

    if head in ("bcp", "brp"):
        if j is not None or s is not None or "variant" in fields:
            raise PartitionError(f"{head} takes only r")
        return FamilySelector.boundary(Side(head[1:]), r)
    side = Side(head)
    if j is not None and s is not None:
        raise PartitionError("give either j or s, not both")
    if j is not None:
        if "variant" in fields:
            raise PartitionError("variant applies only to s= patterns")
        return FamilySelector.legacy(side, r, j)
    if s is not None:
        variant = Variant.parse(fields.get("variant", "free"))
        return FamilySelector.of_pattern(side, PeriodPattern(r, s), variant)
    if "variant" in fields:
        raise PartitionError("variant applies only to s= patterns")
    return FamilySelector.plain(side, r)


def enumerate_family(n: int, family: FamilySelector) -> list[Partition]:
    pred = family.predicate()
    return [lam for lam in enumerate_all(n) if pred(lam)]


def generate_rp_pattern(n: int, pattern: PeriodPattern,
                        variant: Variant = Variant.FREE) -> list[Partition]:
    """RP pattern members of ``n`` built directly from strictly decreasing
    block values, without scanning all partitions of ``n``."""
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    blocks = pattern.blocks
    t = len(blocks)

    def can_stop(count: int) -> bool:
        if variant is Variant.FULL_PERIOD:
            return count % t == 0
        if variant is Variant.ZERO_TAIL:
            return count % t in (0, t - 1)
        return True

    def ceiling(idx: int, below: int) -> int:
        # largest total reachable from block idx on with values < below
        total, v = 0, below - 1
        while v >= 1:
            total += blocks[idx % t] * v
            idx += 1
            v -= 1
        return total

    out: list[Partition] = []
    values: list[int] = []

    def walk(remaining: int, below: int, idx: int) -> None:
        if remaining == 0:
            if can_stop(idx):
                out.append(Partition._trusted(
                    v for k, v in enumerate(values) for _ in range(blocks[k % t])))
            return
        d = blocks[idx % t]
        for v in range(min(below - 1, remaining // d), 0, -1):
            rest = remaining - d * v
            if rest > ceiling(idx + 1, v):
                break
            values.append(v)
            walk(rest, v, idx + 1)
            values.pop()

    walk(n, n + 1, 0)
    return out


def count_cp_legacy_dp(n: int, r: int, j: int) -> int:
    """Partitions of ``n`` into parts congruent to ``j`` mod ``r`` (coin-change DP)."""
    _check_legacy(r, j)
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    ways = [1] + [0] * n
    for coin in range(j, n + 1, r):
        for total in range(coin, n + 1):
            ways[total] += ways[total - coin]
    return ways[n]

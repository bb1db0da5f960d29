"""The hook-stripping map from class-regular-side families to regular-side
families, and its inverse built by splitting, conjugating and folding.

Forward: write part ``r*q + rem`` as a row of ``q`` copies of ``r`` followed by
``rem``, then repeatedly strip the diagonal hook (all of row 1 and the first
cell of every other row), decrementing each hook cell by one. The hook sizes,
in order, are the parts of the image.

Inverse: cut the image into consecutive groups of ``r`` parts, conjugate each
group, order its conjugate parts (ascending, largest non-``r`` value moved to
the end) and fold every such sequence into the g-th diagonal hook of a
tableau. The fold point of each hook is found by exhaustive search; exactly
one global assignment must produce a well-formed tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from periodic_partitions.core import Partition, PartitionError, conjugate
from periodic_partitions.families import FamilySelector, enumerate_family

HookSequence = tuple[int, ...]


class MapError(PartitionError):
    """Input lies outside the domain on which a map is well defined."""


class NonMonotoneStripError(MapError):
    def __init__(self, strips: Sequence[int]):
        self.strips = tuple(strips)
        super().__init__(
            f"hook sizes {list(self.strips)} are not weakly decreasing")


class NotInImageError(MapError):
    """No fold assignment yields a valid tableau."""


class FoldAmbiguityError(MapError):
    """More than one fold assignment yields a valid tableau."""

    def __init__(self, message: str, solutions: list):
        self.solutions = solutions
        super().__init__(message)


class InjectivityError(MapError):
    def __init__(self, target: Sequence[int], preimages: list[Partition]):
        self.target = tuple(target)
        self.preimages = preimages
        super().__init__(
            f"{len(preimages)} preimages map to {list(self.target)}")


def _check_r(r: int) -> None:
    if r < 2:
        raise PartitionError(f"r must be >= 2, got {r}")


@dataclass(frozen=True)
class Tableau:
    """Rows of positive entries. Shape and monotonicity are not enforced,
    since intermediate tableaux of the stripping process violate both."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(tuple(row) for row in self.rows)
        for row in rows:
            if not row:
                raise PartitionError("tableau rows must be nonempty")
            if any(v <= 0 for v in row):
                raise PartitionError(f"tableau entries must be positive: {row}")
        object.__setattr__(self, "rows", rows)

    def __bool__(self) -> bool:
        return bool(self.rows)

    @property
    def total(self) -> int:
        return sum(map(sum, self.rows))

    def row_sums(self) -> Partition:
        return Partition(sum(row) for row in self.rows)

    def render(self) -> str:
        """One row per line, entries separated by single spaces."""
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


def build_tableau(lam: Sequence[int], r: int) -> Tableau:
    _check_r(r)
    rows = []
    for part in lam:
        q, rem = divmod(part, r)
        rows.append((r,) * q + ((rem,) if rem else ()))
    return Tableau(tuple(rows))


def strip_hook(tab: Tableau) -> tuple[int, Tableau]:
    """Remove one diagonal hook; returns (hook size, remaining tableau)."""
    if not tab:
        raise PartitionError("cannot strip a hook from an empty tableau")
    rows = tab.rows
    size = len(rows[0]) + len(rows) - 1
    new_rows = []
    for k, row in enumerate(rows):
        if k == 0:
            row = tuple(v - 1 for v in row)
        else:
            row = (row[0] - 1,) + row[1:]
        row = tuple(v for v in row if v)
        if row:
            new_rows.append(row)
    return size, Tableau(tuple(new_rows))


def iter_strips(tab: Tableau) -> Iterator[tuple[int, Tableau]]:
    while tab:
        size, tab = strip_hook(tab)
        yield size, tab


def forward_map(lam: Sequence[int], r: int) -> Partition:
    strips = [size for size, _ in iter_strips(build_tableau(lam, r))]
    return strips_to_partition(strips)


def strips_to_partition(strips: Sequence[int]) -> Partition:
    if any(a < b for a, b in zip(strips, strips[1:])):
        raise NonMonotoneStripError(strips)
    return Partition(strips)


def split_groups(mu: Sequence[int], r: int) -> list[Partition]:
    _check_r(r)
    return [Partition(mu[i:i + r]) for i in range(0, len(mu), r)]


def group_sequence(group: Sequence[int], r: int) -> HookSequence:
    if not group:
        raise MapError("cannot build a hook sequence from an empty group")
    parts = list(conjugate(group))
    non_r = [v for v in parts if v != r]
    if not non_r:
        raise MapError(
            f"conjugate of group {list(group)} consists only of {r}s")
    last = max(non_r)
    parts.remove(last)
    return tuple(sorted(parts)) + (last,)


def _place(grid: dict, g: int, seq: HookSequence, split: int) -> list:
    """Put seq[split:] along row g from column g, and seq[:split] down
    column g below the diagonal with seq[0] at the bottom.

    ``grid`` maps row -> {column: entry}; returns the placed (row, column) keys.
    """
    placed = [((g, g + offset), v) for offset, v in enumerate(seq[split:])]
    placed += [((g + 1 + offset, g), v)
               for offset, v in enumerate(reversed(seq[:split]))]
    for (i, j), v in placed:
        row = grid.setdefault(i, {})
        if j in row:
            raise AssertionError(f"cell {(i, j)} placed twice")
        row[j] = v
    return [key for key, _ in placed]


def _unplace(grid: dict, keys: list) -> None:
    for i, j in keys:
        del grid[i][j]
        if not grid[i]:
            del grid[i]


def _row_values(grid: dict, i: int) -> list[int] | None:
    """Row i read left to right, or None when it is missing or has a gap."""
    row = grid.get(i)
    if not row or len(row) != max(row):
        return None
    return [row[j] for j in range(1, len(row) + 1)]


def _row_ok(grid: dict, i: int, r: int) -> bool:
    vals = _row_values(grid, i)
    if not vals or vals[-1] == r or any(v != r for v in vals[:-1]):
        return False
    if i > 1:
        above = _row_values(grid, i - 1)
        if above is None or len(vals) > len(above):
            return False
        if any(v > w for v, w in zip(vals, above)):
            return False
    return True


def _column_ok(grid: dict, g: int, r: int) -> bool:
    """Column g below the diagonal is final once hook g is placed: it must be
    gap-free and weakly decreasing, and each of its cells must extend an
    ``r`` entry in column g-1 of the same row."""
    i = g + 1
    while i in grid and g in grid[i]:
        v = grid[i][g]
        if v > grid[i - 1].get(g, 0):
            return False
        if g > 1 and grid[i].get(g - 1) != r:
            return False
        i += 1
    return not any(g in grid[k] for k in grid if k > i)


def _fold_solutions(seqs: Sequence[HookSequence], r: int,
                    limit: int = 2) -> list[tuple[tuple[int, ...], Tableau]]:
    # Depth-first over split points, group 1 first, earliest split first.
    # Once hooks 1..g are placed row g is final, so it can be checked early.
    grid: dict = {}
    splits: list[int] = []
    found: list[tuple[tuple[int, ...], Tableau]] = []

    def finish() -> None:
        n_rows = max(grid)
        for i in range(len(seqs) + 1, n_rows + 1):
            if not _row_ok(grid, i, r):
                return
        rows = tuple(tuple(_row_values(grid, i)) for i in range(1, n_rows + 1))
        found.append((tuple(splits), Tableau(rows)))

    def walk(g: int) -> None:
        if len(found) >= limit:
            return
        if g > len(seqs):
            finish()
            return
        seq = seqs[g - 1]
        for split in range(len(seq)):
            keys = _place(grid, g, seq, split)
            splits.append(split)
            if _row_ok(grid, g, r) and _column_ok(grid, g, r):
                walk(g + 1)
            splits.pop()
            _unplace(grid, keys)

    if seqs:
        walk(1)
    else:
        found.append(((), Tableau()))
    return found


def fold_into_tableau(seqs: Sequence[HookSequence], r: int) -> Tableau:
    _check_r(r)
    found = _fold_solutions(seqs, r)
    if not found:
        raise NotInImageError(
            f"no fold of the sequences {[list(s) for s in seqs]} gives a valid tableau")
    if len(found) > 1:
        raise FoldAmbiguityError(
            f"fold is not unique for {[list(s) for s in seqs]}: split points "
            f"{[list(sp) for sp, _ in found]}", found)
    return found[0][1]


def inverse_map(mu: Sequence[int], r: int) -> Partition:
    seqs = [group_sequence(g, r) for g in split_groups(mu, r)]
    return fold_into_tableau(seqs, r).row_sums()


def brute_force_inverse(mu: Sequence[int], r: int,
                        family: FamilySelector) -> Partition | None:
    """Scan the family at size |mu| for the preimage of ``mu`` under forward_map."""
    target = tuple(mu)
    hits = [lam for lam in enumerate_family(sum(target), family)
            if forward_map(lam, r) == target]
    if len(hits) > 1:
        raise InjectivityError(target, hits)
    return hits[0] if hits else None

"""Brute-force oracles for flats of integer-interval gain arrangements.

The arrangements handled here have hyperplanes x_i - x_j = a for i < j and a
ranging over an integer interval [lo, hi]. Two independent enumerations of
the flats are provided:

* the gain-graph route: a flat is a partition of the labels into blocks,
  each block carrying a height function (normalized so its minimum is 0)
  whose induced graph on the block is connected, where i < j are adjacent
  exactly when height(j) - height(i) lies in [lo, hi];

* the linear-algebra route: close the set of hyperplanes under intersection
  with exact rational row reduction and count the distinct nonempty affine
  subspaces by dimension.

Both stay deliberately naive; they exist to check the matrix formulas, not
to be fast. Counts are practical up to about n = 6 for the first route and
n = 4 for the second.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .enumeration import set_partitions


@dataclass(frozen=True)
class GainInterval:
    """Integer gain set [lo, hi] of an arrangement x_i - x_j = a, a in [lo, hi]."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def catalan(cls, m: int) -> "GainInterval":
        if m < 0:
            raise ValueError("m must be nonnegative")
        return cls(-m, m)

    @classmethod
    def shi(cls, m: int) -> "GainInterval":
        if m < 1:
            raise ValueError("m must be positive")
        return cls(1 - m, m)

    @classmethod
    def braid(cls) -> "GainInterval":
        return cls(0, 0)

    def contains(self, a: int) -> bool:
        return self.lo <= a <= self.hi

    @property
    def span(self) -> int:
        return max(abs(self.lo), abs(self.hi))

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


@dataclass(frozen=True)
class HeightFunction:
    """Map from a finite label set to nonnegative integers with minimum 0.

    Stored as (label, height) pairs sorted by label. A height function on a
    block describes a candidate flat fragment x_u + h(u) = x_v + h(v); it is
    one flat of the arrangement restricted to the block exactly when the
    induced gain graph is connected (see is_connected_block).
    """

    items: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.items:
            raise ValueError("height function needs a nonempty domain")
        labels = [v for v, _ in self.items]
        if labels != sorted(set(labels)):
            raise ValueError("labels must be distinct and sorted")
        heights = [h for _, h in self.items]
        if any(not isinstance(h, int) or h < 0 for h in heights) or min(heights) != 0:
            raise ValueError("heights must be nonnegative integers with minimum 0")

    @classmethod
    def from_dict(cls, mapping) -> "HeightFunction":
        return cls(tuple(sorted(mapping.items())))

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.items)

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)


@dataclass(frozen=True)
class ConnectedPartition:
    """A flat: blocks with height functions partitioning the label set.

    The dimension of the flat equals the number of blocks.
    """

    blocks: tuple[HeightFunction, ...]

    def __post_init__(self):
        seen = set()
        for block in self.blocks:
            for v in block.labels:
                if v in seen:
                    raise ValueError(f"label {v} appears in two blocks")
                seen.add(v)
        if list(self.blocks) != sorted(self.blocks, key=lambda b: b.items):
            raise ValueError("blocks must be sorted by label")

    @property
    def dimension(self) -> int:
        return len(self.blocks)


def _tuple_connected(labels, heights, interval) -> bool:
    # Breadth-first reachability with edges u < v iff h(v) - h(u) in the interval.
    r = len(labels)
    if r == 1:
        return True
    lo, hi = interval.lo, interval.hi
    seen = [False] * r
    seen[0] = True
    queue = [0]
    count = 1
    while queue:
        i = queue.pop()
        hi_i = heights[i]
        for j in range(r):
            if not seen[j]:
                diff = heights[j] - hi_i if i < j else hi_i - heights[j]
                if lo <= diff <= hi:
                    seen[j] = True
                    count += 1
                    queue.append(j)
    return count == r


def is_connected_block(block: HeightFunction, interval: GainInterval) -> bool:
    """Whether the gain graph induced by the heights on the block is connected.

    Labels u < v are adjacent exactly when height(v) - height(u) lies in the
    interval; for asymmetric intervals (the Shi case) the label order matters.
    """
    return _tuple_connected(block.labels, tuple(h for _, h in block.items), interval)


@lru_cache(maxsize=None)
def _connected_blocks(members: tuple[int, ...], interval: GainInterval):
    r = len(members)
    if r == 1:
        return (HeightFunction(((members[0], 0),)),)
    # Any connected block has a spanning tree whose edge gains lie in the
    # interval, so height differences telescope to at most (r-1) * span;
    # scanning [0, bound]^r therefore sees every normalized connected class.
    bound = (r - 1) * interval.span
    found = []
    for heights in product(range(bound + 1), repeat=r):
        if 0 not in heights:
            continue
        if _tuple_connected(members, heights, interval):
            found.append(HeightFunction(tuple(zip(members, heights))))
    return tuple(found)


def enumerate_connected_blocks(members, interval: GainInterval) -> tuple[HeightFunction, ...]:
    """All normalized height functions on the given labels whose induced gain
    graph is connected, in lexicographic order of the height vectors."""
    key = tuple(sorted(set(members)))
    if not key:
        raise ValueError("a block must be nonempty")
    return _connected_blocks(key, interval)


def enumerate_flats_gain(n: int, interval: GainInterval, labels=None) -> dict[int, int]:
    """Count flats of the interval arrangement by dimension.

    Runs over all set partitions of the labels (default [n]) and multiplies
    the per-block numbers of connected height classes; the dimension of a
    flat is its number of blocks. The ambient space appears as the all-
    singletons partition, so the top count is always 1.
    """
    if labels is None:
        if n < 1:
            raise ValueError("n must be positive")
        labels = range(1, n + 1)
    counts = Counter()
    for part in set_partitions(labels):
        ways = 1
        for block in part:
            ways *= len(enumerate_connected_blocks(block, interval))
            if ways == 0:
                break
        counts[len(part)] += ways
    return dict(sorted(counts.items()))


def connected_partitions(n: int, interval: GainInterval, labels=None) -> list[ConnectedPartition]:
    """The full list of flats, sorted canonically (by block label/height data)."""
    if labels is None:
        if n < 1:
            raise ValueError("n must be positive")
        labels = range(1, n + 1)
    flats = []
    for part in set_partitions(labels):
        choices = [enumerate_connected_blocks(block, interval) for block in part]
        for combo in product(*choices):
            blocks = tuple(sorted(combo, key=lambda b: b.items))
            flats.append(ConnectedPartition(blocks))
    flats.sort(key=lambda f: tuple(b.items for b in f.blocks))
    return flats


def _rref(rows, ncoords):
    """Reduced row echelon form of an augmented system over Fraction.

    Returns the canonical tuple of nonzero rows, or None when the system is
    inconsistent (empty intersection). Pivots are chosen on the lowest-index
    coordinate columns, so the result is the unique canonical form of the
    affine subspace.
    """
    work = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncoords):
        for i in range(pivot_row, len(work)):
            if work[i][col] != 0:
                break
        else:
            continue
        work[pivot_row], work[i] = work[i], work[pivot_row]
        pivot = work[pivot_row][col]
        if pivot != 1:
            work[pivot_row] = [x / pivot for x in work[pivot_row]]
        for r in range(len(work)):
            if r != pivot_row and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [a - factor * b for a, b in zip(work[r], work[pivot_row])]
        pivot_row += 1
    for r in range(pivot_row, len(work)):
        if work[r][ncoords] != 0:
            return None
    return tuple(tuple(row) for row in work[:pivot_row])


def enumerate_flats_linear(n: int, interval: GainInterval) -> dict[int, int]:
    """Count flats by closing the hyperplane set under intersection.

    Every flat is an intersection of hyperplanes, so repeatedly intersecting
    known flats with single hyperplanes, starting from the ambient space,
    reaches exactly the intersection poset. Exact rational arithmetic keeps
    the canonical forms unambiguous. Intended for small n (roughly n <= 4).
    """
    if n < 1:
        raise ValueError("n must be positive")
    hyperplanes = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for a in range(interval.lo, interval.hi + 1):
                row = [Fraction(0)] * (n + 1)
                row[i - 1] = Fraction(1)
                row[j - 1] = Fraction(-1)
                row[n] = Fraction(a)
                hyperplanes.append(tuple(row))
    ambient = ()
    dimensions = {ambient: n}
    queue = deque([ambient])
    while queue:
        base = queue.popleft()
        for plane in hyperplanes:
            candidate = _rref(list(base) + [plane], n)
            if candidate is None or candidate in dimensions:
                continue
            dimensions[candidate] = n - len(candidate)
            queue.append(candidate)
    return dict(sorted(Counter(dimensions.values()).items()))

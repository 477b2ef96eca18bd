"""Explicit bijections between nested-list structures and flat height functions.

A depth-m nested-list structure is an ordered rooted tree of uniform leaf
depth m, written as nested tuples. In the Catalan family the leaves are
disjoint nonempty frozensets covering the label set; in the Shi family the
leaves are the labels themselves. Depth 0 (Catalan only) is a bare
frozenset.

The correspondence with flats works through the gap sequence of a
structure: reading the leaves left to right, the gap between two adjacent
leaves is the height of the smallest subtree containing both. For the
Catalan family the leaf heights are the partial sums of the gaps, and the
resulting height functions are exactly those whose gaps never exceed m
(connectivity under gains [-m, m]). For the Shi family each gap is first
lowered by one at descents (adjacent leaf values out of increasing order)
and the image is exactly the height functions connected under gains
[1-m, m]. The inverse directions split the gap sequence recursively at its
maximal entries, the Shi case also splitting at entries m-1 that sit on an
inversion between blocks.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product

from .enumeration import ordered_set_partitions
from .oracle import HeightFunction


class NotConnected(ValueError):
    """Height function is not a flat of the requested arrangement depth."""


def structure_depth(s) -> int:
    """Leaf depth of a nested-list structure (0 for a bare leaf set)."""
    depth = 0
    while isinstance(s, tuple):
        s = s[0]
        depth += 1
    return depth


def structure_labels(s) -> tuple[int, ...]:
    """All labels of a structure, ascending."""
    out = []

    def walk(node):
        if isinstance(node, tuple):
            for child in node:
                walk(child)
        elif isinstance(node, frozenset):
            out.extend(node)
        else:
            out.append(node)

    walk(s)
    return tuple(sorted(out))


def _leaves_and_gaps(node, depth):
    """Leaves in left-to-right order and the gap sequence between neighbours.

    The gap recorded at a junction inside a node of height t is t itself;
    gaps within a child are computed at height t - 1.
    """
    if depth == 0:
        return [node], []
    leaves, gaps = [], []
    for i, child in enumerate(node):
        sub_leaves, sub_gaps = _leaves_and_gaps(child, depth - 1)
        if i:
            gaps.append(depth)
        leaves.extend(sub_leaves)
        gaps.extend(sub_gaps)
    return leaves, gaps


def catalan_structure_to_height(s) -> HeightFunction:
    """Height function of a set-leaf structure: partial sums of the gaps,
    constant on each leaf set."""
    leaves, gaps = _leaves_and_gaps(s, structure_depth(s))
    pairs = []
    height = 0
    for i, leaf in enumerate(leaves):
        if i:
            height += gaps[i - 1]
        for v in leaf:
            pairs.append((v, height))
    return HeightFunction(tuple(sorted(pairs)))


def shi_structure_to_height(s) -> HeightFunction:
    """Height function of a singleton-leaf structure: gaps are lowered by one
    at descents, then summed."""
    leaves, gaps = _leaves_and_gaps(s, structure_depth(s))
    pairs = []
    height = 0
    for i, v in enumerate(leaves):
        if i:
            height += gaps[i - 1] - (1 if leaves[i - 1] > v else 0)
        pairs.append((v, height))
    return HeightFunction(tuple(sorted(pairs)))


def _levels(h: HeightFunction):
    """Blocks of equal height in increasing height order, with the gap sequence."""
    by_height: dict[int, list[int]] = {}
    for v, height in h.items:
        by_height.setdefault(height, []).append(v)
    heights = sorted(by_height)
    blocks = [tuple(sorted(by_height[a])) for a in heights]
    gaps = [b - a for a, b in zip(heights, heights[1:])]
    return blocks, gaps


def _split_at(blocks, gaps, positions):
    """Cut (blocks, gaps) at the given gap indices, dropping the cut entries."""
    pieces = []
    start = 0
    for pos in list(positions) + [len(gaps)]:
        pieces.append((blocks[start : pos + 1], gaps[start:pos]))
        start = pos + 1
    return pieces


def height_to_catalan_structure(h: HeightFunction, m: int):
    """The unique depth-m set-leaf structure whose height function is h.

    Raises NotConnected when some gap exceeds m, i.e. when h is not a flat
    of the m-extended symmetric-interval arrangement.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    blocks, gaps = _levels(h)
    if gaps and max(gaps) > m:
        raise NotConnected(f"gap {max(gaps)} exceeds {m}")

    def build(blocks, gaps, t):
        if t == 0:
            return frozenset(blocks[0])
        cuts = [i for i, g in enumerate(gaps) if g == t]
        return tuple(build(bs, gs, t - 1) for bs, gs in _split_at(blocks, gaps, cuts))

    return build(blocks, gaps, m)


def height_to_shi_structure(h: HeightFunction, m: int):
    """The unique depth-m singleton-leaf structure whose height function is h.

    Beyond the gap bound, a gap of exactly m is only allowed when the lower
    block's minimum is smaller than the upper block's maximum; otherwise h
    is not a flat of the [1-m, m] arrangement and NotConnected is raised.
    At each recursion level the gap sequence is cut at entries equal to the
    current height t and at entries t - 1 lying on an inversion; the base
    level writes each block in decreasing order.
    """
    if m < 1:
        raise ValueError("m must be positive")
    blocks, gaps = _levels(h)
    if gaps and max(gaps) > m:
        raise NotConnected(f"gap {max(gaps)} exceeds {m}")
    for i, g in enumerate(gaps):
        if g == m and not min(blocks[i]) < max(blocks[i + 1]):
            raise NotConnected(
                f"gap of {m} between blocks {blocks[i]} and {blocks[i + 1]} "
                "needs an increasing pair across it"
            )

    def build(blocks, gaps, t):
        if t == 1:
            leaves = []
            for block in blocks:
                leaves.extend(sorted(block, reverse=True))
            return tuple(leaves)
        cuts = [
            i
            for i, g in enumerate(gaps)
            if g == t or (g == t - 1 and min(blocks[i]) > max(blocks[i + 1]))
        ]
        return tuple(build(bs, gs, t - 1) for bs, gs in _split_at(blocks, gaps, cuts))

    return build(blocks, gaps, m)


@lru_cache(maxsize=None)
def _catalan_structures(labels: tuple[int, ...], m: int):
    if m == 0:
        return (frozenset(labels),)
    out = []
    for parts in ordered_set_partitions(labels):
        children = [_catalan_structures(block, m - 1) for block in parts]
        out.extend(product(*children))
    return tuple(out)


@lru_cache(maxsize=None)
def _shi_structures(labels: tuple[int, ...], m: int):
    if m == 1:
        return tuple(permutations(labels))
    out = []
    for parts in ordered_set_partitions(labels):
        children = [_shi_structures(block, m - 1) for block in parts]
        out.extend(product(*children))
    return tuple(out)


def enumerate_catalan_structures(labels, m: int):
    """All depth-m set-leaf structures on the labels; m = 0 gives the single
    one-leaf structure."""
    key = tuple(sorted(set(labels)))
    if not key:
        raise ValueError("label set must be nonempty")
    if m < 0:
        raise ValueError("m must be nonnegative")
    return _catalan_structures(key, m)


def enumerate_nested_lists(labels, m: int):
    """All depth-m singleton-leaf structures on the labels (m >= 1)."""
    key = tuple(sorted(set(labels)))
    if not key:
        raise ValueError("label set must be nonempty")
    if m < 1:
        raise ValueError("m must be positive")
    return _shi_structures(key, m)


def render_structure(s) -> str:
    """Parenthesis notation: lists in parens, set leaves in braces, leaf
    labels ascending. Labels above 9 are comma-separated to stay readable."""
    sep = "," if any(v > 9 for v in structure_labels(s)) else ""

    def text(node):
        if isinstance(node, tuple):
            return "(" + sep.join(text(child) for child in node) + ")"
        if isinstance(node, frozenset):
            return "{" + sep.join(str(v) for v in sorted(node)) + "}"
        return str(node)

    return text(s)


def render_height_table(h: HeightFunction) -> str:
    """Two-row table of a height function, labels ordered by (height, label)."""
    items = sorted(h.items, key=lambda pair: (pair[1], pair[0]))
    cells = [(str(v), str(height)) for v, height in items]
    widths = [max(len(a), len(b)) for a, b in cells]
    top = " ".join(a.rjust(w) for (a, _), w in zip(cells, widths))
    bottom = " ".join(b.rjust(w) for (_, b), w in zip(cells, widths))
    return f"v    | {top}\nh(v) | {bottom}"

"""Deterministic enumeration of set partitions and ordered set partitions."""

from __future__ import annotations

from itertools import permutations


def set_partitions(items):
    """Yield all partitions of items as tuples of blocks, each block an
    ascending tuple. Order is deterministic: the smallest element is placed
    into a new block first, then merged into each existing block in turn."""
    items = sorted(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            yield part[:i] + ((first,) + part[i],) + part[i + 1 :]


def ordered_set_partitions(items):
    """Yield all set compositions of items: every partition in every block order."""
    for part in set_partitions(items):
        yield from permutations(part)

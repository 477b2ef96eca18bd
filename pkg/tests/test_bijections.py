import pytest

from flatcount.bijections import (
    NotConnected,
    catalan_structure_to_height,
    enumerate_catalan_structures,
    enumerate_nested_lists,
    height_to_catalan_structure,
    height_to_shi_structure,
    render_height_table,
    render_structure,
    shi_structure_to_height,
    structure_depth,
    structure_labels,
)
from flatcount.enumeration import set_partitions
from flatcount.oracle import GainInterval, HeightFunction, enumerate_connected_blocks, enumerate_flats_gain
from flatcount.triangles import catalan_triangle, shi_triangle

# The two worked examples used throughout: a depth-2 set-leaf structure and
# a depth-3 singleton-leaf structure on nine labels.
CATALAN_EXAMPLE = (
    (frozenset({5, 7}), frozenset({3})),
    (frozenset({1, 4, 9}), frozenset({2, 6}), frozenset({8})),
)
CATALAN_HEIGHTS = {5: 0, 7: 0, 3: 1, 1: 3, 4: 3, 9: 3, 2: 4, 6: 4, 8: 5}

SHI_EXAMPLE = (((4, 9), (5,)), ((3,), (7, 1), (6,)), ((8, 2),))
SHI_HEIGHTS = {4: 0, 9: 1, 5: 2, 3: 4, 7: 6, 1: 6, 6: 8, 8: 11, 2: 11}


def hf(mapping):
    return HeightFunction.from_dict(mapping)


def test_structure_helpers():
    assert structure_depth(CATALAN_EXAMPLE) == 2
    assert structure_depth(SHI_EXAMPLE) == 3
    assert structure_depth(frozenset({1, 2})) == 0
    assert structure_labels(SHI_EXAMPLE) == tuple(range(1, 10))
    assert structure_labels(CATALAN_EXAMPLE) == tuple(range(1, 10))


def test_enumerate_nested_lists_counts():
    assert len(enumerate_nested_lists([1, 2, 3], 2)) == 24
    assert enumerate_nested_lists([7], 3) == ((((7,),),),)
    assert len(enumerate_nested_lists(range(1, 5), 3)) == 648
    with pytest.raises(ValueError):
        enumerate_nested_lists([1, 2], 0)
    with pytest.raises(ValueError):
        enumerate_nested_lists([], 1)


def test_enumerate_catalan_structures_counts():
    assert len(enumerate_catalan_structures([1, 2, 3], 1)) == 13
    assert len(enumerate_catalan_structures([1, 2], 2)) == 5
    assert enumerate_catalan_structures([1, 2], 0) == (frozenset({1, 2}),)


def test_catalan_structure_to_height_example():
    h = catalan_structure_to_height(CATALAN_EXAMPLE)
    assert h.as_dict() == CATALAN_HEIGHTS


def test_catalan_single_leaf():
    assert catalan_structure_to_height((frozenset({1, 2}),)).as_dict() == {1: 0, 2: 0}


def test_height_to_catalan_structure_example():
    assert height_to_catalan_structure(hf(CATALAN_HEIGHTS), 2) == CATALAN_EXAMPLE


def test_height_to_catalan_structure_flat():
    h = hf({1: 0, 2: 0, 3: 0})
    assert height_to_catalan_structure(h, 0) == frozenset({1, 2, 3})
    assert height_to_catalan_structure(h, 2) == ((frozenset({1, 2, 3}),),)


def test_height_to_catalan_structure_rejects_large_gaps():
    with pytest.raises(NotConnected):
        height_to_catalan_structure(hf({1: 0, 2: 3}), 2)


def test_catalan_m2_image_has_37_structures():
    # All height functions on three labels with gaps at most 2 are images.
    interval = GainInterval(-2, 2)
    structures = {
        height_to_catalan_structure(block, 2)
        for block in enumerate_connected_blocks([1, 2, 3], interval)
    }
    assert len(structures) == 37


def test_shi_structure_to_height_example():
    h = shi_structure_to_height(SHI_EXAMPLE)
    assert h.as_dict() == SHI_HEIGHTS


def test_shi_single_leaf():
    assert shi_structure_to_height(((1,),)).as_dict() == {1: 0}


def test_shi_two_labels():
    images = {shi_structure_to_height(s).items for s in enumerate_nested_lists([1, 2], 1)}
    assert images == {((1, 0), (2, 1)), ((1, 0), (2, 0))}


def test_height_to_shi_structure_example():
    assert height_to_shi_structure(hf(SHI_HEIGHTS), 3) == SHI_EXAMPLE


def test_height_to_shi_structure_descent_decomposition():
    # Distinct consecutive heights with m = 1: blocks are written in
    # decreasing order and concatenated, so ascents mark the block cuts.
    assert height_to_shi_structure(hf({1: 0, 2: 1, 3: 2}), 1) == (1, 2, 3)
    assert height_to_shi_structure(hf({3: 0, 1: 0, 2: 1}), 1) == (3, 1, 2)
    assert height_to_shi_structure(hf({1: 0, 2: 0, 3: 0}), 1) == (3, 2, 1)


def test_height_to_shi_structure_rejects_bad_order():
    with pytest.raises(NotConnected):
        height_to_shi_structure(hf({2: 0, 1: 1}), 1)
    with pytest.raises(NotConnected):
        height_to_shi_structure(hf({1: 0, 2: 3}), 2)
    with pytest.raises(ValueError):
        height_to_shi_structure(hf({1: 0}), 0)


@pytest.mark.parametrize("m", range(0, 3))
def test_catalan_round_trip_and_image(m):
    interval = GainInterval(-m, m)
    for n in range(1, 5):
        labels = tuple(range(1, n + 1))
        structures = enumerate_catalan_structures(labels, m)
        images = set()
        for s in structures:
            h = catalan_structure_to_height(s)
            assert height_to_catalan_structure(h, m) == s
            images.add(h.items)
        assert len(images) == len(structures)
        assert images == {b.items for b in enumerate_connected_blocks(labels, interval)}
        for block in enumerate_connected_blocks(labels, interval):
            s = height_to_catalan_structure(block, m)
            assert catalan_structure_to_height(s) == block


@pytest.mark.parametrize("m", range(1, 3))
def test_shi_round_trip_and_image(m):
    interval = GainInterval(1 - m, m)
    for n in range(1, 5):
        labels = tuple(range(1, n + 1))
        structures = enumerate_nested_lists(labels, m)
        images = set()
        for s in structures:
            h = shi_structure_to_height(s)
            assert height_to_shi_structure(h, m) == s
            images.add(h.items)
        assert len(images) == len(structures)
        assert images == {b.items for b in enumerate_connected_blocks(labels, interval)}
        for block in enumerate_connected_blocks(labels, interval):
            s = height_to_shi_structure(block, m)
            assert shi_structure_to_height(s) == block


def test_structure_counts_match_triangles():
    for n in range(1, 6):
        labels = range(1, n + 1)
        for m in range(0, 3):
            assert len(enumerate_catalan_structures(labels, m)) == catalan_triangle(
                m, n
            ).entry(1, n)
        for m in range(1, 3):
            assert len(enumerate_nested_lists(labels, m)) == shi_triangle(m, n).entry(1, n)


@pytest.mark.parametrize("family,m", [("catalan", 1), ("catalan", 2), ("shi", 1), ("shi", 2)])
def test_structures_over_partitions_reproduce_flat_counts(family, m):
    # Decorating every block of every set partition with a structure gives
    # all flats, counted by number of blocks.
    if family == "catalan":
        interval, enumerate_structs = GainInterval(-m, m), enumerate_catalan_structures
    else:
        interval, enumerate_structs = GainInterval(1 - m, m), enumerate_nested_lists
    for n in range(1, 5):
        counts = {}
        for part in set_partitions(range(1, n + 1)):
            ways = 1
            for block in part:
                ways *= len(enumerate_structs(block, m))
            counts[len(part)] = counts.get(len(part), 0) + ways
        assert counts == enumerate_flats_gain(n, interval)


def test_render_structure():
    assert render_structure(SHI_EXAMPLE) == "(((49)(5))((3)(71)(6))((82)))"
    assert render_structure(CATALAN_EXAMPLE) == "(({57}{3})({149}{26}{8}))"
    assert render_structure(frozenset({3, 1, 2})) == "{123}"
    assert render_structure((10, 2)) == "(10,2)"


def test_render_height_table():
    table = render_height_table(hf({1: 0, 2: 1, 10: 0}))
    assert table.splitlines() == ["v    | 1 10 2", "h(v) | 0  0 1"]

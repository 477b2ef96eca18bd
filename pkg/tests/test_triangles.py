import pytest

from flatcount.species import (
    bell_transform,
    partial_bell,
    seq_cycles_nonempty,
    seq_lists_nonempty,
    seq_sets_nonempty,
)
from flatcount.exact import factorial
from flatcount.triangles import (
    Triangle,
    catalan_triangle,
    identity_triangle,
    lah_matrix,
    lah_power_closed,
    mat_mul,
    mat_pow,
    shi_count_closed,
    shi_triangle,
    stirling1_matrix,
    stirling2_matrix,
    total_flats,
)
from reference_counts import (
    BRAID_TOTALS,
    CATALAN_TOTALS,
    SHI_TOTALS,
    STIRLING1_5,
    STIRLING2_5,
    TRIANGLES_5,
)


def test_triangle_validation():
    with pytest.raises(ValueError):
        Triangle(((1, 2), (1, 1)))  # nonzero below the diagonal
    with pytest.raises(ValueError):
        Triangle(((1,), (0, 1)))  # ragged
    tri = Triangle(((1, 3), (0, 1)))
    assert tri.entry(1, 2) == 3
    assert tri.column(2) == (3, 1)
    with pytest.raises(ValueError):
        tri.entry(0, 1)
    with pytest.raises(ValueError):
        tri.column(3)


def test_stirling_matrices_match_reference():
    s2 = stirling2_matrix(5)
    s1 = stirling1_matrix(5)
    for k in range(1, 6):
        for n in range(1, 6):
            assert s2.entry(k, n) == STIRLING2_5[k - 1][n - 1]
            assert s1.entry(k, n) == STIRLING1_5[k - 1][n - 1]
    assert s2.entry(2, 4) == 7
    assert s1.entry(2, 4) == 11
    assert s1.entry(1, 5) == 24
    for k in range(1, 6):
        assert s2.entry(k, k) == s1.entry(k, k) == 1


def test_mat_mul_gives_lah():
    sc = mat_mul(stirling2_matrix(5), stirling1_matrix(5))
    assert sc.entry(2, 4) == 36
    ident = identity_triangle(5)
    assert mat_mul(sc, ident) == sc
    with pytest.raises(ValueError):
        mat_mul(sc, identity_triangle(4))


def test_mat_mul_matches_bell_transform_composition():
    # Triangle of a composed species equals the product of the triangles.
    makers = (seq_sets_nonempty, seq_lists_nonempty, seq_cycles_nonempty)
    for make_f in makers:
        for make_g in makers:
            left = bell_transform(make_f(8).compose(make_g(8)))
            right = mat_mul(bell_transform(make_f(8)), bell_transform(make_g(8)))
            assert left == right


def test_mat_pow():
    sc = lah_matrix(5)
    assert mat_pow(sc, 2).entry(1, 3) == 24
    assert mat_pow(sc, 1) == sc
    assert mat_pow(sc, 0) == identity_triangle(5)
    with pytest.raises(ValueError):
        mat_pow(sc, -1)


def test_mat_pow_equals_closed_form():
    sc = lah_matrix(12)
    for m in range(1, 6):
        assert mat_pow(sc, m) == lah_power_closed(m, 12)


def test_catalan_triangle():
    assert catalan_triangle(1, 5).column(4) == (75, 79, 18, 1)
    assert catalan_triangle(0, 6) == stirling2_matrix(6)
    assert catalan_triangle(2, 5).entry(1, 5) == 4501


def test_shi_triangle():
    assert shi_triangle(2, 5).column(4) == (192, 144, 24, 1)
    assert shi_triangle(3, 5).entry(2, 5) == 6480
    assert shi_triangle(1, 5).entry(1, 5) == 120
    assert shi_triangle(0, 5) == identity_triangle(5)


def test_triangles_match_reference_tables():
    for (family, m), rows in TRIANGLES_5.items():
        build = shi_triangle if family == "shi" else catalan_triangle
        tri = build(m, 5)
        for n in range(1, 6):
            assert tri.column(n) == rows[n - 1], (family, m, n)


def test_shi_count_closed():
    assert shi_count_closed(1, 4, 2) == 36
    for m in (1, 2, 7):
        for n in (1, 3, 6):
            assert shi_count_closed(m, n, n) == 1
    assert shi_count_closed(5, 5, 1) == 75000
    with pytest.raises(ValueError):
        shi_count_closed(2, 4, 5)
    with pytest.raises(ValueError):
        shi_count_closed(2, 4, 0)
    with pytest.raises(ValueError):
        shi_count_closed(0, 4, 2)


def test_shi_triangle_matches_closed_form():
    for m in range(1, 6):
        tri = shi_triangle(m, 12)
        for n in range(1, 13):
            for k in range(1, n + 1):
                assert tri.entry(k, n) == shi_count_closed(m, n, k)


def test_lah_power_closed_values():
    assert lah_power_closed(2, 5).entry(1, 3) == 24
    assert lah_power_closed(1, 8) == lah_matrix(8)


def test_total_flats():
    assert total_flats(catalan_triangle(1, 5), 5) == 1602
    assert total_flats(shi_triangle(3, 6), 6) == 355951
    assert total_flats(catalan_triangle(0, 6), 6) == 203
    with pytest.raises(ValueError):
        total_flats(shi_triangle(1, 4), 5)


def test_column_sums_match_total_tables():
    for m, row in CATALAN_TOTALS.items():
        tri = catalan_triangle(m, 7)
        assert tuple(total_flats(tri, n) for n in range(1, 8)) == row
    for m, row in SHI_TOTALS.items():
        tri = shi_triangle(m, 7)
        assert tuple(total_flats(tri, n) for n in range(1, 8)) == row
    braid = catalan_triangle(0, 7)
    assert tuple(total_flats(braid, n) for n in range(1, 8)) == BRAID_TOTALS


def test_catalan_from_shi_recursion():
    for m in range(0, 5):
        assert catalan_triangle(m, 12) == mat_mul(shi_triangle(m, 12), stirling2_matrix(12))


def test_shi_one_is_lah_bell_transform():
    tri = shi_triangle(1, 12)
    factorials = [factorial(i) for i in range(1, 13)]
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert tri.entry(k, n) == partial_bell(n, k, factorials)


def test_triangularity_preserved():
    product = mat_mul(catalan_triangle(2, 6), shi_triangle(3, 6))
    power = mat_pow(lah_matrix(6), 4)
    for tri in (product, power):
        for k in range(1, 7):
            for n in range(1, k):
                assert tri.entry(k, n) == 0

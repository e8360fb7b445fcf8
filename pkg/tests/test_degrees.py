import itertools

import pytest
from hypothesis import given, strategies as st

from mgreg.degrees import (Box, GradingMap, Region, coarsen_degree, compositions, geq, join,
                           kset_enumerate, meet, region_intersect, region_translate, region_union,
                           sgn)

small = st.integers(-4, 4)
deg2 = st.tuples(small, small)
gens2 = st.lists(deg2, min_size=1, max_size=4)


def test_kset_counts():
    # stars and bars
    assert len(kset_enumerate(3, 2)) == 4
    assert len(kset_enumerate(-2, 3)) == 6
    assert kset_enumerate(0, 3) == [(0, 0, 0)]
    assert kset_enumerate(1, 2) == [(0, 1), (1, 0)]


def test_kset_rejects_zero_blocks():
    with pytest.raises(ValueError):
        kset_enumerate(1, 0)


@given(st.integers(0, 5), st.integers(1, 3))
def test_compositions_match_brute_force(m, k):
    brute = {p for p in itertools.product(range(m + 1), repeat=k) if sum(p) == m}
    assert set(compositions(m, k)) == brute


def test_sgn():
    assert [sgn(x) for x in (-3, 0, 5)] == [-1, 0, 1]


@given(deg2, deg2)
def test_join_meet_are_bounds(a, b):
    assert geq(join(a, b), a) and geq(join(a, b), b)
    assert geq(a, meet(a, b)) and geq(b, meet(a, b))


@given(gens2, gens2, deg2)
def test_region_union_intersection_pointwise(g1, g2, n):
    A, B = Region(g1), Region(g2)
    assert (n in region_union(A, B)) == (n in A or n in B)
    assert (n in region_intersect(A, B)) == (n in A and n in B)


@given(gens2, deg2, deg2)
def test_region_translate(g, v, n):
    A = Region(g)
    shifted = tuple(x - y for x, y in zip(n, v))
    assert (n in region_translate(A, v)) == (shifted in A)


@given(gens2)
def test_region_generators_antichain(g):
    R = Region(g)
    for a, b in itertools.permutations(R.generators, 2):
        assert not geq(a, b)


def test_region_dimension_mismatch():
    with pytest.raises(ValueError):
        (1, 2, 3) in Region([(0, 0)])


def test_box_iteration_and_len():
    b = Box((-1, 0), (1, 2))
    pts = list(b)
    assert len(pts) == len(b) == 9
    assert all(p in b for p in pts)
    with pytest.raises(ValueError):
        Box((1, 1), (0, 2))


def test_grading_maps():
    psi = GradingMap.total(3)
    assert coarsen_degree(psi, (1, -2, 4)) == (3,)
    assert coarsen_degree(GradingMap.drop(3, 1), (1, -2, 4)) == (1, 4)
    with pytest.raises(ValueError):
        GradingMap([[1, -1]])

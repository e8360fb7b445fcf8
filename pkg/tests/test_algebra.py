import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mgreg.algebra import (MonomialIdeal, Poly, PolySyntaxError, RingSpec, all_ideal_pairs,
                           block_ideal, ideal_family, ideal_label, irrelevant_ideal, maximal_ideal,
                           monomial_ideal_intersect, monomial_ideal_power, monomial_ideal_product,
                           monomial_ideal_sum, parse_poly)

R = RingSpec((2, 2))
R3 = RingSpec((1, 1, 2))
mono3 = st.tuples(*[st.integers(0, 2)] * 4)
ideal3 = st.lists(mono3, min_size=1, max_size=3).map(lambda g: MonomialIdeal(R3, g))


def all_monos(ring, top):
    return itertools.product(range(top + 1), repeat=ring.nvars)


def test_variable_names():
    assert RingSpec((2, 3)).var_names == ("x1", "x2", "y1", "y2", "y3")
    assert RingSpec((1, 1, 1, 2)).var_names[-2:] == ("v4_1", "v4_2")


def test_bad_ring():
    with pytest.raises(ValueError):
        RingSpec((2, 0))
    with pytest.raises(ValueError):
        RingSpec((2, 2), prime=32004)


def test_parse_and_degree():
    f = parse_poly(R, "3*x1^2*y2 - y1*x1*x1")
    assert f.multidegree == (2, 1)
    assert f.is_homogeneous()
    assert len(f.terms) == 2
    assert parse_poly(R, "x1 - x1").is_zero()
    assert parse_poly(R, "-x2 + 32004*x2").is_zero()  # 32004 = 1 mod p
    assert parse_poly(R, "x1**2") == parse_poly(R, "x1^2")


def test_parse_errors_have_columns():
    with pytest.raises(PolySyntaxError) as e:
        parse_poly(R, "x1 + w3")
    assert e.value.column == 6
    with pytest.raises(PolySyntaxError):
        parse_poly(R, "x1 +")
    with pytest.raises(PolySyntaxError):
        parse_poly(R, "")


def test_inhomogeneous_degree_raises():
    f = parse_poly(R, "x1*y1 + x1")
    assert not f.is_homogeneous()
    with pytest.raises(ValueError):
        f.multidegree


def test_poly_arithmetic():
    x1, y1 = parse_poly(R, "x1"), parse_poly(R, "y1")
    assert (x1 + y1) ** 2 == parse_poly(R, "x1^2 + 2*x1*y1 + y1^2")
    assert (x1 - x1).is_zero()


@settings(max_examples=40)
@given(ideal3, ideal3)
def test_ideal_operations_membership(A, B):
    S = monomial_ideal_sum(A, B)
    I = monomial_ideal_intersect(A, B)
    P = monomial_ideal_product(A, B)
    for m in all_monos(R3, 3):
        assert (m in S) == (m in A or m in B)
        assert (m in I) == (m in A and m in B)
        # m in AB iff m is divisible by a*b for generators a, b
        brute = any(all(x >= a_ + b_ for x, a_, b_ in zip(m, a, b))
                    for a in A.generators for b in B.generators)
        assert (m in P) == brute


def test_power():
    M = block_ideal(R, 0)
    assert len(monomial_ideal_power(M, 3).generators) == 4


def test_ideal_family_extremes():
    assert irrelevant_ideal(R).generators == ideal_family(R, (0, 1), ()).generators
    assert len(irrelevant_ideal(R).generators) == 4
    assert len(maximal_ideal(R).generators) == 4
    assert ideal_family(R, (0,), (1,)) == monomial_ideal_intersect(block_ideal(R, 0), block_ideal(R, 1))
    with pytest.raises(ValueError):
        ideal_family(R, (0,), (0,))


def test_ideal_pairs_and_labels():
    pairs = list(all_ideal_pairs(2))
    assert len(pairs) == 8
    assert ideal_label((0, 1), (), 2) == "B"
    assert ideal_label((), (0, 1), 2) == "M"
    assert ideal_label((0,), (1,), 2) == "M_{1},{2}"

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mgreg.algebra import MonomialIdeal, RingSpec
from mgreg.degrees import Box, GradingMap
from mgreg.linalg import dense_to_sparse, rank
from mgreg.modules import (Presentation, coarse_piece_dim, graded_piece, multiplication_matrix,
                           piece_dim, quotient_ring, regrade_module, slice_module)

R12 = RingSpec((2, 3))
R11 = RingSpec((2, 2))
mono = st.tuples(*[st.integers(0, 2)] * 5).filter(any)


def brute_quotient_dim(ring, gens, n):
    I = MonomialIdeal(ring, gens)
    return sum(1 for m in ring.monomials(n) if m not in I)


@settings(max_examples=30, deadline=None)
@given(st.lists(mono, min_size=1, max_size=4))
def test_monomial_quotient_dims(gens):
    F = Presentation(Presentation.free(R12, [(0, 0)]).target,
                     [{(0, g): 1} for g in gens])
    for n in Box((0, 0), (2, 3)):
        assert piece_dim(F, n) == brute_quotient_dim(R12, gens, n)


def test_free_module_dims_and_twist():
    F = Presentation.free(R11, [(1, 0), (0, 2)])
    assert piece_dim(F, (1, 2)) == 3 + 2
    assert piece_dim(F.twist((1, 1)), (0, 1)) == 3 + 2
    assert piece_dim(F, (-1, 5)) == 0


def test_inhomogeneous_relation_rejected():
    with pytest.raises(ValueError, match="homogeneous"):
        quotient_ring(R11, ["x1*y1 + x1"])


def test_rank_two_presentation():
    F = Presentation.from_strings(R11, [(0, 0), (0, 0)], [["x1", "-x2"]])
    assert piece_dim(F, (1, 0)) == 3
    with pytest.raises(ValueError):
        Presentation.from_strings(R11, [(0, 0), (0, 0)], ["x1"])


def test_coords_reduce_relations():
    F = quotient_ring(R11, ["x1*y1 - x2*y2"])
    P = graded_piece(F, (1, 1))
    assert P.dimension == 3
    a = P.coords({(0, (1, 0, 1, 0)): 1})
    b = P.coords({(0, (0, 1, 0, 1)): 1})
    assert a == b


def test_koszul_total_degree_hilbert_function():
    # brute force: monomials of total degree t avoiding x1y1 and x2y2
    F = quotient_ring(R11, ["x1*y1", "x2*y2"])
    G = regrade_module(F, GradingMap.total(2))
    for t in range(5):
        brute = sum(1 for m in itertools.product(range(t + 1), repeat=4)
                    if sum(m) == t and not (m[0] and m[2]) and not (m[1] and m[3]))
        assert piece_dim(G, (t,)) == brute
    assert [piece_dim(G, (t,)) for t in range(5)] == [1, 4, 8, 12, 16]
    assert coarse_piece_dim(F, GradingMap.total(2), (2,), Box((0, 0), (2, 2))) == 8


def test_regrade_requires_block_merge():
    F = quotient_ring(R11, ["x1*y1"])
    with pytest.raises(ValueError):
        regrade_module(F, GradingMap([[1, 2]]))


@pytest.mark.parametrize("l", [0, 1])
def test_slice_matches_pieces(l):
    F = quotient_ring(R12, ["x1*y1 + x2*y2", "x1*y3"])
    for q in range(3):
        N = slice_module(F, l, q)
        for m in range(4):
            n = (q, m) if l == 0 else (m, q)
            assert piece_dim(N, (m,)) == piece_dim(F, n)


def test_slice_needs_two_blocks():
    with pytest.raises(ValueError):
        slice_module(quotient_ring(RingSpec((3,)), ["x1"]), 0, 1)


def test_multiplication_surjective_on_free_module():
    F = Presentation.free(R11, [(0, 0)])
    M = multiplication_matrix(F, (1, 0), (1, 2))
    assert rank(dense_to_sparse(M), R11.prime) == piece_dim(F, (2, 2))

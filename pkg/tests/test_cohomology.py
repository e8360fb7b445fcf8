import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from mgreg.algebra import RingSpec, irrelevant_ideal, maximal_ideal
from mgreg.cohomology import (NotStabilized, a_star_components, a_star_vector, h0_exact, hb_piece,
                              hm_piece, kunneth_dim, local_cohomology_all, local_cohomology_piece,
                              localization_piece, sheaf_cohomology_piece)
from mgreg.degrees import Box
from mgreg.modules import Presentation, piece_dim, quotient_ring

from oracles import kunneth_brute, torsion_count

P11 = RingSpec((2, 2))
P12 = RingSpec((2, 3))


@pytest.mark.parametrize("ring", [P11, P12, RingSpec((1, 2, 2))])
def test_kunneth_against_laurent_count(ring):
    box = Box.cube(-4, 3, ring.k) if ring.k == 2 else Box.cube(-3, 1, 3)
    for n in box:
        for i in range(ring.dim_x + 1):
            assert kunneth_dim(ring, i, n) == kunneth_brute(ring.block_sizes, i, n)


@pytest.mark.parametrize("ring", [P11, P12])
def test_free_module_sheaf_cohomology_is_kunneth(ring):
    S = Presentation.free(ring, [(0, 0)])
    for n in Box.cube(-4, 2, 2) if ring.nvars == 4 else Box((-4, -4), (0, 1)):
        for i in range(ring.dim_x + 1):
            assert sheaf_cohomology_piece(S, i, n) == kunneth_dim(ring, i, n)
        assert hb_piece(S, 0, n) == 0 and hb_piece(S, 1, n) == 0


def test_twisted_free_module():
    F = Presentation.free(P11, [(1, 2)])
    for n in Box.cube(-3, 3, 2):
        m = (n[0] - 1, n[1] - 2)
        assert sheaf_cohomology_piece(F, 1, n) == kunneth_dim(P11, 1, m)


def test_duality_route_agrees_with_cech(koszul):
    M = maximal_ideal(P11)
    for n in Box.cube(-3, 1, 2):
        for i in range(5):
            assert hm_piece(koszul, i, n) == local_cohomology_piece(koszul, M, i, n)


def test_koszul_module_is_self_dual(koszul):
    # complete intersection of two (1,1) forms: H^2_M(F)_n = F_{-n}
    for n in Box.cube(-3, 1, 2):
        assert hm_piece(koszul, 2, n) == piece_dim(koszul, (-n[0], -n[1]))
        assert hm_piece(koszul, 0, n) == hm_piece(koszul, 1, n) == 0


def test_two_points():
    # ideal of ([1:0],[1:0]) and ([0:1],[0:1]): two reduced points
    F = quotient_ring(P11, ["x1*x2", "x1*y2", "x2*y1", "y1*y2"])
    for n in Box.cube(-2, 2, 2):
        assert sheaf_cohomology_piece(F, 0, n) == 2
        assert sheaf_cohomology_piece(F, 1, n) == 0
        assert sheaf_cohomology_piece(F, 2, n) == 0


def test_koszul_local_cohomology_values(koszul):
    B = irrelevant_ideal(P11)
    assert local_cohomology_all(koszul, B, (0, 0)).dims[:3] == [0, 1, 0]
    assert local_cohomology_all(koszul, B, (2, 0)).dims[:2] == [1, 0]
    assert local_cohomology_all(koszul, B, (-1, -1)).dims[:2] == [0, 2]
    for n in Box.cube(-2, 2, 2):
        assert sheaf_cohomology_piece(koszul, 0, n) == 2


mono = st.tuples(*[st.integers(0, 2)] * 4).filter(any)


@settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(mono, min_size=1, max_size=3))
def test_exact_torsion_against_monomial_count(gens):
    F = quotient_ring(P11, [P11.mono_str(g) for g in gens])
    B = irrelevant_ideal(P11)
    for n in Box((0, 0), (3, 3)):
        want = torsion_count(P11.block_sizes, gens, n)
        assert h0_exact(F, B, n) == want
        assert hb_piece(F, 0, n) == want


def test_a_star_vectors(koszul):
    assert a_star_vector(Presentation.free(P12, [(0, 0)])) == (-2, -3)
    assert a_star_vector(Presentation.free(P11, [(1, 1)])) == (-1, -1)
    assert a_star_vector(koszul) == (0, 0)
    comps = a_star_components(koszul)
    assert comps[(0, 2)] == 0 and comps[(0, 0)] is None


def test_localization():
    S = Presentation.free(RingSpec((1, 2)), [(0, 0)])
    assert localization_piece(S, (1, 0, 0), (-3, 2)) == 3
    assert localization_piece(S, (1, 0, 0), (0, -1)) == 0
    with pytest.raises(NotStabilized):
        localization_piece(Presentation.free(P11, [(0, 0)]), (1, 0, 0, 0), (0, 0))


def test_truncation_budget_exhausted(koszul):
    with pytest.raises(NotStabilized):
        local_cohomology_all(koszul, irrelevant_ideal(P11), (-2, -2), t_max=0)

from hypothesis import HealthCheck, given, settings, strategies as st

from mgreg.algebra import RingSpec, monomial_ideal_intersect, MonomialIdeal
from mgreg.degrees import Box
from mgreg.groebner import (FreeMod, apply_matrix, buchberger, elem_degree, gb_contains,
                            intersect_submodules, kernel_of_map, normal_form, saturate_mono,
                            syzygy_module)
from mgreg.linalg import Echelon, rank
from mgreg.modules import Presentation, piece_dim, piece_dim_gb, relation_span

R = RingSpec((2, 2))
F1 = FreeMod(R, [(0, 0)])
P = R.prime


def form(deg, coefs):
    monos = R.monomials(deg)
    return {(0, m): c % P for m, c in zip(monos, coefs) if c % P}


@st.composite
def ideals(draw):
    out = []
    for _ in range(draw(st.integers(1, 3))):
        deg = draw(st.sampled_from([(1, 0), (1, 1), (2, 1), (0, 2)]))
        n = len(R.monomials(deg))
        coefs = draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))
        f = form(deg, coefs)
        if f:
            out.append(f)
    return out or [form((1, 1), [1, 0, 0, 1])]


def in_span(v, gens, n):
    # linear algebra membership oracle in degree n
    basis = F1.basis(n)
    idx = {t: i for i, t in enumerate(basis)}
    e = Echelon(P)
    for w in relation_span(Presentation(F1, gens), n):
        e.add({idx[t]: c for t, c in w.items()})
    return e.contains({idx[t]: c for t, c in v.items()})


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideals())
def test_gb_elements_lie_in_ideal_and_reduce_generators(gens):
    G = buchberger(gens, F1)
    for g in G.elements:
        assert in_span(g, gens, elem_degree(F1, g))
    for f in gens:
        assert not normal_form(f, G)


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideals())
def test_standard_monomials_match_linear_algebra(gens):
    # a wrong Gröbner basis shows up as a wrong Hilbert function somewhere
    F = Presentation(F1, gens)
    for n in Box((0, 0), (3, 3)):
        assert piece_dim_gb(F, n) == piece_dim(F, n)


@settings(max_examples=20, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(ideals())
def test_kernel_is_kernel_with_right_dimension(cols):
    src = FreeMod(R, [elem_degree(F1, c) for c in cols])
    ker = kernel_of_map(cols, src, F1)
    for v in ker:
        assert not apply_matrix(cols, v, P)
    # the generators span the whole kernel in low degrees
    for n in Box((0, 0), (3, 3)):
        sb = src.basis(n)
        sidx = {t: i for i, t in enumerate(sb)}
        tb = {t: i for i, t in enumerate(F1.basis(n))}
        image = []
        for j, mono in sb:
            col = {}
            for (r, m), c in cols[j].items():
                key = tb[(r, tuple(a + b for a, b in zip(m, mono)))]
                col[key] = (col.get(key, 0) + c) % P
            image.append({k: c for k, c in col.items() if c})
        kdim = len(sb) - rank(image, P)
        spanned = []
        for v in ker:
            d = elem_degree(src, v)
            for mono in R.monomials(tuple(a - b for a, b in zip(n, d))):
                spanned.append({sidx[(j, tuple(a + b for a, b in zip(m, mono)))]: c for (j, m), c in v.items()})
        assert rank(spanned, P) == kdim


def test_schreyer_syzygy_of_koszul_pair():
    f, g = form((1, 1), [1, 0, 0, 0]), form((1, 1), [0, 0, 0, 1])  # x1y1, x2y2
    G = buchberger([f, g], F1)
    src, syz = syzygy_module(G)
    assert len(syz) == 1
    assert elem_degree(src, syz[0]) == (2, 2)
    assert not apply_matrix(G.elements, syz[0], P)


def test_saturation_by_monomial():
    x1y1, x2y2 = form((1, 1), [1, 0, 0, 0]), form((1, 1), [0, 0, 0, 1])
    G = saturate_mono([x1y1, x2y2], F1, (1, 1, 0, 0))
    y1, y2 = form((0, 1), [1, 0]), form((0, 1), [0, 1])
    assert gb_contains(G, y1) and gb_contains(G, y2)
    assert not gb_contains(G, form((1, 0), [1, 0]))


def test_intersection_of_monomial_submodules():
    A = MonomialIdeal(R, [(1, 0, 1, 0), (0, 1, 0, 0)])
    B = MonomialIdeal(R, [(2, 0, 0, 0), (0, 0, 0, 1)])
    want = monomial_ideal_intersect(A, B)
    gens = intersect_submodules([{(0, m): 1} for m in A.generators],
                                [{(0, m): 1} for m in B.generators], F1)
    G = buchberger(gens, F1)
    for m in want.generators:
        assert gb_contains(G, {(0, m): 1})
    for g in G.elements:
        assert all(m in want for (_, m) in g)

"""Graded local cohomology, Ext against S, and sheaf cohomology.

``H^i_M`` is read off ``Ext^{d-i}(F, S)`` by graded local duality.  Supports
in any other monomial ideal go through a truncated Čech complex whose stage
``t`` uses the pieces ``(F/(R : g^inf))_{n + t deg g}``; a stage is accepted
once the next one has the same cohomology and the inclusion between them is
an isomorphism on cohomology.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .algebra import MonomialIdeal, RingSpec, irrelevant_ideal, maximal_ideal, mono_divides
from .degrees import MDeg, add, join, smul, sub
from .groebner import (FreeMod, GBasis, buchberger, elem_degree, intersect_submodules,
                       kernel_of_map, normal_form, saturate_mono)
from .linalg import Echelon, nullspace, rank
from .modules import Presentation, piece_dim
from .resolution import Resolution, free_resolution, piece_matrix

DEFAULT_TMAX = 10


class NotStabilized(RuntimeError):
    def __init__(self, t_max: int, what: str = ""):
        super().__init__("truncation did not stabilize by t=%d%s" % (t_max, (" (%s)" % what) if what else ""))
        self.t_max = t_max


# ---------------------------------------------------------------- Ext / duality

class ExtData:
    """``Ext^j(F, S)`` from the dual of a minimal resolution.

    ``duals[j]`` is ``Hom(G_j, S)`` (shifts negated) and ``transposes[j]``
    holds the images of its basis under the transpose of ``d_{j+1}``.
    """

    def __init__(self, F: Presentation, res: Resolution | None = None):
        self.F = F
        self.res = res if res is not None else free_resolution(F)
        ring = F.ring
        self.ring = ring
        R = self.res
        self.duals = [FreeMod(ring, [tuple(-x for x in s) for s in G.shifts]) for G in R.modules]
        self.transposes = []
        for j in range(len(R.modules)):
            cols: list = [{} for _ in range(R.modules[j].rank)]
            if j < R.length:
                for c, col in enumerate(R.maps[j]):
                    for (r, m), x in col.items():
                        cols[r][(c, m)] = x
            self.transposes.append(cols)
        self._gens: dict = {}

    @property
    def top(self) -> int:
        return self.res.length

    def _rank_T(self, j: int, n) -> int:
        # rank of the transpose of d_{j+1} at degree n (source Hom(G_j,S))
        if j < 0 or j >= self.res.length:
            return 0
        m, _, _ = piece_matrix(self.transposes[j], self.duals[j], self.duals[j + 1], n)
        return rank(m, self.ring.prime)

    def piece_dim(self, j: int, n: Sequence[int]) -> int:
        if j < 0 or j > self.top or not self.res.modules[0].rank:
            return 0
        n = tuple(n)
        return self.duals[j].dim(n) - self._rank_T(j, n) - self._rank_T(j - 1, n)

    def kernel_generators(self, j: int) -> list:
        G = self.duals[j]
        if j >= self.res.length:
            return [G.gen(r) for r in range(G.rank)]
        tgt = self.duals[j + 1]
        return kernel_of_map(self.transposes[j], G, tgt)

    def image_generators(self, j: int) -> list:
        if j == 0:
            return []
        return [c for c in self.transposes[j - 1] if c]

    def minimal_generator_degrees(self, j: int) -> list[MDeg]:
        """Degrees (with multiplicity) of a minimal generating set of Ext^j."""
        if j in self._gens:
            return self._gens[j]
        if j < 0 or j > self.top or not self.res.modules[0].rank:
            self._gens[j] = []
            return []
        G = self.duals[j]
        p = self.ring.prime
        kers = [v for v in self.kernel_generators(j) if v]
        ims = self.image_generators(j)
        items = sorted(((elem_degree(G, v), i, v) for i, v in enumerate(kers)),
                       key=lambda t: (sum(t[0]), t[0], t[1]))
        im_items = [(elem_degree(G, v), v) for v in ims]
        kept: list = []
        out = []
        cur, ech, index = None, None, {}
        for deg, _, v in items:
            if deg != cur:
                cur = deg
                index = {t: a for a, t in enumerate(G.basis(deg))}
                ech = Echelon(p)
                for kd, kv in kept + im_items:
                    for mono in self.ring.monomials(sub(deg, kd)):
                        ech.add(_shift_vec(kv, mono, index, p))
            if ech.add(_shift_vec(v, self.ring.one, index, p)) is None:
                kept.append((deg, v))
                out.append(deg)
        self._gens[j] = out
        return out


def _shift_vec(v: dict, mono, index: dict, p: int) -> dict:
    return {index[(r, tuple(a + b for a, b in zip(m, mono)))]: c % p for (r, m), c in v.items()}


_EXT_CACHE: dict = {}


def ext_presentations(F: Presentation) -> ExtData:
    key = id(F)
    hit = _EXT_CACHE.get(key)
    if hit is None or hit[0] is not F:
        hit = (F, ExtData(F))
        _EXT_CACHE[key] = hit
    return hit[1]


def hm_piece(F: Presentation, i: int, n: Sequence[int]) -> int:
    """``dim H^i_M(F)_n = dim Ext^{d-i}(F, S)_{-n-d}``."""
    ring = F.ring
    m = tuple(-a - b for a, b in zip(n, ring.dvec))
    return ext_presentations(F).piece_dim(ring.nvars - i, m)


def a_star_components(F: Presentation) -> dict:
    """``{(l, i): a_{l,i}}`` with None standing for minus infinity."""
    ring = F.ring
    E = ext_presentations(F)
    out = {}
    for i in range(ring.nvars + 1):
        gens = E.minimal_generator_degrees(ring.nvars - i)
        for l in range(ring.k):
            out[(l, i)] = (-ring.dvec[l] - min(g[l] for g in gens)) if gens else None
    return out


def a_star_vector(F: Presentation) -> tuple:
    """``a^*(F)``; entries are None (minus infinity) for the zero module."""
    comps = a_star_components(F)
    out = []
    for l in range(F.ring.k):
        vals = [v for (l2, _), v in comps.items() if l2 == l and v is not None]
        out.append(max(vals) if vals else None)
    return tuple(out)


# ---------------------------------------------------------------- Čech

class _Saturated:
    """``F' = S^r/(R : g^inf)`` with a Gröbner basis and standard monomials."""

    def __init__(self, F: Presentation, g):
        self.F = F
        self.target = F.target
        if any(g):
            self.gb = saturate_mono(list(F.relations), F.target, g)
        else:
            self.gb = F.gb
        self.leads = self.gb.leads()
        self._bases: dict = {}

    def basis(self, n: MDeg) -> tuple[list, dict]:
        hit = self._bases.get(n)
        if hit is None:
            b = [t for t in self.target.basis(n)
                 if not any(r == t[0] and mono_divides(m, t[1]) for r, m in self.leads)]
            hit = (b, {t: a for a, t in enumerate(b)})
            self._bases[n] = hit
        return hit

    def coords(self, v: dict, n: MDeg) -> dict:
        _, idx = self.basis(n)
        if len(v) == 1:
            # a standard monomial is its own coordinate
            (t, c), = v.items()
            a = idx.get(t)
            if a is not None:
                return {a: c % self.F.ring.prime}
        return {idx[t]: c for t, c in normal_form(v, self.gb).items()}


def _support(m) -> tuple:
    return tuple(1 if e else 0 for e in m)


def _radical_generators(U: MonomialIdeal) -> list:
    sup = sorted({_support(g) for g in U.generators})
    keep = [s for s in sup if not any(t != s and mono_divides(t, s) for t in sup)]
    return keep


@dataclass
class CechResult:
    dims: list
    t_used: int


def _start_stage(F: Presentation, dg: MDeg, n: MDeg) -> int:
    base = [0] * F.ring.k
    for d in list(F.target.shifts) + list(F.relation_degrees):
        base = [max(x, y) for x, y in zip(base, d)]
    t0 = 1
    for l, e in enumerate(dg):
        if e > 0:
            t0 = max(t0, -(-(base[l] + 1 - n[l]) // e))
    return t0


class _Cech:
    def __init__(self, F: Presentation, U: MonomialIdeal):
        self.F = F
        self.ring = F.ring
        gens = _radical_generators(U)
        self.gens = gens
        self.subsets = [list(itertools.combinations(range(len(gens)), j)) for j in range(len(gens) + 1)]
        self.g: dict = {}
        for level in self.subsets:
            for s in level:
                m = tuple(0 for _ in range(self.ring.nvars))
                for a in s:
                    m = tuple(max(x, y) for x, y in zip(m, gens[a]))
                self.g[s] = m
        self._sat: dict = {}

    def start_stage(self, n: MDeg) -> int:
        """First stage at which every localized summand sits above the
        degrees of the generators and relations of F."""
        t0 = 1
        for g in self.g.values():
            t0 = max(t0, _start_stage(self.F, self.ring.degree(g), n))
        return t0

    def sat(self, g) -> _Saturated:
        hit = self._sat.get(g)
        if hit is None:
            hit = _Saturated(self.F, g)
            self._sat[g] = hit
        return hit

    def _deg(self, s, n, t) -> MDeg:
        return add(n, smul(t, self.ring.degree(self.g[s])))

    def stage(self, n: MDeg, t: int):
        """Bases and differentials of E(t) at degree n."""
        p = self.ring.prime
        degs = {s: self._deg(s, n, t) for level in self.subsets for s in level}
        offsets, dims = [], []
        for level in self.subsets:
            off, tot = {}, 0
            for s in level:
                off[s] = tot
                tot += len(self.sat(self.g[s]).basis(degs[s])[0])
            offsets.append(off)
            dims.append(tot)
        diffs = []
        for j in range(len(self.subsets) - 1):
            cols = []
            for s in self.subsets[j]:
                base, _ = self.sat(self.g[s]).basis(degs[s])
                faces = []
                for b in range(len(self.gens)):
                    if b in s:
                        continue
                    tau = tuple(sorted(s + (b,)))
                    sign = -1 if tau.index(b) % 2 else 1
                    q = tuple(t * (x - y) for x, y in zip(self.g[tau], self.g[s]))
                    sat = self.sat(self.g[tau])
                    faces.append((sign, q, sat, sat.basis(degs[tau])[1], degs[tau], offsets[j + 1][tau]))
                for (r, m) in base:
                    col: dict = {}
                    for sign, q, sat, idx, dt, off in faces:
                        key = (r, tuple(x + y for x, y in zip(m, q)))
                        a = idx.get(key)
                        if a is not None:
                            image = ((a, 1),)
                        else:
                            image = sat.coords({key: 1}, dt).items()
                        for a, c in image:
                            col[off + a] = (col.get(off + a, 0) + sign * c) % p
                    cols.append({a: c for a, c in col.items() if c})
            diffs.append(cols)
        return dims, diffs, offsets

    def inclusion(self, n: MDeg, t: int, j: int, offs_t, offs_t1) -> list:
        """Images of the basis of E(t)^j in E(t+1)^j (multiplication by g_s)."""
        out = []
        for s in self.subsets[j]:
            sat = self.sat(self.g[s])
            base, _ = sat.basis(self._deg(s, n, t))
            off = offs_t1[j][s]
            for (r, m) in base:
                v = {(r, tuple(x + y for x, y in zip(m, self.g[s]))): 1}
                out.append({off + a: c for a, c in sat.coords(v, self._deg(s, n, t + 1)).items()})
        return out


def _cohomology(dims, diffs, p):
    ranks = [rank(d, p) for d in diffs]
    h = []
    for j in range(len(dims)):
        r_out = ranks[j] if j < len(ranks) else 0
        r_in = ranks[j - 1] if j >= 1 else 0
        h.append(dims[j] - r_out - r_in)
    return h, ranks


def _inclusion_iso(C: _Cech, n, t, st0, st1, h0) -> bool:
    p = C.ring.prime
    dims0, diffs0, offs0 = st0
    dims1, diffs1, offs1 = st1
    for j in range(len(dims0)):
        if h0[j] == 0:
            continue
        inc = C.inclusion(n, t, j, offs0, offs1)
        # cycles of E(t)^j
        if j < len(diffs0):
            Z = [_combine(inc, z, p) for z in nullspace(diffs0[j], p)]
        else:
            Z = inc
        B1 = _boundaries(diffs1, j, dims1)
        B0 = _boundaries(diffs0, j, dims0)
        e = Echelon(p)
        for v in B1:
            e.add(v)
        rb1 = e.rank
        for v in Z:
            e.add(v)
        zdim = rank(Z, p)
        rb0 = rank(B0, p)
        if e.rank - rb1 != zdim - rb0:
            return False
    return True


def _combine(vectors: list, coeffs: dict, p: int) -> dict:
    out: dict = {}
    for a, c in coeffs.items():
        for k, x in vectors[a].items():
            w = (out.get(k, 0) + c * x) % p
            if w:
                out[k] = w
            else:
                out.pop(k, None)
    return out


def _boundaries(diffs, j, dims):
    if j == 0:
        return []
    return [c for c in diffs[j - 1] if c]


_CECH_CACHE: dict = {}


def _cech_for(F: Presentation, U: MonomialIdeal) -> _Cech:
    key = (id(F), U.generators)
    hit = _CECH_CACHE.get(key)
    if hit is None or hit[0] is not F:
        hit = (F, _Cech(F, U))
        _CECH_CACHE[key] = hit
    return hit[1]


def local_cohomology_all(F: Presentation, U: MonomialIdeal, n: Sequence[int],
                         t_max: int = DEFAULT_TMAX) -> CechResult:
    """``[dim H^i_U(F)_n for i = 0..r]`` from one Čech complex (r = number
    of radical generators of U)."""
    n = tuple(n)
    if U.is_zero():
        return CechResult([piece_dim(F, n)], 0)
    C = _cech_for(F, U)
    memo = getattr(C, "_memo", None)
    if memo is None:
        memo = C._memo = {}
    key = (n, t_max)
    if key in memo:
        return memo[key]
    p = F.ring.prime
    t0 = C.start_stage(n)
    prev = C.stage(n, t0)
    h_prev, _ = _cohomology(prev[0], prev[1], p)
    for t in range(t0, t0 + t_max):
        cur = C.stage(n, t + 1)
        h_cur, _ = _cohomology(cur[0], cur[1], p)
        if h_cur == h_prev and _inclusion_iso(C, n, t, prev, cur, h_prev):
            res = CechResult(h_prev, t)
            memo[key] = res
            return res
        prev, h_prev = cur, h_cur
    raise NotStabilized(t_max, "degree %r" % (n,))


def local_cohomology_piece(F: Presentation, U: MonomialIdeal, i: int, n: Sequence[int],
                           t_max: int = DEFAULT_TMAX) -> int:
    res = local_cohomology_all(F, U, n, t_max)
    return res.dims[i] if 0 <= i < len(res.dims) else 0


def localization_piece(F: Presentation, g, n: Sequence[int], t_max: int = DEFAULT_TMAX) -> int:
    """``dim (F_g)_n`` for a monomial ``g`` (exponent tuple)."""
    if t_max < 2:
        raise ValueError("t_max must be at least 2")
    n = tuple(n)
    if not any(g):
        return piece_dim(F, n)
    sat = _Saturated(F, _support(g))
    dg = F.ring.degree(g)
    t0 = _start_stage(F, dg, n)
    dims = [len(sat.basis(add(n, smul(t, dg)))[0]) for t in range(t0, t0 + t_max + 1)]
    for t in range(t_max - 1):
        if dims[t] == dims[t + 1] == dims[t + 2]:
            # g acts injectively on F', so equal dims mean the maps are onto
            return dims[t]
    raise NotStabilized(t_max, "localization at degree %r" % (n,))


def hb_piece(F: Presentation, i: int, n: Sequence[int], t_max: int = DEFAULT_TMAX) -> int:
    ring = F.ring
    if i > ring.dim_x + 1 or i < 0:
        return 0
    return local_cohomology_piece(F, irrelevant_ideal(ring), i, n, t_max)


def hb_t_used(F: Presentation, n: Sequence[int], t_max: int = DEFAULT_TMAX) -> int:
    return local_cohomology_all(F, irrelevant_ideal(F.ring), n, t_max).t_used


def sheaf_cohomology_piece(F: Presentation, i: int, n: Sequence[int], t_max: int = DEFAULT_TMAX) -> int:
    """``h^i(X, F~(n))`` through the local cohomology exact sequence."""
    if i < 0:
        raise ValueError("cohomological index must be nonnegative")
    if i >= 1:
        return hb_piece(F, i + 1, n, t_max)
    return piece_dim(F, n) - hb_piece(F, 0, n, t_max) + hb_piece(F, 1, n, t_max)


def _h_proj(N: int, j: int, a: int) -> int:
    if N == 0:
        # a point: O(a) is trivial for every a
        return 1 if j == 0 else 0
    if j == 0:
        return comb(a + N, N) if a >= 0 else 0
    if j == N:
        return comb(-a - 1, N) if a <= -N - 1 else 0
    return 0


def kunneth_dim(ring: RingSpec, i: int, n: Sequence[int]) -> int:
    """``h^i(X, O_X(n))`` by the Künneth formula."""
    Ns = [b - 1 for b in ring.block_sizes]
    total = 0
    for choice in itertools.product(*[sorted({0, N}) for N in Ns]):
        if sum(choice) != i:
            continue
        prod = 1
        for N, j, a in zip(Ns, choice, n):
            prod *= _h_proj(N, j, a)
            if not prod:
                break
        total += prod
    return total


# ---------------------------------------------------------------- torsion

def torsion_relations(F: Presentation, U: MonomialIdeal) -> list:
    """Generators of ``R : U^inf``, the preimage of ``H^0_U(F)`` in the free
    module."""
    rels = list(F.relations)
    out = None
    for g in _radical_generators(U):
        G = saturate_mono(rels, F.target, g).elements if rels else []
        out = G if out is None else intersect_submodules(out, G, F.target)
        if not out:
            break
    return out or []


def h0_exact(F: Presentation, U: MonomialIdeal, n: Sequence[int], sat: Presentation | None = None) -> int:
    """``dim H^0_U(F)_n`` exactly, as ``dim F_n - dim (S^r/(R:U^inf))_n``."""
    if sat is None:
        sat = Presentation(F.target, torsion_relations(F, U))
    return piece_dim(F, n) - piece_dim(sat, n)


@dataclass
class CohTable:
    rows: list = field(default_factory=list)

    def add(self, ideal: str, i: int, n: Sequence[int], dim: int, t_used: int | None) -> None:
        self.rows.append({"ideal": ideal, "i": i, "n": list(n), "dim": dim, "t_used": t_used})

    def to_json(self) -> list:
        return sorted(self.rows, key=lambda r: (r["ideal"], r["i"], r["n"]))

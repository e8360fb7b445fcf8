"""Regularity regions, fiber a* bounds and box verification of vanishing
statements.

Grid cells are three-valued.  A cell is a Member only when every required
vanishing is either computed inside the box or covered by a proven vanishing
region; otherwise it is Unverified.  Degree-0 local cohomology is always
decided exactly (through saturation), so its witnesses may lie outside the box.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import (all_ideal_pairs, block_ideal, ideal_family, ideal_label,
                      irrelevant_ideal)
from .cohomology import (DEFAULT_TMAX, a_star_vector, local_cohomology_all,
                         sheaf_cohomology_piece, torsion_relations)
from .degrees import Box, MDeg, Region, add, geq, join, kset_enumerate, sgn, smul, sub, unit
from .groebner import FreeMod, buchberger, elem_degree, gb_contains, kernel_of_map
from .linalg import rank
from .modules import Presentation, multiplication_matrix, piece_dim, slice_module
from .resolution import free_resolution, proj_dim, res_reg_vector

MEMBER, NONMEMBER, UNVERIFIED = "Member", "NonMember", "Unverified"
PASS, FAIL, UNV = "PASS", "FAIL", "UNVERIFIED"


# ---------------------------------------------------------------- helpers

def shift_vectors(i: int, k: int) -> list[MDeg]:
    """The offsets ``sgn(1-i) p`` for ``p`` in ``[1-i]_k``."""
    s = sgn(1 - i)
    return [smul(s, p) for p in kset_enumerate(1 - i, k)]


def _grid_values(b: int, extra: Iterable[int]) -> list[int]:
    return sorted({b} | {v for v in extra if v > b})


def orthant_outside_box_covered(b: Sequence[int], box: Box, cover: Region | None) -> bool:
    """Is ``(b + N^k) minus box`` contained in the upper set ``cover``?

    Decided on the grid of critical coordinates: every point of the orthant
    rounds down to a grid point with the same box and cover membership.
    """
    k = len(b)
    gens = cover.generators if cover is not None else ()
    axes = []
    for l in range(k):
        extra = [box.lo[l], box.hi[l] + 1] + [g[l] for g in gens]
        axes.append(_grid_values(b[l], extra))
    for x in itertools.product(*axes):
        if x in box:
            continue
        if cover is None or x not in cover:
            return False
    return True


# ---------------------------------------------------------------- context

class RegContext:
    """Per-module data shared by the grid and the verifiers."""

    def __init__(self, F: Presentation, box: Box, t_max: int = DEFAULT_TMAX):
        if F.target.rank == 0:
            raise ValueError("zero module has no regularity data")
        self.F = F
        self.ring = F.ring
        self.k = F.ring.k
        self.box = box
        self.t_max = t_max
        self.res = free_resolution(F)
        self.rr = res_reg_vector(self.res)
        self.delta = proj_dim(self.res)
        self.astar = a_star_vector(F)
        self.B = irrelevant_ideal(self.ring)
        self.D = self.ring.dim_x
        self._hb: dict = {}
        self._torsion = None

    # B-local cohomology inside the box
    def hb(self, i: int, n: MDeg) -> int:
        if i > self.D + 1:
            return 0
        res = self._hb.get(n)
        if res is None:
            res = local_cohomology_all(self.F, self.B, n, self.t_max)
            self._hb[n] = res
        return res.dims[i] if i < len(res.dims) else 0

    def hb_t(self, n: MDeg) -> int:
        self.hb(0, n)
        return self._hb[n].t_used

    # exact torsion H^0_B
    @property
    def torsion(self):
        if self._torsion is None:
            F = self.F
            sat = torsion_relations(F, self.B)
            extra = [v for v in sat if not gb_contains(F.gb, v)]
            pres = Presentation(F.target, sat)
            top = None
            for v in extra:
                d = elem_degree(F.target, v)
                top = d if top is None else join(top, d)
            self._torsion = (pres, top)
        return self._torsion

    def h0(self, n: MDeg) -> int:
        pres, top = self.torsion
        if top is None:
            return 0
        return piece_dim(self.F, n) - piece_dim(pres, n)

    def h0_first_nonzero(self, b: MDeg):
        """First degree in ``b + N^k`` where H^0_B is nonzero, or None."""
        _, top = self.torsion
        if top is None:
            return None
        hi = join(b, top)
        for n in sorted(Box(tuple(b), hi), key=lambda x: (sum(x), x)):
            if self.h0(n):
                return n
        return None

    # guarantee regions
    def inner_region(self) -> Region:
        return reg_inner_region_from(self.rr, self.delta, self.k)

    def guarantee(self, i: int) -> Region:
        gens = [add(self.astar, (1,) * self.k)]
        if i >= 1:
            base = add(self.rr, (self.delta,) * self.k)
            for q in kset_enumerate(self.delta, self.k):
                for s in shift_vectors(i, self.k):
                    gens.append(add(sub(base, q), s))
        return Region(gens, k=self.k)


_CTX: dict = {}


def context(F: Presentation, box: Box, t_max: int = DEFAULT_TMAX) -> RegContext:
    key = (id(F), box, t_max)
    hit = _CTX.get(key)
    if hit is None or hit[0] is not F:
        hit = (F, RegContext(F, box, t_max))
        _CTX[key] = hit
    return hit[1]


# ---------------------------------------------------------------- regions

def a_b_inner_region(F: Presentation) -> Region:
    a = a_star_vector(F)
    if any(x is None for x in a):
        raise ValueError("zero module")
    return Region([a])


def reg_inner_region_from(rr: MDeg, delta: int, k: int) -> Region:
    base = add(rr, (delta,) * k)
    return Region([sub(base, q) for q in kset_enumerate(delta, k)], k=k)


def reg_inner_region(F: Presentation) -> Region:
    res = free_resolution(F)
    rr = res_reg_vector(res)
    if rr is None:
        raise ValueError("zero module")
    return reg_inner_region_from(rr, proj_dim(res), F.ring.k)


# ---------------------------------------------------------------- m-regularity

@dataclass(frozen=True)
class Cell:
    status: str
    i: int | None = None
    p: MDeg | None = None
    degree: MDeg | None = None
    reason: str = ""

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.status == NONMEMBER:
            out["witness"] = {"i": self.i, "p": list(self.p), "degree": list(self.degree)}
        if self.reason:
            out["reason"] = self.reason
        return out


def _witnesses(ctx: RegContext, m: MDeg):
    """Nonvanishing witnesses for ``m``: the lowest one per (i, p) branch,
    plus whether some required degree escapes both box and guarantee."""
    k, box = ctx.k, ctx.box
    found = []
    escaped = ""
    for l in range(k):
        w = ctx.h0_first_nonzero(add(m, unit(k, l)))
        if w is not None:
            found.append((0, unit(k, l), w))
    for i in range(1, ctx.D + 2):
        cover = ctx.guarantee(i)
        for s in shift_vectors(i, k):
            b = add(m, s)
            lo = join(b, box.lo)
            if geq(box.hi, lo):
                for n in sorted(Box(lo, box.hi), key=lambda x: (sum(x), x)):
                    if ctx.hb(i, n):
                        found.append((i, tuple(abs(x) for x in s), n))
                        break
            if not escaped and not orthant_outside_box_covered(b, box, cover):
                escaped = "H^%d at degrees >= %s leave the box" % (i, list(b))
    found.sort(key=lambda w: (sum(w[2]), w[2], w[0], w[1]))
    return found, escaped


def _check_m(ctx: RegContext, m: MDeg) -> Cell:
    found, escaped = _witnesses(ctx, m)
    if found:
        i, p, n = found[0]
        return Cell(NONMEMBER, i, p, n)
    if escaped:
        return Cell(UNVERIFIED, reason=escaped)
    return Cell(MEMBER)


def witness_indices(F: Presentation, m: Sequence[int], box: Box, t_max: int = DEFAULT_TMAX) -> list:
    """Every cohomological index i with a nonvanishing witness against ``m``."""
    found, _ = _witnesses(context(F, box, t_max), tuple(m))
    return sorted({w[0] for w in found})


def is_m_regular(F: Presentation, m: Sequence[int], box: Box, t_max: int = DEFAULT_TMAX) -> Cell:
    return _check_m(context(F, box, t_max), tuple(m))


@dataclass
class RegGrid:
    box: Box
    cells: dict
    inner_region: Region
    inner_violations: list = field(default_factory=list)

    def members(self) -> list:
        return sorted(m for m, c in self.cells.items() if c.status == MEMBER)

    def status(self, m) -> str:
        return self.cells[tuple(m)].status

    def to_json(self) -> dict:
        return {
            "box": {"lo": list(self.box.lo), "hi": list(self.box.hi)},
            "cells": [{"m": list(m), **self.cells[m].to_json()} for m in sorted(self.cells)],
            "inner_region": self.inner_region.to_json(),
            "inner_violations": [list(m) for m in self.inner_violations],
        }

    def ascii(self) -> str:
        """Two-block grids as a table (first coordinate down, second across)."""
        if self.box.k != 2:
            return "\n".join("%s %s" % (list(m), self.cells[m].status) for m in sorted(self.cells))
        sym = {MEMBER: "#", NONMEMBER: ".", UNVERIFIED: "?"}
        lo, hi = self.box.lo, self.box.hi
        rows = ["     " + "".join("%4d" % b for b in range(lo[1], hi[1] + 1))]
        for a in range(hi[0], lo[0] - 1, -1):
            rows.append("%4d " % a + "".join("%4s" % sym[self.cells[(a, b)].status]
                                             for b in range(lo[1], hi[1] + 1)))
        return "\n".join(rows)


def reg_grid(F: Presentation, box: Box, t_max: int = DEFAULT_TMAX) -> RegGrid:
    ctx = context(F, box, t_max)
    cells = {m: _check_m(ctx, m) for m in box}
    inner = ctx.inner_region()
    bad = [m for m in sorted(cells) if m in inner and cells[m].status != MEMBER]
    return RegGrid(box, cells, inner, bad)


# ---------------------------------------------------------------- fiber a*

@dataclass
class FiberBounds:
    block: int
    upper: int | None
    lower: int | None = None
    lower_source: str = ""
    estimate: int | None = None
    exact: int | None = None
    exact_source: str = ""
    seed: int = 0
    samples: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "block": self.block + 1,
            "upper": _num(self.upper),
            "lower": _num(self.lower),
            "lower_source": self.lower_source,
            "estimate": _num(self.estimate),
            "estimate_is_heuristic": True,
            "exact": _num(self.exact),
            "exact_source": self.exact_source,
            "seed": self.seed,
            "samples": [list(s) for s in self.samples],
        }


def _num(x):
    return "-inf" if x is None else x


def submodule_presentation(F: Presentation, gens: list) -> Presentation:
    """Presentation of the submodule of ``F`` generated by ``gens``."""
    G = F.target
    gens = [g for g in gens if g]
    if not gens:
        return Presentation(FreeMod(F.ring, []), [])
    rels = list(F.relations)
    cols = gens + rels
    src = FreeMod(F.ring, [elem_degree(G, c) for c in cols])
    ker = kernel_of_map(cols, src, G)
    s = len(gens)
    out = []
    for v in ker:
        w = {(j, m): c for (j, m), c in v.items() if j < s}
        if w:
            out.append(w)
    return Presentation(FreeMod(F.ring, src.shifts[:s]), out)


def _sheaf_nonzero(N: Presentation) -> bool:
    if N.target.rank == 0:
        return False
    if N.ring.k == 0:
        return True
    sat = torsion_relations(N, irrelevant_ideal(N.ring))
    G = buchberger(sat, N.target) if sat else None
    for r in range(N.target.rank):
        if G is None or not gb_contains(G, N.target.gen(r)):
            return True
    return False


def _fiber_lower_h0(F: Presentation, l: int, upper: int):
    """Largest q for which the block-l degree-q slice of H^0_{M_l}(F) has a
    nonzero sheaf on the other factors; a certified lower bound."""
    U = block_ideal(F.ring, l)
    sat = torsion_relations(F, U)
    extra = [v for v in sat if not gb_contains(F.gb, v)]
    if not extra:
        return None
    T = submodule_presentation(F, extra)
    lo = min(s[l] for s in T.target.shifts)
    for q in range(upper, lo - 1, -1):
        if _sheaf_nonzero(slice_module(T, l, q)):
            return q
    return None


def fiber_a_bounds(F: Presentation, l: int, seed: int = 0, samples: int = 8,
                   window: int = 6, t_max: int = DEFAULT_TMAX) -> FiberBounds:
    ring = F.ring
    if not 0 <= l < ring.k:
        raise ValueError("block index out of range")
    upper = a_star_vector(F)[l]
    fb = FiberBounds(l, upper, seed=seed)
    if upper is None:
        return fb
    if not F.relations:
        fb.exact = max(s[l] for s in F.target.shifts) - ring.dvec[l]
        fb.exact_source = "free module"
        fb.lower = fb.exact
        fb.lower_source = "free module"
        fb.estimate = fb.exact
        return fb
    if ring.k == 1:
        fb.exact, fb.exact_source = upper, "single block"
        fb.lower, fb.lower_source = upper, "single block"
        fb.estimate = upper
        return fb
    low = _fiber_lower_h0(F, l, upper)
    if low is not None:
        fb.lower, fb.lower_source = low, "H^0 of block-%d torsion" % (l + 1)
    if fb.lower == upper:
        fb.exact, fb.exact_source = upper, "bounds meet"
    # heuristic: top degree along block l of H^i_{M_l}(F) at random far-out
    # degrees of the other blocks
    rng = random.Random(seed)
    horizon = [0] * ring.k
    for d in list(F.target.shifts) + list(F.relation_degrees):
        horizon = [max(x, y) for x, y in zip(horizon, d)]
    U = block_ideal(ring, l)
    est = None
    for _ in range(samples):
        nh = [horizon[j] + 1 + rng.randint(0, 4) for j in range(ring.k)]
        fb.samples.append(tuple(nh[j] for j in range(ring.k) if j != l))
        for q in range(upper, upper - window - 1, -1):
            nh[l] = q
            if any(local_cohomology_all(F, U, tuple(nh), t_max).dims):
                est = q if est is None else max(est, q)
                break
    fb.estimate = est
    return fb


# ---------------------------------------------------------------- ci

def ci_d_vector(rows: Sequence[Sequence[int]]) -> MDeg:
    """``d_l = max over subsets J of (sum_{j in J} d_{jl}) - |J|``."""
    rows = [tuple(r) for r in rows]
    if not rows:
        raise ValueError("need at least one degree row")
    if any(x < 1 for r in rows for x in r):
        raise ValueError("every degree row must be >= 1 in each coordinate")
    k = len(rows[0])
    best = [0] * k
    for i in range(1, len(rows) + 1):
        for J in itertools.combinations(rows, i):
            for l in range(k):
                best[l] = max(best[l], sum(r[l] for r in J) - i)
    return tuple(best)


# ---------------------------------------------------------------- verifiers

@dataclass
class Report:
    theorem: str
    checks: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add(self, status: str, **data) -> None:
        self.checks.append({"status": status, **data})

    @property
    def counts(self) -> dict:
        c = {"pass": 0, "fail": 0, "unverified": 0}
        for row in self.checks:
            c[{"PASS": "pass", "FAIL": "fail", "UNVERIFIED": "unverified"}[row["status"]]] += 1
        return c

    def failures(self) -> list:
        return [r for r in self.checks if r["status"] == FAIL]

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "counts": self.counts, "notes": self.notes, "checks": self.checks}


def _ideal_pairs(k: int):
    for I, J in all_ideal_pairs(k):
        yield tuple(sorted(I)), tuple(sorted(J))


def _verify_a_inv_lemma(ctx: RegContext, rep: Report) -> None:
    F, k = ctx.F, ctx.k
    base = add(ctx.astar, (1,) * k)
    rep.notes["a_star"] = list(ctx.astar)
    for I, J in _ideal_pairs(k):
        U = ideal_family(F.ring, I, J)
        label = ideal_label(I, J, k)
        for n in ctx.box:
            if not geq(n, base):
                continue
            dims = local_cohomology_all(F, U, n, ctx.t_max).dims
            bad = [i for i, d in enumerate(dims) if d]
            rep.add(FAIL if bad else PASS, ideal=label, n=list(n),
                    **({"nonzero_i": bad} if bad else {}))


def _verify_2lemma(ctx: RegContext, rep: Report) -> None:
    F, k = ctx.F, ctx.k
    base = add(ctx.rr, (ctx.delta,) * k)
    rep.notes.update({"res_reg": list(ctx.rr), "proj_dim": ctx.delta})
    qs = kset_enumerate(ctx.delta, k)
    for I, J in _ideal_pairs(k):
        U = ideal_family(F.ring, I, J)
        label = ideal_label(I, J, k)
        top = len(local_cohomology_all(F, U, ctx.box.lo, ctx.t_max).dims)
        for i in range(top):
            starts = Region([add(sub(base, q), s) for q in qs for s in shift_vectors(i, k)], k=k)
            for n in ctx.box:
                if n not in starts:
                    continue
                d = local_cohomology_all(F, U, n, ctx.t_max).dims
                val = d[i] if i < len(d) else 0
                rep.add(FAIL if val else PASS, ideal=label, i=i, degree=list(n),
                        **({"dim": val} if val else {}))


def _verify_a_inv_bound(ctx: RegContext, rep: Report, seed: int) -> None:
    k = ctx.k
    base = add(ctx.astar, (1,) * k)
    rep.notes["a_star"] = list(ctx.astar)
    for n in ctx.box:
        if geq(n, base):
            bad = [i for i in range(ctx.D + 2) if ctx.hb(i, n)]
            rep.add(FAIL if bad else PASS, side="left", n=list(n),
                    **({"nonzero_i": bad} if bad else {}))
    exact = [fiber_a_bounds(ctx.F, l, seed=seed).exact for l in range(k)]
    if any(e is None for e in exact):
        rep.notes["right"] = "skipped: exact fiber values unavailable"
        return
    rep.notes["fiber_a_star"] = exact
    # outside a_F + N^k a point must fail the a_B membership: find H^i_B != 0
    # at some degree >= point + 1 inside the box
    for a in ctx.box:
        if geq(a, exact):
            continue
        lo = add(a, (1,) * k)
        found = None
        if geq(ctx.box.hi, lo):
            for n in Box(join(lo, ctx.box.lo), ctx.box.hi):
                if any(ctx.hb(i, n) for i in range(ctx.D + 2)):
                    found = n
                    break
        rep.add(PASS if found else UNV, side="right", a=list(a),
                **({"witness": list(found)} if found else {}))


def _verify_2regbound(ctx: RegContext, rep: Report, seed: int) -> None:
    inner = ctx.inner_region()
    rep.notes["inner_region"] = inner.to_json()
    for m in ctx.box:
        if m in inner:
            cell = _check_m(ctx, m)
            st = {MEMBER: PASS, NONMEMBER: FAIL, UNVERIFIED: UNV}[cell.status]
            rep.add(st, side="left", m=list(m), cell=cell.to_json())
    F = ctx.F
    if F.relations:
        rep.notes["right"] = "skipped: exact fiber values unavailable"
        return
    # free module: fiber a* is shift - d with r_l = d_l, so r^L is the top shift
    rL = tuple(max(s[l] for s in F.target.shifts) for l in range(ctx.k))
    rep.notes["r_L"] = list(rL)
    for m in ctx.box:
        cell = _check_m(ctx, m)
        if cell.status == MEMBER:
            rep.add(PASS if geq(m, rL) else FAIL, side="right", m=list(m))


def _verify_prop_reg_decomp(ctx: RegContext, rep: Report) -> None:
    """Evaluate the intersection formula through per-index vanishing sets
    and compare with the grid cell."""
    k, box = ctx.k, ctx.box

    def vanish_from(i: int, b: MDeg) -> str:
        # does H^i_B vanish on b + N^k ?
        if i == 0:
            return PASS if ctx.h0_first_nonzero(b) is None else FAIL
        lo = join(b, box.lo)
        if geq(box.hi, lo):
            if any(ctx.hb(i, n) for n in Box(lo, box.hi)):
                return FAIL
        return PASS if orthant_outside_box_covered(b, box, ctx.guarantee(i)) else UNV

    for m in box:
        verdicts = [vanish_from(i, add(m, s)) for i in range(ctx.D + 2) for s in shift_vectors(i, k)]
        formula = FAIL if FAIL in verdicts else (UNV if UNV in verdicts else PASS)
        cell = _check_m(ctx, m).status
        grid = {MEMBER: PASS, NONMEMBER: FAIL, UNVERIFIED: UNV}[cell]
        if UNV in (formula, grid):
            rep.add(UNV, m=list(m), grid=cell)
        else:
            rep.add(PASS if formula == grid else FAIL, m=list(m), grid=cell,
                    formula=MEMBER if formula == PASS else NONMEMBER)


def _verify_regvsfiber(ctx: RegContext, rep: Report, seed: int) -> None:
    rep.notes["res_reg"] = list(ctx.rr)
    for l in range(ctx.k):
        fb = fiber_a_bounds(ctx.F, l, seed=seed)
        r = ctx.rr[l]
        row = {"block": l + 1, "res_reg": r, "fiber": fb.to_json()}
        if fb.exact is not None:
            rep.add(PASS if r > fb.exact else FAIL, basis="exact", **row)
        elif fb.upper is not None and r > fb.upper:
            rep.add(PASS, basis="upper", **row)
        elif fb.lower is not None and fb.lower >= r:
            rep.add(FAIL, basis="lower", **row)
        else:
            rep.add(UNV, basis="estimate only", **row)


def _verify_global_gen(ctx: RegContext, rep: Report) -> None:
    F, k, box = ctx.F, ctx.k, ctx.box
    rep.notes["res_reg"] = list(ctx.rr)
    p = F.ring.prime
    for m in box:
        if not geq(m, ctx.rr):
            continue
        h0, h1 = ctx.h0(m), ctx.hb(1, m)
        rep.add(PASS if h0 == 0 and h1 == 0 else FAIL, part="sections", m=list(m),
                dim_F=piece_dim(F, m), h0_sheaf=piece_dim(F, m) - h0 + h1)
        for n in Box((0,) * k, sub(box.hi, m)) if geq(box.hi, m) else []:
            M = multiplication_matrix(F, m, n)
            target = piece_dim(F, add(m, n))
            r = rank([{j: x for j, x in enumerate(row) if x} for row in M], p) if M else 0
            rep.add(PASS if r == target else FAIL, part="multiplication", m=list(m), n=list(n))


def _verify_projection(ctx: RegContext, rep: Report, seed: int) -> None:
    F, k = ctx.F, ctx.k
    if k < 2:
        rep.notes["skipped"] = "needs at least two blocks"
        return
    for l in range(k):
        fb = fiber_a_bounds(F, l, seed=seed)
        if fb.exact is None:
            rep.notes["block %d" % (l + 1)] = "skipped: exact fiber value unavailable"
            continue
        for m in ctx.box:
            if m[l] <= fb.exact:
                continue
            N = slice_module(F, l, m[l])
            mh = tuple(x for j, x in enumerate(m) if j != l)
            for i in range(ctx.D + 1):
                a = sheaf_cohomology_piece(F, i, m, ctx.t_max)
                b = sheaf_cohomology_piece(N, i, mh, ctx.t_max) if N.target.rank else 0
                rep.add(PASS if a == b else FAIL, block=l + 1, i=i, m=list(m), full=a, projected=b)


THEOREMS = ("a-inv-lemma", "2lemma", "a-inv-bound", "2regbound", "prop-reg-decomp",
            "regvsfiber", "global-gen", "projection")


def verify_theorem(theorem: str, F: Presentation, box: Box, t_max: int = DEFAULT_TMAX,
                   seed: int = 0) -> Report:
    if theorem not in THEOREMS:
        raise ValueError("unknown theorem id %r" % theorem)
    ctx = context(F, box, t_max)
    rep = Report(theorem)
    if theorem == "a-inv-lemma":
        _verify_a_inv_lemma(ctx, rep)
    elif theorem == "2lemma":
        _verify_2lemma(ctx, rep)
    elif theorem == "a-inv-bound":
        _verify_a_inv_bound(ctx, rep, seed)
    elif theorem == "2regbound":
        _verify_2regbound(ctx, rep, seed)
    elif theorem == "prop-reg-decomp":
        _verify_prop_reg_decomp(ctx, rep)
    elif theorem == "regvsfiber":
        _verify_regvsfiber(ctx, rep, seed)
    elif theorem == "global-gen":
        _verify_global_gen(ctx, rep)
    else:
        _verify_projection(ctx, rep, seed)
    return rep

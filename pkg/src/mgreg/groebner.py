"""Gröbner bases for submodules of multigraded free modules.

Elements of a free module are sparse dicts ``{(position, monomial): coef}``.
The module order is position-over-term: a smaller position index is larger,
and within a position monomials compare in degrevlex.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import RingSpec, grevlex_key, mono_div, mono_divides, mono_lcm, mono_mul
from .degrees import MDeg, add
from .linalg import inv


@dataclass(frozen=True)
class FreeMod:
    """Free module ``sum_r S(-shift_r)``; generator r sits in degree ``shifts[r]``."""

    ring: RingSpec
    shifts: tuple

    def __init__(self, ring: RingSpec, shifts: Iterable[Sequence[int]]):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "shifts", tuple(tuple(int(x) for x in s) for s in shifts))
        if any(len(s) != ring.k for s in self.shifts):
            raise ValueError("shift length must equal block count %d" % ring.k)

    @property
    def rank(self) -> int:
        return len(self.shifts)

    def basis(self, n: Sequence[int]) -> list[tuple]:
        """Monomial basis ``(r, mono)`` of the degree-``n`` piece."""
        out = []
        for r, s in enumerate(self.shifts):
            m = tuple(a - b for a, b in zip(n, s))
            out.extend((r, mono) for mono in self.ring.monomials(m))
        return out

    def dim(self, n: Sequence[int]) -> int:
        return sum(self.ring.dim_piece(tuple(a - b for a, b in zip(n, s))) for s in self.shifts)

    def gen(self, r: int) -> dict:
        return {(r, self.ring.one): 1}


def term_key(t) -> tuple:
    return (-t[0], grevlex_key(t[1]))


def lead(v: dict):
    return max(v, key=term_key)


def elem_degree(F: FreeMod, v: dict) -> MDeg:
    degs = {add(F.ring.degree(m), F.shifts[r]) for r, m in v}
    if len(degs) != 1:
        raise ValueError("element is zero or inhomogeneous")
    return next(iter(degs))


def is_homogeneous(F: FreeMod, v: dict) -> bool:
    return len({add(F.ring.degree(m), F.shifts[r]) for r, m in v}) <= 1


def elem_add(u: dict, v: dict, p: int, a: int = 1) -> dict:
    out = dict(u)
    for k, c in v.items():
        w = (out.get(k, 0) + a * c) % p
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _iadd_shifted(out: dict, v: dict, mono, a: int, p: int) -> None:
    for (r, m), c in v.items():
        k = (r, mono_mul(m, mono))
        w = (out.get(k, 0) + a * c) % p
        if w:
            out[k] = w
        else:
            out.pop(k, None)


def elem_mul_mono(v: dict, mono, a: int, p: int) -> dict:
    out: dict = {}
    _iadd_shifted(out, v, mono, a, p)
    return out


def elem_mul_poly(v: dict, poly_terms: dict, p: int) -> dict:
    out: dict = {}
    for mono, c in poly_terms.items():
        _iadd_shifted(out, v, mono, c, p)
    return out


def apply_matrix(columns: list[dict], v: dict, p: int) -> dict:
    """Image of ``v`` (in the source free module) under the map whose j-th
    basis vector goes to ``columns[j]``."""
    out: dict = {}
    for (j, mono), c in v.items():
        _iadd_shifted(out, columns[j], mono, c, p)
    return out


def monic(v: dict, p: int) -> dict:
    c = inv(v[lead(v)], p)
    return {k: x * c % p for k, x in v.items()}


@dataclass
class GBasis:
    module: FreeMod
    elements: list
    reps: list | None = None  # representations in the input generators, if tracked

    def __len__(self) -> int:
        return len(self.elements)

    def leads(self) -> list:
        return [lead(g) for g in self.elements]


def _find_divisor(leads, t):
    r, m = t
    for k, (r2, m2) in enumerate(leads):
        if r2 == r and mono_divides(m2, m):
            return k
    return -1


def _reduce(v: dict, elems: list, leads: list, p: int, rep=None, reps=None, quot=None, full=True):
    """Divide ``v`` by ``elems`` (all monic).  Optionally tracks the
    representation change (``rep``) and the quotient vector ``quot`` over
    element indices.  Returns (remainder, rep)."""
    v = dict(v)
    rem: dict = {}
    while v:
        t = lead(v)
        c = v[t]
        k = _find_divisor(leads, t)
        if k < 0:
            if not full:
                rem.update(v)
                break
            rem[t] = c
            del v[t]
            continue
        q = mono_div(t[1], leads[k][1])
        _iadd_shifted(v, elems[k], q, -c, p)
        if rep is not None:
            _iadd_shifted(rep, reps[k], q, -c, p)
        if quot is not None:
            key = (k, q)
            w = (quot.get(key, 0) + c) % p
            if w:
                quot[key] = w
            else:
                quot.pop(key, None)
    return rem, rep


def _pair_order(F: FreeMod, leads: list, i: int, j: int):
    lcm = mono_lcm(leads[i][1], leads[j][1])
    deg = add(F.ring.degree(lcm), F.shifts[leads[i][0]])
    return (sum(deg), deg, j, i)


def _buchberger_core(gens: list, F: FreeMod, track: bool):
    p = F.ring.prime
    elems, reps = [], []
    for idx, g in enumerate(gens):
        if not g:
            continue
        if not is_homogeneous(F, g):
            raise ValueError("inhomogeneous generator %d" % idx)
        c = inv(g[lead(g)], p)
        elems.append({k: x * c % p for k, x in g.items()})
        reps.append({(idx, F.ring.one): c} if track else None)
    # reduce inputs against each other first (keeps the pair set small)
    G, R = [], []
    for g, r in sorted(zip(elems, reps), key=lambda gr: term_key(lead(gr[0]))):
        ls = [lead(h) for h in G]
        rem, rr = _reduce(g, G, ls, p, dict(r) if track else None, R if track else None)
        if rem:
            c = inv(rem[lead(rem)], p)
            G.append({k: x * c % p for k, x in rem.items()})
            R.append({k: x * c % p for k, x in rr.items()} if track else None)
    leads = [lead(g) for g in G]
    pairs = [(i, j) for j in range(len(G)) for i in range(j) if leads[i][0] == leads[j][0]]
    while pairs:
        pairs.sort(key=lambda ij: _pair_order(F, leads, *ij))
        i, j = pairs.pop(0)
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li[1], lj[1])
        # chain criterion: skip if some k's lead divides lcm and both (i,k),(j,k) already handled
        mi, mj = mono_div(lcm, li[1]), mono_div(lcm, lj[1])
        s = elem_mul_mono(G[i], mi, 1, p)
        _iadd_shifted(s, G[j], mj, -1, p)
        rs = None
        if track:
            rs = elem_mul_mono(R[i], mi, 1, p)
            _iadd_shifted(rs, R[j], mj, -1, p)
        rem, rs = _reduce(s, G, leads, p, rs, R if track else None)
        if rem:
            c = inv(rem[lead(rem)], p)
            G.append({k: x * c % p for k, x in rem.items()})
            R.append({k: x * c % p for k, x in rs.items()} if track else None)
            leads.append(lead(G[-1]))
            n = len(G) - 1
            pairs.extend((a, n) for a in range(n) if leads[a][0] == leads[n][0])
    return G, R


def _interreduce(G, R, F: FreeMod, track: bool):
    p = F.ring.prime
    leads = [lead(g) for g in G]
    keep = []
    for a in range(len(G)):
        if any(b != a and leads[b][0] == leads[a][0] and mono_divides(leads[b][1], leads[a][1])
               and (leads[b] != leads[a] or b < a) for b in range(len(G))):
            continue
        keep.append(a)
    G = [G[a] for a in keep]
    R = [R[a] for a in keep] if track else [None] * len(G)
    out_G, out_R = [], []
    leads = [lead(g) for g in G]
    for a in range(len(G)):
        others = [G[b] for b in range(len(G)) if b != a]
        oleads = [leads[b] for b in range(len(G)) if b != a]
        oreps = [R[b] for b in range(len(G)) if b != a]
        t = leads[a]
        tail = {k: v for k, v in G[a].items() if k != t}
        rem, rr = _reduce(tail, others, oleads, p, dict(R[a]) if track else None, oreps if track else None)
        rem[t] = G[a][t]
        out_G.append(rem)
        out_R.append(rr)
    order = sorted(range(len(out_G)), key=lambda a: term_key(lead(out_G[a])))
    return [out_G[a] for a in order], ([out_R[a] for a in order] if track else None)


def buchberger(gens: list, F: FreeMod, track: bool = False) -> GBasis:
    """Reduced Gröbner basis of the submodule generated by ``gens``.

    Output is sorted by ascending leading term, so it is deterministic.
    With ``track`` every basis element carries its expression in the inputs
    (a vector over the input positions).
    """
    G, R = _buchberger_core(list(gens), F, track)
    G, R = _interreduce(G, R, F, track)
    return GBasis(F, G, R)


def normal_form(v: dict, G: GBasis) -> dict:
    rem, _ = _reduce(v, G.elements, G.leads(), G.module.ring.prime)
    return rem


def reduce_with_quotients(v: dict, G: GBasis):
    quot: dict = {}
    rem, _ = _reduce(v, G.elements, G.leads(), G.module.ring.prime, quot=quot)
    return rem, quot


def gb_contains(G: GBasis, v: dict) -> bool:
    return not normal_form(v, G)


def syzygy_module(G: GBasis) -> tuple[FreeMod, list]:
    """Schreyer generators of the first syzygy module of a Gröbner basis.

    Returns the free module whose r-th generator maps to ``G.elements[r]``
    (so its shifts are the element degrees) and the list of syzygies.
    """
    F = G.module
    p = F.ring.prime
    elems = G.elements
    leads = G.leads()
    src = FreeMod(F.ring, [elem_degree(F, g) for g in elems])
    syz = []
    for j in range(len(elems)):
        for i in range(j):
            if leads[i][0] != leads[j][0]:
                continue
            lcm = mono_lcm(leads[i][1], leads[j][1])
            mi, mj = mono_div(lcm, leads[i][1]), mono_div(lcm, leads[j][1])
            ci, cj = elems[i][leads[i]], elems[j][leads[j]]
            s = elem_mul_mono(elems[i], mi, cj, p)
            _iadd_shifted(s, elems[j], mj, -ci, p)
            quot: dict = {}
            rem, _ = _reduce(s, elems, leads, p, quot=quot)
            if rem:
                raise RuntimeError("input to syzygy_module is not a Gröbner basis")
            vec = {(i, mi): cj}
            vec = elem_add(vec, {(j, mj): 1}, p, -ci)
            for key, c in quot.items():
                vec = elem_add(vec, {key: c}, p, -1)
            if vec:
                syz.append(vec)
    return src, syz


def check_map_degrees(columns: list, source: FreeMod, target: FreeMod) -> None:
    for j, col in enumerate(columns):
        if not col:
            continue
        if not is_homogeneous(target, col) or elem_degree(target, col) != source.shifts[j]:
            raise ValueError("column %d is not homogeneous of degree %r" % (j, source.shifts[j]))


def kernel_of_map(columns: list, source: FreeMod, target: FreeMod) -> list:
    """Homogeneous generators of the kernel of ``source -> target``,
    basis vector j |-> ``columns[j]``."""
    check_map_degrees(columns, source, target)
    p = target.ring.prime
    one = target.ring.one
    G = buchberger(columns, target, track=True)
    out = []
    if G.elements:
        _, syz = syzygy_module(G)
        for s in syz:
            v: dict = {}
            for (k, mono), c in s.items():
                _iadd_shifted(v, G.reps[k], mono, c, p)
            if v:
                out.append(v)
    for j, col in enumerate(columns):
        quot: dict = {}
        rem, _ = _reduce(col, G.elements, G.leads(), p, quot=quot)
        assert not rem
        v = {(j, one): 1}
        for (k, mono), c in quot.items():
            _iadd_shifted(v, G.reps[k], mono, -c, p)
        if v:
            out.append(v)
    return out


def module_quotient_mono(rels: list, F: FreeMod, g) -> list:
    """Generators of ``R : g`` for a monomial ``g``."""
    p = F.ring.prime
    one = F.ring.one
    dg = F.ring.degree(g)
    cols = list(rels) + [{(r, g): 1} for r in range(F.rank)]
    src = FreeMod(F.ring, [elem_degree(F, c) for c in rels] + [add(s, dg) for s in F.shifts])
    ker = kernel_of_map(cols, src, F)
    nr = len(rels)
    out = []
    for v in ker:
        b = {(j - nr, m): c for (j, m), c in v.items() if j >= nr}
        if b:
            out.append(b)
    return out


def saturate_mono(rels: list, F: FreeMod, g, max_iter: int = 64) -> GBasis:
    """Gröbner basis of ``R : g^infinity`` for a monomial ``g``."""
    G = buchberger(rels, F)
    for _ in range(max_iter):
        new = module_quotient_mono(G.elements, F, g)
        if all(gb_contains(G, v) for v in new):
            return G
        G = buchberger(G.elements + new, F)
    raise RuntimeError("saturation did not stabilize")


def intersect_submodules(A: list, B: list, F: FreeMod) -> list:
    """Generators of the intersection of two submodules of ``F``."""
    p = F.ring.prime
    A = [a for a in A if a]
    B = [b for b in B if b]
    if not A or not B:
        return []
    cols = A + [{k: (-c) % p for k, c in b.items()} for b in B]
    src = FreeMod(F.ring, [elem_degree(F, c) for c in A] + [elem_degree(F, c) for c in B])
    out = []
    for v in kernel_of_map(cols, src, F):
        part = {(j, m): c for (j, m), c in v.items() if j < len(A)}
        w = apply_matrix(A, part, p)
        if w:
            out.append(w)
    return out

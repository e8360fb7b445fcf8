"""Finitely generated multigraded modules given as cokernels of free maps."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .algebra import Poly, RingSpec, mono_divides, parse_poly
from .degrees import Box, GradingMap, MDeg, add, coarsen_degree, sub
from .groebner import FreeMod, GBasis, buchberger, elem_degree, is_homogeneous, lead
from .linalg import Echelon


@dataclass(frozen=True, eq=False)
class Presentation:
    """``coker(relations)`` as a quotient of ``target``."""

    target: FreeMod
    relations: tuple

    def __init__(self, target: FreeMod, relations: Iterable[dict] = ()):
        rels = tuple(dict(r) for r in relations if r)
        for i, r in enumerate(rels):
            if not is_homogeneous(target, r):
                raise ValueError("relation %d is not homogeneous" % i)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "relations", rels)

    @property
    def ring(self) -> RingSpec:
        return self.target.ring

    @property
    def k(self) -> int:
        return self.ring.k

    @property
    def is_zero_target(self) -> bool:
        return self.target.rank == 0

    @cached_property
    def relation_degrees(self) -> tuple:
        return tuple(elem_degree(self.target, r) for r in self.relations)

    @cached_property
    def gb(self) -> GBasis:
        return buchberger(list(self.relations), self.target)

    @cached_property
    def max_generator_degree(self) -> MDeg | None:
        if not self.target.rank:
            return None
        return tuple(max(s[l] for s in self.target.shifts) for l in range(self.k))

    @classmethod
    def free(cls, ring: RingSpec, shifts: Iterable[Sequence[int]]) -> "Presentation":
        return cls(FreeMod(ring, shifts), ())

    @classmethod
    def from_strings(cls, ring: RingSpec, shifts, relations: Iterable) -> "Presentation":
        """Relations are strings (rank one) or lists of strings, one per generator."""
        F = FreeMod(ring, shifts)
        rels = []
        for rel in relations:
            comps = [rel] if isinstance(rel, str) else list(rel)
            if len(comps) != F.rank:
                raise ValueError("relation has %d components, module has rank %d" % (len(comps), F.rank))
            v = {}
            for r, s in enumerate(comps):
                for m, c in parse_poly(ring, s).terms.items():
                    v[(r, m)] = c
            if v and not is_homogeneous(F, v):
                raise ValueError("relation %r is not homogeneous" % (rel,))
            rels.append(v)
        return cls(F, rels)

    def twist(self, a: Sequence[int]) -> "Presentation":
        """``F(a)``: every generator degree moves by ``-a``."""
        F = FreeMod(self.ring, [sub(s, a) for s in self.target.shifts])
        return Presentation(F, self.relations)


def quotient_ring(ring: RingSpec, polys: Iterable) -> Presentation:
    """``S/I`` for polynomials given as ``Poly`` or strings."""
    F = FreeMod(ring, [(0,) * ring.k])
    rels = []
    for f in polys:
        if isinstance(f, str):
            f = parse_poly(ring, f)
        rels.append({(0, m): c for m, c in f.terms.items()})
    return Presentation(F, rels)


@dataclass
class GradedPiece:
    degree: MDeg
    dimension: int
    basis: list
    _index: dict = field(default_factory=dict, repr=False)
    _ech: Echelon | None = field(default=None, repr=False)

    def coords(self, v: dict) -> dict:
        """Coordinates in ``basis`` of the class of a degree-``n`` element."""
        vec = {self._index[t]: c for t, c in v.items()}
        red, _ = self._ech.reduce(vec)
        pos = self._pos
        return {pos[i]: c for i, c in red.items()}

    @cached_property
    def _pos(self) -> dict:
        return {self._index[t]: j for j, t in enumerate(self.basis)}


def relation_span(F: Presentation, n: Sequence[int]) -> list[dict]:
    """Monomial multiples of the relations landing in degree ``n``."""
    out = []
    p = F.ring.prime
    for rel, e in zip(F.relations, F.relation_degrees):
        for mono in F.ring.monomials(sub(n, e)):
            out.append({(r, tuple(a + b for a, b in zip(m, mono))): c % p for (r, m), c in rel.items()})
    return out


def graded_piece(F: Presentation, n: Sequence[int]) -> GradedPiece:
    n = tuple(n)
    basis = F.target.basis(n)
    index = {t: i for i, t in enumerate(basis)}
    ech = Echelon(F.ring.prime)
    for v in relation_span(F, n):
        ech.add({index[t]: c for t, c in v.items()})
    reps = [t for t in basis if index[t] not in ech.rows]
    return GradedPiece(n, len(reps), reps, index, ech)


def piece_dim(F: Presentation, n: Sequence[int]) -> int:
    return graded_piece(F, n).dimension


def piece_dim_gb(F: Presentation, n: Sequence[int], G: GBasis | None = None) -> int:
    """Standard-monomial count in degree ``n`` from a Gröbner basis."""
    G = G if G is not None else F.gb
    leads = G.leads()
    count = 0
    for r, m in F.target.basis(n):
        if not any(r2 == r and mono_divides(m2, m) for r2, m2 in leads):
            count += 1
    return count


def multiplication_matrix(F: Presentation, m: Sequence[int], n: Sequence[int]) -> list[list[int]]:
    """Matrix of ``F_m x S_n -> F_{m+n}``: one column per (basis element, monomial)
    pair, rows indexed by the basis of ``F_{m+n}``."""
    if any(x < 0 for x in n):
        raise ValueError("multiplier degree must be in N^k")
    src = graded_piece(F, m)
    tgt = graded_piece(F, add(m, n))
    cols = []
    for r, a in src.basis:
        for mono in F.ring.monomials(n):
            t = (r, tuple(x + y for x, y in zip(a, mono)))
            c = tgt.coords({t: 1})
            cols.append([c.get(i, 0) for i in range(tgt.dimension)])
    return [[col[i] for col in cols] for i in range(tgt.dimension)]


def _drop(t: Sequence[int], l: int) -> MDeg:
    return tuple(x for i, x in enumerate(t) if i != l)


def slice_module(F: Presentation, l: int, q: int) -> Presentation:
    """``F^[l]_q`` as a module over the ring of the other k-1 blocks.

    Generators are (original generator, block-l monomial) pairs; relations
    are block-l multiples of the original relations, re-expanded.
    """
    ring = F.ring
    if not 0 <= l < ring.k:
        raise ValueError("block index out of range")
    if ring.k == 1:
        raise ValueError("slicing needs at least two blocks")
    rng = ring.block_ranges[l]
    lo, hi = rng.start, rng.stop
    sub_ring = RingSpec(_drop(ring.block_sizes, l), ring.prime)
    lring = RingSpec((ring.block_sizes[l],), ring.prime)
    gens, shifts = {}, []
    for r, s in enumerate(F.target.shifts):
        for mono in lring.monomials((q - s[l],)):
            gens[(r, mono)] = len(shifts)
            shifts.append(_drop(s, l))
    target = FreeMod(sub_ring, shifts)
    rels = []
    for rel, e in zip(F.relations, F.relation_degrees):
        for mu in lring.monomials((q - e[l],)):
            v = {}
            for (r, m), c in rel.items():
                ml = tuple(a + b for a, b in zip(m[lo:hi], mu))
                key = (gens[(r, ml)], m[:lo] + m[hi:])
                v[key] = (v.get(key, 0) + c) % ring.prime
            v = {key: c for key, c in v.items() if c}
            if v:
                rels.append(v)
    return Presentation(target, rels)


def regrade_module(F: Presentation, psi: GradingMap) -> Presentation:
    """Coarsen the grading through ``psi``.

    The result lives over a standard graded block ring, so ``psi`` has to
    merge blocks: a 0/1 matrix with exactly one 1 in every column.  Variables
    are regrouped by the new blocks, keeping their relative order.
    """
    ring = F.ring
    if psi.k != ring.k:
        raise ValueError("grading map has %d columns, ring has %d blocks" % (psi.k, ring.k))
    owner = []
    for c in range(psi.k):
        col = [psi.matrix[r][c] for r in range(psi.r)]
        if sorted(col) != [0] * (psi.r - 1) + [1]:
            raise ValueError("only block-merging grading maps give a standard graded ring")
        owner.append(col.index(1))
    if sorted(set(owner)) != list(range(psi.r)):
        raise ValueError("grading map has an empty row")
    perm = []  # new position -> old variable index
    sizes = []
    for r in range(psi.r):
        size = 0
        for c in range(psi.k):
            if owner[c] == r:
                perm.extend(ring.block_ranges[c])
                size += ring.block_sizes[c]
        sizes.append(size)
    new_ring = RingSpec(tuple(sizes), ring.prime)

    def mv(m):
        return tuple(m[i] for i in perm)

    target = FreeMod(new_ring, [coarsen_degree(psi, s) for s in F.target.shifts])
    rels = [{(r, mv(m)): c for (r, m), c in rel.items()} for rel in F.relations]
    return Presentation(target, rels)


def coarse_piece_dim(F: Presentation, psi: GradingMap, m: Sequence[int], box: Box) -> int:
    """``sum dim F_n`` over ``n`` in ``box`` with ``psi(n) = m``."""
    m = tuple(m)
    return sum(piece_dim(F, n) for n in box if coarsen_degree(psi, n) == m)

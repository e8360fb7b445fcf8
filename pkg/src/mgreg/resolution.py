"""Graded free resolutions, minimization and the numerical data read off them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .algebra import Poly, RingSpec
from .degrees import MDeg, add, sub
from .groebner import FreeMod, apply_matrix, elem_degree, kernel_of_map, lead
from .linalg import Echelon, inv, rank
from .modules import Presentation


@dataclass
class Resolution:
    """``G_s -> ... -> G_0``; ``maps[i-1]`` lists the images of the basis of
    ``G_i`` as elements of ``G_{i-1}``."""

    ring: RingSpec
    modules: list
    maps: list
    minimal: bool = False
    warnings: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    def rank(self, i: int) -> int:
        return self.modules[i].rank if 0 <= i < len(self.modules) else 0

    def ranks(self) -> list[int]:
        return [G.rank for G in self.modules]

    def differential(self, i: int) -> list:
        return self.maps[i - 1]


def _deg_key(d: Sequence[int]) -> tuple:
    return (sum(d), tuple(d))


def minimal_generators(elems: list, F: FreeMod) -> list:
    """A minimal homogeneous generating subset of ``elems`` (order kept
    deterministic: increasing degree, then input order)."""
    p = F.ring.prime
    items = [(elem_degree(F, v), i, v) for i, v in enumerate(elems) if v]
    items.sort(key=lambda t: (_deg_key(t[0]), t[1]))
    kept: list = []
    cur_deg = None
    ech = None
    index: dict = {}
    for deg, _, v in items:
        if deg != cur_deg:
            cur_deg = deg
            basis = F.basis(deg)
            index = {t: j for j, t in enumerate(basis)}
            ech = Echelon(p)
            for kd, kv in kept:
                for mono in F.ring.monomials(sub(deg, kd)):
                    if any(mono):
                        ech.add(_vec(kv, mono, index, p))
        vec = _vec(v, F.ring.one, index, p)
        if ech.add(vec) is None:
            kept.append((deg, v))
    return [v for _, v in kept]


def _vec(v: dict, mono, index: dict, p: int) -> dict:
    return {index[(r, tuple(a + b for a, b in zip(m, mono)))]: c % p for (r, m), c in v.items()}


def free_resolution(F: Presentation, minimal: bool = True) -> Resolution:
    """Resolve ``coker`` by iterated kernels, each pruned to a minimal
    generating set; ``minimize`` then removes any unit entries left in the
    first map."""
    ring = F.ring
    G0 = F.target
    modules = [G0]
    maps = []
    if G0.rank:
        cols = minimal_generators(list(F.relations), G0)
        while cols:
            if len(modules) > ring.nvars:
                raise RuntimeError("resolution longer than the number of variables")
            Gi = FreeMod(ring, [elem_degree(modules[-1], c) for c in cols])
            modules.append(Gi)
            maps.append(cols)
            ker = kernel_of_map(cols, Gi, modules[-2])
            cols = minimal_generators(ker, Gi)
    R = Resolution(ring, modules, maps)
    return minimize(R) if minimal else R


def _unit_positions(R: Resolution):
    one = R.ring.one
    for i in range(1, R.length + 1):
        src, tgt = R.modules[i], R.modules[i - 1]
        cands = []
        for j, col in enumerate(R.maps[i - 1]):
            for (r, m), c in col.items():
                if m == one:
                    cands.append((tgt.shifts[r], r, j))
        if cands:
            _, r, j = min(cands)
            return i, r, j
    return None


def _drop_position(v: dict, r: int) -> dict:
    return {(s if s < r else s - 1, m): c for (s, m), c in v.items() if s != r}


def minimize(R: Resolution) -> Resolution:
    """Cancel unit entries between equal-shift summands until none remain."""
    ring = R.ring
    p = ring.prime
    modules = list(R.modules)
    maps = [list(cols) for cols in R.maps]
    while True:
        hit = _unit_positions(Resolution(ring, modules, maps))
        if hit is None:
            break
        i, r, j = hit
        cols = maps[i - 1]
        pivot = cols[j]
        u = pivot[(r, ring.one)]
        ui = inv(u, p)
        new_cols = []
        for c, col in enumerate(cols):
            if c == j:
                continue
            a = {m: x for (s, m), x in col.items() if s == r}
            if a:
                col = dict(col)
                for mono, x in a.items():
                    coef = -x * ui % p
                    for (s, m), y in pivot.items():
                        key = (s, tuple(e + f for e, f in zip(m, mono)))
                        w = (col.get(key, 0) + coef * y) % p
                        if w:
                            col[key] = w
                        else:
                            col.pop(key, None)
            new_cols.append(_drop_position(col, r))
        maps[i - 1] = new_cols
        if i < len(maps):
            maps[i] = [_drop_position(col, j) for col in maps[i]]
        if i >= 2:
            maps[i - 2] = [col for c, col in enumerate(maps[i - 2]) if c != r]
        modules[i] = FreeMod(ring, [s for c, s in enumerate(modules[i].shifts) if c != j])
        modules[i - 1] = FreeMod(ring, [s for c, s in enumerate(modules[i - 1].shifts) if c != r])
        # trailing zero modules are dropped
        while len(modules) > 1 and modules[-1].rank == 0:
            modules.pop()
            maps.pop()
    return Resolution(ring, modules, maps, minimal=True, warnings=list(R.warnings))


def is_minimal(R: Resolution) -> bool:
    return _unit_positions(R) is None


@dataclass(frozen=True)
class BettiTable:
    entries: tuple  # sorted ((i, shift), multiplicity)

    def get(self, i: int, n: Sequence[int]) -> int:
        return dict(self.entries).get((i, tuple(n)), 0)

    def rows(self) -> dict:
        out: dict = {}
        for (i, s), m in self.entries:
            out.setdefault(i, {})[s] = m
        return out

    def to_json(self) -> dict:
        return {str(i): {"(%s)" % ",".join(map(str, s)): m for s, m in sorted(row.items())}
                for i, row in sorted(self.rows().items())}


def _need_minimal(R: Resolution) -> None:
    if not R.minimal and not is_minimal(R):
        raise ValueError("resolution is not minimal")


def betti_table(R: Resolution) -> BettiTable:
    _need_minimal(R)
    counts: dict = {}
    for i, G in enumerate(R.modules):
        for s in G.shifts:
            counts[(i, s)] = counts.get((i, s), 0) + 1
    return BettiTable(tuple(sorted(counts.items())))


def proj_dim(R: Resolution) -> int | None:
    """Largest i with ``G_i`` nonzero; None for the zero module."""
    _need_minimal(R)
    nz = [i for i, G in enumerate(R.modules) if G.rank]
    return max(nz) if nz else None


def step_maxima(R: Resolution) -> list[MDeg]:
    """``n^i``: componentwise max of the shifts of ``G_i``."""
    k = R.ring.k
    return [tuple(max(s[l] for s in G.shifts) for l in range(k)) for G in R.modules if G.rank]


def res_reg_vector(R: Resolution) -> MDeg | None:
    _need_minimal(R)
    if proj_dim(R) is None:
        return None
    k = R.ring.k
    return tuple(max(c[l] - i for i, c in enumerate(step_maxima(R))) for l in range(k))


def is_purely_increasing(R: Resolution) -> bool:
    _need_minimal(R)
    c = step_maxima(R)
    return all(c[i][l] > c[i - 1][l] for i in range(1, len(c)) for l in range(R.ring.k))


def tor_piece_dim(R: Resolution, i: int, n: Sequence[int]) -> int:
    _need_minimal(R)
    if not 0 <= i <= R.length:
        return 0
    n = tuple(n)
    return sum(1 for s in R.modules[i].shifts if s == n)


def koszul_complex(polys: Sequence[Poly]) -> Resolution:
    """Koszul complex on ``f_1..f_s``, basis of ``G_i`` = i-subsets in lex order."""
    if not polys:
        raise ValueError("need at least one form")
    ring = polys[0].ring
    degs = [f.multidegree for f in polys]
    s = len(polys)
    subsets = [list(itertools.combinations(range(s), i)) for i in range(s + 1)]
    zero = (0,) * ring.k
    modules = []
    for i in range(s + 1):
        shifts = []
        for J in subsets[i]:
            d = zero
            for j in J:
                d = add(d, degs[j])
            shifts.append(d)
        modules.append(FreeMod(ring, shifts))
    maps = []
    p = ring.prime
    for i in range(1, s + 1):
        pos = {J: t for t, J in enumerate(subsets[i - 1])}
        cols = []
        for J in subsets[i]:
            col: dict = {}
            for t, j in enumerate(J):
                sign = 1 if t % 2 == 0 else -1
                r = pos[J[:t] + J[t + 1:]]
                for m, c in polys[j].terms.items():
                    col[(r, m)] = (col.get((r, m), 0) + sign * c) % p
            cols.append({key: c for key, c in col.items() if c})
        maps.append(cols)
    R = Resolution(ring, modules, maps)
    R.minimal = is_minimal(R)
    return R


def piece_matrix(cols: list, src: FreeMod, tgt: FreeMod, n: Sequence[int]):
    """Sparse columns of the degree-``n`` component of a free map, with the
    monomial bases of both sides."""
    sb, tb = src.basis(n), tgt.basis(n)
    tindex = {t: i for i, t in enumerate(tb)}
    p = src.ring.prime
    out = []
    for j, mono in sb:
        out.append(_vec(cols[j], mono, tindex, p))
    return out, sb, tb


def homology_dims(R: Resolution, n: Sequence[int]) -> list[int]:
    """``dim H_i`` of the complex at degree ``n`` for i = 0..length
    (H_0 is the cokernel of the first map)."""
    p = R.ring.prime
    ranks = [0] * (R.length + 2)
    for i in range(1, R.length + 1):
        m, _, _ = piece_matrix(R.maps[i - 1], R.modules[i], R.modules[i - 1], n)
        ranks[i] = rank(m, p)
    return [R.modules[i].dim(n) - ranks[i] - ranks[i + 1] for i in range(R.length + 1)]


def is_exact(R: Resolution, degrees: Iterable[Sequence[int]]) -> bool:
    """Zero homology in positive homological degree at every listed degree."""
    return all(not any(homology_dims(R, n)[1:]) for n in degrees)


def composition_is_zero(R: Resolution) -> bool:
    p = R.ring.prime
    for i in range(2, R.length + 1):
        for col in R.maps[i - 1]:
            if apply_matrix(R.maps[i - 2], col, p):
                return False
    return True


def euler_characteristic(R: Resolution, n: Sequence[int]) -> int:
    return sum((-1) ** i * G.dim(n) for i, G in enumerate(R.modules))


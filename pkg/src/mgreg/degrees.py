"""Multidegrees, shift sets, grading coarsenings and upper-set regions in Z^k.

A multidegree is a plain tuple of ints.  Regions are finitely generated upper
sets: unions of translated positive orthants ``b + N^k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MDeg = tuple


def mdeg(*coords) -> MDeg:
    if len(coords) == 1 and not isinstance(coords[0], int):
        coords = tuple(coords[0])
    return tuple(int(c) for c in coords)


def add(a: Sequence[int], b: Sequence[int]) -> MDeg:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> MDeg:
    return tuple(x - y for x, y in zip(a, b))


def smul(c: int, a: Sequence[int]) -> MDeg:
    return tuple(c * x for x in a)


def geq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise ``a >= b``."""
    return all(x >= y for x, y in zip(a, b))


def join(a: Sequence[int], b: Sequence[int]) -> MDeg:
    return tuple(max(x, y) for x, y in zip(a, b))


def meet(a: Sequence[int], b: Sequence[int]) -> MDeg:
    return tuple(min(x, y) for x, y in zip(a, b))


def unit(k: int, l: int) -> MDeg:
    return tuple(1 if i == l else 0 for i in range(k))


def sgn(m: int) -> int:
    return (m > 0) - (m < 0)


def compositions(total: int, k: int) -> Iterator[MDeg]:
    """All points of N^k with coordinate sum ``total``, lexicographically
    descending in the first coordinate (x^a before x^(a-1)...)."""
    if k == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, k - 1):
            yield (first,) + rest


def kset_enumerate(m: int, k: int) -> list[MDeg]:
    """The finite set ``[m]_k = {p in N^k : |p| = |m|}``, sorted."""
    if k < 1:
        raise ValueError("block count must be positive")
    return sorted(compositions(abs(m), k))


def _antichain(gens: Iterable[Sequence[int]]) -> tuple[MDeg, ...]:
    pts = sorted(set(tuple(g) for g in gens))
    keep = []
    for g in pts:
        if not any(geq(g, h) and g != h for h in pts):
            keep.append(g)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class Region:
    """Finite union of ``b + N^k``; generators normalized to an antichain."""

    k: int
    generators: tuple

    def __init__(self, generators: Iterable[Sequence[int]] = (), k: int | None = None):
        gens = [tuple(int(x) for x in g) for g in generators]
        if k is None:
            if not gens:
                raise ValueError("empty region needs an explicit k")
            k = len(gens[0])
        if any(len(g) != k for g in gens):
            raise ValueError("generator dimension mismatch")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "generators", _antichain(gens))

    def __contains__(self, n) -> bool:
        return region_contains(self, n)

    @property
    def is_empty(self) -> bool:
        return not self.generators

    def to_json(self) -> list:
        return [list(g) for g in self.generators]

    def __repr__(self) -> str:
        return "Region(%s)" % (self.to_json(),)


def region_contains(R: Region, n: Sequence[int]) -> bool:
    if len(n) != R.k:
        raise ValueError("dimension mismatch: region has k=%d, degree %r" % (R.k, tuple(n)))
    return any(geq(n, b) for b in R.generators)


def region_union(R1: Region, R2: Region) -> Region:
    if R1.k != R2.k:
        raise ValueError("dimension mismatch")
    return Region(R1.generators + R2.generators, k=R1.k)


def region_intersect(R1: Region, R2: Region) -> Region:
    if R1.k != R2.k:
        raise ValueError("dimension mismatch")
    return Region([join(a, b) for a in R1.generators for b in R2.generators], k=R1.k)


def region_translate(R: Region, v: Sequence[int]) -> Region:
    return Region([add(g, v) for g in R.generators], k=R.k)


@dataclass(frozen=True)
class Box:
    lo: MDeg
    hi: MDeg

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise ValueError("box corners differ in dimension")
        if not geq(self.hi, self.lo):
            raise ValueError("box lo must be <= hi componentwise")

    @classmethod
    def cube(cls, lo: int, hi: int, k: int) -> "Box":
        return cls((lo,) * k, (hi,) * k)

    @property
    def k(self) -> int:
        return len(self.lo)

    def __contains__(self, n) -> bool:
        return geq(n, self.lo) and geq(self.hi, n)

    def __iter__(self) -> Iterator[MDeg]:
        ranges = [range(a, b + 1) for a, b in zip(self.lo, self.hi)]
        return (tuple(t) for t in itertools.product(*ranges))

    def __len__(self) -> int:
        out = 1
        for a, b in zip(self.lo, self.hi):
            out *= b - a + 1
        return out


@dataclass(frozen=True)
class GradingMap:
    """Nonnegative integer r x k matrix, acting on column vectors."""

    matrix: tuple

    def __init__(self, matrix):
        rows = tuple(tuple(int(x) for x in r) for r in matrix)
        if not rows or len({len(r) for r in rows}) != 1:
            raise ValueError("grading matrix must be a nonempty rectangle")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("grading matrix must have nonnegative entries")
        object.__setattr__(self, "matrix", rows)

    @property
    def r(self) -> int:
        return len(self.matrix)

    @property
    def k(self) -> int:
        return len(self.matrix[0])

    @classmethod
    def identity(cls, k: int) -> "GradingMap":
        return cls([unit(k, i) for i in range(k)])

    @classmethod
    def total(cls, k: int) -> "GradingMap":
        """Total-degree map ``n -> |n|``."""
        return cls([(1,) * k])

    @classmethod
    def project(cls, k: int, index_set: Iterable[int]) -> "GradingMap":
        """Coordinate projection onto the (0-based) blocks in ``index_set``."""
        return cls([unit(k, i) for i in sorted(index_set)])

    @classmethod
    def drop(cls, k: int, l: int) -> "GradingMap":
        return cls.project(k, [i for i in range(k) if i != l])


def coarsen_degree(psi: GradingMap, n: Sequence[int]) -> MDeg:
    if len(n) != psi.k:
        raise ValueError("degree length %d does not match grading map" % len(n))
    return tuple(sum(a * x for a, x in zip(row, n)) for row in psi.matrix)

"""Sparse exact linear algebra over a prime field.

Vectors are ``dict[int, int]`` mapping a coordinate index to a nonzero
residue modulo ``p``.  All routines are exact; nothing is floating point.
"""

from __future__ import annotations

from typing import Iterable


def inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("zero has no inverse modulo %d" % p)
    return pow(a, p - 2, p)


def axpy(y: dict, a: int, x: dict, p: int) -> None:
    """In place ``y += a * x`` modulo ``p``."""
    for k, v in x.items():
        w = (y.get(k, 0) + a * v) % p
        if w:
            y[k] = w
        else:
            y.pop(k, None)


def scale(x: dict, a: int, p: int) -> dict:
    a %= p
    if a == 0:
        return {}
    return {k: (v * a) % p for k, v in x.items()}


class Echelon:
    """Incrementally built echelon basis of a subspace.

    Each stored row has a distinct leading (smallest) index with coefficient 1.
    When ``track`` is set, every row carries the combination of inserted
    vectors it came from, which is how kernels are read off.
    """

    def __init__(self, p: int, track: bool = False):
        self.p = p
        self.track = track
        self.rows: dict[int, dict] = {}
        self.tags: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict, tag: dict | None = None):
        """Fully reduce ``vec`` by the stored rows; returns (residue, tag)."""
        p = self.p
        v = dict(vec)
        t = dict(tag) if tag is not None else None
        done: set[int] = set()
        while True:
            keys = [k for k in v if k in self.rows and k not in done]
            if not keys:
                break
            k = min(keys)
            c = v[k]
            axpy(v, -c, self.rows[k], p)
            if t is not None:
                axpy(t, -c, self.tags[k], p)
            done.add(k)
        return v, t

    def _reduce_lead(self, vec: dict, tag: dict | None):
        # only clear leading entries; enough to decide independence
        p = self.p
        v = dict(vec)
        t = dict(tag) if tag is not None else None
        while v:
            k = min(v)
            row = self.rows.get(k)
            if row is None:
                break
            c = v[k]
            axpy(v, -c, row, p)
            if t is not None:
                axpy(t, -c, self.tags[k], p)
        return v, t

    def add(self, vec: dict, tag: dict | None = None):
        """Insert a vector.  Returns None if it was independent, otherwise the
        tag combination witnessing the dependency (``{}`` when untracked)."""
        v, t = self._reduce_lead(vec, tag)
        if not v:
            return t if t is not None else {}
        k = min(v)
        c = inv(v[k], self.p)
        self.rows[k] = scale(v, c, self.p)
        if t is not None:
            self.tags[k] = scale(t, c, self.p)
        return None

    def contains(self, vec: dict) -> bool:
        v, _ = self._reduce_lead(vec, None)
        return not v


def rank(vectors: Iterable[dict], p: int) -> int:
    e = Echelon(p)
    for v in vectors:
        if v:
            e.add(v)
    return e.rank


def nullspace(columns: list[dict], p: int) -> list[dict]:
    """Basis of ``{c : sum_j c_j columns[j] = 0}`` as sparse vectors over
    column indices."""
    e = Echelon(p, track=True)
    out = []
    for j, col in enumerate(columns):
        dep = e.add(col, {j: 1})
        if dep is not None:
            out.append(dep)
    return out


def span_rank_with(base: list[dict], extra: list[dict], p: int) -> tuple[int, int]:
    """Return (rank(base), rank(base + extra))."""
    e = Echelon(p)
    for v in base:
        if v:
            e.add(v)
    r0 = e.rank
    for v in extra:
        if v:
            e.add(v)
    return r0, e.rank


def dense_to_sparse(rows) -> list[dict]:
    return [{j: int(x) for j, x in enumerate(r) if int(x)} for r in rows]

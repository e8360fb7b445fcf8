"""The standard N^k-graded polynomial ring over F_p and its monomial ideals.

Variables are laid out block by block.  Blocks 1..3 are named ``x``, ``y``,
``z`` (``x1, x2, ...``); further blocks use ``v<block>_<index>``.  Block
indices in the Python API are 0-based.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .degrees import MDeg, compositions

DEFAULT_PRIME = 32003
_LETTERS = "xyz"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class RingSpec:
    """Coordinate ring of P^{N_1} x ... x P^{N_k}; ``block_sizes[l] = N_l + 1``."""

    block_sizes: tuple
    prime: int = DEFAULT_PRIME

    def __post_init__(self):
        object.__setattr__(self, "block_sizes", tuple(int(b) for b in self.block_sizes))
        if not self.block_sizes or any(b < 1 for b in self.block_sizes):
            raise ValueError("every block needs at least one variable")
        if not _is_prime(self.prime):
            raise ValueError("characteristic %d is not prime" % self.prime)

    @property
    def k(self) -> int:
        return len(self.block_sizes)

    @property
    def nvars(self) -> int:
        return sum(self.block_sizes)

    @property
    def dim_x(self) -> int:
        """D = dim X = sum of N_l."""
        return self.nvars - self.k

    @property
    def dvec(self) -> MDeg:
        return self.block_sizes

    @cached_property
    def block_of(self) -> tuple:
        return tuple(l for l, b in enumerate(self.block_sizes) for _ in range(b))

    @cached_property
    def block_ranges(self) -> tuple:
        out, start = [], 0
        for b in self.block_sizes:
            out.append(range(start, start + b))
            start += b
        return tuple(out)

    @cached_property
    def var_names(self) -> tuple:
        names = []
        for l, b in enumerate(self.block_sizes):
            for i in range(b):
                if self.k <= 3 or l < 3:
                    names.append("%s%d" % (_LETTERS[l], i + 1))
                else:
                    names.append("v%d_%d" % (l + 1, i + 1))
        return tuple(names)

    @cached_property
    def var_index(self) -> dict:
        return {n: i for i, n in enumerate(self.var_names)}

    def with_blocks(self, block_sizes) -> "RingSpec":
        return RingSpec(tuple(block_sizes), self.prime)

    # monomials -----------------------------------------------------------
    def degree(self, mono: Sequence[int]) -> MDeg:
        out = [0] * self.k
        for e, l in zip(mono, self.block_of):
            out[l] += e
        return tuple(out)

    def var(self, i: int) -> tuple:
        return tuple(1 if j == i else 0 for j in range(self.nvars))

    @property
    def one(self) -> tuple:
        return (0,) * self.nvars

    def monomials(self, n: Sequence[int]) -> list[tuple]:
        """All monomials of multidegree ``n`` in a fixed deterministic order
        (empty if any coordinate is negative)."""
        return _monomials(self.block_sizes, tuple(n))

    def dim_piece(self, n: Sequence[int]) -> int:
        out = 1
        for b, q in zip(self.block_sizes, n):
            if q < 0:
                return 0
            out *= _binom(q + b - 1, b - 1)
        return out

    def mono_str(self, mono: Sequence[int]) -> str:
        parts = []
        for e, name in zip(mono, self.var_names):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"


def _binom(n: int, r: int) -> int:
    if r < 0 or n < r:
        return 0
    out = 1
    for i in range(r):
        out = out * (n - i) // (i + 1)
    return out


_MONO_CACHE: dict = {}


def _monomials(block_sizes: tuple, n: tuple) -> list[tuple]:
    key = (block_sizes, n)
    hit = _MONO_CACHE.get(key)
    if hit is not None:
        return hit
    if any(q < 0 for q in n):
        out = []
    else:
        per_block = [list(compositions(q, b)) for b, q in zip(block_sizes, n)]
        out = [sum(parts, ()) for parts in itertools.product(*per_block)]
    _MONO_CACHE[key] = out
    return out


def mono_mul(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(b: Sequence[int], a: Sequence[int]) -> bool:
    return all(y <= x for x, y in zip(a, b))


def mono_lcm(a: Sequence[int], b: Sequence[int]) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(mono: Sequence[int]) -> tuple:
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(mono), tuple(-x for x in reversed(mono)))


class Poly:
    """Polynomial over F_p as an immutable-by-convention ``{monomial: coef}``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingSpec, terms=None):
        self.ring = ring
        p = ring.prime
        clean = {}
        for m, c in (terms or {}).items():
            c %= p
            if c:
                clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, ring: RingSpec, mono, coef: int = 1) -> "Poly":
        return cls(ring, {tuple(mono): coef})

    @classmethod
    def parse(cls, ring: RingSpec, text: str) -> "Poly":
        return parse_poly(ring, text)

    def _check(self, other: "Poly"):
        if not isinstance(other, Poly) or other.ring != self.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(self.ring, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        p = self.ring.prime
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = (out.get(m, 0) + c1 * c2) % p
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        out = Poly.monomial(self.ring, self.ring.one)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set:
        return {self.ring.degree(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def multidegree(self) -> MDeg:
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("polynomial is zero or not multihomogeneous")
        return next(iter(degs))

    def leading_monomial(self):
        return max(self.terms, key=grevlex_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        p = self.ring.prime
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            sign = "+"
            if c > p // 2:
                c, sign = p - c, "-"
            ms = self.ring.mono_str(m)
            if ms == "1":
                body = str(c)
            elif c == 1:
                body = ms
            else:
                body = "%d*%s" % (c, ms)
            parts.append((sign, body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += " %s %s" % (sign, body)
        return s

    __repr__ = __str__


class PolySyntaxError(ValueError):
    def __init__(self, msg: str, column: int):
        super().__init__("%s (column %d)" % (msg, column))
        self.column = column


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*^()]))")


def parse_poly(ring: RingSpec, text: str) -> Poly:
    """Parse ``3*x1^2*y2 - y1*y2``-style sums of terms.  Columns are 1-based."""
    pos, terms = 0, {}
    p = ring.prime
    text = text.rstrip()
    if not text.strip():
        raise PolySyntaxError("empty polynomial", 1)
    sign = 1
    expect_term = True
    coef, mono = 1, [0] * ring.nvars
    have_factor = False
    last_was_factor = False
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError("unexpected character %r" % text[pos], pos + 1)
        col = m.start(m.lastindex) + 1
        num, name, op = m.groups()
        pos = m.end()
        if op in ("+", "-"):
            if have_factor:
                terms_add(terms, mono, sign * coef, p)
                coef, mono, have_factor = 1, [0] * ring.nvars, False
                sign = 1 if op == "+" else -1
            elif expect_term:
                sign *= 1 if op == "+" else -1
            else:
                raise PolySyntaxError("dangling operator", col)
            expect_term = True
            last_was_factor = False
            continue
        if op == "*":
            if not last_was_factor:
                raise PolySyntaxError("'*' without a left factor", col)
            last_was_factor = False
            continue
        if op in ("^", "**"):
            raise PolySyntaxError("exponent without a variable", col)
        if op in ("(", ")"):
            raise PolySyntaxError("parentheses are not supported", col)
        if have_factor and last_was_factor:
            raise PolySyntaxError("missing '*' between factors", col)
        if num is not None:
            coef = coef * int(num) % p
        else:
            idx = ring.var_index.get(name)
            if idx is None:
                raise PolySyntaxError("unknown variable %r" % name, col)
            e = 1
            m2 = re.compile(r"\s*(\^|\*\*)\s*(\d+)").match(text, pos)
            if m2:
                e = int(m2.group(2))
                pos = m2.end()
            mono[idx] += e
        have_factor = True
        last_was_factor = True
        expect_term = False
    if not have_factor:
        raise PolySyntaxError("expression ends with an operator", len(text) + 1)
    terms_add(terms, mono, sign * coef, p)
    return Poly(ring, terms)


def terms_add(terms: dict, mono, c: int, p: int) -> None:
    mono = tuple(mono)
    v = (terms.get(mono, 0) + c) % p
    if v:
        terms[mono] = v
    else:
        terms.pop(mono, None)


# monomial ideals --------------------------------------------------------

def _minimalize(gens: Iterable[tuple]) -> tuple:
    gens = sorted(set(gens), key=lambda g: (sum(g), g))
    keep: list[tuple] = []
    for g in gens:
        if not any(mono_divides(h, g) for h in keep):
            keep.append(g)
    return tuple(sorted(keep, key=lambda g: (sum(g), tuple(-x for x in g))))


@dataclass(frozen=True)
class MonomialIdeal:
    ring: RingSpec
    generators: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", _minimalize(tuple(g) for g in self.generators))

    @classmethod
    def unit(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, (ring.one,))

    @classmethod
    def zero(cls, ring: RingSpec) -> "MonomialIdeal":
        return cls(ring, ())

    def contains(self, mono) -> bool:
        return any(mono_divides(g, mono) for g in self.generators)

    def __contains__(self, mono) -> bool:
        return self.contains(mono)

    def is_unit(self) -> bool:
        return self.ring.one in self.generators

    def is_zero(self) -> bool:
        return not self.generators

    def __str__(self) -> str:
        return "(" + ", ".join(self.ring.mono_str(g) for g in self.generators) + ")"

    def support(self) -> tuple:
        """Squarefree generators (same radical)."""
        return _minimalize(tuple(min(e, 1) for e in g) for g in self.generators)


def monomial_ideal_sum(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    if A.ring != B.ring:
        raise ValueError("ring mismatch")
    return MonomialIdeal(A.ring, A.generators + B.generators)


def monomial_ideal_intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    if A.ring != B.ring:
        raise ValueError("ring mismatch")
    return MonomialIdeal(A.ring, [mono_lcm(a, b) for a in A.generators for b in B.generators])


def monomial_ideal_product(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(A.ring, [mono_mul(a, b) for a in A.generators for b in B.generators])


def monomial_ideal_power(U: MonomialIdeal, t: int) -> MonomialIdeal:
    if t < 1:
        raise ValueError("power must be >= 1")
    out = U
    for _ in range(t - 1):
        out = monomial_ideal_product(out, U)
    return out


def block_ideal(ring: RingSpec, l: int) -> MonomialIdeal:
    """M_l: generated by the variables of block ``l``."""
    return MonomialIdeal(ring, [ring.var(i) for i in ring.block_ranges[l]])


def ideal_family(ring: RingSpec, I: Iterable[int], J: Iterable[int]) -> MonomialIdeal:
    """M_{I,J} = (intersection of M_i, i in I) meet (sum of M_j, j in J).

    An empty intersection or an empty sum is read as the unit ideal, so
    ``M_{I,{}}`` is the plain intersection and ``M_{{},J}`` the plain sum.
    """
    I, J = set(I), set(J)
    if I & J:
        raise ValueError("index sets must be disjoint, got overlap %s" % sorted(I & J))
    if not (I | J) <= set(range(ring.k)):
        raise ValueError("block index out of range")
    left = MonomialIdeal.unit(ring)
    for i in sorted(I):
        left = monomial_ideal_intersect(left, block_ideal(ring, i))
    if J:
        right = MonomialIdeal.zero(ring)
        for j in sorted(J):
            right = monomial_ideal_sum(right, block_ideal(ring, j))
    else:
        right = MonomialIdeal.unit(ring)
    return monomial_ideal_intersect(left, right)


def irrelevant_ideal(ring: RingSpec) -> MonomialIdeal:
    return ideal_family(ring, range(ring.k), ())


def maximal_ideal(ring: RingSpec) -> MonomialIdeal:
    return ideal_family(ring, (), range(ring.k))


def ideal_label(I: Iterable[int], J: Iterable[int], k: int) -> str:
    I, J = sorted(set(I)), sorted(set(J))
    if I == list(range(k)) and not J:
        return "B"
    if not I and J == list(range(k)):
        return "M"
    fmt = lambda s: "{" + ",".join(str(i + 1) for i in s) + "}"
    return "M_%s,%s" % (fmt(I), fmt(J))


def all_ideal_pairs(k: int) -> Iterator[tuple]:
    """Every ordered pair of disjoint index sets (I, J) with I or J nonempty."""
    for assignment in itertools.product((0, 1, 2), repeat=k):
        I = tuple(i for i, a in enumerate(assignment) if a == 1)
        J = tuple(i for i, a in enumerate(assignment) if a == 2)
        if I or J:
            yield I, J

"""Brute-force reference computations that share no code with the package."""

import itertools


def laurent_count(N, j, a, reach=12):
    """h^j(P^N, O(a)) as a count of Laurent monomials in N+1 variables:
    nonnegative exponents for j = 0, all exponents <= -1 for j = N."""
    if j not in (0, N):
        return 0
    if N == 0:
        return 1  # the single Laurent monomial x^a
    if j == 0:
        rng = range(0, max(a, 0) + 1)
    else:
        rng = range(-reach, 0)
    return sum(1 for e in itertools.product(rng, repeat=N + 1) if sum(e) == a)


def kunneth_brute(block_sizes, i, n):
    Ns = [b - 1 for b in block_sizes]
    total = 0
    for js in itertools.product(*[range(N + 1) for N in Ns]):
        if sum(js) == i:
            prod = 1
            for N, j, a in zip(Ns, js, n):
                prod *= laurent_count(N, j, a)
            total += prod
    return total


def monomials(block_sizes, n):
    per = []
    for b, q in zip(block_sizes, n):
        if q < 0:
            return []
        per.append([e for e in itertools.product(range(q + 1), repeat=b) if sum(e) == q])
    return [sum(parts, ()) for parts in itertools.product(*per)]


def divides(g, m):
    return all(x <= y for x, y in zip(g, m))


def torsion_count(block_sizes, gens, n, power=6):
    """dim H^0_B(S/I)_n for a monomial ideal I: standard monomials m with
    m * u^power in I for every product u = (one variable per block)."""
    blocks = []
    start = 0
    for b in block_sizes:
        blocks.append(range(start, start + b))
        start += b
    nv = start
    products = []
    for choice in itertools.product(*blocks):
        u = [0] * nv
        for v in choice:
            u[v] = power
        products.append(u)
    count = 0
    for m in monomials(block_sizes, n):
        if any(divides(g, m) for g in gens):
            continue
        if all(any(divides(g, [a + b for a, b in zip(m, u)]) for g in gens) for u in products):
            count += 1
    return count

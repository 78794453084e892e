"""Independent brute-force oracles used to freeze expected test values.

Everything here is deliberately naive and separate from the package code
paths it checks.
"""
from __future__ import annotations

import math
from itertools import combinations


def trial_factor(n: int) -> list[tuple[int, int]]:
    """Plain trial division, no sieve, no rho."""
    out = []
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def trial_is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def zsigmondy_brute(p: int, n: int) -> int | None:
    """Least primitive prime divisor of p^n - 1; independent factorization
    via sympy, divisibility checked on the raw integers."""
    import sympy

    value = p**n - 1
    if value < 2:
        return None
    for t in sorted(sympy.primefactors(value)):
        if all((p**k - 1) % t for k in range(1, n)):
            return t
    return None


def catalan_pairs_brute(p_max, f_max, r_max, m_max):
    """Double loop: intersect {p^f + 1} with {r^m} by value."""
    lhs: dict[int, list[tuple[int, int]]] = {}
    for p in range(2, p_max + 1):
        if not trial_is_prime(p):
            continue
        for f in range(1, f_max + 1):
            v = p**f + 1
            if v >= 1 << 63:
                break
            lhs.setdefault(v, []).append((p, f))
    cap = max(lhs) if lhs else 0
    rhs: dict[int, list[tuple[int, int]]] = {}
    for r in range(2, r_max + 1):
        if not trial_is_prime(r):
            continue
        for m in range(1, m_max + 1):
            v = r**m
            if v > cap:
                break
            rhs.setdefault(v, []).append((r, m))
    hits = []
    for v in sorted(set(lhs) & set(rhs)):
        for p, f in lhs[v]:
            for r, m in rhs[v]:
                hits.append((p, f, r, m))
    return sorted(hits)


def all_pairs_shortest(vertices, edges):
    """Floyd-Warshall distances; math.inf for unreachable."""
    idx = {v: i for i, v in enumerate(vertices)}
    n = len(vertices)
    dist = [[0 if i == j else math.inf for j in range(n)] for i in range(n)]
    for a, b in edges:
        dist[idx[a]][idx[b]] = 1
        dist[idx[b]][idx[a]] = 1
    for k in range(n):
        for i in range(n):
            for j in range(n):
                via = dist[i][k] + dist[k][j]
                if via < dist[i][j]:
                    dist[i][j] = via
    return dist


def clique_number_brute(vertices, edges):
    """Largest k such that some k-subset is pairwise adjacent."""
    es = {frozenset(e) for e in edges}
    best = 1 if vertices else 0
    for k in range(2, len(vertices) + 1):
        for sub in combinations(vertices, k):
            if all(frozenset(pair) in es for pair in combinations(sub, 2)):
                best = k
                break
        else:
            break
    return best


def two_color_brute(vertices, edges):
    """Try every 2-coloring; True iff one is proper."""
    vs = list(vertices)
    es = [tuple(e) for e in edges]
    for mask in range(1 << len(vs)):
        color = {v: (mask >> i) & 1 for i, v in enumerate(vs)}
        if all(color[a] != color[b] for a, b in es):
            return True
    return False

"""Prime-divisor graphs of degree sets and the predicates used on them.

A ``CharacterGraph`` has sorted prime vertices and symmetric irreflexive
adjacency.  Built from a degree set, two primes are adjacent exactly when
their product divides some degree, which makes the graph a union of cliques,
one per degree's prime support.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Optional

from .catalog import cd_direct_product, degree_set
from .errors import CapacityError, DomainError
from .numtheory import prime_power, prime_support

CLIQUE_VERTEX_CAP = 16


@dataclass(frozen=True)
class CharacterGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(b if a == v else a for a, b in self.edges if v in (a, b)))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def make_graph(vertices, edges) -> CharacterGraph:
    """Normalize vertex/edge data into a CharacterGraph."""
    vs = tuple(sorted(set(vertices)))
    vset = set(vs)
    norm = set()
    for a, b in edges:
        if a == b:
            raise DomainError(f"self-loop at {a}")
        if a not in vset or b not in vset:
            raise DomainError(f"edge ({a}, {b}) outside vertex set")
        norm.add((min(a, b), max(a, b)))
    return CharacterGraph(vs, frozenset(norm))


def build(degrees) -> CharacterGraph:
    """The graph on all primes dividing some degree; p ~ q iff pq divides
    a single degree."""
    ds = degree_set(degrees)
    vertices: set[int] = set()
    edges: set[tuple[int, int]] = set()
    for d in ds:
        if d == 1:
            continue
        ps = prime_support(d)
        vertices.update(ps)
        edges.update(combinations(ps, 2))  # distinct primes of d: pq | d
    return make_graph(vertices, edges)


def induced(g: CharacterGraph, xs) -> CharacterGraph:
    xs = set(xs)
    if not xs <= set(g.vertices):
        raise DomainError(f"induced: {sorted(xs - set(g.vertices))} not in vertex set")
    return make_graph(xs, (e for e in g.edges if e[0] in xs and e[1] in xs))


def complement(g: CharacterGraph) -> CharacterGraph:
    all_pairs = set(combinations(g.vertices, 2))
    return make_graph(g.vertices, all_pairs - set(g.edges))


def _adjacency(g: CharacterGraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def components(g: CharacterGraph) -> list[tuple[int, ...]]:
    """Connected components, sorted by least vertex."""
    adj = _adjacency(g)
    seen: set[int] = set()
    comps = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    comps.sort(key=lambda c: c[0])
    return comps


def is_connected(g: CharacterGraph) -> bool:
    return len(components(g)) <= 1


def _bfs_depths(adj, source) -> dict[int, int]:
    depth = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if y not in depth:
                depth[y] = depth[x] + 1
                queue.append(y)
    return depth


def diameter(g: CharacterGraph) -> Optional[int]:
    """Longest shortest path when connected; None for disconnected graphs;
    0 for the empty and one-vertex graphs."""
    if len(g.vertices) <= 1:
        return 0
    adj = _adjacency(g)
    worst = 0
    for v in g.vertices:
        depth = _bfs_depths(adj, v)
        if len(depth) != len(g.vertices):
            return None
        worst = max(worst, max(depth.values()))
    return worst


def two_coloring(g: CharacterGraph) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A proper 2-coloring as a pair of parts, or None."""
    adj = _adjacency(g)
    color: dict[int, int] = {}
    for v in g.vertices:
        if v in color:
            continue
        color[v] = 0
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    part0 = tuple(v for v in g.vertices if color[v] == 0)
    part1 = tuple(v for v in g.vertices if color[v] == 1)
    return part0, part1


def is_bipartite(g: CharacterGraph) -> bool:
    return two_coloring(g) is not None


def clique_number(g: CharacterGraph) -> int:
    """Maximum clique size by exhaustive branch and bound; 0 for the empty
    graph.  Capped at 16 vertices."""
    n = len(g.vertices)
    if n == 0:
        return 0
    if n > CLIQUE_VERTEX_CAP:
        raise CapacityError(f"clique_number: {n} vertices exceeds cap {CLIQUE_VERTEX_CAP}")
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = [0] * n
    for a, b in g.edges:
        adj[index[a]] |= 1 << index[b]
        adj[index[b]] |= 1 << index[a]
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            expand(cand & adj[v], size + 1)

    expand((1 << n) - 1, 0)
    return best


def is_kn_free(g: CharacterGraph, n: int) -> bool:
    return clique_number(g) < n


def is_path5(g: CharacterGraph) -> bool:
    """True iff g is a simple path on exactly 5 vertices."""
    if len(g.vertices) != 5 or len(g.edges) != 4 or not is_connected(g):
        return False
    degs = sorted(len(g.neighbors(v)) for v in g.vertices)
    return degs == [1, 1, 2, 2, 2]


def graph_psl2(q: int) -> CharacterGraph:
    """The degree-prime graph of PSL2(q), built directly from its known
    component structure rather than from a degree list.

    Even q: complete components {2}, pi(q-1), pi(q+1).  Odd q > 5: the base
    prime is isolated; pi(q^2-1) is complete if q-1 or q+1 is a 2-power, and
    otherwise splits as 2 joined to two cliques pi(q-1)-{2} and pi(q+1)-{2}
    with no edges between them.  q = 5 behaves like q = 4 (A5): three
    isolated vertices.
    """
    pp = prime_power(q) if q >= 4 else None
    if pp is None:
        raise DomainError(f"graph_psl2: q must be a prime power >= 4, got {q}")
    u, _ = pp
    if q == 5:
        return make_graph((2, 3, 5), ())
    if q % 2 == 0:
        minus, plus = prime_support(q - 1), prime_support(q + 1)
        vertices = {2, *minus, *plus}
        edges = set(combinations(minus, 2)) | set(combinations(plus, 2))
        return make_graph(vertices, edges)
    minus, plus = prime_support(q - 1), prime_support(q + 1)
    rest = sorted(set(minus) | set(plus))
    vertices = {u, *rest}
    if (q - 1) & (q - 2) == 0 or (q + 1) & q == 0:  # q -+ 1 a power of 2
        edges = set(combinations(rest, 2))
    else:
        m = [p for p in minus if p != 2]
        p_ = [p for p in plus if p != 2]
        edges = set(combinations(m, 2)) | set(combinations(p_, 2))
        edges |= {(2, x) for x in m + p_}
    return make_graph(vertices, edges)


class Diam3Partition(NamedTuple):
    rho1: tuple[int, ...]
    rho2: tuple[int, ...]
    rho3: tuple[int, ...]
    rho4: tuple[int, ...]


def _partition_valid_pairwise(labels, i, g_edge, vs) -> bool:
    """Incremental constraints between vertex i and all earlier vertices."""
    li = labels[i]
    for j in range(i):
        lj = labels[j]
        lo, hi = min(li, lj), max(li, lj)
        if g_edge(vs[i], vs[j]):
            # no 1-3, 1-4 or 2-4 edges
            if (lo, hi) in ((1, 3), (1, 4), (2, 4)):
                return False
        else:
            # rho1+rho2 and rho3+rho4 induce complete subgraphs
            if hi <= 2 or lo >= 3:
                return False
    return True


def diam3_partition(g: CharacterGraph) -> Optional[Diam3Partition]:
    """Lexicographically least four-block split of a connected diameter-3
    graph: rho1 sees only rho2, rho4 sees only rho3, the two halves are
    complete, and rho2/rho3 dominate each other."""
    if diameter(g) != 3:
        raise DomainError("diam3_partition: graph must be connected with diameter 3")
    vs = g.vertices
    n = len(vs)
    labels = [0] * n

    def g_edge(a, b):
        return g.has_edge(a, b)

    def final_check() -> bool:
        blocks: dict[int, list[int]] = {1: [], 2: [], 3: [], 4: []}
        for v, l in zip(vs, labels):
            blocks[l].append(v)
        for v in blocks[2]:
            if not any(g.has_edge(v, w) for w in blocks[3]):
                return False
        for v in blocks[3]:
            if not any(g.has_edge(v, w) for w in blocks[2]):
                return False
        return True

    def search(i: int) -> bool:
        if i == n:
            return final_check()
        for lab in (1, 2, 3, 4):
            labels[i] = lab
            if _partition_valid_pairwise(labels, i, g_edge, vs):
                if search(i + 1):
                    return True
        labels[i] = 0
        return False

    if not search(0):
        return None
    blocks: dict[int, list[int]] = {1: [], 2: [], 3: [], 4: []}
    for v, l in zip(vs, labels):
        blocks[l].append(v)
    return Diam3Partition(*(tuple(blocks[k]) for k in (1, 2, 3, 4)))


def check_diam3_partition(g: CharacterGraph, part: Diam3Partition) -> bool:
    """Re-validate a four-block split against its defining constraints."""
    blocks = [set(b) for b in part]
    if set().union(*blocks) != set(g.vertices):
        return False
    if sum(len(b) for b in blocks) != len(g.vertices):
        return False
    r1, r2, r3, r4 = blocks
    for a, b in g.edges:
        for x, y in ((a, b), (b, a)):
            if x in r1 and (y in r3 or y in r4):
                return False
            if x in r4 and (y in r1 or y in r2):
                return False
    for half in (r1 | r2, r3 | r4):
        for x, y in combinations(sorted(half), 2):
            if not g.has_edge(x, y):
                return False
    return all(
        any(g.has_edge(v, w) for w in r3) for v in r2
    ) and all(any(g.has_edge(v, w) for w in r2) for v in r3)


def join_product_check(degrees_s, degrees_t) -> bool:
    """Verify that the graph of a product degree set equals the join
    K_F * g_S[rho_S - F] * g_T[rho_T - F], with F the common vertices."""
    ds, dt = degree_set(degrees_s), degree_set(degrees_t)
    gs, gt = build(ds), build(dt)
    f = set(gs.vertices) & set(gt.vertices)
    s_only = [v for v in gs.vertices if v not in f]
    t_only = [v for v in gt.vertices if v not in f]
    vertices = set(gs.vertices) | set(gt.vertices)
    edges = set(combinations(sorted(f), 2))
    edges |= set(induced(gs, s_only).edges)
    edges |= set(induced(gt, t_only).edges)
    parts = [sorted(f), s_only, t_only]
    for i in range(3):
        for j in range(i + 1, 3):
            edges |= {(min(a, b), max(a, b)) for a in parts[i] for b in parts[j]}
    rhs = make_graph(vertices, edges)
    lhs = build(cd_direct_product(ds, dt))
    return lhs == rhs


def to_dot(g: CharacterGraph) -> str:
    """DOT text: one line per vertex, one ``--`` line per edge, sorted."""
    lines = ["graph {"]
    lines += [f"  {v};" for v in g.vertices]
    lines += [f"  {a} -- {b};" for a, b in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: CharacterGraph) -> str:
    payload = {"vertices": list(g.vertices), "edges": [list(e) for e in g.sorted_edges()]}
    return json.dumps(payload, separators=(", ", ": "))

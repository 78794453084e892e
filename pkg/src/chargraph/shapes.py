"""Expression algebra for graphs assembled from complete blocks.

Grammar: ``Kn`` with n >= 1, a union operator (either the set-union glyph or
``U``) and a join operator (either the low asterisk glyph or ``*``).  Join
binds tighter than union; parentheses group.  Join means disjoint union plus
all cross edges.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union as _U

from .errors import CapacityError, ShapeSyntaxError
from .graphs import CharacterGraph, make_graph

MATCH_VERTEX_CAP = 10

UNION_GLYPHS = ("∪", "U")
JOIN_GLYPHS = ("∗", "*")


@dataclass(frozen=True)
class K:
    n: int


@dataclass(frozen=True)
class Union:
    left: "ShapeExpr"
    right: "ShapeExpr"


@dataclass(frozen=True)
class Join:
    left: "ShapeExpr"
    right: "ShapeExpr"


ShapeExpr = _U[K, Union, Join]


def vertex_count(s: ShapeExpr) -> int:
    if isinstance(s, K):
        return s.n
    return vertex_count(s.left) + vertex_count(s.right)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ShapeSyntaxError:
        return ShapeSyntaxError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> ShapeExpr:
        node = self.term()
        while self.peek() in UNION_GLYPHS:
            self.pos += 1
            node = Union(node, self.term())
        return node

    def term(self) -> ShapeExpr:
        node = self.atom()
        while self.peek() in JOIN_GLYPHS:
            self.pos += 1
            node = Join(node, self.atom())
        return node

    def atom(self) -> ShapeExpr:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            node = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return node
        if ch == "K":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if self.pos == start:
                raise self.error("expected block size after 'K'")
            n = int(self.text[start : self.pos])
            if n < 1:
                raise self.error("block size must be >= 1")
            return K(n)
        raise self.error(f"unexpected {ch!r}" if ch else "unexpected end of input")


def parse_shape(text: str) -> ShapeExpr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.peek():
        raise parser.error(f"trailing input {parser.peek()!r}")
    return node


def render_shape(s: ShapeExpr) -> str:
    """Text form that re-parses to an isomorphic expression."""
    if isinstance(s, K):
        return f"K{s.n}"
    if isinstance(s, Join):
        parts = []
        for child in (s.left, s.right):
            text = render_shape(child)
            parts.append(f"({text})" if isinstance(child, Union) else text)
        return "∗".join(parts)
    return f"{render_shape(s.left)}∪{render_shape(s.right)}"


def shape_to_graph(s: ShapeExpr) -> CharacterGraph:
    """Realize the expression on anonymous vertices 0..n-1."""

    def realize(node: ShapeExpr, offset: int) -> tuple[int, set[tuple[int, int]]]:
        if isinstance(node, K):
            vs = range(offset, offset + node.n)
            return node.n, set(combinations(vs, 2))
        ln, ledges = realize(node.left, offset)
        rn, redges = realize(node.right, offset + ln)
        edges = ledges | redges
        if isinstance(node, Join):
            edges |= {
                (a, b)
                for a in range(offset, offset + ln)
                for b in range(offset + ln, offset + ln + rn)
            }
        return ln + rn, edges

    n, edges = realize(s, 0)
    return make_graph(range(n), edges)


def _isomorphic(g: CharacterGraph, h: CharacterGraph) -> bool:
    """Backtracking search over all degree-compatible vertex bijections."""
    if len(g.vertices) != len(h.vertices) or len(g.edges) != len(h.edges):
        return False
    gdeg = {v: len(g.neighbors(v)) for v in g.vertices}
    hdeg = {v: len(h.neighbors(v)) for v in h.vertices}
    if sorted(gdeg.values()) != sorted(hdeg.values()):
        return False
    order = sorted(g.vertices, key=lambda v: -gdeg[v])
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def assign(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in h.vertices:
            if w in used or hdeg[w] != gdeg[v]:
                continue
            if all(
                g.has_edge(v, u) == h.has_edge(w, mapping[u])
                for u in mapping
            ):
                mapping[v] = w
                used.add(w)
                if assign(i + 1):
                    return True
                del mapping[v]
                used.remove(w)
        return False

    return assign(0)


def matches_shape(g: CharacterGraph, s: ShapeExpr) -> bool:
    """Whether g is isomorphic to the realized shape (exhaustive search,
    capped at 10 vertices)."""
    n = vertex_count(s)
    if len(g.vertices) != n:
        return False
    if n > MATCH_VERTEX_CAP:
        raise CapacityError(f"matches_shape: {n} vertices exceeds cap {MATCH_VERTEX_CAP}")
    return _isomorphic(g, shape_to_graph(s))


def union_of_completes(sizes) -> ShapeExpr:
    """K_{a} u K_{b} u ... with the block sizes sorted ascending."""
    sizes = sorted(sizes)
    if not sizes:
        raise ShapeSyntaxError("at least one block required", 0)
    node: ShapeExpr = K(sizes[0])
    for n in sizes[1:]:
        node = Union(node, K(n))
    return node

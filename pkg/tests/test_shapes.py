from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from chargraph import graphs, shapes
from chargraph.errors import CapacityError, ShapeSyntaxError


def shape_exprs(max_leaf=3, max_depth=3):
    leaves = st.integers(min_value=1, max_value=max_leaf).map(shapes.K)

    def extend(children):
        return st.tuples(children, children).flatmap(
            lambda pair: st.sampled_from(
                [shapes.Union(*pair), shapes.Join(*pair)]
            ) if shapes.vertex_count(pair[0]) + shapes.vertex_count(pair[1]) <= 10
            else st.just(pair[0])
        )

    return st.recursive(leaves, extend, max_leaves=4)


class TestParse:
    def test_unicode_and_ascii_agree(self):
        a = shapes.parse_shape("K1∪((K1∪K2)∗K1)")
        b = shapes.parse_shape("K1U((K1UK2)*K1)")
        assert a == b

    def test_precedence(self):
        # join binds tighter than union
        s = shapes.parse_shape("K1UK2*K3")
        assert s == shapes.Union(shapes.K(1), shapes.Join(shapes.K(2), shapes.K(3)))

    def test_whitespace(self):
        assert shapes.parse_shape(" K2 * K1 ") == shapes.Join(shapes.K(2), shapes.K(1))

    def test_syntax_error_position(self):
        with pytest.raises(ShapeSyntaxError) as err:
            shapes.parse_shape("K1U(K2")
        assert err.value.position == 6

    def test_bad_leaf(self):
        with pytest.raises(ShapeSyntaxError):
            shapes.parse_shape("K")
        with pytest.raises(ShapeSyntaxError):
            shapes.parse_shape("K0")
        with pytest.raises(ShapeSyntaxError):
            shapes.parse_shape("Q3")


class TestRealize:
    def test_k3_is_triangle(self):
        g = shapes.shape_to_graph(shapes.K(3))
        assert len(g.edges) == 3

    def test_union_disjoint(self):
        g = shapes.shape_to_graph(shapes.parse_shape("K2UK2"))
        assert len(g.vertices) == 4 and len(g.edges) == 2

    def test_join_cross_edges(self):
        g = shapes.shape_to_graph(shapes.parse_shape("K2*K2"))
        assert len(g.edges) == 6  # complete on 4 vertices

    def test_join_of_three_parts_fully_crossed(self):
        g = shapes.shape_to_graph(shapes.parse_shape("K1*K1*K1"))
        assert len(g.edges) == 3


class TestMatches:
    def test_psl2_11(self):
        assert shapes.matches_shape(
            graphs.graph_psl2(11), shapes.parse_shape("K1∪((K1∪K1)∗K1)")
        )

    def test_psl2_127(self):
        assert shapes.matches_shape(graphs.graph_psl2(127), shapes.parse_shape("K1UK3"))

    def test_psl2_29(self):
        assert shapes.matches_shape(
            graphs.graph_psl2(29), shapes.parse_shape("K1U((K1UK2)*K1)")
        )

    def test_count_mismatch_is_false(self):
        g = graphs.make_graph(range(2, 30), ())  # 14 isolated vertices
        assert not shapes.matches_shape(g, shapes.K(3))

    def test_cap(self):
        big = shapes.union_of_completes([1] * 11)
        g = graphs.make_graph(range(11), ())
        with pytest.raises(CapacityError):
            shapes.matches_shape(g, big)

    @given(shape_exprs(), st.randoms(use_true_random=False))
    @settings(max_examples=80)
    def test_isomorphism_invariant_under_relabeling(self, s, rnd):
        g = shapes.shape_to_graph(s)
        labels = list(range(100, 100 + len(g.vertices)))
        rnd.shuffle(labels)
        relabel = dict(zip(g.vertices, labels))
        h = graphs.make_graph(labels, [(relabel[a], relabel[b]) for a, b in g.edges])
        assert shapes.matches_shape(h, s)

    @given(shape_exprs())
    @settings(max_examples=80)
    def test_render_round_trip(self, s):
        back = shapes.parse_shape(shapes.render_shape(s))
        assert shapes.matches_shape(shapes.shape_to_graph(back), s)


class TestHelpers:
    def test_union_of_completes_sorted(self):
        s = shapes.union_of_completes([2, 1, 1])
        assert shapes.render_shape(s) == "K1∪K1∪K2"

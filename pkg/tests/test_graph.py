import itertools

import pytest
from hypothesis import given, settings, strategies as st

from addcolor.graph import (
    FALSE_TWINS,
    SINGLETON,
    TRUE_TWINS,
    Graph,
    Labeling,
    connected_components,
    false_twin_classes,
    induced_subgraph,
    join,
    neighborhood_sum,
    true_twin_classes,
    twin_refined_partition,
    verify_additive_coloring,
)
from addcolor.bounds import is_eta_one

from oracles import is_additive


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    edges = [p for idx, p in enumerate(pairs) if mask >> idx & 1]
    return Graph.from_edges(n, edges)


class TestConstruction:
    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            Graph.from_edges(2, [(0, 2)])

    def test_parallel_edges_collapse(self):
        g = Graph.from_edges(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_adjacency_symmetric(self):
        g = cycle(5)
        for v in range(5):
            for u in g.neighbors[v]:
                assert v in g.neighbors[u]

    def test_labeling_requires_positive(self):
        with pytest.raises(ValueError):
            Labeling((1, 0, 2))

    def test_labeling_k(self):
        assert Labeling((1, 3, 2)).k == 3
        assert Labeling(()).k == 0


class TestNeighborhoodSum:
    def test_path_unit_labels(self):
        assert neighborhood_sum(path(3), Labeling((1, 1, 1)), 1) == 2

    def test_cycle5_second_vertex(self):
        # second vertex of the 5-circuit under the odd-cycle certificate
        assert neighborhood_sum(cycle(5), Labeling((2, 1, 3, 1, 1)), 1) == 5

    def test_isolated_vertex(self):
        g = Graph.from_edges(3, [(0, 1)])
        assert neighborhood_sum(g, Labeling((4, 4, 4)), 2) == 0

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            neighborhood_sum(path(3), Labeling((1, 1, 1)), 3)


class TestVerify:
    def test_k2_constant_fails(self):
        assert not verify_additive_coloring(complete(2), Labeling((1, 1)))

    def test_cycle5_certificate(self):
        assert verify_additive_coloring(cycle(5), Labeling((2, 1, 3, 1, 1)))

    def test_star_all_ones(self):
        assert verify_additive_coloring(star(3), Labeling((1, 1, 1, 1)))

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            verify_additive_coloring(path(3), Labeling((1, 1)))

    def test_edgeless_vacuous(self):
        assert verify_additive_coloring(Graph.from_edges(4, []), Labeling((1,) * 4))

    @given(graphs(max_n=7), st.integers(1, 4))
    def test_constant_labeling_iff_degree_distinct(self, g, c):
        # scaling all labels by c preserves every sum comparison
        assert verify_additive_coloring(g, Labeling((c,) * g.n)) == is_eta_one(g)

    @given(graphs(min_n=2, max_n=7), st.randoms(use_true_random=False))
    def test_isomorphism_invariance(self, g, rng):
        labels = tuple(rng.randint(1, 3) for _ in range(g.n))
        perm = list(range(g.n))
        rng.shuffle(perm)
        mapped = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        mapped_labels = [0] * g.n
        for v in range(g.n):
            mapped_labels[perm[v]] = labels[v]
        assert verify_additive_coloring(g, Labeling(labels)) == verify_additive_coloring(
            mapped, Labeling(tuple(mapped_labels))
        )

    @given(graphs(max_n=6))
    def test_agrees_with_oracle(self, g):
        for f in itertools.islice(itertools.product((1, 2), repeat=g.n), 64):
            assert verify_additive_coloring(g, Labeling(f)) == is_additive(g, f)


class TestTwins:
    def test_complete_one_class(self):
        assert true_twin_classes(complete(4)) == [[0, 1, 2, 3]]

    def test_cycle_all_singletons(self):
        assert true_twin_classes(cycle(5)) == [[0], [1], [2], [3], [4]]

    def test_complete_split_clique_class(self):
        # 3-clique joined to 2 stable vertices: the clique is one true-twin class
        g = join(complete(3), Graph.from_edges(2, []))
        classes = true_twin_classes(g)
        assert [0, 1, 2] in classes
        assert sorted(len(c) for c in classes) == [1, 1, 3]

    def test_star_false_twins(self):
        part = twin_refined_partition(star(3))
        kinds = {cls.kind: cls.vertices for cls in part.classes}
        assert kinds[FALSE_TWINS] == (1, 2, 3)
        assert kinds[SINGLETON] == (0,)

    def test_complete_true_class(self):
        part = twin_refined_partition(complete(4))
        assert part.classes == (part.classes[0],)
        assert part.classes[0].kind == TRUE_TWINS

    def test_path4_all_singletons(self):
        part = twin_refined_partition(path(4))
        assert all(cls.kind == SINGLETON for cls in part.classes)
        assert len(part.classes) == 4

    def test_isolated_vertices_are_false_twins(self):
        g = Graph.from_edges(4, [(0, 1)])
        part = twin_refined_partition(g)
        kinds = {cls.vertices: cls.kind for cls in part.classes}
        assert kinds[(2, 3)] == FALSE_TWINS

    @given(graphs(max_n=8))
    def test_partition_covers_and_verifies(self, g):
        part = twin_refined_partition(g)
        seen = sorted(v for cls in part.classes for v in cls.vertices)
        assert seen == list(range(g.n))
        for cls in part.classes:
            first = cls.vertices[0]
            for v in cls.vertices[1:]:
                if cls.kind == TRUE_TWINS:
                    assert g.closed_mask(v) == g.closed_mask(first)
                else:
                    assert g.masks[v] == g.masks[first]
        for cls in part.classes:
            if cls.kind != SINGLETON:
                assert len(cls.vertices) >= 2

    @given(graphs(max_n=7))
    def test_false_classes_partition(self, g):
        classes = false_twin_classes(g)
        assert sorted(v for c in classes for v in c) == list(range(g.n))


class TestJoin:
    def test_fan_shape(self):
        g = join(path(4), complete(1))
        assert g.n == 5 and g.edge_count == 3 + 4
        assert g.degree(4) == 4

    def test_wheel_shape(self):
        g = join(cycle(4), complete(1))
        assert g.n == 5 and g.edge_count == 8

    def test_complete_split_edge_count(self):
        g = join(Graph.from_edges(3, []), complete(2))
        assert g.edge_count == 0 + 1 + 3 * 2

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=40)
    def test_join_sizes_and_degrees(self, g1, g2):
        g = join(g1, g2)
        assert g.n == g1.n + g2.n
        assert g.edge_count == g1.edge_count + g2.edge_count + g1.n * g2.n
        for v in range(g1.n):
            assert g.degree(v) == g1.degree(v) + g2.n


class TestComponents:
    def test_two_components(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        assert connected_components(g) == [[0, 1, 2], [3, 4]]

    def test_induced_subgraph(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
        sub = induced_subgraph(g, [3, 4])
        assert sub.n == 2 and sub.edge_count == 1

    def test_connected_cycle(self):
        assert len(connected_components(cycle(6))) == 1

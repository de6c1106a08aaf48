import pytest
from hypothesis import given, settings, strategies as st

from pathenergy.graphs import (
    Graph,
    antiprism,
    block_decomposition,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle,
    degrees,
    girth,
    hypercube,
    is_biconnected,
    is_connected,
    line_graph,
    max_degree,
    path_graph,
    prism,
    star,
    wheel,
)


def random_graph(rng, n, p=0.5):
    import itertools
    return Graph.from_edges(
        n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    )


class TestGraphType:
    def test_rejects_loop(self):
        with pytest.raises(ValueError, match="loop"):
            Graph(3, ((1, 1),))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, ((0, 2),))

    def test_rejects_duplicate(self):
        with pytest.raises(ValueError, match="duplicate"):
            Graph(3, ((0, 1), (0, 1)))

    def test_from_edges_normalizes(self):
        g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))

    def test_adjacency_consistent(self):
        g = Graph.from_edges(4, [(0, 1), (1, 3), (2, 3)])
        for u in range(4):
            for v in g.neighbors(u):
                assert u in g.neighbors(v)
        assert sum(g.degree(v) for v in range(4)) == 2 * g.m

    def test_relabel_roundtrip(self):
        g = complete_bipartite(2, 3)
        perm = [4, 3, 2, 1, 0]
        inverse = [perm.index(i) for i in range(5)]
        assert g.relabel(perm).relabel(inverse) == g


class TestFamilies:
    def test_complete(self):
        g = complete_graph(4)
        assert (g.n, g.m) == (4, 6)
        assert degrees(g) == (3, 3, 3, 3)
        assert max_degree(g) == 3

    @pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (3, 3), (4, 2)])
    def test_complete_bipartite(self, p, q):
        g = complete_bipartite(p, q)
        assert (g.n, g.m) == (p + q, p * q)
        assert sorted(degrees(g)) == sorted([q] * p + [p] * q)

    def test_prism_counts(self):
        g = prism(3)
        assert (g.n, g.m) == (6, 9)
        assert set(degrees(g)) == {3}

    def test_antiprism_counts(self):
        g = antiprism(5)
        assert (g.n, g.m) == (10, 20)
        assert set(degrees(g)) == {4}

    def test_hypercube_regular(self):
        for d in range(5):
            g = hypercube(d)
            assert g.n == 2**d
            assert all(deg == d for deg in degrees(g))
        assert hypercube(1) == complete_graph(2)

    def test_wheel_is_k4_at_minimum(self):
        assert wheel(4) == complete_graph(4)

    def test_wheel_degrees(self):
        g = wheel(7)
        assert g.n == 7
        assert sorted(degrees(g)) == [3] * 6 + [6]

    def test_star_and_path(self):
        assert degrees(star(5)) == (4, 1, 1, 1, 1)
        assert path_graph(2) == complete_graph(2)

    @pytest.mark.parametrize("build,arg", [
        (cycle, 2), (wheel, 3), (prism, 2), (antiprism, 2),
        (complete_graph, 0), (star, 0), (path_graph, 0),
    ])
    def test_below_minimum_raises(self, build, arg):
        with pytest.raises(ValueError):
            build(arg)

    @given(st.randoms(use_true_random=False))
    @settings(max_examples=30)
    def test_degree_sum_is_twice_edges(self, rng):
        g = random_graph(rng, rng.randint(0, 12))
        assert sum(degrees(g)) == 2 * g.m


class TestOperators:
    def test_line_graph_of_complete(self):
        # L(K_p) is 2(p-2)-regular on p(p-1)/2 vertices
        for p in range(3, 9):
            lg = line_graph(complete_graph(p))
            assert lg.n == p * (p - 1) // 2
            assert set(degrees(lg)) == {2 * (p - 2)}

    def test_line_graph_of_bipartite(self):
        # L(K_{p,q}) is (p+q-2)-regular on pq vertices
        for p in range(1, 6):
            for q in range(1, 6):
                lg = line_graph(complete_bipartite(p, q))
                assert lg.n == p * q
                assert set(degrees(lg)) <= {p + q - 2}

    def test_line_graph_small(self):
        assert line_graph(path_graph(2)).n == 1
        assert line_graph(Graph(3)).n == 0
        assert set(degrees(line_graph(complete_bipartite(2, 3)))) == {3}

    def test_cartesian_product_identity(self):
        h = complete_bipartite(2, 3)
        assert cartesian_product(complete_graph(1), h) == h

    def test_cartesian_product_c4(self):
        from pathenergy.enumeration import canonical_key
        k2 = complete_graph(2)
        assert canonical_key(cartesian_product(k2, k2)) == canonical_key(cycle(4))

    def test_product_of_hypercubes_looks_like_hypercube(self):
        for p, q in [(1, 1), (1, 2), (2, 2), (1, 3)]:
            g = cartesian_product(hypercube(p), hypercube(q))
            assert g.n == 2 ** (p + q)
            assert set(degrees(g)) == {p + q}


class TestConnectivity:
    def test_single_vertex_connected(self):
        assert is_connected(complete_graph(1))

    def test_empty_graph_not_connected(self):
        assert not is_connected(Graph(0))
        assert max_degree(Graph(0)) == 0

    def test_two_disjoint_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 3)])
        assert not is_connected(g)
        assert connected_components(g) == [[0, 1], [2, 3]]

    def test_prism_connected(self):
        assert is_connected(prism(3))

    def test_girth(self):
        assert girth(path_graph(6)) is None
        assert girth(cycle(7)) == 7
        assert girth(complete_graph(4)) == 3
        assert girth(hypercube(3)) == 4
        assert girth(prism(5)) == 4


class TestBlocks:
    def test_path_graph_blocks(self):
        dec = block_decomposition(path_graph(4))
        assert dec.block_count == 3
        assert dec.nontrivial_block_count == 0
        assert len(dec.articulation_points) == 2

    def test_cycle_single_block(self):
        dec = block_decomposition(cycle(5))
        assert dec.blocks == ((0, 1, 2, 3, 4),)
        assert not dec.articulation_points

    def test_two_triangles_sharing_vertex(self):
        g = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        dec = block_decomposition(g)
        assert dec.block_count == 2
        assert dec.nontrivial_block_count == 2
        assert dec.articulation_points == frozenset({0})

    def test_edge_partition(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 3), (1, 6)])
        dec = block_decomposition(g)
        edge_cover = []
        for block in dec.blocks:
            bs = set(block)
            edge_cover.extend(e for e in g.edges if e[0] in bs and e[1] in bs)
        assert sorted(edge_cover) == list(g.edges)

    def test_isolated_vertices_yield_no_block(self):
        dec = block_decomposition(Graph(3))
        assert dec.blocks == ()

    def test_biconnected_predicate(self):
        assert is_biconnected(cycle(3))
        assert is_biconnected(cycle(9))
        assert not is_biconnected(path_graph(3))
        assert not is_biconnected(complete_graph(2))  # n >= 3 required
        assert not is_biconnected(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))

    @given(st.randoms(use_true_random=False))
    @settings(max_examples=30)
    def test_random_tree_blocks(self, rng):
        n = rng.randint(2, 12)
        edges = [(rng.randint(0, v - 1), v) for v in range(1, n)]
        g = Graph.from_edges(n, edges)
        dec = block_decomposition(g)
        assert dec.block_count == n - 1
        assert dec.nontrivial_block_count == 0
        assert not is_biconnected(g)

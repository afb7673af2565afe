import numpy as np
import pytest
from numpy.testing import assert_allclose

from errors import BridgeEdgeError, GraphError, InputError
from graphs.core import Graph, connected_components, find_bridges, remove_edge
from graphs.generators import gen_grid
from helpers import complete, cycle, cycle_with_pendant, disjoint_union, identity_corpus, path
from spectral.laplacian import format_matrix, forest_matrix, laplacian, write_matrix
from spectral.pseudoinverse import (
    apply_edge_deletion,
    bridge_split_update,
    effective_resistance,
    moore_penrose_residuals,
    pseudoinverse,
    pseudoinverse_from_laplacian,
    sherman_morrison_downdate,
)

CORPUS = [g for _, g in identity_corpus()]


class TestLaplacian:
    def test_path(self, p3):
        assert_allclose(laplacian(p3), [[1, -1, 0], [-1, 2, -1], [0, -1, 1]])

    def test_rows_sum_to_zero(self, corpus_graph):
        lap = laplacian(corpus_graph)
        assert_allclose(lap.sum(axis=1), 0.0, atol=0)
        assert_allclose(np.diag(lap), corpus_graph.degrees())

    def test_forest_matrix_inverts_shifted_laplacian(self, corpus_graph):
        omega = forest_matrix(corpus_graph)
        shifted = laplacian(corpus_graph) + np.eye(corpus_graph.n)
        assert_allclose(omega @ shifted, np.eye(corpus_graph.n), atol=1e-10)
        assert_allclose(omega, omega.T)

    def test_forest_matrix_k2(self, k2):
        assert_allclose(forest_matrix(k2), np.array([[2, 1], [1, 2]]) / 3)

    def test_forest_matrix_k3_and_edgeless(self, k3):
        assert_allclose(forest_matrix(k3), (np.eye(3) + np.ones((3, 3))) / 4)
        assert_allclose(forest_matrix(Graph(3)), np.eye(3))

    def test_small_laplacians(self, k3):
        assert_allclose(laplacian(k3), 3 * np.eye(3) - np.ones((3, 3)))
        assert not laplacian(Graph(2)).any()

    def test_matrix_dump(self, k2, tmp_path):
        assert format_matrix(laplacian(k2)) == "1 -1\n-1 1\n"
        omega = forest_matrix(gen_grid(2, 3))
        written = write_matrix(omega, str(tmp_path / "omega.txt"))
        # 17 significant digits reproduce every double exactly
        assert np.array_equal(np.loadtxt(written), omega)


class TestPseudoinverse:
    def test_k2(self, k2):
        assert_allclose(pseudoinverse(k2).linv, [[0.25, -0.25], [-0.25, 0.25]], atol=1e-12)

    def test_k3(self, k3):
        expected = (3 * np.eye(3) - np.ones((3, 3))) / 9
        assert_allclose(pseudoinverse(k3).linv, expected, atol=1e-12)

    def test_two_components_block_diagonal(self):
        st = pseudoinverse(disjoint_union(complete(2), complete(2)))
        block = np.array([[0.25, -0.25], [-0.25, 0.25]])
        expected = np.zeros((4, 4))
        expected[:2, :2] = block
        expected[2:, 2:] = block
        assert_allclose(st.linv, expected, atol=1e-12)
        assert st.comps.num_components == 2

    def test_isolated_node_gets_zero(self):
        st = pseudoinverse(Graph.from_pairs(3, [(0, 1)]))
        assert np.all(st.linv[2] == 0.0)

    def test_from_laplacian_matches(self, corpus_graph):
        st = pseudoinverse_from_laplacian(laplacian(corpus_graph), connected_components(corpus_graph))
        assert_allclose(st.linv, np.linalg.pinv(laplacian(corpus_graph), 1e-10, True), atol=1e-9)

    def test_moore_penrose_conditions(self, corpus_graph):
        st = pseudoinverse(corpus_graph)
        first, second = moore_penrose_residuals(laplacian(corpus_graph), st.linv)
        assert first < 1e-9
        assert second < 1e-9
        assert_allclose(st.linv, st.linv.T)


class TestEffectiveResistance:
    def test_examples(self, p3, k3):
        assert effective_resistance(pseudoinverse(complete(2)), 0, 1) == pytest.approx(1.0, abs=1e-12)
        assert effective_resistance(pseudoinverse(p3), 0, 2) == pytest.approx(2.0)
        assert effective_resistance(pseudoinverse(k3), 0, 1) == pytest.approx(2 / 3)
        assert effective_resistance(pseudoinverse(cycle(4)), 0, 2) == pytest.approx(1.0)

    def test_across_components_is_infinite(self):
        st = pseudoinverse(disjoint_union(path(2), path(2)))
        assert effective_resistance(st, 0, 3) == float('inf')

    def test_same_node_rejected(self, p3):
        with pytest.raises(InputError):
            effective_resistance(pseudoinverse(p3), 1, 1)

    def test_metric(self):
        g = gen_grid(3, 4)
        st = pseudoinverse(g)
        def r(u, v):
            return 0.0 if u == v else effective_resistance(st, u, v)

        for u in range(g.n):
            for v in range(g.n):
                assert r(u, v) == pytest.approx(r(v, u))
                for w in range(g.n):
                    assert r(u, w) <= r(u, v) + r(v, w) + 1e-12

    def test_rayleigh_monotonicity(self):
        for g in (gen_grid(3, 3), cycle_with_pendant(), complete(5)):
            st = pseudoinverse(g)
            for e in g.edges:
                after = pseudoinverse(remove_edge(g, e))
                for u in range(g.n):
                    for v in range(u + 1, g.n):
                        assert effective_resistance(after, u, v) >= effective_resistance(st, u, v) - 1e-12


class TestEdgeDeletion:
    def test_downdate_k3(self, k3):
        st = sherman_morrison_downdate(pseudoinverse(k3), 0, 1)
        assert_allclose(st.linv, pseudoinverse(remove_edge(k3, (0, 1))).linv, atol=1e-12)

    def test_downdate_cycle_to_path(self):
        st = sherman_morrison_downdate(pseudoinverse(cycle(4)), 0, 3)
        assert_allclose(st.linv, pseudoinverse(path(4)).linv, atol=1e-12)

    def test_downdate_refuses_bridge(self, p3):
        with pytest.raises(BridgeEdgeError):
            sherman_morrison_downdate(pseudoinverse(p3), 0, 1)

    def test_bridge_split(self, p3):
        g_after = remove_edge(p3, (0, 1))
        st = bridge_split_update(pseudoinverse(p3), g_after, 0, 1)
        assert_allclose(st.linv, pseudoinverse(g_after).linv, atol=1e-12)
        assert st.comps.num_components == 2

    def test_bridge_split_of_k2(self, k2):
        g_after = remove_edge(k2, (0, 1))
        st = bridge_split_update(pseudoinverse(k2), g_after, 0, 1)
        assert np.all(st.linv == 0.0)

    def test_bridge_split_keeps_other_blocks(self):
        g = disjoint_union(cycle_with_pendant(), complete(3))
        st = pseudoinverse(g)
        updated = bridge_split_update(st, remove_edge(g, (3, 4)), 3, 4)
        assert np.array_equal(updated.linv[5:, 5:], st.linv[5:, 5:])

    def test_bridge_split_refuses_non_bridge(self, k3):
        with pytest.raises(GraphError):
            bridge_split_update(pseudoinverse(k3), remove_edge(k3, (0, 1)), 0, 1)

    def test_update_equals_recompute(self, corpus_graph):
        st = pseudoinverse(corpus_graph)
        bridges = find_bridges(corpus_graph)
        for e in corpus_graph.edges:
            updated, g_after = apply_edge_deletion(st, corpus_graph, e, bridges)
            assert g_after == remove_edge(corpus_graph, e)
            assert_allclose(updated.linv, pseudoinverse(g_after).linv, atol=1e-9)

    @pytest.mark.parametrize("seed", range(100))
    def test_deletion_sequences_stay_moore_penrose(self, seed):
        rng = np.random.default_rng(seed)
        g = CORPUS[seed % len(CORPUS)]
        st = pseudoinverse(g)
        for _ in range(min(g.m, 10)):
            e = g.edges[rng.integers(g.m)]
            st, g = apply_edge_deletion(st, g, e)
            first, second = moore_penrose_residuals(laplacian(g), st.linv)
            assert first < 1e-8
            assert second < 1e-8
            assert_allclose(st.linv, st.linv.T, atol=1e-12)


def test_pendant_split_on_cycle():
    g = cycle_with_pendant()
    g_after = remove_edge(g, (3, 4))
    st = bridge_split_update(pseudoinverse(g), g_after, 3, 4)
    assert_allclose(st.linv, pseudoinverse(g_after).linv, atol=1e-10)
    assert np.all(st.linv[4] == 0.0)

import pytest

from oracles import ahu, prufer_trees, rooted_tree_classes
from rrrgraph.enumeration import (
    code_to_graph,
    free_trees,
    is_canonical_bracelet,
    rooted_trees,
    unicyclic_codes,
    unicyclic_graphs,
    unicyclic_shards,
)
from rrrgraph.families import build
from rrrgraph.graph import Graph, are_isomorphic, canonical_certificate, is_unicyclic

# frozen from the labeled-enumeration oracle (tests/oracles.py)
UNICYCLIC_COUNTS = {3: 1, 4: 2, 5: 5, 6: 13, 7: 33, 8: 89}


class TestRootedTrees:
    @pytest.mark.parametrize("k, count", [(1, 1), (3, 2), (5, 9)])
    def test_counts(self, k, count):
        assert sum(1 for _ in rooted_trees(k)) == count

    @pytest.mark.parametrize("k", range(1, 8))
    def test_against_labeled_oracle(self, k):
        ours = [ahu(t.to_graph(), 0) for t in rooted_trees(k)]
        assert len(ours) == len(set(ours))
        assert set(ours) == rooted_tree_classes(k)

    def test_codes_are_valid_level_sequences(self):
        for t in rooted_trees(7):
            lv = t.levels
            assert lv[0] == 0 and all(1 <= lv[i] <= lv[i - 1] + 1 for i in range(1, len(lv)))
            assert t.to_graph().m == t.size - 1

    def test_decreasing_code_order(self):
        codes = [t.levels for t in rooted_trees(8)]
        assert codes == sorted(codes, reverse=True)


class TestFreeTrees:
    @pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (4, 2), (6, 6), (7, 11), (10, 106)])
    def test_counts(self, n, count):
        assert sum(1 for _ in free_trees(n)) == count

    @pytest.mark.parametrize("n", range(2, 8))
    def test_against_prufer_oracle(self, n):
        oracle = {canonical_certificate(t) for t in prufer_trees(n)}
        ours = [canonical_certificate(t) for t in free_trees(n)]
        assert len(ours) == len(set(ours))
        assert set(ours) == oracle


class TestUnicyclic:
    def test_n4(self):
        graphs = list(unicyclic_graphs(4))
        assert len(graphs) == 2
        assert any(are_isomorphic(g, build("cycle", 4)) for g in graphs)
        assert any(are_isomorphic(g, build("starplus", 4)) for g in graphs)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_set_equality_with_naive_oracle(self, n, naive_certs):
        certs = [canonical_certificate(g) for g in unicyclic_graphs(n)]
        assert len(certs) == len(set(certs)) == UNICYCLIC_COUNTS[n]
        assert set(certs) == naive_certs(n)

    def test_n8_against_tree_plus_edge(self):
        oracle = set()
        for t in free_trees(8):
            for u in range(8):
                for v in range(u + 1, 8):
                    if v not in t.neighbors(u):
                        oracle.add(canonical_certificate(Graph(8, list(t.edges) + [(u, v)])))
        certs = [canonical_certificate(g) for g in unicyclic_graphs(8)]
        assert len(certs) == len(set(certs)) == UNICYCLIC_COUNTS[8]
        assert set(certs) == oracle

    @pytest.mark.parametrize("n, count", [(9, 240), (10, 657), (12, 5026)])
    def test_larger_counts(self, n, count):
        assert sum(1 for _ in unicyclic_codes(n)) == count

    def test_all_emitted_graphs_unicyclic(self):
        for n in range(3, 10):
            for g in unicyclic_graphs(n):
                assert g.n == n and is_unicyclic(g)

    def test_deterministic_order(self):
        assert list(unicyclic_codes(9)) == list(unicyclic_codes(9))
        codes = list(unicyclic_codes(9))
        assert codes == sorted(codes, key=lambda c: (len(c), c))

    @pytest.mark.parametrize("n", [5, 8, 11])
    def test_shards_partition_stream(self, n):
        pieces = [c for s in unicyclic_shards(n) for c in unicyclic_codes(n, s)]
        assert pieces == list(unicyclic_codes(n))

    def test_bracelet_check(self):
        assert is_canonical_bracelet((0, 0, 1))
        assert not is_canonical_bracelet((0, 1, 0))
        assert not is_canonical_bracelet((0, 2, 1, 0, 1))
        assert is_canonical_bracelet((0, 1, 0, 2))
        assert not is_canonical_bracelet((0, 2, 0, 1))

    def test_code_to_graph_layout(self):
        g = code_to_graph((0, 0, 1))
        assert g.n == 4 and (0, 1) in g.edges and (2, 3) in g.edges

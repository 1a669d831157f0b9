import itertools
import random

import networkx as nx
import pytest

from rrrgraph.enumeration import unicyclic_graphs
from rrrgraph.errors import ParseError
from rrrgraph.families import build
from rrrgraph.formats import (
    guess_format,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    read_graph,
    render_edge_list,
    render_graph,
    render_graph6,
)
from rrrgraph.graph import Graph, are_isomorphic


def random_graph(n, p, rng):
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


class TestEdgeList:
    def test_triangle(self):
        g = parse_edge_list("3 3\n0 1\n1 2\n0 2\n")
        assert g == build("cycle", 3)

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# a triangle\n3 3   # header\n\n0 1\n1 2 # edge\n0 2\n")
        assert g.m == 3

    def test_loop_is_parse_error(self):
        with pytest.raises(ParseError):
            parse_edge_list("2 1\n0 0\n")

    @pytest.mark.parametrize(
        "text, line",
        [("3 2\n0 1\n", 1), ("3\n", 1), ("2 1\n0 x\n", 2), ("3 2\n0 1\n1 2 3\n", 3), ("", 1)],
    )
    def test_errors_report_line(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_edge_list(text)
        assert info.value.position == line

    def test_roundtrip(self):
        for g in unicyclic_graphs(7):
            assert parse_edge_list(render_edge_list(g)) == g


class TestGraph6:
    def test_k4(self):
        g = parse_graph6("C~")
        assert g.n == 4 and g.m == 6

    def test_header_prefix(self):
        assert parse_graph6(">>graph6<<C~") == parse_graph6("C~")

    def test_matches_networkx_encoder(self):
        rng = random.Random(2)
        for n in list(range(1, 12)) + [62, 63, 64, 100]:
            for p in (0.1, 0.5, 0.9):
                g = random_graph(n, p, rng)
                ours = render_graph6(g)
                theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
                assert ours == theirs
                back = nx.from_graph6_bytes(ours.encode())
                assert sorted(map(tuple, map(sorted, back.edges()))) == list(g.edges)

    def test_decode_networkx_output(self):
        rng = random.Random(3)
        for n in (5, 40, 70):
            g = random_graph(n, 0.3, rng)
            text = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
            assert parse_graph6(text) == g

    def test_roundtrip_small(self):
        for n in range(3, 8):
            for g in unicyclic_graphs(n):
                assert parse_graph6(render_graph6(g)) == g

    @pytest.mark.parametrize("text", ["C", "C~~", "C\x7f", "~??"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_graph6(text)


class TestDispatch:
    def test_roundtrip_both_formats(self):
        rng = random.Random(4)
        graphs = [random_graph(rng.randint(1, 7), 0.4, rng) for _ in range(200)]
        for g in graphs:
            for fmt in ("edgelist", "graph6"):
                assert are_isomorphic(parse_graph(render_graph(g, fmt), fmt), g)

    def test_guess_format(self):
        assert guess_format("a.g6") == "graph6"
        assert guess_format("a.txt") == "edgelist"

    def test_read_graph(self, tmp_path):
        path = tmp_path / "h7.g6"
        path.write_text(render_graph(build("h", 7), "graph6"))
        assert read_graph(path) == build("h", 7)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            parse_graph("", "dot")

from itertools import combinations

import networkx as nx
import pytest

from modules.graph_enumerator import graphs_by_edge_count, isomorphism_classes


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_class_counts(n, count):
    assert len(isomorphism_classes(n)) == count


@pytest.mark.slow
def test_class_count_seven():
    assert len(isomorphism_classes(7)) == 1044


def test_levels_descend():
    levels = list(graphs_by_edge_count(4))
    assert [m for m, _ in levels] == [6, 5, 4, 3, 2, 1, 0]
    assert [len(level) for _, level in levels] == [1, 1, 2, 3, 2, 1, 1]
    for m, level in levels:
        assert all(graph.m == m for graph in level)


def test_levels_are_pairwise_non_isomorphic():
    for _, level in graphs_by_edge_count(5):
        nx_graphs = [graph.to_networkx() for graph in level]
        for a, b in combinations(nx_graphs, 2):
            assert not nx.is_isomorphic(a, b)

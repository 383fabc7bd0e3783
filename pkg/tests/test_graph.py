from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given, settings

from copwinrel.graph import (
    Graph,
    GraphError,
    complement,
    components,
    contract_close,
    delete_closed_neighborhood,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    is_connected,
    join,
    relabel,
)
from conftest import graphs


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_constructors():
    assert Graph.complete(4).m == 6
    assert Graph.path(5).m == 4
    assert Graph.cycle(5).degrees() == [2] * 5
    assert Graph.star(6).degree(0) == 5
    assert Graph.empty(3).m == 0


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 3)]), (3, [(1, 1)]), (65, [])],
)
def test_invalid_construction(n, edges):
    with pytest.raises(GraphError):
        Graph.from_edges(n, edges)


def test_asymmetric_adjacency_rejected():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))


def test_cycle_too_short():
    with pytest.raises(GraphError):
        Graph.cycle(2)


def test_contract_close_makes_clique():
    # C4 contracted at 0 becomes a triangle on the remaining vertices
    g = contract_close(Graph.cycle(4), 0)
    assert g.n == 3 and g.m == 3


def test_delete_closed_neighborhood_of_star_centre():
    assert delete_closed_neighborhood(Graph.star(5), 0).n == 0
    rest = delete_closed_neighborhood(Graph.star(5), 1)
    assert rest.n == 3 and rest.m == 0


def test_join_and_union():
    g = join(Graph.empty(2), Graph.empty(3))
    assert to_nx(g).number_of_edges() == 6
    u = disjoint_union(Graph.complete(3), Graph.path(2))
    assert len(components(u)) == 2


@given(graphs())
@settings(max_examples=150)
def test_connectivity_matches_networkx(g):
    h = to_nx(g)
    if g.n == 0:
        assert is_connected(g)
    else:
        assert is_connected(g) == nx.is_connected(h)
        assert len(components(g)) == nx.number_connected_components(h)


@given(graphs(min_n=1))
@settings(max_examples=100)
def test_vertex_operations_against_networkx(g):
    v = g.n // 2
    h = to_nx(g)
    h2 = h.copy()
    h2.remove_node(v)
    assert delete_vertex(g, v).m == h2.number_of_edges()
    closed = set(h[v]) | {v}
    sub = h.subgraph(set(h) - closed)
    assert delete_closed_neighborhood(g, v).m == sub.number_of_edges()
    nb = list(h[v])
    h3 = h2.copy()
    h3.add_edges_from((a, b) for i, a in enumerate(nb) for b in nb[i + 1:])
    assert contract_close(g, v).m == h3.number_of_edges()


@given(graphs())
@settings(max_examples=100)
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.m + complement(g).m == g.n * (g.n - 1) // 2


@given(graphs(min_n=1))
def test_relabel_preserves_degree_multiset(g):
    perm = list(reversed(range(g.n)))
    assert sorted(relabel(g, perm).degrees()) == sorted(g.degrees())


def test_induced_subgraph_relabels_in_order():
    g = Graph.path(5)
    sub = induced_subgraph(g, 0b11100)
    assert sub.edges() == [(0, 1), (1, 2)]

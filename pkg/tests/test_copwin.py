from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings

from copwinrel.copwin import (
    find_long_induced_cycle,
    has_long_induced_cycle,
    is_chordal,
    is_copwin,
    is_copwin_game,
)
from copwinrel.families import build
from copwinrel.generate import GenSpec, enumerate_all_graphs, enumerate_graphs
from copwinrel.graph import Graph, disjoint_union, join
from conftest import connected_graphs, graphs

WHEEL6 = join(Graph.cycle(5), Graph.empty(1))


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize(
    "g, expected",
    [
        (Graph.path(5), True),
        (Graph.star(6), True),
        (Graph.cycle(4), False),
        (Graph.cycle(7), False),
        (WHEEL6, True),
        (build("A:6"), False),
        (Graph.empty(1), True),
        (Graph.empty(0), False),
        (disjoint_union(Graph.complete(2), Graph.empty(2)), False),
    ],
)
def test_is_copwin_examples(g, expected):
    ok, trace = is_copwin(g)
    assert ok is expected
    if g.n:
        assert is_copwin_game(g) is expected


@pytest.mark.parametrize("n", range(5, 11))
def test_u_family_is_copwin(n):
    assert is_copwin(build(f"U:{n}"))[0]


def test_dismantling_trace_is_a_valid_elimination():
    g = build("B:8")
    ok, trace = is_copwin(g)
    assert ok
    assert len(trace.order) == g.n - 1
    cn = [g.adj[v] | (1 << v) for v in range(g.n)]
    alive = g.full_mask
    for u, v in zip(trace.order, trace.dominators):
        # u's closed neighbourhood inside the remaining graph sits inside v's
        assert (cn[u] & alive) & ~(cn[v] & alive) == 0
        alive &= ~(1 << u)


@pytest.mark.parametrize(
    "spec, chordal",
    [("F:2,1", True), ("G3:1,1,4", False), ("B:8", True), ("C:4", False), ("U:7", True)],
)
def test_chordality_examples(spec, chordal):
    g = build(spec)
    assert is_chordal(g) is chordal
    assert has_long_induced_cycle(g) is (not chordal)


def test_complete_graph_is_chordal():
    assert is_chordal(Graph.complete(3))
    assert not has_long_induced_cycle(Graph.complete(3))


@given(graphs(max_n=9))
@settings(max_examples=300)
def test_chordality_matches_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))
    cyc = find_long_induced_cycle(g)
    assert (cyc is None) == is_chordal(g)
    if cyc is not None:
        sub = to_nx(g).subgraph(cyc)
        assert len(cyc) >= 4 and sub.number_of_edges() == len(cyc)
        assert all(d == 2 for _, d in sub.degree())


def test_chordal_equivalence_all_graphs_small():
    for n in range(1, 7):
        for g in enumerate_all_graphs(n):
            assert is_chordal(g) == (not has_long_induced_cycle(g))


def test_connected_chordal_implies_copwin():
    for n in range(1, 8):
        for g in enumerate_graphs(GenSpec(n)):
            if is_chordal(g):
                assert is_copwin(g)[0]


def test_long_induced_cycle_kills_unicyclic_copwin():
    for n in range(4, 10):
        for g in enumerate_graphs(GenSpec(n, 1)):
            if has_long_induced_cycle(g):
                assert not is_copwin(g)[0]


@given(connected_graphs(max_n=11))
@settings(max_examples=300, deadline=None)
def test_dismantling_matches_game_random(g):
    assert is_copwin(g)[0] == is_copwin_game(g)


def test_dismantling_matches_game_random_seeded():
    rng = random.Random(99)
    for _ in range(400):
        n = rng.randint(1, 12)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        dens = rng.random() * 0.6
        edges |= {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < dens}
        g = Graph.from_edges(n, sorted(edges))
        assert is_copwin(g)[0] == is_copwin_game(g)

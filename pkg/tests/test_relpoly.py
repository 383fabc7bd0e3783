from __future__ import annotations

import itertools
from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copwinrel.copwin import is_copwin_game
from copwinrel.families import build
from copwinrel.generate import enumerate_all_graphs
from copwinrel.graph import Graph, disjoint_union, induced_subgraph, is_connected
from copwinrel.poly import binomial_form
from copwinrel.relpoly import (
    ReliabilityMeasure,
    connected_set_counts,
    copwin_set_counts,
    cs_poly,
    cs_poly_pivot,
    cw_poly,
    edge_copwin_counts,
    mobius_bridge,
    nrel_direct,
    nrel_pivot,
    pivot_cs_terms,
    poly_from_record,
    poly_record,
    reliability_poly,
    subset_counts,
)
from conftest import graphs


def brute_counts(g: Graph) -> tuple[list[int], list[int]]:
    """Independent oracle: networkx connectivity and the game solver on each subset."""
    s = [0] * g.n
    w = [0] * g.n
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    for mask in range(1, 1 << g.n):
        verts = [v for v in range(g.n) if mask >> v & 1]
        if nx.is_connected(h.subgraph(verts)):
            s[len(verts) - 1] += 1
            if is_copwin_game(induced_subgraph(g, mask)):
                w[len(verts) - 1] += 1
    return s, w


@pytest.mark.parametrize(
    "spec, cs, cw",
    [
        ("C:5", [5, 5, 5, 5, 1], [5, 5, 5, 5, 0]),
        ("C:6", [6, 6, 6, 6, 6, 1], [6, 6, 6, 6, 6, 0]),
        ("U:6", [6, 6, 10, 10, 5, 1], [6, 6, 10, 10, 5, 1]),
        ("B:7", [7, 8, 16, 20, 15, 6, 1], [7, 8, 16, 20, 15, 6, 1]),
        ("F:2,0", None, [7, 8, 15, 20, 15, 6, 1]),
        ("G3:1,1,4", [8, 9, 12, 14, 16, 18, 8, 1], None),
    ],
)
def test_known_counts(spec, cs, cw):
    g = build(spec)
    if cs is not None:
        assert connected_set_counts(g) == cs
    if cw is not None:
        assert copwin_set_counts(g) == cw


def test_single_vertex():
    assert cs_poly(Graph.empty(1)).coeffs == (0, 1)
    assert cw_poly(Graph.empty(1)).coeffs == (0, 1)
    assert cs_poly(Graph.empty(0)).coeffs == ()


@given(graphs(max_n=7))
@settings(max_examples=60, deadline=None)
def test_counts_match_bruteforce_oracle(g):
    assert list(subset_counts(g)) == list(brute_counts(g))


@given(graphs(max_n=9))
@settings(max_examples=150, deadline=None)
def test_count_invariants(g):
    s, w = subset_counts(g)
    assert all(a <= b for a, b in zip(w, s))
    if g.n:
        assert s[0] == g.n
    if g.n > 1:
        assert s[1] == g.m


def test_u6_pivot_on_leaf():
    g = build("U:6")
    leaf = g.leaves()[0]
    assert pivot_cs_terms(g, leaf).coeffs == (0, 6, 6, 10, 10, 5, 1)


def test_c4_pivot():
    assert pivot_cs_terms(Graph.cycle(4), 0).coeffs == (0, 4, 4, 4, 1)


@given(graphs(max_n=8))
@settings(max_examples=150, deadline=None)
def test_pivot_holds_at_every_vertex(g):
    direct = cs_poly(g)
    assert cs_poly_pivot(g) == direct
    for v in range(g.n):
        assert pivot_cs_terms(g, v) == direct


def test_pivot_exhaustive_small():
    cache: dict = {}
    for n in range(1, 7):
        for g in enumerate_all_graphs(n):
            assert cs_poly_pivot(g, cache) == cs_poly(g)


@given(graphs(min_n=1, max_n=7), graphs(min_n=1, max_n=7))
@settings(max_examples=60, deadline=None)
def test_disjoint_union_adds(g, h):
    assert cs_poly(disjoint_union(g, h)) == cs_poly(g) + cs_poly(h)


def test_nrel_examples():
    assert nrel_direct(Graph.cycle(4), Fraction(1, 2)) == Fraction(13, 16)
    assert nrel_pivot(Graph.cycle(4), Fraction(1, 2)) == Fraction(13, 16)
    assert nrel_pivot(Graph.empty(1), Fraction(1, 3)) == Fraction(1, 3)


@given(graphs(min_n=1, max_n=8), st.fractions(0, 1, max_denominator=50))
@settings(max_examples=120, deadline=None)
def test_nrel_pivot_matches_direct(g, p):
    assert nrel_pivot(g, p) == nrel_direct(g, p)
    for v in range(g.n):
        assert nrel_pivot(g, p, v) == nrel_direct(g, p)


@given(graphs(min_n=1, max_n=8))
@settings(max_examples=80, deadline=None)
def test_endpoints(g):
    for measure in (ReliabilityMeasure.NODE_CONNECTED, ReliabilityMeasure.NODE_COPWIN):
        r = reliability_poly(g, measure)
        assert r(0) == 0
    assert reliability_poly(g, ReliabilityMeasure.NODE_CONNECTED)(1) == int(is_connected(g))


def test_ncrel_c4_and_k1():
    r = reliability_poly(Graph.cycle(4), ReliabilityMeasure.NODE_COPWIN)
    assert r == binomial_form([4, 4, 4, 0], 4)
    assert r(1) == 0
    assert reliability_poly(Graph.empty(1), ReliabilityMeasure.NODE_COPWIN).coeffs == (0, 1)


def test_edge_copwin_c4():
    assert edge_copwin_counts(Graph.cycle(4)) == [0, 0, 0, 4, 0]
    assert reliability_poly(Graph.cycle(4), ReliabilityMeasure.EDGE_COPWIN).coeffs == (0, 0, 0, 4, -4)


def test_edge_copwin_against_bruteforce():
    for g in [build("U:5"), build("B:7"), Graph.complete(4), build("G3:1,1,1")]:
        edges = g.edges()
        expected = [0] * (len(edges) + 1)
        for k in range(len(edges) + 1):
            for sub in itertools.combinations(edges, k):
                h = Graph.from_edges(g.n, list(sub))
                if is_connected(h) and is_copwin_game(h):
                    expected[k] += 1
        assert edge_copwin_counts(g) == expected


@pytest.mark.parametrize("spec", ["U:5", "C:6"])
def test_mobius_bridge_examples(spec):
    assert mobius_bridge(copwin_set_counts(build(spec)))


def test_mobius_bridge_all_small_graphs():
    for n in range(1, 7):
        for g in enumerate_all_graphs(n):
            assert mobius_bridge(copwin_set_counts(g))


def test_record_round_trip():
    p = cs_poly(build("U:6"))
    rec = poly_record(p, 6, ReliabilityMeasure.NODE_CONNECTED)
    assert rec["coefficients"] == ["0", "6", "6", "10", "10", "5", "1"]
    assert poly_from_record(rec) == p
    with pytest.raises(ValueError):
        poly_from_record({**rec, "version": 99})


def test_measure_parse():
    assert ReliabilityMeasure.parse("NCRel") is ReliabilityMeasure.NODE_COPWIN
    with pytest.raises(ValueError):
        ReliabilityMeasure.parse("bogus")

from __future__ import annotations

import random

import pytest

from copwinrel.canon import canonical_key, is_isomorphic
from copwinrel.families import (
    BicyclicType,
    FamilyError,
    FamilySpec,
    binomial_exceeds_linear,
    build,
    classify_bicyclic,
    closed_form_cs,
    closed_form_cw,
    count_cut_sets,
)
from copwinrel.generate import GenSpec, enumerate_graphs
from copwinrel.graph import Graph, complement, disjoint_union, is_connected, join, relabel
from copwinrel.relpoly import cs_poly, cw_poly, subset_counts


def test_parse_and_str():
    spec = FamilySpec.parse("g3:1,1,4")
    assert spec == FamilySpec("G3", (1, 1, 4))
    assert str(spec) == "G3:1,1,4"
    assert spec.order == 8
    assert FamilySpec.parse("F:2,1").order == 9
    assert FamilySpec.parse("G1:3,3").order == 5
    assert FamilySpec.parse("G2:3,4,2").order == 7


@pytest.mark.parametrize("bad", ["X:5", "U:4", "U", "U:a", "G3:0,0,3", "H:6,5", "G1:2,3", "G2:3,3,1", "C:2", "U:1,2"])
def test_invalid_specs(bad):
    with pytest.raises(FamilyError):
        build(bad)


@pytest.mark.parametrize(
    "spec, n, m",
    [("U:7", 7, 7), ("A:7", 7, 7), ("B:7", 7, 8), ("F:2,1", 9, 10), ("G1:3,4", 6, 7),
     ("G2:3,4,2", 7, 8), ("G3:1,1,4", 8, 9), ("H:9,3", 9, 11), ("STAR:5", 5, 4), ("C:6", 6, 6)],
)
def test_sizes_and_connectivity(spec, n, m):
    g = build(spec)
    assert (g.n, g.m) == (n, m)
    assert is_connected(g)


def test_u_definition_as_join():
    # U_n is K_2 plus isolated vertices, joined to one more vertex
    for n in range(5, 9):
        inner = disjoint_union(Graph.complete(2), Graph.empty(n - 3))
        assert is_isomorphic(join(inner, Graph.empty(1)), build(f"U:{n}"))


def test_h_matches_u_and_b():
    for n in range(5, 10):
        assert canonical_key(build(f"H:{n},1")) == canonical_key(build(f"U:{n}"))
    for n in range(7, 10):
        assert canonical_key(build(f"H:{n},2")) == canonical_key(build(f"B:{n}"))


def test_g3_110_is_k4_minus_edge():
    assert is_isomorphic(build("G3:1,1,0"), complement(Graph.from_edges(4, [(0, 1)])))


@pytest.mark.parametrize("tag", ["U", "C", "B"])
@pytest.mark.parametrize("n", range(5, 12))
def test_closed_forms_match_enumeration(tag, n):
    spec = FamilySpec(tag, (n,))
    g = build(spec)
    assert closed_form_cs(spec) == cs_poly(g)
    assert closed_form_cw(spec) == cw_poly(g)


@pytest.mark.parametrize("n", range(5, 12))
def test_closed_form_f(n):
    spec = FamilySpec("F", (n - 5, 0))
    g = build(spec)
    assert closed_form_cs(spec) == cs_poly(g)
    assert closed_form_cw(spec) == cw_poly(g)


@pytest.mark.parametrize("n", range(5, 11))
def test_closed_form_a_discrepancy_is_exactly_one(n):
    # enumeration finds n-1 connected (n-1)-sets; the published closed form has n
    spec = FamilySpec("A", (n,))
    s, w = subset_counts(build(spec))
    assert s[n - 2] == n - 1
    assert closed_form_cs(spec)[n - 1] == n
    for k in range(1, n - 1):
        assert closed_form_cs(spec)[k] == s[k - 1]
        assert closed_form_cw(spec)[k] == w[k - 1]


def test_closed_form_rejects_unsupported():
    with pytest.raises(FamilyError):
        closed_form_cw("G3:1,1,4")
    with pytest.raises(FamilyError):
        closed_form_cw("F:1,1")


@pytest.mark.parametrize(
    "spec, kind, params",
    [("G1:3,3", 1, (3, 3)), ("G2:3,4,2", 2, (3, 4, 2)), ("G3:4,1,1", 3, (1, 1, 4)),
     ("B:8", 3, (0, 1, 1)), ("F:1,1", 1, (3, 3))],
)
def test_classify_examples(spec, kind, params):
    t = classify_bicyclic(build(spec))
    assert t == BicyclicType(kind, params)


def test_classify_table_edge_list():
    edges = [(0, 4), (0, 5), (1, 5), (1, 6), (2, 6), (2, 7), (3, 6), (3, 7), (4, 7)]
    assert classify_bicyclic(Graph.from_edges(8, edges)) == BicyclicType(3, (1, 1, 4))


def test_classify_recovers_every_base_graph():
    rng = random.Random(5)
    specs = []
    for a in range(3, 11):
        for b in range(a, 13 - a):
            specs.append(FamilySpec("G1", (a, b)))
            for c in range(2, 15 - a - b):
                specs.append(FamilySpec("G2", (a, b, c)))
    for a in range(0, 11):
        for b in range(max(a, 1), 11 - a):
            for c in range(b, 11 - a - b):
                specs.append(FamilySpec("G3", (a, b, c)))
    for spec in specs:
        g = build(spec)
        perm = list(range(g.n))
        rng.shuffle(perm)
        t = classify_bicyclic(relabel(g, perm))
        assert t.spec == spec
        assert is_isomorphic(build(t.spec), g)


def test_every_bicyclic_graph_has_one_type():
    for n in range(4, 9):
        for g in enumerate_graphs(GenSpec(n, 2)):
            t = classify_bicyclic(g)
            assert t.kind in (1, 2, 3)


def test_classify_rejects_non_bicyclic():
    with pytest.raises(FamilyError):
        classify_bicyclic(Graph.cycle(5))


@pytest.mark.parametrize("spec, k, expected", [("G3:1,1,4", 2, 10), ("B:8", 2, 7), ("C:5", 1, 0)])
def test_cut_sets(spec, k, expected):
    assert count_cut_sets(build(spec), k) == expected


def test_g3_has_no_cut_vertex():
    for a in range(0, 5):
        for b in range(max(a, 1), 5):
            for c in range(b, 9 - a - b):
                g = build(FamilySpec("G3", (a, b, c)))
                assert count_cut_sets(g, 1) == 0
                assert subset_counts(g)[0][g.n - 2] == g.n


def test_binomial_bound():
    assert all(binomial_exceeds_linear(n, k) for n in range(5, 41) for k in range(3, n - 1))
    assert not binomial_exceeds_linear(5, 1)

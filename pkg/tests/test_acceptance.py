"""The twelve acceptance criteria, each at its stated tolerance and runtime limit.

Every test records one ``CRITERION k: PASS|FAIL`` line, echoed in the pytest
terminal summary.  Criterion 10 is an observed failure of a published
computational claim and is marked as a strict expected failure so the suite
stays green while the line still reads FAIL.
"""

from __future__ import annotations

import time

import pytest

from conftest import ACCEPTANCE_LINES
from copwinrel.canon import canonical_key
from copwinrel.families import build
from copwinrel.generate import GenSpec, enumerate_by_filter, enumerate_count, enumerate_graphs
from copwinrel.graph import Graph
from copwinrel.graph6 import parse_graph6
from copwinrel.relpoly import cs_poly
from copwinrel.umr import verify_conjecture_H
from copwinrel import verify

pytestmark = pytest.mark.acceptance


def record(k: int, title: str, passed: bool, detail: str, seconds: float, limit: float) -> None:
    status = "PASS" if passed else "FAIL"
    ACCEPTANCE_LINES.append(f"CRITERION {k:>2}: {status}  {title}: {detail} ({seconds:.1f}s, limit {limit:.0f}s)")


def run_check(k: int, title: str, limit: float, fn, *args, **kwargs):
    t = time.perf_counter()
    res = fn(*args, **kwargs)
    elapsed = time.perf_counter() - t
    ok = res.passed and elapsed < limit
    detail = res.detail + (f" counterexample={res.counterexample}" if res.counterexample else "")
    record(k, title, ok, detail, elapsed, limit)
    return res, elapsed


def test_criterion_01_table_reproduction():
    res, elapsed = run_check(1, "order-8 theta table", 1, verify.check_table_g3)
    assert res.passed, res.detail
    assert elapsed < 1
    # row 1 printed as x^8 + 8x^7 + 18x^6 + 16x^5 + 14x^4 + 12x^3 + 9x^2 + 8x
    edges, _ = verify.TABLE_G3_ORDER8[0]
    assert cs_poly(Graph.from_edges(8, edges)).coeffs == (0, 8, 9, 12, 14, 16, 18, 8, 1)


def test_criterion_02_closed_forms():
    res, elapsed = run_check(2, "closed forms vs enumeration", 10, verify.check_closed_forms, range(5, 13))
    assert res.passed, res.detail
    assert elapsed < 10
    # the A(n) top-minus-one coefficient differs by exactly one, every n
    assert len(res.data["A_discrepancy"]) == 8


def test_criterion_03_pivot_identity():
    res, elapsed = run_check(3, "pivot identity", 120, verify.check_pivot, 7, 1000, 12)
    assert res.passed, res.counterexample
    assert elapsed < 120


def test_criterion_04_chordal_iff_equal():
    res, elapsed = run_check(4, "CS = CW iff chordal", 120, verify.check_chordal, 7)
    assert res.passed, res.counterexample
    assert elapsed < 120


def test_criterion_05_unicyclic_umr():
    res, elapsed = run_check(5, "unicyclic NCRel UMR is U_n", 300, verify.check_unicyclic_umr, range(5, 10))
    assert res.passed, res.detail
    assert elapsed < 300


def test_criterion_06_bicyclic_umr():
    res, elapsed = run_check(6, "bicyclic NCRel UMR is B_n", 600, verify.check_bicyclic_umr, range(7, 10))
    assert res.passed, res.detail
    assert elapsed < 600


def test_criterion_07_no_node_reliability_umr():
    res, elapsed = run_check(7, "no NRel UMR", 600, verify.check_no_node_umr, range(7, 10), range(5, 10))
    assert res.passed, res.detail
    assert elapsed < 600


def test_criterion_08_coefficient_dominance_suite():
    t = time.perf_counter()
    dominance = verify.check_coefficient_dominance()
    invariants = verify.check_structural_invariants()
    elapsed = time.perf_counter() - t
    ok = dominance.passed and invariants.passed and elapsed < 900
    record(8, "coefficient-dominance suite", ok, f"{dominance.detail}; {invariants.detail}", elapsed, 900)
    assert dominance.passed, dominance.detail
    assert invariants.passed, invariants.detail
    assert elapsed < 900


def test_criterion_09_copwin_oracle():
    res, elapsed = run_check(9, "dismantling vs game search", 300, verify.check_copwin_oracle, 8)
    assert res.passed, res.counterexample
    assert elapsed < 300
    assert res.detail.startswith("12113 ")


@pytest.mark.xfail(strict=True, reason="four order-6 graphs have edge-model roots outside |z-1| <= 1")
def test_criterion_10_disk_observation():
    res, elapsed = run_check(10, "edge-model roots in |z-1| <= 1", 600, verify.check_disk, 6)
    assert elapsed < 600
    assert res.passed, res.detail


def test_criterion_11_conjecture_h_sweep():
    t = time.perf_counter()
    parts = []
    exhaustive = True
    for n in (7, 8):
        rep = verify_conjecture_H(n, 3)
        total = enumerate_count(GenSpec(n, 3))
        exhaustive &= rep.class_size == total == sum(rep.verdict_counts.values())
        parts.append(f"n={n} {'holds' if rep.holds else 'fails'} ({rep.class_size} graphs, "
                     f"{len(rep.counterexamples)} counterexamples)")
    elapsed = time.perf_counter() - t
    record(11, "H(n,3) exhaustive sweep", exhaustive and elapsed < 1200, "; ".join(parts), elapsed, 1200)
    assert exhaustive
    assert elapsed < 1200


def test_criterion_12_appendix_regeneration(tmp_path):
    path = tmp_path / "bicyclic7.tsv"
    t = time.perf_counter()
    res = verify.check_appendix(path)
    rows = path.read_text().splitlines()[1:]
    filter_count = sum(1 for _ in enumerate_by_filter(GenSpec(7, 2)))
    elapsed = time.perf_counter() - t
    ok = res.passed and len(rows) == filter_count == enumerate_count(GenSpec(7, 2))
    record(12, "order-7 bicyclic table", ok, f"{len(rows)} rows, filter generator {filter_count}", elapsed, 600)
    assert ok
    # every row's polynomial is the one recomputed from its own graph6
    for row in rows:
        g6, _, coeffs, _ = row.split("\t")
        assert [str(c) for c in cs_poly(parse_graph6(g6)).coeffs] == coeffs.split(",")
    keys = {canonical_key(parse_graph6(r.split("\t")[0])) for r in rows}
    assert keys == {canonical_key(g) for g in enumerate_graphs(GenSpec(7, 2))}
    assert canonical_key(build("B:7")) in keys

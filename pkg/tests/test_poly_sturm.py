from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copwinrel.poly import CoeffPoly, binomial_form, coeff_dominates, evaluate_binomial_form, format_poly
from copwinrel.sturm import (
    RatPoly,
    SturmChain,
    isolate_roots,
    poly_gcd,
    squarefree_decomposition,
    squarefree_part,
    sturm_root_count,
)

small_ints = st.lists(st.integers(-20, 20), min_size=1, max_size=8)


def test_coeffpoly_arithmetic():
    a = CoeffPoly([1, 2])
    b = CoeffPoly([0, 1, 3])
    assert (a + b).coeffs == (1, 3, 3)
    assert (a * b).coeffs == (0, 1, 5, 6)
    assert (a - a).coeffs == ()
    assert CoeffPoly.monomial(3).degree == 3
    assert a(Fraction(1, 2)) == 2
    assert b.shift(2).coeffs == (0, 0, 0, 1, 3)


def test_format_poly():
    assert format_poly([0, 8, 9, 1]) == "x^3 + 9*x^2 + 8*x"


def test_coeff_dominates_examples():
    a = CoeffPoly([1, 2, 3])
    assert coeff_dominates(a, a)
    assert coeff_dominates(a, CoeffPoly([1, 1]))
    assert not coeff_dominates(CoeffPoly([1, 1]), a)
    assert not coeff_dominates(a, CoeffPoly([0, 0, 0, 1]))


@given(st.lists(st.integers(0, 30), min_size=1, max_size=8), st.fractions(0, 1))
def test_binomial_form_matches_direct_evaluation(counts, p):
    n = len(counts) + 2
    assert binomial_form(counts, n)(p) == evaluate_binomial_form(counts, n, p)


def test_binomial_form_edge_model_start():
    # 4 q^3 (1 - q) = 4q^3 - 4q^4
    assert binomial_form([0, 0, 0, 4, 0], 4, start=0).coeffs == (0, 0, 0, 4, -4)


@pytest.mark.parametrize(
    "coeffs, lo, hi, expected",
    [
        ([-2, 0, 1], 0, 2, 1),                  # x^2 - 2 on (0, 2]
        ([0, 0, 0, 4, 4, -1, 1], 0, 10**6, 0),  # x^3 (x^3 - x^2 + 4x + 4) has no positive root
        ([1, -4, 4], 0, 1, 1),                  # (2x - 1)^2: one distinct root
    ],
)
def test_sturm_examples(coeffs, lo, hi, expected):
    assert sturm_root_count(RatPoly(coeffs), lo, hi) == expected


def test_even_multiplicity_detected_by_decomposition():
    parts = squarefree_decomposition(RatPoly([1, -4, 4]))
    assert [(p.degree, m) for p, m in parts] == [(1, 2)]


@given(small_ints, small_ints)
@settings(max_examples=200)
def test_gcd_divides_both(a, b):
    pa, pb = RatPoly(a), RatPoly(b)
    if not pa or not pb:
        return
    g = poly_gcd(pa, pb)
    assert not (pa % g) and not (pb % g)


@given(small_ints)
@settings(max_examples=200)
def test_squarefree_decomposition_reassembles(a):
    p = RatPoly(a) * RatPoly(a[:3] or [1])
    if not p:
        return
    prod = RatPoly([1])
    for f, m in squarefree_decomposition(p):
        for _ in range(m):
            prod = prod * f
    # equal up to a constant factor
    assert prod.degree == p.degree
    assert (p * prod.lc - prod * p.lc) == RatPoly()
    assert squarefree_part(p).degree <= p.degree


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5).map(lambda r: sorted(set(r))))
@settings(max_examples=150)
def test_sturm_counts_known_rational_roots(roots):
    # product of (4x - r) has roots r/4; count those in (0, 1]
    p = RatPoly([1])
    for r in roots:
        p = p * RatPoly([-r, 4])
    expected = sum(1 for r in roots if 0 < r / 4 <= 1)
    assert sturm_root_count(p, 0, 1) == expected


@given(st.lists(st.integers(-9, 9), min_size=2, max_size=9))
@settings(max_examples=200)
def test_sturm_matches_numpy_real_roots(coeffs):
    p = RatPoly(coeffs)
    if p.degree < 1:
        return
    sq = squarefree_part(p)
    roots = np.roots([float(c) for c in reversed(sq.coeffs)])
    real = [r.real for r in roots if abs(r.imag) < 1e-7]
    # skip inputs with roots too close to the endpoints for floating point
    if any(min(abs(r), abs(r - 1)) < 1e-6 for r in real):
        return
    assert SturmChain(sq).count_open(0, 1) == sum(1 for r in real if 0 < r < 1)


def test_isolate_roots_brackets_each_root():
    p = RatPoly([3, -16, 16])  # (4x - 1)(4x - 3)
    ivs = isolate_roots(p, 0, 1)
    assert len(ivs) == 2
    for lo, hi in ivs:
        assert sturm_root_count(p, lo, hi) == 1

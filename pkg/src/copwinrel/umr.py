"""Exact reliability dominance and the search for uniformly most reliable graphs.

All verdicts are decided in exact arithmetic.  For ``D = R(g) - R(h)`` on
``[0, 1]``:

* identical count vectors give ``EQUAL``;
* coefficient-wise dominance of the count vectors settles the sign on all of
  ``(0, 1)`` at once (every basis term ``p^i (1-p)^(n-i)`` is positive there);
* otherwise the squarefree factors of ``D`` are examined with Sturm chains.
  Roots of odd multiplicity inside ``(0, 1)`` are sign changes and give
  ``CROSSING``; roots of even multiplicity only touch zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Sequence

from .families import FamilySpec, build
from .generate import GenSpec, enumerate_graphs
from .graph import Graph, GraphError
from .graph6 import emit_graph6
from .parallel import parallel_map
from .poly import CoeffPoly, binomial_form
from .relpoly import ReliabilityMeasure, count_vector
from .sturm import RatPoly, SturmChain, _sign_at, isolate_roots, squarefree_decomposition

RECORD_VERSION = 1


class Verdict(enum.Enum):
    EQUAL = "Equal"
    DOMINATES_STRICTLY = "DominatesStrictlyOnOpenInterval"
    DOMINATES = "Dominates"
    DOMINATED_BY = "DominatedBy"
    CROSSING = "Crossing"


FAVOURABLE = (Verdict.EQUAL, Verdict.DOMINATES, Verdict.DOMINATES_STRICTLY)


@dataclass
class DominanceReport:
    """Sign of ``R(g, p) - R(h, p)`` on ``[0, 1]``.

    ``strict`` is set when the difference has no zero inside ``(0, 1)``.
    ``witnesses`` holds ``(p, sign)`` samples of the difference.
    """

    verdict: Verdict
    strict: bool
    difference: CoeffPoly
    measure: ReliabilityMeasure
    root_count_in_01: int = 0
    even_root_count: int = 0
    witnesses: list[tuple[Fraction, int]] = field(default_factory=list)
    method: str = "sturm"

    def swapped(self) -> DominanceReport:
        flip = {
            Verdict.DOMINATES_STRICTLY: Verdict.DOMINATED_BY,
            Verdict.DOMINATES: Verdict.DOMINATED_BY,
            Verdict.DOMINATED_BY: Verdict.DOMINATES_STRICTLY if self.strict else Verdict.DOMINATES,
        }
        return DominanceReport(
            flip.get(self.verdict, self.verdict),
            self.strict,
            -self.difference,
            self.measure,
            self.root_count_in_01,
            self.even_root_count,
            [(p, -s) for p, s in self.witnesses],
            self.method,
        )

    def to_record(self) -> dict:
        return {
            "version": RECORD_VERSION,
            "measure": self.measure.value,
            "verdict": self.verdict.value,
            "strict": self.strict,
            "method": self.method,
            "difference": [str(c) for c in self.difference.coeffs],
            "root_count_in_01": self.root_count_in_01,
            "even_root_count": self.even_root_count,
            "witnesses": [[str(p), s] for p, s in self.witnesses],
        }


def _check_same_class(g: Graph, h: Graph) -> None:
    if g.n != h.n or g.m != h.m:
        raise GraphError(
            f"dominance compares graphs of equal order and size; got (n={g.n}, m={g.m}) vs (n={h.n}, m={h.m})"
        )


def _size(g: Graph, measure: ReliabilityMeasure) -> int:
    return g.m if measure is ReliabilityMeasure.EDGE_COPWIN else g.n


def counts_to_poly(counts: Sequence[int], size: int, measure: ReliabilityMeasure) -> CoeffPoly:
    start = 0 if measure is ReliabilityMeasure.EDGE_COPWIN else 1
    return binomial_form(counts, size, start=start)


def _sign(coeffs: tuple[int, ...], p: Fraction) -> int:
    return _sign_at(coeffs, p)


def compare_counts(
    cg: Sequence[int], ch: Sequence[int], size: int, measure: ReliabilityMeasure
) -> DominanceReport:
    """Dominance verdict from two count vectors of graphs in the same class."""
    if len(cg) != len(ch):
        raise GraphError("count vectors of different lengths")
    diff = counts_to_poly(cg, size, measure) - counts_to_poly(ch, size, measure)
    ends = [(Fraction(0), _sign(diff.coeffs, Fraction(0))), (Fraction(1), _sign(diff.coeffs, Fraction(1)))]
    if list(cg) == list(ch):
        return DominanceReport(Verdict.EQUAL, False, diff, measure, method="coefficient", witnesses=ends)
    half = Fraction(1, 2)
    if all(a >= b for a, b in zip(cg, ch)):
        return DominanceReport(
            Verdict.DOMINATES_STRICTLY, True, diff, measure,
            witnesses=[ends[0], (half, 1), ends[1]], method="coefficient",
        )
    if all(a <= b for a, b in zip(cg, ch)):
        return DominanceReport(
            Verdict.DOMINATED_BY, True, diff, measure,
            witnesses=[ends[0], (half, -1), ends[1]], method="coefficient",
        )
    return _sturm_verdict(diff, measure, ends)


def _sturm_verdict(diff: CoeffPoly, measure: ReliabilityMeasure, ends) -> DominanceReport:
    rp = RatPoly.from_coeffpoly(diff)
    odd = even = 0
    for factor, mult in squarefree_decomposition(rp):
        k = SturmChain(factor).count_open(0, 1)
        if mult % 2:
            odd += k
        else:
            even += k
    intervals = isolate_roots(rp, 0, 1)
    samples = sorted({x for iv in intervals for x in iv}) or [Fraction(1, 2)]
    interior = [(p, _sign(diff.coeffs, p)) for p in samples]
    witnesses = [ends[0], *interior, ends[1]]
    if odd:
        verdict = Verdict.CROSSING
        strict = False
        pos = next(w for w in interior if w[1] > 0)
        neg = next(w for w in interior if w[1] < 0)
        witnesses = [ends[0], *sorted([pos, neg]), ends[1]]
    else:
        # no sign change inside (0, 1): every interior non-root sample has the same sign
        s = interior[0][1]
        strict = even == 0
        if s > 0:
            verdict = Verdict.DOMINATES_STRICTLY if strict else Verdict.DOMINATES
        else:
            verdict = Verdict.DOMINATED_BY
    return DominanceReport(verdict, strict, diff, measure, odd, even, witnesses, "sturm")


def dominance(g: Graph, h: Graph, measure: ReliabilityMeasure | str) -> DominanceReport:
    if isinstance(measure, str):
        measure = ReliabilityMeasure.parse(measure)
    _check_same_class(g, h)
    return compare_counts(count_vector(g, measure), count_vector(h, measure), _size(g, measure), measure)


# -- UMR search ---------------------------------------------------------------

@dataclass
class UmrResult:
    n: int
    cyclomatic: int
    measure: ReliabilityMeasure
    class_size: int
    winners: list[Graph]
    # present when no winner exists: two graphs whose reliabilities cross
    crossing: tuple[Graph, Graph, DominanceReport] | None = None
    # every certified crossing between a low-end and a high-end extreme graph
    crossings: list[tuple[Graph, Graph, DominanceReport]] = field(default_factory=list)
    # (winner index, graph index) pairs that needed the Sturm path
    sturm_resolved: list[tuple[int, Graph, DominanceReport]] = field(default_factory=list)
    coefficient_resolved: int = 0

    def to_record(self) -> dict:
        rec = {
            "version": RECORD_VERSION,
            "n": self.n,
            "cyclomatic": self.cyclomatic,
            "measure": self.measure.value,
            "class_size": self.class_size,
            "winners": [_describe(g) for g in self.winners],
            "coefficient_resolved": self.coefficient_resolved,
            "sturm_resolved": [
                {"winner": _describe(self.winners[i])["graph6"], "other": _describe(h), **r.to_record()}
                for i, h, r in self.sturm_resolved
            ],
        }
        if self.crossing is not None:
            g, h, r = self.crossing
            rec["crossing"] = {"first": _describe(g), "second": _describe(h), "report": r.to_record()}
            rec["crossing_pairs"] = [[emit_graph6(a), emit_graph6(b)] for a, b, _ in self.crossings]
        return rec


def _describe(g: Graph) -> dict:
    out = {"graph6": emit_graph6(g)}
    tag = family_tag(g)
    if tag:
        out["family"] = tag
    return out


def family_tag(g: Graph) -> str | None:
    """A short family name for ``g`` when it is one of the named graphs of its class."""
    from .canon import canonical_key
    from .families import classify_bicyclic

    n, key = g.n, canonical_key(g)
    names: list[str] = []
    if n >= 5:
        names += [f"U:{n}", f"A:{n}", f"B:{n}"]
    if n >= 3:
        names.append(f"C:{n}")
    if n >= 2:
        names.append(f"STAR:{n}")
    if n >= 3:
        names += [f"H:{n},{m}" for m in range(3, n - 1)]
    for name in names:
        spec = FamilySpec.parse(name)
        h = build(spec)
        if h.m == g.m and canonical_key(h) == key:
            return name
    if g.m == g.n + 1:
        try:
            t = classify_bicyclic(g)
        except GraphError:
            return None
        base = build(t.spec)
        if base.n == n and canonical_key(base) == key:
            return str(t.spec)
    return None


def _counts_job(measure: ReliabilityMeasure, g: Graph) -> list[int]:
    return count_vector(g, measure)


def class_counts(graphs: Sequence[Graph], measure: ReliabilityMeasure, jobs: int = 1) -> list[list[int]]:
    return parallel_map(partial(_counts_job, measure), graphs, jobs)


def find_umr(
    n: int,
    cyclomatic: int,
    measure: ReliabilityMeasure | str,
    jobs: int = 1,
    graphs: Sequence[Graph] | None = None,
) -> UmrResult:
    """All graphs of the class whose reliability is at least every other member's on ``[0, 1]``.

    A winner must be lexicographically largest both from the low-order end of
    its count vector (behaviour near ``p = 0``) and from the high-order end
    (near ``p = 1``), so only those candidates are compared against the whole
    class.  With no winner, a pair realising the two extremes is returned and
    its crossing is certified exactly.
    """
    if isinstance(measure, str):
        measure = ReliabilityMeasure.parse(measure)
    if graphs is None:
        graphs = list(enumerate_graphs(GenSpec(n, cyclomatic)))
    graphs = list(graphs)
    result = UmrResult(n, cyclomatic, measure, len(graphs), [])
    if not graphs:
        return result
    counts = class_counts(graphs, measure, jobs)
    size = _size(graphs[0], measure)
    bottom = max(counts)
    top = max(c[::-1] for c in counts)
    bottom_idx = [i for i, c in enumerate(counts) if c == bottom]
    top_idx = [i for i, c in enumerate(counts) if c[::-1] == top]
    candidates = [i for i in bottom_idx if i in top_idx]
    failure: tuple[int, int, DominanceReport] | None = None
    for ci in candidates:
        ok = True
        for j, cj in enumerate(counts):
            if j == ci:
                continue
            rep = compare_counts(counts[ci], cj, size, measure)
            if rep.verdict not in FAVOURABLE:
                ok = False
                failure = failure or (ci, j, rep)
                break
            if rep.method == "sturm":
                result.sturm_resolved.append((len(result.winners), graphs[j], rep))
            else:
                result.coefficient_resolved += 1
        if ok:
            result.winners.append(graphs[ci])
        else:
            result.sturm_resolved = [t for t in result.sturm_resolved if t[0] < len(result.winners)]
    if not result.winners:
        if failure is not None:
            i, j, rep = failure
            result.crossings.append((graphs[i], graphs[j], rep))
        for i in bottom_idx:
            for j in top_idx:
                if i == j or (failure is not None and (i, j) == failure[:2]):
                    continue
                rep = compare_counts(counts[i], counts[j], size, measure)
                if rep.verdict is Verdict.CROSSING:
                    result.crossings.append((graphs[i], graphs[j], rep))
        if result.crossings:
            result.crossing = result.crossings[0]
    return result


# -- conjectured family -------------------------------------------------------

@dataclass
class ConjectureReport:
    n: int
    m: int
    measure: ReliabilityMeasure
    class_size: int
    holds: bool
    counterexamples: list[tuple[Graph, DominanceReport]]
    verdict_counts: dict[str, int]

    def to_record(self) -> dict:
        return {
            "version": RECORD_VERSION,
            "n": self.n,
            "m": self.m,
            "measure": self.measure.value,
            "class_size": self.class_size,
            "holds": self.holds,
            "verdict_counts": self.verdict_counts,
            "counterexamples": [
                {"graph6": emit_graph6(g), **r.to_record()} for g, r in self.counterexamples
            ],
        }


def verify_conjecture_H(
    n: int,
    m: int,
    measure: ReliabilityMeasure | str = ReliabilityMeasure.NODE_COPWIN,
    jobs: int = 1,
) -> ConjectureReport:
    """Compare ``H(n, m)`` with every ``m``-cyclic graph of order ``n`` exactly."""
    if isinstance(measure, str):
        measure = ReliabilityMeasure.parse(measure)
    if m < 3:
        raise GraphError(f"cyclomatic number {m} < 3 is already settled; the sweep needs m >= 3")
    hg = build(FamilySpec("H", (n, m)))
    spec = GenSpec(n, m)
    spec.check_bounds()
    graphs = list(enumerate_graphs(spec))
    counts = class_counts(graphs, measure, jobs)
    ch = count_vector(hg, measure)
    size = _size(hg, measure)
    bad: list[tuple[Graph, DominanceReport]] = []
    tally: dict[str, int] = {}
    for g, cg in zip(graphs, counts):
        rep = compare_counts(ch, cg, size, measure)
        tally[rep.verdict.value] = tally.get(rep.verdict.value, 0) + 1
        if rep.verdict not in FAVOURABLE:
            bad.append((g, rep))
    return ConjectureReport(n, m, measure, len(graphs), not bad, bad, tally)

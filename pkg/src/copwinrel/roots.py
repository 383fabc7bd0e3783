"""Complex roots of integer polynomials and the ``|z - 1| <= 1`` disk scan.

Roots at the origin are split off exactly.  The remainder is broken into
squarefree factors over the rationals; each factor is solved with the Aberth
simultaneous iteration in double precision and every root is then polished
by Newton's method in ``mpmath`` at high precision.  Residuals are measured
against the full polynomial at that precision.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Iterable, Sequence

import mpmath
import numpy as np

from .generate import GenSpec, enumerate_graphs
from .graph import Graph
from .graph6 import emit_graph6
from .parallel import parallel_map
from .poly import CoeffPoly
from .relpoly import ReliabilityMeasure, reliability_poly
from .sturm import RatPoly, _primitive, squarefree_decomposition

DEFAULT_TOL = 1e-12
DISK_TOL = 1e-9
ITERATION_CAP = 10_000
POLISH_DPS = 60
RECORD_VERSION = 1


class RootFindingError(ArithmeticError):
    pass


@dataclass
class RootReport:
    """Roots (with multiplicity) and their distance from 1.

    ``distinct`` pairs each distinct root with its multiplicity.
    ``borderline`` lists roots whose distance from 1 lies within the disk
    tolerance of exactly 1; they count as inside but are reported separately.
    """

    roots: list[complex]
    distinct: list[tuple[complex, int]]
    residual: float
    max_dist_from_one: float
    inside_disk: bool
    borderline: list[complex] = field(default_factory=list)
    iterations: int = 0

    def real_roots_in(self, lo: float, hi: float, imag_tol: float = 1e-20) -> list[complex]:
        """Distinct real roots in the open interval ``(lo, hi)``."""
        return [z for z, _ in self.distinct if abs(z.imag) <= imag_tol and lo < z.real < hi]


def _aberth(coeffs: Sequence[int], cap: int) -> tuple[np.ndarray, int]:
    """All roots of a squarefree integer polynomial (ascending ``coeffs``), double precision."""
    a = np.array([float(c) for c in reversed(coeffs)], dtype=complex)
    a = a / a[0]
    d = len(a) - 1
    if d == 1:
        return np.array([-a[1]]), 0
    da = np.polyder(a)
    # Fujiwara bound for the initial circle; the angular offset breaks real symmetry
    radius = 2 * max(abs(a[k]) ** (1.0 / k) for k in range(1, d + 1))
    radius = max(radius, 1e-3)
    angles = 2 * np.pi * (np.arange(d) + 0.4) / d
    z = 0.5 * radius * np.exp(1j * angles)
    eye = np.eye(d, dtype=bool)
    for it in range(1, cap + 1):
        pz = np.polyval(a, z)
        dpz = np.polyval(da, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dpz != 0, pz / dpz, pz)
            diff = z[:, None] - z[None, :]
            diff[eye] = 1.0
            s = (1.0 / diff).sum(axis=1) - 1.0
            w = ratio / (1 - ratio * s)
        w = np.where(np.isfinite(w), w, 1e-3)
        z = z - w
        if np.max(np.abs(w)) <= 1e-15 * (1 + np.max(np.abs(z))):
            return z, it
    return z, cap


def _mp_eval(coeffs: Sequence[int], z):
    acc = mpmath.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _polish(coeffs: Sequence[int], z0: complex) -> mpmath.mpc:
    dcoeffs = [k * c for k, c in enumerate(coeffs)][1:]
    z = mpmath.mpc(z0)
    eps = mpmath.mpf(10) ** (-(POLISH_DPS - 10))
    for _ in range(200):
        d = _mp_eval(dcoeffs, z)
        if d == 0:
            break
        step = _mp_eval(coeffs, z) / d
        z -= step
        if abs(step) <= eps * (1 + abs(z)):
            break
    return z


def complex_roots(
    p: CoeffPoly, tol: float = DEFAULT_TOL, disk_tol: float = DISK_TOL, cap: int = ITERATION_CAP
) -> RootReport:
    if not p:
        raise ValueError("the zero polynomial has no finite root set")
    coeffs = p.coeffs
    zeros = next(k for k, c in enumerate(coeffs) if c)
    reduced = coeffs[zeros:]
    distinct: list[tuple[complex, int]] = []
    mp_roots: list[tuple[mpmath.mpc, int]] = []
    iterations = 0
    with mpmath.workdps(POLISH_DPS):
        if len(reduced) > 1:
            for factor, mult in squarefree_decomposition(RatPoly(reduced)):
                ints = _primitive(factor)
                approx, its = _aberth(ints, cap)
                iterations = max(iterations, its)
                for z0 in approx:
                    mp_roots.append((_polish(ints, complex(z0)), mult))
        lc = abs(reduced[-1])
        deg = len(reduced) - 1
        residual = 0.0
        for z, _ in mp_roots:
            r = abs(_mp_eval(reduced, z)) / (1 + lc * abs(z) ** deg)
            residual = max(residual, float(r))
        if residual > tol:
            raise RootFindingError(
                f"root residual {residual:.3e} exceeds tolerance {tol:.1e} after {iterations} iterations"
            )
        for z, mult in mp_roots:
            zc = complex(z)
            if abs(zc.imag) <= 1e-25 * (1 + abs(zc.real)):
                zc = complex(zc.real, 0.0)
            distinct.append((zc, mult))
    if zeros:
        distinct.append((0j, zeros))
    distinct.sort(key=lambda t: (round(t[0].real, 12), round(t[0].imag, 12)))
    roots = [z for z, mult in distinct for _ in range(mult)]
    dists = [abs(z - 1) for z in roots]
    max_dist = max(dists, default=0.0)
    borderline = [z for z, d in zip(roots, dists) if abs(d - 1) <= disk_tol]
    return RootReport(
        roots=roots,
        distinct=distinct,
        residual=residual,
        max_dist_from_one=max_dist,
        inside_disk=max_dist <= 1 + disk_tol,
        borderline=borderline,
        iterations=iterations,
    )


def root_record(g: Graph, measure: ReliabilityMeasure, poly: CoeffPoly, report: RootReport) -> dict:
    return {
        "version": RECORD_VERSION,
        "graph6": emit_graph6(g),
        "measure": measure.value,
        "coefficients": [str(c) for c in poly.coeffs],
        "roots": [[z.real, z.imag] for z in report.roots],
        "max_dist_from_one": report.max_dist_from_one,
        "inside_disk": report.inside_disk,
        "borderline": len(report.borderline),
    }


@dataclass
class DiskScan:
    measure: ReliabilityMeasure
    records: list[dict]
    max_dist_from_one: float
    all_inside: bool
    outside: list[str]
    borderline_graphs: list[str]

    @property
    def count(self) -> int:
        return len(self.records)

    def summary(self) -> dict:
        return {
            "version": RECORD_VERSION,
            "measure": self.measure.value,
            "graphs": self.count,
            "max_dist_from_one": self.max_dist_from_one,
            "all_inside": self.all_inside,
            "outside": self.outside,
            "borderline": self.borderline_graphs,
        }


def _scan_job(measure: ReliabilityMeasure, tol: float, g: Graph) -> dict:
    poly = reliability_poly(g, measure)
    return root_record(g, measure, poly, complex_roots(poly, tol=tol))


def disk_scan(
    graphs: Iterable[Graph] | GenSpec,
    measure: ReliabilityMeasure | str,
    tol: float = DEFAULT_TOL,
    jobs: int = 1,
) -> DiskScan:
    if isinstance(measure, str):
        measure = ReliabilityMeasure.parse(measure)
    if isinstance(graphs, GenSpec):
        graphs = enumerate_graphs(graphs)
    records = parallel_map(partial(_scan_job, measure, tol), list(graphs), jobs)
    max_dist = max((r["max_dist_from_one"] for r in records), default=0.0)
    outside = [r["graph6"] for r in records if not r["inside_disk"]]
    border = [r["graph6"] for r in records if r["borderline"]]
    return DiskScan(measure, records, max_dist, not outside, outside, border)


def write_jsonl(path: str | Path, records: Iterable[dict]) -> int:
    n = 0
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(r, sort_keys=True) + "\n")
            n += 1
    return n


def vieta_sum_ok(p: CoeffPoly, report: RootReport, rel: float = 1e-8) -> bool:
    """Sum of roots against ``-a_(d-1) / a_d``."""
    d = p.degree
    if d < 1:
        return not report.roots
    expected = -p[d - 1] / p[d]
    got = sum(report.roots)
    return abs(got - expected) <= rel * max(1.0, abs(expected), math.fsum(abs(z) for z in report.roots))

"""Connected-set and cop-win counts, their generating polynomials, and reliability.

``S_k`` counts vertex subsets of size ``k`` inducing a connected subgraph and
``W_k`` those inducing a cop-win subgraph.  ``CS(G, x) = sum S_k x^k`` and
``CW(G, x) = sum W_k x^k``; the node reliabilities are the same counts in the
basis ``p^k (1-p)^(n-k)``.

The direct enumerator walks all ``2^n`` subsets.  ``cs_poly_pivot`` is an
independent route through the pivot recursion
``CS(G) = CS(G-v) + x (CS(G/v) - CS(G-N[v]) + 1)`` memoised on canonical keys.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb
from typing import Sequence

from .canon import canonical_key
from .copwin import closed_neighborhoods, find_corner, mask_is_copwin
from .graph import (
    Graph,
    GraphError,
    bits,
    component_mask,
    components,
    contract_close,
    delete_closed_neighborhood,
    delete_vertex,
    induced_subgraph,
)
from .poly import CoeffPoly, binomial_form, evaluate_binomial_form

MAX_SUBSET_ORDER = 24
MAX_EDGE_SUBSETS = 24
RECORD_VERSION = 1


class ReliabilityMeasure(enum.Enum):
    NODE_CONNECTED = "nrel"
    NODE_COPWIN = "ncrel"
    EDGE_COPWIN = "ecrel"

    @classmethod
    def parse(cls, text: str) -> ReliabilityMeasure:
        key = text.strip().lower()
        aliases = {
            "nrel": cls.NODE_CONNECTED, "node-connected": cls.NODE_CONNECTED, "cs": cls.NODE_CONNECTED,
            "ncrel": cls.NODE_COPWIN, "node-copwin": cls.NODE_COPWIN, "cw": cls.NODE_COPWIN,
            "ecrel": cls.EDGE_COPWIN, "edge-copwin": cls.EDGE_COPWIN,
        }
        if key not in aliases:
            raise ValueError(f"unknown reliability measure {text!r}")
        return aliases[key]


def _check_subset_bound(g: Graph) -> None:
    if g.n > MAX_SUBSET_ORDER:
        raise GraphError(f"subset enumerator limited to n <= {MAX_SUBSET_ORDER}, got {g.n}")


def subset_counts(g: Graph) -> tuple[list[int], list[int]]:
    """``(S, W)`` with ``S[k-1] = S_k`` and ``W[k-1] = W_k`` for ``k = 1..n``.

    Cop-win status of a connected subset reuses the answer for the subset with
    one corner removed, since deleting a dominated vertex preserves it.
    """
    _check_subset_bound(g)
    n = g.n
    adj = g.adj
    cn = closed_neighborhoods(g)
    s_counts = [0] * (n + 1)
    w_counts = [0] * (n + 1)
    cw = bytearray(1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        if component_mask(adj, low, mask) != mask:
            continue
        k = mask.bit_count()
        s_counts[k] += 1
        if k == 1:
            cw[mask] = 1
        else:
            hit = find_corner(cn, mask)
            if hit is not None:
                cw[mask] = cw[mask & ~(1 << hit[0])]
        if cw[mask]:
            w_counts[k] += 1
    return s_counts[1:], w_counts[1:]


def connected_set_counts(g: Graph) -> list[int]:
    return subset_counts(g)[0]


def copwin_set_counts(g: Graph) -> list[int]:
    return subset_counts(g)[1]


def cs_poly(g: Graph) -> CoeffPoly:
    return CoeffPoly.from_counts(connected_set_counts(g))


def cw_poly(g: Graph) -> CoeffPoly:
    return CoeffPoly.from_counts(copwin_set_counts(g))


def edge_copwin_counts(g: Graph) -> list[int]:
    """``E[j]`` = number of cop-win spanning subgraphs with exactly ``j`` edges, ``j = 0..m``."""
    edges = g.edges()
    m = len(edges)
    if m > MAX_EDGE_SUBSETS:
        raise GraphError(f"edge-subset enumerator limited to m <= {MAX_EDGE_SUBSETS}, got {m}")
    n = g.n
    out = [0] * (m + 1)
    if n == 0:
        return out
    full = g.full_mask
    for sub in range(1 << m):
        j = sub.bit_count()
        if j < n - 1:
            continue
        cn = [1 << v for v in range(n)]
        for e in bits(sub):
            u, v = edges[e]
            cn[u] |= 1 << v
            cn[v] |= 1 << u
        if mask_is_copwin(cn, full):
            out[j] += 1
    return out


# -- pivoting -----------------------------------------------------------------

def _complete_cs(n: int) -> CoeffPoly:
    return CoeffPoly([0] + [comb(n, k) for k in range(1, n + 1)])


def _pivot_vertex(g: Graph) -> int:
    return min(range(g.n), key=lambda v: (g.adj[v].bit_count(), v))


def pivot_cs_terms(g: Graph, v: int, cs=None) -> CoeffPoly:
    """Right-hand side of the pivot identity at vertex ``v`` with subgraph polynomials from ``cs``."""
    cs = cs or cs_poly
    one = CoeffPoly([1])
    return cs(delete_vertex(g, v)) + (
        cs(contract_close(g, v)) - cs(delete_closed_neighborhood(g, v)) + one
    ).shift(1)


def cs_poly_pivot(g: Graph, cache: dict[bytes, CoeffPoly] | None = None) -> CoeffPoly:
    """CS polynomial through the pivot recursion; ``cache`` maps canonical keys to results."""
    if cache is None:
        cache = {}
    return _cs_pivot(g, cache)


def _cs_pivot(g: Graph, cache: dict[bytes, CoeffPoly]) -> CoeffPoly:
    if g.n == 0:
        return CoeffPoly()
    comps = components(g)
    if len(comps) > 1:
        total = CoeffPoly()
        for c in comps:
            total = total + _cs_pivot(induced_subgraph(g, c), cache)
        return total
    if g.n == 1:
        return CoeffPoly([0, 1])
    if g.m == g.n * (g.n - 1) // 2:
        return _complete_cs(g.n)
    key = canonical_key(g)
    hit = cache.get(key)
    if hit is not None:
        return hit
    v = _pivot_vertex(g)
    minus = _cs_pivot(delete_vertex(g, v), cache)
    if g.adj[v].bit_count() == 1:
        closed = minus
    else:
        closed = _cs_pivot(contract_close(g, v), cache)
    nbhd = _cs_pivot(delete_closed_neighborhood(g, v), cache)
    result = minus + (closed - nbhd + CoeffPoly([1])).shift(1)
    cache[key] = result
    return result


def nrel_pivot(g: Graph, p: Fraction | int, v: int | None = None) -> Fraction:
    """Node reliability at an exact rational ``p`` via the probabilistic pivot identity.

    The identity used is the image of the CS pivot under ``x = p/(1-p)``:
    ``(1-p) R(G-v) + p R(G/v) - p (1-p)^deg(v) R(G-N[v]) + p (1-p)^(n-1)``.

    ``v`` fixes the first pivot vertex; deeper levels use the minimum-degree vertex.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability {p} outside [0, 1]")
    memo: dict[bytes, Fraction] = {}
    return _nrel(g, p, memo, v)


def _nrel(g: Graph, p: Fraction, memo: dict[bytes, Fraction], v: int | None = None) -> Fraction:
    n = g.n
    if n == 0:
        return Fraction(0)
    if n == 1:
        return p
    key = canonical_key(g) if v is None else None
    if key is not None and key in memo:
        return memo[key]
    if v is None:
        v = _pivot_vertex(g)
    q = 1 - p
    deg = g.adj[v].bit_count()
    val = (
        q * _nrel(delete_vertex(g, v), p, memo)
        + p * _nrel(contract_close(g, v), p, memo)
        - p * q**deg * _nrel(delete_closed_neighborhood(g, v), p, memo)
        + p * q ** (n - 1)
    )
    if key is not None:
        memo[key] = val
    return val


# -- probability forms --------------------------------------------------------

def reliability_poly(g: Graph, measure: ReliabilityMeasure) -> CoeffPoly:
    """Reliability as an expanded integer polynomial in the operational probability."""
    if measure is ReliabilityMeasure.EDGE_COPWIN:
        return binomial_form(edge_copwin_counts(g), g.m, start=0)
    s, w = subset_counts(g)
    counts = s if measure is ReliabilityMeasure.NODE_CONNECTED else w
    return binomial_form(counts, g.n)


def count_vector(g: Graph, measure: ReliabilityMeasure) -> list[int]:
    """The counts that feed the probability form for ``measure``."""
    if measure is ReliabilityMeasure.EDGE_COPWIN:
        return edge_copwin_counts(g)
    s, w = subset_counts(g)
    return s if measure is ReliabilityMeasure.NODE_CONNECTED else w


def nrel_direct(g: Graph, p: Fraction | int) -> Fraction:
    return evaluate_binomial_form(connected_set_counts(g), g.n, Fraction(p))


def mobius_bridge(counts: Sequence[int]) -> bool:
    """Check ``(1-p)^n CW(p/(1-p)) == NCRel(p)`` as polynomials for the count vector.

    The left side is evaluated through the rational substitution, the right side
    through the expanded monomial form; agreement at ``n + 1`` distinct points
    proves equality of the two degree-``n`` polynomials.
    """
    n = len(counts)
    cw = CoeffPoly.from_counts(counts)
    rel = binomial_form(counts, n)
    for t in range(n + 1):
        p = Fraction(t, n + 2)
        lhs = (1 - p) ** n * cw(p / (1 - p))
        if lhs != rel(p):
            return False
    return True


def poly_record(poly: CoeffPoly, n: int, measure: ReliabilityMeasure | str) -> dict:
    name = measure.value if isinstance(measure, ReliabilityMeasure) else measure
    return {
        "version": RECORD_VERSION,
        "n": n,
        "measure": name,
        "coefficients": [str(c) for c in poly.coeffs],
    }


def poly_from_record(record: dict) -> CoeffPoly:
    if record.get("version") != RECORD_VERSION:
        raise ValueError(f"unsupported record version {record.get('version')!r}")
    return CoeffPoly(int(c) for c in record["coefficients"])

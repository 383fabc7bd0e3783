"""Named graph families, their closed-form polynomials, and the bicyclic classifier.

Vertex labelling conventions (all families are built on ``0..n-1``):

* ``C(n)``: the cycle ``0-1-...-(n-1)-0``.
* ``STAR(n)``: ``K_{1,n-1}`` centred at 0.
* ``U(n)``: 0 universal, extra edge 1-2, leaves ``3..n-1``.
* ``A(n)``: cycle on ``0..n-2`` and the leaf ``n-1`` attached to 0.
* ``B(n)``: ``U(n-1)`` plus vertex 3 joined to 0 and to 1; leaves ``4..n-1``.
* ``F(n1, n2)``: centre 0 with the two triangles 0-1-2 and 0-3-4, ``n1`` leaves
  and ``n2`` pendant paths of two vertices.
* ``G1(a, b)``: cycles of lengths ``a`` and ``b`` sharing vertex 0.
* ``G2(a, b, c)``: cycles ``C_a`` and ``C_b`` joined by a path on ``c >= 2``
  vertices whose end vertices lie on the cycles.
* ``G3(a, b, c)``: hubs 0 and 1 joined by three internally disjoint paths with
  ``a``, ``b`` and ``c`` internal vertices.
* ``H(n, m)``: the star centred at 0 with ``v = 1`` joined to ``2..m+1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, bits, is_connected, mask_connected
from .poly import CoeffPoly

TAGS = ("C", "STAR", "U", "A", "B", "F", "G1", "G2", "G3", "H")
_ARITY = {"C": 1, "STAR": 1, "U": 1, "A": 1, "B": 1, "F": 2, "G1": 2, "G2": 3, "G3": 3, "H": 2}
_SPEC_RE = re.compile(r"^\s*([A-Za-z][A-Za-z0-9]*)\s*:\s*([0-9,\s]+)$")


class FamilyError(GraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    """A named family member such as ``U(8)`` or ``G3(1,1,4)``."""

    tag: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        tag = self.tag.upper()
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if tag not in _ARITY:
            raise FamilyError(f"unknown family tag {self.tag!r}; expected one of {', '.join(TAGS)}")
        if len(self.params) != _ARITY[tag]:
            raise FamilyError(f"{tag} takes {_ARITY[tag]} parameter(s), got {len(self.params)}")
        _validate(tag, self.params)

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        """Parse ``TAG:p1[,p2[,p3]]``; tags are case-insensitive."""
        m = _SPEC_RE.match(text)
        if not m:
            raise FamilyError(f"cannot parse family spec {text!r}; expected TAG:p1[,p2[,p3]]")
        parts = [p.strip() for p in m.group(2).split(",")]
        if any(not p for p in parts):
            raise FamilyError(f"empty parameter in {text!r}")
        return cls(m.group(1), tuple(int(p) for p in parts))

    @property
    def order(self) -> int:
        t, p = self.tag, self.params
        if t == "F":
            return p[0] + 2 * p[1] + 5
        if t == "G1":
            return p[0] + p[1] - 1
        if t == "G2":
            return p[0] + p[1] + p[2] - 2
        if t == "G3":
            return sum(p) + 2
        return p[0]

    def __str__(self) -> str:
        return f"{self.tag}:{','.join(map(str, self.params))}"


def _validate(tag: str, p: tuple[int, ...]) -> None:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            raise FamilyError(f"{tag}:{','.join(map(str, p))}: {msg}")

    if tag == "C":
        need(p[0] >= 3, "cycle needs n >= 3")
    elif tag == "STAR":
        need(p[0] >= 2, "star needs n >= 2")
    elif tag in ("U", "A", "B"):
        need(p[0] >= 5, "needs n >= 5")
    elif tag == "F":
        need(min(p) >= 0, "parameters must be nonnegative")
    elif tag == "G1":
        need(min(p) >= 3, "cycle lengths must be >= 3")
    elif tag == "G2":
        need(min(p[:2]) >= 3, "cycle lengths must be >= 3")
        need(p[2] >= 2, "connecting path needs c >= 2 vertices")
    elif tag == "G3":
        need(min(p) >= 0, "path lengths must be nonnegative")
        need(sum(1 for x in p if x == 0) <= 1, "at most one path may be empty")
    elif tag == "H":
        need(p[0] >= 2, "needs n >= 2")
        need(0 <= p[1] <= p[0] - 2, "needs 0 <= m <= n-2")
    if tag != "F":
        order = {"G1": lambda: p[0] + p[1] - 1, "G2": lambda: p[0] + p[1] + p[2] - 2,
                 "G3": lambda: sum(p) + 2}.get(tag, lambda: p[0])()
        need(order <= 64, "order exceeds 64")
    else:
        need(p[0] + 2 * p[1] + 5 <= 64, "order exceeds 64")


def _path_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return list(zip(vertices, vertices[1:]))


def build(spec: FamilySpec | str) -> Graph:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    t, p = spec.tag, spec.params
    n = spec.order
    edges: list[tuple[int, int]] = []
    if t == "C":
        return Graph.cycle(n)
    if t == "STAR":
        return Graph.star(n)
    if t == "U":
        edges = [(0, v) for v in range(1, n)] + [(1, 2)]
    elif t == "A":
        edges = [(v, (v + 1) % (n - 1)) for v in range(n - 1)] + [(0, n - 1)]
    elif t == "B":
        edges = [(0, v) for v in range(1, n)] + [(1, 2), (1, 3)]
    elif t == "F":
        n1, n2 = p
        edges = [(0, v) for v in range(1, 5)] + [(1, 2), (3, 4)]
        edges += [(0, v) for v in range(5, 5 + n1)]
        for i in range(n2):
            a = 5 + n1 + 2 * i
            edges += [(0, a), (a, a + 1)]
    elif t == "G1":
        a, b = p
        first = list(range(a))
        second = [0] + list(range(a, a + b - 1))
        edges = _path_edges(first + [0]) + _path_edges(second + [0])
    elif t == "G2":
        a, b, c = p
        cyc_a = list(range(a))
        path = [0] + list(range(a, a + c - 2)) + [a + c - 2]
        start_b = a + c - 2
        cyc_b = [start_b] + list(range(start_b + 1, start_b + b))
        edges = _path_edges(cyc_a + [0]) + _path_edges(path) + _path_edges(cyc_b + [start_b])
    elif t == "G3":
        nxt = 2
        for length in p:
            inner = list(range(nxt, nxt + length))
            nxt += length
            edges += _path_edges([0] + inner + [1])
    elif t == "H":
        _, m = p
        edges = [(0, v) for v in range(1, n)] + [(1, v) for v in range(2, m + 2)]
    return Graph.from_edges(n, edges)


# -- closed forms -------------------------------------------------------------

CLOSED_FORM_TAGS = ("U", "C", "A", "B", "F")


def _closed_form_check(spec: FamilySpec) -> int:
    if spec.tag not in CLOSED_FORM_TAGS or (spec.tag == "F" and spec.params[1] != 0):
        raise FamilyError(f"no closed form for {spec}; supported: U, C, A, B and F:k,0")
    n = spec.order
    if n < 5:
        raise FamilyError(f"closed forms need n >= 5, got {n}")
    return n


def closed_form_cw(spec: FamilySpec | str) -> CoeffPoly:
    """Cop-win set polynomial from the published closed-form expressions, without enumeration.

    For ``A(n)`` the published ``x^(n-1)`` coefficient is off by one against
    enumeration; the value is returned as published.
    """
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    n = _closed_form_check(spec)
    c = [0] * (n + 1)
    if spec.tag == "U":
        c[1], c[2] = n, n
        for k in range(3, n + 1):
            c[k] = comb(n - 1, k - 1)
    elif spec.tag == "C":
        for k in range(1, n):
            c[k] = n
    elif spec.tag == "A":
        c[1] = n
        for k in range(2, n - 1):
            c[k] = n + k - 2
        c[n - 1] = n - 1
    elif spec.tag == "B":
        c[1], c[2], c[3] = n, n + 1, comb(n - 1, 2) + 1
        for k in range(4, n + 1):
            c[k] = comb(n - 1, k - 1)
    else:  # F(n-5, 0)
        c[1], c[2] = n, n + 1
        for k in range(3, n + 1):
            c[k] = comb(n - 1, k - 1)
    return CoeffPoly(c)


def closed_form_cs(spec: FamilySpec | str) -> CoeffPoly:
    """Connected set polynomial from the published closed forms (same caveat for ``A(n)``)."""
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    n = _closed_form_check(spec)
    cw = closed_form_cw(spec)
    if spec.tag == "C":
        return cw + CoeffPoly.monomial(n)
    if spec.tag == "A":
        return cw + CoeffPoly.monomial(n - 1) + CoeffPoly.monomial(n)
    return cw


# -- bicyclic classification --------------------------------------------------

@dataclass(frozen=True)
class BicyclicType:
    """``kind`` is 1, 2 or 3; ``params`` are the sorted base-graph parameters."""

    kind: int
    params: tuple[int, ...]

    @property
    def spec(self) -> FamilySpec:
        return FamilySpec(f"G{self.kind}", self.params)

    def __str__(self) -> str:
        return f"Type{self.kind}{self.params}"


def two_core(g: Graph) -> int:
    """Mask of the 2-core: repeatedly strip vertices of degree at most one."""
    alive = g.full_mask
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if (g.adj[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def _walk(g: Graph, core: int, start: int, first: int, branch: int) -> tuple[int, int]:
    """Follow a core path from ``start`` via ``first`` to the next branch vertex.

    Returns ``(end, internal_vertex_count)``.
    """
    prev, cur, inner = start, first, 0
    while not branch >> cur & 1:
        inner += 1
        nbrs = g.adj[cur] & core & ~(1 << prev)
        prev, cur = cur, (nbrs & -nbrs).bit_length() - 1
    return cur, inner


def classify_bicyclic(g: Graph) -> BicyclicType:
    if not is_connected(g) or g.n == 0 or g.m != g.n + 1:
        raise FamilyError(f"not bicyclic: n={g.n}, m={g.m}, connected={is_connected(g)}")
    core = two_core(g)
    deg = {v: (g.adj[v] & core).bit_count() for v in bits(core)}
    branch_vs = [v for v, d in deg.items() if d >= 3]
    branch = sum(1 << v for v in branch_vs)
    if len(branch_vs) == 1:
        x = branch_vs[0]
        lengths = []
        seen = 0
        for y in bits(g.adj[x] & core):
            if seen >> y & 1:
                continue
            end, inner = _walk(g, core, x, y, branch)
            # the walk's last internal vertex is the other endpoint of this loop
            lengths.append(inner + 1)
            seen |= 1 << y
            seen |= _last_before(g, core, x, y, branch)
        return BicyclicType(1, tuple(sorted(lengths)))
    if len(branch_vs) != 2:
        raise FamilyError(f"unexpected 2-core with {len(branch_vs)} branch vertices")
    x, y = branch_vs
    loops: dict[int, int] = {}
    paths: list[int] = []
    seen = 0
    for first in bits(g.adj[x] & core):
        if seen >> first & 1:
            continue
        end, inner = _walk(g, core, x, first, branch)
        if end == x:
            loops[x] = inner + 1
            seen |= 1 << first
            seen |= _last_before(g, core, x, first, branch)
        else:
            paths.append(inner)
    if not loops:
        return BicyclicType(3, tuple(sorted(paths)))
    for first in bits(g.adj[y] & core):
        end, inner = _walk(g, core, y, first, branch)
        if end == y:
            loops[y] = inner + 1
            break
    a, b = sorted((loops[x], loops[y]))
    return BicyclicType(2, (a, b, paths[0] + 2))


def _last_before(g: Graph, core: int, start: int, first: int, branch: int) -> int:
    """Bit of the vertex visited just before returning to a branch vertex."""
    prev, cur = start, first
    while not branch >> cur & 1:
        nbrs = g.adj[cur] & core & ~(1 << prev)
        prev, cur = cur, (nbrs & -nbrs).bit_length() - 1
    return 1 << prev


# -- cut sets -----------------------------------------------------------------

def count_cut_sets(g: Graph, k: int) -> int:
    """Number of ``k``-subsets whose removal leaves a disconnected graph (brute force)."""
    if not is_connected(g):
        raise FamilyError("count_cut_sets needs a connected graph")
    if not 1 <= k < g.n:
        raise FamilyError(f"need 1 <= k < n, got k={k}, n={g.n}")
    full = g.full_mask
    count = 0
    for removed in combinations(range(g.n), k):
        rest = full & ~sum(1 << v for v in removed)
        if not mask_connected(g.adj, rest):
            count += 1
    return count


def binomial_exceeds_linear(n: int, k: int) -> bool:
    """``C(n-1, k-1) >= n + k - 2``, the counting bound behind the unicyclic argument."""
    return comb(n - 1, k - 1) >= n + k - 2

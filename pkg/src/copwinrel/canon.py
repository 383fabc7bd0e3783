"""Canonical certificates for isomorph rejection.

The main routine is an individualisation-refinement search: colour
refinement to an equitable ordered partition, then branching on the first
smallest non-singleton cell.  Leaves are compared by their relabelled
adjacency rows and the minimum is kept.  Two prunings keep symmetric graphs
cheap:

* a leaf whose relabelled graph equals the first or best leaf yields an
  automorphism; the search jumps back to the deepest common ancestor, whose
  remaining child subtree is an image of one already explored;
* at each node, children in the same orbit of the automorphisms found so
  far that fix the node's prefix pointwise are skipped.

``canonical_key_bruteforce`` minimises over all ``n!`` labelings and exists
only as a test oracle.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, GraphError, bits

MAX_CANON_ORDER = 64
MAX_BRUTEFORCE_ORDER = 9


def _refine(nbrs: list[list[int]], cells: list[list[int]], n: int) -> list[list[int]]:
    cell_of = [0] * n
    while True:
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted([cell_of[u] for u in nbrs[v]]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        if len(new_cells) == len(cells):
            return new_cells
        cells = new_cells


def _certificate(g: Graph, order: list[int]) -> tuple[int, ...]:
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return tuple(rows)


def _orbit_rep(autos: list[list[int]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in autos:
        for x in range(n):
            a, b = find(x), find(gamma[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


class _Search:
    def __init__(self, g: Graph) -> None:
        self.g = g
        self.n = g.n
        self.nbrs = [list(bits(row)) for row in g.adj]
        self.first: tuple[tuple[int, ...], list[int], list[int]] | None = None
        self.best: tuple[tuple[int, ...], list[int], list[int]] | None = None
        self.autos: list[list[int]] = []

    def _record_auto(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(src, dst):
            gamma[a] = b
        self.autos.append(gamma)

    def run(self) -> tuple[tuple[int, ...], list[int]]:
        self._node([list(range(self.n))], [])
        assert self.best is not None
        return self.best[0], self.best[1]

    def _node(self, cells: list[list[int]], prefix: list[int]) -> int:
        """Explore a search node; return the depth the search should resume at."""
        depth = len(prefix)
        cells = _refine(self.nbrs, cells, self.n)
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            cert = _certificate(self.g, order)
            if self.first is None:
                self.first = self.best = (cert, order, prefix)
                return depth
            for stored in (self.first, self.best):
                if cert == stored[0]:
                    self._record_auto(stored[1], order)
                    common = 0
                    for a, b in zip(stored[2], prefix):
                        if a != b:
                            break
                        common += 1
                    return common
            if cert < self.best[0]:
                self.best = (cert, order, prefix)
            return depth

        target = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        explored: list[int] = []
        for w in cells[target]:
            if explored:
                fixing = [a for a in self.autos if all(a[x] == x for x in prefix)]
                if fixing:
                    rep = _orbit_rep(fixing, self.n)
                    if any(rep[w] == rep[e] for e in explored):
                        continue
            explored.append(w)
            rest = [v for v in cells[target] if v != w]
            child = cells[:target] + [[w], rest] + cells[target + 1:]
            resume = self._node(child, prefix + [w])
            if resume < depth:
                return resume
        return depth


def _encode(n: int, rows: tuple[int, ...]) -> bytes:
    width = max(1, (n + 7) // 8)
    return bytes([n]) + b"".join(r.to_bytes(width, "little") for r in rows)


def canonical_form(g: Graph) -> tuple[bytes, list[int]]:
    """Return ``(key, order)`` where ``order[i]`` is the vertex placed at canonical position ``i``."""
    if g.n > MAX_CANON_ORDER:
        raise GraphError(f"order {g.n} exceeds canonical-form bound {MAX_CANON_ORDER}")
    if g.n == 0:
        return bytes([0]), []
    cert, order = _Search(g).run()
    return _encode(g.n, cert), order


def canonical_key(g: Graph) -> bytes:
    """Certificate equal for two graphs exactly when they are isomorphic."""
    return canonical_form(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabelling of ``g``."""
    _, order = canonical_form(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    from .graph import relabel

    return relabel(g, pos)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_key(g) == canonical_key(h)


def canonical_key_bruteforce(g: Graph) -> bytes:
    if g.n > MAX_BRUTEFORCE_ORDER:
        raise GraphError(f"brute-force canonical form limited to n <= {MAX_BRUTEFORCE_ORDER}")
    best = min(_certificate(g, list(p)) for p in permutations(range(g.n))) if g.n else ()
    return _encode(g.n, best)

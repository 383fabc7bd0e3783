"""Bitset simple graphs and the vertex operations used by the pivoting recursion.

A :class:`Graph` stores one neighbour bitmask per vertex.  Vertex sets are
plain ``int`` bitmasks over ``0..n-1``.  Every operation returns a new graph;
deletions relabel the survivors contiguously, preserving their relative order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for invalid graph construction or out-of-range vertices."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _make(n: int, adj: tuple[int, ...]) -> Graph:
    # internal constructor for adjacency already known to be valid
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", adj)
    return g


def _compress(mask: int, keep: list[int]) -> int:
    out = 0
    for i, v in enumerate(keep):
        if mask >> v & 1:
            out |= 1 << i
    return out


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 0..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour out of range")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int = 0) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, n: int) -> Graph:
        """K_{1,n-1}, centre 0."""
        return cls.from_edges(n, ((0, i) for i in range(1, n)))

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v].bit_count() == 1]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")


# -- vertex operations ------------------------------------------------------

def induced_subgraph(g: Graph, s: int) -> Graph:
    """Subgraph induced by the vertex mask ``s``, relabelled in increasing order."""
    if s & ~g.full_mask:
        raise GraphError("vertex set outside the graph's range")
    keep = list(bits(s))
    return _make(len(keep), tuple(_compress(g.adj[v] & s, keep) for v in keep))


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, g.full_mask & ~(1 << v))


def delete_closed_neighborhood(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, g.full_mask & ~g.closed_neighborhood(v))


def contract_close(g: Graph, v: int) -> Graph:
    """G/v: make N(v) a clique, then delete v."""
    g._check_vertex(v)
    nb = g.adj[v]
    adj = list(g.adj)
    for u in bits(nb):
        adj[u] |= nb & ~(1 << u)
    return delete_vertex(_make(g.n, tuple(adj)), v)


def component_mask(adj: tuple[int, ...] | list[int], start: int, within: int) -> int:
    """Vertices reachable from ``start`` inside the mask ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def mask_connected(adj: tuple[int, ...] | list[int], s: int) -> bool:
    """True when the vertex mask ``s`` induces a connected subgraph (empty counts as connected)."""
    if s == 0:
        return True
    low = (s & -s).bit_length() - 1
    return component_mask(adj, low, s) == s


def is_connected(g: Graph) -> bool:
    return mask_connected(g.adj, g.full_mask)


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by lowest vertex."""
    rest = g.full_mask
    out = []
    while rest:
        low = (rest & -rest).bit_length() - 1
        comp = component_mask(g.adj, low, rest)
        out.append(comp)
        rest &= ~comp
    return out


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError(f"combined order {g.n + h.n} exceeds capacity {MAX_ORDER}")
    shift = g.n
    return _make(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    u = disjoint_union(g, h)
    left = g.full_mask
    right = h.full_mask << g.n
    adj = [row | right if v < g.n else row | left for v, row in enumerate(u.adj)]
    return _make(u.n, tuple(adj))


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabelling is not a permutation")
    adj = [0] * g.n
    for v, row in enumerate(g.adj):
        adj[perm[v]] = sum(1 << perm[u] for u in bits(row))
    return _make(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("self-loop")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return _make(g.n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return _make(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))

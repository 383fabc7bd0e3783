"""Isomorph-free generation of connected graphs by order and cyclomatic number.

The main generator builds the trees of order ``n`` by leaf augmentation and
then climbs one edge at a time: level ``m`` is the set of canonical forms of
all one-edge extensions of level ``m - 1``.  Every connected graph with
``n - 1 + m`` edges contains a spanning tree and therefore arises this way.
Output is sorted by canonical key, so streams are deterministic.

``enumerate_by_filter`` is an independent second route that runs through all
labelled edge sets and keeps one canonical representative per class.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .canon import canonical_graph, canonical_key
from .graph import Graph, GraphError, add_edge, bits, is_connected
from .graph6 import write_graph6_file

MAX_ORDER_SPARSE = 11  # cyclomatic number 0, 1, 2
MAX_ORDER_TRICYCLIC = 10
MAX_ORDER_DENSE = 8  # cyclomatic number >= 4, or every connected graph
MAX_FILTER_ORDER = 7


class EnumerationBoundError(GraphError):
    pass


@dataclass(frozen=True)
class GenSpec:
    """Connected graphs of order ``n`` with ``n - 1 + cyclomatic`` edges.

    ``cyclomatic=None`` selects every connected graph of order ``n``.
    """

    n: int
    cyclomatic: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"order must be >= 1, got {self.n}")
        if self.cyclomatic is not None:
            if self.cyclomatic < 0:
                raise GraphError(f"cyclomatic number must be >= 0, got {self.cyclomatic}")
            if self.edges > self.n * (self.n - 1) // 2:
                raise GraphError(
                    f"{self.edges} edges do not fit on {self.n} vertices"
                )

    @property
    def edges(self) -> int | None:
        return None if self.cyclomatic is None else self.n - 1 + self.cyclomatic

    @property
    def max_order(self) -> int:
        m = self.cyclomatic
        if m is None or m >= 4:
            return MAX_ORDER_DENSE
        return MAX_ORDER_TRICYCLIC if m == 3 else MAX_ORDER_SPARSE

    def check_bounds(self) -> None:
        if self.n > self.max_order:
            what = "all connected graphs" if self.cyclomatic is None else f"cyclomatic {self.cyclomatic}"
            raise EnumerationBoundError(
                f"enumeration of {what} limited to n <= {self.max_order}, got n={self.n}"
            )

    def __str__(self) -> str:
        return f"n={self.n}, cyclomatic={'all' if self.cyclomatic is None else self.cyclomatic}"


_TREE_CACHE: dict[int, dict[bytes, Graph]] = {}
_LEVEL_CACHE: dict[tuple[int, int], dict[bytes, Graph]] = {}


def _trees(n: int) -> dict[bytes, Graph]:
    if n in _TREE_CACHE:
        return _TREE_CACHE[n]
    if n == 1:
        out = {canonical_key(Graph.empty(1)): Graph.empty(1)}
    else:
        out = {}
        for t in _trees(n - 1).values():
            for v in range(n - 1):
                grown = Graph.from_edges(n, t.edges() + [(v, n - 1)])
                key = canonical_key(grown)
                if key not in out:
                    out[key] = canonical_graph(grown)
    _TREE_CACHE[n] = out
    return out


def _level(n: int, m: int) -> dict[bytes, Graph]:
    if m == 0:
        return _trees(n)
    cached = _LEVEL_CACHE.get((n, m))
    if cached is not None:
        return cached
    out: dict[bytes, Graph] = {}
    for g in _level(n, m - 1).values():
        for u in range(n):
            for v in bits(g.full_mask & ~g.adj[u] & ~((1 << (u + 1)) - 1)):
                h = add_edge(g, u, v)
                key = canonical_key(h)
                if key not in out:
                    out[key] = canonical_graph(h)
    _LEVEL_CACHE[(n, m)] = out
    return out


def clear_cache() -> None:
    _TREE_CACHE.clear()
    _LEVEL_CACHE.clear()


def enumerate_graphs(spec: GenSpec) -> Iterator[Graph]:
    """Every connected graph matching ``spec`` exactly once, in canonical-key order."""
    spec.check_bounds()
    n = spec.n
    if spec.cyclomatic is None:
        levels = range(n * (n - 1) // 2 - n + 2)
    else:
        levels = [spec.cyclomatic]
    for m in levels:
        level = _level(n, m)
        for key in sorted(level):
            yield level[key]


def enumerate_count(spec: GenSpec) -> int:
    return sum(1 for _ in enumerate_graphs(spec))


def enumerate_by_filter(spec: GenSpec) -> Iterator[Graph]:
    """Second route: filter every labelled edge set through canonical dedup (small ``n`` only)."""
    if spec.n > MAX_FILTER_ORDER:
        raise EnumerationBoundError(f"filter generator limited to n <= {MAX_FILTER_ORDER}, got {spec.n}")
    n = spec.n
    pairs = list(combinations(range(n), 2))
    sizes = range(n - 1, len(pairs) + 1) if spec.edges is None else [spec.edges]
    seen: dict[bytes, Graph] = {}
    for size in sizes:
        for chosen in combinations(pairs, size):
            g = Graph.from_edges(n, chosen)
            if not is_connected(g):
                continue
            key = canonical_key(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    for key in sorted(seen, key=lambda k: (seen[k].m, k)):
        yield seen[key]


def enumerate_all_graphs(n: int) -> Iterator[Graph]:
    """Every graph of order ``n`` (connected or not) by vertex augmentation."""
    if n > MAX_ORDER_DENSE:
        raise EnumerationBoundError(f"all-graphs generator limited to n <= {MAX_ORDER_DENSE}, got {n}")
    current = {canonical_key(Graph.empty(0)): Graph.empty(0)}
    for k in range(1, n + 1):
        nxt: dict[bytes, Graph] = {}
        for g in current.values():
            for nbrs in range(1 << (k - 1)):
                edges = g.edges() + [(v, k - 1) for v in range(k - 1) if nbrs >> v & 1]
                h = Graph.from_edges(k, edges)
                key = canonical_key(h)
                if key not in nxt:
                    nxt[key] = canonical_graph(h)
        current = nxt
    for key in sorted(current):
        yield current[key]


def shard_of(g: Graph, shards: int) -> int:
    """Stable shard index derived from the canonical key."""
    return zlib.crc32(canonical_key(g)) % shards


def shard(graphs, shards: int, index: int) -> Iterator[Graph]:
    if not 0 <= index < shards:
        raise ValueError(f"shard index {index} outside 0..{shards - 1}")
    return (g for g in graphs if shard_of(g, shards) == index)


def spool(spec: GenSpec, path: str | Path) -> int:
    """Write the enumeration to a graph6 file; returns the number of graphs."""
    return write_graph6_file(path, enumerate_graphs(spec))

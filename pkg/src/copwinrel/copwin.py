"""Cop-win (dismantlability) and chordality tests.

``is_copwin`` dismantles greedily: it repeatedly removes the lowest-indexed
vertex ``u`` whose closed neighbourhood is contained in that of another
surviving vertex.  Removing any such corner preserves cop-win status, so the
greedy order is as good as any.  ``is_copwin_game`` solves the one-cop game
by backward induction and serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, GraphError, bits

MAX_GAME_ORDER = 12


@dataclass(frozen=True)
class DismantleTrace:
    order: tuple[int, ...]
    success: bool
    # dominators[i] is the vertex that dominated order[i] when it was removed
    dominators: tuple[int, ...] = field(default=())


def find_corner(cn: list[int] | tuple[int, ...], mask: int) -> tuple[int, int] | None:
    """Lowest vertex ``u`` of ``mask`` dominated inside ``mask``, with its dominator."""
    for u in bits(mask):
        nu = cn[u] & mask
        for v in bits(nu & ~(1 << u)):
            if not nu & ~cn[v]:
                return u, v
    return None


def dismantle(cn: list[int] | tuple[int, ...], mask: int) -> DismantleTrace:
    """Greedy dismantling of the subgraph induced by ``mask``; ``cn`` holds closed neighbourhoods."""
    order: list[int] = []
    doms: list[int] = []
    if mask == 0:
        return DismantleTrace((), False, ())
    while mask & (mask - 1):
        hit = find_corner(cn, mask)
        if hit is None:
            return DismantleTrace(tuple(order), False, tuple(doms))
        u, v = hit
        order.append(u)
        doms.append(v)
        mask &= ~(1 << u)
    return DismantleTrace(tuple(order), True, tuple(doms))


def mask_is_copwin(cn: list[int] | tuple[int, ...], mask: int) -> bool:
    if mask == 0:
        return False
    while mask & (mask - 1):
        hit = find_corner(cn, mask)
        if hit is None:
            return False
        mask &= ~(1 << hit[0])
    return True


def closed_neighborhoods(g: Graph) -> list[int]:
    return [row | (1 << v) for v, row in enumerate(g.adj)]


def is_copwin(g: Graph) -> tuple[bool, DismantleTrace]:
    """Decide cop-win status by dismantling; disconnected and empty graphs are not cop-win."""
    trace = dismantle(closed_neighborhoods(g), g.full_mask)
    return trace.success, trace


def is_copwin_game(g: Graph) -> bool:
    """Solve the one-cop pursuit game directly over (cop, robber, mover) positions."""
    n = g.n
    if n > MAX_GAME_ORDER:
        raise GraphError(f"game oracle limited to n <= {MAX_GAME_ORDER}, got {n}")
    if n == 0:
        return False
    moves = [[v] + list(bits(g.adj[v])) for v in range(n)]
    # cop_win[c][r]: cop to move and wins; rob_lose[c][r]: robber to move and loses
    cop_win = [[c == r for r in range(n)] for c in range(n)]
    rob_lose = [[c == r for r in range(n)] for c in range(n)]
    changed = True
    while changed:
        changed = False
        for c in range(n):
            for r in range(n):
                if not rob_lose[c][r] and all(cop_win[c][r2] for r2 in moves[r]):
                    rob_lose[c][r] = True
                    changed = True
                if not cop_win[c][r] and any(c2 == r or rob_lose[c2][r] for c2 in moves[c]):
                    cop_win[c][r] = True
                    changed = True
    # cop is placed first, then the robber, then the cop moves
    return any(all(cop_win[c][r] for r in range(n)) for c in range(n))


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search followed by a perfect-elimination check."""
    n = g.n
    weight = [0] * n
    visited = 0
    earlier = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if not visited >> u & 1), key=lambda u: (weight[u], -u))
        earlier[v] = g.adj[v] & visited
        visited |= 1 << v
        for u in bits(g.adj[v] & ~visited):
            weight[u] += 1
    for v in range(n):
        e = earlier[v]
        for w in bits(e):
            if e & ~(1 << w) & ~g.adj[w]:
                return False
    return True


def find_long_induced_cycle(g: Graph) -> list[int] | None:
    """An induced cycle with at least four vertices, or None.

    For every vertex ``b`` and non-adjacent neighbours ``a``, ``c``: a shortest
    ``a``-``c`` path avoiding the rest of ``N[b]`` closes a chordless cycle
    through ``b``.
    """
    for b in range(g.n):
        nb = list(bits(g.adj[b]))
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                if g.adj[a] >> c & 1:
                    continue
                allowed = g.full_mask & ~(g.adj[b] | (1 << b)) | (1 << a) | (1 << c)
                prev = {a: -1}
                frontier = [a]
                while frontier and c not in prev:
                    nxt = []
                    for x in frontier:
                        for y in bits(g.adj[x] & allowed):
                            if y not in prev:
                                prev[y] = x
                                nxt.append(y)
                    frontier = nxt
                if c in prev:
                    path = [c]
                    while path[-1] != a:
                        path.append(prev[path[-1]])
                    return [b] + path[::-1]
    return None


def has_long_induced_cycle(g: Graph) -> bool:
    return find_long_induced_cycle(g) is not None


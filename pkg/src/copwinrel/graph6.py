"""graph6 encoding (McKay's format) for simple undirected graphs.

The upper triangle is read column by column, ``x(0,1) x(0,2) x(1,2) x(0,3) ...``,
packed six bits per byte, big-endian within each group, offset by 63.
Orders up to 62 use the one-byte header; the four-byte ``~`` header is
accepted for 63 and 64.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import MAX_ORDER, Graph, GraphError

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def _encode_n(n: int) -> str:
    if n < 0 or n > MAX_ORDER:
        raise Graph6Error(f"order {n} outside 0..{MAX_ORDER}")
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def emit_graph6(g: Graph) -> str:
    out = [_encode_n(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= d <= 63 for d in data):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("malformed extended order header")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds capacity {MAX_ORDER}")
    total = n * (n - 1) // 2
    if len(body) != (total + 5) // 6:
        raise Graph6Error(
            f"bit field has {len(body)} bytes, expected {(total + 5) // 6} for n={n}"
        )
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - total
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield parse_graph6(line)


def read_graph6_file(path: str | Path) -> list[Graph]:
    with open(path) as fh:
        return list(read_graph6_lines(fh))


def write_graph6_file(path: str | Path, graphs: Iterable[Graph]) -> int:
    count = 0
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(emit_graph6(g) + "\n")
            count += 1
    return count

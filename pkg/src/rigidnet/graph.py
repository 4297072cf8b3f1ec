"""Simple undirected graphs: construction, edge-set algebra, connectivity, I/O.

A graph is an immutable value: a vertex count ``n`` (vertices are the dense
integer range 0..n-1) plus a frozenset of canonical ``(min, max)`` edge
tuples.  Loops and parallel edges are rejected at construction; isolated
vertices are legal and count toward ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import IO, Iterable, Union

from .errors import (
    IndexOutOfRangeError,
    LoopEdgeError,
    ParseError,
    UnknownEdgeError,
)

Edge = tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    """Return the (min, max) form of an edge, rejecting loops."""
    if u == v:
        raise LoopEdgeError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        canon = []
        for u, v in self.edges:
            e = canonical_edge(u, v)
            if e[0] < 0 or e[1] >= self.n:
                raise IndexOutOfRangeError(
                    f"edge {e} has an endpoint outside [0, {self.n})"
                )
            canon.append(e)
        object.__setattr__(self, "edges", frozenset(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


def graph_from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from endpoint pairs.

    Pairs are canonicalized and deduplicated; loops raise LoopEdgeError and
    endpoints outside [0, n) raise IndexOutOfRangeError.
    """
    return Graph(n, frozenset(canonical_edge(a, b) for a, b in pairs))


def remove_edges(g: Graph, edges: Iterable[Edge]) -> Graph:
    """Return g with the given edges removed (vertex count unchanged)."""
    drop = frozenset(canonical_edge(u, v) for u, v in edges)
    missing = drop - g.edges
    if missing:
        raise UnknownEdgeError(f"edges not in graph: {sorted(missing)}")
    return Graph(g.n, g.edges - drop)


def _augment_once(cap: list[dict[int, int]], source: int, sink: int) -> bool:
    # One BFS augmenting path on the unit-capacity residual network.
    parent = {source: -1}
    queue = [source]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for w, c in cap[u].items():
            if c > 0 and w not in parent:
                parent[w] = u
                if w == sink:
                    x = w
                    while x != source:
                        p = parent[x]
                        cap[p][x] -= 1
                        cap[x][p] += 1
                        x = p
                    return True
                queue.append(w)
    return False


def _pair_connectivity_at_least(
    adj: list[list[int]], s: int, t: int, k: int
) -> bool:
    """Whether >= k internally vertex-disjoint s-t paths exist (s, t non-adjacent).

    Standard vertex-split construction: vertex v becomes arc in(v)->out(v) of
    capacity 1 (uncapacitated for s and t), each edge contributes out->in arcs
    both ways, and Menger turns the question into a max-flow of value k.
    """
    n = len(adj)
    # node 2v = in-copy, 2v+1 = out-copy
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]

    def add(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in range(n):
        if v != s and v != t:
            add(2 * v, 2 * v + 1, 1)
        for w in adj[v]:
            if v < w:
                add(2 * v + 1, 2 * w, 1)
                add(2 * w + 1, 2 * v, 1)

    source, sink = 2 * s + 1, 2 * t
    for _ in range(k):
        if not _augment_once(cap, source, sink):
            return False
    return True


def is_k_connected(g: Graph, k: int) -> bool:
    """Menger-style k-connectivity: more than k vertices and no cut of size < k.

    The complete graph on k+1 vertices counts as k-connected.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    n = g.n
    if n <= k:
        return False
    if g.m == n * (n - 1) // 2:
        return True
    adj = g.adjacency()
    # A vertex of degree < k is separated from the rest by its neighborhood
    # (proper cut because the graph is not complete and n > k).
    if min(len(a) for a in adj) < k:
        return False
    for s, t in combinations(range(n), 2):
        if (s, t) in g.edges:
            continue
        if not _pair_connectivity_at_least(adj, s, t, k):
            return False
    return True


# --- edge-list text format -------------------------------------------------
#
# First non-comment line "n m", then m lines "u v" with 0-based endpoints.
# Lines starting with '#' and blank lines are ignored.

Pathish = Union[str, Path, IO[str]]


def _read_text(source: Pathish) -> str:
    if hasattr(source, "read"):
        return source.read()  # type: ignore[union-attr]
    return Path(source).read_text()  # type: ignore[arg-type]


def _write_text(target: Pathish, text: str) -> None:
    if hasattr(target, "write"):
        target.write(text)  # type: ignore[union-attr]
    else:
        Path(target).write_text(text)  # type: ignore[arg-type]


def load_edge_list(source: Pathish) -> Graph:
    """Parse the edge-list text format; ParseError names the offending line."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(_read_text(source).splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line))
    if not rows:
        raise ParseError("missing 'n m' header", 1)

    header_lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 2:
        raise ParseError(f"expected 'n m' header, got {header!r}", header_lineno)
    try:
        n, m = int(fields[0]), int(fields[1])
    except ValueError:
        raise ParseError(
            f"expected 'n m' header, got {header!r}", header_lineno
        ) from None
    if n < 0 or m < 0:
        raise ParseError(f"negative count in header {header!r}", header_lineno)

    if len(rows) - 1 < m:
        raise ParseError(
            f"header declares {m} edges but only {len(rows) - 1} present",
            header_lineno,
        )
    if len(rows) - 1 > m:
        extra_lineno, extra = rows[m + 1]
        raise ParseError(f"unexpected extra line {extra!r}", extra_lineno)

    edges = []
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected 'u v', got {line!r}", lineno) from None
        if a == b:
            raise ParseError(f"loop edge {a} {b}", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"endpoint outside [0, {n}) in {line!r}", lineno)
        edges.append((a, b))
    return graph_from_edge_list(n, edges)


def dump_edge_list(g: Graph, target: Pathish) -> None:
    """Write the graph in the edge-list text format (sorted canonical edges)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    _write_text(target, "\n".join(lines) + "\n")

"""Independence oracle for the generic two-dimensional rigidity matroid.

Independence is the (2,3)-sparsity count: an edge set is independent when
every nonempty subset E' with vertex support V' satisfies |E'| <= 2|V'| - 3.
The oracle is the classical pebble game.  Every vertex starts with two
pebbles; an accepted edge is stored as a directed arc that consumes one
pebble from its tail, so pebbles(v) + outdegree(v) == 2 is invariant.  An
edge (u, v) is independent relative to the arcs built so far exactly when
four pebbles can be gathered onto u and v, where a pebble is pulled closer
by reversing a directed path that ends at a free pebble.  Because edge
acceptance is an exact independence test, greedy insertion in any order
builds a maximum independent subset of the processed edges (matroid
exchange property), which is what makes the rank well defined.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DuplicateInsertError, UnknownEdgeError
from .graph import Edge, Graph, canonical_edge


class _PebbleGame:
    """Mutable pebble/arc state over vertices 0..n-1."""

    __slots__ = ("pebbles", "out", "_seen", "_parent", "_stamp")

    def __init__(self, n: int):
        self.pebbles = [2] * n
        self.out: list[list[int]] = [[] for _ in range(n)]
        self._seen = [0] * n
        self._parent = [0] * n
        self._stamp = 0

    def _gather(self, root: int, a: int, b: int) -> bool:
        # DFS along arcs for a pebble held by a vertex other than a, b; on
        # success reverse the discovered path so the pebble lands on root.
        pebbles = self.pebbles
        out = self.out
        seen = self._seen
        parent = self._parent
        self._stamp += 1
        stamp = self._stamp
        seen[root] = stamp
        stack = [root]
        while stack:
            u = stack.pop()
            for w in out[u]:
                if seen[w] == stamp:
                    continue
                seen[w] = stamp
                parent[w] = u
                if w != a and w != b and pebbles[w] > 0:
                    pebbles[w] -= 1
                    x = w
                    while x != root:
                        p = parent[x]
                        out[p].remove(x)
                        out[x].append(p)
                        x = p
                    pebbles[root] += 1
                    return True
                stack.append(w)
        return False

    def try_insert(self, u: int, v: int) -> bool:
        """Accept edge (u, v) if independent; reject without changing the set."""
        pebbles = self.pebbles
        while pebbles[u] + pebbles[v] < 4:
            if pebbles[u] < 2 and self._gather(u, u, v):
                continue
            if pebbles[v] < 2 and self._gather(v, u, v):
                continue
            return False
        pebbles[u] -= 1
        self.out[u].append(v)
        return True


def _rank_of(n: int, edges: Iterable[Edge]) -> int:
    game = _PebbleGame(n)
    rank = 0
    for u, v in edges:
        if game.try_insert(u, v):
            rank += 1
    return rank


def _rank_reaches(n: int, edges: Sequence[Edge], target: int) -> bool:
    """Whether the edge set has rank >= target (early exit both ways)."""
    if target <= 0:
        return True
    game = _PebbleGame(n)
    accepted = 0
    remaining = len(edges)
    for u, v in edges:
        remaining -= 1
        if game.try_insert(u, v):
            accepted += 1
            if accepted == target:
                return True
        elif accepted + remaining < target:
            return False
    return False


class RigidityOracle:
    """Incremental independence oracle over one host graph's edges.

    Single-owner mutable value: feed each host edge at most once through
    insert(); accepted edges form a maximum independent subset of the edges
    processed so far.
    """

    def __init__(self, host: Graph):
        self.host = host
        self._game = _PebbleGame(host.n)
        self._processed: set[Edge] = set()
        self._accepted: list[Edge] = []

    @property
    def accepted(self) -> tuple[Edge, ...]:
        """Accepted edges in insertion order."""
        return tuple(self._accepted)

    @property
    def processed(self) -> frozenset[Edge]:
        return frozenset(self._processed)

    @property
    def rank(self) -> int:
        return len(self._accepted)

    def insert(self, edge: Edge) -> bool:
        """Process one host edge; True when it was accepted as independent."""
        e = canonical_edge(*edge)
        if e not in self.host.edges:
            raise UnknownEdgeError(f"edge {e} is not in the host graph")
        if e in self._processed:
            raise DuplicateInsertError(f"edge {e} was already processed")
        self._processed.add(e)
        if self._game.try_insert(*e):
            self._accepted.append(e)
            return True
        return False


def matroid_rank(g: Graph) -> int:
    """Size of a maximum (2,3)-sparse subset of g's edges."""
    return _rank_of(g.n, g.sorted_edges())


def independent_basis(g: Graph) -> frozenset[Edge]:
    """Greedy basis in canonical edge order: one witness of matroid_rank."""
    game = _PebbleGame(g.n)
    return frozenset(e for e in g.sorted_edges() if game.try_insert(*e))


def is_rigid(g: Graph) -> bool:
    """Whether the edges pin all 2n - 3 nontrivial degrees of freedom.

    Graphs with at most one vertex are rigid by convention.
    """
    if g.n <= 1:
        return True
    return matroid_rank(g) == 2 * g.n - 3


def is_minimally_rigid(g: Graph) -> bool:
    """Rigid with every edge critical: |E| = 2n - 3 and all edges independent.

    For n <= 1 this is vacuously true (rigid with no removable edge).
    """
    if g.n <= 1:
        return True
    need = 2 * g.n - 3
    return g.m == need and matroid_rank(g) == need

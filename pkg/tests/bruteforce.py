"""Independent brute-force oracles and graph generators for the test suite.

Everything here is deliberately dumb: exhaustive enumeration, bitmask
counting and breadth-first search, with no shared code paths into the
package's oracles.
"""

from __future__ import annotations

from itertools import combinations, permutations
from random import Random

from rigidnet import Graph, graph_from_edge_list

# number of non-isomorphic simple graphs on 0..7 unlabeled vertices
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def sparsity_check_edge_subsets(n: int, edges: list[tuple[int, int]]) -> bool:
    """Literal independence test: every nonempty subset E' of the edges,
    with V' the vertices incident to E', satisfies |E'| <= 2|V'| - 3.
    Exponential in |edges|; used only to validate the faster checker."""
    for size in range(1, len(edges) + 1):
        for subset in combinations(edges, size):
            support = {v for e in subset for v in e}
            if len(subset) > 2 * len(support) - 3:
                return False
    return True


def make_independence_checker(n: int, edges: list[tuple[int, int]]):
    """Bitmask independence test over edge-index masks.

    Checking induced edge counts over all vertex subsets is equivalent to
    the subset condition: any violating E' stays violating when extended to
    all edges induced on its support, and every induced set is a subset.
    """
    inside = []
    for vmask in range(1 << n):
        bits = bin(vmask).count("1")
        if bits < 2:
            continue
        emask = 0
        for i, (u, v) in enumerate(edges):
            if (vmask >> u) & 1 and (vmask >> v) & 1:
                emask |= 1 << i
        inside.append((emask, 2 * bits - 3))

    def independent(edge_mask: int) -> bool:
        for emask, bound in inside:
            if bin(edge_mask & emask).count("1") > bound:
                return False
        return True

    return independent


def brute_rank(g: Graph) -> int:
    """Maximum size of an independent edge subset, by exhaustive enumeration."""
    edges = g.sorted_edges()
    m = len(edges)
    if m == 0:
        return 0
    independent = make_independence_checker(g.n, edges)
    upper = min(m, max(2 * g.n - 3, 0))
    for size in range(upper, 0, -1):
        for combo in combinations(range(m), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if independent(mask):
                return size
    return 0


def brute_k_connected(g: Graph, k: int) -> bool:
    """Delete every vertex subset of size < k and test connectivity by BFS."""
    n = g.n
    if n <= k:
        return False
    adj = g.adjacency()
    for size in range(k):
        for cut in combinations(range(n), size):
            removed = set(cut)
            remaining = [v for v in range(n) if v not in removed]
            start = remaining[0]
            seen = {start}
            queue = [start]
            while queue:
                u = queue.pop()
                for w in adj[u]:
                    if w not in removed and w not in seen:
                        seen.add(w)
                        queue.append(w)
            if len(seen) != len(remaining):
                return False
    return True


def nonisomorphic_graphs(n: int) -> list[Graph]:
    """All non-isomorphic graphs on exactly n vertices (isolated allowed).

    Canonical representatives are found by orbit enumeration under all
    vertex permutations; resulting counts are asserted against the known
    sequence so the enumeration itself is verified.
    """
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    pair_index = {p: i for i, p in enumerate(pairs)}
    perm_maps = []
    for perm in permutations(range(n)):
        perm_maps.append(
            [pair_index[tuple(sorted((perm[u], perm[v])))] for u, v in pairs]
        )
    seen = bytearray(1 << m)
    reps = []
    for mask in range(1 << m):
        if seen[mask]:
            continue
        reps.append(mask)
        for pmap in perm_maps:
            image = 0
            rest = mask
            while rest:
                low = rest & -rest
                image |= 1 << pmap[low.bit_length() - 1]
                rest ^= low
            seen[image] = 1
    assert len(reps) == GRAPH_COUNTS[n], (n, len(reps))
    return [
        graph_from_edge_list(n, [pairs[i] for i in range(m) if (mask >> i) & 1])
        for mask in reps
    ]


def random_graph(rng: Random, n: int, m: int) -> Graph:
    """Uniform random graph with exactly m edges (m capped at C(n, 2))."""
    pairs = list(combinations(range(n), 2))
    m = min(m, len(pairs))
    return graph_from_edge_list(n, rng.sample(pairs, m))


def random_rigid_graph(rng: Random, n: int, extra: int = 0) -> Graph:
    """Random generically rigid graph: a chain of vertex additions, each new
    vertex tied to two distinct earlier ones (giving |E| = 2n - 3 and full
    rank), plus `extra` additional random edges."""
    assert n >= 2
    edges = {(0, 1)}
    for v in range(2, n):
        a, b = rng.sample(range(v), 2)
        edges.add((a, v))
        edges.add((b, v))
    pool = [
        (u, v)
        for u, v in combinations(range(n), 2)
        if (u, v) not in edges
    ]
    edges.update(rng.sample(pool, min(extra, len(pool))))
    return graph_from_edge_list(n, edges)


# --- named small graphs ------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return graph_from_edge_list(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return graph_from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def shared_vertex_triangles() -> Graph:
    """Two triangles meeting in one cut vertex (n=5, 6 edges)."""
    return graph_from_edge_list(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def bridged_triangles() -> Graph:
    """Two disjoint triangles joined by a single bridge edge (n=6, 7 edges)."""
    return graph_from_edge_list(
        6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)]
    )


def wheel_graph(n: int) -> Graph:
    """Hub 0 plus an (n-1)-cycle; W_5 is wheel_graph(6)."""
    rim = list(range(1, n))
    edges = [(0, v) for v in rim]
    edges += [(rim[i], rim[(i + 1) % len(rim)]) for i in range(len(rim))]
    return graph_from_edge_list(n, edges)

"""Rigidity and redundancy indices plus the aggregate graph report.

All index values are exact rationals: the rigidity index is
rank / (2n - 3), the redundancy index is the fraction of edges whose
individual removal preserves the rank, and the order-k variant is the
fraction of k-edge subsets whose joint removal preserves the rank.
Redundancy is always decided by integer rank comparison; removing edges
leaves the denominator 2n - 3 unchanged, so this is the same predicate as
comparing the rational index values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .errors import KOutOfRangeError, UnknownEdgeError
from .graph import Edge, Graph, canonical_edge, is_k_connected
from .matroid import _rank_reaches, matroid_rank

RatioValue = Fraction


def rigidity_index(g: Graph) -> Fraction:
    """rank / (2n - 3); graphs with at most one vertex score 1 by convention."""
    if g.n <= 1:
        return Fraction(1)
    return Fraction(matroid_rank(g), 2 * g.n - 3)


def _redundant_edges(n: int, edges: list[Edge], rank: int) -> list[Edge]:
    # Removal never raises the rank, so an edge is redundant exactly when
    # the remaining edges still reach the full rank.
    found = []
    for i in range(len(edges)):
        rest = edges[:i] + edges[i + 1 :]
        if _rank_reaches(n, rest, rank):
            found.append(edges[i])
    return found


def is_generalized_redundant(g: Graph, edge: Edge) -> bool:
    """Whether removing the edge leaves the rigidity index unchanged."""
    e = canonical_edge(*edge)
    if e not in g.edges:
        raise UnknownEdgeError(f"edge {e} is not in the graph")
    rest = g.sorted_edges()
    rest.remove(e)
    return _rank_reaches(g.n, rest, matroid_rank(g))


def redundant_edge_set(g: Graph) -> frozenset[Edge]:
    """All edges whose individual removal preserves the rank."""
    return frozenset(_redundant_edges(g.n, g.sorted_edges(), matroid_rank(g)))


def redundancy_index(g: Graph) -> Fraction:
    """|redundant edges| / |E|; an edgeless graph scores 0."""
    if g.m == 0:
        return Fraction(0)
    return Fraction(len(redundant_edge_set(g)), g.m)


def _checked_rank_for_k(g: Graph, k: int) -> int:
    rank = matroid_rank(g)
    if k < 1 or k > g.m - rank:
        raise KOutOfRangeError(
            f"k={k} outside valid range 1..{g.m - rank} "
            f"(|E|={g.m}, rank={rank})"
        )
    return rank


def redundant_edge_subsets(g: Graph, k: int) -> Iterator[tuple[Edge, ...]]:
    """Yield the k-subsets of edges whose joint removal preserves the rank."""
    rank = _checked_rank_for_k(g, k)
    edges = g.sorted_edges()

    def generate() -> Iterator[tuple[Edge, ...]]:
        for combo in combinations(range(len(edges)), k):
            picked = set(combo)
            rest = [e for i, e in enumerate(edges) if i not in picked]
            if _rank_reaches(g.n, rest, rank):
                yield tuple(edges[i] for i in combo)

    return generate()


def redundancy_index_k(g: Graph, k: int) -> Fraction:
    """Fraction of k-edge subsets whose joint removal preserves the rank.

    Valid only for 1 <= k <= |E| - rank; outside that range every removal
    must drop the rank, and the request is rejected as KOutOfRangeError.
    """
    count = sum(1 for _ in redundant_edge_subsets(g, k))
    return Fraction(count, comb(g.m, k))


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    rank: int
    k_r: Fraction
    redundant_edges: tuple[Edge, ...]
    k_u: Fraction
    rigid: bool
    minimally_rigid: bool
    redundantly_rigid: bool
    three_connected: bool
    globally_rigid: bool
    k: Optional[int] = None
    k_u_k: Optional[Fraction] = None


def analyze(g: Graph, with_k: Optional[int] = None) -> IndexReport:
    """Compute every index and verdict for one graph.

    When with_k is given, the order-k redundancy index is attached;
    KOutOfRangeError propagates if k is outside its valid range.
    """
    k_u_k = redundancy_index_k(g, with_k) if with_k is not None else None
    rank = matroid_rank(g)
    edges = g.sorted_edges()
    redundant = _redundant_edges(g.n, edges, rank)
    if g.n <= 1:
        k_r = Fraction(1)
        rigid = True
        minimally = True
    else:
        k_r = Fraction(rank, 2 * g.n - 3)
        rigid = rank == 2 * g.n - 3
        minimally = g.m == 2 * g.n - 3 and rank == g.m
    k_u = Fraction(len(redundant), g.m) if g.m else Fraction(0)
    redundantly = rigid and len(redundant) == g.m
    three = is_k_connected(g, 3)
    return IndexReport(
        n=g.n,
        m=g.m,
        rank=rank,
        k_r=k_r,
        redundant_edges=tuple(sorted(redundant)),
        k_u=k_u,
        rigid=rigid,
        minimally_rigid=minimally,
        redundantly_rigid=redundantly,
        three_connected=three,
        globally_rigid=three and redundantly,
        k=with_k,
        k_u_k=k_u_k,
    )


def _ratio(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _decimal(value: Fraction) -> str:
    return f"{float(value):.6f}"


def _edge_tokens(edges: tuple[Edge, ...]) -> str:
    return " ".join(f"{u}-{v}" for u, v in edges)


def format_report(report: IndexReport, machine: bool = False) -> str:
    """Render a report; machine mode is a stable key-value document."""
    if machine:
        lines = [
            f"n {report.n}",
            f"m {report.m}",
            f"rank {report.rank}",
            f"k_r {_ratio(report.k_r)}",
            f"k_r_decimal {_decimal(report.k_r)}",
            f"k_u {_ratio(report.k_u)}",
            f"k_u_decimal {_decimal(report.k_u)}",
            f"redundant_count {len(report.redundant_edges)}",
            f"redundant_edges {_edge_tokens(report.redundant_edges)}".rstrip(),
            f"rigid {str(report.rigid).lower()}",
            f"minimally_rigid {str(report.minimally_rigid).lower()}",
            f"redundantly_rigid {str(report.redundantly_rigid).lower()}",
            f"three_connected {str(report.three_connected).lower()}",
            f"globally_rigid {str(report.globally_rigid).lower()}",
        ]
        if report.k is not None and report.k_u_k is not None:
            lines.append(f"k {report.k}")
            lines.append(f"k_u_k {_ratio(report.k_u_k)}")
            lines.append(f"k_u_k_decimal {_decimal(report.k_u_k)}")
    else:
        yn = {True: "yes", False: "no"}
        redundant = _edge_tokens(report.redundant_edges) or "(none)"
        lines = [
            f"vertices:          {report.n}",
            f"edges:             {report.m}",
            f"rank:              {report.rank}",
            f"rigidity index:    {_ratio(report.k_r)} ({_decimal(report.k_r)})",
            f"redundancy index:  {_ratio(report.k_u)} ({_decimal(report.k_u)})",
            f"redundant edges:   {redundant}",
            f"rigid:             {yn[report.rigid]}",
            f"minimally rigid:   {yn[report.minimally_rigid]}",
            f"redundantly rigid: {yn[report.redundantly_rigid]}",
            f"3-connected:       {yn[report.three_connected]}",
            f"globally rigid:    {yn[report.globally_rigid]}",
        ]
        if report.k is not None and report.k_u_k is not None:
            lines.append(
                f"order-{report.k} redundancy index: "
                f"{_ratio(report.k_u_k)} ({_decimal(report.k_u_k)})"
            )
    return "\n".join(lines) + "\n"

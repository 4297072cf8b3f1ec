"""Exact-arithmetic rigidity matrix rank: the numeric cross-check oracle.

The rank is computed over the rationals with fraction-free (Bareiss)
elimination, so there is no floating tolerance anywhere.  Random integer
placements stand in for generic ones; a random draw can only under-estimate
the generic rank, never exceed it, so taking the best of two independent
draws makes a silently degenerate sample vanishingly unlikely.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import SizeMismatchError
from .graph import Graph
from .rng import SplitMix64

_COORD_BITS = 31  # coordinates drawn from [0, 2^31)


@dataclass(frozen=True)
class Configuration:
    """Planar placement of vertices with exact rational coordinates."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class RigidityMatrix:
    """|E| x 2|V| matrix of coordinate differences, row per edge."""

    entries: tuple[tuple[Fraction, ...], ...]
    num_cols: int

    @property
    def num_rows(self) -> int:
        return len(self.entries)


def rigidity_matrix(g: Graph, p: Configuration) -> RigidityMatrix:
    """Build the constraint matrix: row for edge (u, v) holds p(u) - p(v) in
    u's coordinate columns, p(v) - p(u) in v's, zeros elsewhere."""
    if p.n != g.n:
        raise SizeMismatchError(f"{p.n} points for {g.n} vertices")
    cols = 2 * g.n
    zero = Fraction(0)
    rows = []
    for u, v in g.sorted_edges():
        row = [zero] * cols
        ux, uy = p.points[u]
        vx, vy = p.points[v]
        row[2 * u] = ux - vx
        row[2 * u + 1] = uy - vy
        row[2 * v] = vx - ux
        row[2 * v + 1] = vy - uy
        rows.append(tuple(row))
    return RigidityMatrix(tuple(rows), cols)


def matrix_rank(mat: RigidityMatrix) -> int:
    """Exact rank over the rationals (fraction-free elimination)."""
    rows = []
    for row in mat.entries:
        scale = lcm(*(f.denominator for f in row)) if row else 1
        rows.append([int(f * scale) for f in row])
    n_rows = len(rows)
    if n_rows == 0:
        return 0
    n_cols = mat.num_cols
    rank = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(rank, n_rows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        piv_row = rows[rank]
        p = piv_row[c]
        for i in range(rank + 1, n_rows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, n_cols):
                row[j] = (row[j] * p - f * piv_row[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == n_rows:
            break
    return rank


def generic_rank(g: Graph, seed: int) -> int:
    """Rank at a random integer placement, best of two independent draws."""
    rng = SplitMix64(seed)
    best = 0
    for _ in range(2):
        pts = tuple(
            (rng.below_2_31(), rng.below_2_31()) for _ in range(g.n)
        )
        best = max(best, matrix_rank(rigidity_matrix(g, Configuration(pts))))
    return best


def is_infinitesimally_rigid(g: Graph, p: Configuration) -> bool:
    """Whether rank R(G, p) = 2n - 3 at this particular placement."""
    if g.n <= 1:
        return True
    return matrix_rank(rigidity_matrix(g, p)) == 2 * g.n - 3

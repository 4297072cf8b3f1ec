"""Sensing-radius sweeps: per-ratio indices, trial averages, thresholds.

A sweep walks a strictly increasing grid of radius/side ratios, builds the
proximity graph at each ratio, and records the rigidity and redundancy
indices as exact rationals.  Averaged sweeps derive per-trial seeds as
base_seed + trial and take exact arithmetic means, so "the mean reaches 1"
is decidable without tolerances: it holds exactly when every trial reached 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import BadGridError
from .geometric import Deployment, sample_deployment
from .graph import Pathish, _write_text
from .matroid import _PebbleGame, _rank_reaches

RIGIDITY = "rigidity"
REDUNDANCY = "redundancy"


@dataclass(frozen=True)
class SweepCurve:
    ratios: tuple[Fraction, ...]
    k_r_values: tuple[Fraction, ...]
    k_u_values: tuple[Fraction, ...]
    k_r_stds: tuple[float, ...]
    k_u_stds: tuple[float, ...]
    trials: int
    n: int
    side: float
    base_seed: int


def ratio_grid(step: Fraction = Fraction(1, 100)) -> tuple[Fraction, ...]:
    """Grid 0, step, 2*step, ... capped at 1: floor(1/step) + 1 points."""
    step = Fraction(step)
    if step <= 0 or step > 1:
        raise BadGridError(f"step must lie in (0, 1], got {step}")
    count = int(Fraction(1) / step)
    return tuple(step * i for i in range(count + 1))


def _validated_grid(ratios: Iterable) -> tuple[Fraction, ...]:
    grid = tuple(Fraction(r) for r in ratios)
    if not grid:
        raise BadGridError("ratio grid is empty")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise BadGridError("ratio grid is not strictly increasing")
    if grid[0] < 0 or grid[-1] > 1:
        raise BadGridError("ratio grid leaves [0, 1]")
    return grid


def _curve_values(
    dep: Deployment, grid: tuple[Fraction, ...]
) -> tuple[list[Fraction], list[Fraction]]:
    """Exact K_r and K_u at every grid ratio for one deployment.

    The radius grows along the grid, so the edge set only gains members;
    one incremental oracle therefore yields the rank at every ratio, and
    each prefix rank equals the matroid rank of that ratio's graph.  Once a
    graph is rigid with every edge redundant, every larger edge set on the
    same vertices stays that way, so the tail is filled with exact ones.
    """
    n = dep.n
    pts = dep.points
    pairs = []
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            dx = xi - pts[j][0]
            dy = yi - pts[j][1]
            pairs.append((dx * dx + dy * dy, i, j))
    pairs.sort()

    one = Fraction(1)
    zero = Fraction(0)
    denom = 2 * n - 3 if n >= 2 else 0
    game = _PebbleGame(n)
    edges: list[tuple[int, int]] = []
    accepted = 0
    consumed = 0
    cached_m = -1
    cached_k_u = zero
    saturated = False
    k_r_list: list[Fraction] = []
    k_u_list: list[Fraction] = []

    for ratio in grid:
        radius = float(ratio) * dep.side
        r2 = radius * radius
        while consumed < len(pairs) and pairs[consumed][0] <= r2:
            _, i, j = pairs[consumed]
            if game.try_insert(i, j):
                accepted += 1
            edges.append((i, j))
            consumed += 1
        if saturated:
            k_r_list.append(one)
            k_u_list.append(one)
            continue
        k_r = one if n <= 1 else Fraction(accepted, denom)
        m = len(edges)
        if m == 0:
            k_u = zero
        elif m == cached_m:
            k_u = cached_k_u
        else:
            redundant = 0
            for t in range(m):
                rest = edges[:t] + edges[t + 1 :]
                if _rank_reaches(n, rest, accepted):
                    redundant += 1
            k_u = Fraction(redundant, m)
            cached_m, cached_k_u = m, k_u
        k_r_list.append(k_r)
        k_u_list.append(k_u)
        if n >= 2 and k_r == 1 and k_u == 1:
            saturated = True
    return k_r_list, k_u_list


def sweep_single(dep: Deployment, ratios: Iterable) -> SweepCurve:
    """Indices of one deployment's proximity graph across the ratio grid."""
    grid = _validated_grid(ratios)
    k_r, k_u = _curve_values(dep, grid)
    zeros = (0.0,) * len(grid)
    return SweepCurve(
        ratios=grid,
        k_r_values=tuple(k_r),
        k_u_values=tuple(k_u),
        k_r_stds=zeros,
        k_u_stds=zeros,
        trials=1,
        n=dep.n,
        side=dep.side,
        base_seed=dep.seed,
    )


def _mean_and_std(
    columns: list[list[Fraction]], trials: int
) -> tuple[list[Fraction], list[float]]:
    means = []
    stds = []
    for col in columns:
        mean = sum(col, Fraction(0)) / trials
        var = sum((x - mean) ** 2 for x in col) / trials
        means.append(mean)
        stds.append(math.sqrt(float(var)))
    return means, stds


def sweep_average(
    n: int, d: float, trials: int, ratios: Iterable, base_seed: int
) -> SweepCurve:
    """Pointwise arithmetic mean of `trials` single sweeps on derived seeds.

    Trial t uses seed base_seed + t; the standard deviation per grid point
    is the population deviation across trials.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    grid = _validated_grid(ratios)
    k_r_cols: list[list[Fraction]] = [[] for _ in grid]
    k_u_cols: list[list[Fraction]] = [[] for _ in grid]
    for t in range(trials):
        dep = sample_deployment(n, d, base_seed + t)
        k_r, k_u = _curve_values(dep, grid)
        for i in range(len(grid)):
            k_r_cols[i].append(k_r[i])
            k_u_cols[i].append(k_u[i])
    k_r_means, k_r_stds = _mean_and_std(k_r_cols, trials)
    k_u_means, k_u_stds = _mean_and_std(k_u_cols, trials)
    return SweepCurve(
        ratios=grid,
        k_r_values=tuple(k_r_means),
        k_u_values=tuple(k_u_means),
        k_r_stds=tuple(k_r_stds),
        k_u_stds=tuple(k_u_stds),
        trials=trials,
        n=n,
        side=float(d),
        base_seed=base_seed,
    )


def threshold_ratio(curve: SweepCurve, which: str) -> Optional[Fraction]:
    """Smallest grid ratio at which the chosen index equals exactly 1."""
    if which == RIGIDITY:
        values: Sequence[Fraction] = curve.k_r_values
    elif which == REDUNDANCY:
        values = curve.k_u_values
    else:
        raise ValueError(f"which must be {RIGIDITY!r} or {REDUNDANCY!r}")
    for ratio, value in zip(curve.ratios, values):
        if value == 1:
            return ratio
    return None


def relative_increase(curve: SweepCurve) -> Optional[Fraction]:
    """(redundancy threshold - rigidity threshold) / rigidity threshold.

    None when either threshold is absent, or when the rigidity threshold is
    0 (the quotient is undefined there).
    """
    t_r = threshold_ratio(curve, RIGIDITY)
    t_u = threshold_ratio(curve, REDUNDANCY)
    if t_r is None or t_u is None or t_r == 0:
        return None
    return (t_u - t_r) / t_r


def write_curve_csv(curve: SweepCurve, target: Pathish, exact: bool = False) -> None:
    """One row per grid point with 6-decimal values; `exact` appends the
    means as p/q columns."""
    header = "ratio,k_r_mean,k_r_std,k_u_mean,k_u_std,trials"
    if exact:
        header += ",k_r_mean_exact,k_u_mean_exact"
    lines = [header]
    for i, ratio in enumerate(curve.ratios):
        row = (
            f"{float(ratio):.6f},{float(curve.k_r_values[i]):.6f},"
            f"{curve.k_r_stds[i]:.6f},{float(curve.k_u_values[i]):.6f},"
            f"{curve.k_u_stds[i]:.6f},{curve.trials}"
        )
        if exact:
            kr = curve.k_r_values[i]
            ku = curve.k_u_values[i]
            row += (
                f",{kr.numerator}/{kr.denominator}"
                f",{ku.numerator}/{ku.denominator}"
            )
        lines.append(row)
    _write_text(target, "\n".join(lines) + "\n")

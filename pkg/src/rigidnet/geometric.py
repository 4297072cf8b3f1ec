"""Random planar deployments in a square and their induced proximity graphs."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSideError, ParseError
from .graph import Graph, Pathish, _read_text, _write_text
from .rng import SplitMix64


@dataclass(frozen=True)
class Deployment:
    """n points in the square [0, side]^2, regenerable from (n, side, seed)."""

    side: float
    points: tuple[tuple[float, float], ...]
    seed: int

    @property
    def n(self) -> int:
        return len(self.points)


def sample_deployment(n: int, d: float, seed: int) -> Deployment:
    """Place n points i.i.d. uniform on [0, d]^2, bit-reproducible from seed.

    Each point consumes two splitmix64 draws, x before y, in vertex order;
    a coordinate is d times a 53-bit uniform in [0, 1).
    """
    if d <= 0:
        raise InvalidSideError(f"side length must be positive, got {d}")
    if n < 0:
        raise ValueError(f"point count must be nonnegative, got {n}")
    d = float(d)
    rng = SplitMix64(seed)
    points = tuple((d * rng.unit(), d * rng.unit()) for _ in range(n))
    return Deployment(side=d, points=points, seed=seed)


def geometric_graph(dep: Deployment, radius: float) -> Graph:
    """Connect two points when their Euclidean distance is at most radius.

    The closed threshold is evaluated on squared distances, which is exact
    for float coordinates.
    """
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    r2 = radius * radius
    pts = dep.points
    n = len(pts)
    edges = []
    for i in range(n):
        xi, yi = pts[i]
        for j in range(i + 1, n):
            dx = xi - pts[j][0]
            dy = yi - pts[j][1]
            if dx * dx + dy * dy <= r2:
                edges.append((i, j))
    return Graph(n, frozenset(edges))


# --- deployment file format --------------------------------------------------
#
# Header "n side seed", then n lines "x y" with full-precision (repr) floats.


def dump_deployment(dep: Deployment, target: Pathish) -> None:
    lines = [f"{dep.n} {dep.side!r} {dep.seed}"]
    lines.extend(f"{x!r} {y!r}" for x, y in dep.points)
    _write_text(target, "\n".join(lines) + "\n")


def load_deployment(source: Pathish) -> Deployment:
    """Parse a deployment file; ParseError names the offending line."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(_read_text(source).splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            rows.append((lineno, line))
    if not rows:
        raise ParseError("missing 'n side seed' header", 1)
    header_lineno, header = rows[0]
    fields = header.split()
    if len(fields) != 3:
        raise ParseError(
            f"expected 'n side seed' header, got {header!r}", header_lineno
        )
    try:
        n = int(fields[0])
        side = float(fields[1])
        seed = int(fields[2])
    except ValueError:
        raise ParseError(
            f"expected 'n side seed' header, got {header!r}", header_lineno
        ) from None
    if n < 0:
        raise ParseError(f"negative point count in {header!r}", header_lineno)
    if side <= 0:
        raise ParseError(f"nonpositive side in {header!r}", header_lineno)
    if len(rows) - 1 != n:
        raise ParseError(
            f"header declares {n} points but {len(rows) - 1} present",
            header_lineno,
        )
    points = []
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'x y', got {line!r}", lineno)
        try:
            points.append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise ParseError(f"expected 'x y', got {line!r}", lineno) from None
    return Deployment(side=side, points=tuple(points), seed=seed)

"""Grid graph model: coordinates, distances, regions and orientation."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

Vertex = tuple[int, int]


class GridError(ValueError):
    """Invalid grid size or out-of-bounds vertex."""


class UnsupportedSize(GridError):
    """Raised for grids outside a,b >= 3 (ladders and smaller)."""


class ParityCase(Enum):
    EVEN_EVEN = "EvenEven"
    EVEN_ODD = "EvenOdd"
    ODD_ODD = "OddOdd"


class Region(Enum):
    QUADRANT_I = "QuadrantI"
    QUADRANT_II = "QuadrantII"
    QUADRANT_III = "QuadrantIII"
    QUADRANT_IV = "QuadrantIV"
    X_MEDIAN = "XMedian"
    Y_MEDIAN = "YMedian"
    MEDIAN_INTERSECTION = "MedianIntersection"


@dataclass(frozen=True)
class GridGraph:
    """Cartesian product of a path on ``a`` vertices (x) and ``b`` vertices (y).

    Vertices are 1-indexed pairs ``(x, y)``. Sizes below 3 are allowed here so
    the oracles can run on degenerate grids; constructions reject them.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise GridError("grid dimensions must be integers")
        if self.a < 1 or self.b < 1:
            raise GridError(f"grid dimensions must be positive, got {self.a}x{self.b}")

    @property
    def n(self) -> int:
        return self.a * self.b

    @property
    def D(self) -> int:
        return self.a + self.b - 2

    def vertices(self) -> Iterator[Vertex]:
        """All vertices, x-major then y."""
        for x in range(1, self.a + 1):
            for y in range(1, self.b + 1):
                yield (x, y)

    def contains(self, v: Vertex) -> bool:
        return 1 <= v[0] <= self.a and 1 <= v[1] <= self.b

    def check(self, v: Vertex) -> Vertex:
        if not self.contains(v):
            raise GridError(f"vertex {v} outside G_{{{self.a},{self.b}}}")
        return v

    def index(self, v: Vertex) -> int:
        """Dense 0-based index of a vertex, x-major."""
        return (v[0] - 1) * self.b + (v[1] - 1)

    def vertex(self, i: int) -> Vertex:
        return (i // self.b + 1, i % self.b + 1)

    def parity_case(self) -> ParityCase:
        ea, eb = self.a % 2 == 0, self.b % 2 == 0
        if ea and eb:
            return ParityCase.EVEN_EVEN
        if ea or eb:
            return ParityCase.EVEN_ODD
        return ParityCase.ODD_ODD

    def transpose(self) -> GridGraph:
        return GridGraph(self.b, self.a)


def require_supported(g: GridGraph) -> None:
    if g.a < 3 or g.b < 3:
        raise UnsupportedSize(
            f"G_{{{g.a},{g.b}}} unsupported: a,b > 2 required (ladder out of scope)"
        )


def distance(g: GridGraph, u: Vertex, v: Vertex) -> int:
    g.check(u)
    g.check(v)
    return abs(u[0] - v[0]) + abs(u[1] - v[1])


def diameter(g: GridGraph) -> int:
    return g.a + g.b - 2


def _gap(lo: int, hi: int, t: int) -> int:
    if t < lo:
        return lo - t
    if t > hi:
        return t - hi
    return 0


def d_rect(g: GridGraph, corner1: Vertex, corner2: Vertex, probe: Vertex) -> int:
    """Distance from ``probe`` to the bounding rectangle of the two corners."""
    for v in (corner1, corner2, probe):
        g.check(v)
    gx = _gap(min(corner1[0], corner2[0]), max(corner1[0], corner2[0]), probe[0])
    gy = _gap(min(corner1[1], corner2[1]), max(corner1[1], corner2[1]), probe[1])
    return gx + gy


def _side(t: int, size: int) -> int:
    """-1 low half, +1 high half, 0 on the median (odd sizes only)."""
    if size % 2 == 0:
        return 1 if t >= size // 2 + 1 else -1
    mid = (size + 1) // 2
    return (t > mid) - (t < mid)


def classify_region(g: GridGraph, v: Vertex) -> Region:
    g.check(v)
    sx, sy = _side(v[0], g.a), _side(v[1], g.b)
    if sx == 0 and sy == 0:
        return Region.MEDIAN_INTERSECTION
    if sy == 0:
        return Region.X_MEDIAN
    if sx == 0:
        return Region.Y_MEDIAN
    if sx > 0:
        return Region.QUADRANT_I if sy > 0 else Region.QUADRANT_IV
    return Region.QUADRANT_II if sy > 0 else Region.QUADRANT_III


def normalize_orientation(a: int, b: int) -> tuple[GridGraph, bool]:
    """Even dimension first in the mixed case, otherwise ``a <= b``."""
    if a < 3 or b < 3:
        raise UnsupportedSize(
            f"G_{{{a},{b}}} unsupported: a,b > 2 required (ladder out of scope)"
        )
    if (a % 2) != (b % 2):
        swap = a % 2 == 1
    else:
        swap = a > b
    return (GridGraph(b, a), True) if swap else (GridGraph(a, b), False)


def transpose_vertex(v: Vertex) -> Vertex:
    return (v[1], v[0])

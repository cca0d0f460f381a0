"""Radio-labeling semantics: validation, span, minimal labelings and bumps.

Conventions for an ordering ``s = (u_1, ..., u_n)``: step ``i`` (1-based) is the
gap ``u_i -> u_{i+1}``, stored at list index ``i - 1`` of ``d``, ``f_gaps`` and
``bumps``, with ``bumps[i-1] = f_gaps[i-1] - (D + 1 - d[i-1])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ._backend import kernels
from .grid import GridError, GridGraph, Vertex, d_rect

Labeling = dict[Vertex, int]
Ordering = list[Vertex]


class LabelingError(ValueError):
    """Malformed labeling or ordering."""


@dataclass(frozen=True)
class Violation:
    u: Vertex
    v: Vertex
    required_gap: int
    actual_gap: int


@dataclass(frozen=True)
class BumpEvent:
    step: int  # i: the bump sits on the gap u_i -> u_{i+1}
    magnitude: int
    offset: int  # binding predecessor of u_{i+1} is u_{i+1-offset}


@dataclass
class StepReport:
    d: list[int]
    f_gaps: list[int]
    bumps: list[int]
    bump_events: list[BumpEvent] = field(default_factory=list)
    d_rect: list[int] = field(default_factory=list)

    @property
    def span(self) -> int:
        return sum(self.f_gaps)

    @property
    def distance_sum(self) -> int:
        return sum(self.d)


def check_ordering(g: GridGraph, s: Sequence[Vertex]) -> None:
    if len(s) != g.n:
        raise LabelingError(f"ordering has {len(s)} vertices, grid has {g.n}")
    seen = set()
    for v in s:
        g.check(tuple(v))
        seen.add(tuple(v))
    if len(seen) != g.n:
        raise LabelingError("ordering repeats a vertex")


def validate(g: GridGraph, f: Mapping[Vertex, int]) -> list[Violation]:
    """Every unordered pair breaking the radio condition, each once."""
    verts = list(g.vertices())
    missing = [v for v in verts if v not in f]
    if missing:
        raise LabelingError(f"labeling misses {len(missing)} vertices, e.g. {missing[0]}")
    extra = [v for v in f if not g.contains(v)]
    if extra:
        raise GridError(f"labeling has out-of-bounds vertex {extra[0]}")
    D = g.D
    # sweep by label: pairs further apart than D in label can never violate
    order = sorted(verts, key=lambda v: f[v])
    out: list[Violation] = []
    for i, u in enumerate(order):
        fu = f[u]
        for j in range(i + 1, len(order)):
            v = order[j]
            gap = f[v] - fu
            if gap >= D:
                break
            need = D + 1 - abs(u[0] - v[0]) - abs(u[1] - v[1])
            if gap < need:
                out.append(Violation(u, v, need, gap))
    return out


def span(f: Mapping[Vertex, int]) -> int:
    if not f:
        raise LabelingError("empty labeling")
    vals = f.values()
    return max(vals) - min(vals)


def ordering_of(f: Mapping[Vertex, int]) -> Ordering:
    if len(set(f.values())) != len(f):
        raise LabelingError("labels are not distinct")
    return sorted(f, key=lambda v: f[v])


def _coords(s: Sequence[Vertex]) -> tuple[list[int], list[int]]:
    return [v[0] for v in s], [v[1] for v in s]


def min_span_labeling(g: GridGraph, s: Sequence[Vertex]) -> Labeling:
    """Greedy tight labels: each vertex as low as all predecessors allow."""
    check_ordering(g, s)
    xs, ys = _coords(s)
    f = kernels.greedy_labels(xs, ys, g.D)
    return {tuple(v): int(lab) for v, lab in zip(s, f)}


def tightness_neighbors(g: GridGraph, f: Mapping[Vertex, int], u: Vertex) -> set[Vertex]:
    g.check(u)
    D = g.D
    fu = f[u]
    return {
        v
        for v, fv in f.items()
        if v != u and abs(fu - fv) == D + 1 - abs(u[0] - v[0]) - abs(u[1] - v[1])
    }


def step_report(g: GridGraph, s: Sequence[Vertex]) -> StepReport:
    check_ordering(g, s)
    xs, ys = _coords(s)
    D = g.D
    f = kernels.greedy_labels(xs, ys, D)
    offs = kernels.tight_offsets(xs, ys, D, f)
    n = len(s)
    d = [abs(xs[i + 1] - xs[i]) + abs(ys[i + 1] - ys[i]) for i in range(n - 1)]
    gaps = [f[i + 1] - f[i] for i in range(n - 1)]
    bumps = [gaps[i] - (D + 1 - d[i]) for i in range(n - 1)]
    events = [
        BumpEvent(step=i + 1, magnitude=bumps[i], offset=int(offs[i + 1]))
        for i in range(n - 1)
        if bumps[i] > 0
    ]
    rects = [0] + [d_rect(g, s[i - 1], s[i + 1], s[i]) for i in range(1, n - 1)]
    return StepReport(d=d, f_gaps=gaps, bumps=bumps, bump_events=events, d_rect=rects)


def bump_condition_holds(
    g: GridGraph, u_km2: Vertex, u_km1: Vertex, u_k: Vertex, b_km1: int
) -> bool:
    """Does ``u_{k-2}`` force a bump at ``u_k``?

    ``b_km1`` is the bump already sitting on the gap ``u_{k-2} -> u_{k-1}``.
    Compared as ``2 * d_rect > D + 1 + b_km1`` to stay in integers.
    """
    if b_km1 < 0:
        raise LabelingError("bump magnitude must be nonnegative")
    return 2 * d_rect(g, u_km2, u_k, u_km1) > g.D + 1 + b_km1


def bump_condition_holds_summed(
    g: GridGraph, u_km2: Vertex, u_km1: Vertex, u_k: Vertex, b_km1: int, b_km2: int
) -> bool:
    """Variant threshold ``D + 1 + b_km1 + b_km2``, kept for comparison."""
    return 2 * d_rect(g, u_km2, u_k, u_km1) > g.D + 1 + b_km1 + b_km2


def trivial_labeling(g: GridGraph, s: Sequence[Vertex]) -> Labeling:
    """Labels ``D * (i - 1)`` along ``s``; always radio, span ``D * (n - 1)``."""
    return {tuple(v): g.D * i for i, v in enumerate(s)}

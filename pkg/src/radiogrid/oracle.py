"""Exact brute-force ground truth for small grids.

Nothing here consults the closed forms: the upper traceable number comes from
a subset dynamic program and the radio number from branch-and-bound.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._backend import kernels, tplus_witness
from .grid import GridGraph, Vertex
from .labeling import Labeling, min_span_labeling, span

TPLUS_MAX_N = 22
RN_MAX_N = 12
RN_TABLE_MAX_N = 20
EXHAUSTIVE_MAX_N = 9


class ResourceLimit(RuntimeError):
    """Instance exceeds an oracle guard; ``incumbent`` holds any partial result."""

    def __init__(self, message: str, incumbent: "OracleResult | None" = None):
        super().__init__(message)
        self.incumbent = incumbent


@dataclass
class OracleResult:
    value: int
    witness: list[Vertex] | Labeling
    nodes_explored: int
    elapsed: float


def distance_matrix(g: GridGraph) -> np.ndarray:
    xs = np.repeat(np.arange(1, g.a + 1), g.b)
    ys = np.tile(np.arange(1, g.b + 1), g.a)
    return (np.abs(xs[:, None] - xs[None, :]) + np.abs(ys[:, None] - ys[None, :])).astype(
        np.int64
    )


def oracle_t_plus(g: GridGraph, max_n: int = TPLUS_MAX_N) -> OracleResult:
    """Maximum of the consecutive-distance sum over all vertex sequences."""
    if g.n > max_n:
        raise ResourceLimit(f"oracle_t_plus guard: n={g.n} > {max_n}")
    t0 = time.perf_counter()
    dist = distance_matrix(g)
    dp = kernels.tplus_table(dist)
    value, path = tplus_witness(dist, dp)
    return OracleResult(
        value=value,
        witness=[g.vertex(i) for i in path],
        nodes_explored=int(dp.shape[0]) * g.n,
        elapsed=time.perf_counter() - t0,
    )


def symmetry_representatives(g: GridGraph) -> list[int]:
    """One first vertex per orbit of the grid's dihedral symmetries."""
    reps = []
    for v in g.vertices():
        x, y = v
        if 2 * x > g.a + 1 or 2 * y > g.b + 1:
            continue
        if g.a == g.b and x > y:
            continue
        reps.append(g.index(v))
    return reps


def oracle_rn(
    g: GridGraph, max_n: int = RN_MAX_N, force: bool = False, node_limit: int = 10**10
) -> OracleResult:
    """Minimum span over all radio labelings by branch-and-bound over orderings."""
    if g.n > max_n and not force:
        raise ResourceLimit(f"oracle_rn guard: n={g.n} > {max_n} (use force)")
    t0 = time.perf_counter()
    if g.n == 1:
        return OracleResult(0, {(1, 1): 0}, 1, time.perf_counter() - t0)
    dist = distance_matrix(g)
    D = g.D
    table = kernels.tplus_table(dist) if g.n <= RN_TABLE_MAX_N else None
    # D * (n - 1) is always attainable, so search strictly below D * (n - 1) + 1
    ub = D * (g.n - 1) + 1
    best, order, nodes, complete = kernels.bnb_rn(
        dist, D, table, symmetry_representatives(g), ub, node_limit
    )
    elapsed = time.perf_counter() - t0
    witness: Labeling = {}
    if order:
        witness = min_span_labeling(g, [g.vertex(int(i)) for i in order])
    if not complete:
        partial = OracleResult(int(best), witness, int(nodes), elapsed) if order else None
        raise ResourceLimit(f"oracle_rn node limit {node_limit} reached", partial)
    return OracleResult(int(best), witness, int(nodes), elapsed)


def oracle_max_d_minus_b(g: GridGraph, **kwargs) -> int:
    return (g.n - 1) * (g.D + 1) - oracle_rn(g, **kwargs).value


def labeling_exists_below(g: GridGraph, s: Sequence[Vertex], limit: int) -> bool:
    """Is there a radio labeling increasing along ``s`` with span below ``limit``?

    Enumerates gap vectors with every gap at least 1 (labels are distinct) and
    abandons a branch as soon as a label breaks a constraint against an
    earlier vertex.
    """
    if g.n > EXHAUSTIVE_MAX_N:
        raise ResourceLimit(f"exhaustive check guard: n={g.n} > {EXHAUSTIVE_MAX_N}")
    s = [tuple(v) for v in s]
    n, D = len(s), g.D
    if n == 1:
        return limit > 0
    need = [
        [D + 1 - abs(s[i][0] - s[j][0]) - abs(s[i][1] - s[j][1]) for j in range(n)]
        for i in range(n)
    ]
    labels = [0] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        top = limit - 1 - (n - 1 - i)  # leave room for unit gaps afterwards
        for lab in range(labels[i - 1] + 1, top + 1):
            if all(lab - labels[j] >= need[i][j] for j in range(i)):
                labels[i] = lab
                if extend(i + 1):
                    return True
        return False

    return extend(1)


def exhaustive_min_span_check(g: GridGraph, s: Sequence[Vertex]) -> bool:
    """True iff no labeling increasing along ``s`` beats the greedy span."""
    return not labeling_exists_below(g, s, span(min_span_labeling(g, s)))


def brute_force_rn(g: GridGraph) -> int:
    """Minimum span over all permutations; only for the tiniest grids."""
    if g.n > 8:
        raise ResourceLimit(f"brute force guard: n={g.n} > 8")
    verts = list(g.vertices())
    return min(span(min_span_labeling(g, list(p))) for p in itertools.permutations(verts))

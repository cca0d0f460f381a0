"""Closed forms for the upper traceable number and radio number of grids."""

from __future__ import annotations

from .grid import GridGraph, ParityCase, UnsupportedSize, normalize_orientation


def _normalized(a: int, b: int) -> tuple[int, int, ParityCase]:
    g, _ = normalize_orientation(a, b)
    return g.a, g.b, g.parity_case()


def t_plus_formula(a: int, b: int) -> int:
    a, b, case = _normalized(a, b)
    s = a * a * b + b * b * a
    if case is ParityCase.EVEN_EVEN:
        return s // 2 - 3
    if case is ParityCase.EVEN_ODD:
        return (s - a) // 2 - 1
    return (s - a - b) // 2 - 1


def rn_formula(a: int, b: int) -> int:
    a, b, case = _normalized(a, b)
    s = a * a * b + b * b * a
    if case is ParityCase.EVEN_EVEN:
        return s // 2 - a * b - a - b + 6
    if case is ParityCase.EVEN_ODD:
        return (s - a) // 2 - a * b - b + 2
    return (s - a - b) // 2 - a * b + 2


def max_dx_formula(a: int, b: int) -> int:
    """Largest possible sum of x-components over any vertex sequence."""
    if a < 2 or b < 2:
        raise UnsupportedSize(f"max d_x needs a,b >= 2, got {a}x{b}")
    if a % 2 == 0:
        return a * a * b // 2 - 1
    return (a * a - 1) * b // 2


def rn_lower_bound(g: GridGraph) -> int:
    return (g.n - 1) * (g.D + 1) - t_plus_formula(g.a, g.b)


def rn_upper_bound_trivial(g: GridGraph) -> int:
    return g.D * (g.n - 1)


def calles_interval(n: int) -> tuple[int, int]:
    """Known square-grid bounds on rn(G_{n,n}) by parity of n."""
    if n % 2 == 0:
        return n**3 - n**2 - 2 * n + 4, n**3 - n**2 + 1
    return n**3 - n**2 - n + 2, n**3 - n**2 - (n - 1) // 2 + 1


def calles_bounds_check(n: int) -> bool:
    if n < 3:
        raise UnsupportedSize(f"square grid needs n >= 3, got {n}")
    lo, hi = calles_interval(n)
    return lo <= rn_formula(n, n) <= hi

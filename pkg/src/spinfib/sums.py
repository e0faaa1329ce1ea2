"""Region sums over a spin grid, plus the closed forms for the Fibonacci grid.

Region sums stream the grid one diagonal at a time; a cell (m, n) enters
the sum for every bound N >= max(m, n), so ``sum_sequence`` produces all
prefix sums in one O(N^2) pass while holding only O(N) integers.
"""

from __future__ import annotations

import enum
import threading
from typing import Sequence

from .grid import DEFAULT_GRID_BOUND, BoundaryConvention, SpinSeeds, diagonal
from .kernel import IndexOutOfBounds, exact_div, fib, gfs_term, lucas


class Region(enum.Enum):
    LOWER_STRICT = "lower-strict"        # 0 <= j < i <= n
    UPPER_INCL_DIAG = "upper-incl"       # 0 <= i <= j <= n
    LOWER_INCL_DIAG = "triangle-incl"    # 0 <= j <= i <= n
    FULL_SQUARE = "square"               # all (i, j) in {0..n}^2


class Cancelled(RuntimeError):
    pass


def weighted_gfs_sum_closed(g0: int, g1: int, n: int) -> int:
    """Sum of i * G(i) for i = 1..n as n G(n+2) - G(n+3) + G(3)."""
    if n < 1:
        raise IndexOutOfBounds(f"n must be >= 1, got {n}")
    return n * gfs_term(g0, g1, n + 2) - gfs_term(g0, g1, n + 3) + gfs_term(g0, g1, 3)


def _prop5_core(m: int) -> int:
    # m L(m+3) - L(m+4) + 2 F(m+2); always a multiple of 5.
    return m * lucas(m + 3) - lucas(m + 4) + 2 * fib(m + 2)


def triangle_sum_closed(m: int) -> int:
    """Sum of F(i, j) over 0 <= j <= i <= m."""
    if m < 0:
        raise IndexOutOfBounds(f"m must be >= 0, got {m}")
    return 2 * exact_div(_prop5_core(m), 5) + 2


def square_sum_closed(m: int) -> int:
    """Sum of F(i, j) over {0..m}^2."""
    if m < 0:
        raise IndexOutOfBounds(f"m must be >= 0, got {m}")
    return 4 * exact_div(_prop5_core(m), 5) - fib(m + 2) + 5


def _weight(region: Region, t: int) -> int:
    # Diagonal offset t = i - j.  The grid is symmetric, so diagonals t and
    # -t carry the same values; return how many of the pair the region keeps.
    if t == 0:
        return 0 if region is Region.LOWER_STRICT else 1
    if region is Region.FULL_SQUARE:
        return 2
    return 1


def _accumulate(
    seeds: SpinSeeds,
    region: Region,
    n: int,
    conv: BoundaryConvention,
    cancel: threading.Event | None,
) -> list[int]:
    # deltas[k] = contribution of cells with max(i, j) == k.
    deltas = [0] * (n + 1)
    for t in range(n + 1):
        if cancel is not None and cancel.is_set():
            raise Cancelled(f"region sum cancelled at diagonal {t}")
        w = _weight(region, t)
        if not w:
            continue
        for k, value in zip(range(n + 1 - t), diagonal(seeds, t, conv)):
            deltas[t + k] += w * value
    return deltas


def _check_bound(n: int, bound: int) -> None:
    if n < 0:
        raise IndexOutOfBounds(f"n must be >= 0, got {n}")
    if n > bound:
        raise IndexOutOfBounds(f"n = {n} exceeds grid bound {bound}")


def region_sum(
    seeds: SpinSeeds | Sequence[int],
    region: Region,
    n: int,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
    *,
    bound: int = DEFAULT_GRID_BOUND,
    cancel: threading.Event | None = None,
) -> int:
    _check_bound(n, bound)
    return sum(_accumulate(SpinSeeds.of(seeds), region, n, conv, cancel))


def sum_sequence(
    seeds: SpinSeeds | Sequence[int],
    region: Region,
    count: int,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
    *,
    bound: int = DEFAULT_GRID_BOUND,
    cancel: threading.Event | None = None,
) -> list[int]:
    """[region_sum(seeds, region, n, conv) for n in range(count)]."""
    if count < 1:
        raise IndexOutOfBounds(f"count must be >= 1, got {count}")
    _check_bound(count - 1, bound)
    deltas = _accumulate(SpinSeeds.of(seeds), region, count - 1, conv, cancel)
    out, total = [], 0
    for d in deltas:
        total += d
        out.append(total)
    return out


def fibonacci_closed_sum(region: Region, m: int) -> int:
    """Closed form for the Fibonacci grid; only two regions have one."""
    if region is Region.LOWER_INCL_DIAG:
        return triangle_sum_closed(m)
    if region is Region.FULL_SQUARE:
        return square_sum_closed(m)
    raise ValueError(f"no closed form for region {region.value}")

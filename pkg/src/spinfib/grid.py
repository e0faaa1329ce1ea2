"""Double-recurrence grids H(m, n) = H(m-1, n-1) + H(m-2, n-2).

A grid is fixed by four seeds [a, b, c, d].  Rows/columns 0 carry the
GFS (a, b); rows/columns 1 carry the GFS (d, c).  The two families
disagree at cells (1, 0) and (0, 1) unless b == d, so the value placed
there is chosen by a ``BoundaryConvention``.

Three evaluation routes are provided and cross-checked by the tests:

* ``grid_eval_recurrence`` walks one diagonal with additions only,
* ``grid_eval_closed`` collapses the diagonal onto its two boundary
  strings using Fibonacci weights,
* ``prop3_decompose`` splits the closed form into two ``f_ab`` kernels.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .kernel import IndexOutOfBounds, fib, gfs_term

DEFAULT_GRID_BOUND = 2000
MAX_RENDER_SIZE = 500


class BoundaryConvention(enum.Enum):
    B_WINS = "b-wins"
    D_WINS = "d-wins"


class Prop3Variant(enum.Enum):
    CORRECTED = "corrected"
    PAPER_LITERAL = "paper-literal"


class DomainError(ValueError):
    """Arguments lie outside an operation's validity region."""


@dataclass(frozen=True)
class SpinSeeds:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def parse(cls, text: str) -> "SpinSeeds":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError:
            raise ValueError(f"seeds must be integers: {text!r}") from None

    @classmethod
    def of(cls, seeds: "SpinSeeds | Sequence[int]") -> "SpinSeeds":
        if isinstance(seeds, SpinSeeds):
            return seeds
        return cls(*seeds)

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.c, self.d]

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.as_list())

    # Boundary strings, indexed from 0.
    def axis_string(self, k: int) -> int:
        return gfs_term(self.a, self.b, k)

    def one_string(self, k: int) -> int:
        return gfs_term(self.d, self.c, k)

    def diagonal_string(self, k: int) -> int:
        return gfs_term(self.a, self.c, k)


FIBONACCI_SEEDS = SpinSeeds(0, 1, 1, 1)


def _check_cell(m: int, n: int, bound: int | None = None) -> None:
    if m < 0 or n < 0:
        raise IndexOutOfBounds(f"grid index ({m}, {n}) must be non-negative")
    if bound is not None and max(m, n) > bound:
        raise IndexOutOfBounds(f"grid index ({m}, {n}) exceeds bound {bound}")


def double_fib(m: int, n: int) -> int:
    """F(m, n) = F(k) F(|m-n|+2) + F(k-1) F(|m-n|), k = min(m, n)."""
    _check_cell(m, n)
    k = min(m, n)
    t = abs(m - n)
    return fib(k) * fib(t + 2) + fib(k - 1) * fib(t)


def diagonal(seeds: SpinSeeds, offset: int, conv: BoundaryConvention) -> Iterator[int]:
    """Yield H(t, 0), H(t+1, 1), H(t+2, 2), ... for t = |offset|.

    The grid is symmetric, so negative offsets reuse the positive ones.
    Only additions are used; this is the recurrence oracle.
    """
    t = abs(offset)
    # Walk both boundary strings up to position t.
    a0, a1 = seeds.a, seeds.b
    d0, d1 = seeds.d, seeds.c
    for _ in range(t):
        a0, a1 = a1, a0 + a1
        d0, d1 = d1, d0 + d1
    first = a0
    if t == 1 and conv is BoundaryConvention.D_WINS:
        first = seeds.d
    second = d1
    yield first
    yield second
    while True:
        first, second = second, first + second
        yield second


def grid_eval_recurrence(
    seeds: SpinSeeds | Sequence[int],
    m: int,
    n: int,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
    bound: int = DEFAULT_GRID_BOUND,
) -> int:
    seeds = SpinSeeds.of(seeds)
    _check_cell(m, n, bound)
    k = min(m, n)
    for step, value in enumerate(diagonal(seeds, m - n, conv)):
        if step == k:
            return value
    raise AssertionError("unreachable")


def grid_eval_closed(seeds: SpinSeeds | Sequence[int], m: int, n: int) -> int:
    """String reduction: H = F(k) * one_string(t+1) + F(k-1) * axis_string(t).

    Matches the recurrence under B_WINS everywhere; under D_WINS it differs
    on the two diagonals through (1, 0) and (0, 1) when b != d.
    """
    seeds = SpinSeeds.of(seeds)
    _check_cell(m, n)
    k = min(m, n)
    t = abs(m - n)
    return fib(k) * seeds.one_string(t + 1) + fib(k - 1) * seeds.axis_string(t)


def f_ab(a: int, b: int, m: int, n: int) -> int:
    """b F(n) F(|m-n|+2) + a F(n-1) F(|m-n|), absolute values kept as written."""
    _check_cell(m, n)
    t = abs(m - n)
    return b * fib(n) * fib(t + 2) + a * fib(n - 1) * fib(t)


def prop3_decompose(
    seeds: SpinSeeds | Sequence[int],
    m: int,
    n: int,
    variant: Prop3Variant = Prop3Variant.CORRECTED,
) -> int:
    """Two-kernel decomposition of H(m, n), valid only for |m - n| >= 2.

    Below the diagonal both variants use
    f_ab(a+b, c, m-1, n) + f_ab(b, d, m-2, n).  Above it, CORRECTED mirrors
    that form while PAPER_LITERAL uses f_ab(a+d, c, n-1, m) + f_ab(d, b, n-2, m),
    which is off by (b - d) * F(m-2) * F(n-m).
    """
    s = SpinSeeds.of(seeds)
    _check_cell(m, n)
    if abs(m - n) < 2:
        raise DomainError(
            f"decomposition requires |m - n| >= 2, got ({m}, {n}); "
            "use the closed form near the diagonal"
        )
    if n <= m - 2:
        return f_ab(s.a + s.b, s.c, m - 1, n) + f_ab(s.b, s.d, m - 2, n)
    if variant is Prop3Variant.PAPER_LITERAL:
        return f_ab(s.a + s.d, s.c, n - 1, m) + f_ab(s.d, s.b, n - 2, m)
    return f_ab(s.a + s.b, s.c, n - 1, m) + f_ab(s.b, s.d, n - 2, m)


def literal_gap(seeds: SpinSeeds | Sequence[int], m: int, n: int) -> int:
    """Predicted PAPER_LITERAL minus true value for m <= n - 2."""
    s = SpinSeeds.of(seeds)
    return (s.b - s.d) * fib(m - 2) * fib(n - m)


def grid_table(
    seeds: SpinSeeds | Sequence[int],
    size: int,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
) -> list[list[int]]:
    """table[n][m] = H(m, n) for 0 <= m, n <= size, filled diagonal by diagonal."""
    seeds = SpinSeeds.of(seeds)
    table = [[0] * (size + 1) for _ in range(size + 1)]
    for t in range(size + 1):
        for k, value in zip(range(size + 1 - t), diagonal(seeds, t, conv)):
            table[k][t + k] = value
            table[t + k][k] = value
    return table


def grid_render(
    seeds: SpinSeeds | Sequence[int],
    size: int,
    conv: BoundaryConvention = BoundaryConvention.B_WINS,
) -> list[list[int]]:
    """Return rows[n][m] = H(m, n); rows[0] is the bottom row of the picture."""
    if not 1 <= size <= MAX_RENDER_SIZE:
        raise IndexOutOfBounds(f"render size must be in [1, {MAX_RENDER_SIZE}], got {size}")
    return grid_table(seeds, size, conv)

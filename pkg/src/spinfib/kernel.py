"""Exact Fibonacci, Lucas and generalized-Fibonacci evaluation.

Everything here works on Python ints, so values are exact at any size.
``fib`` accepts negative indices through F(-n) = (-1)**(n+1) * F(n);
the grid closed forms rely on F(-1) = 1.

Generalized Fibonacci sequences (GFS) are seeded at positions 0 and 1:
``gfs_term(g0, g1, n)`` is G(n) with G(0) = g0, G(1) = g1, which expands
to g1*F(n) + g0*F(n-1).  A sequence seeded at positions 1 and 2 with
values a, b is ``gfs_term(b - a, a, n - 1)``.
"""

from __future__ import annotations

DEFAULT_MAX_INDEX = 10**7

_max_index = DEFAULT_MAX_INDEX

# Small indices are served from a table; larger ones go through fast doubling.
_TABLE_SIZE = 1024


class IndexOutOfBounds(ValueError):
    """An index falls outside the configured or declared range."""


class KernelError(ArithmeticError):
    """An identity that must hold exactly did not; indicates a bug."""


def set_max_index(limit: int) -> None:
    global _max_index
    if limit < 1:
        raise ValueError("max index must be positive")
    _max_index = limit


def get_max_index() -> int:
    return _max_index


def _check(n: int, allow_negative: bool = True) -> None:
    if not allow_negative and n < 0:
        raise IndexOutOfBounds(f"index {n} must be non-negative")
    if abs(n) > _max_index:
        raise IndexOutOfBounds(f"|{n}| exceeds max index {_max_index}")


def _doubling(n: int) -> tuple[int, int]:
    # (F(k), F(k+1)) -> (F(2k), F(2k+1)), walking the bits of n from the top.
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def _build_table(size: int) -> tuple[int, ...]:
    out = [0, 1]
    while len(out) < size + 1:
        out.append(out[-1] + out[-2])
    return tuple(out)


_TABLE = _build_table(_TABLE_SIZE)


def fib_pair(n: int) -> tuple[int, int]:
    """Return (F(n), F(n+1)) by fast doubling; n >= 0."""
    _check(n, allow_negative=False)
    return _doubling(n)


def fib(n: int) -> int:
    _check(n)
    if n < 0:
        value = fib(-n)
        return value if n % 2 else -value
    if n < _TABLE_SIZE:
        return _TABLE[n]
    return _doubling(n)[0]


def lucas(n: int) -> int:
    """L(n) = F(n-1) + F(n+1), so L(0) = 2 and L(1) = 1."""
    _check(n, allow_negative=False)
    return fib(n - 1) + fib(n + 1)


def gfs_term(g0: int, g1: int, n: int) -> int:
    _check(n, allow_negative=False)
    return g1 * fib(n) + g0 * fib(n - 1)


def exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise KernelError(f"{numerator} is not divisible by {denominator}")
    return q


def fib_convolution(i: int) -> int:
    """Sum of F(j) * F(i-j) for j = 0..i, via (i*L(i) - F(i)) / 5."""
    _check(i, allow_negative=False)
    return exact_div(i * lucas(i) - fib(i), 5)


def weighted_fib_sum(n: int) -> int:
    """Sum of i * F(i) for i = 1..n, via n*F(n+2) - F(n+3) + 2."""
    if n < 1:
        raise IndexOutOfBounds(f"weighted_fib_sum needs n >= 1, got {n}")
    _check(n + 3)
    return n * fib(n + 2) - fib(n + 3) + 2

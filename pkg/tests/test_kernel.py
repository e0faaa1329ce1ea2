import pytest
from hypothesis import given, strategies as st

from oracles import direct_convolution, gfs_terms, naive_fib, naive_fibs
from spinfib import kernel
from spinfib.kernel import (
    IndexOutOfBounds,
    fib,
    fib_convolution,
    fib_pair,
    gfs_term,
    lucas,
    weighted_fib_sum,
)

NAIVE = naive_fibs(5003)


@pytest.mark.parametrize("n, expected", [(0, 0), (-1, 1), (10, 55), (-2, -1), (-7, 13)])
def test_fib_values(n, expected):
    assert fib(n) == expected


@pytest.mark.parametrize("n, expected", [(0, (0, 1)), (1, (1, 1)), (9, (34, 55))])
def test_fib_pair_values(n, expected):
    assert fib_pair(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 1), (4, 7), (10, 123)])
def test_lucas_values(n, expected):
    assert lucas(n) == expected


@pytest.mark.parametrize(
    "g0, g1, n, expected", [(0, 1, 7, 13), (2, 1, 4, 7), (1, 3, 4, 11), (5, -2, 0, 5), (5, -2, 1, -2)]
)
def test_gfs_term_values(g0, g1, n, expected):
    assert gfs_term(g0, g1, n) == expected


@pytest.mark.parametrize("i, expected", [(0, 0), (1, 0), (5, 10)])
def test_fib_convolution_values(i, expected):
    assert fib_convolution(i) == expected


# 1*1 + 2*1 + 3*2 + 4*3 + 5*5 + 6*8 = 94 by direct summation.
@pytest.mark.parametrize("n, expected", [(1, 1), (4, 21), (6, 94)])
def test_weighted_fib_sum_values(n, expected):
    assert weighted_fib_sum(n) == expected
    assert expected == sum(i * naive_fib(i) for i in range(1, n + 1))


def test_fib_recurrence_over_negative_and_positive():
    for n in range(-500, 501):
        assert fib(n + 2) == fib(n + 1) + fib(n)


def test_fib_matches_naive_iteration():
    for n in range(5001):
        assert fib(n) == NAIVE[n]
        assert fib_pair(n) == (NAIVE[n], NAIVE[n + 1])


def test_negative_extension_matches_oracle():
    for n in range(1, 60):
        assert fib(-n) == naive_fib(-n) == (-1) ** (n + 1) * NAIVE[n]


def test_lucas_five_fib_identity():
    for n in range(1, 2001):
        assert lucas(n - 1) + lucas(n + 1) == 5 * fib(n)


def test_addition_law():
    for i in range(0, 501, 7):
        for j in range(i + 1):
            assert fib(i) == fib(j) * fib(i - j + 1) + fib(j - 1) * fib(i - j)


def test_prefix_sum_identity():
    total = 0
    for n in range(1, 1001):
        total += NAIVE[n]
        assert total == fib(n + 2) - 1


def test_convolution_matches_direct_sum():
    for i in range(0, 501, 3):
        assert fib_convolution(i) == direct_convolution(i)


def test_gfs_recurrence():
    for g0 in range(-3, 4):
        for g1 in range(-3, 4):
            ref = gfs_terms(g0, g1, 203)
            for n in range(201):
                assert gfs_term(g0, g1, n) == ref[n]
                assert gfs_term(g0, g1, n + 2) == gfs_term(g0, g1, n + 1) + gfs_term(g0, g1, n)


@given(st.integers(0, 20000), st.integers(0, 20000))
def test_addition_law_large(m, n):
    # F(m+n) = F(m) F(n+1) + F(m-1) F(n)
    assert fib(m + n) == fib(m) * fib(n + 1) + fib(m - 1) * fib(n)


@given(st.integers(1024, 50000))
def test_doubling_consistent_with_table_path(n):
    a, b = fib_pair(n)
    assert fib(n) == a and fib(n + 1) == b
    assert fib(n + 2) == a + b


def test_index_cap(monkeypatch):
    monkeypatch.setattr(kernel, "_max_index", 100)
    assert fib(100) == NAIVE[100]
    assert fib(-100) == -NAIVE[100]
    with pytest.raises(IndexOutOfBounds):
        fib(101)
    with pytest.raises(IndexOutOfBounds):
        fib(-101)
    with pytest.raises(IndexOutOfBounds):
        fib_pair(101)


def test_default_cap():
    assert kernel.get_max_index() == 10**7
    with pytest.raises(IndexOutOfBounds):
        fib(10**7 + 1)


@pytest.mark.parametrize("func", [fib_pair, lucas, fib_convolution])
def test_negative_rejected(func):
    with pytest.raises(IndexOutOfBounds):
        func(-1)


def test_weighted_fib_sum_domain():
    with pytest.raises(IndexOutOfBounds):
        weighted_fib_sum(0)


def test_exact_div_raises_on_remainder():
    assert kernel.exact_div(-15, 5) == -3
    with pytest.raises(kernel.KernelError):
        kernel.exact_div(7, 5)

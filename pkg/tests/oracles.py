"""Brute-force reference implementations, independent of spinfib's code paths."""


def naive_fibs(count):
    out = [0, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def naive_fib(n):
    if n < 0:
        v = naive_fib(-n)
        return v if (-n) % 2 else -v
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def gfs_terms(g0, g1, count):
    out = [g0, g1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def brute_grid(seeds, size, d_wins=False):
    """H[(m, n)] for 0 <= m, n <= size, filled straight from the definition."""
    a, b, c, d = seeds
    axis = gfs_terms(a, b, size + 2)
    ones = gfs_terms(d, c, size + 2)
    H = {}
    for k in range(size + 1):
        H[(k, 0)] = H[(0, k)] = axis[k]
    for k in range(1, size + 1):
        H[(k, 1)] = H[(1, k)] = ones[k]
    if d_wins and size >= 1:
        H[(1, 0)] = H[(0, 1)] = d
    for total in range(4, 2 * size + 1):
        for m in range(2, size + 1):
            n = total - m
            if 2 <= n <= size:
                H[(m, n)] = H[(m - 1, n - 1)] + H[(m - 2, n - 2)]
    return H


def brute_region(H, region, n):
    if region == "lower-strict":
        cells = [(i, j) for i in range(1, n + 1) for j in range(i)]
    elif region == "upper-incl":
        cells = [(i, j) for j in range(n + 1) for i in range(j + 1)]
    elif region == "triangle-incl":
        cells = [(i, j) for i in range(n + 1) for j in range(i + 1)]
    else:
        cells = [(i, j) for i in range(n + 1) for j in range(n + 1)]
    return sum(H[c] for c in cells)


def direct_convolution(i):
    f = naive_fibs(i + 1)
    return sum(f[j] * f[i - j] for j in range(i + 1))


def direct_weighted_sum(g0, g1, n):
    g = gfs_terms(g0, g1, n + 1)
    return sum(i * g[i] for i in range(1, n + 1))

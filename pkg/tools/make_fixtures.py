#!/usr/bin/env python3
"""Regenerate the offline b-file fixtures in src/spinfib/fixtures/.

oeis.org was not reachable from the build machine, so each fixture is
computed from the sequence's published definition (formula, generating
function or combinatorial recurrence) written out below.  None of them
go through the spinfib grid code.  Replace any fixture with the real
b-file via ``spinfib oeis fetch A...... --online`` when network access
is available.

A122491 and A190062 are not generated: their definitions could not be
confirmed without the live database.
"""

from __future__ import annotations

from pathlib import Path

TERMS = 60
OUT = Path(__file__).resolve().parent.parent / "src" / "spinfib" / "fixtures"


def fibs(count):
    out = [0, 1]
    while len(out) < count:
        out.append(out[-1] + out[-2])
    return out[:count]


def series(num, den, count):
    """Power-series coefficients of num(x)/den(x); den[0] must be 1."""
    assert den[0] == 1
    out = []
    for k in range(count):
        v = num[k] if k < len(num) else 0
        for j in range(1, min(k, len(den) - 1) + 1):
            v -= den[j] * out[k - j]
        out.append(v)
    return out


def polymul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


FIB_DEN_SQ = polymul([1, -1, -1], [1, -1, -1])
FIB_DEN_SQ_ONE = polymul(FIB_DEN_SQ, [1, -1])


def a000045():
    return 0, fibs(TERMS), "Fibonacci numbers"


def a001629():
    f = fibs(TERMS)
    return 0, [sum(f[k] * f[n - k] for k in range(n + 1)) for n in range(TERMS)], (
        "Fibonacci numbers convolved with themselves: Sum_{k=0..n} F(k)F(n-k)")


def a014286():
    f = fibs(TERMS)
    out, acc = [], 0
    for n in range(TERMS):
        acc += n * f[n]
        out.append(acc)
    return 0, out, "Sum_{j=1..n} j*F(j)"


def a178523():
    # Fibonacci tree of order n: T(0), T(1) single nodes; T(n) = root + T(n-1) + T(n-2).
    nodes = [1, 1]
    path = [0, 0]
    for n in range(2, TERMS):
        nodes.append(nodes[n - 1] + nodes[n - 2] + 1)
        path.append(path[n - 1] + path[n - 2] + nodes[n] - 1)
    return 0, path, "Path length of the Fibonacci tree of order n"


def a006478():
    return 0, series([0, 0, 1], FIB_DEN_SQ_ONE, TERMS), "G.f. x^2/((1-x)(1-x-x^2)^2)"


def a002940():
    return 0, series([1, 1], FIB_DEN_SQ_ONE, TERMS), "G.f. (1+x)/((1-x)(1-x-x^2)^2)"


def a010049():
    return 0, series([1, -1], FIB_DEN_SQ, TERMS), "Second-order Fibonacci numbers, g.f. (1-x)/(1-x-x^2)^2"


GENERATORS = {
    "A000045": a000045,
    "A001629": a001629,
    "A002940": a002940,
    "A006478": a006478,
    "A010049": a010049,
    "A014286": a014286,
    "A178523": a178523,
}


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for anum, gen in GENERATORS.items():
        offset, terms, definition = gen()
        lines = [
            f"# {anum}: {definition}",
            "# Offline fixture computed from the definition above (tools/make_fixtures.py),",
            "# not downloaded from oeis.org.",
        ]
        lines += [f"{offset + i} {v}" for i, v in enumerate(terms)]
        path = OUT / f"b{anum[1:]}.txt"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path.name}: {len(terms)} terms")


if __name__ == "__main__":
    main()

"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import itertools
from math import gcd

import sympy


def handle_reduce(letters) -> list[int]:
    """Dehornoy handle reduction; the result is empty iff the braid is trivial.

    The handle ending leftmost is always permitted, so reducing it terminates.
    """
    w = list(letters)
    while True:
        found = None
        for k, x in enumerate(w):
            i = abs(x)
            for p in range(k - 1, -1, -1):
                j = abs(w[p])
                if j < i:
                    break
                if j == i:
                    if w[p] == -x:
                        found = (p, k)
                    break
            if found:
                break
        if found is None:
            return w
        p, k = found
        i, e = abs(w[p]), (1 if w[p] > 0 else -1)
        middle: list[int] = []
        for x in w[p + 1 : k]:
            if abs(x) == i + 1:
                s = 1 if x > 0 else -1
                middle += [-e * (i + 1), s * i, e * (i + 1)]
            else:
                middle.append(x)
        w = w[:p] + middle + w[k + 1 :]


def braids_equal(a, b) -> bool:
    return not handle_reduce(list(a) + [-x for x in reversed(b)])


def determinantal_invariants(rows: list[list[int]], cols: int) -> tuple[int, list[int]]:
    """(rank, invariant factors) from gcds of k x k minors."""
    if not rows:
        return 0, []
    m = sympy.Matrix(rows)
    divisors = [1]
    for k in range(1, min(len(rows), cols) + 1):
        g = 0
        for r in itertools.combinations(range(len(rows)), k):
            for c in itertools.combinations(range(cols), k):
                g = gcd(g, int(m.extract(list(r), list(c)).det()))
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]
    return len(factors), factors


def reduced_burau(d: int, letter: int) -> sympy.Matrix:
    """Reduced Burau matrix of sigma_i^{+-1} at t = -1, size (d-1) x (d-1)."""
    t = -1
    k = abs(letter) - 1
    m = sympy.eye(d - 1)
    if k > 0:
        m[k, k - 1] = t
    m[k, k] = -t
    if k < d - 2:
        m[k, k + 1] = 1
    return m if letter > 0 else m.inv()


def burau_word(d: int, letters) -> sympy.Matrix:
    m = sympy.eye(d - 1)
    for x in letters:
        m = m * reduced_burau(d, x)
    return m


def intertwiners(d: int, targets: dict[int, sympy.Matrix]) -> list[sympy.Matrix]:
    """Basis of the matrices X (k x (d-1)) with T_i X = X B(s_i) for every i in ``targets``."""
    k = next(iter(targets.values())).shape[0]
    xs = sympy.symbols(f"x0:{k * (d - 1)}")
    X = sympy.Matrix(k, d - 1, xs)
    eqs = []
    for i, T in targets.items():
        eqs.extend(list(T * X - X * reduced_burau(d, i)))
    system, _ = sympy.linear_eq_to_matrix(eqs, xs)
    return [sympy.Matrix(k, d - 1, list(v)) for v in system.nullspace()]

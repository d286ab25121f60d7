"""Smith normal form over Z with exact Python integers."""

from __future__ import annotations

from dataclasses import dataclass

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def transpose(a: Matrix, cols: int | None = None) -> Matrix:
    if not a:
        return [[] for _ in range(cols or 0)]
    return [list(r) for r in zip(*a)]


@dataclass
class SmithForm:
    """left @ A @ right == diag; right @ right_inverse == I."""

    diagonal: list[int]
    left: Matrix
    right: Matrix
    right_inverse: Matrix
    rows: int
    cols: int

    @property
    def rank(self) -> int:
        return sum(1 for x in self.diagonal if x != 0)


def smith_normal_form(a: Matrix, cols: int | None = None) -> SmithForm:
    m = len(a)
    n = len(a[0]) if a else (cols or 0)
    A = [list(map(int, r)) for r in a]
    L = identity(m)
    R = identity(n)
    Rinv = identity(n)

    def swap_rows(i: int, j: int) -> None:
        A[i], A[j] = A[j], A[i]
        L[i], L[j] = L[j], L[i]

    def swap_cols(i: int, j: int) -> None:
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in R:
            row[i], row[j] = row[j], row[i]
        Rinv[i], Rinv[j] = Rinv[j], Rinv[i]

    def add_row(dst: int, src: int, k: int) -> None:  # row_dst += k * row_src
        if k:
            A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
            L[dst] = [x + k * y for x, y in zip(L[dst], L[src])]

    def add_col(dst: int, src: int, k: int) -> None:  # col_dst += k * col_src
        if k:
            for row in A:
                row[dst] += k * row[src]
            for row in R:
                row[dst] += k * row[src]
            Rinv[src] = [x - k * y for x, y in zip(Rinv[src], Rinv[dst])]

    def negate_row(i: int) -> None:
        A[i] = [-x for x in A[i]]
        L[i] = [-x for x in L[i]]

    t = 0
    while t < min(m, n):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(i, t, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(j, t, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the rest of the block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            negate_row(t)
        t += 1
    diag = [A[i][i] for i in range(min(m, n))]
    return SmithForm(diag, L, R, Rinv, m, n)


def invariant_factors(a: Matrix, cols: int | None = None) -> list[int]:
    return [x for x in smith_normal_form(a, cols).diagonal if x != 0]


def row_space_complement(generators: Matrix, dim: int) -> tuple[Matrix, Matrix]:
    """Split Z^dim as span(generators) (assumed saturated) + a complement.

    Returns (basis of the span, basis of a complement), both as row vectors.
    """
    if not generators:
        return [], identity(dim)
    snf = smith_normal_form(generators, dim)
    if any(abs(x) != 1 for x in snf.diagonal if x):
        raise ValueError("sublattice is not saturated")
    r = snf.rank
    rows = snf.right_inverse
    return [list(rows[k]) for k in range(r)], [list(rows[k]) for k in range(r, dim)]


def hermite_row_basis(a: Matrix, cols: int) -> list[tuple[int, ...]]:
    """Row-style Hermite normal form; a canonical basis of the row lattice."""
    A = [list(r) for r in a if any(r)]
    out: list[list[int]] = []
    col = 0
    while A and col < cols:
        rows = [r for r in A if r[col]]
        if not rows:
            col += 1
            continue
        while len([r for r in A if r[col]]) > 1:
            rows = sorted((r for r in A if r[col]), key=lambda r: abs(r[col]))
            piv = rows[0]
            for r in rows[1:]:
                q = r[col] // piv[col]
                for k in range(cols):
                    r[k] -= q * piv[k]
        piv = next(r for r in A if r[col])
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        A = [r for r in A if r is not piv and any(r)]
        out.append(piv)
        col += 1
    for i, r in enumerate(out):
        c = next(k for k, x in enumerate(r) if x)
        for prev in out[:i]:
            q = prev[c] // r[c]
            for k in range(cols):
                prev[k] -= q * r[k]
    return [tuple(r) for r in out]

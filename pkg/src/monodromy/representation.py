"""
Geometric monodromy representations theta: F_d -> S_n.

theta is determined by the transpositions theta(g_1), ..., theta(g_d).  The
braid group acts on such data by theta -> theta o Q_*, whose images are
theta(g_i * Q); braids fixing theta are the liftable ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Sequence, TypeVar

from .braid import BraidError, BraidWord, Permutation
from .freegroup import FreeWord, artin_act
from .report import ValidationReport

if TYPE_CHECKING:
    from .factorization import BraidFactorization

__all__ = [
    "MonodromyRep",
    "act_on_images",
    "evaluate",
    "validate_rep",
    "check_compatibility",
    "factor_transpositions",
    "is_liftable",
    "liftability_of_factorization",
    "non_liftable_factors",
    "is_liftable_by_words",
    "conjugated_rep",
]

T = TypeVar("T")
Pair = tuple[int, int]


@dataclass(frozen=True)
class MonodromyRep:
    d: int
    n: int
    images: tuple[Pair, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.d:
            raise BraidError(f"expected {self.d} images, got {len(self.images)}")
        norm = []
        for pair in self.images:
            a, b = (int(x) for x in pair)
            for x in (a, b):
                if not 1 <= x <= self.n:
                    raise BraidError(f"image entry {x} outside 1..{self.n}")
            norm.append((min(a, b), max(a, b)))
        object.__setattr__(self, "images", tuple(norm))

    def permutation(self, i: int) -> Permutation:
        a, b = self.images[i - 1]
        return Permutation.transposition(a, b, self.n)

    def sheet_map(self, i: int) -> Callable[[int], int]:
        a, b = self.images[i - 1]
        return lambda s: b if s == a else a if s == b else s


def act_on_images(
    images: Sequence[T],
    q: BraidWord,
    mul: Callable[[T, T], T],
    inv: Callable[[T], T],
) -> list[T]:
    """Images of g_i * q under the homomorphism g_i -> images[i-1].

    The target product ``mul`` is left to right.  Letters of q are applied
    from the right, since theta o (ab)_* = (theta o b_*) o a_*.
    """
    cur = list(images)
    for x in reversed(q.letters):
        i = abs(x) - 1
        a, b = cur[i], cur[i + 1]
        if x > 0:
            cur[i], cur[i + 1] = mul(mul(a, b), inv(a)), a
        else:
            cur[i], cur[i + 1] = b, mul(mul(inv(b), a), b)
    return cur


def _conj_pair(x: Pair, y: Pair) -> Pair:
    """Support of x y x for transpositions x, y."""
    a, b = x

    def t(s: int) -> int:
        return b if s == a else a if s == b else s

    u, v = t(y[0]), t(y[1])
    return (min(u, v), max(u, v))


def _act_on_pairs(images: Sequence[Pair], q: BraidWord) -> list[Pair]:
    cur = list(images)
    for x in reversed(q.letters):
        i = abs(x) - 1
        a, b = cur[i], cur[i + 1]
        if x > 0:
            cur[i], cur[i + 1] = _conj_pair(a, b), a
        else:
            cur[i], cur[i + 1] = b, _conj_pair(b, a)
    return cur


def conjugated_rep(theta: MonodromyRep, q: BraidWord) -> MonodromyRep:
    """theta o Q_*, the representation that goes with a global conjugation by q."""
    if q.d != theta.d:
        raise BraidError(f"rank mismatch: theta on F_{theta.d}, braid in B_{q.d}")
    return MonodromyRep(theta.d, theta.n, tuple(_act_on_pairs(theta.images, q)))


def evaluate(theta: MonodromyRep, w: FreeWord) -> Permutation:
    if w.rank != theta.d:
        raise BraidError(f"rank mismatch: theta on F_{theta.d}, word in F_{w.rank}")
    result = Permutation.identity(theta.n)
    for x in w.letters:
        # transpositions are involutions
        result = result * theta.permutation(abs(x))
    return result


def _transitive(n: int, pairs: Sequence[Pair]) -> tuple[bool, set[int]]:
    parent = list(range(n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    reached = {s for s in range(1, n + 1) if find(s) == find(1)}
    return len(reached) == n, reached


def validate_rep(theta: MonodromyRep) -> ValidationReport:
    report = ValidationReport()
    bad = [i for i, (a, b) in enumerate(theta.images, start=1) if a == b]
    report.add(
        "transpositions",
        not bad,
        "" if not bad else "images of g" + ", g".join(map(str, bad)) + " are not transpositions",
    )
    product = Permutation.identity(theta.n)
    for i in range(1, theta.d + 1):
        product = product * theta.permutation(i)
    report.add(
        "product_identity",
        product.is_identity(),
        "" if product.is_identity() else f"theta(g1...g{theta.d}) = {product}",
    )
    ok, reached = _transitive(theta.n, [p for p in theta.images if p[0] != p[1]])
    missing = sorted(set(range(1, theta.n + 1)) - reached)
    report.add(
        "transitive",
        ok,
        "" if ok else f"sheets {missing} unreachable from sheet 1",
    )
    return report


def factor_transpositions(theta: MonodromyRep, q: BraidWord) -> tuple[Pair, Pair]:
    """(theta(g1 * Q), theta(g2 * Q))."""
    images = _act_on_pairs(theta.images, q)
    return images[0], images[1]


def _clause(r: int, a: Pair, b: Pair) -> str | None:
    shared = len(set(a) & set(b))
    if r == 1:
        return None if a == b else "tangency needs equal transpositions"
    if abs(r) == 2:
        return None if shared == 0 else "node needs distinct commuting (disjoint) transpositions"
    if abs(r) == 3:
        return None if shared == 1 else "cusp needs non-commuting transpositions"
    return f"unsupported degree {r}"


def check_compatibility(theta: MonodromyRep, fact: BraidFactorization) -> ValidationReport:
    report = ValidationReport()
    if theta.d != fact.d:
        report.add("rank", False, f"theta has d={theta.d}, factorization has d={fact.d}")
        return report
    report.extend(validate_rep(theta))
    failing = []
    for j, f in enumerate(fact.factors, start=1):
        a, b = factor_transpositions(theta, f.conj)
        why = _clause(f.degree, a, b)
        if why is not None:
            failing.append(f"factor {j} (deg {f.degree}): {a} vs {b}: {why}")
    report.add("factor_clauses", not failing, "; ".join(failing))
    return report


def is_liftable(theta: MonodromyRep, q: BraidWord) -> bool:
    """theta(g_i * q) == theta(g_i) for every i."""
    if q.d != theta.d:
        raise BraidError(f"rank mismatch: theta on F_{theta.d}, braid in B_{q.d}")
    return tuple(_act_on_pairs(theta.images, q)) == theta.images


def is_liftable_by_words(theta: MonodromyRep, q: BraidWord) -> bool:
    """Same predicate, computed through explicit Artin-action words."""
    for i in range(1, theta.d + 1):
        g = FreeWord.generator(theta.d, i)
        if evaluate(theta, artin_act(g, q)) != evaluate(theta, g):
            return False
    return True


def liftability_of_factorization(theta: MonodromyRep, fact: BraidFactorization) -> bool:
    return all(is_liftable(theta, f.braid) for f in fact.factors)


def non_liftable_factors(theta: MonodromyRep, fact: BraidFactorization) -> list[int]:
    return [j for j, f in enumerate(fact.factors, start=1) if not is_liftable(theta, f.braid)]

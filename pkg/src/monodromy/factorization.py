"""
Braid factorizations of the full twist and the moves generating m-equivalence.

A factor (Q, r) stands for the braid Q^-1 s1^r Q.  Degrees encode the type
of special point: 1 tangency, +-2 node, 3 cusp (-3 only with
``allow_negative_cusps``).  Positions in the public API are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Literal, Sequence

from .braid import (
    BraidWord,
    GarsideForm,
    canonical_form,
    compose,
    full_twist,
    garside_normal_form,
    group_equal,
    invert,
)
from .report import ValidationReport
from .representation import MonodromyRep, factor_transpositions

__all__ = [
    "FactorizationError",
    "Factor",
    "BraidFactorization",
    "underlying_braid",
    "census",
    "validate",
    "hurwitz_move",
    "global_conjugate",
    "cancel_pair",
    "create_pair",
    "smooth_curve_factorization",
]

DEGREES = frozenset({1, 2, -2, 3})
DEGREES_EXTENDED = DEGREES | {-3}

Direction = Literal["forward", "backward"]


class FactorizationError(ValueError):
    pass


def _shorter(q: BraidWord) -> BraidWord:
    reduced = q.freely_reduced()
    canon = canonical_form(q)
    return canon if len(canon) < len(reduced) else reduced


@dataclass(frozen=True)
class Factor:
    conj: BraidWord
    degree: int

    @cached_property
    def braid(self) -> BraidWord:
        q = self.conj
        power = BraidWord(q.d, ((1,) if self.degree > 0 else (-1,)) * abs(self.degree))
        return compose(compose(invert(q), power), q)

    @cached_property
    def key(self) -> tuple[GarsideForm, int]:
        """Factors are equal when underlying braids and degrees agree."""
        return garside_normal_form(self.braid), self.degree

    @property
    def kind(self) -> str:
        return {
            1: "tangency",
            2: "node_positive",
            -2: "node_negative",
            3: "cusp",
            -3: "cusp_negative",
        }.get(self.degree, f"degree_{self.degree}")


@dataclass(frozen=True)
class BraidFactorization:
    d: int
    factors: tuple[Factor, ...] = ()
    allow_negative_cusps: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        allowed = DEGREES_EXTENDED if self.allow_negative_cusps else DEGREES
        for j, f in enumerate(self.factors, start=1):
            if f.conj.d != self.d:
                raise FactorizationError(f"factor {j} lives in B_{f.conj.d}, expected B_{self.d}")
            if f.degree not in allowed:
                hint = " (negative cusps need allow_negative_cusps)" if f.degree == -3 else ""
                raise FactorizationError(f"factor {j} has unsupported degree {f.degree}{hint}")

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.factors)

    def product(self) -> BraidWord:
        letters: list[int] = []
        for f in self.factors:
            letters.extend(f.braid.letters)
        return BraidWord(self.d, tuple(letters))

    def key(self) -> tuple:
        return tuple(f.key for f in self.factors)

    def with_factors(self, factors: Sequence[Factor]) -> BraidFactorization:
        return replace(self, factors=tuple(factors))


def underlying_braid(f: Factor) -> BraidWord:
    return f.braid


def census(fact: BraidFactorization) -> dict[str, int]:
    counts = {"tangency": 0, "node_positive": 0, "node_negative": 0, "cusp": 0}
    if fact.allow_negative_cusps:
        counts["cusp_negative"] = 0
    for f in fact.factors:
        counts[f.kind] = counts.get(f.kind, 0) + 1
    return counts


def validate(fact: BraidFactorization) -> ValidationReport:
    report = ValidationReport(census=census(fact))
    d = fact.d
    expected = d * (d - 1)
    total = sum(fact.degrees)
    report.add(
        "exponent_sum",
        total == expected,
        f"sum of degrees {total}" + ("" if total == expected else f" != d(d-1) = {expected}"),
    )
    if d < 2:
        report.add("product_is_full_twist", False, "d < 2 has no full twist")
        return report
    ok = group_equal(fact.product(), full_twist(d))
    report.add(
        "product_is_full_twist",
        ok,
        "" if ok else "ordered product differs from Delta^2 in normal form",
    )
    return report


def _check_position(fact: BraidFactorization, i: int) -> None:
    hi = len(fact) - 1
    if not 1 <= i <= hi:
        raise FactorizationError(f"index {i} out of range 1..{hi}")


def hurwitz_move(fact: BraidFactorization, i: int, direction: Direction = "forward") -> BraidFactorization:
    """Forward: (f_i, f_{i+1}) -> (f_{i+1}, f_{i+1}^-1 f_i f_{i+1}); backward is its inverse."""
    _check_position(fact, i)
    fs = list(fact.factors)
    a, b = fs[i - 1], fs[i]
    if direction == "forward":
        fs[i - 1] = b
        fs[i] = Factor(_shorter(compose(a.conj, b.braid)), a.degree)
    elif direction == "backward":
        fs[i - 1] = Factor(_shorter(compose(b.conj, invert(a.braid))), b.degree)
        fs[i] = a
    else:
        raise FactorizationError(f"unknown direction {direction!r}")
    return fact.with_factors(fs)


def global_conjugate(fact: BraidFactorization, q: BraidWord) -> BraidFactorization:
    if q.d != fact.d:
        raise FactorizationError(f"strand-count mismatch: B_{q.d} vs B_{fact.d}")
    return fact.with_factors(Factor(_shorter(compose(f.conj, q)), f.degree) for f in fact.factors)


def cancel_pair(fact: BraidFactorization, i: int) -> BraidFactorization:
    _check_position(fact, i)
    a, b = fact.factors[i - 1], fact.factors[i]
    if sorted((a.degree, b.degree)) != [-2, 2]:
        raise FactorizationError(f"degrees not +-2 at positions {i}, {i + 1}: {a.degree}, {b.degree}")
    if not compose(a.braid, b.braid).is_identity():
        raise FactorizationError(f"factors at positions {i}, {i + 1} are not mutual inverses")
    fs = list(fact.factors)
    del fs[i - 1 : i + 1]
    return fact.with_factors(fs)


def create_pair(
    fact: BraidFactorization, i: int, q: BraidWord, theta: MonodromyRep
) -> BraidFactorization:
    """Insert (Q,-2),(Q,2) so that they occupy positions i and i+1.

    Admissible only when theta(g1*Q), theta(g2*Q) are distinct disjoint
    transpositions.  Compatibility of theta with ``fact`` is the caller's
    precondition and is preserved.
    """
    if not 1 <= i <= len(fact) + 1:
        raise FactorizationError(f"insertion index {i} out of range 1..{len(fact) + 1}")
    if q.d != fact.d or theta.d != fact.d:
        raise FactorizationError("strand-count mismatch between factorization, braid and theta")
    a, b = factor_transpositions(theta, q)
    if set(a) & set(b):
        raise FactorizationError(
            f"pair creation not admissible: theta(g1*Q) = {a} and theta(g2*Q) = {b} "
            "are not disjoint commuting transpositions"
        )
    fs = list(fact.factors)
    fs[i - 1 : i - 1] = [Factor(q, -2), Factor(q, 2)]
    return fact.with_factors(fs)


def smooth_curve_factorization(d: int) -> BraidFactorization:
    """d(d-1) tangencies: the letters of (s1 ... s_{d-1})^d, each written as Q^-1 s1 Q.

    sigma_k = delta^{k-1} s1 delta^{-(k-1)} with delta = s1...s_{d-1}, so Q = delta^{-(k-1)}.
    """
    if d < 2:
        raise FactorizationError("smooth curve factorization needs d >= 2")
    delta_inv = invert(BraidWord(d, tuple(range(1, d))))
    factors = []
    for k in list(range(1, d)) * d:
        factors.append(Factor(delta_inv ** (k - 1) if k > 1 else BraidWord.identity(d), 1))
    return BraidFactorization(d, tuple(factors))

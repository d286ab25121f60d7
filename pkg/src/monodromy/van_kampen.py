"""
Fundamental group presentations of curve complements from braid factorizations.

Each factor (Q, r) with a = g1*Q and b = g2*Q contributes one relator:
tangency a b^-1, node [a, b] = a b a^-1 b^-1, cusp (a b a)(b a b)^-1.
Projective mode adds g1 g2 ... gd.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .factorization import BraidFactorization, FactorizationError, validate
from .freegroup import FreeWord, artin_act, boundary_word, format_free
from .smith import hermite_row_basis, invariant_factors

__all__ = [
    "GroupPresentation",
    "AbelianInvariants",
    "presentation_from_factorization",
    "tietze_simplify",
    "abelianization",
    "relation_matrix",
    "relation_lattice",
]

Mode = Literal["affine", "projective"]


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relations: tuple[FreeWord, ...] = ()

    def __post_init__(self) -> None:
        rels = tuple(self.relations)
        for r in rels:
            if r.rank != self.generator_count:
                raise ValueError(f"relation of rank {r.rank} in a presentation on {self.generator_count} generators")
        object.__setattr__(self, "relations", rels)

    def total_length(self) -> int:
        return sum(len(r) for r in self.relations)

    def to_dict(self) -> dict:
        return {
            "generators": [f"g{i}" for i in range(1, self.generator_count + 1)],
            "relations": [format_free(r) for r in self.relations],
        }

    def __str__(self) -> str:
        gens = ", ".join(f"g{i}" for i in range(1, self.generator_count + 1))
        rels = ", ".join(format_free(r) for r in self.relations)
        return f"< {gens} | {rels} >"


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def factor_relation(d: int, conj, degree: int) -> FreeWord:
    a = artin_act(FreeWord.generator(d, 1), conj)
    b = artin_act(FreeWord.generator(d, 2), conj)
    if degree == 1:
        return a * b.inverse()
    if abs(degree) == 2:
        return a * b * a.inverse() * b.inverse()
    if abs(degree) == 3:
        return a * b * a * (b * a * b).inverse()
    raise FactorizationError(f"no relation for degree {degree}")


def presentation_from_factorization(fact: BraidFactorization, mode: Mode = "projective") -> GroupPresentation:
    if mode not in ("affine", "projective"):
        raise ValueError(f"unknown mode {mode!r}")
    if not fact.factors:
        raise FactorizationError("presentation needs a non-empty factorization")
    report = validate(fact)
    if not report.passed:
        why = "; ".join(c.detail or c.name for c in report.failures())
        raise FactorizationError(f"presentation needs a valid factorization: {why}")
    rels = [factor_relation(fact.d, f.conj, f.degree) for f in fact.factors]
    if mode == "projective":
        rels.append(boundary_word(fact.d))
    return GroupPresentation(fact.d, tuple(rels))


# ---------------------------------------------------------------------------
# Tietze moves
# ---------------------------------------------------------------------------


def _free_reduce(letters) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return letters[lo:hi]


def _canonical_relator(letters: tuple[int, ...]) -> tuple[int, ...]:
    """Least rotation of the relator or its inverse, to detect duplicates."""
    if not letters:
        return ()
    inv = tuple(-x for x in reversed(letters))
    cands = []
    for w in (letters, inv):
        for k in range(len(w)):
            cands.append(w[k:] + w[:k])
    return min(cands)


def _substitute(letters: tuple[int, ...], gen: int, image: tuple[int, ...]) -> list[int]:
    out: list[int] = []
    for x in letters:
        if abs(x) == gen:
            chunk = image if x > 0 else tuple(-y for y in reversed(image))
        else:
            chunk = (x,)
        for y in chunk:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return out


def _cleanup(rels: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in rels:
        r = _cyclic_reduce(_free_reduce(r))
        if not r:
            continue
        key = _canonical_relator(r)
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def tietze_simplify(p: GroupPresentation, max_passes: int = 100) -> GroupPresentation:
    """Reduce, deduplicate, and eliminate generators occurring exactly once in some relator.

    Every step is a Tietze transformation, so the group is unchanged.  An
    elimination is skipped if it would push the total relator length past
    4x the input length.
    """
    limit = 4 * max(p.total_length(), 1)
    gens = list(range(1, p.generator_count + 1))
    rels = _cleanup([r.letters for r in p.relations])
    for _ in range(max_passes):
        best = None
        for ri, r in enumerate(rels):
            counts: dict[int, int] = {}
            for x in r:
                counts[abs(x)] = counts.get(abs(x), 0) + 1
            for g, c in counts.items():
                if c != 1:
                    continue
                cand = (len(r), -g, ri)
                if best is None or cand < best[0]:
                    best = (cand, g, ri)
        if best is None:
            break
        _, g, ri = best
        r = rels[ri]
        k = next(i for i, x in enumerate(r) if abs(x) == g)
        # r = u g^e v = 1  =>  g^e = u^-1 v^-1  =>  g = (v u)^-e
        rotated = r[k + 1 :] + r[:k]
        e = 1 if r[k] > 0 else -1
        image = tuple(-x for x in reversed(rotated)) if e > 0 else rotated
        new_rels = [tuple(_substitute(s, g, image)) for j, s in enumerate(rels) if j != ri]
        if sum(len(s) for s in new_rels) > limit:
            break
        gens.remove(g)
        rels = _cleanup(new_rels)
    # renumber surviving generators as 1..k
    index = {g: i for i, g in enumerate(gens, start=1)}
    renum = [tuple((1 if x > 0 else -1) * index[abs(x)] for x in r) for r in rels]
    return GroupPresentation(len(gens), tuple(FreeWord(len(gens), r) for r in renum))


def relation_matrix(p: GroupPresentation) -> list[list[int]]:
    rows = []
    for r in p.relations:
        row = [0] * p.generator_count
        for x in r.letters:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    rows = relation_matrix(p)
    factors = invariant_factors(rows, p.generator_count) if rows else []
    rank = len(factors)
    return AbelianInvariants(p.generator_count - rank, tuple(t for t in factors if t > 1))


def relation_lattice(p: GroupPresentation) -> list[tuple[int, ...]]:
    """Canonical basis of the abelianized relator lattice."""
    return hermite_row_basis(relation_matrix(p), p.generator_count)

"""
Chains of braid factorizations rho_2, ..., rho_n over a base representation theta_1.

Level 1 is checked exactly.  Level 2 uses the homological image of theta_2:
each generator of the level-2 free group goes to the transvection of the
matching tangency factor of rho_2.  Levels 3 and up carry mapping-class data
with no decidable equality here, so only their structure is checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cover import CoverError, CoverModel, SymplecticAction, build_cover, lift_action, transvection, vanishing_class
from .braid import full_twist
from .factorization import BraidFactorization, census, validate
from .freegroup import FreeWord, artin_act
from .report import ValidationReport
from .representation import (
    MonodromyRep,
    act_on_images,
    check_compatibility,
    non_liftable_factors,
    validate_rep,
)
from .smith import matmul

__all__ = [
    "InductionError",
    "LinearSystemData",
    "derive_theta2_shadow",
    "validate_chain",
    "STRUCTURAL_NOTE",
]

STRUCTURAL_NOTE = "levels >= 3 structurally checked, not verified (no decidable mapping-class equality)"


class InductionError(ValueError):
    def __init__(self, failures: list[str]) -> None:
        super().__init__("; ".join(failures))
        self.failures = failures


@dataclass(frozen=True)
class LinearSystemData:
    n: int
    theta1: MonodromyRep
    rhos: tuple[BraidFactorization, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rhos", tuple(self.rhos))
        if self.n < 2:
            raise ValueError(f"half-dimension n must be >= 2, got {self.n}")

    def level(self, r: int) -> BraidFactorization:
        """rho_r for r >= 2."""
        return self.rhos[r - 2]


def _tangency_count(fact: BraidFactorization) -> int:
    return sum(1 for f in fact.factors if f.degree == 1)


def _level1_failures(data: LinearSystemData) -> list[str]:
    if not data.rhos:
        return ["no rho_2 factorization"]
    theta, rho2 = data.theta1, data.rhos[0]
    out = [f"theta1: {c.name}: {c.detail}" for c in validate_rep(theta).failures()]
    out += [f"rho_2: {c.name}: {c.detail}" for c in validate(rho2).failures()]
    if theta.d != rho2.d:
        out.append(f"rho_2 has braid index {rho2.d}, theta1 has d={theta.d}")
        return out
    out += [f"compatibility: {c.detail}" for c in check_compatibility(theta, rho2).failures()]
    bad = non_liftable_factors(theta, rho2)
    if bad:
        out.append("rho_2 factors " + ", ".join(map(str, bad)) + " are not liftable")
    return out


def _shadow(cover: CoverModel, rho2: BraidFactorization) -> list[SymplecticAction]:
    return [transvection(vanishing_class(cover, f), cover.J) for f in rho2.factors if f.degree == 1]


def derive_theta2_shadow(data: LinearSystemData) -> list[SymplecticAction]:
    """Transvections of the tangency factors of rho_2, in order."""
    failures = _level1_failures(data)
    if failures:
        raise InductionError(failures)
    try:
        cover = build_cover(data.theta1)
        return _shadow(cover, data.rhos[0])
    except CoverError as exc:
        raise InductionError([f"cover: {exc}"]) from exc


def _inverse(m: SymplecticAction, J) -> SymplecticAction:
    # symplectic: M^-1 = -J M^T J
    if m.size == 0:
        return m
    mt = [list(r) for r in zip(*m.matrix)]
    return SymplecticAction.of([[-x for x in r] for r in matmul(matmul(J, mt), J)])


def _class_of(word: FreeWord, classes: list[list[int]], shadow: list[SymplecticAction], J) -> list[int]:
    """Vanishing class of u g_j u^-1 under the shadow representation: v_j psi(u)^-1."""
    letters = word.letters
    mid = len(letters) // 2
    if len(letters) % 2 == 0 or letters[mid] < 0:
        raise ValueError(f"{letters} is not a conjugate of a generator")
    j = letters[mid]
    size = len(J)
    psi = SymplecticAction.identity(size)
    for x in letters[:mid]:
        t = shadow[abs(x) - 1]
        psi = psi @ (t if x > 0 else _inverse(t, J))
    return _inverse(psi, J).apply(classes[j - 1]) if size else []


def _level2_rho3(
    report: ValidationReport, cover: CoverModel, rho2: BraidFactorization, rho3: BraidFactorization
) -> None:
    J = cover.J
    size = cover.rank
    tangencies = [f for f in rho2.factors if f.degree == 1]
    shadow = _shadow(cover, rho2)
    classes = [list(vanishing_class(cover, f) or [0] * size) for f in tangencies]
    if rho3.d != len(shadow):
        report.add("level2.rho3_clauses", False, f"rho_3 has braid index {rho3.d}, theta_2 shadow has {len(shadow)} generators")
        return

    def mul(a, b):
        return a @ b

    def inv(a):
        return _inverse(a, J)

    clause_bad = []
    lift_bad = []
    for j, f in enumerate(rho3.factors, start=1):
        images = act_on_images(shadow, f.conj, mul, inv)
        a, b = images[0], images[1]
        if f.degree == 1:
            if a != b:
                clause_bad.append(f"factor {j} (deg 1): transvections differ")
        else:
            ca = _class_of(artin_act(FreeWord.generator(rho3.d, 1), f.conj), classes, shadow, J)
            cb = _class_of(artin_act(FreeWord.generator(rho3.d, 2), f.conj), classes, shadow, J)
            k = cover.intersection(ca, cb) if size else 0
            if abs(f.degree) == 2 and k != 0:
                clause_bad.append(f"factor {j} (deg {f.degree}): intersection {k} != 0")
            if abs(f.degree) == 3 and abs(k) != 1:
                clause_bad.append(f"factor {j} (deg {f.degree}): intersection {k} != +-1")
        if act_on_images(shadow, f.braid, mul, inv) != shadow:
            lift_bad.append(str(j))
    report.add("level2.rho3_clauses", not clause_bad, "; ".join(clause_bad))
    report.add(
        "level2.rho3_liftability",
        not lift_bad,
        "" if not lift_bad else "rho_3 factors " + ", ".join(lift_bad) + " do not stabilize the theta_2 shadow",
    )


def validate_chain(data: LinearSystemData, chain_check: bool = True) -> ValidationReport:
    report = ValidationReport()
    report.add(
        "structure.length",
        len(data.rhos) == data.n - 1,
        f"{len(data.rhos)} factorizations for n={data.n}" + ("" if len(data.rhos) == data.n - 1 else f", expected {data.n - 1}"),
    )
    if not data.rhos:
        return report
    rho2 = data.rhos[0]
    report.census = {f"rho{r}_tangency": census(data.level(r))["tangency"] for r in range(2, len(data.rhos) + 2)}

    # level 1
    theta = data.theta1
    rep = validate_rep(theta)
    report.add("level1.theta1_valid", rep.passed, "; ".join(c.detail for c in rep.failures()))
    fv = validate(rho2)
    report.add("level1.rho2_valid", fv.passed, "; ".join(c.detail for c in fv.failures()))
    index_ok = theta.d == rho2.d
    report.add(
        "chain.rho2_index",
        index_ok,
        f"expected {theta.d}, got {rho2.d}" if not index_ok else f"{rho2.d}",
    )
    if not index_ok:
        return report
    compat = check_compatibility(theta, rho2)
    report.add("level1.compatibility", compat.passed, "; ".join(c.detail for c in compat.failures()))
    bad = non_liftable_factors(theta, rho2)
    report.add(
        "level1.liftability",
        not bad,
        "" if not bad else "rho_2 factors " + ", ".join(map(str, bad)) + " are not liftable",
    )

    # index chaining for r >= 3
    if chain_check:
        for r in range(3, len(data.rhos) + 2):
            expected = _tangency_count(data.level(r - 1))
            got = data.level(r).d
            report.add(
                f"chain.rho{r}_index",
                expected == got,
                f"expected {expected} (tangencies of rho_{r - 1}), got {got}",
            )
    else:
        report.notes.append("index chaining not checked")

    # level 2
    if report.passed:
        try:
            cover = build_cover(theta)
            shadow = _shadow(cover, rho2)
        except CoverError as exc:
            report.add("level2.shadow", False, str(exc))
        else:
            ok = all(m.preserves(cover.J) for m in shadow)
            report.add("level2.shadow", ok, f"{len(shadow)} transvections in Sp({cover.rank}, Z)")
            product = SymplecticAction.identity(cover.rank)
            for f in rho2.factors:
                product = product @ lift_action(cover, f.braid)
            twist_ok = product == lift_action(cover, full_twist(rho2.d))
            report.add(
                "level2.product_identity",
                twist_ok,
                "" if twist_ok else "product of rho_2 lifts is not the lift of the full twist",
            )
            if len(data.rhos) >= 2:
                rho3 = data.rhos[1]
                v3 = validate(rho3)
                report.add("level2.rho3_valid", v3.passed, "; ".join(c.detail for c in v3.failures()))
                _level2_rho3(report, cover, rho2, rho3)

    # levels >= 3: structure only
    for r in range(4, len(data.rhos) + 2):
        rho = data.level(r)
        v = validate(rho)
        report.add(f"level{r - 1}.rho{r}_valid", v.passed, "; ".join(c.detail for c in v.failures()))
    if len(data.rhos) >= 3:
        report.notes.append(STRUCTURAL_NOTE)
    return report


def structural_only(data: LinearSystemData) -> bool:
    return len(data.rhos) >= 3


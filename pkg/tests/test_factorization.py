import random

import pytest

from helpers import conic, nodal_cubic, quartic, random_valid_factorization, random_word
from monodromy.braid import BraidWord, compose, exponent_sum, full_twist, group_equal, invert
from monodromy.factorization import (
    BraidFactorization,
    Factor,
    FactorizationError,
    cancel_pair,
    census,
    create_pair,
    global_conjugate,
    hurwitz_move,
    smooth_curve_factorization,
    underlying_braid,
    validate,
)
from monodromy.representation import MonodromyRep

E2, E3 = BraidWord(2, ()), BraidWord(3, ())


def braids(fact):
    return [f.braid for f in fact.factors]


def same_braids(a, b):
    return len(a) == len(b) and all(group_equal(x, y) for x, y in zip(braids(a), braids(b)))


class TestUnderlyingBraid:
    def test_examples(self):
        assert underlying_braid(Factor(E2, 1)).letters == (1,)
        assert underlying_braid(Factor(E2, 2)).letters == (1, 1)
        assert underlying_braid(Factor(BraidWord(3, (2,)), 1)).letters == (-2, 1, 2)

    def test_negative_degree(self):
        assert underlying_braid(Factor(E3, -2)).letters == (-1, -1)

    def test_degree_gate(self):
        with pytest.raises(FactorizationError, match="unsupported degree -3"):
            BraidFactorization(3, (Factor(E3, -3),))
        assert BraidFactorization(3, (Factor(E3, -3),), allow_negative_cusps=True).degrees == (-3,)
        with pytest.raises(FactorizationError):
            BraidFactorization(3, (Factor(E3, 4),))


class TestValidate:
    def test_conic(self):
        report = validate(BraidFactorization(2, (Factor(E2, 1), Factor(E2, 1))))
        assert report.passed
        assert report.census["tangency"] == 2

    def test_cubic_standard_form(self):
        q = BraidWord(3, (-2, -1))
        fact = BraidFactorization(3, (Factor(E3, 1), Factor(q, 1)) * 3)
        assert validate(fact).passed

    def test_exponent_sum_failure(self):
        report = validate(BraidFactorization(2, (Factor(E2, 1),)))
        assert not report.passed
        assert "1" in report.get("exponent_sum").detail
        assert not report.get("exponent_sum").passed

    def test_right_exponent_wrong_braid(self):
        fact = BraidFactorization(3, (Factor(E3, 1),) * 6)
        report = validate(fact)
        assert report.get("exponent_sum").passed
        assert not report.get("product_is_full_twist").passed

    @pytest.mark.parametrize("d", range(2, 7))
    def test_smooth_curves(self, d):
        fact = smooth_curve_factorization(d)
        assert len(fact) == d * (d - 1)
        assert validate(fact).passed

    def test_census_keys(self):
        assert census(nodal_cubic()) == {"tangency": 2, "node_positive": 2, "node_negative": 0, "cusp": 0}


class TestMoves:
    def test_hurwitz_conic(self):
        fact, _ = conic()
        moved = hurwitz_move(fact, 1, "forward")
        assert [f.conj.letters for f in moved.factors] == [(), (1,)]
        assert moved.degrees == (1, 1)
        assert validate(moved).passed

    def test_hurwitz_round_trip(self):
        fact, _ = quartic()
        for i in range(1, len(fact)):
            back = hurwitz_move(hurwitz_move(fact, i, "forward"), i, "backward")
            assert same_braids(back, fact)
            back = hurwitz_move(hurwitz_move(fact, i, "backward"), i, "forward")
            assert same_braids(back, fact)

    def test_hurwitz_range(self):
        fact, _ = conic()
        with pytest.raises(FactorizationError, match="out of range"):
            hurwitz_move(fact, 2)

    def test_global_conjugate_conic(self):
        fact, _ = conic()
        conj = global_conjugate(fact, BraidWord(2, (1,)))
        assert [f.conj.letters for f in conj.factors] == [(1,), (1,)]
        assert validate(conj).passed

    def test_global_conjugate_identity(self):
        fact, _ = quartic()
        assert global_conjugate(fact, BraidWord(4, ())) == fact

    def test_global_conjugate_mismatch(self):
        fact, _ = conic()
        with pytest.raises(FactorizationError, match="mismatch"):
            global_conjugate(fact, BraidWord(3, ()))

    def test_cancel(self):
        q = BraidWord(3, (1, -2))
        base = smooth_curve_factorization(3)
        fs = list(base.factors)
        fs[2:2] = [Factor(q, -2), Factor(q, 2)]
        fact = base.with_factors(fs)
        assert validate(fact).passed
        assert cancel_pair(fact, 3) == base

    def test_cancel_wrong_degrees(self):
        fact, _ = conic()
        with pytest.raises(FactorizationError, match="degrees not"):
            cancel_pair(fact, 1)

    def test_cancel_not_inverse(self):
        q = BraidWord(3, (1,))
        q2 = compose(q, BraidWord(3, (2,)))
        a, b = Factor(q, -2), Factor(q2, 2)
        assert not group_equal(a.braid, invert(b.braid))
        fact = BraidFactorization(3, (a, b))
        with pytest.raises(FactorizationError, match="not mutual inverses"):
            cancel_pair(fact, 1)

    def test_create_rejected_for_double_cover(self):
        fact, theta = quartic()
        for q in (BraidWord(4, ()), BraidWord(4, (1,)), BraidWord(4, (2, -3))):
            with pytest.raises(FactorizationError, match=r"\(1, 2\)"):
                create_pair(fact, 1, q, theta)

    def test_create_then_cancel(self):
        d4 = smooth_curve_factorization(4)
        theta = MonodromyRep(4, 4, ((1, 2), (3, 4), (3, 4), (1, 2)))
        created = create_pair(d4, 5, BraidWord(4, ()), theta)
        assert created.degrees[4:6] == (-2, 2)
        assert validate(created).passed
        assert cancel_pair(created, 5) == d4

    def test_create_range(self):
        d4 = smooth_curve_factorization(4)
        theta = MonodromyRep(4, 4, ((1, 2), (3, 4), (3, 4), (1, 2)))
        with pytest.raises(FactorizationError, match="out of range"):
            create_pair(d4, 14, BraidWord(4, ()), theta)


class TestProperties:
    def test_moves_preserve_validity(self):
        rng = random.Random(4)
        theta_for = {
            d: MonodromyRep(d, 4, tuple(((1, 2), (3, 4))[k % 2] for k in range(d))) for d in range(2, 5)
        }
        for _ in range(60):
            fact = random_valid_factorization(rng)
            assert validate(fact).passed
            total = sum(fact.degrees)
            counts = census(fact)
            i = rng.randint(1, len(fact) - 1)
            for direction in ("forward", "backward"):
                moved = hurwitz_move(fact, i, direction)
                assert validate(moved).passed
                assert census(moved) == counts
                assert sum(moved.degrees) == total
            conj = global_conjugate(fact, random_word(rng, fact.d, 4))
            assert validate(conj).passed and sum(conj.degrees) == total
            if fact.d >= 3:
                created = create_pair(fact, rng.randint(1, len(fact) + 1), BraidWord(fact.d, ()), theta_for[fact.d])
                assert validate(created).passed and sum(created.degrees) == total
            for j in range(1, len(fact)):
                try:
                    cancelled = cancel_pair(fact, j)
                except FactorizationError:
                    continue
                assert validate(cancelled).passed and sum(cancelled.degrees) == total

    def test_product_exponent_sum(self):
        rng = random.Random(9)
        for _ in range(30):
            fact = random_valid_factorization(rng)
            assert exponent_sum(fact.product()) == sum(fact.degrees) == fact.d * (fact.d - 1)
            assert group_equal(fact.product(), full_twist(fact.d))

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import conic, hyperelliptic, quartic, random_theta, random_word, words
from monodromy.braid import BraidError, BraidWord, Permutation, compose, invert
from monodromy.factorization import (
    BraidFactorization,
    Factor,
    global_conjugate,
    hurwitz_move,
    smooth_curve_factorization,
)
from monodromy.freegroup import FreeWord, artin_act, boundary_word
from monodromy.representation import (
    MonodromyRep,
    check_compatibility,
    conjugated_rep,
    evaluate,
    is_liftable,
    is_liftable_by_words,
    liftability_of_factorization,
    validate_rep,
)

ALTERNATING = MonodromyRep(6, 3, ((1, 2), (2, 3)) * 3)


class TestEvaluate:
    def test_generators(self):
        for i in range(1, 7):
            assert evaluate(ALTERNATING, FreeWord.generator(6, i)) == ALTERNATING.permutation(i)

    def test_boundary(self):
        assert evaluate(ALTERNATING, boundary_word(6)).is_identity()

    def test_hyperelliptic_pair(self):
        assert evaluate(hyperelliptic(4), FreeWord(4, (1, 2))).is_identity()

    def test_rank_mismatch(self):
        with pytest.raises(BraidError):
            evaluate(ALTERNATING, FreeWord(5, (1,)))


class TestValidateRep:
    def test_valid(self):
        assert validate_rep(hyperelliptic(4)).passed

    def test_odd_product(self):
        report = validate_rep(MonodromyRep(3, 2, ((1, 2),) * 3))
        assert not report.get("product_identity").passed
        assert "(1 2)" in report.get("product_identity").detail
        assert report.get("transitive").passed

    def test_not_transitive(self):
        report = validate_rep(MonodromyRep(2, 3, ((1, 2), (1, 2))))
        assert not report.get("transitive").passed
        assert "[3]" in report.get("transitive").detail
        assert report.get("product_identity").passed

    def test_degenerate_image(self):
        report = validate_rep(MonodromyRep(2, 2, ((1, 1), (1, 2))))
        assert not report.get("transpositions").passed

    def test_out_of_range(self):
        with pytest.raises(BraidError):
            MonodromyRep(2, 2, ((1, 3), (1, 2)))

    def test_random_thetas_valid(self):
        rng = random.Random(1)
        for _ in range(50):
            n = rng.randint(2, 4)
            d = 2 * rng.randint(n - 1, 6)
            assert validate_rep(random_theta(rng, d, n)).passed


class TestCompatibility:
    def test_conic(self):
        fact, theta = conic()
        assert check_compatibility(theta, fact).passed

    def test_conic_degree_mutation(self):
        fact, theta = conic()
        bad = fact.with_factors((Factor(BraidWord(2, ()), 3), fact.factors[1]))
        report = check_compatibility(theta, bad)
        assert not report.passed
        assert "factor 1 (deg 3)" in report.get("factor_clauses").detail

    def test_quartic(self):
        fact, theta = quartic()
        assert check_compatibility(theta, fact).passed

    def test_rank_mismatch(self):
        fact, _ = conic()
        assert not check_compatibility(hyperelliptic(4), fact).get("rank").passed

    def test_node_clause(self):
        theta = MonodromyRep(4, 3, ((1, 2), (2, 3), (2, 3), (1, 2)))
        e = BraidWord(4, ())
        fact = BraidFactorization(4, (Factor(BraidWord(4, (2,)), 1), Factor(e, 2)))
        report = check_compatibility(theta, fact)
        assert report.get("transitive").passed
        # factor 2: theta(g1) = (1 2) and theta(g2) = (2 3) overlap
        assert "factor 2 (deg 2): (1, 2) vs (2, 3)" in report.get("factor_clauses").detail

    def test_invariant_under_hurwitz(self):
        fact, theta = quartic()
        rng = random.Random(3)
        for _ in range(10):
            fact = hurwitz_move(fact, rng.randint(1, len(fact) - 1), rng.choice(("forward", "backward")))
            assert check_compatibility(theta, fact).passed

    def test_global_conjugation_companion(self):
        rng = random.Random(8)
        base = smooth_curve_factorization(4)
        theta = hyperelliptic(4)
        for _ in range(20):
            q = random_word(rng, 4, 6)
            new_theta = conjugated_rep(theta, q)
            assert validate_rep(new_theta).passed
            assert check_compatibility(theta, base).passed == check_compatibility(new_theta, global_conjugate(base, q)).passed
        # an incompatible pair stays incompatible after the joint change
        theta3 = MonodromyRep(4, 3, ((1, 2), (1, 2), (2, 3), (2, 3)))
        q = BraidWord(4, (2, -1))
        assert not check_compatibility(theta3, base).passed
        assert not check_compatibility(conjugated_rep(theta3, q), global_conjugate(base, q)).passed


class TestLiftability:
    def test_identity(self):
        assert is_liftable(ALTERNATING, BraidWord(6, ()))

    def test_alternating_s1(self):
        assert not is_liftable(ALTERNATING, BraidWord(6, (1,)))
        assert not is_liftable_by_words(ALTERNATING, BraidWord(6, (1,)))

    @given(st.integers(2, 8).map(lambda k: 2 * (k // 2) or 2).flatmap(lambda d: words(d, 20)))
    def test_hyperelliptic_everything_liftable(self, q):
        assert is_liftable(hyperelliptic(q.d), q)

    def test_factorizations(self):
        for fact, theta in (conic(), quartic()):
            assert liftability_of_factorization(theta, fact)

    def test_rank_mismatch(self):
        with pytest.raises(BraidError):
            is_liftable(ALTERNATING, BraidWord(4, (1,)))

    def test_routes_agree(self):
        rng = random.Random(6)
        for _ in range(200):
            theta = random_theta(rng, 6, 3)
            q = random_word(rng, 6, 6)
            assert is_liftable(theta, q) == is_liftable_by_words(theta, q)

    def test_subgroup(self):
        rng = random.Random(7)
        theta = ALTERNATING
        liftable = []
        while len(liftable) < 30:
            q = random_word(rng, 6, 5)
            if is_liftable(theta, q):
                liftable.append(q)
        for a, b in zip(liftable, liftable[1:]):
            assert is_liftable(theta, compose(a, b))
            assert is_liftable(theta, invert(a))

    def test_inverse_closed(self):
        rng = random.Random(12)
        for _ in range(200):
            theta = random_theta(rng, 8, 4)
            q = random_word(rng, 8, 6)
            assert is_liftable(theta, q) == is_liftable(theta, invert(q))

    def test_compatibility_implies_liftability(self):
        rng = random.Random(13)
        seen = 0
        for _ in range(300):
            theta = random_theta(rng, 4, rng.randint(2, 3))
            q = random_word(rng, 4, 4)
            fact = global_conjugate(smooth_curve_factorization(4), q)
            if check_compatibility(theta, fact).passed:
                seen += 1
                assert liftability_of_factorization(theta, fact)
        assert seen > 0


def test_permutation_of_word_matches_artin_route():
    # theta o Q_* images equal evaluations of the explicit words g_i * Q
    rng = random.Random(21)
    for _ in range(100):
        theta = random_theta(rng, 6, 3)
        q = random_word(rng, 6, 8)
        new = conjugated_rep(theta, q)
        for i in range(1, 7):
            expect = evaluate(theta, artin_act(FreeWord.generator(6, i), q))
            assert new.permutation(i) == expect
    assert Permutation.identity(3).is_identity()

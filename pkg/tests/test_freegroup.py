import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import random_word, words
from monodromy.braid import BraidError, BraidWord, compose, invert, permutation_image
from monodromy.freegroup import (
    FreeWord,
    act_is_automorphism_check,
    artin_act,
    boundary_word,
    format_free,
    free_reduce,
    parse_free_text,
)


def F(rank, *letters):
    return FreeWord(rank, letters)


def free_words(rank, max_len=12):
    letter = st.integers(1, rank).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(lambda xs: FreeWord(rank, tuple(xs)))


def test_free_reduce_examples():
    assert free_reduce(F(2, 1, 2, -2)) == F(2, 1)
    assert free_reduce(F(2)).letters == ()
    assert free_reduce(F(2, 1, -1, 2, -2)).letters == ()


def test_reduction_is_eager_and_nested():
    assert F(3, 1, 2, 3, -3, -2, -1).letters == ()


@given(free_words(4))
def test_free_reduce_idempotent(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))


def test_artin_act_generator():
    assert artin_act(F(2, 1), BraidWord(2, (1,))) == F(2, 1, 2, -1)
    assert artin_act(F(2, 2), BraidWord(2, (1,))) == F(2, 1)
    assert artin_act(F(2, 1), BraidWord(2, (-1,))) == F(2, 2)
    assert artin_act(F(2, 2), BraidWord(2, (-1,))) == F(2, -2, 1, 2)


def test_artin_act_group_law_trivial():
    assert artin_act(F(2, 2), BraidWord(2, (1, -1))) == F(2, 2)


def test_rank_mismatch():
    with pytest.raises(BraidError):
        artin_act(F(3, 1), BraidWord(4, (1,)))


@pytest.mark.parametrize("d", range(2, 7))
def test_generators_are_automorphisms(d):
    for i in range(1, d):
        assert act_is_automorphism_check(BraidWord(d, (i,)))
        assert act_is_automorphism_check(BraidWord(d, (-i,)))


def test_random_automorphisms():
    rng = random.Random(2)
    for _ in range(100):
        d = rng.randint(2, 6)
        assert act_is_automorphism_check(random_word(rng, d, 15))


@given(st.integers(2, 6).flatmap(lambda d: st.tuples(free_words(d), words(d, 12))))
def test_inverse_action(pair):
    w, q = pair
    assert artin_act(artin_act(w, q), invert(q)) == w


@given(st.integers(2, 6).flatmap(lambda d: words(d, 20)))
def test_boundary_word_fixed(q):
    assert artin_act(boundary_word(q.d), q) == boundary_word(q.d)


@given(st.integers(2, 5).flatmap(lambda d: st.tuples(free_words(d), words(d, 8), words(d, 8))))
def test_functorial(triple):
    w, q, r = triple
    assert artin_act(w, compose(q, r)) == artin_act(artin_act(w, q), r)


@given(st.integers(2, 5).flatmap(lambda d: st.tuples(free_words(d), free_words(d), words(d, 8))))
def test_multiplicative(triple):
    a, b, q = triple
    assert artin_act(a * b, q) == artin_act(a, q) * artin_act(b, q)


@given(st.integers(2, 6).flatmap(lambda d: words(d, 15)))
def test_generators_go_to_conjugates_tracked_by_permutation(q):
    # g_i * q = u g_j u^-1 where j is the final position of the strand starting at i
    perm = permutation_image(q)
    for i in range(1, q.d + 1):
        letters = artin_act(F(q.d, i), q).letters
        mid = len(letters) // 2
        assert len(letters) % 2 == 1
        u, centre, v = letters[:mid], letters[mid], letters[mid + 1 :]
        assert v == tuple(-x for x in reversed(u))
        assert centre == perm(i)


def test_text_round_trip():
    w = F(3, 1, -2, 3)
    assert format_free(w) == "g1 g2^-1 g3"
    assert parse_free_text(format_free(w), 3) == w
    assert parse_free_text("", 2) == F(2)

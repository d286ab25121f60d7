from __future__ import annotations

import random
from pathlib import Path

from hypothesis import strategies as st

from monodromy.braid import BraidWord
from monodromy.factorization import (
    BraidFactorization,
    Factor,
    global_conjugate,
    hurwitz_move,
    smooth_curve_factorization,
)
from monodromy.io import load_factorization, load_linear_system, load_theta
from monodromy.representation import MonodromyRep, conjugated_rep

CORPUS = Path(__file__).resolve().parents[1] / "src" / "monodromy" / "corpus"


def corpus(name: str) -> Path:
    return CORPUS / name


def conic():
    return load_factorization(corpus("conic.json")), load_theta(corpus("conic_theta.json"))


def quartic():
    return load_factorization(corpus("quartic.json")), load_theta(corpus("quartic_theta.json"))


def quartic_system():
    return load_linear_system(corpus("quartic_system.json"))


def hyperelliptic(d: int) -> MonodromyRep:
    return MonodromyRep(d, 2, ((1, 2),) * d)


def words(d: int, max_len: int = 20):
    if d < 2:
        return st.just(BraidWord(d, ()))
    letter = st.integers(1, d - 1).flatmap(lambda i: st.sampled_from([i, -i]))
    return st.lists(letter, max_size=max_len).map(lambda xs: BraidWord(d, tuple(xs)))


def random_word(rng: random.Random, d: int, max_len: int) -> BraidWord:
    n = rng.randint(0, max_len)
    return BraidWord(d, tuple(rng.choice((1, -1)) * rng.randint(1, d - 1) for _ in range(n)))


def rewrite_once(rng: random.Random, letters: list[int], d: int) -> list[int]:
    """One random defining-relation rewrite; the group element is unchanged."""
    w = list(letters)
    choice = rng.randrange(4)
    if choice == 0:
        k = rng.randint(0, len(w))
        x = rng.choice((1, -1)) * rng.randint(1, d - 1)
        w[k:k] = [x, -x]
        return w
    for k in rng.sample(range(len(w)), len(w)):
        a = w[k]
        if choice == 1 and k + 1 < len(w) and abs(abs(a) - abs(w[k + 1])) >= 2:
            w[k], w[k + 1] = w[k + 1], a
            return w
        if choice == 2 and k + 2 < len(w):
            x, y, z = w[k : k + 3]
            if x == z and x * y > 0 and abs(abs(x) - abs(y)) == 1:
                w[k : k + 3] = [y, x, y]
                return w
        if choice == 3 and k + 1 < len(w) and w[k + 1] == -a:
            del w[k : k + 2]
            return w
    return w


def cuspidal_cubic() -> BraidFactorization:
    e = BraidWord(3, ())
    return BraidFactorization(3, (Factor(e, 3), Factor(e, 1), Factor(BraidWord(3, (-2,)), 1), Factor(BraidWord(3, (2,)), 1)))


def nodal_cubic() -> BraidFactorization:
    e, q = BraidWord(3, ()), BraidWord(3, (-2, -1))
    return BraidFactorization(3, (Factor(e, 2), Factor(q, 1), Factor(e, 2), Factor(q, 1)))


def base_factorizations(max_d: int = 4) -> list[BraidFactorization]:
    out = [smooth_curve_factorization(d) for d in range(2, max_d + 1)]
    if max_d >= 3:
        out += [cuspidal_cubic(), nodal_cubic()]
    return out


def random_valid_factorization(rng: random.Random, max_d: int = 4, max_factors: int = 12) -> BraidFactorization:
    fact = rng.choice(base_factorizations(max_d))
    if len(fact) + 2 <= max_factors and rng.random() < 0.5:
        q = random_word(rng, fact.d, 3)
        i = rng.randint(0, len(fact))
        fs = list(fact.factors)
        fs[i:i] = [Factor(q, -2), Factor(q, 2)]
        fact = fact.with_factors(fs)
    for _ in range(rng.randint(0, 4)):
        if len(fact) > 1:
            fact = hurwitz_move(fact, rng.randint(1, len(fact) - 1), rng.choice(("forward", "backward")))
    if rng.random() < 0.5:
        fact = global_conjugate(fact, random_word(rng, fact.d, 3))
    return fact


def random_theta(rng: random.Random, d: int, n: int) -> MonodromyRep:
    """Random valid simple theta; needs d even and d >= 2n - 2."""
    k = d // 2
    sheets = list(range(1, n + 1))
    rng.shuffle(sheets)
    pairs = [(sheets[rng.randrange(j)], sheets[j]) for j in range(1, n)]
    while len(pairs) < k:
        a, b = rng.sample(range(1, n + 1), 2)
        pairs.append((a, b))
    rng.shuffle(pairs)
    theta = MonodromyRep(d, n, tuple(pairs + pairs[::-1]))
    return conjugated_rep(theta, random_word(rng, d, 10))

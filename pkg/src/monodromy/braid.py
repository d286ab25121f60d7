"""
Braid groups B_d: words, the Garside word problem, and elementary images.

A braid is stored as a signed sequence of Artin generators, ``i`` for
sigma_i and ``-i`` for its inverse (1-based).  Products read left to right:
``compose(a, b)`` is "a, then b".  Group equality is decided by the Garside
left normal form

    Delta^p  A_1 A_2 ... A_k

where each A_j is a permutation braid (a positive braid in which any two
strands cross at most once) other than 1 and Delta, and every adjacent pair
is left-weighted.  Permutation braids are stored as tuples ``at`` where
``at[p]`` is the (0-based) starting position of the strand that ends at
position ``p``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "BraidError",
    "WordTooLongError",
    "Permutation",
    "BraidWord",
    "GarsideForm",
    "compose",
    "invert",
    "canonical_form",
    "garside_normal_form",
    "group_equal",
    "half_twist",
    "full_twist",
    "exponent_sum",
    "permutation_image",
    "parse_braid_text",
    "format_braid",
]

# Hard cap on word length; raise instead of truncating.
MAX_LETTERS = 10**6


class BraidError(ValueError):
    pass


class WordTooLongError(BraidError):
    pass


# ---------------------------------------------------------------------------
# Permutations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``images[i-1]`` is the image of ``i``.

    Products follow the left-to-right rule used throughout the package:
    ``p * q`` applies ``p`` first, then ``q``.
    """

    images: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        images = list(range(1, n + 1))
        images[a - 1], images[b - 1] = b, a
        return cls(tuple(images))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                images[x - 1] = cyc[(k + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, x in enumerate(self.images, start=1):
            inv[x - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images, start=1))

    def support(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.images, start=1) if x != i)

    def is_transposition(self) -> bool:
        return len(self.support()) == 2

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its least element."""
        seen: set[int] = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


# ---------------------------------------------------------------------------
# Braid words
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    d: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.d < 1:
            raise BraidError(f"strand count must be >= 1, got {self.d}")
        letters = tuple(int(x) for x in self.letters)
        if len(letters) > MAX_LETTERS:
            raise WordTooLongError(
                f"braid word of length {len(letters)} exceeds limit {MAX_LETTERS}"
            )
        for x in letters:
            if x == 0 or abs(x) >= self.d:
                raise BraidError(f"letter {x} is not a generator of B_{self.d}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, d: int) -> BraidWord:
        return cls(d, ())

    @classmethod
    def generator(cls, d: int, i: int) -> BraidWord:
        return cls(d, (i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return compose(self, other)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else invert(self)
        return BraidWord(self.d, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return invert(self)

    def is_identity(self) -> bool:
        return not canonical_form(self).letters

    def freely_reduced(self) -> BraidWord:
        out: list[int] = []
        for x in self.letters:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
        return BraidWord(self.d, tuple(out))

    def __str__(self) -> str:
        return format_braid(self)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.d != b.d:
        raise BraidError(f"strand-count mismatch: B_{a.d} vs B_{b.d}")
    return BraidWord(a.d, a.letters + b.letters)


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.d, tuple(-x for x in reversed(a.letters)))


def exponent_sum(a: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in a.letters)


def permutation_image(a: BraidWord) -> Permutation:
    """Image under sigma_i -> (i i+1), multiplied left to right.

    ``permutation_image(a)(k)`` is the final position of the strand that
    starts at position k.
    """
    images = list(range(1, a.d + 1))
    # at[p] = strand now at position p
    at = list(range(1, a.d + 1))
    for x in a.letters:
        i = abs(x)
        at[i - 1], at[i] = at[i], at[i - 1]
    for pos, strand in enumerate(at, start=1):
        images[strand - 1] = pos
    return Permutation(tuple(images))


def half_twist(d: int) -> BraidWord:
    """The positive half twist Delta = (s1...s_{d-1})(s1...s_{d-2})...(s1)."""
    letters: list[int] = []
    for top in range(d - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(d, tuple(letters))


def full_twist(d: int) -> BraidWord:
    """Delta^2 written as (s1 s2 ... s_{d-1})^d."""
    if d < 2:
        raise BraidError(f"full twist needs d >= 2, got {d}")
    return BraidWord(d, tuple(range(1, d)) * d)


# ---------------------------------------------------------------------------
# Permutation braids
# ---------------------------------------------------------------------------

Simple = tuple[int, ...]


def _identity_simple(d: int) -> Simple:
    return tuple(range(d))


def _delta_simple(d: int) -> Simple:
    return tuple(range(d - 1, -1, -1))


def _starting_set(x: Simple) -> list[int]:
    """0-based i such that sigma_{i+1} is a left divisor of x."""
    pos = [0] * len(x)
    for p, s in enumerate(x):
        pos[s] = p
    return [i for i in range(len(x) - 1) if pos[i] > pos[i + 1]]


def _in_finishing_set(x: Simple, i: int) -> bool:
    return x[i] > x[i + 1]


def _in_starting_set(x: Simple, i: int) -> bool:
    return x.index(i) > x.index(i + 1)


def _tau(x: Simple) -> Simple:
    """Conjugation by Delta: sigma_i <-> sigma_{d-i}."""
    d = len(x)
    return tuple(d - 1 - x[d - 1 - p] for p in range(d))


@lru_cache(maxsize=1 << 18)
def _left_weight(x: Simple, y: Simple) -> tuple[Simple, Simple]:
    """Move generators from the front of y to the back of x while x stays simple."""
    d = len(x)
    x_l, y_l = list(x), list(y)
    changed = True
    while changed:
        changed = False
        for i in range(d - 1):
            if x_l[i] < x_l[i + 1] and y_l.index(i) > y_l.index(i + 1):
                x_l[i], x_l[i + 1] = x_l[i + 1], x_l[i]
                y_l = [i + 1 if s == i else i if s == i + 1 else s for s in y_l]
                changed = True
                break
    return tuple(x_l), tuple(y_l)


@lru_cache(maxsize=1 << 14)
def _simple_word(x: Simple) -> tuple[int, ...]:
    """Lexicographically least positive word (1-based letters) for x."""
    letters = []
    cur = list(x)
    while True:
        starts = _starting_set(tuple(cur))
        if not starts:
            break
        i = starts[0]
        letters.append(i + 1)
        cur = [i + 1 if s == i else i if s == i + 1 else s for s in cur]
    return tuple(letters)


def _generator_simple(d: int, i: int) -> Simple:
    at = list(range(d))
    at[i - 1], at[i] = at[i], at[i - 1]
    return tuple(at)


def _delta_over_generator(d: int, i: int) -> Simple:
    """The simple Delta * sigma_i^{-1}."""
    at = list(_delta_simple(d))
    at[i - 1], at[i] = at[i], at[i - 1]
    return tuple(at)


# ---------------------------------------------------------------------------
# Garside normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GarsideForm:
    """Left normal form Delta^power * factors[0] * factors[1] * ..."""

    d: int
    power: int
    factors: tuple[Simple, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def to_word(self) -> BraidWord:
        delta = half_twist(self.d).letters
        letters: list[int] = []
        if self.power >= 0:
            letters.extend(delta * self.power)
        else:
            inv = tuple(-x for x in reversed(delta))
            letters.extend(inv * (-self.power))
        for f in self.factors:
            letters.extend(_simple_word(f))
        return BraidWord(self.d, tuple(letters))


def _append_simple(factors: list[Simple], s: Simple) -> None:
    factors.append(s)
    j = len(factors) - 1
    while j > 0:
        x, y = factors[j - 1], factors[j]
        nx, ny = _left_weight(x, y)
        if nx == x:
            break
        factors[j - 1], factors[j] = nx, ny
        j -= 1


def _normalize_positive(d: int, simples: Iterable[Simple]) -> tuple[int, tuple[Simple, ...]]:
    ident = _identity_simple(d)
    delta = _delta_simple(d)
    factors: list[Simple] = []
    for s in simples:
        if s == ident:
            continue
        _append_simple(factors, s)
        while factors and factors[-1] == ident:
            factors.pop()
    lead = 0
    while lead < len(factors) and factors[lead] == delta:
        lead += 1
    return lead, tuple(factors[lead:])


@lru_cache(maxsize=1 << 16)
def _garside(d: int, letters: tuple[int, ...]) -> GarsideForm:
    if d == 1:
        return GarsideForm(1, 0, ())
    # sigma_i^{-1} = Delta^{-1} (Delta sigma_i^{-1}); push every Delta^{-1}
    # to the front, twisting the simples it passes by tau.
    negatives_after = [0] * len(letters)
    count = 0
    for k in range(len(letters) - 1, -1, -1):
        negatives_after[k] = count
        if letters[k] < 0:
            count += 1
    simples = []
    for k, x in enumerate(letters):
        s = _generator_simple(d, x) if x > 0 else _delta_over_generator(d, -x)
        if negatives_after[k] % 2:
            s = _tau(s)
        simples.append(s)
    lead, factors = _normalize_positive(d, simples)
    return GarsideForm(d, lead - count, factors)


def garside_normal_form(a: BraidWord) -> GarsideForm:
    return _garside(a.d, a.letters)


def canonical_form(a: BraidWord) -> BraidWord:
    """Unique word per group element: Delta power, then lex-least simple words."""
    return garside_normal_form(a).to_word()


def group_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.d != b.d:
        return False
    return garside_normal_form(a) == garside_normal_form(b)


# ---------------------------------------------------------------------------
# Text form
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\S+")
_GEN = re.compile(r"^([A-Za-z]+)(-?\d+)(?:\^(-?\d+))?$")


def _parse_signed_letters(text: str, prefix: str, what: str) -> list[int]:
    stripped = text.strip()
    if stripped.startswith("[") and stripped.endswith("]"):
        stripped = stripped[1:-1]
        text = " " + stripped + " "
    letters: list[int] = []
    for m in _TOKEN.finditer(text.replace(",", " ")):
        tok, col = m.group(0), m.start() + 1
        if re.fullmatch(r"[+-]?\d+", tok):
            val = int(tok)
            if val == 0:
                raise BraidError(f"{what} index must be >= 1 (token {tok!r} at column {col})")
            letters.append(val)
            continue
        g = _GEN.match(tok)
        if not g or g.group(1).lower() != prefix:
            raise BraidError(f"malformed token {tok!r} at column {col}")
        idx = int(g.group(2))
        if idx < 1:
            raise BraidError(f"{what} index must be >= 1 (token {tok!r} at column {col})")
        power = int(g.group(3)) if g.group(3) is not None else 1
        sign = 1 if power > 0 else -1
        letters.extend([sign * idx] * abs(power))
    return letters


def parse_braid_text(text: str, d: int | None = None) -> BraidWord:
    """Parse ``"s1 s2^-1"`` or a bare signed-integer list such as ``"[1, -2]"``.

    When ``d`` is omitted the smallest admissible strand count is used.
    """
    letters = _parse_signed_letters(text, "s", "generator")
    if d is None:
        d = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(d, tuple(letters))


def format_braid(a: BraidWord) -> str:
    """Inverse of parse_braid_text; the identity is the empty string."""
    if not a.letters:
        return ""
    return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in a.letters)

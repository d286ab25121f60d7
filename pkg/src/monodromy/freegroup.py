"""Free group F_d on geometric generators g1..gd and the right Artin action of B_d."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .braid import MAX_LETTERS, BraidError, BraidWord, WordTooLongError, _parse_signed_letters

__all__ = [
    "FreeWord",
    "free_reduce",
    "artin_act",
    "artin_images",
    "act_is_automorphism_check",
    "boundary_word",
    "parse_free_text",
    "format_free",
]


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """Freely reduced word; letter ``i`` is g_i and ``-i`` its inverse."""

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise BraidError(f"letter {x} is not a generator of F_{self.rank}")
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def generator(cls, rank: int, i: int) -> FreeWord:
        return cls(rank, (i,))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise BraidError(f"rank mismatch: F_{self.rank} vs F_{other.rank}")
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_free(self)


def free_reduce(w: FreeWord) -> FreeWord:
    # FreeWord reduces on construction; kept for API symmetry.
    return FreeWord(w.rank, w.letters)


def boundary_word(d: int) -> FreeWord:
    """g1 g2 ... gd, the loop around all punctures."""
    return FreeWord(d, tuple(range(1, d + 1)))


def _generator_images(d: int, letter: int) -> dict[int, tuple[int, ...]]:
    i = abs(letter)
    if letter > 0:
        return {i: (i, i + 1, -i), i + 1: (i,)}
    return {i: (i + 1,), i + 1: (-(i + 1), i, i + 1)}


def _substitute(letters: tuple[int, ...], images: dict[int, tuple[int, ...]]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        img = images.get(abs(x))
        if img is None:
            chunk: Iterable[int] = (x,)
        elif x > 0:
            chunk = img
        else:
            chunk = (-y for y in reversed(img))
        for y in chunk:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
        if len(out) > MAX_LETTERS:
            raise WordTooLongError(f"free word exceeded {MAX_LETTERS} letters during action")
    return tuple(out)


def artin_act(w: FreeWord, q: BraidWord) -> FreeWord:
    """Right action w * q.

    sigma_i:    g_i -> g_i g_{i+1} g_i^-1,   g_{i+1} -> g_i
    sigma_i^-1: g_i -> g_{i+1},              g_{i+1} -> g_{i+1}^-1 g_i g_{i+1}
    and w * (ab) = (w * a) * b.
    """
    if w.rank != q.d:
        raise BraidError(f"rank mismatch: F_{w.rank} acted on by B_{q.d}")
    letters = w.letters
    for x in q.letters:
        letters = _substitute(letters, _generator_images(q.d, x))
    return FreeWord(w.rank, letters)


def artin_images(q: BraidWord) -> list[FreeWord]:
    """[g_1 * q, ..., g_d * q]."""
    return [artin_act(FreeWord.generator(q.d, i), q) for i in range(1, q.d + 1)]


def act_is_automorphism_check(q: BraidWord) -> bool:
    """True iff g -> g*q is multiplicative and inverted by acting with q^-1 on every generator."""
    d = q.d
    inv = BraidWord(d, tuple(-x for x in reversed(q.letters)))
    images = artin_images(q)
    for i, img in enumerate(images, start=1):
        if artin_act(img, inv) != FreeWord.generator(d, i):
            return False
    # multiplicativity on adjacent products, checked against the image words
    for i in range(1, d):
        pair = FreeWord(d, (i, i + 1))
        if artin_act(pair, q) != images[i - 1] * images[i]:
            return False
    for i in range(1, d + 1):
        if artin_act(FreeWord(d, (-i,)), q) != images[i - 1].inverse():
            return False
    return True


def parse_free_text(text: str, rank: int | None = None) -> FreeWord:
    letters = _parse_signed_letters(text, "g", "generator")
    if rank is None:
        rank = max((abs(x) for x in letters), default=0)
    return FreeWord(rank, tuple(letters))


def format_free(w: FreeWord) -> str:
    if not w.letters:
        return ""
    return " ".join(f"g{x}" if x > 0 else f"g{-x}^-1" for x in w.letters)

"""
Bounded bidirectional search for m-equivalence of two factorizations.

States are factorizations keyed by the tuple of (normal form, degree) of
their factors, plus the current representation when one is tracked.  A
result is either Equivalent with a replayable move script or Unknown; the
search never claims inequivalence.
"""

from __future__ import annotations

import os
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Literal

from .braid import BraidWord, format_braid
from .factorization import (
    BraidFactorization,
    FactorizationError,
    cancel_pair,
    create_pair,
    global_conjugate,
    hurwitz_move,
)
from .representation import MonodromyRep, conjugated_rep, factor_transpositions

__all__ = [
    "Move",
    "SearchBudget",
    "SearchResult",
    "equivalence_search",
    "apply_move",
    "replay",
    "default_max_nodes",
]

MoveKind = Literal["hurwitz", "conjugate", "cancel", "create"]
_KIND_ORDER = {"hurwitz": 0, "cancel": 1, "create": 2, "conjugate": 3}


def default_max_nodes() -> int:
    raw = os.environ.get("MONODROMY_BUDGET")
    if raw is None:
        return 10**5
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"MONODROMY_BUDGET must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"MONODROMY_BUDGET must be a positive integer, got {raw!r}")
    return value


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    index: int = 0
    direction: str = ""
    braid: BraidWord | None = None

    def sort_key(self) -> tuple:
        letters = self.braid.letters if self.braid is not None else ()
        return (_KIND_ORDER[self.kind], self.index, self.direction, len(letters), letters)

    def to_dict(self) -> dict:
        out: dict = {"move": self.kind}
        if self.kind != "conjugate":
            out["index"] = self.index
        if self.kind == "hurwitz":
            out["direction"] = self.direction
        if self.braid is not None:
            out["braid"] = list(self.braid.letters)
        return out

    def __str__(self) -> str:
        if self.kind == "hurwitz":
            return f"hurwitz {self.direction} at {self.index}"
        if self.kind == "conjugate":
            return f"conjugate by {format_braid(self.braid) or '1'}"
        if self.kind == "cancel":
            return f"cancel at {self.index}"
        return f"create at {self.index} with Q = {format_braid(self.braid) or '1'}"


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_depth: int = 12

    def __post_init__(self) -> None:
        if self.max_nodes is None:
            object.__setattr__(self, "max_nodes", default_max_nodes())
        if not isinstance(self.max_nodes, int) or self.max_nodes < 1:
            raise ValueError(f"max_nodes must be a positive integer, got {self.max_nodes!r}")
        if not isinstance(self.max_depth, int) or self.max_depth < 0:
            raise ValueError(f"max_depth must be a non-negative integer, got {self.max_depth!r}")


@dataclass(frozen=True)
class SearchResult:
    status: Literal["equivalent", "unknown"]
    script: tuple[Move, ...] = ()
    nodes: int = 0

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "nodes": self.nodes,
            "script": [m.to_dict() for m in self.script],
        }


State = tuple[BraidFactorization, MonodromyRep | None]


def apply_move(state: State, move: Move) -> State:
    fact, theta = state
    if move.kind == "hurwitz":
        return hurwitz_move(fact, move.index, move.direction), theta
    if move.kind == "conjugate":
        assert move.braid is not None
        new_theta = conjugated_rep(theta, move.braid) if theta is not None else None
        return global_conjugate(fact, move.braid), new_theta
    if move.kind == "cancel":
        return cancel_pair(fact, move.index), theta
    if move.kind == "create":
        if theta is None:
            raise FactorizationError("pair creation needs a monodromy representation")
        assert move.braid is not None
        return create_pair(fact, move.index, move.braid, theta), theta
    raise FactorizationError(f"unknown move {move.kind!r}")


def replay(fact: BraidFactorization, script, theta: MonodromyRep | None = None) -> State:
    state: State = (fact, theta)
    for move in script:
        state = apply_move(state, move)
    return state


def _key(state: State) -> tuple:
    fact, theta = state
    return (fact.key(), theta.images if theta is not None else None)


def _creation_conjugators(d: int) -> list[BraidWord]:
    out = [BraidWord.identity(d)]
    for i in range(1, d):
        out.append(BraidWord(d, (i,)))
        out.append(BraidWord(d, (-i,)))
    return out


def _neighbours(state: State, backward: bool) -> Iterator[tuple[Move, State]]:
    """Moves out of ``state`` in deterministic order.

    On the backward side every yielded move is the step that leads *into*
    ``state`` from the neighbour, so scripts can be concatenated directly.
    """
    fact, theta = state
    d = fact.d
    m = len(fact)
    for i in range(1, m):
        for direction, opposite in (("forward", "backward"), ("backward", "forward")):
            nb = (hurwitz_move(fact, i, direction), theta)
            yield (Move("hurwitz", i, opposite if backward else direction), nb)
    for i in range(1, m):
        a, b = fact.factors[i - 1], fact.factors[i]
        if sorted((a.degree, b.degree)) != [-2, 2]:
            continue
        # the inverse of a cancellation must be a creation of (Q,-2),(Q,2)
        if backward:
            if a.degree != -2 or theta is None:
                continue
            s, t = factor_transpositions(theta, a.conj)
            if set(s) & set(t):
                continue
        try:
            nb = (cancel_pair(fact, i), theta)
        except FactorizationError:
            continue
        yield (Move("create", i, braid=a.conj) if backward else Move("cancel", i)), nb
    if theta is not None:
        for i in range(1, m + 2):
            for q in _creation_conjugators(d):
                s, t = factor_transpositions(theta, q)
                if set(s) & set(t):
                    continue
                nb = (create_pair(fact, i, q, theta), theta)
                yield (Move("cancel", i) if backward else Move("create", i, braid=q)), nb
    for q in _creation_conjugators(d)[1:]:
        nb = apply_move(state, Move("conjugate", braid=q))
        inverse = BraidWord(d, (-q.letters[0],))
        yield Move("conjugate", braid=inverse if backward else q), nb


class _Side:
    def __init__(self, root: State, backward: bool) -> None:
        key = _key(root)
        self.backward = backward
        self.parent: dict[tuple, tuple[tuple, Move] | None] = {key: None}
        self.frontier: list[tuple[tuple, State]] = [(key, root)]
        self.depth = 0

    def path(self, key: tuple) -> list[Move]:
        steps = []
        while self.parent[key] is not None:
            key, move = self.parent[key]
            steps.append(move)
        # forward side walks back to the root, backward side walks toward its root
        return steps[::-1] if not self.backward else steps


def equivalence_search(
    f: BraidFactorization,
    g: BraidFactorization,
    theta: MonodromyRep | None = None,
    budget: SearchBudget | None = None,
    workers: int = 1,
) -> SearchResult:
    """Bidirectional BFS from f and g; both are taken with the same theta."""
    if f.d != g.d:
        raise FactorizationError(f"strand-count mismatch: {f.d} vs {g.d}")
    if theta is not None and theta.d != f.d:
        raise FactorizationError(f"theta has d={theta.d}, factorizations have d={f.d}")
    budget = budget or SearchBudget()
    if workers < 1:
        raise ValueError("workers must be >= 1")
    fwd = _Side((f, theta), backward=False)
    bwd = _Side((g, theta), backward=True)
    root_f, root_g = fwd.frontier[0][0], bwd.frontier[0][0]
    if root_f == root_g:
        return SearchResult("equivalent", (), 1)
    nodes = 2
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while fwd.frontier and bwd.frontier and fwd.depth + bwd.depth < budget.max_depth:
            side, other = (fwd, bwd) if len(fwd.frontier) <= len(bwd.frontier) else (bwd, fwd)

            def expand(item, side=side):
                _, state = item
                return sorted(_neighbours(state, side.backward), key=lambda mv: mv[0].sort_key())

            items = side.frontier
            expanded = list(pool.map(expand, items)) if pool else [expand(it) for it in items]
            next_frontier = []
            for (key, _), children in zip(items, expanded):
                for move, child in children:
                    ckey = _key(child)
                    if ckey in side.parent:
                        continue
                    side.parent[ckey] = (key, move)
                    nodes += 1
                    if ckey in other.parent:
                        script = fwd.path(ckey) + bwd.path(ckey)
                        return SearchResult("equivalent", tuple(script), nodes)
                    if nodes >= budget.max_nodes:
                        return SearchResult("unknown", (), nodes)
                    next_frontier.append((ckey, child))
            side.frontier = next_frontier
            side.depth += 1
    finally:
        if pool:
            pool.shutdown()
    return SearchResult("unknown", (), nodes)

"""
Simple branched covers of the disk and the homological action of liftable braids.

Two graphs carry the cover of the d-punctured disk determined by theta:

* the *spine*: lifts of the star joining a base point to q_1..q_d.  Vertices
  are the n sheets over the base point plus n-1 vertices over each q_i (the
  two sheets swapped by theta(g_i) share a ramification vertex); edge
  e(i, s) is the lift of arc i starting on sheet s.  With its cyclic edge
  orders the spine is a ribbon graph whose surface, capped along its n
  faces, is the closed surface.  The intersection form is read off from it.
* the *Schreier graph*: lifts of the loops g_i, edge (i, s) running from
  sheet s to sheet theta(g_i)(s).  The Artin action of a braid acts on its
  chains by lifting the words g_i * Q, which gives the action on homology.

The two are related by the chain map (i, s) -> e(i, s) - e(i, theta_i(s)).
Homology classes are rows; a braid acts by right multiplication so that
lift_action(QR) = lift_action(Q) @ lift_action(R).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .braid import BraidError, BraidWord, full_twist
from .factorization import BraidFactorization, Factor
from .freegroup import _generator_images
from .report import ValidationReport
from .representation import (
    MonodromyRep,
    _act_on_pairs,
    check_compatibility,
    is_liftable,
    validate_rep,
)
from .smith import Matrix, identity, matmul, row_space_complement, transpose

__all__ = [
    "CoverError",
    "Spine",
    "CoverModel",
    "SymplecticAction",
    "build_cover",
    "lift_action",
    "vanishing_class",
    "transvection",
    "pencil_monodromy_check",
    "standard_form",
]

Chain = dict[int, int]


class CoverError(ValueError):
    pass


# ---------------------------------------------------------------------------
# integer matrix helpers
# ---------------------------------------------------------------------------


def standard_form(g: int) -> Matrix:
    """Block-diagonal [[0, 1], [-1, 0]]."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for k in range(g):
        J[2 * k][2 * k + 1] = 1
        J[2 * k + 1][2 * k] = -1
    return J


def _pair(u: Sequence[int], J: Matrix, v: Sequence[int]) -> int:
    return sum(u[a] * J[a][b] * v[b] for a in range(len(u)) if u[a] for b in range(len(v)) if v[b])


@dataclass(frozen=True)
class SymplecticAction:
    matrix: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows: Matrix) -> SymplecticAction:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, size: int) -> SymplecticAction:
        return cls.of(identity(size))

    @property
    def size(self) -> int:
        return len(self.matrix)

    def rows(self) -> Matrix:
        return [list(r) for r in self.matrix]

    def __matmul__(self, other: SymplecticAction) -> SymplecticAction:
        if self.size == 0:
            return self
        return SymplecticAction.of(matmul(self.rows(), other.rows()))

    def is_identity(self) -> bool:
        return all(x == int(i == j) for i, r in enumerate(self.matrix) for j, x in enumerate(r))

    def preserves(self, J: Matrix) -> bool:
        """M J M^T == J and M^T J M == J."""
        if self.size == 0:
            return True
        M = self.rows()
        Mt = transpose(M)
        return matmul(matmul(M, J), Mt) == J and matmul(matmul(Mt, J), M) == J

    def apply(self, x: Sequence[int]) -> list[int]:
        return [sum(x[k] * self.matrix[k][j] for k in range(self.size)) for j in range(self.size)]


def transvection(v: Sequence[int] | None, J: Matrix) -> SymplecticAction:
    """x -> x + <x, v> v."""
    size = len(J)
    if v is None:
        return SymplecticAction.identity(size)
    Jv = [sum(J[a][b] * v[b] for b in range(size)) for a in range(size)]
    return SymplecticAction.of([[int(a == b) + Jv[a] * v[b] for b in range(size)] for a in range(size)])


def symplectic_basis(J: Matrix) -> Matrix:
    """Rows P, unimodular, with P J P^T block-diagonal [[0,1],[-1,0]]."""
    size = len(J)
    remaining = identity(size)
    result: Matrix = []
    while remaining:
        e, rest = remaining[0], remaining[1:]
        while True:
            vals = [_pair(e, J, r) for r in rest]
            nz = [k for k, x in enumerate(vals) if x]
            if not nz:
                raise CoverError("intersection form is degenerate on the chosen complement")
            if len(nz) == 1:
                break
            p = min(nz, key=lambda k: abs(vals[k]))
            for k in nz:
                if k != p:
                    q = vals[k] // vals[p]
                    rest[k] = [a - q * b for a, b in zip(rest[k], rest[p])]
        p = nz[0]
        if abs(vals[p]) != 1:
            raise CoverError(f"intersection form is not unimodular (pairing {vals[p]})")
        f = [vals[p] * x for x in rest[p]]
        del rest[p]
        new_rest = []
        for r in rest:
            re_, rf = _pair(r, J, e), _pair(r, J, f)
            new_rest.append([x + re_ * y - rf * z for x, y, z in zip(r, f, e)])
        result.extend([e, f])
        remaining = new_rest
    return result


# ---------------------------------------------------------------------------
# Spine
# ---------------------------------------------------------------------------

Dart = tuple[int, int]  # (edge, +1 base->ramification | -1 ramification->base)


@dataclass(frozen=True)
class Spine:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]  # (base vertex, ramification vertex)
    rotation: tuple[tuple[Dart, ...], ...]  # counterclockwise darts leaving each vertex

    def origin(self, h: Dart) -> int:
        u, v = self.edges[h[0]]
        return u if h[1] > 0 else v

    def target(self, h: Dart) -> int:
        u, v = self.edges[h[0]]
        return v if h[1] > 0 else u

    @property
    def euler_characteristic(self) -> int:
        return self.vertex_count - len(self.edges)

    def faces(self) -> list[list[Dart]]:
        pos = {h: (v, k) for v, rot in enumerate(self.rotation) for k, h in enumerate(rot)}

        def step(h: Dart) -> Dart:
            v, k = pos[(h[0], -h[1])]
            rot = self.rotation[v]
            return rot[(k + 1) % len(rot)]

        seen: set[Dart] = set()
        faces = []
        for rot in self.rotation:
            for h in rot:
                if h in seen:
                    continue
                face = []
                cur = h
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cur = step(cur)
                faces.append(face)
        return faces


def _build_spine(theta: MonodromyRep) -> tuple[Spine, dict[tuple[int, int], int]]:
    d, n = theta.d, theta.n
    ram: dict[tuple[int, int], int] = {}
    next_vertex = n
    for i in range(1, d + 1):
        a, b = theta.images[i - 1]
        for s in range(1, n + 1):
            if (i, s) in ram:
                continue
            ram[(i, s)] = next_vertex
            if s == a:
                ram[(i, b)] = next_vertex
            next_vertex += 1
    edges = []
    for i in range(1, d + 1):
        for s in range(1, n + 1):
            edges.append((s - 1, ram[(i, s)]))
    rotation: list[list[Dart]] = [[] for _ in range(next_vertex)]
    for s in range(1, n + 1):
        # counterclockwise order q_d, ..., q_1; the opposite order flips the sign of
        # every tangency transvection
        rotation[s - 1] = [(_edge(i, s, n), 1) for i in range(d, 0, -1)]
    for e, (_, v) in enumerate(edges):
        rotation[v].append((e, -1))
    return Spine(next_vertex, tuple(edges), tuple(tuple(r) for r in rotation)), ram


def _edge(i: int, s: int, n: int) -> int:
    return (i - 1) * n + (s - 1)


# ---------------------------------------------------------------------------
# Cover model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverModel:
    theta: MonodromyRep
    spine: Spine
    genus: int
    boundary_count: int
    h1_basis: tuple[tuple[int, ...], ...]  # spine 1-cycles, one coefficient per edge
    intersection_form: tuple[tuple[int, ...], ...]
    _nontree: tuple[int, ...] = field(repr=False)
    _pairing: tuple[tuple[int, ...], ...] = field(repr=False)  # fundamental coords -> <z, b_l>

    @property
    def rank(self) -> int:
        return len(self.h1_basis)

    @property
    def J(self) -> Matrix:
        return [list(r) for r in self.intersection_form]

    def coordinates(self, cycle: Sequence[int]) -> list[int]:
        """Coordinates in h1_basis of a spine 1-cycle (given per edge)."""
        y = [cycle[e] for e in self._nontree]
        p = [sum(y[k] * self._pairing[k][l] for k in range(len(y)) if y[k]) for l in range(self.rank)]
        J = self.intersection_form
        # c J = p and J^-1 = -J
        return [-sum(p[a] * J[a][b] for a in range(self.rank)) for b in range(self.rank)]

    def intersection(self, x: Sequence[int], y: Sequence[int]) -> int:
        return _pair(x, self.J, y)

    def to_dict(self) -> dict:
        return {"g": self.genus, "boundary_count": self.boundary_count, "rank": self.rank}


def _tree(spine: Spine) -> tuple[list[int], list[int | None], list[Dart | None], list[int]]:
    parent: list[int | None] = [None] * spine.vertex_count
    parent_dart: list[Dart | None] = [None] * spine.vertex_count
    depth = [0] * spine.vertex_count
    seen = [False] * spine.vertex_count
    seen[0] = True
    tree_edges = set()
    queue = deque([0])
    adjacency: list[list[Dart]] = [sorted(rot) for rot in spine.rotation]
    while queue:
        u = queue.popleft()
        for h in adjacency[u]:
            v = spine.target(h)
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                parent_dart[v] = h
                depth[v] = depth[u] + 1
                tree_edges.add(h[0])
                queue.append(v)
    if not all(seen):
        raise CoverError("spine is disconnected; theta is not transitive")
    nontree = [e for e in range(len(spine.edges)) if e not in tree_edges]
    return nontree, parent, parent_dart, depth


def _tree_path(u: int, v: int, parent, parent_dart, depth) -> list[Dart]:
    """Darts of the tree path from u to v."""
    up: list[Dart] = []
    down: list[Dart] = []
    while depth[u] > depth[v]:
        h = parent_dart[u]
        up.append((h[0], -h[1]))
        u = parent[u]
    while depth[v] > depth[u]:
        down.append(parent_dart[v])
        v = parent[v]
    while u != v:
        h = parent_dart[u]
        up.append((h[0], -h[1]))
        u = parent[u]
        down.append(parent_dart[v])
        v = parent[v]
    return up + down[::-1]


def _push_off_pairing(spine: Spine, walk: list[Dart], chain: Sequence[int]) -> int:
    """Algebraic intersection of a closed walk, pushed to its left, with a 1-cycle."""
    pos = {h: k for rot in spine.rotation for k, h in enumerate(rot)}
    total = 0
    for k, h_out in enumerate(walk):
        h_in = walk[k - 1]
        back = (h_in[0], -h_in[1])
        v = spine.origin(h_out)
        rot = spine.rotation[v]
        if back == h_out:
            continue
        j = (pos[h_out] + 1) % len(rot)
        while rot[j] != back:
            f = rot[j]
            total += f[1] * chain[f[0]]
            j = (j + 1) % len(rot)
    return total


def _chain_of(darts: Sequence[Dart], size: int) -> list[int]:
    z = [0] * size
    for e, sgn in darts:
        z[e] += sgn
    return z


def build_cover(theta: MonodromyRep) -> CoverModel:
    report = validate_rep(theta)
    if not report.passed:
        raise CoverError("invalid theta: " + "; ".join(c.detail for c in report.failures()))
    d, n = theta.d, theta.n
    if d % 2 or 1 - n + d // 2 < 0:
        raise CoverError(f"genus 1 - n + d/2 = {1 - n + d / 2} is not a non-negative integer")
    spine, _ = _build_spine(theta)
    faces = spine.faces()
    chi = spine.euler_characteristic + len(faces)
    if chi % 2:
        raise CoverError(f"odd Euler characteristic {chi}")
    genus = (2 - chi) // 2
    if genus != 1 - n + d // 2:
        raise CoverError(f"spine genus {genus} disagrees with 1 - n + d/2 = {1 - n + d // 2}")

    E = len(spine.edges)
    nontree, parent, parent_dart, depth = _tree(spine)
    walks = []
    for e in nontree:
        u, v = spine.edges[e]
        walks.append([(e, 1)] + _tree_path(v, u, parent, parent_dart, depth))
    chains = [_chain_of(w, E) for w in walks]
    m = len(nontree)
    J_fund = [[_push_off_pairing(spine, walks[k], chains[l]) for l in range(m)] for k in range(m)]
    if any(J_fund[k][l] != -J_fund[l][k] for k in range(m) for l in range(m)):
        raise CoverError("push-off pairing is not skew-symmetric")

    face_rows = [[_chain_of(f, E)[e] for e in nontree] for f in faces]
    _, complement = row_space_complement(face_rows, m)
    if len(complement) != 2 * genus:
        raise CoverError(f"H1 rank {len(complement)} != 2g = {2 * genus}")
    J_W = matmul(matmul(complement, J_fund), transpose(complement, m)) if complement else []
    P = symplectic_basis(J_W) if complement else []
    basis_fund = matmul(P, complement) if complement else []
    basis_chains = tuple(
        tuple(sum(b[k] * chains[k][e] for k in range(m)) for e in range(E)) for b in basis_fund
    )
    pairing = matmul(J_fund, transpose(basis_fund, m)) if basis_fund else [[] for _ in range(m)]
    return CoverModel(
        theta=theta,
        spine=spine,
        genus=genus,
        boundary_count=len(faces),
        h1_basis=basis_chains,
        intersection_form=tuple(tuple(r) for r in standard_form(genus)),
        _nontree=tuple(nontree),
        _pairing=tuple(tuple(r) for r in pairing),
    )


# ---------------------------------------------------------------------------
# Lifting braids
# ---------------------------------------------------------------------------


def _sheet(pair: tuple[int, int], s: int) -> int:
    a, b = pair
    return b if s == a else a if s == b else s


def lift_word(images: Sequence[tuple[int, int]], letters: Sequence[int], sheet: int, n: int) -> Chain:
    """Schreier-graph chain of the lift of a word in the g_i starting on ``sheet``."""
    chain: Chain = {}
    s = sheet
    for x in letters:
        i = abs(x)
        if x > 0:
            e = _edge(i, s, n)
            chain[e] = chain.get(e, 0) + 1
            s = _sheet(images[i - 1], s)
        else:
            s = _sheet(images[i - 1], s)
            e = _edge(i, s, n)
            chain[e] = chain.get(e, 0) - 1
    return {e: c for e, c in chain.items() if c}


def _apply_letter(x: Chain, letter: int, images: Sequence[tuple[int, int]], d: int, n: int) -> Chain:
    subst = _generator_images(d, letter)
    out: Chain = {}
    for e, c in x.items():
        j, s = e // n + 1, e % n + 1
        if j in subst:
            row = lift_word(images, subst[j], s, n)
        else:
            row = {e: 1}
        for f, k in row.items():
            out[f] = out.get(f, 0) + c * k
    return {e: c for e, c in out.items() if c}


def push_chain(theta: MonodromyRep, q: BraidWord, x: Chain) -> Chain:
    """Image of a Schreier chain for theta o Q_* under the lift of q, as a chain for theta."""
    reps = [theta.images]
    for letter in reversed(q.letters):
        reps.append(tuple(_act_on_pairs(reps[-1], BraidWord(q.d, (letter,)))))
    reps.reverse()  # reps[k] is the representation seen by letter k (1-based), reps[0] = theta o Q_*
    for k, letter in enumerate(q.letters, start=1):
        x = _apply_letter(x, letter, reps[k], theta.d, theta.n)
    return x


def schreier_to_spine(theta: MonodromyRep, x: Chain) -> list[int]:
    n = theta.n
    z = [0] * (theta.d * n)
    for e, c in x.items():
        i, s = e // n + 1, e % n + 1
        t = _sheet(theta.images[i - 1], s)
        if t != s:
            z[_edge(i, s, n)] += c
            z[_edge(i, t, n)] -= c
    return z


def spine_to_schreier(theta: MonodromyRep, cycle: Sequence[int]) -> Chain:
    n = theta.n
    x: Chain = {}
    for i in range(1, theta.d + 1):
        a, b = theta.images[i - 1]
        ca, cb = cycle[_edge(i, a, n)], cycle[_edge(i, b, n)]
        if ca + cb:
            raise CoverError("not a spine cycle")
        if ca:
            x[_edge(i, a, n)] = ca
    return x


def lift_action(cover: CoverModel, q: BraidWord) -> SymplecticAction:
    theta = cover.theta
    if q.d != theta.d:
        raise BraidError(f"braid in B_{q.d} acting on a cover branched at {theta.d} points")
    if not is_liftable(theta, q):
        raise CoverError("braid is not liftable: theta o Q_* != theta")
    rows = []
    for b in cover.h1_basis:
        image = push_chain(theta, q, spine_to_schreier(theta, b))
        rows.append(cover.coordinates(schreier_to_spine(theta, image)))
    return SymplecticAction.of(rows)


def vanishing_class(cover: CoverModel, f: Factor) -> tuple[int, ...] | None:
    """Class of the loop lifted from the arc q1 q2 transported by the conjugator.

    None when that loop is null-homologous in the closed surface.
    """
    theta = cover.theta
    if f.degree != 1:
        raise CoverError(f"vanishing classes are defined for tangency factors, got degree {f.degree}")
    if not is_liftable(theta, f.braid):
        raise CoverError("factor is not liftable")
    local = _act_on_pairs(theta.images, f.conj)
    a = local[0][0]
    n = theta.n
    # lift of g1 g2^-1 starting on sheet a, in the cover for theta o Q_*
    v_local = lift_word(local, (1, -2), a, n)
    image = push_chain(theta, f.conj, v_local)
    coords = cover.coordinates(schreier_to_spine(theta, image))
    return None if not any(coords) else tuple(coords)


def pencil_monodromy_check(cover: CoverModel, fact: BraidFactorization) -> ValidationReport:
    report = ValidationReport()
    compat = check_compatibility(cover.theta, fact)
    if not report.add("compatibility", compat.passed, "; ".join(c.detail for c in compat.failures())):
        return report
    size = cover.rank
    J = cover.J
    lifts = []
    for f in fact.factors:
        lifts.append(lift_action(cover, f.braid))
    kernel_bad = [
        str(j) for j, (f, M) in enumerate(zip(fact.factors, lifts), start=1) if f.degree != 1 and not M.is_identity()
    ]
    report.add(
        "kernel_factors_trivial",
        not kernel_bad,
        "" if not kernel_bad else "node/cusp factors " + ", ".join(kernel_bad) + " act nontrivially",
    )
    product = SymplecticAction.identity(size)
    for M in lifts:
        product = product @ M
    twist = lift_action(cover, full_twist(fact.d))
    report.add(
        "product_equals_full_twist_lift",
        product == twist,
        "" if product == twist else "ordered product of lifts differs from the lift of Delta^2",
    )
    bad = []
    for j, (f, M) in enumerate(zip(fact.factors, lifts), start=1):
        if f.degree == 1 and M != transvection(vanishing_class(cover, f), J):
            bad.append(str(j))
    report.add(
        "tangency_transvections",
        not bad,
        "" if not bad else "factors " + ", ".join(bad) + " are not transvections along their vanishing class",
    )
    return report

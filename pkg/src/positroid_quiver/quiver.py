"""
Representations of the equioriented cycle and the coefficient quiver of U_[n].

Basis conventions.  U_[n] has, over every vertex a, the basis v_1^(a), ..., v_n^(a)
with arrow map s_1: v_h^(a) -> v_{h+1}^(a+1) and v_n^(a) -> 0.  Its coefficient
quiver is the disjoint union of n segments; segment s_j consists of the points
b_{j,p} = v_p^(j+p), p = 1..n, and ends over vertex j.  Equivalently the point
v_h^(a) lies on segment a - h (mod n).

A successor closed subquiver of dimension (k, ..., k) is recorded by its rows
H_a = {h : v_h^(a) in Q}.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .linalg import rank_q
from .necklace import Necklace, _check_kn, ksubset, necklace_leq, rep


@dataclass(frozen=True)
class SegmentRep:
    """Direct sum of the indecomposables U(i; l) (terminal vertex i, length l <= n)."""

    n: int
    segments: tuple[tuple[int, int], ...]

    def __post_init__(self):
        segs = []
        for i, l in self.segments:
            if not 1 <= l <= self.n:
                raise ValueError(f"segment U({i};{l}) needs 1 <= l <= {self.n}")
            segs.append((rep(i, self.n), l))
        object.__setattr__(self, "segments", tuple(sorted(segs)))

    @classmethod
    def u_n(cls, n: int) -> "SegmentRep":
        """U_[n], the sum of U(i; n) over all vertices."""
        return cls(n, tuple((i, n) for i in range(1, n + 1)))

    def dims(self) -> list[int]:
        d = [0] * self.n
        for i, l in self.segments:
            for t in range(l):
                d[(i - 1 - t) % self.n] += 1
        return d

    def basis(self) -> list[list[tuple[int, int]]]:
        """Per vertex (0-based), the basis vectors as (segment index, position)."""
        out: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for s, (i, l) in enumerate(self.segments):
            start = i - l + 1
            for t in range(1, l + 1):
                out[(start + t - 2) % self.n].append((s, t))
        return out

    def to_dict(self) -> dict:
        return {"n": self.n, "segments": [list(s) for s in self.segments]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "SegmentRep":
        return cls(d["n"], tuple(tuple(s) for s in d["segments"]))

    @classmethod
    def parse(cls, text: str, n: int) -> "SegmentRep":
        """Accept JSON or a compact list like ``"1:2,2:2,3:1"``."""
        text = text.strip()
        if text.startswith("{"):
            return cls.from_dict(json.loads(text))
        segs = []
        for part in filter(None, (p.strip() for p in text.split(","))):
            i, l = part.split(":")
            segs.append((int(i), int(l)))
        return cls(n, tuple(segs))


def hom_dim(M: SegmentRep, N: SegmentRep) -> int:
    """
    dim Hom(M, N), from the linear system E_{v+1} M_v = N_v E_v in exact arithmetic.
    """
    if M.n != N.n:
        raise ValueError("representations of different cycles")
    n = M.n
    bm, bn = M.basis(), N.basis()
    # variable (v, row, col) is entry (row, col) of E_v : M^(v) -> N^(v)
    offset = []
    nvars = 0
    for v in range(n):
        offset.append(nvars)
        nvars += len(bn[v]) * len(bm[v])

    def var(v, row, col):
        return offset[v] + row * len(bm[v]) + col

    def arrow(basis, segs, v):
        """Images of the basis at v under the arrow v -> v+1, as target indices or None."""
        w = (v + 1) % n
        index = {b: x for x, b in enumerate(basis[w])}
        out = []
        for s, t in basis[v]:
            out.append(index[(s, t + 1)] if t < segs[s][1] else None)
        return out

    rows = []
    for v in range(n):
        w = (v + 1) % n
        am, an = arrow(bm, M.segments, v), arrow(bn, N.segments, v)
        # entry (x, c) of E_w M_v - N_v E_v, x indexes N^(w), c indexes M^(v)
        for x in range(len(bn[w])):
            for c in range(len(bm[v])):
                row: dict[int, int] = {}
                if am[c] is not None:
                    row[var(w, x, am[c])] = row.get(var(w, x, am[c]), 0) + 1
                for y, tgt in enumerate(an):
                    if tgt == x:
                        key = var(v, y, c)
                        row[key] = row.get(key, 0) - 1
                rows.append(row)
    return nvars - rank_q(rows)


def degeneration_dim(n: int, k: int, r: int) -> int:
    """
    max of k(n-k) + (k-l)(l-r) - l(n-k+l-r) over the feasible l.

    l is the part of the k-dimensional subspace taken from the r identity copies,
    so l <= min(r, k), and the rest must fit into the n - r segments U(i; n), so
    k - l <= n - r.
    """
    _check_kn(k, n)
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}")
    return max(
        k * (n - k) + (k - l) * (l - r) - l * (n - k + l - r)
        for l in range(max(0, k - (n - r)), min(r, k) + 1)
    )


@dataclass(frozen=True, order=True)
class SuccessorClosedSubquiver:
    """Rows H_a (a = 1..n) of a successor closed subquiver of Q(U_[n], B)."""

    n: int
    k: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n, k = self.n, self.k
        _check_kn(k, n)
        rows = tuple(ksubset(r, n, k) for r in self.rows)
        if len(rows) != n:
            raise ValueError(f"need {n} rows, got {len(rows)}")
        object.__setattr__(self, "rows", rows)
        bad = first_violation(rows, n)
        if bad is not None:
            a, h = bad
            raise ValueError(f"v_{h}^({a}) is in the subquiver but its successor is not")

    def __getitem__(self, a: int) -> tuple[int, ...]:
        return self.rows[(a - 1) % self.n]

    def points(self) -> set[tuple[int, int]]:
        """Points as (vertex a, index h)."""
        return {(a, h) for a in range(1, self.n + 1) for h in self[a]}

    def runs(self) -> dict[int, tuple[int, int]]:
        """For each segment j meeting Q: (first position p, run length n - p + 1)."""
        out = {}
        for j in range(1, self.n + 1):
            ps = [p for p in range(1, self.n + 1) if p in self[j + p]]
            if ps:
                assert ps == list(range(ps[0], self.n + 1)), "segment intersection is not a terminal run"
                out[j] = (ps[0], len(ps))
        return out

    def segment_multiset(self) -> frozenset[tuple[int, int]]:
        """Isomorphism type as a set of U(j; l): the run on s_j is U(j; n - p + 1)."""
        return frozenset((j, l) for j, (p, l) in self.runs().items())

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "rows": [list(r) for r in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def first_violation(rows, n: int) -> tuple[int, int] | None:
    for a in range(n):
        nxt = rows[(a + 1) % n]
        for h in rows[a]:
            if h < n and h + 1 not in nxt:
                return a + 1, h
    return None


def enumerate_sc_subquivers(k: int, n: int) -> list[SuccessorClosedSubquiver]:
    """All successor closed subquivers of dimension (k, ..., k), lexicographic in the rows."""
    _check_kn(k, n)
    out = []

    def extend(rows: list[tuple[int, ...]]) -> None:
        a = len(rows)
        forced = {h + 1 for h in rows[-1] if h < n}
        if a == n:
            if forced <= set(rows[0]):
                out.append(SuccessorClosedSubquiver(n, k, tuple(rows)))
            return
        free = [h for h in range(1, n + 1) if h not in forced]
        for extra in itertools.combinations(free, k - len(forced)):
            rows.append(tuple(sorted(forced | set(extra))))
            extend(rows)
            rows.pop()

    for first in itertools.combinations(range(1, n + 1), k):
        extend([first])
    out.sort()
    return out


def psi(Q: SuccessorClosedSubquiver) -> Necklace:
    """v_h^(a) -> a - h: I_a is the set of segments meeting vertex a."""
    n = Q.n
    return Necklace(n, Q.k, tuple(
        tuple(sorted(rep(a - h, n) for h in Q[a])) for a in range(1, n + 1)
    ))


def psi_inverse(N: Necklace) -> SuccessorClosedSubquiver:
    n = N.n
    return SuccessorClosedSubquiver(n, N.k, tuple(
        tuple(sorted(rep(a - i, n) for i in N[a])) for a in range(1, n + 1)
    ))


@dataclass(frozen=True)
class Mutation:
    """
    The first ``length`` points of the run of segment ``source_segment`` (starting at
    vertex ``vertex`` with index ``position``) moved down by ``shift`` onto segment
    ``target_segment``.
    """

    source: SuccessorClosedSubquiver
    target: SuccessorClosedSubquiver
    source_segment: int
    target_segment: int
    vertex: int
    position: int
    length: int
    shift: int


def mutation_moves(Q: SuccessorClosedSubquiver) -> list[Mutation]:
    """All mutations of Q, sorted by (segment, prefix length, shift)."""
    n = Q.n
    pts = Q.points()
    out = []
    for j, (p, l) in sorted(Q.runs().items()):
        a = rep(j + p, n)
        for lp in range(1, l + 1):
            moved = [(rep(a + t, n), p + t) for t in range(lp)]
            rest = pts.difference(moved)
            for r in range(1, n - (p + lp - 1) + 1):
                landed = [(v, h + r) for v, h in moved]
                if any(x in rest for x in landed):
                    continue
                new = rest.union(landed)
                rows = tuple(tuple(sorted(h for v, h in new if v == b)) for b in range(1, n + 1))
                if first_violation(rows, n) is not None:
                    continue
                target = SuccessorClosedSubquiver(n, Q.k, rows)
                out.append(Mutation(Q, target, j, rep(a - p - r, n), a, p, lp, r))
    return out


def mutations(Q: SuccessorClosedSubquiver) -> list[SuccessorClosedSubquiver]:
    return [m.target for m in mutation_moves(Q)]


def closure_poset(k: int, n: int) -> set[tuple[Necklace, Necklace]]:
    """
    Pairs (lower, upper) in the reflexive transitive closure of the mutation relation,
    transported to necklaces by psi.
    """
    quivers = enumerate_sc_subquivers(k, n)
    succ = {Q: mutations(Q) for Q in quivers}
    pairs = set()
    for Q in quivers:
        seen = {Q}
        stack = [Q]
        while stack:
            for R in succ[stack.pop()]:
                if R not in seen:
                    seen.add(R)
                    stack.append(R)
        top = psi(Q)
        pairs.update((psi(R), top) for R in seen)
    return pairs


def gale_poset(k: int, n: int, necklaces: Iterable[Necklace] | None = None) -> set[tuple[Necklace, Necklace]]:
    """Pairs (lower, upper) of the rotated Gale order on necklaces."""
    from .necklace import enumerate_necklaces

    nl = list(enumerate_necklaces(k, n) if necklaces is None else necklaces)
    return {(x, y) for x in nl for y in nl if necklace_leq(x, y)}


def iter_segment_points(j: int, n: int) -> Iterator[tuple[int, int]]:
    """Points (vertex, index) of segment s_j in order b_{j,1}, ..., b_{j,n}."""
    for p in range(1, n + 1):
        yield rep(j + p, n), p

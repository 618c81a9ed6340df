"""
Brute-force oracle over prime fields.

A point of X(k, n) over F_p is a tuple (V_1, ..., V_n) of k-dimensional subspaces
of F_p^n with s1(V_a) <= V_{a+1} cyclically, where s1 is the shift v_j -> v_{j+1},
v_n -> 0.  Subspaces are stored as reduced row echelon matrices (tuples of row
tuples), so equal subspaces have identical representations.
"""
from __future__ import annotations

import itertools
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .desing import d_vector, tower
from .linalg import rank_mod_p, rref_mod_p
from .necklace import Necklace, _check_kn, enumerate_necklaces
from .quiver import SegmentRep, psi_inverse

Subspace = tuple[tuple[int, ...], ...]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p ** 0.5) + 1))


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^m."""
    if not 0 <= r <= m:
        return 0
    num = den = 1
    for t in range(r):
        num *= q ** (m - t) - 1
        den *= q ** (t + 1) - 1
    return num // den


def subspaces(k: int, n: int, p: int) -> list[Subspace]:
    """All k-dimensional subspaces of F_p^n as RREF matrices, grouped by pivot set."""
    out = []
    for pivots in itertools.combinations(range(n), k):
        # free entries: row t, column c > pivots[t], c not a pivot
        slots = [(t, c) for t in range(k) for c in range(pivots[t] + 1, n) if c not in pivots]
        for vals in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for t, c in enumerate(pivots):
                rows[t][c] = 1
            for (t, c), v in zip(slots, vals):
                rows[t][c] = v
            out.append(tuple(tuple(r) for r in rows))
    return out


def superspaces(W: Subspace, k: int, n: int, p: int) -> Iterator[Subspace]:
    """
    k-dimensional subspaces containing W (given in RREF).

    F_p^n = W + span(e_c : c not a pivot of W), so superspaces of W correspond to
    (k - dim W)-dimensional subspaces of the non-pivot coordinates.
    """
    d = len(W)
    if d > k:
        return
    pivots = {next(c for c, x in enumerate(r) if x) for r in W}
    free = [c for c in range(n) if c not in pivots]
    for U in subspaces(k - d, len(free), p):
        rows = [list(r) for r in W]
        for u in U:
            v = [0] * n
            for c, x in zip(free, u):
                v[c] = x
            rows.append(v)
        yield rref_mod_p(rows, p)


def shift(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Apply s1 to each row vector."""
    return [[0, *r[:-1]] for r in rows]


def contains(V: Subspace, vectors: Sequence[Sequence[int]], p: int) -> bool:
    return rank_mod_p([*V, *vectors], p) == len(V)


@dataclass(frozen=True)
class RepPoint:
    n: int
    k: int
    p: int
    spaces: tuple[Subspace, ...]

    def is_valid(self) -> bool:
        if len(self.spaces) != self.n:
            return False
        for a, V in enumerate(self.spaces):
            if len(V) != self.k or rref_mod_p(V, self.p) != V:
                return False
            if not contains(self.spaces[(a + 1) % self.n], shift(V), self.p):
                return False
        return True


def _branch(k: int, n: int, p: int, V1: Subspace) -> Iterator[tuple[Subspace, ...]]:
    chain = [V1]

    def extend():
        if len(chain) == n:
            if contains(chain[0], shift(chain[-1]), p):
                yield tuple(chain)
            return
        W = rref_mod_p(shift(chain[-1]), p)
        for V in superspaces(W, k, n, p):
            chain.append(V)
            yield from extend()
            chain.pop()

    yield from extend()


def iter_points(k: int, n: int, p: int) -> Iterator[RepPoint]:
    _check_kn(k, n)
    _check_prime(p)
    for V1 in subspaces(k, n, p):
        for spaces in _branch(k, n, p, V1):
            yield RepPoint(n, k, p, spaces)


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("POSITROID_THREADS", "1")))
    except ValueError:
        return 1


def _branch_histogram(args) -> Counter:
    k, n, p, V1 = args
    lookup = fixed_point_lookup(k, n)
    hist: Counter = Counter()
    for spaces in _branch(k, n, p, V1):
        hist[_classify(RepPoint(n, k, p, spaces), lookup)] += 1
    return hist


def class_histogram(k: int, n: int, p: int) -> Counter:
    """Number of F_p points in each isomorphism class, keyed by necklace."""
    _check_kn(k, n)
    _check_prime(p)
    tasks = [(k, n, p, V1) for V1 in subspaces(k, n, p)]
    total: Counter = Counter()
    threads = _threads()
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for h in pool.map(_branch_histogram, tasks):
                total.update(h)
    else:
        for t in tasks:
            total.update(_branch_histogram(t))
    return total


def count_points(k: int, n: int, p: int) -> int:
    _check_kn(k, n)
    _check_prime(p)
    return sum(1 for V1 in subspaces(k, n, p) for _ in _branch(k, n, p, V1))


def count_coordinate_points(k: int, n: int) -> int:
    """Tuples of coordinate subspaces span(e_h : h in H_a) with s1 containment."""
    _check_kn(k, n)
    subsets = [frozenset(c) for c in itertools.combinations(range(1, n + 1), k)]
    shifted = {H: {h + 1 for h in H if h < n} for H in subsets}
    count = 0

    def extend(first, last, depth):
        nonlocal count
        if depth == n:
            count += shifted[last] <= first
            return
        for H in subsets:
            if shifted[last] <= H:
                extend(first, H, depth + 1)

    for H in subsets:
        extend(H, H, 1)
    return count


# Rank profiles and isomorphism classes.

def rank_profile_of_maps(dims: Sequence[int], maps: Sequence[Sequence[Sequence[int]]], p: int) -> dict[tuple[int, int], int]:
    """
    r(a, m) = rank of the path of length m starting at vertex a (1-based),
    m = 0..n+1.  ``maps[a-1]`` is the dims[a] x dims[a-1] matrix of a -> a+1.
    """
    n = len(dims)
    prof = {}
    for a in range(1, n + 1):
        # rows of the current image, as row vectors in the space at the current vertex
        img = [[int(i == j) for j in range(dims[a - 1])] for i in range(dims[a - 1])]
        v = a
        for m in range(n + 2):
            prof[(a, m)] = rank_mod_p(img, p) if img and dims[(v - 1) % n] else 0
            M = maps[(v - 1) % n]
            tgt = dims[v % n]
            img = [[sum(M[x][y] * row[y] for y in range(len(row))) % p for x in range(tgt)] for row in img]
            v += 1
    return prof


def rank_profile(pt: RepPoint) -> dict[tuple[int, int], int]:
    """r(a, m) = dim s1^m(V_a), m = 0..n+1."""
    n, p = pt.n, pt.p
    prof = {}
    for a in range(1, n + 1):
        rows = [list(r) for r in pt.spaces[a - 1]]
        for m in range(n + 2):
            prof[(a, m)] = rank_mod_p(rows, p)
            rows = shift(rows)
    return prof


def segments_from_profile(prof: dict[tuple[int, int], int], n: int) -> Counter:
    """
    Multiplicity of the segment starting at vertex a with length l is
    r(a, l-1) - r(a, l) - r(a-1, l) + r(a-1, l+1); it ends at vertex a + l - 1.
    Returns a Counter of (end vertex, length).
    """
    def r(a, m):
        return prof[((a - 1) % n + 1, m)]

    out: Counter = Counter()
    for a in range(1, n + 1):
        for l in range(1, n + 1):
            mult = r(a, l - 1) - r(a, l) - r(a - 1, l) + r(a - 1, l + 1)
            if mult < 0:
                raise RuntimeError(f"negative multiplicity {mult} for a segment starting at {a} of length {l}")
            if mult:
                out[((a + l - 2) % n + 1, l)] = mult
    return out


def segment_rep_maps(M: SegmentRep) -> tuple[list[int], list[list[list[int]]]]:
    """Dimensions and arrow matrices of a direct sum of segments in its standard basis."""
    n = M.n
    basis = M.basis()
    maps = []
    for v in range(n):
        w = (v + 1) % n
        index = {b: x for x, b in enumerate(basis[w])}
        mat = [[0] * len(basis[v]) for _ in basis[w]]
        for c, (s, t) in enumerate(basis[v]):
            if t < M.segments[s][1]:
                mat[index[(s, t + 1)]][c] = 1
        maps.append(mat)
    return [len(b) for b in basis], maps


def fixed_point_lookup(k: int, n: int) -> dict[frozenset, Necklace]:
    out = {}
    for N in enumerate_necklaces(k, n):
        key = psi_inverse(N).segment_multiset()
        if key in out:
            raise RuntimeError(f"fixed points {out[key]} and {N} have the same segments")
        out[key] = N
    return out


def _classify(pt: RepPoint, lookup: dict[frozenset, Necklace]) -> Necklace:
    segs = segments_from_profile(rank_profile(pt), pt.n)
    if any(m > 1 for m in segs.values()):
        raise RuntimeError(f"point {pt.spaces} has a repeated segment {segs}")
    key = frozenset(segs)
    try:
        return lookup[key]
    except KeyError:
        raise RuntimeError(f"segments {sorted(key)} of point {pt.spaces} match no fixed point") from None


def iso_class(pt: RepPoint) -> Necklace:
    return _classify(pt, fixed_point_lookup(pt.k, pt.n))


def coordinate_point(N: Necklace, p: int) -> RepPoint:
    """The torus fixed point of N: V_a spanned by e_h for h in the juggling row a."""
    Q = psi_inverse(N)
    spaces = tuple(
        tuple(tuple(int(c == h) for c in range(1, N.n + 1)) for h in Q[a])
        for a in range(1, N.n + 1)
    )
    return RepPoint(N.n, N.k, p, spaces)


# Cellularity.

@dataclass
class CellularityReport:
    k: int
    n: int
    p: int
    points: int
    expected_points: int
    coordinate_points: int
    vertices: int
    classes: list[dict]
    mismatches: list[str]

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json(self) -> str:
        doc = {
            "k": self.k, "n": self.n, "p": self.p,
            "points": self.points, "expected_points": self.expected_points,
            "coordinate_points": self.coordinate_points, "vertices": self.vertices,
            "classes": self.classes, "mismatches": self.mismatches,
        }
        return json.dumps(doc, indent=1) + "\n"


def verify_cellularity(k: int, n: int, p: int, dims: dict[Necklace, int] | None = None) -> CellularityReport:
    """
    Compare the F_p point count and per-class counts against p^dim, with dims taken
    from the moment graph unless supplied.
    """
    from .momentgraph import build, cell_dim

    _check_kn(k, n)
    _check_prime(p)
    verts = enumerate_necklaces(k, n)
    if dims is None:
        g = build(k, n)
        dims = {v: cell_dim(g, v) for v in verts}
    hist = class_histogram(k, n, p)
    points = sum(hist.values())
    expected_points = sum(p ** dims[v] for v in verts)
    coord = count_coordinate_points(k, n)
    mismatches = []
    if points != expected_points:
        mismatches.append(f"{points} points over F_{p}, cell dimensions predict {expected_points}")
    if coord != len(verts):
        mismatches.append(f"{coord} coordinate points but {len(verts)} necklaces")
    classes = []
    for v in verts:
        size, want = hist.get(v, 0), p ** dims[v]
        classes.append({"necklace": str(v), "size": size, "expected": want})
        if size != want:
            mismatches.append(f"class {v} has {size} points, expected {p}^{dims[v]} = {want}")
    return CellularityReport(k, n, p, points, expected_points, coord, len(verts), classes, mismatches)


# Desingularization tower over F_p.

def count_desing_points(J, n: int, p: int) -> int:
    """
    Brute-force count of subrepresentations of the extended U_[n] with dimension
    vector d_J: subspaces N(i,r) <= span(e_r..e_n) with N(i,r+1) <= N(i,r) and
    s1(N(i,r)) <= N(i+1,r+1).
    """
    _check_prime(p)
    dv = d_vector(J, n)
    spaces = {}
    for r in range(1, n + 1):
        for i in range(1, n + 1):
            local = subspaces(dv[(i, r)], n - r + 1, p)
            spaces[(i, r)] = [tuple((0,) * (r - 1) + row for row in S) for S in local]
    order = [(i, r) for r in range(n, 0, -1) for i in range(1, n + 1)]
    chosen: dict[tuple[int, int], Subspace] = {}

    def ok(i, r, S):
        if r < n:
            if not contains(S, chosen[(i, r + 1)], p):
                return False
            j = i % n + 1
            if not contains(chosen[(j, r + 1)], shift(S), p):
                return False
        return True

    def walk(pos):
        if pos == len(order):
            return 1
        i, r = order[pos]
        total = 0
        for S in spaces[(i, r)]:
            if ok(i, r, S):
                chosen[(i, r)] = S
                total += walk(pos + 1)
        chosen.pop((i, r), None)
        return total

    return walk(0)


def tower_point_count(J, n: int, p: int) -> int:
    """Product of the Gaussian binomials of the tower fibers."""
    out = 1
    for f in tower(J, n).fibers():
        out *= gaussian_binomial(f.ambient_dim, f.sub_dim, p)
    return out

"""
k-subsets, rotated Gale orders, Grassmann necklaces and juggling patterns.

All residues are represented in [n] = {1, ..., n}; the value n stands for the
zero class.  A k-subset is a strictly increasing tuple of integers in [n].
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

KSubset = tuple[int, ...]


class NoGaleMinimumError(ValueError):
    """A set of k-subsets has no minimum in some rotated Gale order."""


def rep(x: int, n: int) -> int:
    """Representative of x mod n lying in [n]."""
    return (x - 1) % n + 1


def ksubset(elems: Iterable[int], n: int, k: int | None = None) -> KSubset:
    """Normalize ``elems`` to a sorted tuple and check it is a k-subset of [n]."""
    s = tuple(sorted(elems))
    if len(set(s)) != len(s):
        raise ValueError(f"repeated elements in {s}")
    if any(x < 1 or x > n for x in s):
        raise ValueError(f"{s} is not a subset of [1..{n}]")
    if k is not None and len(s) != k:
        raise ValueError(f"{s} does not have {k} elements")
    return s


def rotated_sort(a: int, S: Iterable[int], n: int) -> list[int]:
    """Sort S increasingly in the order a <_a a+1 <_a ... <_a a-1."""
    return sorted(S, key=lambda x: (x - a) % n)


def rotated_leq(a: int, S: Sequence[int], T: Sequence[int], n: int) -> bool:
    """
    Gale comparison ``S <=_a T`` of two k-subsets of [n].

    >>> rotated_leq(1, (1, 3), (2, 3), 3)
    True
    >>> rotated_leq(1, (2, 3), (1, 4), 4)
    False
    """
    if len(S) != len(T):
        raise ValueError(f"subsets {tuple(S)} and {tuple(T)} have different sizes")
    if not 1 <= a <= n:
        raise ValueError(f"vertex {a} not in [1..{n}]")
    for x in itertools.chain(S, T):
        if not 1 <= x <= n:
            raise ValueError(f"element {x} not in [1..{n}]")
    ks = [(x - a) % n for x in rotated_sort(a, S, n)]
    kt = [(x - a) % n for x in rotated_sort(a, T, n)]
    return all(s <= t for s, t in zip(ks, kt))


@dataclass(frozen=True, order=True)
class Necklace:
    """A (k, n) Grassmann necklace; ``entries[a-1]`` is I_a."""

    n: int
    k: int
    entries: tuple[KSubset, ...]

    def __post_init__(self):
        n, k = self.n, self.k
        if not 1 <= k < n:
            raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
        entries = tuple(ksubset(e, n, k) for e in self.entries)
        if len(entries) != n:
            raise ValueError(f"a ({k},{n}) necklace needs {n} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)
        for a in range(1, n + 1):
            cur = set(self[a]) - {a}
            if not cur <= set(self[a + 1]):
                raise ValueError(
                    f"I_{a} \\ {{{a}}} = {sorted(cur)} is not contained in I_{rep(a + 1, n)} = {list(self[a + 1])}"
                )

    def __getitem__(self, a: int) -> KSubset:
        """I_a with the index taken mod n."""
        return self.entries[(a - 1) % self.n]

    def __str__(self) -> str:
        if self.k == 1 and self.n < 10:
            return "".join(str(e[0]) for e in self.entries)
        return "".join("{" + ",".join(map(str, e)) + "}" for e in self.entries)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "entries": [list(e) for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "Necklace":
        return cls(d["n"], d["k"], tuple(tuple(e) for e in d["entries"]))

    @classmethod
    def from_json(cls, text: str) -> "Necklace":
        return cls.from_dict(json.loads(text))


def parse_necklace(text: str, k: int, n: int) -> Necklace:
    """
    Parse ``"121"`` (k = 1, single digits) or ``"13|34|34|14"`` / ``"1,3;3,4;..."``.

    >>> str(parse_necklace("13|34|34|14", 2, 4))
    '{1,3}{3,4}{3,4}{1,4}'
    """
    text = text.strip()
    if text.startswith('{"'):
        return Necklace.from_json(text)
    for sep in ("|", ";", "/"):
        if sep in text:
            parts = [p for p in text.split(sep)]
            break
    else:
        if k == 1 and len(text) == n:
            parts = list(text)
        else:
            raise ValueError(f"cannot parse necklace {text!r}")
    entries = []
    for p in parts:
        p = p.strip().strip("{}")
        if "," in p:
            entries.append(tuple(int(x) for x in p.split(",")))
        elif n < 10:
            entries.append(tuple(int(c) for c in p))
        else:
            entries.append((int(p),))
    return Necklace(n, k, tuple(entries))


def _check_kn(k: int, n: int) -> None:
    if not (isinstance(k, int) and isinstance(n, int)) or not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")


def necklace_leq(N1: Necklace, N2: Necklace) -> bool:
    """``N1 <= N2`` iff ``I_a <=_a J_a`` for all a."""
    if (N1.n, N1.k) != (N2.n, N2.k):
        raise ValueError(f"necklaces of types ({N1.k},{N1.n}) and ({N2.k},{N2.n}) are not comparable")
    return all(rotated_leq(a, N1[a], N2[a], N1.n) for a in range(1, N1.n + 1))


def _successors(prev: KSubset, a: int, n: int) -> list[KSubset]:
    """All k-subsets I_{a+1} compatible with I_a = prev, in lexicographic order."""
    if a not in prev:
        return [prev]
    rest = set(prev) - {a}
    return sorted(tuple(sorted(rest | {b})) for b in range(1, n + 1) if b not in rest)


def enumerate_necklaces(k: int, n: int) -> list[Necklace]:
    """All (k, n) Grassmann necklaces, lexicographic in (I_1, I_2, ...)."""
    _check_kn(k, n)
    out: list[Necklace] = []

    def extend(chain: list[KSubset]) -> None:
        a = len(chain)
        if a == n:
            if (set(chain[-1]) - {n}) <= set(chain[0]):
                out.append(Necklace(n, k, tuple(chain)))
            return
        for nxt in _successors(chain[-1], a, n):
            chain.append(nxt)
            extend(chain)
            chain.pop()

    for first in itertools.combinations(range(1, n + 1), k):
        extend([first])
    return out


@dataclass(frozen=True)
class JugglingPattern:
    """Collection (J_a) with ``j in J_a, j != n  =>  j+1 in J_{a+1}``."""

    n: int
    k: int
    entries: tuple[KSubset, ...]

    def __post_init__(self):
        n, k = self.n, self.k
        _check_kn(k, n)
        entries = tuple(ksubset(e, n, k) for e in self.entries)
        if len(entries) != n:
            raise ValueError(f"need {n} entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)
        for a in range(n):
            nxt = set(entries[(a + 1) % n])
            for j in entries[a]:
                if j != n and j + 1 not in nxt:
                    raise ValueError(f"{j} in J_{a + 1} but {j + 1} not in J_{rep(a + 2, n)}")

    def __getitem__(self, a: int) -> KSubset:
        return self.entries[(a - 1) % self.n]


def necklace_to_juggling(N: Necklace) -> JugglingPattern:
    """J_a = {a - i mod n : i in I_a}."""
    n = N.n
    return JugglingPattern(n, N.k, tuple(
        tuple(sorted(rep(a - i, n) for i in N[a])) for a in range(1, n + 1)
    ))


def juggling_to_necklace(J: JugglingPattern) -> Necklace:
    """Inverse of :func:`necklace_to_juggling`: I_a = {a - j mod n : j in J_a}."""
    n = J.n
    return Necklace(n, J.k, tuple(
        tuple(sorted(rep(a - j, n) for j in J[a])) for a in range(1, n + 1)
    ))


def gale_min(a: int, subsets: Iterable[Sequence[int]], n: int) -> KSubset:
    """The <=_a Gale minimum of a nonempty family of k-subsets."""
    family = sorted({tuple(sorted(s)) for s in subsets})
    if not family:
        raise ValueError("empty family has no minimum")
    # the minimum, if any, is the lexicographic minimum in the rotated keys
    cand = min(family, key=lambda s: [(x - a) % n for x in rotated_sort(a, s, n)])
    for s in family:
        if not rotated_leq(a, cand, s, n):
            raise NoGaleMinimumError(f"no <=_{a} Gale minimum: {cand} and {s} are incomparable")
    return cand


def necklace_of_bases(bases: Iterable[Sequence[int]], n: int, k: int) -> Necklace:
    """Necklace of a positroid given by its set of bases: I_a = min_a of the bases."""
    family = [ksubset(b, n, k) for b in bases]
    if not family:
        raise ValueError("the set of bases must be nonempty")
    return Necklace(n, k, tuple(gale_min(a, family, n) for a in range(1, n + 1)))


def hasse_covers(elements: Sequence, leq) -> list[tuple[int, int]]:
    """
    Cover relations (i, j) meaning elements[i] < elements[j] with nothing in between.

    ``leq`` is a callable partial order.
    """
    m = len(elements)
    below = [[i != j and leq(elements[i], elements[j]) for j in range(m)] for i in range(m)]
    covers = []
    for i in range(m):
        for j in range(m):
            if below[i][j] and not any(below[i][z] and below[z][j] for z in range(m)):
                covers.append((i, j))
    return covers

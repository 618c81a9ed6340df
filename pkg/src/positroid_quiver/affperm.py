"""Bounded affine permutations, stored by their window [f(1), ..., f(n)]."""
from __future__ import annotations

import json
from dataclasses import dataclass

from .necklace import Necklace, rep


@dataclass(frozen=True)
class BoundedAffinePermutation:
    n: int
    k: int
    window: tuple[int, ...]

    def __post_init__(self):
        n, k, w = self.n, self.k, tuple(self.window)
        object.__setattr__(self, "window", w)
        if len(w) != n:
            raise ValueError(f"window of length {len(w)} for n={n}")
        for i, fi in enumerate(w, start=1):
            if not i <= fi <= i + n:
                raise ValueError(f"f({i}) = {fi} violates {i} <= f(i) <= {i + n}")
        if len({fi % n for fi in w}) != n:
            raise ValueError(f"window {list(w)} does not extend to a bijection of Z")
        if sum(fi - i for i, fi in enumerate(w, start=1)) != k * n:
            raise ValueError(f"window {list(w)} does not have sum (f(i) - i) = {k * n}")

    def __call__(self, i: int) -> int:
        q, r = divmod(i - 1, self.n)
        return self.window[r] + q * self.n

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "window": list(self.window)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_window(cls, window, n: int | None = None) -> "BoundedAffinePermutation":
        window = tuple(window)
        n = len(window) if n is None else n
        total = sum(fi - i for i, fi in enumerate(window, start=1))
        if total % n:
            raise ValueError(f"window {list(window)} has sum (f(i) - i) = {total}, not a multiple of {n}")
        return cls(n, total // n, window)


def identity_k(k: int, n: int) -> BoundedAffinePermutation:
    """id_k(i) = i + k."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return BoundedAffinePermutation(n, k, tuple(i + k for i in range(1, n + 1)))


def from_necklace(N: Necklace) -> BoundedAffinePermutation:
    """
    f(a) = a if a is not in I_a; otherwise I_{a+1} = I_a - {a} + {b} and f(a) is the
    lift of b to (a, a+n].
    """
    n = N.n
    window = []
    for a in range(1, n + 1):
        cur = set(N[a])
        if a not in cur:
            window.append(a)
            continue
        new = set(N[a + 1]) - (cur - {a})
        if len(new) != 1:
            raise ValueError(f"I_{rep(a + 1, n)} is not I_{a} with one element exchanged")
        (b,) = new
        c = a + (b - a) % n
        if c == a:
            c += n
        window.append(c)
    return BoundedAffinePermutation(n, N.k, tuple(window))


def to_necklace(f: BoundedAffinePermutation) -> Necklace:
    """I_a = {f(b) mod n : b < a, f(b) >= a}; b ranges over [a-n, a-1]."""
    n = f.n
    entries = []
    for a in range(1, n + 1):
        entries.append(tuple(sorted(rep(f(b), n) for b in range(a - n, a) if f(b) >= a)))
    return Necklace(n, f.k, tuple(entries))


def length(f: BoundedAffinePermutation) -> int:
    """
    Number of pairs (i, j) in [n] x Z with i < j and f(i) > f(j).

    Only j in (i, i+n) can contribute: for j >= i+n, f(j) >= j >= i+n >= f(i).

    >>> length(BoundedAffinePermutation(3, 1, (4, 2, 3)))
    2
    """
    n = f.n
    return sum(1 for i in range(1, n + 1) for j in range(i + 1, i + n) if f(i) > f(j))

"""Exact rank computations: over Q with fractions, and over prime fields."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def rank_q(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    """Rank over Q of a sparse matrix given as rows {column: coefficient}."""
    pivots: dict[int, dict[int, Fraction]] = {}
    rank = 0
    for row in rows:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            if col not in pivots:
                inv = 1 / r[col]
                pivots[col] = {c: v * inv for c, v in r.items()}
                rank += 1
                break
            prow = pivots[col]
            factor = r[col]
            for c, v in prow.items():
                nv = r.get(c, 0) - factor * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return rank


def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form over F_p with zero rows dropped."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    out: list[list[int]] = []
    for col in range(ncols):
        piv = next((i for i, r in enumerate(m) if r[col]), None)
        if piv is None:
            continue
        r = m.pop(piv)
        inv = pow(r[col], p - 2, p)
        r = [x * inv % p for x in r]
        for other in (*out, *m):
            f = other[col]
            if f:
                for c in range(ncols):
                    other[c] = (other[c] - f * r[c]) % p
        out.append(r)
    out.sort(key=lambda r: next(c for c, x in enumerate(r) if x))
    return tuple(tuple(r) for r in out)


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    return len(rref_mod_p(rows, p))

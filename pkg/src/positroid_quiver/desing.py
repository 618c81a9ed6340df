"""
Dimension vectors on the extended cyclic quiver and the tower of Grassmannian
fibrations desingularizing an irreducible component X_J(k, n).

Vertices of the extended quiver are pairs (i, r), i in Z_n (representatives 1..n)
and r = 1..n.  Over (i, r) the extended U_[n] is spanned by v_r, ..., v_n; the arrow
(i, r) -> (i+1, r+1) sends v_h to v_{h+1} (v_n to 0) and (i, r) -> (i, r-1) is the
inclusion.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .necklace import ksubset, rep


@dataclass(frozen=True)
class ExtDimVector:
    n: int
    J: tuple[int, ...]
    d: dict[tuple[int, int], int]

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, r = key
        if r == self.n + 1:
            return 0
        return self.d[(rep(i, self.n), r)]

    @property
    def k(self) -> int:
        return len(self.J)

    def grid(self) -> list[list[int]]:
        """grid[i-1][r-1] = d[(i, r)]."""
        return [[self.d[(i, r)] for r in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "J": list(self.J), "d": self.grid()}, separators=(",", ":"))


def parse_subset(text: str) -> tuple[int, ...]:
    """``"1,3"`` -> (1, 3)."""
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if not parts:
        raise ValueError("J must be nonempty")
    return tuple(int(p) for p in parts)


def d_vector(J, n: int) -> ExtDimVector:
    """d[(i, r)] = #(J meet the cyclic arc i, i+1, ..., i+n-r)."""
    J = tuple(J)
    if not J:
        raise ValueError("J must be nonempty")
    J = ksubset(J, n)
    Jset = set(J)
    d = {}
    for i in range(1, n + 1):
        for r in range(1, n + 1):
            d[(i, r)] = sum(1 for t in range(n - r + 1) if rep(i + t, n) in Jset)
    return ExtDimVector(n, J, d)


@dataclass(frozen=True)
class Fiber:
    i: int
    r: int
    sub_dim: int
    ambient_dim: int

    def __post_init__(self):
        if not 0 <= self.sub_dim <= self.ambient_dim:
            raise ValueError(f"fiber at ({self.i},{self.r}) has sub_dim {self.sub_dim} > ambient {self.ambient_dim}")

    @property
    def dim(self) -> int:
        return self.sub_dim * (self.ambient_dim - self.sub_dim)


@dataclass(frozen=True)
class TowerSpec:
    n: int
    J: tuple[int, ...]
    layers: tuple[tuple[Fiber, ...], ...]  # r = n, n-1, ..., 1

    def layer(self, r: int) -> tuple[Fiber, ...]:
        return self.layers[self.n - r]

    def fibers(self) -> list[Fiber]:
        return [f for layer in self.layers for f in layer]


def tower(J, n: int) -> TowerSpec:
    """
    Layer r chooses N^(i,r) with N^(i,r+1) <= N^(i,r) <= alpha^{-1}(N^(i+1,r+1)).
    The preimage has dimension d(i+1,r+1) + 1 (alpha kills v_n), so the fiber is
    Gr_{d(i,r) - d(i,r+1)} of a space of dimension d(i+1,r+1) + 1 - d(i,r+1).
    """
    dv = d_vector(J, n)
    layers = []
    for r in range(n, 0, -1):
        layer = []
        for i in range(1, n + 1):
            sub = dv[(i, r)] - dv[(i, r + 1)]
            amb = dv[(i + 1, r + 1)] + 1 - dv[(i, r + 1)]
            layer.append(Fiber(i, r, sub, amb))
        layers.append(tuple(layer))
    return TowerSpec(n, dv.J, tuple(layers))


def desing_dim(J, n: int) -> int:
    return sum(f.dim for f in tower(J, n).fibers())


def render_tower(t: TowerSpec) -> str:
    """One line per layer: Gr(sub, ambient) for each i, and the layer dimension."""
    lines = []
    for layer in t.layers:
        r = layer[0].r
        cells = " ".join(f"Gr({f.sub_dim},{f.ambient_dim})" for f in layer)
        lines.append(f"r={r}: {cells}  dim {sum(f.dim for f in layer)}")
    return "\n".join(lines)


def render_grid(dv: ExtDimVector) -> str:
    """Rows r = n..1, columns i = 1..n."""
    n = dv.n
    header = "r\\i " + " ".join(f"{i:>2}" for i in range(1, n + 1))
    rows = [f"{r:>3} " + " ".join(f"{dv[(i, r)]:>2}" for i in range(1, n + 1)) for r in range(n, 0, -1)]
    return "\n".join([header, *rows])

"""
Moment graph of X(k, n) under the skeletal (n+1)-torus, cell dimensions and
Poincare polynomials.

Vertices are necklaces in canonical order.  An edge src -> dst comes from a
mutation of psi^{-1}(src) with image dst, so dst < src.  Its label is the
character eps_j - eps_j' - m*delta, where j, j' are the source and target
segments of the moved run and m = #[j', j)_a for the start vertex a.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .affperm import from_necklace, length
from .necklace import Necklace, enumerate_necklaces, hasse_covers, necklace_leq
from .quiver import mutation_moves, psi, psi_inverse


class ConsistencyError(RuntimeError):
    """Two independent derivations of the same quantity disagree."""


@dataclass(frozen=True, order=True)
class Character:
    """sum eps[i-1] * eps_i + delta * delta."""

    eps: tuple[int, ...]
    delta: int

    def __str__(self) -> str:
        return self.render()

    def indices(self) -> tuple[int, int]:
        """(j, j') for a label eps_j - eps_j' - m delta."""
        pos = [i + 1 for i, c in enumerate(self.eps) if c == 1]
        neg = [i + 1 for i, c in enumerate(self.eps) if c == -1]
        if len(pos) != 1 or len(neg) != 1 or sum(map(abs, self.eps)) != 2:
            raise ValueError(f"{self.eps} is not of the form eps_j - eps_j'")
        return pos[0], neg[0]

    def render(self) -> str:
        """``e<j>-e<j'>-<m>d``."""
        j, jp = self.indices()
        return f"e{j}-e{jp}-{-self.delta}d"

    @classmethod
    def label(cls, n: int, j: int, jp: int, m: int) -> "Character":
        eps = [0] * n
        eps[j - 1] += 1
        eps[jp - 1] -= 1
        return cls(tuple(eps), -m)


def cyclic_count(a: int, x: int, y: int, n: int) -> int:
    """#[x, y)_a, the number of z with x <=_a z <_a y."""
    px, py = (x - a) % n, (y - a) % n
    return max(py - px, 0)


@dataclass(frozen=True)
class Edge:
    src: int
    dst: int
    label: Character


@dataclass
class MomentGraph:
    k: int
    n: int
    vertices: list[Necklace]
    edges: list[Edge]
    index: dict[Necklace, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}

    def vertex_index(self, N: Necklace) -> int:
        try:
            return self.index[N]
        except KeyError:
            raise ValueError(f"{N} is not a vertex of the ({self.k},{self.n}) moment graph") from None

    def out_edges(self, N: Necklace) -> list[Edge]:
        i = self.vertex_index(N)
        return [e for e in self.edges if e.src == i]

    def outdegree(self, N: Necklace) -> int:
        return len(self.out_edges(N))

    def subgraph(self, keep: set[Necklace]) -> "MomentGraph":
        """Full subgraph on ``keep``, vertices in canonical order."""
        verts = [v for v in self.vertices if v in keep]
        new = {self.index[v]: i for i, v in enumerate(verts)}
        edges = [Edge(new[e.src], new[e.dst], e.label) for e in self.edges
                 if e.src in new and e.dst in new]
        return MomentGraph(self.k, self.n, verts, edges)


def build(k: int, n: int) -> MomentGraph:
    verts = enumerate_necklaces(k, n)
    index = {v: i for i, v in enumerate(verts)}
    edges = []
    for i, N in enumerate(verts):
        for mu in mutation_moves(psi_inverse(N)):
            j, jp, a = mu.source_segment, mu.target_segment, mu.vertex
            if j == jp:
                raise ConsistencyError(f"mutation of {N} keeps the segment {j}")
            m = cyclic_count(a, jp, j, n)
            if m != mu.shift:
                raise ConsistencyError(
                    f"edge out of {N}: #[{jp},{j})_{a} = {m} but the run moved down by {mu.shift}"
                )
            dst = index[psi(mu.target)]
            edges.append(Edge(i, dst, Character.label(n, j, jp, m)))
    edges.sort(key=lambda e: (e.src, e.dst))
    return MomentGraph(k, n, verts, edges)


def cell_dim(g: MomentGraph, N: Necklace) -> int:
    """
    Outdegree of N, checked against the length of f(N) and, for k = 1, against
    n minus the number of distinct entries.
    """
    d = g.outdegree(N)
    l = length(from_necklace(N))
    if d != l:
        raise ConsistencyError(f"{N}: outdegree {d} but bounded affine permutation length {l}")
    if g.k == 1:
        distinct = len({e[0] for e in N.entries})
        if d != g.n - distinct:
            raise ConsistencyError(f"{N}: outdegree {d} but n - #distinct entries = {g.n - distinct}")
    return d


def poincare_of_graph(g: MomentGraph) -> list[int]:
    top = g.k * (g.n - g.k)
    coeffs = [0] * (top + 1)
    for v in g.vertices:
        coeffs[cell_dim(g, v)] += 1
    return coeffs


def poincare(k: int, n: int) -> list[int]:
    """Coefficients [c_0, ..., c_{k(n-k)}], c_d = number of d-dimensional cells."""
    coeffs = poincare_of_graph(build(k, n))
    if coeffs[-1] != math.comb(n, k):
        raise ConsistencyError(f"{coeffs[-1]} top cells, expected binom({n},{k})")
    return coeffs


def tnn_poincare(k: int, n: int) -> list[int]:
    """Poincare polynomial of the tnn Grassmannian cell decomposition: the reversal."""
    return poincare(k, n)[::-1]


def cell_closure(g: MomentGraph, N: Necklace) -> set[Necklace]:
    g.vertex_index(N)
    return {v for v in g.vertices if necklace_leq(v, N)}


def hasse_diagram(g: MomentGraph) -> list[tuple[int, int]]:
    """Cover pairs (upper, lower) of the rotated Gale order, as vertex indices."""
    return [(j, i) for i, j in hasse_covers(g.vertices, necklace_leq)]


def format_poly(coeffs: list[int], var: str = "q") -> str:
    """
    >>> format_poly([1, 3, 3])
    '1 + 3q + 3q^2'
    >>> format_poly([3, 3, 1])
    '3 + 3q + q^2'
    """
    terms = []
    for d, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if d == 0 else var if d == 1 else f"{var}^{d}"
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) if terms else "0"


def export_dot(g: MomentGraph) -> str:
    lines = [f'digraph "X({g.k},{g.n})" {{']
    for i, v in enumerate(g.vertices):
        lines.append(f'  v{i} [label="{v}"];')
    for e in g.edges:
        lines.append(f'  v{e.src} -> v{e.dst} [label="{e.label.render()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: MomentGraph) -> str:
    doc = {
        "k": g.k,
        "n": g.n,
        "vertices": [v.to_dict() for v in g.vertices],
        "edges": [{"src": e.src, "dst": e.dst, "eps": list(e.label.eps), "delta": -e.label.delta}
                  for e in g.edges],
    }
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def load_json(text: str) -> MomentGraph:
    doc = json.loads(text)
    verts = [Necklace.from_dict(v) for v in doc["vertices"]]
    edges = [Edge(e["src"], e["dst"], Character(tuple(e["eps"]), -e["delta"])) for e in doc["edges"]]
    return MomentGraph(doc["k"], doc["n"], verts, edges)

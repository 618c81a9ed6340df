import math
from pathlib import Path

import pytest

from positroid_quiver.affperm import from_necklace, length
from positroid_quiver.momentgraph import (
    Character,
    ConsistencyError,
    MomentGraph,
    build,
    cell_closure,
    cell_dim,
    cyclic_count,
    export_dot,
    export_json,
    format_poly,
    hasse_diagram,
    load_json,
    poincare,
    poincare_of_graph,
    tnn_poincare,
)
from positroid_quiver.necklace import enumerate_necklaces, necklace_leq, parse_necklace

GOLDEN = Path(__file__).parent / "golden"


def nk(s, k=1, n=3):
    return parse_necklace(s, k, n)


X13_LABELS = {
    ("111", "121"): "e1-e2-2d",
    ("111", "133"): "e1-e3-1d",
    ("121", "123"): "e1-e3-1d",
    ("133", "123"): "e3-e2-1d",
    ("223", "123"): "e2-e1-1d",
    ("222", "223"): "e2-e3-2d",
    ("222", "121"): "e2-e1-1d",
    ("333", "223"): "e3-e2-1d",
    ("333", "133"): "e3-e1-2d",
}


def test_x13_labels():
    g = build(1, 3)
    got = {(str(g.vertices[e.src]), str(g.vertices[e.dst])): e.label.render() for e in g.edges}
    assert got == X13_LABELS


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3)])
def test_dot_golden(k, n):
    assert export_dot(build(k, n)) == (GOLDEN / f"moment_graph_{k}_{n}.dot").read_text()


def test_minimal_vertex_has_no_edges():
    g = build(1, 2)
    assert g.outdegree(nk("12", 1, 2)) == 0
    assert "v1 ->" not in export_dot(g)


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5)])
def test_json_roundtrip(k, n):
    g = build(k, n)
    h = load_json(export_json(g))
    assert h.vertices == g.vertices and h.edges == g.edges


@pytest.mark.parametrize("k,n", [(k, n) for n in range(2, 7) for k in range(1, n)])
def test_graph_invariants(k, n):
    g = build(k, n)
    assert g.vertices == enumerate_necklaces(k, n)
    assert g.edges == sorted(g.edges, key=lambda e: (e.src, e.dst))
    for e in g.edges:
        assert e.src != e.dst
        assert necklace_leq(g.vertices[e.dst], g.vertices[e.src])
        j, jp = e.label.indices()
        assert j != jp and 1 <= -e.label.delta <= n - 1
    for v in g.vertices:
        d = cell_dim(g, v)
        assert d == length(from_necklace(v))
        if k == 1:
            assert d == n - len(set(v.entries))
    P = poincare_of_graph(g)
    assert len(P) == k * (n - k) + 1 and P[-1] == math.comb(n, k)


@pytest.mark.parametrize("n", [7])
def test_k1_dims_n7(n):
    g = build(1, n)
    for v in g.vertices:
        assert cell_dim(g, v) == n - len(set(v.entries))


def test_cell_dim_examples():
    g = build(1, 3)
    assert cell_dim(g, nk("123")) == 0
    assert cell_dim(g, nk("111")) == 2
    g = build(2, 4)
    assert cell_dim(g, parse_necklace("13|34|34|14", 2, 4)) == 2
    with pytest.raises(ValueError):
        cell_dim(g, nk("111"))


def test_cell_dim_detects_inconsistency():
    g = build(1, 3)
    bogus = MomentGraph(1, 3, g.vertices, g.edges[1:])
    with pytest.raises(ConsistencyError):
        cell_dim(bogus, g.vertices[0])


def test_poincare_examples():
    assert poincare(1, 3) == [1, 3, 3]
    assert tnn_poincare(1, 3) == [3, 3, 1]
    assert tnn_poincare(1, 4) == [4, 6, 4, 1]
    assert format_poly(poincare(1, 3)) == "1 + 3q + 3q^2"
    assert format_poly(tnn_poincare(1, 3)) == "3 + 3q + q^2"


@pytest.mark.parametrize("n", range(2, 8))
def test_poincare_k1(n):
    assert poincare(1, n) == [math.comb(n, d) for d in range(n)]


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_tnn_reversal(k, n):
    P, T = poincare(k, n), tnn_poincare(k, n)
    top = k * (n - k)
    assert all(T[d] == P[top - d] for d in range(top + 1))
    assert sum(P) == len(enumerate_necklaces(k, n))


def test_cell_closure():
    g = build(1, 3)
    assert cell_closure(g, nk("111")) == {nk(s) for s in ("111", "121", "133", "123")}
    assert cell_closure(g, nk("123")) == {nk("123")}
    sub = g.subgraph(cell_closure(g, nk("111")))
    assert len(sub.vertices) == 4 and len(sub.edges) == 4


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 4), (1, 5), (2, 5)])
def test_top_closures_cover_everything(k, n):
    g = build(k, n)
    top = [v for v in g.vertices if cell_dim(g, v) == k * (n - k)]
    assert set().union(*(cell_closure(g, v) for v in top)) == set(g.vertices)


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)])
def test_hasse_covers_are_edges(k, n):
    g = build(k, n)
    edges = {(e.src, e.dst) for e in g.edges}
    for u, l in hasse_diagram(g):
        assert (u, l) in edges
        assert cell_dim(g, g.vertices[u]) == cell_dim(g, g.vertices[l]) + 1


def test_cyclic_count():
    assert cyclic_count(1, 2, 1, 3) == 0
    assert cyclic_count(1, 1, 3, 3) == 2
    assert cyclic_count(2, 3, 1, 3) == 1


def test_character_shape():
    with pytest.raises(ValueError):
        Character((1, 1, 0), -1).render()
    assert str(Character.label(4, 2, 4, 3)) == "e2-e4-3d"

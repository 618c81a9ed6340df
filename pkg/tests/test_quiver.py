import itertools

import pytest
from hypothesis import given, settings, strategies as st

from positroid_quiver.necklace import enumerate_necklaces, necklace_leq, parse_necklace
from positroid_quiver.quiver import (
    SegmentRep,
    SuccessorClosedSubquiver,
    closure_poset,
    degeneration_dim,
    enumerate_sc_subquivers,
    gale_poset,
    hom_dim,
    iter_segment_points,
    mutation_moves,
    mutations,
    psi,
    psi_inverse,
)


def hom_oracle(M: SegmentRep, N: SegmentRep) -> int:
    """
    Hom(U(i;l), N) is the set of vectors of N at the start vertex of U(i;l) killed
    by the path of length l.  On a target segment of length l', the basis vector at
    position t is killed iff t + l > l'.
    """
    n = M.n
    total = 0
    for i, l in M.segments:
        s = (i - l) % n  # start vertex, 0-based
        for ip, lp in N.segments:
            sp = (ip - lp) % n
            for t in range(1, lp + 1):
                if (sp + t - 1) % n == s and t + l > lp:
                    total += 1
    return total


def brute_sc(k, n):
    subsets = list(itertools.combinations(range(1, n + 1), k))
    return [rows for rows in itertools.product(subsets, repeat=n)
            if all(h + 1 in rows[(a + 1) % n] for a in range(n) for h in rows[a] if h < n)]


@pytest.mark.parametrize("k,n", [(1, 2), (1, 3), (2, 4), (1, 4), (2, 5), (3, 5)])
def test_sc_enumeration(k, n):
    qs = enumerate_sc_subquivers(k, n)
    assert [Q.rows for Q in qs] == brute_sc(k, n)
    assert len(qs) == len(enumerate_necklaces(k, n))
    assert {psi(Q) for Q in qs} == set(enumerate_necklaces(k, n))


def test_sc_examples():
    assert len(enumerate_sc_subquivers(1, 3)) == 7
    assert len(enumerate_sc_subquivers(1, 2)) == 3
    for n in range(2, 6):
        SuccessorClosedSubquiver(n, 1, ((n,),) * n)
    with pytest.raises(ValueError):
        SuccessorClosedSubquiver(3, 1, ((1,), (1,), (1,)))


def test_psi_examples():
    assert psi(SuccessorClosedSubquiver(3, 1, ((3,), (3,), (3,)))) == parse_necklace("123", 1, 3)
    assert psi_inverse(parse_necklace("111", 1, 3)).rows == ((3,), (1,), (2,))


@pytest.mark.parametrize("k,n", [(2, 4), (2, 5)])
def test_psi_inverse_pair(k, n):
    for N in enumerate_necklaces(k, n):
        assert psi(psi_inverse(N)) == N


def test_segment_points():
    assert list(iter_segment_points(1, 3)) == [(2, 1), (3, 2), (1, 3)]


def test_mutation_examples():
    nk = lambda s: parse_necklace(s, 1, 3)
    assert mutations(psi_inverse(nk("123"))) == []
    assert {psi(Q) for Q in mutations(psi_inverse(nk("111")))} == {nk("121"), nk("133")}


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (1, 5), (2, 5), (3, 6)])
def test_mutation_structure(k, n):
    for Q in enumerate_sc_subquivers(k, n):
        runs = Q.runs()
        for mu in mutation_moves(Q):
            assert necklace_leq(psi(mu.target), psi(Q)) and mu.target != Q
            moved = {(((mu.vertex + t - 1) % n) + 1, mu.position + t) for t in range(mu.length)}
            landed = {(a, h + mu.shift) for a, h in moved}
            assert Q.points() - mu.target.points() == moved
            assert mu.target.points() - Q.points() == landed
            assert runs[mu.source_segment][0] == mu.position


def test_closure_poset_13():
    nk = lambda s: parse_necklace(s, 1, 3)
    pairs = closure_poset(1, 3)
    below_111 = {lo for lo, hi in pairs if hi == nk("111")}
    assert below_111 == {nk(s) for s in ("111", "121", "133", "123")}
    assert all((N, N) in pairs for N in enumerate_necklaces(1, 3))


@pytest.mark.parametrize("k,n", [(1, 3), (1, 4), (2, 4), (2, 5)])
def test_closure_equals_gale(k, n):
    assert closure_poset(k, n) == gale_poset(k, n)


@pytest.mark.parametrize("n", range(2, 7))
def test_end_u_n(n):
    assert hom_dim(SegmentRep.u_n(n), SegmentRep.u_n(n)) == n * n


def test_tangent_example():
    M = SegmentRep(5, tuple((i, 3) for i in range(1, 6)))
    N = SegmentRep(5, ((1, 2), (2, 2), (3, 1), (4, 2), (5, 1)))
    assert hom_dim(M, N) == 8
    assert hom_oracle(M, N) == 8


def test_hom_trivial():
    assert hom_dim(SegmentRep(3, ((1, 1),)), SegmentRep(3, ((1, 1),))) == 1


@st.composite
def segment_reps(draw, n=None):
    n = draw(st.integers(2, 5)) if n is None else n
    segs = draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), min_size=1, max_size=4))
    return SegmentRep(n, tuple(segs))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(segment_reps(n), segment_reps(n))))
def test_hom_dim_matches_oracle(pair):
    M, N = pair
    assert hom_dim(M, N) == hom_oracle(M, N)
    assert hom_dim(M, M) >= len(M.segments)


def test_segment_rep_parse():
    M = SegmentRep.parse("1:2,2:2,3:1", 4)
    assert M.segments == ((1, 2), (2, 2), (3, 1))
    assert SegmentRep.parse(M.to_json(), 4) == M
    assert M.dims() == [2, 1, 1, 1]
    with pytest.raises(ValueError):
        SegmentRep(3, ((1, 4),))


def test_degeneration_examples():
    assert degeneration_dim(3, 1, 1) == 1
    # without k - l <= n - r the l = 3 term would give 5 here
    assert degeneration_dim(5, 4, 5) == 4
    for n in range(2, 8):
        for k in range(1, n):
            top = k * (n - k)
            assert degeneration_dim(n, k, 0) == top
            assert degeneration_dim(n, k, n) == top
            for r in range(1, n):
                assert degeneration_dim(n, k, r) < top
    with pytest.raises(ValueError):
        degeneration_dim(3, 1, 4)

import pytest

from wurst.bisimplicial import (
    BiSimplicialMap, block_decomposition, block_pattern_counts, boundary_bisimplex,
    boundary_bisimplex_inclusion, box, collapsed_join, collapsed_join_map, cut,
    cut_postcompose, cut_restrict_source, cut_restrict_target, diag, flip,
    is_isomorphic_bi, lrev, rev, rrev,
)
from wurst.simplicial import (
    PointedDirected, boundary, coface_tuple, is_directed, is_isomorphic,
    left_suspension, product, right_suspension, standard_simplex, suspension,
)


def test_box_examples():
    pt = standard_simplex(0, 2)
    B = box(pt, pt)
    assert all(B.counts[i][j] == 1 for i in range(3) for j in range(3))
    d2 = standard_simplex(2, 2)
    B2 = box(d2, pt)
    for i in range(3):
        for j in range(3):
            assert B2.counts[i][j] == d2.counts[i]


def test_cut_examples():
    c0 = cut(0, 2, 2)
    assert all(c0.counts[i][j] == 1 for i in range(3) for j in range(3))
    c1 = cut(1, 2, 2)
    assert c1.counts[0][0] == 3


def test_cut_restrictions_are_bisimplicial():
    for n in range(3):
        cut_restrict_source(n, 2, 2)._validate()
        cut_restrict_target(n, 2, 2)._validate()


def test_cut_postcompose_natural():
    f = cut_postcompose(coface_tuple(2, 1), 1, 2, 2, 2)
    f._validate()


def test_collapsed_join_examples():
    J00 = collapsed_join(0, 0, 2)
    assert is_isomorphic(J00.carrier, standard_simplex(1, 2)) is not None
    J10 = collapsed_join(1, 0, 3)
    assert J10.carrier.counts[0] == 2
    assert len(J10.carrier.nondegenerate(1)) == 2
    assert len(J10.carrier.nondegenerate(2)) == 1
    assert len(J10.carrier.nondegenerate(3)) == 0
    for i in range(3):
        for j in range(3 - i):
            assert is_directed(collapsed_join(i, j, 3))


def test_collapsed_join_matches_pushout_construction():
    # independent construction through the generic colimit machinery
    from wurst.simplicial import (collapse, join, _join_part_inclusion)
    for (i, j) in [(1, 0), (0, 1), (1, 1), (2, 0)]:
        cap = 3
        di, dj = standard_simplex(i, cap), standard_simplex(j, cap)
        step1, inc1, _ = collapse(_join_part_inclusion(di, dj, "x"))
        # include the second block into the quotient and collapse it
        from wurst.simplicial import SimplicialMap, compose_maps
        inc_y = _join_part_inclusion(di, dj, "y")
        comp = [tuple(inc1(n, inc_y(n, s)) for s in dj.simplices(n))
                for n in range(cap + 1)]
        inc2 = SimplicialMap(dj, step1, comp)
        Q, _, _ = collapse(inc2)
        assert is_isomorphic(Q, collapsed_join(i, j, cap).carrier) is not None


def test_collapsed_join_map_validates():
    collapsed_join_map((0, 2), 2, (0,), 0, 3)._validate()


def test_dec_of_suspensions():
    # suspension of the interval decomposes as cut(1)
    S = suspension(standard_simplex(1, 4))
    D = block_decomposition(S, 1, 2)
    C = cut(1, 1, 2)
    assert tuple(map(tuple, D.counts)) == tuple(map(tuple, C.counts))
    assert is_isomorphic_bi(D, C) is not None


def test_dec_left_right_suspensions():
    SL = left_suspension(standard_simplex(2, 4))
    D = block_decomposition(SL, 1, 2)
    d2 = standard_simplex(2, 2)
    pt = standard_simplex(0, 1)
    assert is_isomorphic_bi(D, box(pt, d2, cap_h=1, cap_v=2)) is not None
    SR = right_suspension(standard_simplex(2, 4))
    D2 = block_decomposition(SR, 2, 1)
    assert is_isomorphic_bi(D2, box(d2, standard_simplex(0, 1), cap_h=2, cap_v=1)) is not None


def test_dec_of_collapsed_join_is_box():
    for (i, j) in [(0, 0), (1, 0), (1, 1)]:
        J = collapsed_join(i, j, 4)
        D = block_decomposition(J, 1, 1)
        B = box(standard_simplex(i, 1), standard_simplex(j, 1))
        assert is_isomorphic_bi(D, B) is not None


def test_dec_of_two_points_is_empty():
    K = PointedDirected(boundary(1, 3), 0, 1)
    D = block_decomposition(K, 1, 1)
    assert all(D.counts[i][j] == 0 for i in range(2) for j in range(2))


def test_dec_matches_pattern_counts():
    S = suspension(boundary(1, 4))
    D = block_decomposition(S, 1, 1)
    pat = block_pattern_counts(S, 1, 1)
    for i in range(2):
        for j in range(2):
            assert D.counts[i][j] == pat[(i, j)]


def test_dec_rejects_non_directed():
    d2 = standard_simplex(2, 3)
    with pytest.raises(ValueError):
        block_decomposition(PointedDirected(d2, 0, 1), 1, 1)


def test_diag_of_box_is_product():
    d1 = standard_simplex(1, 2)
    d2 = standard_simplex(2, 2)
    assert is_isomorphic(diag(box(d1, d2)), product(d1, d2)) is not None
    c0 = cut(0, 2, 2)
    D = diag(c0)
    assert all(D.counts[k] == 1 for k in range(3))


def test_flip_rev_involutions():
    B = cut(2, 2, 2)
    assert flip(flip(B)).counts == B.counts
    assert flip(flip(B)).face_h == B.face_h
    L = lrev(lrev(B))
    assert L.face_h == B.face_h and L.degen_h == B.degen_h
    R = rrev(rrev(B))
    assert R.face_v == B.face_v
    A = rev(B)
    A2 = rrev(lrev(B))
    assert A.face_h == A2.face_h and A.face_v == A2.face_v


def test_flip_cut_is_rev_cut():
    # flip composed with both reversals fixes the cut family objectwise
    for n in range(3):
        B = cut(n, 2, 2)
        assert is_isomorphic_bi(flip(B), rev(B)) is not None


def test_boundary_bisimplex_examples():
    b = boundary_bisimplex(1, 0, 2, 2)
    assert is_isomorphic_bi(b, box(boundary(1, 2), standard_simplex(0, 2))) is not None
    e = boundary_bisimplex(0, 0, 1, 1)
    assert all(e.counts[i][j] == 0 for i in range(2) for j in range(2))
    b11 = boundary_bisimplex(1, 1, 2, 2)
    assert b11.counts[0][0] == 4
    inc = boundary_bisimplex_inclusion(1, 1, 2, 2)
    inc._validate()

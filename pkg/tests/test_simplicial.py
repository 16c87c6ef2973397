import math

import pytest

from wurst.simplicial import (
    BudgetExceededError, CapMismatchError, PointedDirected, boundary,
    boundary_inclusion, check_simplicial_identities, compose_maps,
    constant_map, disjoint_union, empty_sset, enumerate_maps, horn,
    horn_inclusion, identity_map, is_directed, is_isomorphic, join,
    join_index, join_map, left_suspension, monotone_maps, opposite,
    product, product_map, pushout, right_suspension, simplex_map,
    standard_simplex, suspension, suspension_comparisons, collapse,
    _join_part_inclusion,
)


def binom(n, k):
    return math.comb(n, k)


# -- standard simplices ------------------------------------------------------

def test_monotone_map_count():
    # |Delta^n_k| = C(n+k+1, k+1), brute-force oracle vs formula
    for n in range(4):
        for k in range(4):
            assert len(monotone_maps(k, n)) == binom(n + k + 1, k + 1)


def test_standard_simplex_examples():
    d1 = standard_simplex(1, 1)
    assert d1.counts[1] == 3  # maps 00, 01, 11
    d0 = standard_simplex(0, 3)
    assert d0.counts == (1, 1, 1, 1)
    d2 = standard_simplex(2, 2)
    assert d2.counts[2] == binom(5, 3)


@pytest.mark.parametrize("n,cap", [(0, 2), (1, 2), (2, 3), (3, 3)])
def test_simplex_identities(n, cap):
    check_simplicial_identities(standard_simplex(n, cap))


def test_vertex_tuple():
    d2 = standard_simplex(2, 2)
    keys = monotone_maps(2, 2)
    for s, u in enumerate(keys):
        assert d2.vertex_tuple(2, s) == u


def test_ez_decomposition():
    d2 = standard_simplex(2, 3)
    # every simplex is the claimed degeneracy of its carrier
    for n in range(4):
        for s in d2.simplices(n):
            m, u, pi = d2.ez(n, s)
            assert not d2.is_degenerate(m, u)
            assert d2.apply_epi(pi, m, u) == s


# -- boundaries and horns ------------------------------------------------------

def test_boundary_examples():
    b1 = boundary(1, 2)
    assert b1.counts[0] == 2
    assert len(b1.nondegenerate(1)) == 0
    b2 = boundary(2, 2)
    assert (len(b2.nondegenerate(0)), len(b2.nondegenerate(1)),
            len(b2.nondegenerate(2))) == (3, 3, 0)
    check_simplicial_identities(b2)


def test_horn_examples():
    h = horn(2, 1, 2)
    assert h.counts[0] == 3
    assert len(h.nondegenerate(1)) == 2
    edges = {h.vertex_tuple(1, e) for e in h.nondegenerate(1)}
    assert edges == {(0, 1), (1, 2)}
    with pytest.raises(ValueError):
        horn(0, 0, 2)


def test_inclusions_commute():
    inc = boundary_inclusion(2, 3)
    assert inc.is_injective()
    horn_inclusion(3, 1, 3)  # validation happens in the constructor


# -- products and joins -------------------------------------------------------

def test_product_examples():
    d1 = standard_simplex(1, 2)
    sq = product(d1, d1)
    assert sq.counts[1] == 9
    assert len(sq.nondegenerate(2)) == 2
    check_simplicial_identities(sq)
    pt = standard_simplex(0, 2)
    assert is_isomorphic(product(d1, pt), d1) is not None
    with pytest.raises(CapMismatchError):
        product(standard_simplex(1, 1), standard_simplex(1, 2))


def test_join_examples():
    cap = 3
    d1 = standard_simplex(1, cap)
    d0 = standard_simplex(0, cap)
    assert is_isomorphic(join(d1, d0), standard_simplex(2, cap)) is not None
    assert is_isomorphic(join(d0, d0), standard_simplex(1, cap)) is not None
    b = join(boundary(1, cap), d0)
    assert is_isomorphic(b, horn(2, 2, cap)) is not None
    assert is_isomorphic(join(d1, d1), standard_simplex(3, cap)) is not None
    check_simplicial_identities(join(boundary(2, cap), d0))


def test_join_counts():
    cap = 2
    X = boundary(2, cap)
    Y = standard_simplex(1, cap)
    J = join(X, Y)
    for n in range(cap + 1):
        expect = X.counts[n] + Y.counts[n] + sum(
            X.counts[i] * Y.counts[n - 1 - i] for i in range(n))
        assert J.counts[n] == expect


# -- pushouts ------------------------------------------------------------------

def test_pushout_collapse_edge_endpoints():
    cap = 2
    d1 = standard_simplex(1, cap)
    two = disjoint_union(standard_simplex(0, cap), standard_simplex(0, cap))[0]
    # collapse both vertices of Delta^1 to a single point
    inc = _vertices_inclusion(d1, cap)
    pt = standard_simplex(0, cap)
    m = constant_map(inc.source, pt, 0)
    P, _, _ = pushout(inc, m)
    assert P.counts[0] == 1
    assert len(P.nondegenerate(1)) == 1
    check_simplicial_identities(P)


def _vertices_inclusion(X, cap):
    two, i0, i1 = disjoint_union(standard_simplex(0, cap), standard_simplex(0, cap))
    from wurst.simplicial import SimplicialMap
    comp = [tuple([0, 1])]
    for n in range(1, cap + 1):
        comp.append(tuple([two_deg(X, 0, n), two_deg(X, 1, n)]))
    comp = [tuple(X.degenerate_at(v, n) for v in (0, 1)) for n in range(cap + 1)]
    return SimplicialMap(two, X, comp)


def two_deg(X, v, n):
    return X.degenerate_at(v, n)


def test_pushout_universal_property():
    # maps out of the pushout correspond to compatible pairs
    cap = 2
    d1 = standard_simplex(1, cap)
    inc = _vertices_inclusion(d1, cap)
    pt = standard_simplex(0, cap)
    P, injx, injpt = pushout(inc, constant_map(inc.source, pt, 0))
    T = standard_simplex(2, cap)
    from_p = enumerate_maps(P, T)
    pairs = []
    for f in enumerate_maps(d1, T):
        for g in enumerate_maps(pt, T):
            if all(compose_maps(f, inc).comp[n] ==
                   tuple(g(n, 0) for _ in inc.source.simplices(n))
                   for n in range(cap + 1)):
                pairs.append((f, g))
    assert len(from_p) == len(pairs)


# -- suspensions ---------------------------------------------------------------

def test_suspension_point():
    S = suspension(standard_simplex(0, 2))
    assert is_isomorphic(S.carrier, standard_simplex(1, 2)) is not None
    assert is_directed(S)


def test_left_suspension_point():
    S = left_suspension(standard_simplex(0, 2))
    assert is_isomorphic(S.carrier, standard_simplex(1, 2)) is not None


def test_suspension_circle():
    S = suspension(boundary(1, 3))
    assert S.carrier.counts[0] == 2
    assert len(S.carrier.nondegenerate(1)) == 2
    for n in range(2, 4):
        assert len(S.carrier.nondegenerate(n)) == 0
    assert is_directed(S)


def test_suspension_of_simplices_directed():
    for n in range(3):
        K = standard_simplex(n, 3)
        assert is_directed(suspension(K))
        assert is_directed(left_suspension(K))
        assert is_directed(right_suspension(K))
    assert suspension(standard_simplex(1, 2)).carrier.counts[0] == 2


def test_suspension_comparison_maps():
    K = standard_simplex(1, 3)
    S, SL, SR, to_l, to_r = suspension_comparisons(K)
    assert to_l.source is S.carrier and to_l.target is SL.carrier
    assert to_l(0, S.p0) == SL.p0 and to_l(0, S.p1) == SL.p1
    assert to_r(0, S.p0) == SR.p0 and to_r(0, S.p1) == SR.p1
    # left suspension of Delta^n is Delta^{n+1} with the last face collapsed
    assert SL.carrier.counts[0] == 2


def test_is_directed_examples():
    d1 = standard_simplex(1, 2)
    assert is_directed(PointedDirected(d1, 0, 1))
    b1 = boundary(1, 2)
    assert is_directed(PointedDirected(b1, 0, 1))
    d2 = standard_simplex(2, 2)
    assert not is_directed(PointedDirected(d2, 0, 2))


# -- opposite ------------------------------------------------------------------

def test_opposite_involution():
    X = product(standard_simplex(1, 2), standard_simplex(1, 2))
    Y = opposite(opposite(X))
    assert Y.counts == X.counts and Y.face == X.face and Y.degen == X.degen


def test_opposite_simplex_self_dual():
    for n in range(3):
        X = standard_simplex(n, 3)
        assert is_isomorphic(opposite(X), X) is not None


def test_opposite_horn():
    assert is_isomorphic(opposite(horn(2, 0, 2)), horn(2, 2, 2)) is not None
    check_simplicial_identities(opposite(horn(2, 0, 2)))


# -- map enumeration -----------------------------------------------------------

def test_enumerate_maps_from_point():
    X = boundary(2, 2)
    maps = enumerate_maps(standard_simplex(0, 2), X)
    assert len(maps) == X.counts[0]


def test_enumerate_maps_delta1_endos():
    maps = enumerate_maps(standard_simplex(1, 2), standard_simplex(1, 2))
    assert len(maps) == 3


def test_enumerate_maps_vs_simplices():
    # maps Delta^m -> X biject with X_m
    X = product(standard_simplex(1, 2), standard_simplex(1, 2))
    for m in range(3):
        maps = enumerate_maps(standard_simplex(m, 2), X)
        assert len(maps) == X.counts[m]


def test_enumerate_maps_budget():
    X = product(standard_simplex(2, 2), standard_simplex(2, 2))
    with pytest.raises(BudgetExceededError):
        enumerate_maps(X, X, budget=3, hard=True)
    with pytest.warns(UserWarning):
        res = enumerate_maps(standard_simplex(1, 1), standard_simplex(1, 1), budget=1)
    assert len(res) == 3


def test_is_isomorphic_join_of_simplices():
    w = is_isomorphic(join(standard_simplex(1, 3), standard_simplex(1, 3)),
                      standard_simplex(3, 3))
    assert w is not None and w.is_bijective()


def test_is_isomorphic_negative():
    assert is_isomorphic(boundary(2, 2), horn(2, 1, 2)) is None


def test_simplex_map_postcomposition():
    f = simplex_map((0, 2), 2, 2)
    assert f.source.counts == standard_simplex(1, 2).counts
    g = simplex_map((0, 1, 1), 1, 2)
    assert compose_maps(simplex_map((0, 1), 1, 2), identity_map(standard_simplex(1, 2))).comp == \
        simplex_map((0, 1), 1, 2).comp
    assert g.target.counts == standard_simplex(1, 2).counts


def test_empty_sset():
    E = empty_sset(2)
    assert E.counts == (0, 0, 0)
    assert enumerate_maps(E, standard_simplex(1, 2)) != []  # the empty map exists
    assert len(enumerate_maps(E, standard_simplex(1, 2))) == 1

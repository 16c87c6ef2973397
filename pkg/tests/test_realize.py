import pytest

from wurst.bisimplicial import (
    block_decomposition, boundary_bisimplex, box, collapsed_join, cut,
    is_isomorphic_bi,
)
from wurst.realize import (
    CapMismatchError, CosimplicialSSet, CosimplicialTransformation,
    boundary_to_term_map, delta_family, join_family, pullback_criterion_check,
    pullback_on_sing, pushforward, realize, realize_bi, realize_dir,
    reedy_boundary_check, reedy_boundary_check_bi, sing,
)
from wurst.simplicial import (
    SimplicialMap, _UnionFind, boundary, compose_maps, disjoint_union,
    enumerate_maps, horn, identity_map, is_isomorphic, join, product,
    standard_simplex,
)


def naive_realize_counts(S, X):
    """All-pairs union-find over every generating relation (oracle)."""
    counts = []
    partitions = []
    for k in range(X.cap + 1):
        offsets = []
        total = 0
        for n in range(S.cap + 1):
            offsets.append(total)
            total += S.counts[n] * X.term[n].counts[k]

        def pid(n, s, x):
            return offsets[n] + s * X.term[n].counts[k] + x

        uf = _UnionFind(total)
        for n in range(1, S.cap + 1):
            for a in range(n + 1):
                for s in S.simplices(n):
                    for x in range(X.term[n - 1].counts[k]):
                        uf.union(pid(n - 1, S.face[n][a][s], x),
                                 pid(n, s, X.coface[n][a](k, x)))
        for n in range(S.cap):
            for a in range(n + 1):
                for s in S.simplices(n):
                    for x in range(X.term[n + 1].counts[k]):
                        uf.union(pid(n + 1, S.degen[n][a][s], x),
                                 pid(n, s, X.codegen[n][a](k, x)))
        part = {}
        for n in range(S.cap + 1):
            for s in S.simplices(n):
                for x in range(X.term[n].counts[k]):
                    part[(n, s, x)] = uf.find(pid(n, s, x))
        counts.append(len(set(part.values())))
        partitions.append(part)
    return counts, partitions


@pytest.fixture(scope="module")
def dfam():
    return delta_family(3, 3)


def test_realize_of_simplex_is_term(dfam):
    for n in range(3):
        R = realize(standard_simplex(n, 3), dfam)
        assert R.space.counts == dfam.term[n].counts
        assert is_isomorphic(R.space, dfam.term[n]) is not None


def test_realize_of_boundary_one(dfam):
    R = realize(boundary(1, 3), dfam)
    two = disjoint_union(dfam.term[0], dfam.term[0])[0]
    assert is_isomorphic(R.space, two) is not None


def test_realize_over_delta_is_identity(dfam):
    for S in [boundary(2, 3), horn(2, 1, 3),
              product(standard_simplex(1, 3), standard_simplex(1, 3))]:
        R = realize(S, dfam)
        # canonical comparison: a pair (s, x: [k] -> [n]) maps to S(x)(s)
        comp = []
        for k in range(4):
            row = []
            for ((n, s), x) in R.reps[k]:
                from wurst.simplicial import monotone_maps
                u = monotone_maps(k, n)[x]
                row.append(S.act(u, n, s))
            comp.append(tuple(row))
        f = SimplicialMap(R.space, S, comp)
        assert f.is_bijective()


def test_realize_matches_naive_oracle(dfam):
    for S in [boundary(2, 3), horn(2, 1, 3), standard_simplex(2, 3)]:
        R = realize(S, dfam)
        counts, partitions = naive_realize_counts(S, dfam)
        assert list(R.space.counts) == counts
        for k in range(4):
            # same partition: naive classes map 1-1 onto reduced classes
            fwd = {}
            for (n, s, x), root in partitions[k].items():
                mine = R.index((n, s), k, x)
                assert fwd.setdefault(root, mine) == mine
            assert len(set(fwd.values())) == counts[k]


def test_realize_cap_shortfall(dfam):
    with pytest.raises(CapMismatchError):
        realize(standard_simplex(3, 4), delta_family(3, 4))


def test_sing_over_delta_is_identity(dfam):
    for T in [boundary(2, 3), standard_simplex(2, 3)]:
        S = sing(dfam, T, 3)
        # evaluation at the top cell of each simplex is a bijection onto T
        comp = []
        for n in range(4):
            top = standard_simplex(n, 3)
            top_id = list(top.vertex_tuple(n, s) for s in top.simplices(n))
            ident = tuple(range(n + 1))
            from wurst.simplicial import monotone_index
            tid = monotone_index(n, n)[ident]
            comp.append(tuple(f(n, tid) for f in S.elements[n]))
        g = SimplicialMap(S.space, T, comp)
        assert g.is_bijective()


def test_sing_terminal_target(dfam):
    S = sing(dfam, standard_simplex(0, 3), 3)
    assert all(c == 1 for c in S.space.counts)


def test_adjunction_counts(dfam):
    # maps(|S|_X, T) and maps(S, Sing_X(T)) have the same size, and the
    # transpose is a bijection
    S = boundary(2, 3)
    T = standard_simplex(1, 3)
    R = realize(S, dfam)
    left = enumerate_maps(R.space, T)
    SG = sing(dfam, T, 3)
    right = enumerate_maps(S, SG.space)
    assert len(left) == len(right)
    transposed = set()
    for f in left:
        comp = []
        for n in range(4):
            row = []
            for s in S.simplices(n):
                # transpose: s maps to the element x -> f([s, x])
                g = tuple(tuple(f(k, R.index((n, s), k, x))
                                for x in dfam.term[n].simplices(k))
                          for k in range(4))
                row.append(SG.element_index[n][g])
            comp.append(tuple(row))
        transposed.add(SimplicialMap(S, SG.space, comp).comp)
    assert transposed == {g.comp for g in right}


def test_identity_transformation_induces_identity(dfam):
    eta = CosimplicialTransformation(dfam, dfam,
                                     [identity_map(dfam.term[n]) for n in range(4)])
    S = boundary(2, 3)
    R = realize(S, dfam)
    f = pushforward(eta, S, R, R)
    assert f.comp == identity_map(R.space).comp
    T = standard_simplex(1, 3)
    SG = sing(dfam, T, 3)
    g = pullback_on_sing(eta, SG, SG)
    assert g.comp == identity_map(SG.space).comp


def test_reedy_delta(dfam):
    for n in range(4):
        assert reedy_boundary_check(dfam, n)


def test_pullback_criterion_delta(dfam):
    assert pullback_criterion_check(dfam, 2, 0, 1)
    assert pullback_criterion_check(dfam, 3, 1, 3)
    assert pullback_criterion_check(dfam, 2, 1, 1)
    with pytest.raises(ValueError):
        pullback_criterion_check(dfam, 2, 0, 5)


# -- bisimplicial side ---------------------------------------------------------


@pytest.fixture(scope="module")
def jfam():
    return join_family(2, 2, 3)


def test_realize_bi_yoneda(jfam):
    for (i, j) in [(0, 0), (1, 0), (1, 1)]:
        B = box(standard_simplex(i, 2), standard_simplex(j, 2))
        R = realize_bi(B, jfam)
        assert is_isomorphic(R.space, jfam.term[i][j]) is not None


def test_realize_cut_over_joins_is_cylinder(jfam):
    # the coend of all two-block maps into the n-simplex rebuilds its cylinder
    for n in range(3):
        R = realize_bi(cut(n, 2, 2), jfam)
        cyl = product(standard_simplex(n, 3), standard_simplex(1, 3))
        assert is_isomorphic(R.space, cyl) is not None


def test_realize_dir_unit_counit():
    for (i, j) in [(0, 0), (1, 0), (1, 1)]:
        B = box(standard_simplex(i, 1), standard_simplex(j, 1))
        K, R = realize_dir(B, 4)
        assert is_isomorphic(K.carrier, collapsed_join(i, j, 4).carrier) is not None
        D = block_decomposition(K, 1, 1)
        assert is_isomorphic_bi(D, B) is not None


def test_realize_dir_boundary_square():
    B = boundary_bisimplex(1, 1, 1, 1)
    K, _ = realize_dir(B, 4)
    # boundary of the glued square: two triangles' worth of edges, directed
    from wurst.simplicial import is_directed
    assert is_directed(K)
    D = block_decomposition(K, 1, 1)
    assert is_isomorphic_bi(D, B) is not None


def test_reedy_bi_joins_detects_failures(jfam):
    # the plain-join family is not Reedy cofibrant: realizing the boundary of
    # a bisimplex duplicates the cone point whenever the boundary in one
    # direction is disconnected
    expected = {(1, 0): False, (0, 1): False, (1, 1): False,
                (2, 0): True, (2, 1): False, (2, 2): True}
    for (i, j), want in expected.items():
        assert reedy_boundary_check_bi(jfam, i, j) == want


def test_pullback_criterion_bi(jfam):
    assert pullback_criterion_check(jfam, (2, 0), ("h", 0), ("h", 1))
    assert pullback_criterion_check(jfam, (1, 1), ("h", 0), ("v", 1))
    assert pullback_criterion_check(jfam, (1, 1), ("h", 1), ("h", 1))
    with pytest.raises(ValueError):
        pullback_criterion_check(jfam, (0, 1), ("h", 0), ("v", 0))


def test_boundary_to_term_injective_levels(dfam):
    f = boundary_to_term_map(dfam, 2)
    assert f.is_injective()

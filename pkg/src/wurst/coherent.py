"""Mapping complexes of coherent nerves and the collapsed-cube family.

coherent_cube(n, a, b) is the nerve of the poset of subsets of [a, b]
containing both endpoints, with composition by union; collapsed_cube(i, j)
is the mapping space between the two collapse points of the two-block join,
a quotient of the (i+j)-cube stored in canonical form.  Chains are tuples of
bitmasks over the join positions 0..i+1+j (left block 0..i, right block
i+1..i+1+j).

The canonical form of a chain S_0 <= ... <= S_k takes i0 = max(S_0 in the
left block), j0 = min(S_0 in the right block) and intersects every entry
with the interval [i0, j0]; the raw union-find oracle validating this as a
complete invariant lives alongside (acceptance gate).
"""

from __future__ import annotations

from functools import lru_cache

from .bisimplicial import (
    BiSimplicialSet, block_decomposition, cut, cut_postcompose,
)
from .realize import (
    BiCosimplicialSSet, CosimplicialSSet, CosimplicialTransformation,
    Realization, delta_family, realize_bi, shape_pushforward,
)
from .simplicial import (
    BudgetExceededError, PointedDirected, SimplicialMap, SimplicialSet,
    _UnionFind, build_sset, coface_tuple, codegen_tuple, compose_maps,
    enumerate_maps, identity_map, join, join_index, monotone_index,
    monotone_maps, pair_in_product, product, search_budget, standard_simplex,
)

# ---------------------------------------------------------------------------
# nerve-of-subsets cubes


@lru_cache(maxsize=None)
def _interval_chains(a: int, b: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Weak chains of subsets of [a,b] containing a and b, as bitmask tuples."""
    anchors = (1 << a) | (1 << b)
    free = [p for p in range(a + 1, b)]
    chains = []

    def rec(idx, times):
        if idx == len(free):
            chain = []
            for m in range(k + 1):
                t = anchors
                for p, tm in zip(free, times):
                    if tm <= m:
                        t |= 1 << p
                chain.append(t)
            chains.append(tuple(chain))
            return
        for tm in list(range(k + 1)) + [k + 1]:  # k+1 encodes "never"
            times.append(tm)
            rec(idx + 1, times)
            times.pop()

    rec(0, [])
    return tuple(sorted(set(chains)))


@lru_cache(maxsize=None)
def coherent_cube(n: int, a: int, b: int, cap: int) -> SimplicialSet:
    """The mapping complex from a to b in the coherent image of Delta^n."""
    if not 0 <= a <= b <= n:
        raise ValueError("need 0 <= a <= b <= n")
    levels = [_interval_chains(a, b, k) for k in range(cap + 1)]
    X, _ = build_sset(
        cap, levels,
        face_fn=lambda k, p, c: c[:p] + c[p + 1:],
        degen_fn=lambda k, p, c: c[:p + 1] + c[p:],
        label_fn=lambda c: "<".join(format(t, "b") for t in c))
    return X


@lru_cache(maxsize=None)
def _cube_index(n, a, b, cap):
    return [{c: t for t, c in enumerate(_interval_chains(a, b, k))}
            for k in range(cap + 1)]


def cube_composition(n: int, a: int, b: int, c: int, cap: int) -> SimplicialMap:
    """Union: product(cube(b,c), cube(a,b)) -> cube(a,c)."""
    U = coherent_cube(n, b, c, cap)
    V = coherent_cube(n, a, b, cap)
    W = coherent_cube(n, a, c, cap)
    P = product(U, V)
    uix = _cube_index(n, b, c, cap)
    vix = _cube_index(n, a, b, cap)
    wix = _cube_index(n, a, c, cap)
    comp = []
    for k in range(cap + 1):
        ulist = _interval_chains(b, c, k)
        vlist = _interval_chains(a, b, k)
        row = []
        for cu in ulist:
            for cv in vlist:
                row.append(wix[k][tuple(x | y for x, y in zip(cu, cv))])
        comp.append(tuple(row))
    return SimplicialMap(P, W, comp)


def cube_map(alpha: tuple[int, ...], n_dst: int, p: int, q: int,
             cap: int) -> SimplicialMap:
    """Direct image cube(p,q) -> cube(alpha(p), alpha(q)) along monotone alpha."""
    n_src = len(alpha) - 1
    src = coherent_cube(n_src, p, q, cap)
    dst = coherent_cube(n_dst, alpha[p], alpha[q], cap)
    dix = _cube_index(n_dst, alpha[p], alpha[q], cap)

    def push(t):
        out = 0
        for pos in range(n_src + 1):
            if t >> pos & 1:
                out |= 1 << alpha[pos]
        return out

    comp = []
    for k in range(cap + 1):
        row = [dix[k][tuple(push(t) for t in chain)]
               for chain in _interval_chains(p, q, k)]
        comp.append(tuple(row))
    return SimplicialMap(src, dst, comp)


# ---------------------------------------------------------------------------
# the collapsed cubes


@lru_cache(maxsize=None)
def _canonical_chains(i: int, j: int, k: int) -> tuple[tuple[int, ...], ...]:
    chains = []
    for i0 in range(i + 1):
        for j0 in range(i + 1, i + 2 + j):
            anchors = (1 << i0) | (1 << j0)
            free = list(range(i0 + 1, j0))
            out = []

            def rec(idx, times):
                if idx == len(free):
                    chain = []
                    for m in range(k + 1):
                        t = anchors
                        for p, tm in zip(free, times):
                            if tm <= m:
                                t |= 1 << p
                        chain.append(t)
                    out.append(tuple(chain))
                    return
                for tm in list(range(1, k + 1)) + [k + 1]:
                    times.append(tm)
                    rec(idx + 1, times)
                    times.pop()

            rec(0, [])
            chains.extend(out)
    return tuple(sorted(set(chains)))


def _canon(chain, i, j):
    """Canonical representative of a raw admissible chain."""
    t0 = chain[0]
    left = t0 & ((1 << (i + 1)) - 1)
    right = t0 >> (i + 1)
    i0 = left.bit_length() - 1
    j0 = (i + 1) + ((right & -right).bit_length() - 1)
    mask = ((1 << (j0 + 1)) - 1) & ~((1 << i0) - 1)
    return tuple(t & mask for t in chain)


@lru_cache(maxsize=None)
def collapsed_cube(i: int, j: int, cap: int) -> SimplicialSet:
    """The two-block mapping cube: chains of admissible subsets of the join
    positions, one canonical representative per identification class."""
    levels = [_canonical_chains(i, j, k) for k in range(cap + 1)]

    def ff(k, p, c):
        out = c[:p] + c[p + 1:]
        return _canon(out, i, j) if p == 0 else out

    X, _ = build_sset(
        cap, levels, ff,
        degen_fn=lambda k, p, c: c[:p + 1] + c[p:],
        label_fn=lambda c: "<".join(format(t, "b") for t in c))
    return X


@lru_cache(maxsize=None)
def _collapsed_index(i, j, cap):
    return [{c: t for t, c in enumerate(_canonical_chains(i, j, k))}
            for k in range(cap + 1)]


def collapsed_cube_class(i, j, cap, k, raw_chain) -> int:
    """The id of the class of a raw admissible chain."""
    return _collapsed_index(i, j, cap)[k][_canon(raw_chain, i, j)]


def collapsed_cube_map(phi: tuple[int, ...], i2: int, psi: tuple[int, ...],
                       j2: int, cap: int) -> SimplicialMap:
    """collapsed_cube(i,j) -> collapsed_cube(i2,j2) by direct image plus
    recanonicalization, for monotone phi: [i] -> [i2], psi: [j] -> [j2]."""
    i, j = len(phi) - 1, len(psi) - 1
    src = collapsed_cube(i, j, cap)
    dst = collapsed_cube(i2, j2, cap)
    dix = _collapsed_index(i2, j2, cap)

    def push(t):
        out = 0
        for p in range(i + 1):
            if t >> p & 1:
                out |= 1 << phi[p]
        for r in range(j + 1):
            if t >> (i + 1 + r) & 1:
                out |= 1 << (i2 + 1 + psi[r])
        return out

    comp = []
    for k in range(cap + 1):
        row = [dix[k][_canon(tuple(push(t) for t in chain), i2, j2)]
               for chain in _canonical_chains(i, j, k)]
        comp.append(tuple(row))
    return SimplicialMap(src, dst, comp)


@lru_cache(maxsize=None)
def collapsed_cube_family(cocap_h: int, cocap_v: int, cap: int) -> BiCosimplicialSSet:
    """The collapsed cubes as a bicosimplicial simplicial set."""
    term = tuple(tuple(collapsed_cube(i, j, cap) for j in range(cocap_v + 1))
                 for i in range(cocap_h + 1))

    def ident(n):
        return tuple(range(n + 1))

    coface_h = tuple(tuple(
        tuple(collapsed_cube_map(coface_tuple(i, a), i, ident(j), j, cap)
              for a in range(i + 1)) if i >= 1 else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    coface_v = tuple(tuple(
        tuple(collapsed_cube_map(ident(i), i, coface_tuple(j, b), j, cap)
              for b in range(j + 1)) if j >= 1 else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    codegen_h = tuple(tuple(
        tuple(collapsed_cube_map(codegen_tuple(i, a), i, ident(j), j, cap)
              for a in range(i + 1)) if i + 1 <= cocap_h else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    codegen_v = tuple(tuple(
        tuple(collapsed_cube_map(ident(i), i, codegen_tuple(j, b), j, cap)
              for b in range(j + 1)) if j + 1 <= cocap_v else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    return BiCosimplicialSSet(cocap_h, cocap_v, term, coface_h, coface_v,
                              codegen_h, codegen_v)


# -- raw nerve and the union-find oracle --------------------------------------


@lru_cache(maxsize=None)
def raw_admissible_chains(i: int, j: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All weak chains of admissible subsets (each meets both blocks)."""
    npos = i + 2 + j
    chains = []

    def rec(idx, times):
        if idx == npos:
            left_ok = any(times[p] == 0 for p in range(i + 1))
            right_ok = any(times[p] == 0 for p in range(i + 1, npos))
            if left_ok and right_ok:
                chain = []
                for m in range(k + 1):
                    t = 0
                    for p in range(npos):
                        if times[p] <= m:
                            t |= 1 << p
                    chain.append(t)
                chains.append(tuple(chain))
            return
        for tm in list(range(k + 1)) + [k + 1]:
            times.append(tm)
            rec(idx + 1, times)
            times.pop()

    rec(0, [])
    return tuple(sorted(set(chains)))


@lru_cache(maxsize=None)
def raw_nerve(i: int, j: int, cap: int) -> SimplicialSet:
    """Nerve of the poset of admissible subsets, before identification."""
    levels = [raw_admissible_chains(i, j, k) for k in range(cap + 1)]
    X, _ = build_sset(
        cap, levels,
        face_fn=lambda k, p, c: c[:p] + c[p + 1:],
        degen_fn=lambda k, p, c: c[:p + 1] + c[p:])
    return X


def raw_projection(i: int, j: int, cap: int) -> SimplicialMap:
    """The quotient map raw_nerve -> collapsed_cube."""
    N = raw_nerve(i, j, cap)
    Q = collapsed_cube(i, j, cap)
    comp = []
    for k in range(cap + 1):
        row = [collapsed_cube_class(i, j, cap, k, c)
               for c in raw_admissible_chains(i, j, k)]
        comp.append(tuple(row))
    return SimplicialMap(N, Q, comp)


def oracle_partition(i: int, j: int, k: int):
    """Union-find closure of the raw one-step identification at level k.

    Two chains are one-step related when they share a left element a and a
    right element b in their first subsets and agree after intersecting with
    the interval [a, b]."""
    chains = raw_admissible_chains(i, j, k)
    idx = {c: t for t, c in enumerate(chains)}
    uf = _UnionFind(len(chains))
    buckets = {}
    for t, c in enumerate(chains):
        t0 = c[0]
        for a in range(i + 1):
            if not t0 >> a & 1:
                continue
            for b in range(i + 1, i + 2 + j):
                if not t0 >> b & 1:
                    continue
                mask = ((1 << (b + 1)) - 1) & ~((1 << a) - 1)
                key = (a, b, tuple(x & mask for x in c))
                if key in buckets:
                    uf.union(buckets[key], t)
                else:
                    buckets[key] = t
    classes = {}
    for t in range(len(chains)):
        classes.setdefault(uf.find(t), []).append(chains[t])
    return list(classes.values()), chains


def canonical_form_is_complete(i: int, j: int, max_k: int) -> bool:
    """The acceptance-gate oracle: canonical forms classify the union-find
    closure of the raw relation exactly."""
    for k in range(max_k + 1):
        parts, chains = oracle_partition(i, j, k)
        by_canon = {}
        for c in chains:
            by_canon.setdefault(_canon(c, i, j), set()).add(c)
        oracle_sets = {frozenset(p) for p in parts}
        canon_sets = {frozenset(v) for v in by_canon.values()}
        if oracle_sets != canon_sets:
            return False
    return True


# ---------------------------------------------------------------------------
# the suspension mapping-space family and its comparison to the simplices


class SuspensionHomFamily:
    """Terms |cut(n)|_Q assembled into a cosimplicial simplicial set."""

    def __init__(self, family: CosimplicialSSet, realizations, cuts, qfam,
                 cocap, cap):
        self.family = family
        self.realizations = realizations
        self.cuts = cuts
        self.qfam = qfam
        self.cocap = cocap
        self.cap = cap

    def term(self, n):
        return self.family.term[n]


@lru_cache(maxsize=None)
def suspension_hom_family(cocap: int, cap: int) -> SuspensionHomFamily:
    qfam = collapsed_cube_family(cocap, cocap, cap)
    cuts = [cut(n, cocap, cocap) for n in range(cocap + 1)]
    reals = [realize_bi(cuts[n], qfam) for n in range(cocap + 1)]
    coface = [()]
    for n in range(1, cocap + 1):
        coface.append(tuple(
            shape_pushforward(cut_postcompose(coface_tuple(n, a), n - 1, n, cocap, cocap),
                              reals[n - 1], reals[n])
            for a in range(n + 1)))
    codegen = []
    for n in range(cocap):
        codegen.append(tuple(
            shape_pushforward(cut_postcompose(codegen_tuple(n, a), n + 1, n, cocap, cocap),
                              reals[n + 1], reals[n])
            for a in range(n + 1)))
    fam = CosimplicialSSet(cocap, [r.space for r in reals], tuple(coface),
                           tuple(codegen))
    return SuspensionHomFamily(fam, reals, cuts, qfam, cocap, cap)


def max_vertex_map(i: int, j: int, cap: int) -> SimplicialMap:
    """collapsed_cube(i,j) -> Delta^i * Delta^j sending a subset to the
    largest left-block element it contains."""
    src = collapsed_cube(i, j, cap)
    di = standard_simplex(i, cap)
    dj = standard_simplex(j, cap)
    tgt = join(di, dj)
    left_mask = (1 << (i + 1)) - 1
    comp = []
    for k in range(cap + 1):
        row = []
        for chain in _canonical_chains(i, j, k):
            verts = tuple((t & left_mask).bit_length() - 1 for t in chain)
            row.append(join_index(di, dj, k, ("x", monotone_index(k, i)[verts])))
        comp.append(tuple(row))
    return SimplicialMap(src, tgt, comp)


def max_vertex_transformation(W: SuspensionHomFamily) -> CosimplicialTransformation:
    """The comparison from the suspension mapping spaces to the simplices."""
    delta = delta_family(W.cocap, W.cap)
    comps = []
    for n in range(W.cocap + 1):
        R = W.realizations[n]
        rows = []
        for k in range(W.cap + 1):
            row = []
            for ((i, j, c), q) in R.reps[k]:
                u = monotone_maps(i + 1 + j, n)[c]
                left_mask = (1 << (i + 1)) - 1
                chain = _canonical_chains(i, j, k)[q]
                verts = tuple(u[(t & left_mask).bit_length() - 1] for t in chain)
                row.append(monotone_index(k, n)[verts])
            rows.append(tuple(row))
        comps.append(SimplicialMap(R.space, delta.term[n], rows))
    return CosimplicialTransformation(W.family, delta, comps)


def suspension_to_source_restriction(W: SuspensionHomFamily):
    """The comparison maps W_n -> |Delta^n box Delta^0|_Q induced by
    restricting two-block maps to their source block, plus the target-block
    analogue.  Returns (source_family, source_maps, target_family, target_maps)."""
    from .bisimplicial import box, cut_restrict_source, cut_restrict_target
    cocap, cap = W.cocap, W.cap
    qfam = W.qfam
    src_reals, tgt_reals = [], []
    src_maps, tgt_maps = [], []
    for n in range(cocap + 1):
        bs = box(standard_simplex(n, cocap), standard_simplex(0, cocap))
        bt = box(standard_simplex(0, cocap), standard_simplex(n, cocap))
        Rs = realize_bi(bs, qfam)
        Rt = realize_bi(bt, qfam)
        src_reals.append(Rs)
        tgt_reals.append(Rt)
        src_maps.append(shape_pushforward(cut_restrict_source(n, cocap, cocap),
                                          W.realizations[n], Rs))
        tgt_maps.append(shape_pushforward(cut_restrict_target(n, cocap, cocap),
                                          W.realizations[n], Rt))
    return src_reals, src_maps, tgt_reals, tgt_maps


def block_swap(i: int, j: int, cap: int) -> SimplicialMap:
    """The isomorphism collapsed_cube(i,j) -> collapsed_cube(j,i) reversing
    the join order."""
    src = collapsed_cube(i, j, cap)
    dst = collapsed_cube(j, i, cap)
    dix = _collapsed_index(j, i, cap)
    npos = i + j + 2

    def push(t):
        out = 0
        for p in range(npos):
            if t >> p & 1:
                out |= 1 << (npos - 1 - p)
        return out

    comp = []
    for k in range(cap + 1):
        row = [dix[k][_canon(tuple(push(t) for t in chain), j, i)]
               for chain in _canonical_chains(i, j, k)]
        comp.append(tuple(row))
    return SimplicialMap(src, dst, comp)


# ---------------------------------------------------------------------------
# enriched categories


class EnrichedCategory:
    """Finite simplicially enriched category with eager law checking."""

    def __init__(self, objects, homs, compose, identities, check=True):
        self.objects = list(objects)
        self.homs = homs            # (x, y) -> SimplicialSet
        self.compose = compose      # (x, y, z) -> SimplicialMap hom(y,z) x hom(x,y) -> hom(x,z)
        self.identities = identities
        self.cap = homs[(objects[0], objects[0])].cap
        if check:
            self.validate()

    def hom(self, x, y) -> SimplicialSet:
        return self.homs[(x, y)]

    def compose_at(self, x, y, z, n, g, f) -> int:
        m = self.compose[(x, y, z)]
        return m(n, pair_in_product(self.hom(y, z), self.hom(x, y), n, g, f))

    def validate(self):
        for (x, y), H in self.homs.items():
            if H.cap != self.cap:
                raise ValueError("hom caps differ")
        for x in self.objects:
            for y in self.objects:
                H = self.hom(x, y)
                for n in range(self.cap + 1):
                    idx = self.hom(x, x).degenerate_at(self.identities[x], n)
                    idy = self.hom(y, y).degenerate_at(self.identities[y], n)
                    for f in H.simplices(n):
                        assert self.compose_at(x, x, y, n, f, idx) == f, "right unit fails"
                        assert self.compose_at(x, y, y, n, idy, f) == f, "left unit fails"
        for x in self.objects:
            for y in self.objects:
                for z in self.objects:
                    for w in self.objects:
                        for n in range(self.cap + 1):
                            for h in self.hom(z, w).simplices(n):
                                for g in self.hom(y, z).simplices(n):
                                    for f in self.hom(x, y).simplices(n):
                                        a = self.compose_at(
                                            x, y, w, n,
                                            self.compose_at(y, z, w, n, h, g), f)
                                        b = self.compose_at(
                                            x, z, w, n, h,
                                            self.compose_at(x, y, z, n, g, f))
                                        assert a == b, "associativity fails"


def two_object_category(K: SimplicialSet) -> EnrichedCategory:
    """The directed category on objects 0, 1 with morphism space K."""
    from .simplicial import empty_sset
    cap = K.cap
    pt = standard_simplex(0, cap)
    empty = empty_sset(cap)
    homs = {(0, 0): pt, (1, 1): pt, (0, 1): K, (1, 0): empty}

    def proj_first(A, B):
        P = product(A, B)
        comp = [tuple(s for s in A.simplices(n) for _ in B.simplices(n))
                for n in range(cap + 1)]
        return SimplicialMap(P, A, comp)

    def proj_second(A, B):
        P = product(A, B)
        comp = [tuple(t for _ in A.simplices(n) for t in B.simplices(n))
                for n in range(cap + 1)]
        return SimplicialMap(P, B, comp)

    def empty_to(T):
        return SimplicialMap(product(empty, empty), T,
                             [() for _ in range(cap + 1)], check=False)

    compose = {}
    for x in (0, 1):
        for y in (0, 1):
            for z in (0, 1):
                g, f, h = homs[(y, z)], homs[(x, y)], homs[(x, z)]
                P = product(g, f)
                if any(P.counts):
                    if homs[(y, z)] is pt:
                        compose[(x, y, z)] = proj_second(g, f)
                    else:
                        compose[(x, y, z)] = proj_first(g, f)
                else:
                    compose[(x, y, z)] = SimplicialMap(
                        P, h, [() for _ in range(cap + 1)], check=False)
    return EnrichedCategory([0, 1], homs, compose, {0: 0, 1: 0})


# ---------------------------------------------------------------------------
# the coherent nerve


class NerveSpace:
    def __init__(self, space, functors, index, category, out_cap):
        self.space = space
        self.functors = functors   # per level: list of (objects, comps dict)
        self.index = index         # per level: functor key -> id
        self.category = category
        self.out_cap = out_cap

    def functor_at(self, n, s):
        return self.functors[n][s]


def _functor_key(o, comps):
    return (o, tuple(comps[pq].comp for pq in sorted(comps)))


def coherent_nerve(C: EnrichedCategory, out_cap: int, budget=None) -> NerveSpace:
    """Level n: enriched functors from the coherent image of Delta^n to C,
    found by backtracking over mapping components in order of span length."""
    cap = C.cap
    if budget is None:
        budget = search_budget()
    levels = []
    for m in range(out_cap + 1):
        levels.append(_enumerate_functors(C, m, cap, budget))
    index = [{_functor_key(o, comps): t for t, (o, comps) in enumerate(lv)}
             for lv in levels]

    def act(m, alpha, m2, o, comps):
        """Precompose a level-m functor with the coherent image of alpha."""
        o2 = tuple(o[alpha[t]] for t in range(m2 + 1))
        comps2 = {}
        for p in range(m2 + 1):
            for q in range(p + 1, m2 + 1):
                if alpha[p] == alpha[q]:
                    cube = coherent_cube(m2, p, q, cap)
                    x = o2[p]
                    vid = C.identities[x]
                    H = C.hom(x, x)
                    comps2[(p, q)] = SimplicialMap(
                        cube, H,
                        [tuple(H.degenerate_at(vid, k) for _ in cube.simplices(k))
                         for k in range(cap + 1)], check=False)
                else:
                    cm = cube_map(alpha, m, p, q, cap)
                    comps2[(p, q)] = compose_maps(comps[(alpha[p], alpha[q])], cm)
        return o2, comps2

    counts = [len(lv) for lv in levels]
    face = [()]
    for m in range(1, out_cap + 1):
        rows = []
        for a in range(m + 1):
            alpha = coface_tuple(m, a)
            row = []
            for (o, comps) in levels[m]:
                o2, comps2 = act(m, alpha, m - 1, o, comps)
                row.append(index[m - 1][_functor_key(o2, comps2)])
            rows.append(tuple(row))
        face.append(tuple(rows))
    degen = []
    for m in range(out_cap):
        rows = []
        for a in range(m + 1):
            alpha = codegen_tuple(m, a)
            row = []
            for (o, comps) in levels[m]:
                o2, comps2 = act(m, alpha, m + 1, o, comps)
                row.append(index[m + 1][_functor_key(o2, comps2)])
            rows.append(tuple(row))
        degen.append(tuple(rows))
    degen.append(())
    space = SimplicialSet(out_cap, counts, tuple(face), tuple(degen))
    return NerveSpace(space, levels, index, C, out_cap)


def _enumerate_functors(C: EnrichedCategory, m: int, cap: int, budget):
    objs = C.objects
    results = []
    pairs = sorted(((p, q) for p in range(m + 1) for q in range(p + 1, m + 1)),
                   key=lambda pq: (pq[1] - pq[0], pq))

    def assign_components(o, t, comps):
        if t == len(pairs):
            results.append((tuple(o), dict(comps)))
            return
        p, q = pairs[t]
        cube = coherent_cube(m, p, q, cap)
        H = C.hom(o[p], o[q])
        forced = {}
        consistent = True
        for s in range(p + 1, q):
            comp_map = cube_composition(m, p, s, q, cap)
            g_map = comps[(s, q)]
            f_map = comps[(p, s)]
            gs = coherent_cube(m, s, q, cap)
            fs = coherent_cube(m, p, s, cap)
            for k in range(cap + 1):
                for gu in gs.simplices(k):
                    for fv in fs.simplices(k):
                        w = comp_map(k, pair_in_product(gs, fs, k, gu, fv))
                        val = C.compose_at(o[p], o[s], o[q], k,
                                           g_map(k, gu), f_map(k, fv))
                        if forced.setdefault((k, w), val) != val:
                            consistent = False
                            break
                    if not consistent:
                        break
                if not consistent:
                    break
            if not consistent:
                break
        if not consistent:
            return
        fixed = {(k, w): v for (k, w), v in forced.items()
                 if not cube.is_degenerate(k, w)}
        for f in enumerate_maps(cube, H, fixed=fixed, budget=budget, hard=True):
            if all(f(k, w) == v for (k, w), v in forced.items()):
                comps[(p, q)] = f
                assign_components(o, t + 1, comps)
                del comps[(p, q)]

    def assign_objects(pos, o):
        if pos == m + 1:
            assign_components(o, 0, {})
            return
        for x in objs:
            o.append(x)
            assign_objects(pos + 1, o)
            o.pop()

    assign_objects(0, [])
    results.sort(key=lambda oc: _functor_key(*oc))
    return results


# ---------------------------------------------------------------------------
# hom space of a directed object, and the contraction witness


def two_object_hom_space(K: PointedDirected, cap_h: int, cap_v: int,
                         cap: int) -> tuple[SimplicialSet, Realization, BiSimplicialSet]:
    """The mapping space between the two marked objects of the coherent image
    of a directed two-object simplicial set: the block decomposition realized
    against the collapsed cubes."""
    D = block_decomposition(K, cap_h, cap_v)
    qfam = collapsed_cube_family(cap_h, cap_v, cap)
    R = realize_bi(D, qfam)
    return R.space, R, D


def nullhomotopy_check(i: int, j: int, cap: int) -> bool:
    """Does coning off the raw nerve at its terminal subset descend to the
    collapsed cube, restricting to the identity?"""
    N = raw_nerve(i, j, cap)
    Q = collapsed_cube(i, j, cap)
    pi = raw_projection(i, j, cap)
    pt = standard_simplex(0, cap)
    full = (1 << (i + j + 2)) - 1
    raw_ix = [{c: t for t, c in enumerate(raw_admissible_chains(i, j, k))}
              for k in range(cap + 1)]
    full_vertex = raw_ix[0][(full,)]

    # the contraction on the raw nerve
    cone_src = join(N, pt)
    comp = []
    for n in range(cap + 1):
        row = []
        for key in _cone_keys(N, pt, n):
            if key[0] == "x":
                row.append(key[1])
            elif key[0] == "y":
                row.append(N.degenerate_at(full_vertex, n))
            else:
                _, a, s, _t = key
                chain = raw_admissible_chains(i, j, a)[s]
                row.append(raw_ix[n][chain + (full,) * (n - a)])
        comp.append(tuple(row))
    contraction = SimplicialMap(cone_src, N, comp)

    # descend: the candidate on the collapsed cone must be constant on the
    # fibers of pi * id
    cone_q = join(Q, pt)
    candidate = [dict() for _ in range(cap + 1)]
    qix = _collapsed_index(i, j, cap)
    for n in range(cap + 1):
        for key in _cone_keys(N, pt, n):
            value = pi(n, contraction(n, _cone_id(N, pt, n, key)))
            if key[0] == "x":
                qkey = ("x", pi(n, key[1]))
            elif key[0] == "y":
                qkey = key
            else:
                _, a, s, t = key
                qkey = ("xy", a, pi(a, s), t)
            qid = join_index(Q, pt, n, qkey)
            if candidate[n].setdefault(qid, value) != value:
                return False
    comp_q = []
    for n in range(cap + 1):
        row = [None] * cone_q.counts[n]
        for qid, v in candidate[n].items():
            row[qid] = v
        if any(v is None for v in row):
            return False
        comp_q.append(tuple(row))
    try:
        h = SimplicialMap(cone_q, Q, comp_q)
    except ValueError:
        return False
    # restricts to the identity on the cube
    for n in range(cap + 1):
        for s in Q.simplices(n):
            if h(n, join_index(Q, pt, n, ("x", s))) != s:
                return False
    return True


def _cone_keys(X, pt, n):
    keys = [("x", s) for s in X.simplices(n)]
    for a in range(n):
        keys += [("xy", a, s, t) for s in X.simplices(a) for t in pt.simplices(n - 1 - a)]
    keys += [("y", t) for t in pt.simplices(n)]
    return keys


def _cone_id(X, pt, n, key):
    return join_index(X, pt, n, key)

"""Bisimplicial sets truncated at a bidegree cap, and the block calculus.

Levels are doubly indexed; horizontal operators act on the first index,
vertical on the second, and the two directions commute:

    face_h[i][j][a][s]   a in 0..i, lands in (i-1, j)
    face_v[i][j][b][s]   b in 0..j, lands in (i, j-1)
    degen_h[i][j][a][s]  lands in (i+1, j), present while i+1 <= cap_h
    degen_v[i][j][b][s]  lands in (i, j+1)

cut(n) has (i,j)-simplices the monotone maps on the join [i] * [j] into [n];
collapsed_join(i,j) is that join with each block collapsed to a point,
a directed two-object simplicial set; block_decomposition recovers a
bisimplicial set from such an object by exhaustive map enumeration.
"""

from __future__ import annotations

from functools import lru_cache

from .simplicial import (
    PointedDirected, SimplicialMap, SimplicialSet, build_sset,
    coface_tuple, codegen_tuple, compose_monotone, enumerate_maps,
    is_directed, join, join_index, join_map, monotone_index,
    monotone_maps, simplex_map, standard_simplex,
)


class BiSimplicialSet:
    __slots__ = ("cap_h", "cap_v", "counts", "face_h", "face_v",
                 "degen_h", "degen_v", "labels", "_ez", "_nondeg")

    def __init__(self, cap_h, cap_v, counts, face_h, face_v, degen_h, degen_v,
                 labels=None, check=True):
        self.cap_h = cap_h
        self.cap_v = cap_v
        self.counts = counts
        self.face_h = face_h
        self.face_v = face_v
        self.degen_h = degen_h
        self.degen_v = degen_v
        self.labels = labels
        self._ez = None
        self._nondeg = None
        if check:
            check_bisimplicial_identities(self)

    def __repr__(self):
        return f"BiSimplicialSet(caps=({self.cap_h},{self.cap_v}))"

    def size(self, i, j):
        return self.counts[i][j]

    def simplices(self, i, j):
        return range(self.counts[i][j])

    def dh(self, i, j, a, s):
        return self.face_h[i][j][a][s]

    def dv(self, i, j, b, s):
        return self.face_v[i][j][b][s]

    def sh(self, i, j, a, s):
        return self.degen_h[i][j][a][s]

    def sv(self, i, j, b, s):
        return self.degen_v[i][j][b][s]

    def bidegrees(self):
        return [(i, j) for i in range(self.cap_h + 1) for j in range(self.cap_v + 1)]

    def _build_ez(self):
        # carrier[(i,j)][s] = (i0, j0, u, pi_h, pi_v): s is the (pi_h, pi_v)
        # bidegeneracy of the bi-nondegenerate u.
        ez = {}
        nondeg = {}
        for i in range(self.cap_h + 1):
            for j in range(self.cap_v + 1):
                parent_h = {}
                if i >= 1:
                    for a in range(i):
                        for t in self.simplices(i - 1, j):
                            img = self.degen_h[i - 1][j][a][t]
                            if img not in parent_h:
                                parent_h[img] = (a, t)
                parent_v = {}
                if j >= 1:
                    for b in range(j):
                        for t in self.simplices(i, j - 1):
                            img = self.degen_v[i][j - 1][b][t]
                            if img not in parent_v:
                                parent_v[img] = (b, t)
                level = []
                nd = []
                for s in self.simplices(i, j):
                    if s in parent_h:
                        a, t = parent_h[s]
                        i0, j0, u, ph, pv = ez[(i - 1, j)][t]
                        level.append((i0, j0, u,
                                      compose_monotone(ph, codegen_tuple(i - 1, a)), pv))
                    elif s in parent_v:
                        b, t = parent_v[s]
                        i0, j0, u, ph, pv = ez[(i, j - 1)][t]
                        level.append((i0, j0, u, ph,
                                      compose_monotone(pv, codegen_tuple(j - 1, b))))
                    else:
                        level.append((i, j, s, tuple(range(i + 1)), tuple(range(j + 1))))
                        nd.append(s)
                ez[(i, j)] = level
                nondeg[(i, j)] = tuple(nd)
        self._ez = ez
        self._nondeg = nondeg

    def ez(self, i, j, s):
        if self._ez is None:
            self._build_ez()
        return self._ez[(i, j)][s]

    def nondegenerate(self, i, j):
        if self._nondeg is None:
            self._build_ez()
        return self._nondeg[(i, j)]

    def apply_epis(self, pi_h, pi_v, i0, j0, u):
        """B(pi_h, pi_v)(u) for surjections onto the bidegree of u."""
        i = len(pi_h) - 1
        return self._apply_epi_v(pi_v, j0, self._apply_epi_h(pi_h, i0, u, j0), i)

    def _apply_epi_h(self, pi, i0, u, j):
        i = len(pi) - 1
        if i == i0:
            return u
        t = next(x for x in range(i) if pi[x] == pi[x + 1])
        shorter = pi[:t] + pi[t + 1:]
        return self.degen_h[i - 1][j][t][self._apply_epi_h(shorter, i0, u, j)]

    def _apply_epi_v(self, pi, j0, u, i):
        j = len(pi) - 1
        if j == j0:
            return u
        t = next(x for x in range(j) if pi[x] == pi[x + 1])
        shorter = pi[:t] + pi[t + 1:]
        return self.degen_v[i][j - 1][t][self._apply_epi_v(shorter, j0, u, i)]


def check_bisimplicial_identities(B: BiSimplicialSet) -> None:
    for i in range(B.cap_h + 1):
        for j in range(B.cap_v + 1):
            # horizontal simplicial identities against horizontal, at fixed j
            if i >= 2:
                for b in range(i + 1):
                    for a in range(b):
                        for s in B.simplices(i, j):
                            assert B.dh(i - 1, j, a, B.dh(i, j, b, s)) == \
                                B.dh(i - 1, j, b - 1, B.dh(i, j, a, s))
            if j >= 2:
                for b in range(j + 1):
                    for a in range(b):
                        for s in B.simplices(i, j):
                            assert B.dv(i, j - 1, a, B.dv(i, j, b, s)) == \
                                B.dv(i, j - 1, b - 1, B.dv(i, j, a, s))
            # the two directions commute
            if i >= 1 and j >= 1:
                for a in range(i + 1):
                    for b in range(j + 1):
                        for s in B.simplices(i, j):
                            assert B.dv(i - 1, j, b, B.dh(i, j, a, s)) == \
                                B.dh(i, j - 1, a, B.dv(i, j, b, s))
            if i + 1 <= B.cap_h and j + 1 <= B.cap_v:
                for a in range(i + 1):
                    for b in range(j + 1):
                        for s in B.simplices(i, j):
                            assert B.sv(i + 1, j, b, B.sh(i, j, a, s)) == \
                                B.sh(i, j + 1, a, B.sv(i, j, b, s))
            # degeneracy sections
            if i + 1 <= B.cap_h:
                for a in range(i + 1):
                    for s in B.simplices(i, j):
                        assert B.dh(i + 1, j, a, B.sh(i, j, a, s)) == s
                        assert B.dh(i + 1, j, a + 1, B.sh(i, j, a, s)) == s
            if j + 1 <= B.cap_v:
                for b in range(j + 1):
                    for s in B.simplices(i, j):
                        assert B.dv(i, j + 1, b, B.sv(i, j, b, s)) == s
                        assert B.dv(i, j + 1, b + 1, B.sv(i, j, b, s)) == s


def build_bisset(cap_h, cap_v, level_keys, fh, fv, dh, dv, label_fn=None,
                 check=True):
    """Assemble a BiSimplicialSet from keyed levels (level_keys[(i,j)])."""
    index = {}
    for i in range(cap_h + 1):
        for j in range(cap_v + 1):
            keys = list(level_keys[(i, j)])
            index[(i, j)] = {k: t for t, k in enumerate(keys)}
    counts = tuple(tuple(len(level_keys[(i, j)]) for j in range(cap_v + 1))
                   for i in range(cap_h + 1))
    face_h, face_v, degen_h, degen_v, labels = [], [], [], [], []
    for i in range(cap_h + 1):
        fh_row, fv_row, dh_row, dv_row, lb_row = [], [], [], [], []
        for j in range(cap_v + 1):
            ks = level_keys[(i, j)]
            fh_row.append(tuple(tuple(index[(i - 1, j)][fh(i, j, a, k)] for k in ks)
                                for a in range(i + 1)) if i >= 1 else ())
            fv_row.append(tuple(tuple(index[(i, j - 1)][fv(i, j, b, k)] for k in ks)
                                for b in range(j + 1)) if j >= 1 else ())
            dh_row.append(tuple(tuple(index[(i + 1, j)][dh(i, j, a, k)] for k in ks)
                                for a in range(i + 1)) if i + 1 <= cap_h else ())
            dv_row.append(tuple(tuple(index[(i, j + 1)][dv(i, j, b, k)] for k in ks)
                                for b in range(j + 1)) if j + 1 <= cap_v else ())
            lb_row.append(tuple(label_fn(k) for k in ks) if label_fn else None)
        face_h.append(tuple(fh_row))
        face_v.append(tuple(fv_row))
        degen_h.append(tuple(dh_row))
        degen_v.append(tuple(dv_row))
        labels.append(tuple(lb_row))
    B = BiSimplicialSet(cap_h, cap_v, counts, tuple(face_h), tuple(face_v),
                        tuple(degen_h), tuple(degen_v),
                        tuple(labels) if label_fn else None, check=check)
    return B, index


class BiSimplicialMap:
    __slots__ = ("source", "target", "comp")

    def __init__(self, source, target, comp, check=True):
        if (source.cap_h, source.cap_v) != (target.cap_h, target.cap_v):
            raise ValueError("bisimplicial caps differ")
        self.source = source
        self.target = target
        self.comp = comp  # dict (i,j) -> tuple
        if check:
            self._validate()

    def _validate(self):
        X, Y = self.source, self.target
        for (i, j) in X.bidegrees():
            row = self.comp[(i, j)]
            assert len(row) == X.counts[i][j]
            for a in range(i + 1):
                if i >= 1:
                    for s in X.simplices(i, j):
                        assert self.comp[(i - 1, j)][X.dh(i, j, a, s)] == \
                            Y.dh(i, j, a, row[s])
            for b in range(j + 1):
                if j >= 1:
                    for s in X.simplices(i, j):
                        assert self.comp[(i, j - 1)][X.dv(i, j, b, s)] == \
                            Y.dv(i, j, b, row[s])
            if i + 1 <= X.cap_h:
                for a in range(i + 1):
                    for s in X.simplices(i, j):
                        assert self.comp[(i + 1, j)][X.sh(i, j, a, s)] == \
                            Y.sh(i, j, a, row[s])
            if j + 1 <= X.cap_v:
                for b in range(j + 1):
                    for s in X.simplices(i, j):
                        assert self.comp[(i, j + 1)][X.sv(i, j, b, s)] == \
                            Y.sv(i, j, b, row[s])

    def __call__(self, i, j, s):
        return self.comp[(i, j)][s]

    def is_bijective(self):
        return all(len(set(self.comp[(i, j)])) == len(self.comp[(i, j)]) ==
                   self.target.counts[i][j] for (i, j) in self.source.bidegrees())


# ---------------------------------------------------------------------------


def box(X: SimplicialSet, Y: SimplicialSet, cap_h=None, cap_v=None) -> BiSimplicialSet:
    """Exterior product: level (i,j) is X_i x Y_j; operators act one-sided."""
    cap_h = X.cap if cap_h is None else cap_h
    cap_v = Y.cap if cap_v is None else cap_v
    levels = {(i, j): [(s, t) for s in X.simplices(i) for t in Y.simplices(j)]
              for i in range(cap_h + 1) for j in range(cap_v + 1)}
    B, _ = build_bisset(
        cap_h, cap_v, levels,
        fh=lambda i, j, a, k: (X.d(i, a, k[0]), k[1]),
        fv=lambda i, j, b, k: (k[0], Y.d(j, b, k[1])),
        dh=lambda i, j, a, k: (X.s(i, a, k[0]), k[1]),
        dv=lambda i, j, b, k: (k[0], Y.s(j, b, k[1])))
    return B


def box_pair_index(X, Y, i, j, s, t) -> int:
    return s * Y.counts[j] + t


def box_of_simplices(i: int, j: int, cap_h: int, cap_v: int) -> BiSimplicialSet:
    return box(standard_simplex(i, cap_h), standard_simplex(j, cap_v))


@lru_cache(maxsize=None)
def cut(n: int, cap_h: int, cap_v: int) -> BiSimplicialSet:
    """(i,j)-simplices are all monotone maps [i+1+j] -> [n]; horizontal
    operators act through the first i+1 positions, vertical through the rest."""
    levels = {(i, j): monotone_maps(i + 1 + j, n)
              for i in range(cap_h + 1) for j in range(cap_v + 1)}

    def drop(u, p):
        return u[:p] + u[p + 1:]

    def dup(u, p):
        return u[:p + 1] + u[p:]

    B, _ = build_bisset(
        cap_h, cap_v, levels,
        fh=lambda i, j, a, u: drop(u, a),
        fv=lambda i, j, b, u: drop(u, i + 1 + b),
        dh=lambda i, j, a, u: dup(u, a),
        dv=lambda i, j, b, u: dup(u, i + 1 + b),
        label_fn=lambda u: "".join(map(str, u)))
    return B


def cut_index(n, i, j, u) -> int:
    return monotone_index(i + 1 + j, n)[u]


def cut_postcompose(alpha: tuple[int, ...], n_src: int, n_dst: int,
                    cap_h: int, cap_v: int) -> BiSimplicialMap:
    """cut(n_src) -> cut(n_dst) by postcomposition with alpha: [n_src] -> [n_dst]."""
    A = cut(n_src, cap_h, cap_v)
    B = cut(n_dst, cap_h, cap_v)
    comp = {}
    for i in range(cap_h + 1):
        for j in range(cap_v + 1):
            keys = monotone_maps(i + 1 + j, n_src)
            tgt = monotone_index(i + 1 + j, n_dst)
            comp[(i, j)] = tuple(tgt[compose_monotone(alpha, u)] for u in keys)
    return BiSimplicialMap(A, B, comp, check=False)


def cut_restrict_source(n: int, cap_h: int, cap_v: int) -> BiSimplicialMap:
    """Restriction cut(n) -> Delta^n box Delta^0 onto the first join block."""
    A = cut(n, cap_h, cap_v)
    dn = standard_simplex(n, cap_h)
    d0 = standard_simplex(0, cap_v)
    B = box(dn, d0)
    comp = {}
    for i in range(cap_h + 1):
        for j in range(cap_v + 1):
            keyix = monotone_index(i, n)
            comp[(i, j)] = tuple(
                box_pair_index(dn, d0, i, j, keyix[u[:i + 1]], 0)
                for u in monotone_maps(i + 1 + j, n))
    return BiSimplicialMap(A, B, comp, check=False)


def cut_restrict_target(n: int, cap_h: int, cap_v: int) -> BiSimplicialMap:
    """Restriction cut(n) -> Delta^0 box Delta^n onto the second join block."""
    A = cut(n, cap_h, cap_v)
    d0 = standard_simplex(0, cap_h)
    dn = standard_simplex(n, cap_v)
    B = box(d0, dn)
    comp = {}
    for i in range(cap_h + 1):
        for j in range(cap_v + 1):
            keyix = monotone_index(j, n)
            comp[(i, j)] = tuple(
                box_pair_index(d0, dn, i, j, 0, keyix[u[i + 1:]])
                for u in monotone_maps(i + 1 + j, n))
    return BiSimplicialMap(A, B, comp, check=False)


# ---------------------------------------------------------------------------
# the collapsed two-block joins and decomposition


@lru_cache(maxsize=None)
def collapsed_join(i: int, j: int, cap: int) -> PointedDirected:
    """The join of Delta^i and Delta^j with each block collapsed to a point.

    Simplices hitting both blocks stay distinct; each pure block contributes
    one (degenerate) simplex per level.  Base points are the two collapse
    vertices, in block order.
    """
    levels = []
    for m in range(cap + 1):
        lv = [("0",), ("1",)]
        for a in range(m):
            b = m - 1 - a
            lv += [("xy", a, u, v) for u in monotone_maps(a, i)
                   for v in monotone_maps(b, j)]
        levels.append(lv)

    def ff(m, p, k):
        if k[0] in ("0", "1"):
            return k
        _, a, u, v = k
        b = m - 1 - a
        if p <= a:
            if a == 0:
                return ("1",)
            return ("xy", a - 1, u[:p] + u[p + 1:], v)
        if b == 0:
            return ("0",)
        q = p - a - 1
        return ("xy", a, u, v[:q] + v[q + 1:])

    def df(m, p, k):
        if k[0] in ("0", "1"):
            return k
        _, a, u, v = k
        if p <= a:
            return ("xy", a + 1, u[:p + 1] + u[p:], v)
        q = p - a - 1
        return ("xy", a, u, v[:q + 1] + v[q:])

    X, idx = build_sset(cap, levels, ff, df,
                        label_fn=lambda k: repr(k))
    return PointedDirected(X, idx[0][("0",)], idx[0][("1",)])


def collapsed_join_index(i, j, cap, m, key) -> int:
    if key[0] == "0":
        return 0
    if key[0] == "1":
        return 1
    _, a, u, v = key
    base = 2
    for a2 in range(a):
        base += len(monotone_maps(a2, i)) * len(monotone_maps(m - 1 - a2, j))
    nv = len(monotone_maps(m - 1 - a, j))
    return base + monotone_index(a, i)[u] * nv + monotone_index(m - 1 - a, j)[v]


def collapsed_join_map(phi: tuple[int, ...], i2: int, psi: tuple[int, ...],
                       j2: int, cap: int) -> SimplicialMap:
    """The pointed map collapsed_join(i,j) -> collapsed_join(i2,j2) induced by
    monotone phi: [i] -> [i2] and psi: [j] -> [j2]."""
    i, j = len(phi) - 1, len(psi) - 1
    A = collapsed_join(i, j, cap)
    B = collapsed_join(i2, j2, cap)
    comp = []
    for m in range(cap + 1):
        row = []
        for key in _collapsed_join_levels(i, j, m):
            if key[0] in ("0", "1"):
                row.append(collapsed_join_index(i2, j2, cap, m, key))
            else:
                _, a, u, v = key
                row.append(collapsed_join_index(
                    i2, j2, cap, m,
                    ("xy", a, compose_monotone(phi, u), compose_monotone(psi, v))))
        comp.append(tuple(row))
    return SimplicialMap(A.carrier, B.carrier, comp, check=False)


def _collapsed_join_levels(i, j, m):
    lv = [("0",), ("1",)]
    for a in range(m):
        lv += [("xy", a, u, v) for u in monotone_maps(a, i)
               for v in monotone_maps(m - 1 - a, j)]
    return lv


def block_decomposition(K: PointedDirected, cap_h: int, cap_v: int) -> BiSimplicialSet:
    """The bisimplicial set of maps from the two-block joins into K over the
    interval, computed by exhaustive map enumeration with block constraints.

    Level (i,j) is the set of simplicial maps join(Delta^i, Delta^j) -> K
    taking the first block into the fiber over 0 and the second into the
    fiber over 1; operators act by precomposition with join maps.
    """
    if not is_directed(K):
        raise ValueError("block_decomposition needs a directed two-object input")
    cap = K.carrier.cap
    if cap_h + 1 + cap_v > cap:
        raise ValueError(
            f"carrier cap {cap} too small for bidegrees up to ({cap_h},{cap_v})")
    probes = {}
    elements = {}

    def probe(i, j):
        if (i, j) not in probes:
            probes[(i, j)] = join(standard_simplex(i, cap), standard_simplex(j, cap))
        return probes[(i, j)]

    def elems(i, j):
        if (i, j) not in elements:
            P = probe(i, j)
            di = standard_simplex(i, cap)
            dj = standard_simplex(j, cap)
            fixed = {}
            for n in range(cap + 1):
                for s in di.nondegenerate(n):
                    cell = join_index(di, dj, n, ("x", s))
                    if not P.is_degenerate(n, cell):
                        fixed[(n, cell)] = K.carrier.degenerate_at(K.p0, n)
                for t in dj.nondegenerate(n):
                    cell = join_index(di, dj, n, ("y", t))
                    if not P.is_degenerate(n, cell):
                        fixed[(n, cell)] = K.carrier.degenerate_at(K.p1, n)
            found = enumerate_maps(P, K.carrier, fixed=fixed)
            found = [f for f in found if _blocks_ok(di, dj, P, K, f)]
            found.sort(key=lambda f: f.comp)
            elements[(i, j)] = (found, {f.comp: t for t, f in enumerate(found)})
        return elements[(i, j)]

    def _blocks_ok(di, dj, P, K, f):
        for n in range(cap + 1):
            for s in di.simplices(n):
                if f(n, join_index(di, dj, n, ("x", s))) != K.carrier.degenerate_at(K.p0, n):
                    return False
            for t in dj.simplices(n):
                if f(n, join_index(di, dj, n, ("y", t))) != K.carrier.degenerate_at(K.p1, n):
                    return False
        return True

    levels = {}
    for i in range(cap_h + 1):
        for j in range(cap_v + 1):
            levels[(i, j)] = list(range(len(elems(i, j)[0])))

    def act(i, j, alpha, beta, i2, j2, s):
        f = elems(i, j)[0][s]
        jm = join_map(simplex_map(alpha, i, cap), simplex_map(beta, j, cap))
        comp = tuple(tuple(f.comp[n][jm(n, t)] for t in probe(i2, j2).simplices(n))
                     for n in range(cap + 1))
        return elems(i2, j2)[1][comp]

    fh = lambda i, j, a, s: act(i, j, coface_tuple(i, a), tuple(range(j + 1)), i - 1, j, s)
    fv = lambda i, j, b, s: act(i, j, tuple(range(i + 1)), coface_tuple(j, b), i, j - 1, s)
    dh = lambda i, j, a, s: act(i, j, codegen_tuple(i, a), tuple(range(j + 1)), i + 1, j, s)
    dv = lambda i, j, b, s: act(i, j, tuple(range(i + 1)), codegen_tuple(j, b), i, j + 1, s)

    B, _ = build_bisset(cap_h, cap_v, levels, fh, fv, dh, dv)
    return B


def block_pattern_counts(K: PointedDirected, cap_h: int, cap_v: int):
    """Cross-check for block_decomposition: count simplices of K whose vertex
    pattern is i+1 copies of p0 followed by j+1 copies of p1."""
    X = K.carrier
    out = {}
    for i in range(cap_h + 1):
        for j in range(cap_v + 1):
            m = i + 1 + j
            if m > X.cap:
                raise ValueError("cap too small")
            cnt = 0
            for s in X.simplices(m):
                vt = X.vertex_tuple(m, s)
                if vt == (K.p0,) * (i + 1) + (K.p1,) * (j + 1):
                    cnt += 1
            out[(i, j)] = cnt
    return out


# ---------------------------------------------------------------------------
# diagonal, flips and reversals


def diag(B: BiSimplicialSet) -> SimplicialSet:
    """The diagonal: level k is B_{k,k} with both-direction operators."""
    cap = min(B.cap_h, B.cap_v)
    counts = [B.counts[k][k] for k in range(cap + 1)]
    face = [()]
    for k in range(1, cap + 1):
        face.append(tuple(
            tuple(B.dv(k - 1, k, a, B.dh(k, k, a, s)) for s in B.simplices(k, k))
            for a in range(k + 1)))
    degen = []
    for k in range(cap):
        degen.append(tuple(
            tuple(B.sv(k + 1, k, a, B.sh(k, k, a, s)) for s in B.simplices(k, k))
            for a in range(k + 1)))
    degen.append(())
    return SimplicialSet(cap, counts, tuple(face), tuple(degen))


def flip(B: BiSimplicialSet) -> BiSimplicialSet:
    counts = tuple(tuple(B.counts[j][i] for j in range(B.cap_h + 1))
                   for i in range(B.cap_v + 1))
    t = lambda tab: tuple(tuple(tab[j][i] for j in range(B.cap_h + 1))
                          for i in range(B.cap_v + 1))
    return BiSimplicialSet(B.cap_v, B.cap_h, counts, t(B.face_v), t(B.face_h),
                           t(B.degen_v), t(B.degen_h), check=False)


def lrev(B: BiSimplicialSet) -> BiSimplicialSet:
    """Reverse the horizontal simplicial direction (d_a becomes d_{i-a})."""
    fh = tuple(tuple(tuple(B.face_h[i][j][i - a] for a in range(i + 1)) if i >= 1 else ()
                     for j in range(B.cap_v + 1)) for i in range(B.cap_h + 1))
    dh = tuple(tuple(tuple(B.degen_h[i][j][i - a] for a in range(i + 1))
                     if i + 1 <= B.cap_h else ()
                     for j in range(B.cap_v + 1)) for i in range(B.cap_h + 1))
    return BiSimplicialSet(B.cap_h, B.cap_v, B.counts, fh, B.face_v, dh,
                           B.degen_v, check=False)


def rrev(B: BiSimplicialSet) -> BiSimplicialSet:
    fv = tuple(tuple(tuple(B.face_v[i][j][j - b] for b in range(j + 1)) if j >= 1 else ()
                     for j in range(B.cap_v + 1)) for i in range(B.cap_h + 1))
    dv = tuple(tuple(tuple(B.degen_v[i][j][j - b] for b in range(j + 1))
                     if j + 1 <= B.cap_v else ()
                     for j in range(B.cap_v + 1)) for i in range(B.cap_h + 1))
    return BiSimplicialSet(B.cap_h, B.cap_v, B.counts, B.face_h, fv,
                           B.degen_h, dv, check=False)


def rev(B: BiSimplicialSet) -> BiSimplicialSet:
    return lrev(rrev(B))


def boundary_bisimplex(i: int, j: int, cap_h: int, cap_v: int) -> BiSimplicialSet:
    """The union of the two one-sided boundaries inside Delta^i box Delta^j.

    For (i,j) = (0,0) this is empty.
    """
    def keep(u, v):
        return len(set(u)) <= i or len(set(v)) <= j

    levels = {(a, b): [(u, v) for u in monotone_maps(a, i)
                       for v in monotone_maps(b, j) if keep(u, v)]
              for a in range(cap_h + 1) for b in range(cap_v + 1)}
    B, _ = build_bisset(
        cap_h, cap_v, levels,
        fh=lambda a, b, p, k: (k[0][:p] + k[0][p + 1:], k[1]),
        fv=lambda a, b, q, k: (k[0], k[1][:q] + k[1][q + 1:]),
        dh=lambda a, b, p, k: (k[0][:p + 1] + k[0][p:], k[1]),
        dv=lambda a, b, q, k: (k[0], k[1][:q + 1] + k[1][q:]))
    return B


def boundary_bisimplex_inclusion(i, j, cap_h, cap_v) -> BiSimplicialMap:
    B = boundary_bisimplex(i, j, cap_h, cap_v)
    dn = standard_simplex(i, cap_h)
    dm = standard_simplex(j, cap_v)
    T = box(dn, dm)
    keyix_u = [{u: t for t, u in enumerate(monotone_maps(a, i))} for a in range(cap_h + 1)]
    keyix_v = [{v: t for t, v in enumerate(monotone_maps(b, j))} for b in range(cap_v + 1)]

    def keep(u, v):
        return len(set(u)) <= i or len(set(v)) <= j

    comp = {}
    for a in range(cap_h + 1):
        for b in range(cap_v + 1):
            comp[(a, b)] = tuple(
                box_pair_index(dn, dm, a, b, keyix_u[a][u], keyix_v[b][v])
                for u in monotone_maps(a, i) for v in monotone_maps(b, j)
                if keep(u, v))
    return BiSimplicialMap(B, T, comp, check=False)


# ---------------------------------------------------------------------------


def is_isomorphic_bi(X: BiSimplicialSet, Y: BiSimplicialSet):
    """An isomorphism of bisimplicial sets, or None; backtracking over
    bi-nondegenerate cells ordered by total degree."""
    if (X.cap_h, X.cap_v) != (Y.cap_h, Y.cap_v):
        raise ValueError("caps differ")
    if X.counts != Y.counts:
        return None
    for bd in X.bidegrees():
        if len(X.nondegenerate(*bd)) != len(Y.nondegenerate(*bd)):
            return None
    cells = [(i, j, s) for (i, j) in sorted(X.bidegrees(), key=lambda p: (p[0] + p[1], p))
             for s in X.nondegenerate(i, j)]
    assign = {}
    used = {bd: set() for bd in X.bidegrees()}

    def faces_of(B, i, j, s, kind):
        out = []
        if i >= 1:
            for a in range(i + 1):
                out.append(B.dh(i, j, a, s))
        if j >= 1:
            for b in range(j + 1):
                out.append(B.dv(i, j, b, s))
        return tuple(out)

    def image_of(i, j, s):
        i0, j0, u, ph, pv = X.ez(i, j, s)
        return Y.apply_epis(ph, pv, i0, j0, assign[(i0, j0, u)])

    def rec(k):
        if k == len(cells):
            return True
        i, j, s = cells[k]
        req = []
        ok = True
        if i >= 1:
            for a in range(i + 1):
                t = X.dh(i, j, a, s)
                i0, j0, u, ph, pv = X.ez(i - 1, j, t)
                req.append(("h", a, Y.apply_epis(ph, pv, i0, j0, assign[(i0, j0, u)])))
        if j >= 1:
            for b in range(j + 1):
                t = X.dv(i, j, b, s)
                i0, j0, u, ph, pv = X.ez(i, j - 1, t)
                req.append(("v", b, Y.apply_epis(ph, pv, i0, j0, assign[(i0, j0, u)])))
        for c in Y.nondegenerate(i, j):
            if c in used[(i, j)]:
                continue
            good = True
            for kind, a, val in req:
                img = Y.dh(i, j, a, c) if kind == "h" else Y.dv(i, j, a, c)
                if img != val:
                    good = False
                    break
            if not good:
                continue
            assign[(i, j, s)] = c
            used[(i, j)].add(c)
            if rec(k + 1):
                return True
            del assign[(i, j, s)]
            used[(i, j)].discard(c)
        return False

    if not rec(0):
        return None
    comp = {}
    for (i, j) in X.bidegrees():
        comp[(i, j)] = tuple(image_of(i, j, s) for s in X.simplices(i, j))
    f = BiSimplicialMap(X, Y, comp)
    return f if f.is_bijective() else None

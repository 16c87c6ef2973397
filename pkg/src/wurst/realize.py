"""Colimit-extension adjunctions for (bi)cosimplicial simplicial sets.

realize(S, X) computes the coend of S against the terms of X by union-find:
every pair (simplex of S, simplex of a term) is first rewritten along the
degeneracy relations to its nondegenerate-carrier form, then the face
relations are imposed on the reduced pairs.  sing(X, T) enumerates maps out
of the terms.  Reedy-style boundary and pullback checks operate on the same
data.
"""

from __future__ import annotations

from .bisimplicial import (
    BiSimplicialMap, BiSimplicialSet, boundary_bisimplex,
    boundary_bisimplex_inclusion, box, collapsed_join, collapsed_join_map,
)
from .simplicial import (
    CapMismatchError, PointedDirected, SimplicialMap, SimplicialSet,
    _UnionFind, boundary, boundary_inclusion, coface_tuple, codegen_tuple,
    compose_maps, enumerate_maps, identity_map, join, join_map,
    monotone_maps, simplex_map, standard_simplex,
)


class CosimplicialSSet:
    """Terms term[0..cocap] with coface/codegeneracy structure maps."""

    def __init__(self, cocap, term, coface, codegen, check=True):
        self.cocap = cocap
        self.term = tuple(term)
        self.coface = coface      # coface[n][i]: term[n-1] -> term[n], 1 <= n
        self.codegen = codegen    # codegen[n][i]: term[n+1] -> term[n], n < cocap
        self.cap = self.term[0].cap
        self._maps = {}
        if check:
            self.validate()

    def validate(self):
        for n in range(self.cocap + 1):
            if self.term[n].cap != self.cap:
                raise CapMismatchError("cosimplicial terms must share their cap")
        for n in range(2, self.cocap + 1):
            for j in range(n + 1):
                for i in range(j):
                    lhs = compose_maps(self.coface[n][j], self.coface[n - 1][i])
                    rhs = compose_maps(self.coface[n][i], self.coface[n - 1][j - 1])
                    assert lhs.comp == rhs.comp, f"coface identity fails at n={n}"
        for n in range(self.cocap):
            for j in range(n + 1):
                for i in (j, j + 1):
                    m = compose_maps(self.codegen[n][j], self.coface[n + 1][i])
                    assert m.comp == identity_map(self.term[n]).comp, \
                        f"codegeneracy section fails at n={n}, i={i}, j={j}"

    def structure_map(self, alpha: tuple[int, ...], n_dst: int) -> SimplicialMap:
        """The map term[len(alpha)-1] -> term[n_dst] for monotone alpha."""
        key = (alpha, n_dst)
        if key in self._maps:
            return self._maps[key]
        a = len(alpha) - 1
        dup = next((t for t in range(a) if alpha[t] == alpha[t + 1]), None)
        if dup is not None:
            shorter = alpha[:dup] + alpha[dup + 1:]
            m = compose_maps(self.structure_map(shorter, n_dst), self.codegen[a - 1][dup])
        else:
            missing = next((v for v in range(n_dst + 1) if v not in alpha), None)
            if missing is not None:
                squeezed = tuple(v if v < missing else v - 1 for v in alpha)
                m = compose_maps(self.coface[n_dst][missing],
                                 self.structure_map(squeezed, n_dst - 1))
            else:
                m = identity_map(self.term[a])
        self._maps[key] = m
        return m


class BiCosimplicialSSet:
    """Doubly indexed terms with commuting structure maps in each direction."""

    def __init__(self, cocap_h, cocap_v, term, coface_h, coface_v,
                 codegen_h, codegen_v, check=True):
        self.cocap_h = cocap_h
        self.cocap_v = cocap_v
        self.term = term            # term[i][j]
        self.coface_h = coface_h    # coface_h[i][j][a]: term[i-1][j] -> term[i][j]
        self.coface_v = coface_v
        self.codegen_h = codegen_h  # codegen_h[i][j][a]: term[i+1][j] -> term[i][j]
        self.codegen_v = codegen_v
        self.cap = term[0][0].cap
        self._maps = {}
        if check:
            self.validate()

    def bidegrees(self):
        return [(i, j) for i in range(self.cocap_h + 1)
                for j in range(self.cocap_v + 1)]

    def validate(self):
        for (i, j) in self.bidegrees():
            if self.term[i][j].cap != self.cap:
                raise CapMismatchError("bicosimplicial terms must share their cap")
        # sections and commuting squares on generators
        for (i, j) in self.bidegrees():
            if i + 1 <= self.cocap_h:
                for a in range(i + 1):
                    m = compose_maps(self.codegen_h[i][j][a], self.coface_h[i + 1][j][a])
                    assert m.comp == identity_map(self.term[i][j]).comp
            if j + 1 <= self.cocap_v:
                for b in range(j + 1):
                    m = compose_maps(self.codegen_v[i][j][b], self.coface_v[i][j + 1][b])
                    assert m.comp == identity_map(self.term[i][j]).comp
            if i >= 1 and j >= 1:
                for a in range(i + 1):
                    for b in range(j + 1):
                        lhs = compose_maps(self.coface_h[i][j][a], self.coface_v[i - 1][j][b])
                        rhs = compose_maps(self.coface_v[i][j][b], self.coface_h[i][j - 1][a])
                        assert lhs.comp == rhs.comp, "directions do not commute"

    def structure_map(self, alpha, beta, i_dst, j_dst) -> SimplicialMap:
        key = (alpha, beta, i_dst, j_dst)
        if key in self._maps:
            return self._maps[key]
        a = len(alpha) - 1
        b = len(beta) - 1
        dup = next((t for t in range(a) if alpha[t] == alpha[t + 1]), None)
        if dup is not None:
            shorter = alpha[:dup] + alpha[dup + 1:]
            m = compose_maps(self.structure_map(shorter, beta, i_dst, j_dst),
                             self.codegen_h[a - 1][b][dup])
        else:
            missing = next((v for v in range(i_dst + 1) if v not in alpha), None)
            if missing is not None:
                squeezed = tuple(v if v < missing else v - 1 for v in alpha)
                m = compose_maps(self.coface_h[i_dst][j_dst][missing],
                                 self.structure_map(squeezed, beta, i_dst - 1, j_dst))
            else:
                dupv = next((t for t in range(b) if beta[t] == beta[t + 1]), None)
                if dupv is not None:
                    shorter = beta[:dupv] + beta[dupv + 1:]
                    m = compose_maps(self.structure_map(alpha, shorter, i_dst, j_dst),
                                     self.codegen_v[a][b - 1][dupv])
                else:
                    missv = next((v for v in range(j_dst + 1) if v not in beta), None)
                    if missv is not None:
                        squeezed = tuple(v if v < missv else v - 1 for v in beta)
                        m = compose_maps(self.coface_v[i_dst][j_dst][missv],
                                         self.structure_map(alpha, squeezed, i_dst, j_dst - 1))
                    else:
                        m = identity_map(self.term[a][b])
        self._maps[key] = m
        return m


class CosimplicialTransformation:
    """A family of maps term[n] -> term[n] commuting with structure maps."""

    def __init__(self, source: CosimplicialSSet, target: CosimplicialSSet,
                 comp, check=True):
        self.source = source
        self.target = target
        self.comp = tuple(comp)
        if check:
            self.validate()

    def validate(self):
        X, Y = self.source, self.target
        assert X.cocap == Y.cocap
        for n in range(1, X.cocap + 1):
            for i in range(n + 1):
                lhs = compose_maps(self.comp[n], X.coface[n][i])
                rhs = compose_maps(Y.coface[n][i], self.comp[n - 1])
                assert lhs.comp == rhs.comp, f"not natural at coface {i}, n={n}"
        for n in range(X.cocap):
            for i in range(n + 1):
                lhs = compose_maps(self.comp[n], X.codegen[n][i])
                rhs = compose_maps(Y.codegen[n][i], self.comp[n + 1])
                assert lhs.comp == rhs.comp, f"not natural at codegeneracy {i}, n={n}"


def delta_family(cocap: int, cap: int) -> CosimplicialSSet:
    """The standard simplices as a cosimplicial simplicial set."""
    term = [standard_simplex(n, cap) for n in range(cocap + 1)]
    coface = [()]
    for n in range(1, cocap + 1):
        coface.append(tuple(simplex_map(coface_tuple(n, i), n, cap)
                            for i in range(n + 1)))
    codegen = []
    for n in range(cocap):
        codegen.append(tuple(simplex_map(codegen_tuple(n, i), n, cap)
                             for i in range(n + 1)))
    return CosimplicialSSet(cocap, term, tuple(coface), tuple(codegen))


def join_family(cocap_h: int, cocap_v: int, cap: int) -> BiCosimplicialSSet:
    """The plain joins (i,j) -> Delta^i * Delta^j as a bicosimplicial object."""
    term = tuple(tuple(join(standard_simplex(i, cap), standard_simplex(j, cap))
                       for j in range(cocap_v + 1)) for i in range(cocap_h + 1))

    def jm(alpha, i2, beta, j2):
        return join_map(simplex_map(alpha, i2, cap), simplex_map(beta, j2, cap))

    coface_h = tuple(tuple(
        tuple(jm(coface_tuple(i, a), i, tuple(range(j + 1)), j) for a in range(i + 1))
        if i >= 1 else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    coface_v = tuple(tuple(
        tuple(jm(tuple(range(i + 1)), i, coface_tuple(j, b), j) for b in range(j + 1))
        if j >= 1 else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    codegen_h = tuple(tuple(
        tuple(jm(codegen_tuple(i, a), i, tuple(range(j + 1)), j) for a in range(i + 1))
        if i + 1 <= cocap_h else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    codegen_v = tuple(tuple(
        tuple(jm(tuple(range(i + 1)), i, codegen_tuple(j, b), j) for b in range(j + 1))
        if j + 1 <= cocap_v else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    return BiCosimplicialSSet(cocap_h, cocap_v, term, coface_h, coface_v,
                              codegen_h, codegen_v)


def collapsed_join_family(cocap_h: int, cocap_v: int, cap: int):
    """The collapsed two-block joins as a pointed bicosimplicial object.

    Returns (BiCosimplicialSSet of carriers, base point table)."""
    pts = {}
    term = []
    for i in range(cocap_h + 1):
        row = []
        for j in range(cocap_v + 1):
            J = collapsed_join(i, j, cap)
            row.append(J.carrier)
            pts[(i, j)] = (J.p0, J.p1)
        term.append(tuple(row))

    def cm(phi, i2, psi, j2):
        return collapsed_join_map(phi, i2, psi, j2, cap)

    coface_h = tuple(tuple(
        tuple(cm(coface_tuple(i, a), i, tuple(range(j + 1)), j) for a in range(i + 1))
        if i >= 1 else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    coface_v = tuple(tuple(
        tuple(cm(tuple(range(i + 1)), i, coface_tuple(j, b), j) for b in range(j + 1))
        if j >= 1 else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    codegen_h = tuple(tuple(
        tuple(cm(codegen_tuple(i, a), i, tuple(range(j + 1)), j) for a in range(i + 1))
        if i + 1 <= cocap_h else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    codegen_v = tuple(tuple(
        tuple(cm(tuple(range(i + 1)), i, codegen_tuple(j, b), j) for b in range(j + 1))
        if j + 1 <= cocap_v else ()
        for j in range(cocap_v + 1)) for i in range(cocap_h + 1))
    fam = BiCosimplicialSSet(cocap_h, cocap_v, tuple(term), coface_h, coface_v,
                             codegen_h, codegen_v)
    return fam, pts


# ---------------------------------------------------------------------------
# realizations


class Realization:
    """A coend |S|_X with lookup from pairs to output simplices."""

    def __init__(self, space, shape, coeff, offsets, class_of, reps, bi):
        self.space = space
        self.shape = shape
        self.coeff = coeff
        self._offsets = offsets    # per level k: dict cell -> base id
        self._class_of = class_of  # per level k: list pair id -> class
        self.reps = reps           # per level k: list class -> (cell, x)
        self._bi = bi

    def index(self, cell, k, x):
        """Output id at level k of the pair (cell of the shape, coefficient x)."""
        S, X = self.shape, self.coeff
        if self._bi:
            i, j, s = cell
            i0, j0, u, ph, pv = S.ez(i, j, s)
            if (i0, j0) != (i, j):
                x = X.structure_map(ph, pv, i0, j0)(k, x)
            red = ((i0, j0, u), x)
        else:
            n, s = cell
            m, u, pi = S.ez(n, s)
            if m != n:
                x = X.structure_map(pi, m)(k, x)
            red = ((m, u), x)
        return self._class_of[k][self._offsets[k][red[0]] + red[1]]


def realize(S: SimplicialSet, X: CosimplicialSSet) -> Realization:
    """The coend of a simplicial set against a cosimplicial simplicial set."""
    if S.cap > X.cocap:
        raise CapMismatchError(
            f"shape cap {S.cap} exceeds cosimplicial truncation {X.cocap}")
    cells = [(n, s) for n in range(S.cap + 1) for s in S.nondegenerate(n)]

    def term_of(cell):
        return X.term[cell[0]]

    def relations(cell, k, out):
        n, s = cell
        if n == 0:
            return
        Tn1 = X.term[n - 1]
        for a in range(n + 1):
            traw = S.face[n][a][s]
            m, u, pi = S.ez(n - 1, traw)
            lhs_map = X.structure_map(pi, m) if m != n - 1 else None
            rhs_map = X.coface[n][a]
            for x in range(Tn1.counts[k]):
                lx = x if lhs_map is None else lhs_map(k, x)
                out.append((((m, u), lx), ((n, s), rhs_map(k, x))))

    return _run_coend(S, X, cells, term_of, relations, bi=False)


def realize_bi(B: BiSimplicialSet, X: BiCosimplicialSSet) -> Realization:
    if B.cap_h > X.cocap_h or B.cap_v > X.cocap_v:
        raise CapMismatchError("shape caps exceed the bicosimplicial truncation")
    cells = [(i, j, s) for i in range(B.cap_h + 1) for j in range(B.cap_v + 1)
             for s in B.nondegenerate(i, j)]

    def term_of(cell):
        return X.term[cell[0]][cell[1]]

    def relations(cell, k, out):
        i, j, s = cell
        if i >= 1:
            T = X.term[i - 1][j]
            for a in range(i + 1):
                traw = B.dh(i, j, a, s)
                i0, j0, u, ph, pv = B.ez(i - 1, j, traw)
                lhs_map = (X.structure_map(ph, pv, i0, j0)
                           if (i0, j0) != (i - 1, j) else None)
                rhs_map = X.coface_h[i][j][a]
                for x in range(T.counts[k]):
                    lx = x if lhs_map is None else lhs_map(k, x)
                    out.append((((i0, j0, u), lx), ((i, j, s), rhs_map(k, x))))
        if j >= 1:
            T = X.term[i][j - 1]
            for b in range(j + 1):
                traw = B.dv(i, j, b, s)
                i0, j0, u, ph, pv = B.ez(i, j - 1, traw)
                lhs_map = (X.structure_map(ph, pv, i0, j0)
                           if (i0, j0) != (i, j - 1) else None)
                rhs_map = X.coface_v[i][j][b]
                for x in range(T.counts[k]):
                    lx = x if lhs_map is None else lhs_map(k, x)
                    out.append((((i0, j0, u), lx), ((i, j, s), rhs_map(k, x))))

    return _run_coend(B, X, cells, term_of, relations, bi=True)


def _run_coend(S, X, cells, term_of, relations, bi):
    cap = X.cap
    offsets_all, class_all, reps_all, counts = [], [], [], []
    for k in range(cap + 1):
        offsets = {}
        total = 0
        for cell in cells:
            offsets[_cell_key(cell, bi)] = total
            total += term_of(cell).counts[k]
        uf = _UnionFind(total)
        rel = []
        for cell in cells:
            relations(cell, k, rel)
        for (ka, xa), (kb, xb) in rel:
            uf.union(offsets[ka] + xa, offsets[kb] + xb)
        class_of = [0] * total
        reps = []
        seen = {}
        for cell in cells:
            base = offsets[_cell_key(cell, bi)]
            for x in range(term_of(cell).counts[k]):
                r = uf.find(base + x)
                if r not in seen:
                    seen[r] = len(seen)
                    reps.append((cell, x))
                class_of[base + x] = seen[r]
        offsets_all.append(offsets)
        class_all.append(class_of)
        reps_all.append(reps)
        counts.append(len(seen))
    # output operators act on the coefficient side of representatives
    face = [()]
    for k in range(1, cap + 1):
        rows = []
        for i in range(k + 1):
            row = []
            for (cell, x) in reps_all[k]:
                T = term_of(cell)
                y = T.face[k][i][x]
                ck = _cell_key(cell, bi)
                row.append(class_all[k - 1][offsets_all[k - 1][ck] + y])
            rows.append(tuple(row))
        face.append(tuple(rows))
    degen = []
    for k in range(cap):
        rows = []
        for i in range(k + 1):
            row = []
            for (cell, x) in reps_all[k]:
                T = term_of(cell)
                y = T.degen[k][i][x]
                ck = _cell_key(cell, bi)
                row.append(class_all[k + 1][offsets_all[k + 1][ck] + y])
            rows.append(tuple(row))
        degen.append(tuple(rows))
    degen.append(())
    space = SimplicialSet(cap, counts, tuple(face), tuple(degen))
    return Realization(space, S, X, offsets_all, class_all,
                       [[(c, x) for (c, x) in reps] for reps in reps_all], bi)


def _cell_key(cell, bi):
    return (cell[0], cell[1], cell[2]) if bi else (cell[0], cell[1])


def realize_dir(B: BiSimplicialSet, cap: int) -> tuple[PointedDirected, Realization]:
    """Directed realization over the collapsed two-block joins.

    The two collapse vertices are added as global base points and every
    block-degenerate coefficient simplex is glued to them.
    """
    fam, pts = collapsed_join_family(B.cap_h, B.cap_v, cap)
    R = realize_bi(B, fam)
    # glue the base-point copies across all cells and adjoin free base points
    cells = [(i, j, s) for i in range(B.cap_h + 1) for j in range(B.cap_v + 1)
             for s in B.nondegenerate(i, j)]
    counts, face, degen = [], [()], []
    class_maps = []
    for k in range(cap + 1):
        n_old = R.space.counts[k]
        uf = _UnionFind(n_old + 2)
        for cell in cells:
            i, j, s = cell
            p0, p1 = pts[(i, j)]
            T = fam.term[i][j]
            uf.union(R.index(cell, k, T.degenerate_at(p0, k)), n_old)
            uf.union(R.index(cell, k, T.degenerate_at(p1, k)), n_old + 1)
        seen = {}
        cm = []
        for z in range(n_old + 2):
            r = uf.find(z)
            if r not in seen:
                seen[r] = len(seen)
            cm.append(seen[r])
        class_maps.append(cm)
        counts.append(len(seen))
    # representatives: prefer old classes, fall back to the two new points
    reps = []
    for k in range(cap + 1):
        rep = [None] * counts[k]
        for z, c in enumerate(class_maps[k]):
            if rep[c] is None:
                rep[c] = z
        reps.append(rep)
    for k in range(1, cap + 1):
        rows = []
        for i in range(k + 1):
            row = []
            for c in range(counts[k]):
                z = reps[k][c]
                if z < R.space.counts[k]:
                    row.append(class_maps[k - 1][R.space.face[k][i][z]])
                else:
                    row.append(class_maps[k - 1][R.space.counts[k - 1] + (z - R.space.counts[k])])
            rows.append(tuple(row))
        face.append(tuple(rows))
    for k in range(cap):
        rows = []
        for i in range(k + 1):
            row = []
            for c in range(counts[k]):
                z = reps[k][c]
                if z < R.space.counts[k]:
                    row.append(class_maps[k + 1][R.space.degen[k][i][z]])
                else:
                    row.append(class_maps[k + 1][R.space.counts[k + 1] + (z - R.space.counts[k])])
            rows.append(tuple(row))
        degen.append(tuple(rows))
    degen.append(())
    space = SimplicialSet(cap, counts, tuple(face), tuple(degen))
    p0 = class_maps[0][R.space.counts[0]]
    p1 = class_maps[0][R.space.counts[0] + 1]
    if p0 == p1:
        raise ValueError("directed realization collapsed the two base points")
    wrapped = _DirRealization(R, class_maps)
    return PointedDirected(space, p0, p1), wrapped


class _DirRealization:
    def __init__(self, inner, class_maps):
        self.inner = inner
        self.class_maps = class_maps

    def index(self, cell, k, x):
        return self.class_maps[k][self.inner.index(cell, k, x)]


# ---------------------------------------------------------------------------
# sing


class SingSpace:
    """Sing_X(T): level n is the set of maps term[n] -> T."""

    def __init__(self, space, elements, element_index, family, target):
        self.space = space
        self.elements = elements          # per level: list of SimplicialMap
        self.element_index = element_index
        self.family = family
        self.target = target

    def index_of(self, n, f: SimplicialMap) -> int:
        return self.element_index[n][f.comp]


def sing(X: CosimplicialSSet, T: SimplicialSet, out_cap: int,
         budget=None) -> SingSpace:
    """Maps out of the terms of X, with operators by precomposition."""
    if out_cap > X.cocap:
        raise CapMismatchError("out_cap exceeds the cosimplicial truncation")
    elements = []
    element_index = []
    for n in range(out_cap + 1):
        found = enumerate_maps(X.term[n], T, hard=True, budget=budget)
        found.sort(key=lambda f: f.comp)
        elements.append(found)
        element_index.append({f.comp: t for t, f in enumerate(found)})
    counts = [len(e) for e in elements]
    face = [()]
    for n in range(1, out_cap + 1):
        rows = []
        for i in range(n + 1):
            row = []
            for f in elements[n]:
                g = compose_maps(f, X.coface[n][i])
                row.append(element_index[n - 1][g.comp])
            rows.append(tuple(row))
        face.append(tuple(rows))
    degen = []
    for n in range(out_cap):
        rows = []
        for i in range(n + 1):
            row = []
            for f in elements[n]:
                g = compose_maps(f, X.codegen[n][i])
                row.append(element_index[n + 1][g.comp])
            rows.append(tuple(row))
        degen.append(tuple(rows))
    degen.append(())
    space = SimplicialSet(out_cap, counts, tuple(face), tuple(degen))
    return SingSpace(space, elements, element_index, X, T)


# ---------------------------------------------------------------------------
# induced maps


def pushforward(eta: CosimplicialTransformation, S: SimplicialSet,
                R_src: Realization, R_dst: Realization) -> SimplicialMap:
    """|S|_X -> |S|_Y induced by a transformation eta: X -> Y."""
    comp = []
    for k in range(R_src.space.cap + 1):
        row = []
        for (cell, x) in R_src.reps[k]:
            n = cell[0]
            row.append(R_dst.index(cell, k, eta.comp[n](k, x)))
        comp.append(tuple(row))
    return SimplicialMap(R_src.space, R_dst.space, comp)


def pullback_on_sing(eta: CosimplicialTransformation, sing_dst: SingSpace,
                     sing_src: SingSpace) -> SimplicialMap:
    """Sing_Y(T) -> Sing_X(T) induced by eta: X -> Y (contravariant)."""
    out_cap = sing_dst.space.cap
    comp = []
    for n in range(out_cap + 1):
        row = []
        for f in sing_dst.elements[n]:
            g = compose_maps(f, eta.comp[n])
            row.append(sing_src.element_index[n][g.comp])
        comp.append(tuple(row))
    return SimplicialMap(sing_dst.space, sing_src.space, comp)


def shape_pushforward(f, R_src: Realization, R_dst: Realization) -> SimplicialMap:
    """|S|_X -> |S'|_X induced by a map of shapes f: S -> S'."""
    comp = []
    for k in range(R_src.space.cap + 1):
        row = []
        for (cell, x) in R_src.reps[k]:
            if R_src._bi:
                i, j, s = cell
                row.append(R_dst.index((i, j, f(i, j, s)), k, x))
            else:
                n, s = cell
                row.append(R_dst.index((n, f(n, s)), k, x))
        comp.append(tuple(row))
    return SimplicialMap(R_src.space, R_dst.space, comp)


# ---------------------------------------------------------------------------
# Reedy checks


def boundary_to_term_map(X: CosimplicialSSet, n: int) -> SimplicialMap:
    """The canonical map from the realized simplex boundary into term[n]."""
    B = boundary(n, X.cocap)
    inc = boundary_inclusion(n, X.cocap)
    R = realize(B, X)
    comp = []
    for k in range(X.cap + 1):
        row = []
        for (cell, x) in R.reps[k]:
            m, s = cell
            u = monotone_maps(m, n)[inc(m, s)]
            row.append(X.structure_map(u, n)(k, x))
        comp.append(tuple(row))
    return SimplicialMap(R.space, X.term[n], comp)


def reedy_boundary_check(X: CosimplicialSSet, n: int) -> bool:
    """True iff |boundary of the n-simplex|_X -> term[n] is levelwise injective."""
    return boundary_to_term_map(X, n).is_injective()


def boundary_to_term_map_bi(X: BiCosimplicialSSet, i: int, j: int) -> SimplicialMap:
    B = boundary_bisimplex(i, j, X.cocap_h, X.cocap_v)
    inc = boundary_bisimplex_inclusion(i, j, X.cocap_h, X.cocap_v)
    R = realize_bi(B, X)
    dn = standard_simplex(i, X.cocap_h)
    dm = standard_simplex(j, X.cocap_v)
    comp = []
    for k in range(X.cap + 1):
        row = []
        for (cell, x) in R.reps[k]:
            a, b, s = cell
            pid = inc(a, b, s)
            u = monotone_maps(a, i)[pid // dm.counts[b]]
            v = monotone_maps(b, j)[pid % dm.counts[b]]
            row.append(X.structure_map(u, v, i, j)(k, x))
        comp.append(tuple(row))
    return SimplicialMap(R.space, X.term[i][j], comp)


def reedy_boundary_check_bi(X: BiCosimplicialSSet, i: int, j: int) -> bool:
    return boundary_to_term_map_bi(X, i, j).is_injective()


def pullback_criterion_check(X, L, K, Kp) -> bool:
    """The intersection-of-faces pullback criterion at a single (bi)simplex.

    For a cosimplicial X, L is a degree n and K, Kp are face indices;
    for a bicosimplicial X, L is a bidegree (i,j) and K, Kp are pairs
    ('h', a) or ('v', b).  True iff the square built from the four terms is
    cartesian at every level (equivalently, for equal faces, iff the coface
    is injective).
    """
    if isinstance(X, CosimplicialSSet):
        n = L
        k, l = K, Kp
        if not (0 <= k <= n and 0 <= l <= n and n >= 1):
            raise ValueError("faces must be codimension-1 faces of the simplex")
        if k == l:
            return X.coface[n][k].is_injective()
        k, l = min(k, l), max(k, l)
        into_k = X.coface[n - 1][l - 1]   # term[n-2] -> term[n-1] (the k-face)
        into_l = X.coface[n - 1][k]
        glue_k = X.coface[n][k]
        glue_l = X.coface[n][l]
        return _square_cartesian(X.term[n - 2], into_k, into_l, glue_k, glue_l)
    # bicosimplicial
    i, j = L
    if K == Kp:
        d, a = K
        _check_codim1(i, j, K)
        return (X.coface_h[i][j][a] if d == "h" else X.coface_v[i][j][a]).is_injective()
    _check_codim1(i, j, K)
    _check_codim1(i, j, Kp)
    (d1, a1), (d2, a2) = K, Kp
    if d1 == d2 == "h":
        k, l = min(a1, a2), max(a1, a2)
        return _square_cartesian(X.term[i - 2][j],
                                 X.coface_h[i - 1][j][l - 1], X.coface_h[i - 1][j][k],
                                 X.coface_h[i][j][k], X.coface_h[i][j][l])
    if d1 == d2 == "v":
        k, l = min(a1, a2), max(a1, a2)
        return _square_cartesian(X.term[i][j - 2],
                                 X.coface_v[i][j - 1][l - 1], X.coface_v[i][j - 1][k],
                                 X.coface_v[i][j][k], X.coface_v[i][j][l])
    if d1 == "v":
        (d1, a1), (d2, a2) = (d2, a2), (d1, a1)
    # K horizontal at a1, Kp vertical at a2; intersection is term[i-1][j-1]
    return _square_cartesian(X.term[i - 1][j - 1],
                             X.coface_v[i - 1][j][a2], X.coface_h[i][j - 1][a1],
                             X.coface_h[i][j][a1], X.coface_v[i][j][a2])


def _check_codim1(i, j, K):
    d, a = K
    if d == "h":
        if i < 1 or not 0 <= a <= i:
            raise ValueError("not a codimension-1 face")
    elif d == "v":
        if j < 1 or not 0 <= a <= j:
            raise ValueError("not a codimension-1 face")
    else:
        raise ValueError("face direction must be 'h' or 'v'")


def _square_cartesian(A, into_k, into_l, glue_k, glue_l) -> bool:
    """Is A -> term_K x_{term_L} term_Kp (via into_k, into_l) a bijection?"""
    cap = A.cap
    for n in range(cap + 1):
        seen = set()
        for x in A.simplices(n):
            pair = (into_k(n, x), into_l(n, x))
            if pair in seen:
                return False
            seen.add(pair)
        want = {(a, b)
                for a in into_k.target.simplices(n)
                for b in into_l.target.simplices(n)
                if glue_k(n, a) == glue_l(n, b)}
        if seen != want:
            return False
    return True

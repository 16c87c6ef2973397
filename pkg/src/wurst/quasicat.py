"""Left, right and middle mapping spaces of a simplicial set, the comparison
maps between them, and the verification suites tying them to the mapping
complexes of an enriched category through its coherent nerve.

The middle space of X at (x, y) has n-simplices the maps from the prism
Delta^n x Delta^1 into X that are constant at x and y on the two ends; the
one-sided spaces use (n+1)-simplices with a frozen initial (resp. terminal)
vertex and the opposite face constant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coherent import (
    NerveSpace, SuspensionHomFamily, _canonical_chains, block_swap,
    coherent_cube, collapsed_cube, collapsed_cube_class, collapsed_cube_map,
    suspension_hom_family, two_object_category,
)
from .realize import CosimplicialSSet, SingSpace, realize_bi, sing
from .simplicial import (
    SimplicialMap, SimplicialSet, coface_tuple, codegen_tuple, compose_maps,
    enumerate_maps, horn, horn_inclusion, identity_map, monotone_index,
    monotone_maps, opposite, pair_in_product, product, product_map,
    simplex_map, standard_simplex,
)


class HomSpace:
    def __init__(self, space, elements, element_index, ambient, x, y, variant):
        self.space = space
        self.elements = elements
        self.element_index = element_index
        self.ambient = ambient
        self.x = x
        self.y = y
        self.variant = variant


def _assemble(elements, operators_face, operators_degen, out_cap):
    counts = [len(e) for e in elements]
    face = [()]
    for n in range(1, out_cap + 1):
        face.append(tuple(operators_face(n, i) for i in range(n + 1)))
    degen = []
    for n in range(out_cap):
        degen.append(tuple(operators_degen(n, i) for i in range(n + 1)))
    degen.append(())
    return SimplicialSet(out_cap, counts, tuple(face), tuple(degen))


def hom_middle(X: SimplicialSet, x: int, y: int, out_cap: int,
               budget=None) -> HomSpace:
    cap = X.cap
    if cap < out_cap + 1:
        raise ValueError("ambient cap must exceed out_cap")
    d1 = standard_simplex(1, cap)
    probes, elements, element_index = [], [], []
    for n in range(out_cap + 1):
        dn = standard_simplex(n, cap)
        P = product(dn, d1)
        fixed = {}
        for m in range(cap + 1):
            for u in dn.nondegenerate(m):
                for v, tgt in ((0, x), (1, y)):
                    cell = pair_in_product(dn, d1, m, u,
                                           monotone_index(m, 1)[(v,) * (m + 1)])
                    fixed[(m, cell)] = X.degenerate_at(tgt, m)
        found = enumerate_maps(P, X, fixed=fixed, hard=True, budget=budget)
        found.sort(key=lambda f: f.comp)
        probes.append(P)
        elements.append(found)
        element_index.append({f.comp: t for t, f in enumerate(found)})

    def op(n, alpha, n2):
        pm = product_map(simplex_map(alpha, n, cap), identity_map(d1))
        return tuple(element_index[n2][compose_maps(f, pm).comp]
                     for f in elements[n])

    space = _assemble(
        elements,
        lambda n, i: op(n, coface_tuple(n, i), n - 1),
        lambda n, i: op(n, codegen_tuple(n, i), n + 1),
        out_cap)
    return HomSpace(space, elements, element_index, X, x, y, "middle")


def _one_sided(X, x, y, out_cap, frozen_initial, budget=None):
    cap = X.cap
    if cap < out_cap + 1:
        raise ValueError("ambient cap must exceed out_cap")
    elements, element_index = [], []
    for n in range(out_cap + 1):
        P = standard_simplex(n + 1, cap)
        fixed = {}
        for m in range(cap + 1):
            for u in P.nondegenerate(m):
                key = monotone_maps(m, n + 1)[u]
                if frozen_initial:
                    if key == (0,) * (m + 1):
                        fixed[(m, u)] = X.degenerate_at(x, m)
                    elif key[0] >= 1:  # inside the face opposite the initial vertex
                        fixed[(m, u)] = X.degenerate_at(y, m)
                else:
                    if key == (n + 1,) * (m + 1):
                        fixed[(m, u)] = X.degenerate_at(y, m)
                    elif key[-1] <= n:  # inside the face opposite the terminal vertex
                        fixed[(m, u)] = X.degenerate_at(x, m)
        found = enumerate_maps(P, X, fixed=fixed, hard=True, budget=budget)
        found.sort(key=lambda f: f.comp)
        elements.append(found)
        element_index.append({f.comp: t for t, f in enumerate(found)})

    def op(n, alpha, n2):
        if frozen_initial:
            ext = (0,) + tuple(a + 1 for a in alpha)
        else:
            ext = tuple(alpha) + (len(alpha),) if False else \
                tuple(alpha) + (max(alpha) + 1,)
        # frozen terminal: alpha: [m] -> [n]; extended by the terminal vertex
        if not frozen_initial:
            ext = tuple(alpha) + (n + 1 if n2 < n else n2 + 0,)
        pm = simplex_map(ext, n + 1, cap)
        return tuple(element_index[n2][compose_maps(f, pm).comp]
                     for f in elements[n])

    def op_face(n, i):
        if frozen_initial:
            ext = (0,) + tuple(a + 1 for a in coface_tuple(n, i))
        else:
            ext = coface_tuple(n, i) + (n + 1,)
        pm = simplex_map(ext, n + 1, cap)
        return tuple(element_index[n - 1][compose_maps(f, pm).comp]
                     for f in elements[n])

    def op_degen(n, i):
        if frozen_initial:
            ext = (0,) + tuple(a + 1 for a in codegen_tuple(n, i))
        else:
            ext = codegen_tuple(n, i) + (n + 1,)
        pm = simplex_map(ext, n + 1, cap)
        return tuple(element_index[n + 1][compose_maps(f, pm).comp]
                     for f in elements[n])

    space = _assemble(elements, op_face, op_degen, out_cap)
    return HomSpace(space, elements, element_index, X, x, y,
                    "left" if frozen_initial else "right")


def hom_left(X: SimplicialSet, x: int, y: int, out_cap: int, budget=None) -> HomSpace:
    """n-simplices: (n+1)-simplices with free initial vertex at x and the
    opposite face constant at y."""
    return _one_sided(X, x, y, out_cap, True, budget)


def hom_right(X: SimplicialSet, x: int, y: int, out_cap: int, budget=None) -> HomSpace:
    """n-simplices: (n+1)-simplices with free terminal vertex at y and the
    opposite face constant at x."""
    return _one_sided(X, x, y, out_cap, False, budget)


def middle_probe_to_left(n: int, cap: int) -> SimplicialMap:
    """Delta^n x Delta^1 -> Delta^{n+1}: (t,0) to 0 and (t,1) to t+1."""
    d1 = standard_simplex(1, cap)
    dn = standard_simplex(n, cap)
    P = product(dn, d1)
    T = standard_simplex(n + 1, cap)
    comp = []
    for m in range(cap + 1):
        tix = monotone_index(m, n + 1)
        row = []
        for u in monotone_maps(m, n):
            for v in monotone_maps(m, 1):
                w = tuple(0 if v[t] == 0 else u[t] + 1 for t in range(m + 1))
                row.append(tix[w])
        comp.append(tuple(row))
    return SimplicialMap(P, T, comp)


def middle_probe_to_right(n: int, cap: int) -> SimplicialMap:
    """Delta^n x Delta^1 -> Delta^{n+1}: (t,0) to t and (t,1) to n+1."""
    d1 = standard_simplex(1, cap)
    dn = standard_simplex(n, cap)
    P = product(dn, d1)
    T = standard_simplex(n + 1, cap)
    comp = []
    for m in range(cap + 1):
        tix = monotone_index(m, n + 1)
        row = []
        for u in monotone_maps(m, n):
            for v in monotone_maps(m, 1):
                w = tuple(u[t] if v[t] == 0 else n + 1 for t in range(m + 1))
                row.append(tix[w])
        comp.append(tuple(row))
    return SimplicialMap(P, T, comp)


def comparison_maps(homL: HomSpace, homM: HomSpace, homR: HomSpace):
    """The inclusions of the one-sided spaces into the middle one."""
    out_cap = homM.space.cap
    cap = homM.ambient.cap
    compL, compR = [], []
    for n in range(out_cap + 1):
        cl = middle_probe_to_left(n, cap)
        cr = middle_probe_to_right(n, cap)
        compL.append(tuple(homM.element_index[n][compose_maps(f, cl).comp]
                           for f in homL.elements[n]))
        compR.append(tuple(homM.element_index[n][compose_maps(f, cr).comp]
                           for f in homR.elements[n]))
    left = SimplicialMap(homL.space, homM.space, compL)
    right = SimplicialMap(homR.space, homM.space, compR)
    return left, right


# ---------------------------------------------------------------------------
# one-sided coefficient families and the tautological correspondences


def one_sided_family(side: str, cocap: int, cap: int) -> CosimplicialSSet:
    """Terms collapsed_cube(0,n) (left) or collapsed_cube(n,0) (right)."""
    if side == "left":
        term = [collapsed_cube(0, n, cap) for n in range(cocap + 1)]
        mk = lambda alpha, n: collapsed_cube_map((0,), 0, alpha, n, cap)
    else:
        term = [collapsed_cube(n, 0, cap) for n in range(cocap + 1)]
        mk = lambda alpha, n: collapsed_cube_map(alpha, n, (0,), 0, cap)
    coface = [()]
    for n in range(1, cocap + 1):
        coface.append(tuple(mk(coface_tuple(n, i), n) for i in range(n + 1)))
    codegen = []
    for n in range(cocap):
        codegen.append(tuple(mk(codegen_tuple(n, i), n) for i in range(n + 1)))
    return CosimplicialSSet(cocap, term, tuple(coface), tuple(codegen))


def _nerve_simplex_for_middle(W: SuspensionHomFamily, N: NerveSpace, phi,
                              n, m, u, v, x, y):
    """The N-simplex that the middle correspondence assigns to the probe cell
    (u, v) at level m, for phi: W_n -> K."""
    C = N.category
    a = sum(1 for t in v if t == 0)
    b = m + 1 - a
    if b == 0:
        return N.space.degenerate_at(_vertex_of(N, x), m)
    if a == 0:
        return N.space.degenerate_at(_vertex_of(N, y), m)
    o = (x,) * a + (y,) * b
    comps = {}
    cap = C.cap
    for p in range(m + 1):
        for q in range(p + 1, m + 1):
            cube = coherent_cube(m, p, q, cap)
            if q < a or p >= a:
                z = x if q < a else y
                H = C.hom(z, z)
                comps[(p, q)] = SimplicialMap(
                    cube, H,
                    [tuple(H.degenerate_at(C.identities[z], k)
                           for _ in cube.simplices(k)) for k in range(cap + 1)],
                    check=False)
                continue
            ip, jp = a - 1 - p, q - a
            cut_id = monotone_index(ip + 1 + jp, n)[tuple(u[p:q + 1])]
            R = W.realizations[n]
            rows = []
            for k in range(cap + 1):
                row = []
                for chain in _interval_chain_list(p, q, k):
                    shifted = tuple(t >> p for t in chain)
                    cls = collapsed_cube_class(ip, jp, W.cap, k, shifted)
                    row.append(phi(k, R.index((ip, jp, cut_id), k, cls)))
                rows.append(tuple(row))
            comps[(p, q)] = SimplicialMap(cube, C.hom(x, y), rows, check=False)
    from .coherent import _functor_key
    return N.index[m][_functor_key(o, comps)]


def _interval_chain_list(p, q, k):
    from .coherent import _interval_chains
    return _interval_chains(p, q, k)


def _vertex_of(N: NerveSpace, obj) -> int:
    return N.index[0][((obj,), ())]


def middle_correspondence(W: SuspensionHomFamily, N: NerveSpace,
                          singM: SingSpace, homM: HomSpace, x, y):
    """For each level, the map sending phi: W_n -> K to its middle-hom simplex;
    returns per-level lists of hom element ids."""
    out_cap = homM.space.cap
    cap = N.category.cap
    d1 = standard_simplex(1, cap)
    tables = []
    for n in range(out_cap + 1):
        dn = standard_simplex(n, cap)
        row = []
        for phi in singM.elements[n]:
            comp = []
            for m in range(cap + 1):
                r = []
                for u in monotone_maps(m, n):
                    for v in monotone_maps(m, 1):
                        r.append(_nerve_simplex_for_middle(
                            W, N, phi, n, m, u, v, x, y))
                comp.append(tuple(r))
            g = SimplicialMap(product(dn, d1), N.space, comp)
            row.append(homM.element_index[n][g.comp])
        tables.append(row)
    return tables


def _nerve_simplex_one_sided(side, N: NerveSpace, phi, n, m, key, x, y, qcap):
    """The N-simplex assigned to a probe cell u: [m] -> [n+1] by the one-sided
    correspondence for phi out of the collapsed cube."""
    C = N.category
    cap = C.cap
    u = key
    if side == "left":
        o = tuple(x if t == 0 else y for t in u)
    else:
        o = tuple(y if t == n + 1 else x for t in u)
    if all(z == o[0] for z in o):
        return N.space.degenerate_at(_vertex_of(N, o[0]), m)
    comps = {}
    for p in range(m + 1):
        for q in range(p + 1, m + 1):
            cube = coherent_cube(m, p, q, cap)
            if o[p] == o[q]:
                z = o[p]
                H = C.hom(z, z)
                comps[(p, q)] = SimplicialMap(
                    cube, H,
                    [tuple(H.degenerate_at(C.identities[z], k)
                           for _ in cube.simplices(k)) for k in range(cap + 1)],
                    check=False)
                continue
            rows = []
            for k in range(cap + 1):
                row = []
                for chain in _interval_chain_list(p, q, k):
                    pushed = tuple(_push_bits(t, u) for t in chain)
                    if side == "left":
                        cls = collapsed_cube_class(0, n, qcap, k, pushed)
                    else:
                        cls = collapsed_cube_class(n, 0, qcap, k, pushed)
                    row.append(phi(k, cls))
                rows.append(tuple(row))
            comps[(p, q)] = SimplicialMap(cube, C.hom(x, y), rows, check=False)
    from .coherent import _functor_key
    return N.index[m][_functor_key(o, comps)]


def _push_bits(t, u):
    out = 0
    for pos in range(len(u)):
        if t >> pos & 1:
            out |= 1 << u[pos]
    return out


def one_sided_correspondence(side, N: NerveSpace, singS: SingSpace,
                             homS: HomSpace, x, y, qcap):
    out_cap = homS.space.cap
    cap = N.category.cap
    tables = []
    for n in range(out_cap + 1):
        P = standard_simplex(n + 1, cap)
        row = []
        for phi in singS.elements[n]:
            comp = []
            for m in range(cap + 1):
                r = [_nerve_simplex_one_sided(side, N, phi, n, m, u, x, y, qcap)
                     for u in monotone_maps(m, n + 1)]
                comp.append(tuple(r))
            g = SimplicialMap(P, N.space, comp)
            row.append(homS.element_index[n][g.comp])
        tables.append(row)
    return tables


def _is_simplicial_bijection(tables, src: SimplicialSet, dst: SimplicialSet):
    """Do the per-level index tables define an isomorphism src -> dst?"""
    for n, row in enumerate(tables):
        if len(set(row)) != len(row) or len(row) != dst.counts[n]:
            return False
    try:
        SimplicialMap(src, dst, [tuple(r) for r in tables])
    except (ValueError, AssertionError):
        return False
    return True


@dataclass(frozen=True)
class TautologicalReport:
    middle: bool
    left: bool
    right: bool

    @property
    def ok(self):
        return self.middle and self.left and self.right


def tautological_iso_check(K: SimplicialSet, out_cap: int) -> TautologicalReport:
    """The three correspondences between mapping spaces of the coherent nerve
    of the two-object category on K and maps out of the coefficient families,
    checked to be simplicial bijections level by level."""
    cap = K.cap
    C = two_object_category(K)
    N = coherent_nerve(C, out_cap + 1)
    x = _vertex_of(N, 0)
    y = _vertex_of(N, 1)
    W = suspension_hom_family(out_cap, cap)
    singM = sing(W.family, K, out_cap)
    homM = hom_middle(N.space, x, y, out_cap)
    tabM = middle_correspondence(W, N, singM, homM, 0, 1)
    okM = _is_simplicial_bijection(tabM, singM.space, homM.space)

    famL = one_sided_family("left", out_cap, cap)
    singL = sing(famL, K, out_cap)
    homL = hom_left(N.space, x, y, out_cap)
    tabL = one_sided_correspondence("left", N, singL, homL, 0, 1, cap)
    okL = _is_simplicial_bijection(tabL, singL.space, homL.space)

    famR = one_sided_family("right", out_cap, cap)
    singR = sing(famR, K, out_cap)
    homR = hom_right(N.space, x, y, out_cap)
    tabR = one_sided_correspondence("right", N, singR, homR, 0, 1, cap)
    okR = _is_simplicial_bijection(tabR, singR.space, homR.space)
    return TautologicalReport(okM, okL, okR)


# ---------------------------------------------------------------------------
# reversal symmetry


def w_involution(W: SuspensionHomFamily):
    """The self-maps of the suspension mapping spaces reversing both blocks;
    term n of the comparison of the family with its cosimplicially reversed
    variant."""
    from .simplicial import monotone_index as mix
    maps = []
    for n in range(W.cocap + 1):
        R = W.realizations[n]
        comp = []
        for k in range(W.cap + 1):
            row = []
            for ((i, j, c), q) in R.reps[k]:
                u = monotone_maps(i + 1 + j, n)[c]
                udag = tuple(n - u[i + j + 1 - p] for p in range(i + j + 2))
                c2 = mix(j + 1 + i, n)[udag]
                q2 = block_swap(i, j, W.cap)(k, q)
                row.append(R.index((j, i, c2), k, q2))
            comp.append(tuple(row))
        maps.append(SimplicialMap(R.space, R.space, comp))
    return maps


def w_reversal_isomorphism_check(W: SuspensionHomFamily) -> bool:
    """The involution exchanges the cosimplicial structure with its reversal:
    e . W(delta_i) = W(delta_{n-i}) . e, and e is a levelwise bijection."""
    e = w_involution(W)
    for n in range(W.cocap + 1):
        if not e[n].is_bijective():
            return False
    fam = W.family
    for n in range(1, W.cocap + 1):
        for i in range(n + 1):
            lhs = compose_maps(e[n], fam.coface[n][i])
            rhs = compose_maps(fam.coface[n][n - i], e[n - 1])
            if lhs.comp != rhs.comp:
                return False
    for n in range(W.cocap):
        for i in range(n + 1):
            lhs = compose_maps(e[n], fam.codegen[n][i])
            rhs = compose_maps(fam.codegen[n][n - i], e[n + 1])
            if lhs.comp != rhs.comp:
                return False
    return True


@dataclass(frozen=True)
class OpSymmetryReport:
    right_vs_left_op: bool
    middle_self_op: bool
    square_commutes: bool
    middle_iso_is_identity: bool

    @property
    def ok(self):
        return self.right_vs_left_op and self.middle_self_op and self.square_commutes


def op_symmetry_check(K: SimplicialSet, out_cap: int) -> OpSymmetryReport:
    """Hom-side isomorphisms induced by the block swap: the right space
    against the opposite of the left one, the middle against its own
    opposite, and the comparison square relating them."""
    cap = K.cap
    C = two_object_category(K)
    N = coherent_nerve(C, out_cap + 1)
    x = _vertex_of(N, 0)
    y = _vertex_of(N, 1)
    W = suspension_hom_family(out_cap, cap)
    singM = sing(W.family, K, out_cap)
    homM = hom_middle(N.space, x, y, out_cap)
    tabM = middle_correspondence(W, N, singM, homM, 0, 1)

    famL = one_sided_family("left", out_cap, cap)
    singL = sing(famL, K, out_cap)
    homL = hom_left(N.space, x, y, out_cap)
    tabL = one_sided_correspondence("left", N, singL, homL, 0, 1, cap)

    famR = one_sided_family("right", out_cap, cap)
    singR = sing(famR, K, out_cap)
    homR = hom_right(N.space, x, y, out_cap)
    tabR = one_sided_correspondence("right", N, singR, homR, 0, 1, cap)

    # right -> left^op: transport psi: Q(n,0) -> K to psi . swap: Q(0,n) -> K
    e_right = []
    for n in range(out_cap + 1):
        swap = block_swap(0, n, cap)  # collapsed_cube(0,n) -> collapsed_cube(n,0)
        row = []
        for t, psi in enumerate(singR.elements[n]):
            phi = compose_maps(psi, swap)
            s = singL.element_index[n][phi.comp]
            row.append(tabL[n][s])
        e_right.append(tuple(row))
    # reindex by hom elements: homR -> homL^op
    right_tab = []
    for n in range(out_cap + 1):
        inv = {tabR[n][t]: t for t in range(len(tabR[n]))}
        right_tab.append(tuple(e_right[n][inv[h]] for h in range(len(tabR[n]))))
    try:
        iso_rl = SimplicialMap(homR.space, opposite(homL.space),
                               [tuple(r) for r in right_tab])
        ok_rl = iso_rl.is_bijective()
    except (ValueError, AssertionError):
        ok_rl = False

    # middle -> middle^op through the reversal involution
    e = w_involution(W)
    mid_tab = []
    for n in range(out_cap + 1):
        inv = {tabM[n][t]: t for t in range(len(tabM[n]))}
        row = []
        for h in range(len(tabM[n])):
            phi = singM.elements[n][inv[h]]
            phi2comp = tuple(tuple(phi(k, e[n](k, s))
                                   for s in W.term(n).simplices(k))
                             for k in range(cap + 1))
            s2 = singM.element_index[n][phi2comp]
            row.append(tabM[n][s2])
        mid_tab.append(tuple(row))
    try:
        iso_mm = SimplicialMap(homM.space, opposite(homM.space),
                               [tuple(r) for r in mid_tab])
        ok_mm = iso_mm.is_bijective()
    except (ValueError, AssertionError):
        ok_mm = False

    incl_l, incl_r = comparison_maps(homL, homM, homR)
    square = all(
        mid_tab[n][incl_r(n, t)] == incl_l(n, right_tab[n][t])
        for n in range(out_cap + 1) for t in range(homR.space.counts[n]))
    is_id = all(mid_tab[n][t] == t for n in range(out_cap + 1)
                for t in range(homM.space.counts[n]))
    return OpSymmetryReport(ok_rl, ok_mm, square, is_id)


# ---------------------------------------------------------------------------
# horn fillers


@dataclass(frozen=True)
class HornReport:
    total: int
    filled: int
    unfilled: tuple

    @property
    def all_filled(self):
        return self.filled == self.total


def horn_filler_check(X: SimplicialSet, n: int, k: int, budget=None) -> HornReport:
    """Enumerate the maps from the (n,k)-horn into X and report how many
    admit a filler."""
    H = horn(n, k, X.cap)
    inc = horn_inclusion(n, k, X.cap)
    maps = enumerate_maps(H, X, budget=budget)
    filled = 0
    unfilled = []
    hix = {}
    for i in range(n + 1):
        if i == k:
            continue
        key = monotone_maps(n - 1, n)[i] if False else None
    # face i of the would-be filler corresponds to the horn cell delta_i
    from wurst.simplicial import monotone_index as mix
    horn_cells = {}
    ambient = [u for u in monotone_maps(n - 1, n)]
    horn_level_keys = [u for u in monotone_maps(n - 1, n)
                       if len(set(u) | {k}) <= n]
    horn_key_ix = {u: t for t, u in enumerate(horn_level_keys)}
    for f in maps:
        required = {}
        for i in range(n + 1):
            if i == k:
                continue
            cell = horn_key_ix[coface_tuple(n, i)]
            required[i] = f(n - 1, cell)
        found = False
        for s in X.simplices(n):
            if all(X.face[n][i][s] == v for i, v in required.items()):
                found = True
                break
        if found:
            filled += 1
        else:
            unfilled.append(tuple(f.comp))
    return HornReport(len(maps), filled, tuple(unfilled[:3]))

"""Integer homology of truncated simplicial sets via normalized chains.

The normalized complex has one generator per nondegenerate simplex; faces
that are degenerate contribute nothing.  Smith normal form runs over exact
Python integers (entries can grow during elimination), picking the smallest
nonzero pivot with positional tie-breaking.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplicial import SimplicialMap, SimplicialSet, _UnionFind


@dataclass(frozen=True)
class ChainComplex:
    dims: tuple[int, ...]
    # boundary[k]: matrix with dims[k-1] rows, dims[k] columns, as row tuples
    boundary: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        for k in range(2, len(self.dims)):
            m = mat_mul(self.boundary[k - 1], self.boundary[k],
                        self.dims[k - 2], self.dims[k - 1], self.dims[k])
            assert all(all(v == 0 for v in row) for row in m), \
                "boundary of boundary is nonzero"


def mat_mul(A, B, ra, ca, cb):
    out = [[0] * cb for _ in range(ra)]
    for i in range(ra):
        Ai = A[i]
        for t in range(ca):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(cb):
                    row[j] += a * Bt[j]
    return out


def normalized_chains(X: SimplicialSet) -> ChainComplex:
    """Basis in degree k: nondegenerate k-simplices; boundary is the
    alternating face sum with degenerate faces dropped."""
    basis = [list(X.nondegenerate(k)) for k in range(X.cap + 1)]
    pos = [{s: t for t, s in enumerate(b)} for b in basis]
    dims = tuple(len(b) for b in basis)
    bnd = [()]
    for k in range(1, X.cap + 1):
        rows = [[0] * dims[k] for _ in range(dims[k - 1])]
        for col, s in enumerate(basis[k]):
            for i in range(k + 1):
                f = X.face[k][i][s]
                if not X.is_degenerate(k - 1, f):
                    rows[pos[k - 1][f]][col] += -1 if i % 2 else 1
        bnd.append(tuple(tuple(r) for r in rows))
    return ChainComplex(dims, tuple(bnd))


def chain_map(f: SimplicialMap) -> list[tuple[tuple[int, ...], ...]]:
    """The induced map of normalized complexes (degenerate images drop out).

    Entry [k] is a matrix from the source basis to the target basis."""
    X, Y = f.source, f.target
    out = []
    for k in range(X.cap + 1):
        xb = list(X.nondegenerate(k))
        yb = {s: t for t, s in enumerate(Y.nondegenerate(k))}
        rows = [[0] * len(xb) for _ in range(len(yb))]
        for col, s in enumerate(xb):
            img = f(k, s)
            if not Y.is_degenerate(k, img):
                rows[yb[img]][col] = 1
        out.append(tuple(tuple(r) for r in rows))
    return out


def smith_normal_form(M) -> tuple[list[int], int]:
    """Invariant factors (each dividing the next, all > 1 filtered out at the
    caller's discretion) and the rank of an integer matrix."""
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    factors = []
    top = 0
    while True:
        pivot = None
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        A[top], A[pi] = A[pi], A[top]
        for row in A:
            row[top], row[pj] = row[pj], row[top]
        while True:
            p = A[top][top]
            dirty = False
            for i in range(top + 1, rows):
                if A[i][top]:
                    q = A[i][top] // p
                    for j in range(top, cols):
                        A[i][j] -= q * A[top][j]
                    if A[i][top]:
                        A[top], A[i] = A[i], A[top]
                        dirty = True
                        p = A[top][top]
            for j in range(top + 1, cols):
                if A[top][j]:
                    q = A[top][j] // p
                    for i in range(top, rows):
                        A[i][j] -= q * A[i][top]
                    if A[top][j]:
                        for i in range(rows):
                            A[i][top], A[i][j] = A[i][j], A[i][top]
                        dirty = True
                        p = A[top][top]
            if not dirty:
                break
        factors.append(abs(A[top][top]))
        top += 1
        if top >= rows or top >= cols:
            break
    # enforce divisibility d_1 | d_2 | ... by gcd/lcm swaps
    import math
    changed = True
    while changed:
        changed = False
        for t in range(len(factors) - 1):
            a, b = factors[t], factors[t + 1]
            if b % a:
                g = math.gcd(a, b)
                factors[t], factors[t + 1] = g, a * b // g
                changed = True
    return factors, len(factors)


def homology(X: SimplicialSet, k: int) -> tuple[int, list[int]]:
    """H_k of the normalized complex: (betti number, torsion factors > 1).

    Degrees at the truncation cap are refused: their kernels are unreliable.
    """
    if k >= X.cap:
        raise ValueError(f"degree {k} at or above the cap {X.cap} is unreliable")
    if k < 0:
        raise ValueError("negative degree")
    C = normalized_chains(X)
    n_k = C.dims[k]
    if k == 0:
        rank_dk = 0
    else:
        _, rank_dk = smith_normal_form(C.boundary[k])
    factors, rank_dk1 = smith_normal_form(C.boundary[k + 1]) if C.dims[k + 1] else ([], 0)
    betti = n_k - rank_dk - rank_dk1
    torsion = [f for f in factors if f > 1]
    return betti, torsion


@dataclass(frozen=True)
class EvidenceReport:
    ok: bool
    lines: tuple[str, ...]


def connected_components(X: SimplicialSet) -> int:
    uf = _UnionFind(X.counts[0])
    if X.cap >= 1:
        for e in X.simplices(1):
            uf.union(X.face[1][1][e], X.face[1][0][e])
    return len({uf.find(v) for v in range(X.counts[0])})


def contractibility_evidence(X: SimplicialSet, up_to: int) -> EvidenceReport:
    """Connectivity plus vanishing reduced homology through degree up_to.

    This is evidence, not a proof of weak contractibility."""
    if up_to >= X.cap:
        raise ValueError("up_to must stay below the cap")
    lines = []
    ok = True
    if X.counts[0] == 0:
        return EvidenceReport(False, ("empty: no vertices",))
    comps = connected_components(X)
    if comps != 1:
        ok = False
    lines.append(f"components: {comps}")
    for k in range(1, up_to + 1):
        betti, torsion = homology(X, k)
        good = betti == 0 and not torsion
        ok = ok and good
        lines.append(f"H_{k}: betti={betti} torsion={torsion}")
    return EvidenceReport(ok, tuple(lines))


def mapping_cone(f: SimplicialMap) -> ChainComplex:
    """Algebraic cone of the induced normalized chain map."""
    F = chain_map(f)
    CX = normalized_chains(f.source)
    CY = normalized_chains(f.target)
    cap = f.source.cap
    dims = tuple(CY.dims[k] + (CX.dims[k - 1] if k >= 1 else 0)
                 for k in range(cap + 1))
    bnd = [()]
    for k in range(1, cap + 1):
        rows = dims[k - 1]
        cols = dims[k]
        M = [[0] * cols for _ in range(rows)]
        # target block
        for i in range(CY.dims[k - 1]):
            for j in range(CY.dims[k]):
                M[i][j] = CY.boundary[k][i][j]
        # f-block: cone differential (d_Y y + f x, -d_X x)
        for i in range(CY.dims[k - 1]):
            for j in range(CX.dims[k - 1]):
                M[i][CY.dims[k] + j] = F[k - 1][i][j]
        if k >= 2:
            for i in range(CX.dims[k - 2]):
                for j in range(CX.dims[k - 1]):
                    M[CY.dims[k - 1] + i][CY.dims[k] + j] = -CX.boundary[k - 1][i][j]
        bnd.append(tuple(tuple(r) for r in M))
    return ChainComplex(dims, tuple(bnd))


def cone_homology(cone: ChainComplex, k: int) -> tuple[int, list[int]]:
    if k + 1 >= len(cone.dims):
        raise ValueError("degree beyond the cone's reliable range")
    n_k = cone.dims[k]
    rank_dk = smith_normal_form(cone.boundary[k])[1] if k >= 1 else 0
    factors, rank_dk1 = (smith_normal_form(cone.boundary[k + 1])
                         if cone.dims[k + 1] else ([], 0))
    return n_k - rank_dk - rank_dk1, [f for f in factors if f > 1]


def cone_acyclicity(f: SimplicialMap, up_to: int) -> EvidenceReport:
    """H_k of the mapping cone for k <= up_to; all zero means f is a homology
    equivalence in that range."""
    if up_to >= f.source.cap - 1:
        raise ValueError("up_to must stay below cap - 1")
    cone = mapping_cone(f)
    lines = []
    ok = True
    for k in range(up_to + 1):
        betti, torsion = cone_homology(cone, k)
        good = betti == 0 and not torsion
        ok = ok and good
        lines.append(f"cone H_{k}: betti={betti} torsion={torsion}")
    return EvidenceReport(ok, tuple(lines))


def euler_characteristic(C: ChainComplex) -> int:
    return sum((-1) ** k * d for k, d in enumerate(C.dims))

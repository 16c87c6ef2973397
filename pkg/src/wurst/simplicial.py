"""Finite simplicial sets, truncated at a dimension cap.

A simplicial set stores *all* simplices up to the cap, degenerate ones
included, as dense integer ids per level.  Face and degeneracy tables are
plain nested tuples:

    face[n][i][s]   id of d_i(s),  1 <= n <= cap, 0 <= i <= n
    degen[n][i][s]  id of s_i(s),  0 <= n <  cap, 0 <= i <= n

Operations are pure; every constructor returns a fresh immutable value.
Colimits (pushouts, quotients) are computed pointwise per level, which is
exact for presheaves.  Comparisons between different caps are rejected.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass
from functools import lru_cache


class CapMismatchError(ValueError):
    pass


class BudgetExceededError(RuntimeError):
    pass


def search_budget() -> int:
    """Global node budget for backtracking searches (env WURST_BUDGET)."""
    try:
        return int(os.environ.get("WURST_BUDGET", "2000000"))
    except ValueError:
        return 2000000


# ---------------------------------------------------------------------------
# monotone maps [a] -> [b], represented as tuples of images


@lru_cache(maxsize=None)
def monotone_maps(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    """All weakly monotone maps [a] -> [b] in lexicographic order."""
    if b < 0:
        return () if a >= 0 else ((),)
    out: list[tuple[int, ...]] = []

    def rec(prefix, last):
        if len(prefix) == a + 1:
            out.append(tuple(prefix))
            return
        for v in range(last, b + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], 0)
    return tuple(out)


@lru_cache(maxsize=None)
def monotone_index(a: int, b: int) -> dict[tuple[int, ...], int]:
    """Dense ids of the monotone maps [a] -> [b]."""
    return {u: t for t, u in enumerate(monotone_maps(a, b))}


def coface_tuple(n: int, i: int) -> tuple[int, ...]:
    """delta_i: [n-1] -> [n], skipping the value i."""
    return tuple(t if t < i else t + 1 for t in range(n))


def codegen_tuple(n: int, i: int) -> tuple[int, ...]:
    """sigma_i: [n+1] -> [n], repeating the value i."""
    return tuple(t if t <= i else t - 1 for t in range(n + 2))


def compose_monotone(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """f after g, as maps of finite ordinals."""
    return tuple(f[x] for x in g)


def reversal_tuple(n: int) -> tuple[int, ...]:
    """The order-reversing bijection of [n] (not monotone)."""
    return tuple(n - t for t in range(n + 1))


def reverse_monotone(alpha: tuple[int, ...], b: int) -> tuple[int, ...]:
    """Conjugate a monotone map [a] -> [b] by the order reversals."""
    a = len(alpha) - 1
    return tuple(b - alpha[a - t] for t in range(a + 1))


# ---------------------------------------------------------------------------


class SimplicialSet:
    __slots__ = ("cap", "counts", "face", "degen", "labels", "_ez", "_nondeg",
                 "_face_index", "_vertices")

    def __init__(self, cap, counts, face, degen, labels=None):
        self.cap = cap
        self.counts = tuple(counts)
        self.face = face
        self.degen = degen
        self.labels = labels
        self._ez = None
        self._nondeg = None
        self._face_index = None
        self._vertices = None

    def __repr__(self):
        return f"SimplicialSet(cap={self.cap}, counts={self.counts})"

    def size(self, n: int) -> int:
        return self.counts[n]

    def simplices(self, n: int) -> range:
        return range(self.counts[n])

    def d(self, n: int, i: int, s: int) -> int:
        return self.face[n][i][s]

    def s(self, n: int, i: int, s: int) -> int:
        return self.degen[n][i][s]

    def label(self, n: int, s: int) -> str:
        if self.labels is not None:
            return self.labels[n][s]
        return f"{n}.{s}"

    # -- degeneracy structure ------------------------------------------------

    def _build_ez(self):
        # ez[n][s] = (m, u, pi): s = X(pi)(u) with u nondegenerate in level m,
        # pi: [n] ->> [m] the unique epi of the Eilenberg-Zilber decomposition.
        ez = [[(0, s, (0,)) for s in range(self.counts[0])]]
        nondeg = [tuple(range(self.counts[0]))]
        for n in range(1, self.cap + 1):
            first_parent: dict[int, tuple[int, int]] = {}
            for j in range(n):
                for t in range(self.counts[n - 1]):
                    img = self.degen[n - 1][j][t]
                    if img not in first_parent:
                        first_parent[img] = (j, t)
            level = []
            nd = []
            for s in range(self.counts[n]):
                if s in first_parent:
                    j, t = first_parent[s]
                    m, u, pi = ez[n - 1][t]
                    sigma = codegen_tuple(n - 1, j)  # [n] -> [n-1]
                    level.append((m, u, compose_monotone(pi, sigma)))
                else:
                    level.append((n, s, tuple(range(n + 1))))
                    nd.append(s)
            ez.append(level)
            nondeg.append(tuple(nd))
        self._ez = ez
        self._nondeg = nondeg

    def ez(self, n: int, s: int) -> tuple[int, int, tuple[int, ...]]:
        """Nondegenerate carrier: (m, u, pi) with s the pi-degeneracy of u."""
        if self._ez is None:
            self._build_ez()
        return self._ez[n][s]

    def nondegenerate(self, n: int) -> tuple[int, ...]:
        if self._nondeg is None:
            self._build_ez()
        return self._nondeg[n]

    def is_degenerate(self, n: int, s: int) -> bool:
        return self.ez(n, s)[0] != n

    def apply_epi(self, pi: tuple[int, ...], m: int, u: int) -> int:
        """X(pi)(u) for a surjection pi: [n] ->> [m] onto the level of u."""
        n = len(pi) - 1
        if n == m:
            return u
        t = next(x for x in range(n) if pi[x] == pi[x + 1])
        shorter = pi[:t] + pi[t + 1:]
        return self.degen[n - 1][t][self.apply_epi(shorter, m, u)]

    def degenerate_at(self, v: int, n: int) -> int:
        """The n-fold degenerate simplex on the vertex v."""
        s = v
        for m in range(n):
            s = self.degen[m][0][s]
        return s

    def vertex_tuple(self, n: int, s: int) -> tuple[int, ...]:
        """Vertices of a simplex, in order (vertex k kept by dropping the rest)."""
        if self._vertices is None:
            self._vertices = [None] * (self.cap + 1)
        if self._vertices[n] is None:
            if n == 0:
                self._vertices[n] = tuple((t,) for t in range(self.counts[0]))
            else:
                res = []
                for t in range(self.counts[n]):
                    heads = self.vertex_tuple(n - 1, self.face[n][n][t])
                    lastv = t
                    lev = n
                    for _ in range(n):
                        lastv = self.face[lev][0][lastv]
                        lev -= 1
                    res.append(heads + (lastv,))
                self._vertices[n] = tuple(res)
        return self._vertices[n][s]

    def act(self, alpha: tuple[int, ...], b: int, s: int) -> int:
        """Presheaf action: the image of s in X_b under X(alpha), alpha: [a] -> [b]."""
        a = len(alpha) - 1
        dup = next((t for t in range(a) if alpha[t] == alpha[t + 1]), None)
        if dup is not None:
            shorter = alpha[:dup] + alpha[dup + 1:]
            return self.degen[a - 1][dup][self.act(shorter, b, s)]
        missing = next((v for v in range(b + 1) if v not in alpha), None)
        if missing is not None:
            squeezed = tuple(v if v < missing else v - 1 for v in alpha)
            return self.act(squeezed, b - 1, self.face[b][missing][s])
        return s

    def face_key(self, n: int, s: int) -> tuple[int, ...]:
        return tuple(self.face[n][i][s] for i in range(n + 1))

    def face_index(self, n: int) -> dict[tuple[int, ...], list[int]]:
        """Index of level-n simplices by their full face tuple."""
        if self._face_index is None:
            self._face_index = [None] * (self.cap + 1)
        if self._face_index[n] is None:
            idx: dict[tuple[int, ...], list[int]] = {}
            for s in range(self.counts[n]):
                idx.setdefault(self.face_key(n, s), []).append(s)
            self._face_index[n] = idx
        return self._face_index[n]


def check_simplicial_identities(X: SimplicialSet) -> None:
    """Assert all simplicial identities that fit under the cap."""
    for n in range(2, X.cap + 1):
        for j in range(n + 1):
            for i in range(j):
                for s in X.simplices(n):
                    assert X.d(n - 1, i, X.d(n, j, s)) == X.d(n - 1, j - 1, X.d(n, i, s)), \
                        f"d_i d_j fails at n={n}, i={i}, j={j}, s={s}"
    for n in range(0, X.cap - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for s in X.simplices(n):
                    assert X.s(n + 1, j + 1, X.s(n, i, s)) == X.s(n + 1, i, X.s(n, j, s)), \
                        f"s_i s_j fails at n={n}, i={i}, j={j}"
    for n in range(1, X.cap):
        for j in range(n + 1):
            for s in X.simplices(n):
                assert X.d(n + 1, j, X.s(n, j, s)) == s
                assert X.d(n + 1, j + 1, X.s(n, j, s)) == s
                for i in range(n + 2):
                    if i < j:
                        assert X.d(n + 1, i, X.s(n, j, s)) == X.s(n - 1, j - 1, X.d(n, i, s))
                    elif i > j + 1:
                        assert X.d(n + 1, i, X.s(n, j, s)) == X.s(n - 1, j, X.d(n, i - 1, s))
    # degeneracies are injective (forced by d_j s_j = id)
    for n in range(0, X.cap):
        for j in range(n + 1):
            col = X.degen[n][j]
            assert len(set(col)) == len(col)


def build_sset(cap, level_keys, face_fn, degen_fn, label_fn=None) -> tuple[SimplicialSet, list[dict]]:
    """Assemble a SimplicialSet from keyed levels and face/degeneracy rules.

    level_keys[n] is a sequence of hashable keys (made dense in the given
    order); face_fn(n, i, key) and degen_fn(n, i, key) return keys one level
    down/up.  Returns the set together with the per-level key -> id maps.
    """
    index = []
    for n in range(cap + 1):
        keys = list(level_keys[n])
        index.append({k: i for i, k in enumerate(keys)})
        if len(index[n]) != len(keys):
            raise ValueError(f"duplicate keys at level {n}")
    counts = [len(level_keys[n]) for n in range(cap + 1)]
    face = [()]
    for n in range(1, cap + 1):
        face.append(tuple(
            tuple(index[n - 1][face_fn(n, i, k)] for k in level_keys[n])
            for i in range(n + 1)))
    degen = []
    for n in range(cap):
        degen.append(tuple(
            tuple(index[n + 1][degen_fn(n, i, k)] for k in level_keys[n])
            for i in range(n + 1)))
    degen.append(())
    labels = None
    if label_fn is not None:
        labels = tuple(tuple(label_fn(k) for k in level_keys[n]) for n in range(cap + 1))
    return SimplicialSet(cap, counts, tuple(face), tuple(degen), labels), index


# ---------------------------------------------------------------------------
# simplicial maps


class SimplicialMap:
    __slots__ = ("source", "target", "comp")

    def __init__(self, source, target, comp, check=True):
        if source.cap != target.cap:
            raise CapMismatchError("source and target caps differ")
        self.source = source
        self.target = target
        self.comp = tuple(tuple(c) for c in comp)
        if check:
            self._validate()

    def _validate(self):
        X, Y = self.source, self.target
        for n in range(X.cap + 1):
            if len(self.comp[n]) != X.counts[n]:
                raise ValueError(f"component size mismatch at level {n}")
            for s in self.comp[n]:
                if not 0 <= s < Y.counts[n]:
                    raise ValueError(f"component out of range at level {n}")
        for n in range(1, X.cap + 1):
            for i in range(n + 1):
                for s in X.simplices(n):
                    if self.comp[n - 1][X.d(n, i, s)] != Y.d(n, i, self.comp[n][s]):
                        raise ValueError(f"map does not commute with d_{i} at level {n}")
        for n in range(X.cap):
            for i in range(n + 1):
                for s in X.simplices(n):
                    if self.comp[n + 1][X.s(n, i, s)] != Y.s(n, i, self.comp[n][s]):
                        raise ValueError(f"map does not commute with s_{i} at level {n}")

    def __call__(self, n: int, s: int) -> int:
        return self.comp[n][s]

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap) and self.source is other.source
                and self.target is other.target and self.comp == other.comp)

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.comp))

    def __repr__(self):
        return f"SimplicialMap({self.source!r} -> {self.target!r})"

    def is_injective(self) -> bool:
        return all(len(set(c)) == len(c) for c in self.comp)

    def is_bijective(self) -> bool:
        return self.is_injective() and all(
            len(c) == self.target.counts[n] for n, c in enumerate(self.comp))


def identity_map(X: SimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, [tuple(range(X.counts[n])) for n in range(X.cap + 1)],
                         check=False)


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g after f."""
    if f.target is not g.source and f.target.counts != g.source.counts:
        raise ValueError("maps not composable")
    comp = [tuple(g.comp[n][x] for x in f.comp[n]) for n in range(f.source.cap + 1)]
    return SimplicialMap(f.source, g.target, comp, check=False)


def inverse_map(f: SimplicialMap) -> SimplicialMap:
    if not f.is_bijective():
        raise ValueError("map is not bijective")
    comp = []
    for n in range(f.source.cap + 1):
        inv = [0] * f.target.counts[n]
        for s, y in enumerate(f.comp[n]):
            inv[y] = s
        comp.append(tuple(inv))
    return SimplicialMap(f.target, f.source, comp, check=False)


def constant_map(X: SimplicialSet, Y: SimplicialSet, v: int) -> SimplicialMap:
    comp = [tuple(Y.degenerate_at(v, n) for _ in X.simplices(n)) for n in range(X.cap + 1)]
    return SimplicialMap(X, Y, comp, check=False)


# ---------------------------------------------------------------------------
# basic constructors


@lru_cache(maxsize=None)
def standard_simplex(n: int, cap: int) -> SimplicialSet:
    """Delta^n truncated at cap; level k is all monotone maps [k] -> [n]."""
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    levels = [monotone_maps(k, n) for k in range(cap + 1)]
    X, _ = build_sset(
        cap, levels,
        face_fn=lambda k, i, u: u[:i] + u[i + 1:],
        degen_fn=lambda k, i, u: u[:i + 1] + u[i:],
        label_fn=lambda u: "".join(map(str, u)))
    return X


def simplex_map(alpha: tuple[int, ...], n_target: int, cap: int) -> SimplicialMap:
    """The map Delta^a -> Delta^{n_target} induced by a monotone alpha."""
    a = len(alpha) - 1
    X = standard_simplex(a, cap)
    Y = standard_simplex(n_target, cap)
    comp = []
    for k in range(cap + 1):
        keys = monotone_maps(k, a)
        ykeys = {u: i for i, u in enumerate(monotone_maps(k, n_target))}
        comp.append(tuple(ykeys[compose_monotone(alpha, u)] for u in keys))
    return SimplicialMap(X, Y, comp, check=False)


def _subset_of_simplex(n: int, cap: int, keep) -> tuple[SimplicialSet, SimplicialMap]:
    """Sub-simplicial-set of Delta^n spanned by the monotone maps with keep(u)."""
    levels = [[u for u in monotone_maps(k, n) if keep(u)] for k in range(cap + 1)]
    X, idx = build_sset(
        cap, levels,
        face_fn=lambda k, i, u: u[:i] + u[i + 1:],
        degen_fn=lambda k, i, u: u[:i + 1] + u[i:],
        label_fn=lambda u: "".join(map(str, u)))
    Y = standard_simplex(n, cap)
    ambient = [{u: i for i, u in enumerate(monotone_maps(k, n))} for k in range(cap + 1)]
    comp = [tuple(ambient[k][u] for u in levels[k]) for k in range(cap + 1)]
    return X, SimplicialMap(X, Y, comp, check=False)


@lru_cache(maxsize=None)
def boundary(n: int, cap: int) -> SimplicialSet:
    """The boundary of Delta^n: simplices whose image omits some vertex."""
    if n == 0:
        return empty_sset(cap)
    return _subset_of_simplex(n, cap, lambda u: len(set(u)) <= n)[0]


def boundary_inclusion(n: int, cap: int) -> SimplicialMap:
    return _subset_of_simplex(n, cap, lambda u: len(set(u)) <= n)[1]


@lru_cache(maxsize=None)
def horn(n: int, k: int, cap: int) -> SimplicialSet:
    """The horn of Delta^n omitting the k-th face."""
    if n == 0:
        raise ValueError("horn needs n >= 1")
    if not 0 <= k <= n:
        raise ValueError("horn index out of range")
    keep = lambda u: len(set(u) | {k}) <= n
    return _subset_of_simplex(n, cap, keep)[0]


def horn_inclusion(n: int, k: int, cap: int) -> SimplicialMap:
    keep = lambda u: len(set(u) | {k}) <= n
    return _subset_of_simplex(n, cap, keep)[1]


@lru_cache(maxsize=None)
def empty_sset(cap: int) -> SimplicialSet:
    X, _ = build_sset(cap, [[] for _ in range(cap + 1)],
                      face_fn=None, degen_fn=None)
    return X


def product(X: SimplicialSet, Y: SimplicialSet) -> SimplicialSet:
    """Levelwise product; operators act componentwise."""
    if X.cap != Y.cap:
        raise CapMismatchError("product needs equal caps")
    cap = X.cap
    levels = [[(s, t) for s in X.simplices(n) for t in Y.simplices(n)]
              for n in range(cap + 1)]
    P, _ = build_sset(
        cap, levels,
        face_fn=lambda n, i, st: (X.d(n, i, st[0]), Y.d(n, i, st[1])),
        degen_fn=lambda n, i, st: (X.s(n, i, st[0]), Y.s(n, i, st[1])))
    return P


def product_projections(X, Y):
    P = product(X, Y)
    cap = X.cap
    pi1 = [tuple(s for s in X.simplices(n) for _ in Y.simplices(n)) for n in range(cap + 1)]
    pi2 = [tuple(t for _ in X.simplices(n) for t in Y.simplices(n)) for n in range(cap + 1)]
    return P, SimplicialMap(P, X, pi1, check=False), SimplicialMap(P, Y, pi2, check=False)


def pair_in_product(X, Y, n, s, t) -> int:
    return s * Y.counts[n] + t


def product_map(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    P = product(f.source, g.source)
    Q = product(f.target, g.target)
    comp = []
    for n in range(f.source.cap + 1):
        row = []
        for s in f.source.simplices(n):
            for t in g.source.simplices(n):
                row.append(pair_in_product(f.target, g.target, n, f(n, s), g(n, t)))
        comp.append(tuple(row))
    return SimplicialMap(P, Q, comp, check=False)


# join simplices are tagged ("x", s), ("y", t) or ("xy", i, s, t) with
# s in X_i, t in Y_{n-1-i}

def _join_levels(X, Y, cap):
    levels = []
    for n in range(cap + 1):
        lv = [("x", s) for s in X.simplices(n)]
        for i in range(n):
            j = n - 1 - i
            lv += [("xy", i, s, t) for s in X.simplices(i) for t in Y.simplices(j)]
        lv += [("y", t) for t in Y.simplices(n)]
        levels.append(lv)
    return levels


def _join_face(X, Y, n, p, key):
    tag = key[0]
    if tag == "x":
        return ("x", X.d(n, p, key[1]))
    if tag == "y":
        return ("y", Y.d(n, p, key[1]))
    _, i, s, t = key
    j = n - 1 - i
    if p <= i:
        if i == 0:
            return ("y", t)
        return ("xy", i - 1, X.d(i, p, s), t)
    if j == 0:
        return ("x", s)
    return ("xy", i, s, Y.d(j, p - i - 1, t))


def _join_degen(X, Y, n, p, key):
    tag = key[0]
    if tag == "x":
        return ("x", X.s(n, p, key[1]))
    if tag == "y":
        return ("y", Y.s(n, p, key[1]))
    _, i, s, t = key
    if p <= i:
        return ("xy", i + 1, X.s(i, p, s), t)
    return ("xy", i, s, Y.s(n - 1 - i, p - i - 1, t))


def join(X: SimplicialSet, Y: SimplicialSet) -> SimplicialSet:
    """The join: (X * Y)_n = X_n + Y_n + sum over i+j=n-1 of X_i x Y_j."""
    if X.cap != Y.cap:
        raise CapMismatchError("join needs equal caps")
    cap = X.cap
    J, _ = build_sset(
        cap, _join_levels(X, Y, cap),
        face_fn=lambda n, p, k: _join_face(X, Y, n, p, k),
        degen_fn=lambda n, p, k: _join_degen(X, Y, n, p, k))
    return J


def join_index(X, Y, n, key) -> int:
    """Dense id of a tagged join simplex."""
    tag = key[0]
    if tag == "x":
        return key[1]
    base = X.counts[n]
    if tag == "xy":
        _, i, s, t = key
        for i2 in range(i):
            base += X.counts[i2] * Y.counts[n - 1 - i2]
        return base + s * Y.counts[n - 1 - i] + t
    for i2 in range(n):
        base += X.counts[i2] * Y.counts[n - 1 - i2]
    return base + key[1]


def join_map(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """f * g between joins."""
    X, Y = f.source, g.source
    J1 = join(X, Y)
    J2 = join(f.target, g.target)
    comp = []
    for n in range(X.cap + 1):
        row = []
        for key in _join_levels(X, Y, X.cap)[n]:
            tag = key[0]
            if tag == "x":
                row.append(join_index(f.target, g.target, n, ("x", f(n, key[1]))))
            elif tag == "y":
                row.append(join_index(f.target, g.target, n, ("y", g(n, key[1]))))
            else:
                _, i, s, t = key
                row.append(join_index(f.target, g.target, n,
                                      ("xy", i, f(i, s), g(n - 1 - i, t))))
        comp.append(tuple(row))
    return SimplicialMap(J1, J2, comp, check=False)


def disjoint_union(X: SimplicialSet, Y: SimplicialSet):
    """Coproduct, with the two injections."""
    if X.cap != Y.cap:
        raise CapMismatchError("coproduct needs equal caps")
    cap = X.cap
    levels = [[("x", s) for s in X.simplices(n)] + [("y", t) for t in Y.simplices(n)]
              for n in range(cap + 1)]

    def ff(n, i, k):
        return (k[0], X.d(n, i, k[1]) if k[0] == "x" else Y.d(n, i, k[1]))

    def df(n, i, k):
        return (k[0], X.s(n, i, k[1]) if k[0] == "x" else Y.s(n, i, k[1]))

    U, idx = build_sset(cap, levels, ff, df)
    inx = SimplicialMap(X, U, [tuple(idx[n][("x", s)] for s in X.simplices(n))
                               for n in range(cap + 1)], check=False)
    iny = SimplicialMap(Y, U, [tuple(idx[n][("y", t)] for t in Y.simplices(n))
                               for n in range(cap + 1)], check=False)
    return U, inx, iny


def coproduct(parts: list[SimplicialSet]):
    """n-ary disjoint union with the list of injections."""
    if not parts:
        raise ValueError("coproduct of nothing")
    cap = parts[0].cap
    U = parts[0]
    injections = [identity_map(parts[0])]
    for P in parts[1:]:
        U2, inl, inr = disjoint_union(U, P)
        injections = [compose_maps(inl, f) for f in injections]
        injections.append(inr)
        U = U2
    return U, injections


def copair(U: SimplicialSet, injections, maps, target) -> SimplicialMap:
    """The map out of a coproduct determined by maps out of the parts."""
    cap = U.cap
    comp = [[None] * U.counts[n] for n in range(cap + 1)]
    for inj, f in zip(injections, maps):
        for n in range(cap + 1):
            for s in inj.source.simplices(n):
                comp[n][inj(n, s)] = f(n, s)
    return SimplicialMap(U, target, [tuple(row) for row in comp])


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if rx > ry:
                rx, ry = ry, rx
            self.parent[ry] = rx


def pushout(f: SimplicialMap, g: SimplicialMap):
    """Pushout of X <-f- A -g-> Y, computed pointwise per level.

    Returns (P, inj_X, inj_Y).
    """
    if f.source is not g.source and f.source.counts != g.source.counts:
        raise ValueError("pushout legs must share their source")
    X, Y, A = f.target, g.target, f.source
    if X.cap != Y.cap:
        raise CapMismatchError("pushout needs equal caps")
    cap = X.cap
    class_of = []   # per level: list over X+Y ids -> class id
    counts = []
    for n in range(cap + 1):
        nx = X.counts[n]
        uf = _UnionFind(nx + Y.counts[n])
        for a in A.simplices(n):
            uf.union(f(n, a), nx + g(n, a))
        reps = {}
        cls = []
        for z in range(nx + Y.counts[n]):
            r = uf.find(z)
            if r not in reps:
                reps[r] = len(reps)
            cls.append(reps[r])
        class_of.append(cls)
        counts.append(len(reps))
    rep_elt = []  # class -> representative (side, id)
    for n in range(cap + 1):
        rep = [None] * counts[n]
        for z, c in enumerate(class_of[n]):
            if rep[c] is None:
                rep[c] = ("x", z) if z < X.counts[n] else ("y", z - X.counts[n])
        rep_elt.append(rep)

    def act(n, i, tables_x, tables_y, cls_row, going_up):
        out = []
        for c in range(counts[n]):
            side, z = rep_elt[n][c]
            if side == "x":
                img = tables_x[i][z]
                out.append(cls_row[img])
            else:
                img = tables_y[i][z]
                out.append(cls_row[X.counts[n + 1 if going_up else n - 1] + img])
        return tuple(out)

    face = [()]
    for n in range(1, cap + 1):
        face.append(tuple(act(n, i, X.face[n], Y.face[n], class_of[n - 1], False)
                          for i in range(n + 1)))
    degen = []
    for n in range(cap):
        degen.append(tuple(act(n, i, X.degen[n], Y.degen[n], class_of[n + 1], True)
                           for i in range(n + 1)))
    degen.append(())
    P = SimplicialSet(cap, counts, tuple(face), tuple(degen))
    injx = SimplicialMap(X, P, [tuple(class_of[n][s] for s in X.simplices(n))
                                for n in range(cap + 1)], check=False)
    injy = SimplicialMap(Y, P, [tuple(class_of[n][X.counts[n] + t] for t in Y.simplices(n))
                                for n in range(cap + 1)], check=False)
    return P, injx, injy


def collapse(sub_inclusion: SimplicialMap):
    """Collapse the image of a map to a point: pushout along A -> Delta^0.

    Returns (quotient, projection, vertex id of the collapse point).
    The source of sub_inclusion must be nonempty in level 0.
    """
    A = sub_inclusion.source
    pt = standard_simplex(0, A.cap)
    to_pt = constant_map(A, pt, 0)
    P, injx, injpt = pushout(sub_inclusion, to_pt)
    return P, injx, injpt(0, 0)


def opposite(X: SimplicialSet) -> SimplicialSet:
    """Same simplices, d_i and s_i replaced by d_{n-i} and s_{n-i}."""
    face = [()]
    for n in range(1, X.cap + 1):
        face.append(tuple(X.face[n][n - i] for i in range(n + 1)))
    degen = []
    for n in range(X.cap):
        degen.append(tuple(X.degen[n][n - i] for i in range(n + 1)))
    degen.append(())
    return SimplicialSet(X.cap, X.counts, tuple(face), tuple(degen), X.labels)


def opposite_map(f: SimplicialMap) -> SimplicialMap:
    return SimplicialMap(opposite(f.source), opposite(f.target), f.comp, check=False)


# ---------------------------------------------------------------------------
# pointed directed objects


@dataclass(frozen=True)
class PointedDirected:
    """A simplicial set with an ordered pair of distinct base vertices."""
    carrier: SimplicialSet
    p0: int
    p1: int

    def __post_init__(self):
        if self.p0 == self.p1:
            raise ValueError("base points must be distinct")


def is_directed(K: PointedDirected) -> bool:
    """True iff K has exactly the two base vertices and every simplex reads
    as a (possibly empty) block of p0's followed by a block of p1's."""
    X = K.carrier
    if X.counts[0] != 2:
        return False
    for n in range(X.cap + 1):
        for s in X.simplices(n):
            vt = X.vertex_tuple(n, s)
            state = 0
            for v in vt:
                if v == K.p0:
                    if state == 1:
                        return False
                elif v == K.p1:
                    state = 1
                else:
                    return False
    return True


def suspension(K: SimplicialSet) -> PointedDirected:
    """K x Delta^1 with both ends collapsed to points."""
    cap = K.cap
    P = product(K, standard_simplex(1, cap))
    d1 = standard_simplex(1, cap)
    ends, incl = _ends_subobject(K, d1, P)
    two = disjoint_union(standard_simplex(0, cap), standard_simplex(0, cap))[0]
    to_two = _ends_to_two(K, d1, ends, two)
    Q, injp, inj2 = pushout(incl, to_two)
    return PointedDirected(Q, inj2(0, 0), inj2(0, 1))


def _ends_subobject(K, d1, P):
    """The subobject K x {0,1} of K x Delta^1, with its inclusion."""
    cap = K.cap
    d1_ids = [{u: i for i, u in enumerate(monotone_maps(n, 1))} for n in range(cap + 1)]
    levels = [[(s, e) for s in K.simplices(n) for e in (0, 1)] for n in range(cap + 1)]
    E, idx = build_sset(
        cap, levels,
        face_fn=lambda n, i, k: (K.d(n, i, k[0]), k[1]),
        degen_fn=lambda n, i, k: (K.s(n, i, k[0]), k[1]))
    comp = []
    for n in range(cap + 1):
        row = []
        for (s, e) in levels[n]:
            t = d1_ids[n][tuple([e] * (n + 1))]
            row.append(pair_in_product(K, d1, n, s, t))
        comp.append(tuple(row))
    return E, SimplicialMap(E, P, comp, check=False)


def _ends_to_two(K, d1, E, two):
    cap = K.cap
    comp = []
    for n in range(cap + 1):
        row = []
        for (s, e) in [(s, e) for s in K.simplices(n) for e in (0, 1)]:
            row.append(two.degenerate_at(e, n))
        comp.append(tuple(row))
    return SimplicialMap(E, two, comp, check=False)


def left_suspension(K: SimplicialSet) -> PointedDirected:
    """(Delta^0 * K) with the K end collapsed; base points (apex, collapse)."""
    cap = K.cap
    pt = standard_simplex(0, cap)
    J = join(pt, K)
    inc = _join_part_inclusion(pt, K, "y")
    Q, injj, v = collapse(inc)
    apex = injj(0, join_index(pt, K, 0, ("x", 0)))
    return PointedDirected(Q, apex, v)


def right_suspension(K: SimplicialSet) -> PointedDirected:
    """(K * Delta^0) with the K end collapsed; base points (collapse, apex)."""
    cap = K.cap
    pt = standard_simplex(0, cap)
    J = join(K, pt)
    inc = _join_part_inclusion(K, pt, "x")
    Q, injj, v = collapse(inc)
    apex = injj(0, join_index(K, pt, 0, ("y", 0)))
    return PointedDirected(Q, v, apex)


def _join_part_inclusion(X, Y, part) -> SimplicialMap:
    J = join(X, Y)
    cap = X.cap
    src = X if part == "x" else Y
    comp = [tuple(join_index(X, Y, n, (part, s)) for s in src.simplices(n))
            for n in range(cap + 1)]
    return SimplicialMap(src, J, comp, check=False)


def suspension_comparisons(K: SimplicialSet):
    """The maps left_suspension(K) <- suspension(K) -> right_suspension(K).

    Returns (S, SL, SR, to_left, to_right) with the middle object suspension(K)
    and pointed maps out of it.
    """
    cap = K.cap
    # Build the suspensions so the projection from K x Delta^1 is at hand.
    P = product(K, standard_simplex(1, cap))
    d1 = standard_simplex(1, cap)
    ends, incl = _ends_subobject(K, d1, P)
    two = disjoint_union(standard_simplex(0, cap), standard_simplex(0, cap))[0]
    Q, injp, inj2 = pushout(incl, _ends_to_two(K, d1, ends, two))
    S = PointedDirected(Q, inj2(0, 0), inj2(0, 1))
    pt = standard_simplex(0, cap)
    jl = join(pt, K)
    jr = join(K, pt)
    ql, injl, vl = collapse(_join_part_inclusion(pt, K, "y"))
    qr, injr, vr = collapse(_join_part_inclusion(K, pt, "x"))
    apex_l = injl(0, join_index(pt, K, 0, ("x", 0)))
    apex_r = injr(0, join_index(K, pt, 0, ("y", 0)))
    SL = PointedDirected(ql, apex_l, vl)
    SR = PointedDirected(qr, vr, apex_r)

    d1_ids = [{u: i for i, u in enumerate(monotone_maps(n, 1))} for n in range(cap + 1)]

    def build(to_join, joinX, joinY, inj):
        comp = []
        for n in range(cap + 1):
            row = [None] * Q.counts[n]
            for s in K.simplices(n):
                for ti, u in enumerate(monotone_maps(n, 1)):
                    pid = pair_in_product(K, d1, n, s, d1_ids[n][u])
                    key = to_join(n, s, u)
                    row[injp(n, pid)] = inj(n, join_index(joinX, joinY, n, key))
            comp.append(tuple(row))
        return comp

    def to_left_key(n, s, u):
        a = sum(1 for x in u if x == 0)
        if a == 0:
            return ("y", s)
        if a == n + 1:
            return ("x", pt.degenerate_at(0, n))
        kpart = s  # drop the first a vertices of s
        lev = n
        for _ in range(a):
            kpart = K.d(lev, 0, kpart)
            lev -= 1
        return ("xy", a - 1, pt.degenerate_at(0, a - 1), kpart)

    def to_right_key(n, s, u):
        b = sum(1 for x in u if x == 1)
        if b == 0:
            return ("x", s)
        if b == n + 1:
            return ("y", pt.degenerate_at(0, n))
        kpart = s
        lev = n
        for _ in range(b):
            kpart = K.d(lev, lev, kpart)
            lev -= 1
        return ("xy", n - b, kpart, pt.degenerate_at(0, b - 1))

    to_left = SimplicialMap(Q, ql, build(to_left_key, pt, K, injl))
    to_right = SimplicialMap(Q, qr, build(to_right_key, K, pt, injr))
    return S, SL, SR, to_left, to_right


# ---------------------------------------------------------------------------
# exhaustive map enumeration and isomorphism search


def _cell_order(X: SimplicialSet):
    """Nondegenerate cells ordered so each cell's boundary carriers precede it."""
    cells = []
    placed = set()
    verts = list(X.nondegenerate(0))
    # BFS order on vertices through nondegenerate edges
    adj = {v: [] for v in verts}
    for e in X.nondegenerate(1) if X.cap >= 1 else ():
        a, b = X.d(1, 1, e), X.d(1, 0, e)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen = set()
    order0 = []
    for v in verts:
        if v in seen:
            continue
        queue = [v]
        seen.add(v)
        while queue:
            w = queue.pop(0)
            order0.append(w)
            for u in sorted(adj.get(w, [])):
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    pending = [(n, s) for n in range(1, X.cap + 1) for s in X.nondegenerate(n)]

    def supported(cell):
        n, s = cell
        for i in range(n + 1):
            m, u, _ = X.ez(n - 1, X.d(n, i, s))
            if (m, u) not in placed:
                return False
        return True

    for v in order0:
        cells.append((0, v))
        placed.add((0, v))
        progress = True
        while progress:
            progress = False
            rest = []
            for cell in pending:
                if supported(cell):
                    cells.append(cell)
                    placed.add(cell)
                    progress = True
                else:
                    rest.append(cell)
            pending = rest
    cells.extend(pending)  # unreachable only if X has isolated high cells
    return cells


def enumerate_maps(X: SimplicialSet, Y: SimplicialSet, fixed=None,
                   budget=None, hard=False, injective=False, first_only=False):
    """All simplicial maps X -> Y by backtracking over nondegenerate cells.

    fixed maps nondegenerate cells (n, s) to forced images.  budget bounds the
    number of search nodes; exceeding it warns (or raises BudgetExceededError
    when hard=True).  With injective=True images of nondegenerate cells are
    distinct nondegenerate cells per level (used for isomorphism search).
    """
    if X.cap != Y.cap:
        raise CapMismatchError("enumerate_maps needs equal caps")
    if budget is None:
        budget = search_budget()
    fixed = fixed or {}
    cells = _cell_order(X)
    assign: dict[tuple[int, int], int] = {}
    used: list[set] = [set() for _ in range(X.cap + 1)]
    results = []
    nodes = 0
    warned = False

    def required_faces(n, s):
        req = []
        for i in range(n + 1):
            m, u, pi = X.ez(n - 1, X.d(n, i, s))
            req.append(Y.apply_epi(pi, m, assign[(m, u)]))
        return tuple(req)

    def candidates(cell):
        n, s = cell
        if cell in fixed:
            cand = [fixed[cell]]
        elif n == 0:
            cand = list(Y.simplices(0)) if not injective else list(Y.nondegenerate(0))
        else:
            req = required_faces(n, s)
            cand = Y.face_index(n).get(req, [])
            if injective:
                cand = [c for c in cand if not Y.is_degenerate(n, c)]
        if injective:
            cand = [c for c in cand if c not in used[n]]
        if n == 0 and cell not in fixed:
            return cand
        if n >= 1 and cell in fixed:
            # forced image must still be compatible with the boundary
            req = required_faces(n, s)
            cand = [c for c in cand if Y.face_key(n, c) == req]
        return cand

    def extend_full_map():
        comp = []
        for n in range(X.cap + 1):
            row = []
            for s in X.simplices(n):
                m, u, pi = X.ez(n, s)
                row.append(Y.apply_epi(pi, m, assign[(m, u)]))
            comp.append(tuple(row))
        return SimplicialMap(X, Y, comp, check=False)

    def rec(k):
        nonlocal nodes, warned
        if k == len(cells):
            results.append(extend_full_map())
            return first_only
        cell = cells[k]
        n, _ = cell
        for c in candidates(cell):
            nodes += 1
            if nodes > budget:
                if hard:
                    raise BudgetExceededError(
                        f"map search exceeded budget of {budget} nodes")
                if not warned:
                    warnings.warn(f"map search exceeded budget of {budget} nodes",
                                  stacklevel=2)
                    warned = True
            assign[cell] = c
            if injective:
                used[n].add(c)
            stop = rec(k + 1)
            del assign[cell]
            if injective:
                used[n].discard(c)
            if stop:
                return True
        return False

    rec(0)
    return results


def is_isomorphic(X: SimplicialSet, Y: SimplicialSet):
    """An isomorphism X -> Y if one exists, else None."""
    if X.cap != Y.cap:
        raise CapMismatchError("is_isomorphic needs equal caps")
    if X.counts != Y.counts:
        return None
    for n in range(X.cap + 1):
        if len(X.nondegenerate(n)) != len(Y.nondegenerate(n)):
            return None
    found = enumerate_maps(X, Y, injective=True, first_only=True)
    for f in found:
        if f.is_bijective():
            return f
    return None

"""Independent verification tools: isomorphism-invariant fingerprints, a
filtration-respecting backtracking isomorphism search over small prime
fields, and a seeded basis-change fuzzer.

The search peels off central components first (complements of the centre
meet the derived subalgebra trivially, so cores are unique up to
isomorphism), compares graded rank profiles of the lower-central-series
quotients, and then enumerates images of a generating set in two stages:
the induced map on the graded quotients, pruned by exact relation
transport over every generator pair, and lifts of the surviving graded
maps, pruned by incremental bracket consistency.  Any map found is
re-verified as an isomorphism on the public exact types before it escapes
this module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cohomology import compute_spaces
from .errors import InternalInvariantViolated, MixedFields, ZeroArgument
from .liealg import LieAlgebra, LinearMap
from .linalg import Matrix


@dataclass
class IsoSearchConfig:
    max_nodes: int = 10_000_000
    prefilter: bool = True

    def __post_init__(self):
        if self.max_nodes <= 0:
            raise ZeroArgument("node budget must be positive")


@dataclass
class IsoOutcome:
    status: str  # "iso" | "non_iso" | "budget"
    iso: LinearMap | None
    nodes: int


def invariant_vector(L: LieAlgebra):
    """Isomorphism-invariant fingerprint used as a cheap prefilter."""
    lcs = tuple(S.dim for S in L.lower_central_series())
    der = tuple(S.dim for S in L.derived_series())
    C = L.center()
    D = L.derived_subalgebra()
    return (lcs, der, C.dim, C.intersect(D).dim, compute_spaces(L).dim_h2)


# -- dense linear algebra over F_p with plain ints ------------------------


def _rref_int(rows, p):
    m = [list(r) for r in rows if any(r)]
    if not m:
        return [], []
    cols = len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], -1, p)
        m[r] = [(x * inv) % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def _reduce_against(v, basis, pivots, p):
    w = list(v)
    for row, pc in zip(basis, pivots):
        if w[pc]:
            f = w[pc]
            w = [(a - f * b) % p for a, b in zip(w, row)]
    return w


def _in_span(v, basis, pivots, p):
    return not any(_reduce_against(v, basis, pivots, p))


def _solve_int(M, b, p):
    """Solve M x = b over F_p; None when inconsistent."""
    rows = len(M)
    cols = len(M[0]) if rows else 0
    aug = [list(M[i]) + [b[i] % p] for i in range(rows)]
    red, piv = _rref_int(aug, p)
    if any(pc == cols for pc in piv):
        return None
    x = [0] * cols
    for r, pc in zip(red, piv):
        x[pc] = r[cols]
    return x


def _invert_int(M, p):
    n = len(M)
    aug = [list(M[i]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    red, piv = _rref_int(aug, p)
    if len(red) < n or any(pc >= n for pc in piv):
        raise InternalInvariantViolated("singular matrix")
    return [list(r[n:]) for r in red]


def _matmul_int(A, B, p):
    rows, inner, cols = len(A), len(B), len(B[0])
    return [
        [sum(A[i][k] * B[k][j] for k in range(inner)) % p for j in range(cols)]
        for i in range(rows)
    ]


def _span_elements(basis, p, n):
    if not basis:
        return [tuple([0] * n)]
    out = []
    for coeffs in product(range(p), repeat=len(basis)):
        v = [0] * n
        for c, b in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, b)]
        out.append(tuple(v))
    return out


class _FpAlgebra:
    """Plain-int mirror of a LieAlgebra over GF(p)."""

    def __init__(self, L: LieAlgebra):
        self.p = L.field.p
        self.n = L.dim
        self.tab = [
            [tuple(x.v for x in L.bracket_basis(i, j)) for j in range(L.dim)]
            for i in range(L.dim)
        ]

    def bracket(self, u, v):
        n, p = self.n, self.p
        out = [0] * n
        for i in range(n):
            if not u[i]:
                continue
            ti = self.tab[i]
            for j in range(n):
                if i == j or not v[j]:
                    continue
                c = (u[i] * v[j]) % p
                w = ti[j]
                for k in range(n):
                    if w[k]:
                        out[k] = (out[k] + c * w[k]) % p
        return tuple(out)

    def lcs_bases(self):
        n, p = self.n, self.p
        full = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        series = [(full, list(range(n)))]
        cur = full
        while True:
            gens = []
            for b in cur:
                for i in range(n):
                    e = tuple(1 if j == i else 0 for j in range(n))
                    w = self.bracket(e, b)
                    if any(w):
                        gens.append(w)
            basis, pivots = _rref_int(gens, p)
            series.append((basis, pivots))
            if not basis or len(basis) == len(cur):
                break
            cur = basis
        return series


def _complement_reps(upper, lower_basis, lower_pivots, p):
    reps = []
    basis = [list(b) for b in lower_basis]
    pivots = list(lower_pivots)
    for v in upper:
        red = _reduce_against(v, basis, pivots, p)
        if any(red):
            reps.append(tuple(v))
            basis, pivots = _rref_int(basis + [red], p)
    return reps


class _Grade:
    """Coordinates in one graded slice F_w / F_{w+1}."""

    def __init__(self, upper, lower, lo_piv, p):
        self.p = p
        self.lower = lower
        self.lo_piv = lo_piv
        self.reps = _complement_reps(upper, lower, lo_piv, p)
        red = [_reduce_against(r, lower, lo_piv, p) for r in self.reps]
        n = len(red[0]) if red else 0
        self.solver = [[red[k][c] for k in range(len(red))] for c in range(n)]

    @property
    def dim(self):
        return len(self.reps)

    def coord_of(self, v):
        red = _reduce_against(v, self.lower, self.lo_piv, self.p)
        if not self.reps:
            return () if not any(red) else None
        sol = _solve_int(self.solver, red, self.p)
        return None if sol is None else tuple(sol)


def _proj_functionals(s, p):
    """Nonzero functionals on F_p^s up to scalar (first nonzero entry 1)."""
    out = []
    for v in product(range(p), repeat=s):
        if not any(v):
            continue
        lead = next(x for x in v if x)
        if lead == 1:
            out.append(v)
    return out


def _rank_profile(alg: _FpAlgebra, series, grades):
    """Per weight w >= 2, the sorted ranks of f composed with the graded
    bracket into F_w / F_{w+1}, over all functionals f up to scalar.

    An isomorphism induces graded isomorphisms, so this multiset family is
    an isomorphism invariant.
    """
    p = alg.p
    g1 = _Grade(series[0][0], series[1][0], series[1][1], p)
    profile = []
    for w in range(2, len(grades) + 2):
        gw = grades[w - 2]
        if gw.dim == 0:
            continue
        if w == 2:
            sources = [(g1, g1)]
        else:
            sources = [(g1, grades[w - 3])]
        ranks = []
        for f in _proj_functionals(gw.dim, p):
            left, right = sources[0]
            M = []
            for a in left.reps:
                row = []
                for b in right.reps:
                    z = gw.coord_of(alg.bracket(a, b))
                    if z is None:
                        row.append(0)
                    else:
                        row.append(sum(fc * zc for fc, zc in zip(f, z)) % p)
                M.append(row)
            _, piv = _rref_int(M, p)
            ranks.append(len(piv))
        profile.append((w, tuple(sorted(ranks))))
    return tuple(profile)


def _adapted_basis(alg: _FpAlgebra, gens):
    """Extend the generators by bracket monomials to a full basis."""
    p = alg.p
    vectors = list(gens)
    exprs = [("gen", t) for t in range(len(gens))]
    needs = list(range(len(gens)))
    basis, pivots = _rref_int(vectors, p)
    while len(vectors) < alg.n:
        added = False
        m = len(vectors)
        for i in range(m):
            for j in range(m):
                if i == j:
                    continue
                w = alg.bracket(vectors[i], vectors[j])
                if any(w) and not _in_span(w, basis, pivots, p):
                    vectors.append(w)
                    exprs.append(("br", i, j))
                    needs.append(max(needs[i], needs[j]))
                    basis, pivots = _rref_int(vectors, p)
                    added = True
                    break
            if added:
                break
        if not added:
            raise InternalInvariantViolated("generators do not generate")
    return vectors, exprs, needs


class _Budget(Exception):
    pass


def iso_search(A: LieAlgebra, B: LieAlgebra, cfg: IsoSearchConfig | None = None) -> IsoOutcome:
    """Backtracking isomorphism search over a small prime field.

    Returns an IsoOutcome whose status is "iso" with a verified witness,
    "non_iso" after exhausting the constrained search space, or "budget"
    when the node budget ran out (a distinguished result, not an error).
    """
    cfg = cfg or IsoSearchConfig()
    if A.field != B.field:
        raise MixedFields("algebras over different fields")
    if A.field.is_rationals:
        raise ZeroArgument("the search is only available over prime fields")
    if A.dim != B.dim:
        return IsoOutcome("non_iso", None, 0)
    if cfg.prefilter and invariant_vector(A) != invariant_vector(B):
        return IsoOutcome("non_iso", None, 0)

    # split off central components; complements are unique up to
    # isomorphism, so it suffices to compare the cores
    core_a, da, split_a = A.strip_central_component()
    core_b, db, split_b = B.strip_central_component()
    if da != db:
        return IsoOutcome("non_iso", None, 0)
    if da > 0:
        if core_a.dim == 0:
            ident = LinearMap(A, B, Matrix.identity(A.field, A.dim))
            return IsoOutcome("iso", ident.verify(), 0)
        sub = iso_search(core_a, core_b, cfg)
        if sub.status != "iso":
            return sub
        M = (
            split_b.matrix.invert()
            * sub.iso.matrix.block_diag(Matrix.identity(A.field, da))
            * split_a.matrix
        )
        return IsoOutcome("iso", LinearMap(A, B, M).verify(), sub.nodes)

    fa, fb = _FpAlgebra(A), _FpAlgebra(B)
    p, n = fa.p, fa.n
    series_a = fa.lcs_bases()
    series_b = fb.lcs_bases()
    if [len(b) for b, _ in series_a] != [len(b) for b, _ in series_b]:
        return IsoOutcome("non_iso", None, 0)

    grades_a = [
        _Grade(series_a[w][0], series_a[w + 1][0], series_a[w + 1][1], p)
        for w in range(1, len(series_a) - 1)
    ]
    grades_b = [
        _Grade(series_b[w][0], series_b[w + 1][0], series_b[w + 1][1], p)
        for w in range(1, len(series_b) - 1)
    ]
    if _rank_profile(fa, series_a, grades_a) != _rank_profile(fb, series_b, grades_b):
        return IsoOutcome("non_iso", None, 0)

    std = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    f2a, f2a_piv = series_a[1]
    f2b, f2b_piv = series_b[1]
    gens_a = _complement_reps(std, f2a, f2a_piv, p)
    reps_b = _complement_reps(std, f2b, f2b_piv, p)
    m = len(gens_a)

    vectors, exprs, needs = _adapted_basis(fa, gens_a)
    weights = []
    for e in exprs:
        weights.append(1 if e[0] == "gen" else weights[e[1]] + weights[e[2]])

    # graded class of [b_i, b_j] for every adapted pair, zero rows included
    max_w = len(grades_a) + 1
    pairs_by_weight: dict[int, list] = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = weights[i] + weights[j]
            if w > max_w:
                u = None  # bracket must vanish identically
            else:
                u = grades_a[w - 2].coord_of(fa.bracket(vectors[i], vectors[j]))
                if u is None:
                    raise InternalInvariantViolated("graded coordinates failed")
            pairs_by_weight.setdefault(min(w, max_w + 1), []).append(
                (i, j, max(needs[i], needs[j]), u)
            )

    basis_mat = [[vectors[k][i] for k in range(n)] for i in range(n)]
    expand = {}
    for i in range(n):
        for j in range(i + 1, n):
            w = fa.bracket(vectors[i], vectors[j])
            sol = _solve_int(basis_mat, list(w), p)
            if sol is None:
                raise InternalInvariantViolated("adapted vectors are not a basis")
            expand[(i, j)] = tuple(sol)
    pair_req = {
        (i, j): max(
            needs[i],
            needs[j],
            max((needs[k] for k, c in enumerate(cf) if c), default=0),
        )
        for (i, j), cf in expand.items()
    }

    # generator corrections live in F2; shifts by central elements change
    # neither bracket consistency nor (given graded bijectivity)
    # invertibility, so coset representatives modulo the centre suffice.
    # After splitting off central components the centre sits inside F2.
    z_rows, z_piv = _rref_int(
        [[x.v for x in b] for b in B.center().basis], p
    )
    comp = _complement_reps(f2b, z_rows, z_piv, p)
    f2b_elems = _span_elements(comp, p, n)
    nodes = 0
    budget = cfg.max_nodes
    witness: list[LinearMap] = []

    def lift_of(col):
        v = [0] * n
        for k, c in enumerate(col):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, reps_b[k])]
        return tuple(v)

    def word_image(k, gen_imgs, cache):
        if k in cache:
            return cache[k]
        e = exprs[k]
        if e[0] == "gen":
            out = gen_imgs[e[1]]
        else:
            out = fb.bracket(
                word_image(e[1], gen_imgs, cache), word_image(e[2], gen_imgs, cache)
            )
        cache[k] = out
        return out

    def graded_ok(t, lifts, final=False):
        cache = {}
        for w, rows in pairs_by_weight.items():
            if w > max_w:
                for (i, j, need, _) in rows:
                    if need > t:
                        continue
                    img = fb.bracket(
                        word_image(i, lifts, cache), word_image(j, lifts, cache)
                    )
                    if any(img):
                        return False
                continue
            gb = grades_b[w - 2]
            if gb.dim != grades_a[w - 2].dim:
                return False
            urows, vrows = [], []
            for (i, j, need, u) in rows:
                if need > t:
                    continue
                img = fb.bracket(
                    word_image(i, lifts, cache), word_image(j, lifts, cache)
                )
                vc = gb.coord_of(img)
                if vc is None:
                    return False
                urows.append(list(u))
                vrows.append(list(vc))
            if not urows or gb.dim == 0:
                continue
            U = [list(u) for u in urows]
            for c in range(gb.dim):
                if _solve_int(U, [v[c] for v in vrows], p) is None:
                    return False
            if final:
                rr, _ = _rref_int(vrows, p)
                if len(rr) != gb.dim:
                    return False
        return True

    def try_full(gen_imgs):
        cache = {}
        imgs = [word_image(k, gen_imgs, cache) for k in range(n)]
        for (i, j), coeffs in expand.items():
            lhs = fb.bracket(imgs[i], imgs[j])
            rhs = [0] * n
            for k, c in enumerate(coeffs):
                if c:
                    rhs = [(x + c * y) % p for x, y in zip(rhs, imgs[k])]
            if list(lhs) != rhs:
                return None
        T = [[imgs[k][i] for k in range(n)] for i in range(n)]
        rr, _ = _rref_int(T, p)
        if len(rr) != n:
            return None
        M = _matmul_int(T, _invert_int(basis_mat, p), p)
        lin = LinearMap(A, B, Matrix.from_rows(A.field, M))
        if not lin.is_isomorphism():
            return None
        lin.verified = True
        return lin

    def search_lift(t, gen_imgs, lifts):
        nonlocal nodes
        if t == m:
            got = try_full(gen_imgs)
            if got is not None:
                witness.append(got)
                return True
            return False
        for corr in f2b_elems:
            nodes += 1
            if nodes > budget:
                raise _Budget()
            gen_imgs.append(tuple((a + b) % p for a, b in zip(lifts[t], corr)))
            ok = True
            cache = {}
            for (i, j), req in pair_req.items():
                if req != t:
                    continue
                lhs = fb.bracket(
                    word_image(i, gen_imgs, cache), word_image(j, gen_imgs, cache)
                )
                rhs = [0] * n
                for k, c in enumerate(expand[(i, j)]):
                    if c:
                        wv = word_image(k, gen_imgs, cache)
                        rhs = [(x + c * y) % p for x, y in zip(rhs, wv)]
                if list(lhs) != rhs:
                    ok = False
                    break
            if ok and search_lift(t + 1, gen_imgs, lifts):
                return True
            gen_imgs.pop()
        return False

    # standard basis vectors first: when the tables coincide the identity
    # map is then the first assignment the search completes
    unit = [tuple(1 if k == t else 0 for k in range(m)) for t in range(m)]
    cand = unit + [
        v for v in product(range(p), repeat=m) if any(v) and v not in set(unit)
    ]

    def search_psi(t, cols, chosen_basis, chosen_piv):
        nonlocal nodes
        if t == m:
            lifts = [lift_of(c) for c in cols]
            if not graded_ok(m - 1, lifts, final=True):
                return False
            return search_lift(0, [], lifts)
        for v in cand:
            nodes += 1
            if nodes > budget:
                raise _Budget()
            if _in_span(v, chosen_basis, chosen_piv, p):
                continue
            lifts = [lift_of(c) for c in cols] + [lift_of(v)]
            if not graded_ok(t, lifts):
                continue
            nb, npiv = _rref_int(list(chosen_basis) + [list(v)], p)
            if search_psi(t + 1, cols + [v], nb, npiv):
                return True
        return False

    try:
        found = search_psi(0, [], [], [])
    except _Budget:
        return IsoOutcome("budget", None, nodes)
    if found:
        return IsoOutcome("iso", witness[0], nodes)
    return IsoOutcome("non_iso", None, nodes)


def fuzz_basis_change(L: LieAlgebra, trials: int, seed: int):
    """Deterministic stream of (P, change_basis(L, P)) with P invertible.

    Uses the stdlib Mersenne Twister seeded with `seed`; rational entries
    are drawn from -2..2, prime-field entries uniformly.
    """
    rng = random.Random(seed)
    field = L.field
    n = L.dim
    for _ in range(trials):
        while True:
            if field.is_rationals:
                rows = [
                    [Fraction(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)
                ]
            else:
                rows = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
            P = Matrix.from_rows(field, rows)
            if P.is_invertible():
                break
        yield P, L.change_basis(P)

"""Recognition: identify a nilpotent Lie algebra of dimension at most 6
as a catalog class and produce an explicit verified isomorphism.

The driver peels off central components, factors the remainder as a
central extension of its quotient by the centre, recognizes the quotient
recursively, transports the cocycles onto the catalog quotient, and then
hands over to a per-quotient normalizer (see normalizers.py) that replays
the orbit analysis with exact arithmetic.  Every intermediate map is a
concrete matrix; the composition is verified as an isomorphism before it
is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import catalog
from .autgroups import template_for
from .cohomology import (
    SkewForm,
    central_extension,
    compute_spaces,
    factor_by_center,
    pairs,
    recover_functional,
)
from .errors import (
    DimTooLarge,
    InternalInvariantViolated,
    NotALieAlgebra,
    NotNilpotent,
)
from .field import two_by_two_with_det  # noqa: F401  (re-exported operation)
from .liealg import LieAlgebra, LinearMap
from .linalg import Matrix

__all__ = [
    "recognize",
    "RecognitionResult",
    "NormalizationStep",
    "skew_normal_form",
    "two_by_two_with_det",
]


def skew_normal_form(theta: SkewForm):
    """Basis change P putting a skew form into hyperbolic normal form.

    Returns (P, r) with P invertible and the pullback of theta through P
    equal to the sum of elementary forms on (1,2), (3,4), ..., (r-1, r).
    """
    L = theta.base
    field = L.field
    n = L.dim
    remaining = [
        tuple(field.el(1 if k == i else 0) for k in range(n)) for i in range(n)
    ]
    paired = []
    radical = []
    while remaining:
        u = remaining.pop(0)
        partner = None
        for idx, w in enumerate(remaining):
            if theta.eval(u, w).v:
                partner = idx
                break
        if partner is None:
            radical.append(u)
            continue
        v = remaining.pop(partner)
        c = theta.eval(u, v).inv()
        v = tuple(c * x for x in v)
        fixed = []
        for w in remaining:
            cu = theta.eval(u, w)
            cv = theta.eval(v, w)
            fixed.append(
                tuple(wx + cv * ux - cu * vx for wx, ux, vx in zip(w, u, v))
            )
        remaining = fixed
        paired.extend([u, v])
    cols = paired + radical
    P = Matrix(field, [[cols[j][i] for j in range(n)] for i in range(n)])
    return P, len(paired)


@dataclass
class NormalizationStep:
    kind: str  # QuotientRecognize | SkewCanonical | AutApply |
    #            CenterBaseChange | CoboundaryShift | Relabel | ScaleParam
    data: object  # the automorphism / centre / functional / scaling data
    note: str = ""
    full: object = None  # the lifted square matrix acting on the extension


@dataclass
class RecognitionResult:
    id: catalog.CatalogId
    iso: LinearMap  # verified isomorphism onto instantiate(id)
    trace: list = dc_field(default_factory=list)


class NormEngine:
    """Normalization state: catalog quotient N, current cocycles, and the
    accumulated isomorphism from the starting extension."""

    def __init__(self, qkey, N: LieAlgebra, etas, rep_dicts):
        self.qkey = qkey
        self.N = N
        self.field = N.field
        self.n = N.dim
        self.s = len(etas)
        self.etas = list(etas)
        self.steps: list[NormalizationStep] = []
        self.total = Matrix.identity(self.field, self.n + self.s)
        self.template = template_for(self.field, *qkey)
        self.reps = [SkewForm.from_dict(N, d) for d in rep_dicts]
        coh = compute_spaces(N)
        self.b2 = coh.b2
        cols = [list(r.coeffs) for r in self.reps] + [list(b.coeffs) for b in self.b2]
        self.dec = Matrix(
            self.field,
            [[cols[c][r] for c in range(len(cols))] for r in range(len(pairs(self.n)))],
        )
        if self.dec.rank() != len(cols) or len(cols) != len(coh.z2):
            raise InternalInvariantViolated(
                f"representative basis for {qkey} does not complement B2"
            )
        self.b2_funcs = [recover_functional(N, b) for b in self.b2]
        self.relabelled = None  # set once a Relabel leaves the extension picture
        self._cob_reduce("transported cocycles reduced modulo coboundaries")

    # -- bookkeeping -----------------------------------------------------

    def require(self, cond: bool, why: str = ""):
        if not cond:
            raise InternalInvariantViolated(
                f"impossible state while normalizing over {self.qkey}: {why}"
            )

    def current_algebra(self) -> LieAlgebra:
        if self.relabelled is not None:
            return self.relabelled
        K, _ = central_extension(self.N, self.etas, check=False)
        return K

    def _decompose(self, form: SkewForm):
        sol = self.dec.solve(list(form.coeffs))
        self.require(sol is not None, "cocycle left the cocycle space")
        r = len(self.reps)
        return sol[:r], sol[r:]

    def c(self, i: int):
        """Coefficients of eta_i in the case representative basis."""
        rep, cob = self._decompose(self.etas[i])
        self.require(all(not x.v for x in cob), "unreduced coboundary part")
        return rep

    def _cob_reduce(self, note: str):
        coords = []
        clean = True
        for e in self.etas:
            rep, cob = self._decompose(e)
            coords.append((rep, cob))
            if any(x.v for x in cob):
                clean = False
        if clean:
            return
        field = self.field
        nus = []
        new_etas = []
        for (rep, cob), e in zip(coords, self.etas):
            nu = [field.zero()] * self.n
            for cm, f in zip(cob, self.b2_funcs):
                if cm.v:
                    for i in range(self.n):
                        nu[i] = nu[i] - cm * f[i]
            nus.append(nu)
            red = e
            for cm, b in zip(cob, self.b2):
                if cm.v:
                    red = red - b.scale(cm)
            new_etas.append(red)
        M = Matrix.identity(field, self.n + self.s)
        for l in range(self.s):
            for i in range(self.n):
                M.data[self.n + l][i] = nus[l][i]
        self.etas = new_etas
        self.total = M * self.total
        self.steps.append(NormalizationStep("CoboundaryShift", M, note, M))

    # -- elementary moves --------------------------------------------------

    def aut(self, params: dict, note: str = ""):
        """Pull the cocycles back through a template automorphism."""
        phi = self.template(params)
        self.etas = [e.pullback(phi) for e in self.etas]
        M = phi.invert().block_diag(Matrix.identity(self.field, self.s))
        self.total = M * self.total
        self.steps.append(NormalizationStep("AutApply", phi, note, M))
        self._cob_reduce("coboundary cleanup after automorphism")

    def aut_matrix(self, P: Matrix, kind: str = "AutApply", note: str = ""):
        """Like aut() but with an explicit matrix (abelian quotients)."""
        if not LinearMap(self.N, self.N, P).is_isomorphism():
            raise InternalInvariantViolated("basis change is not an automorphism")
        self.etas = [e.pullback(P) for e in self.etas]
        M = P.invert().block_diag(Matrix.identity(self.field, self.s))
        self.total = M * self.total
        self.steps.append(NormalizationStep(kind, P, note, M))
        self._cob_reduce("coboundary cleanup after basis change")

    def center(self, rows, note: str = ""):
        """Replace the cocycle tuple by A * etas (A invertible s x s)."""
        A = Matrix.from_rows(self.field, rows)
        if not A.is_invertible():
            raise InternalInvariantViolated("centre base change is singular")
        new = []
        for l in range(self.s):
            acc = SkewForm.zero(self.N)
            for k in range(self.s):
                if A.data[l][k].v:
                    acc = acc + self.etas[k].scale(A.data[l][k])
            new.append(acc)
        self.etas = new
        M = Matrix.identity(self.field, self.n).block_diag(A)
        self.total = M * self.total
        self.steps.append(NormalizationStep("CenterBaseChange", A, note, M))

    def scale_eta(self, l: int, cval, note: str = ""):
        c = self.field.el(cval)
        rows = [
            [
                (c if (i == l and j == l) else (1 if i == j else 0))
                for j in range(self.s)
            ]
            for i in range(self.s)
        ]
        self.center(rows, note)

    def sub_eta(self, l: int, m: int, cval, note: str = ""):
        """eta_l := eta_l - c * eta_m."""
        c = self.field.el(cval)
        rows = [
            [
                (-c if (i == l and j == m) else (1 if i == j else 0))
                for j in range(self.s)
            ]
            for i in range(self.s)
        ]
        self.center(rows, note)

    def swap_etas(self, note: str = ""):
        self.require(self.s == 2, "swap is a two-cocycle move")
        self.center([[0, 1], [1, 0]], note)

    def skew_canonical(self, i: int, note: str = "") -> int:
        P, r = skew_normal_form(self.etas[i])
        self.aut_matrix(P, kind="SkewCanonical", note=note or "hyperbolic normal form")
        return r

    def relabel(self, cols, target: LieAlgebra, note: str = "", kind: str = "Relabel"):
        """Apply a fixed isomorphism current -> target given by columns."""
        src = self.current_algebra()
        field = self.field
        n = src.dim
        M = Matrix.zeros(field, n, n)
        for j, col in enumerate(cols):
            for i, val in col.items():
                M.data[i - 1][j] = field.el(val)
        try:
            step = LinearMap(src, target, M).verify()
        except Exception as exc:
            raise InternalInvariantViolated(f"relabelling failed: {note}") from exc
        self.total = step.matrix * self.total
        self.relabelled = target
        self.steps.append(NormalizationStep(kind, M, note, M))

    def expect(self, dicts, note: str = ""):
        """Assert the cocycles now equal the given tuple exactly."""
        want = [SkewForm.from_dict(self.N, d) for d in dicts]
        ok = all(e == w for e, w in zip(self.etas, want))
        self.require(ok, note or "normal form not reached")

    def finish_plain(self, idx_pair) -> catalog.CatalogId:
        cid = catalog.CatalogId(self.field, *idx_pair)
        target = catalog.instantiate(cid)
        self.require(
            self.current_algebra() == target,
            f"normal form does not match the {cid.label()} table",
        )
        self.relabelled = target
        return cid

    def finish_param(self, idx_pair, eps) -> catalog.CatalogId:
        """Land on a parametric family member, then canonicalize eps."""
        dim, idx = idx_pair
        eps = self.field.el(eps)
        raw = catalog.raw_table(self.field, dim, idx, eps)
        self.require(
            self.current_algebra() == raw,
            f"normal form does not match the L{dim},{idx} family table",
        )
        cid = catalog.CatalogId(self.field, dim, idx, eps)
        if cid.param != eps:
            step = catalog.scaling_iso(self.field, dim, idx, eps, cid.param)
            self.total = step.matrix * self.total
            self.steps.append(
                NormalizationStep(
                    "ScaleParam",
                    step.matrix,
                    f"parameter {eps} moved to class representative {cid.param}",
                    step.matrix,
                )
            )
        self.relabelled = catalog.instantiate(cid)
        return cid


# Direct sums: (core id key, abelian dimension) -> catalog key.
_SUM_LOOKUP = {
    ((3, 2), 1): (4, 2),
    ((3, 2), 2): (5, 2),
    ((3, 2), 3): (6, 2),
    ((4, 3), 1): (5, 3),
    ((4, 3), 2): (6, 3),
    ((5, 4), 1): (6, 4),
    ((5, 5), 1): (6, 5),
    ((5, 6), 1): (6, 6),
    ((5, 7), 1): (6, 7),
    ((5, 8), 1): (6, 8),
    ((5, 9), 1): (6, 9),
}


def transport(theta: SkewForm, N: LieAlgebra, tau_inv: Matrix) -> SkewForm:
    """theta composed with the inverse of the quotient recognition map."""
    G = tau_inv.transpose() * theta.gram() * tau_inv
    return SkewForm(N, [G.data[i][j] for (i, j) in pairs(N.dim)])


def recognize(K: LieAlgebra) -> RecognitionResult:
    """Catalog class of K with an explicit verified isomorphism onto it."""
    if not 1 <= K.dim <= 6:
        raise DimTooLarge(f"recognition covers dimensions 1..6, got {K.dim}")
    bad = K.validate()
    if bad is not None:
        raise NotALieAlgebra(str(bad))
    if not K.is_nilpotent:
        raise NotNilpotent("input algebra is not nilpotent")
    return _recognize_checked(K)


def _recognize_checked(K: LieAlgebra) -> RecognitionResult:
    from .normalizers import DISPATCH  # deferred: normalizers import this module

    field = K.field
    n = K.dim

    if K.is_abelian:
        cid = catalog.CatalogId(field, n, 1)
        iso = LinearMap(K, catalog.instantiate(cid), Matrix.identity(field, n))
        return RecognitionResult(cid, iso.verify(), [])

    core, d, split = K.strip_central_component()
    if d > 0:
        sub = _recognize_checked(core)
        key = (sub.id.key, d)
        if key not in _SUM_LOOKUP:
            raise InternalInvariantViolated(f"unexpected direct sum shape {key}")
        cid = catalog.CatalogId(field, *_SUM_LOOKUP[key])
        target = catalog.instantiate(cid)
        expected = catalog.instantiate(sub.id).direct_sum(
            LieAlgebra.abelian(field, d)
        )
        if target != expected:
            raise InternalInvariantViolated("direct sum table mismatch")
        M = sub.iso.matrix.block_diag(Matrix.identity(field, d)) * split.matrix
        iso = LinearMap(K, target, M).verify()
        trace = [
            NormalizationStep(
                "QuotientRecognize",
                split.matrix,
                f"split off an abelian summand of dimension {d}",
                M,
            )
        ] + sub.trace
        return RecognitionResult(cid, iso, trace)

    Q, thetas, phi = factor_by_center(K)
    s = len(thetas)
    sub = _recognize_checked(Q)
    key = (sub.id.key[0], sub.id.key[1], s)
    if key not in DISPATCH:
        raise InternalInvariantViolated(
            f"no central extensions of {sub.id.label()} with centre dimension {s}"
        )
    rep_dicts, case = DISPATCH[key]
    N = catalog.instantiate(sub.id)
    tau = sub.iso.matrix
    tau_inv = tau.invert()
    etas = [transport(th, N, tau_inv) for th in thetas]
    tau_hat = tau.block_diag(Matrix.identity(field, s))

    eng = NormEngine((sub.id.key[0], sub.id.key[1]), N, etas, rep_dicts)
    cid = case(eng)

    total = eng.total * tau_hat * phi.matrix
    iso = LinearMap(K, catalog.instantiate(cid), total).verify()
    trace = [
        NormalizationStep(
            "QuotientRecognize",
            tau,
            f"quotient by the centre recognized as {sub.id.label()}",
            tau_hat * phi.matrix,
        )
    ] + sub.trace + eng.steps
    return RecognitionResult(cid, iso, trace)

"""Skew bilinear forms, cocycles, central extensions and their isomorphisms.

Coefficients of skew forms live on the basis of elementary forms indexed by
pairs (i, j), i < j, in lexicographic order.  The module computes the space
of cocycles and coboundaries of an algebra, builds central extensions, and
houses the two elementary isomorphism constructions between extensions:
the coboundary shift and the (automorphism, centre base change, functional)
assembly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import Eq1Violated, NotACocycle, NotAnAutomorphism
from .field import FieldElem
from .liealg import LieAlgebra, LinearMap, Subspace, _basis_vec, _extends
from .linalg import Matrix, is_zero_vec, zero_vec


@lru_cache(maxsize=None)
def pairs(n: int):
    """Index pairs (i, j), i < j, 0-based, lexicographic."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


@lru_cache(maxsize=None)
def pair_index(n: int):
    return {p: a for a, p in enumerate(pairs(n))}


class SkewForm:
    """Skew-symmetric bilinear form on a fixed algebra's basis."""

    __slots__ = ("base", "coeffs")

    def __init__(self, base: LieAlgebra, coeffs):
        self.base = base
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != len(pairs(base.dim)):
            raise ValueError("coefficient vector has the wrong length")

    @classmethod
    def from_dict(cls, base: LieAlgebra, d: dict) -> "SkewForm":
        """Build from {(i, j): coeff} with 1-based indices, i < j."""
        idx = pair_index(base.dim)
        c = [base.field.zero()] * len(idx)
        for (i, j), val in d.items():
            c[idx[(i - 1, j - 1)]] = base.field.el(val)
        return cls(base, c)

    @classmethod
    def zero(cls, base: LieAlgebra) -> "SkewForm":
        return cls(base, [base.field.zero()] * len(pairs(base.dim)))

    def value(self, i: int, j: int) -> FieldElem:
        if i == j:
            return self.base.field.zero()
        idx = pair_index(self.base.dim)
        if i < j:
            return self.coeffs[idx[(i, j)]]
        return -self.coeffs[idx[(j, i)]]

    def gram(self) -> Matrix:
        n = self.base.dim
        return Matrix(
            self.base.field,
            [[self.value(i, j) for j in range(n)] for i in range(n)],
        )

    def eval(self, u, v) -> FieldElem:
        s = self.base.field.zero()
        for a, (i, j) in enumerate(pairs(self.base.dim)):
            c = self.coeffs[a]
            if c.v:
                s = s + c * (u[i] * v[j] - u[j] * v[i])
        return s

    def pullback(self, M: Matrix) -> "SkewForm":
        """The form (x, y) -> self(Mx, My)."""
        G = M.transpose() * self.gram() * M
        return SkewForm(
            self.base, [G.data[i][j] for (i, j) in pairs(self.base.dim)]
        )

    def radical(self) -> Subspace:
        """{x : theta(x, y) = 0 for all y}."""
        return Subspace.from_spanning(
            self.base.field, self.base.dim, self.gram().kernel()
        )

    def is_cocycle(self) -> bool:
        L = self.base
        n = L.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = (
                        self.eval(L.bracket_basis(i, j), _basis_vec(L.field, n, k))
                        + self.eval(L.bracket_basis(k, i), _basis_vec(L.field, n, j))
                        + self.eval(L.bracket_basis(j, k), _basis_vec(L.field, n, i))
                    )
                    if s.v:
                        return False
        return True

    def __add__(self, other: "SkewForm") -> "SkewForm":
        return SkewForm(self.base, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "SkewForm") -> "SkewForm":
        return SkewForm(self.base, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c: FieldElem) -> "SkewForm":
        return SkewForm(self.base, [c * a for a in self.coeffs])

    def is_zero(self) -> bool:
        return is_zero_vec(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, SkewForm)
            and self.base.dim == other.base.dim
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = [
            f"{c}*D{i + 1}{j + 1}"
            for c, (i, j) in zip(self.coeffs, pairs(self.base.dim))
            if c.v
        ]
        return " + ".join(terms) or "0"


@dataclass
class CohomologySpaces:
    base: LieAlgebra
    z2: list  # SkewForm basis of the cocycle space
    b2: list  # SkewForm basis of the coboundary space
    h2reps: list  # canonical complement of b2 inside z2

    @property
    def dim_z2(self) -> int:
        return len(self.z2)

    @property
    def dim_b2(self) -> int:
        return len(self.b2)

    @property
    def dim_h2(self) -> int:
        return len(self.h2reps)


def coboundary_basis_vectors(L: LieAlgebra):
    """For each m, the form (x, y) -> coefficient of x_m in [x, y]."""
    ps = pairs(L.dim)
    return [tuple(L.bracket_basis(i, j)[m] for (i, j) in ps) for m in range(L.dim)]


def compute_spaces(L: LieAlgebra) -> CohomologySpaces:
    """Cocycles, coboundaries and canonical quotient representatives."""
    if "coh" in L._cache:
        return L._cache["coh"]
    n = L.dim
    ps = pairs(n)
    idx = pair_index(n)
    field = L.field
    zero = field.zero()

    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                row = [zero] * len(ps)
                for (a, b, c) in ((i, j, k), (k, i, j), (j, k, i)):
                    w = L.bracket_basis(a, b)
                    for l in range(n):
                        if w[l].v and l != c:
                            if l < c:
                                row[idx[(l, c)]] = row[idx[(l, c)]] + w[l]
                            else:
                                row[idx[(c, l)]] = row[idx[(c, l)]] - w[l]
                rows.append(row)
    z2_vecs = Matrix(field, rows).kernel() if rows else [
        _basis_vec(field, len(ps), a) for a in range(len(ps))
    ]

    b2_span = Subspace.from_spanning(field, len(ps), coboundary_basis_vectors(L))
    b2_vecs = list(b2_span.basis)

    reps = []
    cur = [list(v) for v in b2_vecs]
    for z in z2_vecs:
        if _extends(field, cur, z):
            reps.append(z)
            cur.append(list(z))

    out = CohomologySpaces(
        base=L,
        z2=[SkewForm(L, v) for v in z2_vecs],
        b2=[SkewForm(L, v) for v in b2_vecs],
        h2reps=[SkewForm(L, v) for v in reps],
    )
    L._cache["coh"] = out
    return out


def recover_functional(L: LieAlgebra, cob: SkewForm):
    """A linear functional nu with nu([x, y]) = cob(x, y), or None."""
    cols = coboundary_basis_vectors(L)
    M = Matrix(L.field, [[cols[m][a] for m in range(L.dim)] for a in range(len(cols[0]))])
    return M.solve(list(cob.coeffs))


def joint_radical(thetas) -> Subspace:
    """Intersection of the radicals of a list of forms on one base."""
    rad = thetas[0].radical()
    for th in thetas[1:]:
        rad = rad.intersect(th.radical())
    return rad


def central_extension(L: LieAlgebra, thetas, check: bool = True):
    """The extension of L by s central generators, one per cocycle.

    Returns (K, embed) where K has basis (x_1..x_n, e_1..e_s) and embed is
    the linear section x_i -> x_i (not in general a homomorphism).
    """
    for th in thetas:
        if th.base is not L and th.base != L:
            raise ValueError("cocycle on a different base algebra")
        if check and not th.is_cocycle():
            raise NotACocycle(f"{th} violates the cocycle identity")
    n, s = L.dim, len(thetas)
    zero = L.field.zero()
    tab = [[None] * (n + s) for _ in range(n + s)]
    for i in range(n + s):
        for j in range(i + 1, n + s):
            tab[i][j] = (zero,) * (n + s)
    for i in range(n):
        for j in range(i + 1, n):
            ext = tuple(th.value(i, j) for th in thetas)
            tab[i][j] = L.bracket_basis(i, j) + ext
    K = LieAlgebra(L.field, n + s, tab)
    embed = Matrix(
        L.field,
        [[L.field.one() if i == j else zero for j in range(n)] for i in range(n + s)],
    )
    return K, LinearMap(L, K, embed)


def extension_center_ok(L: LieAlgebra, thetas) -> bool:
    """True iff the centre of the extension is exactly the new summand."""
    return joint_radical(thetas).intersect(L.center()).dim == 0


def no_central_component(L: LieAlgebra, thetas) -> bool:
    """True iff the cocycles are independent modulo coboundaries."""
    coh = compute_spaces(L)
    cur = [list(f.coeffs) for f in coh.b2]
    for th in thetas:
        if not _extends(L.field, cur, th.coeffs):
            return False
        cur.append(list(th.coeffs))
    return True


def aut_action(phi: Matrix, theta: SkewForm) -> SkewForm:
    """Pullback of theta through a verified automorphism of its base."""
    L = theta.base
    if not LinearMap(L, L, phi).is_isomorphism():
        raise NotAnAutomorphism("matrix is not an automorphism of the base")
    return theta.pullback(phi)


def coboundary_shift_iso(L: LieAlgebra, thetas, nus) -> LinearMap:
    """Isomorphism from ext(L, thetas) to ext(L, thetas + nu o bracket).

    nus is one functional (coordinate tuple on L) per cocycle.
    """
    n, s = L.dim, len(thetas)
    shifted = []
    for th, nu in zip(thetas, nus):
        cob = SkewForm(
            L,
            [
                sum((nu[k] * L.bracket_basis(i, j)[k] for k in range(n)), L.field.zero())
                for (i, j) in pairs(n)
            ],
        )
        shifted.append(th + cob)
    K1, _ = central_extension(L, thetas)
    K2, _ = central_extension(L, shifted)
    M = Matrix.identity(L.field, n + s)
    for l in range(s):
        for i in range(n):
            M.data[n + l][i] = nus[l][i]
    return LinearMap(K1, K2, M).verify()


def assemble_iso(L: LieAlgebra, thetas, etas, phi: Matrix, A: Matrix, B: Matrix) -> LinearMap:
    """Isomorphism ext(L, thetas) -> ext(L, etas) from compatible data.

    phi is an automorphism of L, A the s x s centre base change, B the
    n x s matrix of functional values.  The compatibility equation

        eta_l(phi x_i, phi x_j) = sum_k A[l][k] theta_k(x_i, x_j)
                                  + sum_k c_ij^k B[k][l]

    is checked exactly for every pair and raises Eq1Violated on failure.
    """
    n, s = L.dim, len(thetas)
    if not LinearMap(L, L, phi).is_isomorphism():
        raise NotAnAutomorphism("phi is not an automorphism of the base")
    pulled = [e.pullback(phi) for e in etas]
    for l in range(s):
        for (i, j) in pairs(n):
            lhs = pulled[l].value(i, j)
            rhs = L.field.zero()
            for k in range(s):
                rhs = rhs + A.data[l][k] * thetas[k].value(i, j)
            w = L.bracket_basis(i, j)
            for k in range(n):
                if w[k].v:
                    rhs = rhs + w[k] * B.data[k][l]
            if lhs != rhs:
                raise Eq1Violated(
                    f"compatibility fails at l={l + 1}, pair ({i + 1},{j + 1})"
                )
    K1, _ = central_extension(L, thetas)
    K2, _ = central_extension(L, etas)
    zero = L.field.zero()
    rows = []
    for i in range(n):
        rows.append([phi.data[i][j] for j in range(n)] + [zero] * s)
    for l in range(s):
        rows.append([B.data[k][l] for k in range(n)] + [A.data[j][l] for j in range(s)])
    return LinearMap(K1, K2, Matrix(L.field, rows)).verify()


def factor_by_center(K: LieAlgebra):
    """Present K as a central extension of K / C(K).

    Returns (Q, thetas, phi) with phi : K -> ext(Q, thetas) a verified
    isomorphism; thetas are the cocycles cut out by the canonical section.
    """
    C = K.center()
    Q, proj, sect = K.quotient(C)
    n, s = Q.dim, C.dim
    ps = pairs(n)
    coeff_rows = [[] for _ in range(s)]
    for (a, b) in ps:
        w = K.bracket(sect.matrix.col(a), sect.matrix.col(b))
        # [sigma x, sigma y] - sigma([x, y]) lies in the centre
        diff = tuple(
            wi - si
            for wi, si in zip(w, sect.apply(Q.bracket_basis(a, b)))
        )
        coords = C.coords_of(diff)
        if coords is None:
            raise NotACocycle("section defect left the centre; not an extension")
        for l in range(s):
            coeff_rows[l].append(coords[l])
    thetas = [SkewForm(Q, row) for row in coeff_rows]
    ext, _ = central_extension(Q, thetas)
    rows = [list(proj.matrix.data[a]) for a in range(n)]
    sp = sect.matrix * proj.matrix
    centre_cols = []
    for i in range(K.dim):
        resid = tuple(
            K.field.el(1 if r == i else 0) - sp.data[r][i] for r in range(K.dim)
        )
        centre_cols.append(C.coords_of(resid))
    for l in range(s):
        rows.append([centre_cols[i][l] for i in range(K.dim)])
    phi = LinearMap(K, ext, Matrix(K.field, rows)).verify()
    return Q, thetas, phi

"""Lie algebras given by structure constants, and their structural maps.

Tables are stored for i < j only and extended by antisymmetry.  Subspaces
keep their basis in reduced row echelon form, which makes equality and
membership tests canonical.  All objects are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MixedFields, NotAnIdeal, NotAnAutomorphism
from .field import FieldCtx, FieldElem
from .linalg import Matrix, add_vec, is_zero_vec, scale_vec, zero_vec


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple  # 1-based basis indices
    defect: tuple  # coordinates of the Jacobi sum

    def __str__(self):
        i, j, k = self.triple
        return f"Jacobi fails on (x{i}, x{j}, x{k}): defect {list(self.defect)}"


class LieAlgebra:
    """Structure-constant Lie algebra over an exact field."""

    __slots__ = ("field", "dim", "_tab", "_cache")

    def __init__(self, field: FieldCtx, dim: int, tab):
        # tab[i][j] for i < j is the coordinate vector of [x_i, x_j]
        self.field = field
        self.dim = dim
        self._tab = tab
        self._cache = {}

    @classmethod
    def from_table(cls, field: FieldCtx, dim: int, brackets: dict) -> "LieAlgebra":
        """Build from {(i, j): {k: coeff}} with 1-based indices, i < j."""
        zero = field.zero()
        tab = [[None] * dim for _ in range(dim)]
        for i in range(dim):
            for j in range(i + 1, dim):
                tab[i][j] = (zero,) * dim
        for (i, j), comps in brackets.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"bad bracket indices ({i}, {j})")
            v = [zero] * dim
            for k, c in comps.items():
                if not 1 <= k <= dim:
                    raise ValueError(f"bad component index {k}")
                v[k - 1] = field.el(c)
            tab[i - 1][j - 1] = tuple(v)
        return cls(field, dim, tab)

    @classmethod
    def abelian(cls, field: FieldCtx, dim: int) -> "LieAlgebra":
        return cls.from_table(field, dim, {})

    def bracket_basis(self, i: int, j: int):
        """[x_i, x_j] for 0-based indices."""
        if i == j:
            return zero_vec(self.field, self.dim)
        if i < j:
            return self._tab[i][j]
        return tuple(-x for x in self._tab[j][i])

    def bracket(self, u, v):
        """Bilinear extension of the table to coordinate vectors."""
        out = list(zero_vec(self.field, self.dim))
        n = self.dim
        for i in range(n):
            ui = u[i]
            for j in range(i + 1, n):
                c = ui * v[j] - u[j] * v[i]
                if c.v:
                    w = self._tab[i][j]
                    for k in range(n):
                        if w[k].v:
                            out[k] = out[k] + c * w[k]
        return tuple(out)

    def structure_constant(self, i: int, j: int, k: int) -> FieldElem:
        return self.bracket_basis(i, j)[k]

    def __eq__(self, other):
        return (
            isinstance(other, LieAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and all(
                self._tab[i][j] == other._tab[i][j]
                for i in range(self.dim)
                for j in range(i + 1, self.dim)
            )
        )

    def __repr__(self):
        parts = []
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                terms = [
                    f"{c}*x{k + 1}"
                    for k, c in enumerate(self._tab[i][j])
                    if c.v
                ]
                if terms:
                    parts.append(f"[x{i + 1},x{j + 1}]={'+'.join(terms)}")
        return f"LieAlgebra(dim={self.dim}, {', '.join(parts) or 'abelian'})"

    # -- validation and invariants ----------------------------------------

    def validate(self) -> JacobiViolation | None:
        """None when the Jacobi identity holds on every basis triple."""
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    s = add_vec(
                        self.bracket(self.bracket_basis(i, j), _basis_vec(self.field, n, k)),
                        self.bracket(self.bracket_basis(k, i), _basis_vec(self.field, n, j)),
                    )
                    s = add_vec(
                        s,
                        self.bracket(self.bracket_basis(j, k), _basis_vec(self.field, n, i)),
                    )
                    if not is_zero_vec(s):
                        return JacobiViolation((i + 1, j + 1, k + 1), s)
        return None

    @property
    def is_abelian(self) -> bool:
        return all(
            is_zero_vec(self._tab[i][j])
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def center(self) -> "Subspace":
        if "center" in self._cache:
            return self._cache["center"]
        n = self.dim
        rows = []
        for j in range(n):
            cols = [self.bracket_basis(i, j) for i in range(n)]
            for k in range(n):
                rows.append([cols[i][k] for i in range(n)])
        ker = Matrix(self.field, rows).kernel() if rows else []
        out = Subspace.from_spanning(self.field, n, ker)
        self._cache["center"] = out
        return out

    def derived_subalgebra(self) -> "Subspace":
        gens = [
            self._tab[i][j]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        ]
        return Subspace.from_spanning(self.field, self.dim, gens)

    def lower_central_series(self) -> list["Subspace"]:
        if "lcs" in self._cache:
            return self._cache["lcs"]
        n = self.dim
        full = Subspace.from_spanning(
            self.field, n, [_basis_vec(self.field, n, i) for i in range(n)]
        )
        series = [full]
        cur = full
        while cur.dim > 0:
            gens = []
            for b in cur.basis:
                for i in range(n):
                    gens.append(self.bracket(_basis_vec(self.field, n, i), b))
            nxt = Subspace.from_spanning(self.field, n, gens)
            if nxt.dim == cur.dim:
                series.append(nxt)
                break
            series.append(nxt)
            cur = nxt
        self._cache["lcs"] = series
        return series

    def derived_series(self) -> list["Subspace"]:
        n = self.dim
        full = Subspace.from_spanning(
            self.field, n, [_basis_vec(self.field, n, i) for i in range(n)]
        )
        series = [full]
        cur = full
        while cur.dim > 0:
            gens = []
            bs = cur.basis
            for a in range(len(bs)):
                for b in range(a + 1, len(bs)):
                    gens.append(self.bracket(bs[a], bs[b]))
            nxt = Subspace.from_spanning(self.field, n, gens)
            if nxt.dim == cur.dim:
                series.append(nxt)
                break
            series.append(nxt)
            cur = nxt
        return series

    @property
    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].dim == 0

    # -- constructions -----------------------------------------------------

    def quotient(self, ideal: "Subspace"):
        """(Q, proj, section) for an ideal; section hits the coordinate
        complement of the ideal's pivot columns."""
        n = self.dim
        for b in ideal.basis:
            for i in range(n):
                if not ideal.contains(self.bracket(_basis_vec(self.field, n, i), b)):
                    raise NotAnIdeal("subspace is not an ideal")
        pivots = ideal.pivots
        comp = [c for c in range(n) if c not in pivots]
        m = len(comp)
        zero, one = self.field.zero(), self.field.one()
        proj_rows = []
        for a in range(m):
            row = [zero] * n
            row[comp[a]] = one
            for r, pc in enumerate(pivots):
                row[pc] = -ideal.basis[r][comp[a]]
            proj_rows.append(row)
        proj_mat = Matrix(self.field, proj_rows, cols=n)
        sect_rows = [[zero] * m for _ in range(n)]
        for a in range(m):
            sect_rows[comp[a]][a] = one
        sect_mat = Matrix(self.field, sect_rows)
        tab = [[None] * m for _ in range(m)]
        for a in range(m):
            for b in range(a + 1, m):
                w = self.bracket(
                    _basis_vec(self.field, n, comp[a]),
                    _basis_vec(self.field, n, comp[b]),
                )
                tab[a][b] = proj_mat.matvec(w)
        Q = LieAlgebra(self.field, m, tab)
        return Q, LinearMap(self, Q, proj_mat), LinearMap(Q, self, sect_mat)

    def direct_sum(self, other: "LieAlgebra") -> "LieAlgebra":
        if self.field != other.field:
            raise MixedFields("direct sum over different fields")
        n, m = self.dim, other.dim
        zero = self.field.zero()
        tab = [[None] * (n + m) for _ in range(n + m)]
        for i in range(n + m):
            for j in range(i + 1, n + m):
                tab[i][j] = (zero,) * (n + m)
        for i in range(n):
            for j in range(i + 1, n):
                tab[i][j] = self._tab[i][j] + (zero,) * m
        for i in range(m):
            for j in range(i + 1, m):
                tab[n + i][n + j] = (zero,) * n + other._tab[i][j]
        return LieAlgebra(self.field, n + m, tab)

    def change_basis(self, P: Matrix) -> "LieAlgebra":
        """Table with respect to the new basis y_j = sum_i P[i][j] x_i."""
        n = self.dim
        Pinv = P.invert()
        cols = [P.col(j) for j in range(n)]
        tab = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                tab[a][b] = Pinv.matvec(self.bracket(cols[a], cols[b]))
        return LieAlgebra(self.field, n, tab)

    def strip_central_component(self):
        """(core, abelian_dim, iso : self -> core + abelian summand).

        The abelian summand is a complement of C(K) intersected with [K, K]
        inside C(K); the core keeps the whole derived subalgebra.
        """
        n = self.dim
        Z = self.center()
        D = self.derived_subalgebra()
        W = Z.intersect(D)
        d = Z.dim - W.dim
        if d == 0:
            ident = LinearMap(self, self, Matrix.identity(self.field, n))
            return self, 0, ident
        cur = [list(b) for b in W.basis]
        U = []
        for z in Z.basis:
            if _extends(self.field, cur, z):
                U.append(z)
                cur.append(list(z))
        cur = [list(u) for u in U]
        K1 = []
        for b in D.basis:
            if _extends(self.field, cur, b):
                K1.append(b)
                cur.append(list(b))
        for i in range(n):
            e = _basis_vec(self.field, n, i)
            if _extends(self.field, cur, e):
                K1.append(e)
                cur.append(list(e))
        m = len(K1)
        cols = K1 + U
        basis_mat = Matrix(self.field, [[cols[j][i] for j in range(n)] for i in range(n)])
        coords = basis_mat.invert()
        core_tab = [[None] * m for _ in range(m)]
        for a in range(m):
            for b in range(a + 1, m):
                w = coords.matvec(self.bracket(K1[a], K1[b]))
                core_tab[a][b] = w[:m]
        core = LieAlgebra(self.field, m, core_tab)
        target = core.direct_sum(LieAlgebra.abelian(self.field, d))
        return core, d, LinearMap(self, target, coords)


def _basis_vec(field: FieldCtx, n: int, i: int):
    zero = field.zero()
    return tuple(field.one() if j == i else zero for j in range(n))


def _extends(field: FieldCtx, rows, v) -> bool:
    """True when v is independent of the span of rows."""
    if not rows:
        return not is_zero_vec(v)
    M = Matrix(field, rows + [list(v)])
    return M.rank() == len(rows) + 1


class Subspace:
    """Subspace of F^n with canonical (RREF) basis."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldCtx, ambient_dim: int, basis, pivots):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def from_spanning(cls, field: FieldCtx, ambient_dim: int, vectors) -> "Subspace":
        vectors = [v for v in vectors if not is_zero_vec(v)]
        if not vectors:
            return cls(field, ambient_dim, (), ())
        R, pivots, rank = Matrix(field, vectors).rref()
        return cls(
            field,
            ambient_dim,
            tuple(tuple(R.data[i]) for i in range(rank)),
            pivots[:rank],
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        w = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            if c.v:
                for i in range(self.ambient_dim):
                    w[i] = w[i] - c * row[i]
        return is_zero_vec(w)

    def coords_of(self, v):
        """Coefficients of v in the RREF basis, or None when v is outside."""
        w = list(v)
        out = []
        for row, pc in zip(self.basis, self.pivots):
            c = w[pc]
            out.append(c)
            if c.v:
                for i in range(self.ambient_dim):
                    w[i] = w[i] - c * row[i]
        if not is_zero_vec(w):
            return None
        return tuple(out)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.dim == 0 or other.dim == 0:
            return Subspace(self.field, self.ambient_dim, (), ())
        a, b = len(self.basis), len(other.basis)
        rows = []
        for i in range(self.ambient_dim):
            rows.append(
                [self.basis[r][i] for r in range(a)]
                + [-other.basis[r][i] for r in range(b)]
            )
        ker = Matrix(self.field, rows).kernel()
        vecs = []
        for k in ker:
            v = zero_vec(self.field, self.ambient_dim)
            for r in range(a):
                v = add_vec(v, scale_vec(k[r], self.basis[r]))
            vecs.append(v)
        return Subspace.from_spanning(self.field, self.ambient_dim, vecs)

    def sum_with(self, other: "Subspace") -> "Subspace":
        return Subspace.from_spanning(
            self.field, self.ambient_dim, list(self.basis) + list(other.basis)
        )

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.ambient_dim})"


class LinearMap:
    """Linear map between two algebras; column i is the image of basis i."""

    __slots__ = ("domain", "codomain", "matrix", "verified")

    def __init__(self, domain: LieAlgebra, codomain: LieAlgebra, matrix: Matrix):
        if matrix.rows != codomain.dim or matrix.cols != domain.dim:
            raise ValueError("matrix shape does not match the algebras")
        self.domain = domain
        self.codomain = codomain
        self.matrix = matrix
        self.verified = False

    def apply(self, v):
        return self.matrix.matvec(v)

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        if inner.codomain.dim != self.domain.dim:
            raise ValueError("maps do not compose")
        return LinearMap(inner.domain, self.codomain, self.matrix * inner.matrix)

    def inverse(self) -> "LinearMap":
        return LinearMap(self.codomain, self.domain, self.matrix.invert())

    def is_homomorphism(self) -> bool:
        n = self.domain.dim
        cols = [self.matrix.col(j) for j in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.apply(self.domain.bracket_basis(i, j))
                rhs = self.codomain.bracket(cols[i], cols[j])
                if lhs != rhs:
                    return False
        return True

    def is_isomorphism(self) -> bool:
        return (
            self.domain.dim == self.codomain.dim
            and self.matrix.is_invertible()
            and self.is_homomorphism()
        )

    def verify(self) -> "LinearMap":
        """Mark verified after an exact isomorphism check; raise otherwise."""
        if not self.is_isomorphism():
            raise NotAnAutomorphism("map is not a Lie algebra isomorphism")
        self.verified = True
        return self

    def __repr__(self):
        return f"LinearMap({self.domain.dim} -> {self.codomain.dim})"

"""Dense exact linear algebra over a FieldCtx.

Everything is small (dimensions stay below ~40), so the implementation
favours determinism and exactness over asymptotics: pivots are the first
nonzero entry in a column, free variables in solve() are set to 0.
"""

from __future__ import annotations

from .errors import MixedFields, Singular
from .field import FieldCtx, FieldElem


class Matrix:
    """Immutable-by-convention dense matrix of FieldElem entries."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: FieldCtx, data, cols: int | None = None):
        self.field = field
        self.data = [list(row) for row in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else (cols or 0)
        for row in self.data:
            if len(row) != self.cols:
                raise ValueError("ragged rows")

    @classmethod
    def from_rows(cls, field: FieldCtx, rows) -> "Matrix":
        return cls(field, [[field.el(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, field: FieldCtx, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldCtx, rows: int, cols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, [[zero] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def row(self, i):
        return tuple(self.data[i])

    def col(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.data[i][j] == other.data[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Matrix[{body}]"

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise MixedFields("matrices over different fields")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(
            self.field,
            [
                [self.data[i][j] + other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(
            self.field,
            [
                [self.data[i][j] - other.data[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ],
        )

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-x for x in row] for row in self.data])

    def scale(self, c: FieldElem) -> "Matrix":
        return Matrix(self.field, [[c * x for x in row] for row in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = self.field.zero()
        bdata = other.data
        out = []
        for arow in self.data:
            orow = []
            for j in range(other.cols):
                s = zero
                for k in range(self.cols):
                    a = arow[k]
                    if a.v:
                        s = s + a * bdata[k][j]
                orow.append(s)
            out.append(orow)
        return Matrix(self.field, out, cols=other.cols)

    def matvec(self, v):
        """Apply to a coordinate vector (tuple of FieldElem)."""
        zero = self.field.zero()
        out = []
        for row in self.data:
            s = zero
            for a, x in zip(row, v):
                if a.v and x.v:
                    s = s + a * x
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def augment(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return Matrix(self.field, [a + b for a, b in zip(self.data, other.data)])

    def is_zero(self) -> bool:
        return all(not x.v for row in self.data for x in row)

    # -- elimination -----------------------------------------------------

    def rref(self):
        """Reduced row echelon form: (R, pivot column indices, rank)."""
        m = [row[:] for row in self.data]
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            pr = None
            for i in range(r, rows):
                if m[i][c].v:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c].inv()
            m[r] = [x * inv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c].v:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Matrix(self.field, m, cols=cols), tuple(pivots), r

    def rank(self) -> int:
        return self.rref()[2]

    def kernel(self):
        """Basis of the null space, as a list of coordinate vectors."""
        R, pivots, rank = self.rref()
        zero, one = self.field.zero(), self.field.one()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [zero] * self.cols
            v[fc] = one
            for r, pc in enumerate(pivots):
                v[pc] = -R.data[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """A particular solution of M x = b, or None when inconsistent.

        Free variables are set to 0, so the output is deterministic.
        """
        rhs = Matrix(self.field, [[x] for x in b])
        aug = self.augment(rhs)
        R, pivots, rank = aug.rref()
        if self.cols in pivots:
            return None
        zero = self.field.zero()
        x = [zero] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = R.data[r][self.cols]
        return tuple(x)

    def invert(self) -> "Matrix":
        if self.rows != self.cols:
            raise Singular("only square matrices can be inverted")
        n = self.rows
        aug = self.augment(Matrix.identity(self.field, n))
        R, pivots, rank = aug.rref()
        if rank < n or any(p >= n for p in pivots):
            raise Singular("matrix is singular")
        return Matrix(self.field, [row[n:] for row in R.data])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def block_diag(self, other: "Matrix") -> "Matrix":
        self._check(other)
        zero = self.field.zero()
        out = []
        for row in self.data:
            out.append(row + [zero] * other.cols)
        for row in other.data:
            out.append([zero] * self.cols + row)
        return Matrix(self.field, out)


def vec(field: FieldCtx, entries):
    return tuple(field.el(x) for x in entries)


def zero_vec(field: FieldCtx, n: int):
    return (field.zero(),) * n


def add_vec(a, b):
    return tuple(x + y for x, y in zip(a, b))


def scale_vec(c: FieldElem, a):
    return tuple(c * x for x in a)


def is_zero_vec(a) -> bool:
    return all(not x.v for x in a)

"""Dense exact linear algebra over Q and GF(p).

Everything is small (total dimensions below ~50), so matrices are lists of
rows and elimination is plain Gauss-Jordan with exact scalars.
"""

from __future__ import annotations


class Matrix:
    """Immutable dense matrix; ``data`` is a tuple of row tuples."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, data, cols=None):
        self.field = field
        rows = [tuple(r) for r in data]
        self.rows = len(rows)
        if self.rows:
            self.cols = len(rows[0])
            if any(len(r) != self.cols for r in rows):
                raise ValueError("ragged rows")
        else:
            self.cols = 0 if cols is None else cols
        self.data = tuple(rows)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_cols(cls, field, cols, rows=None):
        cols = [tuple(c) for c in cols]
        if not cols:
            return cls.zeros(field, rows or 0, 0)
        n = len(cols[0])
        if n == 0:
            return cls.zeros(field, 0, len(cols))
        return cls(field, [[c[i] for c in cols] for i in range(n)])

    # -- basics ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in r) for r in self.data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def row(self, i):
        return self.data[i]

    def col(self, j):
        return tuple(r[j] for r in self.data)

    def is_zero(self):
        z = self.field.zero
        return all(x == z for r in self.data for x in r)

    def transpose(self):
        return Matrix(self.field, [self.col(j) for j in range(self.cols)], cols=self.rows)

    def hstack(self, other):
        assert self.rows == other.rows
        return Matrix(self.field, [self.data[i] + other.data[i] for i in range(self.rows)],
                      cols=self.cols + other.cols)

    def vstack(self, other):
        assert self.cols == other.cols
        return Matrix(self.field, self.data + other.data, cols=self.cols)

    def add(self, other):
        f = self.field
        return Matrix(f, [[f.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def sub(self, other):
        f = self.field
        return Matrix(f, [[f.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def scale(self, c):
        f = self.field
        return Matrix(f, [[f.mul(c, x) for x in r] for r in self.data], cols=self.cols)

    def mul(self, other):
        assert self.cols == other.rows, f"{self.cols} != {other.rows}"
        f = self.field
        z = f.zero
        ocols = other.cols
        out = []
        for r in self.data:
            row = [z] * ocols
            for k, a in enumerate(r):
                if a == z:
                    continue
                orow = other.data[k]
                for j in range(ocols):
                    b = orow[j]
                    if b != z:
                        row[j] = f.add(row[j], f.mul(a, b))
            out.append(row)
        return Matrix(f, out, cols=ocols)

    def mul_vec(self, v):
        f = self.field
        z = f.zero
        out = []
        for r in self.data:
            s = z
            for a, x in zip(r, v):
                if a != z and x != z:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return tuple(out)

    # -- elimination ----------------------------------------------------

    def rref(self):
        """Reduced row echelon form: (matrix, pivot columns, rank)."""
        f = self.field
        z = f.zero
        m = [list(r) for r in self.data]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c] != z:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, x) for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != z:
                    k = m[i][c]
                    m[i] = [f.sub(a, f.mul(k, b)) for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(f, m, cols=self.cols), tuple(pivots), r

    def rank(self):
        return self.rref()[2]

    def kernel_basis(self):
        """Basis vectors v with self @ v = 0 (as column vectors)."""
        f = self.field
        z, o = f.zero, f.one
        red, pivots, rank = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = []
        for fc in free:
            v = [z] * self.cols
            v[fc] = o
            for i, pc in enumerate(pivots):
                v[pc] = f.neg(red.data[i][fc])
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """One solution x of self @ x = b, or None."""
        f = self.field
        z = f.zero
        aug = Matrix(f, [self.data[i] + (b[i],) for i in range(self.rows)],
                     cols=self.cols + 1)
        red, pivots, rank = aug.rref()
        if self.cols in pivots:
            return None
        x = [z] * self.cols
        for i, pc in enumerate(pivots):
            x[pc] = red.data[i][self.cols]
        return tuple(x)

    def solve_matrix(self, B):
        """X with self @ X = B, or None."""
        cols = []
        for j in range(B.cols):
            x = self.solve(B.col(j))
            if x is None:
                return None
            cols.append(x)
        return Matrix.from_cols(self.field, cols, rows=self.cols)


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, u):
    return tuple(field.mul(c, x) for x in u)


def zero_vec(field, n):
    return (field.zero,) * n


def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


class Subspace:
    """Subspace of k^n stored by a reduced-echelon row basis."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field, ambient, vectors=()):
        self.field = field
        self.ambient = ambient
        if vectors:
            m = Matrix(field, vectors, cols=ambient)
            red, pivots, rank = m.rref()
            self.basis = red.data[:rank]
            self.pivots = pivots
        else:
            self.basis = ()
            self.pivots = ()

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, v):
        """Residue of v modulo the subspace (echelon reduction)."""
        f = self.field
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c != f.zero:
                for j in range(self.ambient):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return tuple(v)

    def contains(self, v):
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def add_vectors(self, vectors):
        return Subspace(self.field, self.ambient, tuple(self.basis) + tuple(vectors))

    def sum(self, other):
        assert self.ambient == other.ambient
        return self.add_vectors(other.basis)

    def intersect(self, other):
        """U cap V via the kernel of [U^T | -V^T]."""
        assert self.ambient == other.ambient
        f = self.field
        if self.dim == 0 or other.dim == 0:
            return Subspace(f, self.ambient)
        cols = [tuple(b) for b in self.basis] + [vec_scale(f, f.neg(f.one), b) for b in other.basis]
        m = Matrix.from_cols(f, cols, rows=self.ambient)
        vectors = []
        for kv in m.kernel_basis():
            v = zero_vec(f, self.ambient)
            for c, b in zip(kv[: self.dim], self.basis):
                v = vec_add(f, v, vec_scale(f, c, b))
            vectors.append(v)
        return Subspace(f, self.ambient, vectors)

    def complement_in(self, other=None):
        """Coordinate vectors extending self to `other` (default: full space)."""
        f = self.field
        target = other.basis if other is not None else tuple(
            unit_vec(f, self.ambient, i) for i in range(self.ambient))
        out = []
        cur = self
        for v in target:
            if not cur.contains(v):
                out.append(v)
                cur = cur.add_vectors([v])
        return out

    def coords(self, v):
        """Coordinates of v in the echelon basis; None if not a member."""
        f = self.field
        v = list(v)
        out = []
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            out.append(c)
            if c != f.zero:
                for j in range(self.ambient):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        if any(x != f.zero for x in v):
            return None
        return tuple(out)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.basis == other.basis
        )

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient})"

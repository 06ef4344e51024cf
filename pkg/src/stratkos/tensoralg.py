"""Bimodules over degree-0 parts, tensor products over A_0, quadraticity,
tensor-algebra recognition, and the quadratic Koszul complex.

Tensor powers of A_1 over A_0 are realized inside plain k-tensor powers as
quotients by the balancing relations x.a (x) y - x (x) a.y; subspaces like
A_1^i (x) R (x) A_1^j then become images of plain-tensor subspaces, which
keeps every intersection a finite matrix computation.
"""

from __future__ import annotations

from .errors import StratkosError
from .linalg import Matrix, Subspace
from .module import Module


class Bimodule:
    """Finite-dimensional (L, R)-bimodule with explicit action matrices."""

    def __init__(self, left_algebra, right_algebra, dim, left_action, right_action,
                 vertices_left=None, vertices_right=None, name="X"):
        self.left = left_algebra
        self.right = right_algebra
        self.dim = dim
        self.left_action = list(left_action)    # per left basis element
        self.right_action = list(right_action)  # per right basis element
        self.vertex_left = tuple(vertices_left) if vertices_left is not None else None
        self.vertex_right = tuple(vertices_right) if vertices_right is not None else None
        self.name = name
        f = left_algebra.field
        for la in self.left_action:
            for ra in self.right_action:
                if la.mul(ra) != ra.mul(la):
                    raise StratkosError("left and right actions do not commute")

    def left_module(self):
        vl = self.vertex_left
        if vl is None:
            raise StratkosError("bimodule carries no left vertex labels")
        return Module(self.left, self.left_action, vl, None,
                      name=f"{self.name} (left)")

    def right_module(self):
        """The right structure as a left module over the opposite algebra."""
        vr = self.vertex_right
        if vr is None:
            raise StratkosError("bimodule carries no right vertex labels")
        return Module(self.right.opposite(), self.right_action, vr, None,
                      name=f"{self.name} (right)")


def degree_part_bimodule(algebra, d):
    """A_d as an (A_0, A_0)-bimodule over the degree-0 subalgebra."""
    a0, idx = algebra.degree_zero_subalgebra()
    part = algebra.degree_indices(d)
    pos = {i: t for t, i in enumerate(part)}
    f = algebra.field
    n = len(part)
    left = []
    right = []
    for t0, i0 in enumerate(idx):
        cols = []
        for j in part:
            col = [f.zero] * n
            for k, c in algebra.mult.get((i0, j), ()):
                col[pos[k]] = c
            cols.append(col)
        left.append(Matrix.from_cols(f, cols, rows=n))
        cols = []
        for j in part:
            col = [f.zero] * n
            for k, c in algebra.mult.get((j, i0), ()):
                col[pos[k]] = c
            cols.append(col)
        right.append(Matrix.from_cols(f, cols, rows=n))
    vl = [algebra.tgt[i] for i in part]
    vr = [algebra.src[i] for i in part]
    return Bimodule(a0, a0, n, left, right, vl, vr, name=f"A_{d}")


def bimodule_tensor(X, Y, name=None):
    """X (x)_{A_0} Y as the balancing quotient of the plain tensor."""
    if X.right is not Y.left and X.right.mult != Y.left.mult:
        raise StratkosError("tensor needs matching middle algebra")
    mid = X.right
    f = X.left.field
    n = X.dim * Y.dim

    def tid(i, j):
        return i * Y.dim + j

    balancing = []
    for b in range(mid.dim):
        ra = X.right_action[b]
        la = Y.left_action[b]
        for i in range(X.dim):
            for j in range(Y.dim):
                v = [f.zero] * n
                for r in range(X.dim):
                    if ra.data[r][i] != f.zero:
                        v[tid(r, j)] = f.add(v[tid(r, j)], ra.data[r][i])
                for r in range(Y.dim):
                    if la.data[r][j] != f.zero:
                        v[tid(i, r)] = f.sub(v[tid(i, r)], la.data[r][j])
                balancing.append(tuple(v))
    span = Subspace(f, n, balancing)
    pivots = set(span.pivots)
    survivors = [t for t in range(n) if t not in pivots]

    def residue(v):
        r = span.reduce(v)
        return tuple(r[t] for t in survivors)

    dim = len(survivors)
    left = []
    for b in range(X.left.dim):
        la = X.left_action[b]
        cols = []
        for s in survivors:
            i, j = divmod(s, Y.dim)
            v = [f.zero] * n
            for r in range(X.dim):
                if la.data[r][i] != f.zero:
                    v[tid(r, j)] = la.data[r][i]
            cols.append(residue(tuple(v)))
        left.append(Matrix.from_cols(f, cols, rows=dim))
    right = []
    for b in range(Y.right.dim):
        ra = Y.right_action[b]
        cols = []
        for s in survivors:
            i, j = divmod(s, Y.dim)
            v = [f.zero] * n
            for r in range(Y.dim):
                if ra.data[r][j] != f.zero:
                    v[tid(i, r)] = ra.data[r][j]
            cols.append(residue(tuple(v)))
        right.append(Matrix.from_cols(f, cols, rows=dim))
    vl = None
    if X.vertex_left is not None:
        vl = [X.vertex_left[divmod(s, Y.dim)[0]] for s in survivors]
    vr = None
    if Y.vertex_right is not None:
        vr = [Y.vertex_right[divmod(s, Y.dim)[1]] for s in survivors]
    out = Bimodule(X.left, Y.right, dim, left, right, vl, vr,
                   name=name or f"{X.name}(x){Y.name}")
    out._survivors = survivors
    out._balancing = span
    out._factor_dims = (X.dim, Y.dim)
    return out


class TensorTower:
    """Plain-tensor models of A_1^{(x)_{A_0} n} with the multiplication maps.

    Level n lives in (A_1)^{(x)_k n}; ``balancing(n)`` is the subspace of
    balancing relations, ``to_an(n)`` the multiplication onto A_n in
    algebra coordinates restricted to degree n.
    """

    def __init__(self, algebra, max_level):
        self.algebra = algebra
        self.a1 = algebra.degree_indices(1)
        self.f = algebra.field
        self.max_level = max_level
        self._bal = {}
        self._mult = {}

    def plain_dim(self, n):
        return len(self.a1) ** n

    def tuples(self, n):
        from itertools import product
        return list(product(range(len(self.a1)), repeat=n))

    def balancing(self, n):
        """Balancing subspace of the plain n-fold tensor of A_1."""
        if n in self._bal:
            return self._bal[n]
        f, a = self.f, self.algebra
        m = len(self.a1)
        dim = m ** n
        vecs = []
        a0_idx = a.degree_indices(0)
        # adjacent-pair relations x.a (x) y - x (x) a.y written on basis pairs
        for pos in range(n - 1):
            stride = m ** (n - pos - 2)
            for t in self.tuples(n):
                i, j = t[pos], t[pos + 1]
                for b in a0_idx:
                    # (x.b) (x) y at slot (pos, pos+1)
                    v = [f.zero] * dim
                    for k, c in a.mult.get((self.a1[i], b), ()):
                        if a.deg[k] != 1:
                            raise StratkosError("degree drift in balancing")
                        ki = self.a1.index(k)
                        t2 = t[:pos] + (ki,) + t[pos + 1:]
                        v[self._flat(t2)] = f.add(v[self._flat(t2)], c)
                    for k, c in a.mult.get((b, self.a1[j]), ()):
                        ki = self.a1.index(k)
                        t2 = t[:pos + 1] + (ki,) + t[pos + 2:]
                        v[self._flat(t2)] = f.sub(v[self._flat(t2)], c)
                    if any(x != f.zero for x in v):
                        vecs.append(tuple(v))
        # composability: tuples whose adjacent endpoints mismatch are zero
        for t in self.tuples(n):
            bad = False
            for pos in range(n - 1):
                if self.algebra.src[self.a1[t[pos]]] != self.algebra.tgt[self.a1[t[pos + 1]]]:
                    bad = True
                    break
            if bad:
                v = [f.zero] * dim
                v[self._flat(t)] = f.one
                vecs.append(tuple(v))
        sub = Subspace(f, dim, vecs)
        self._bal[n] = sub
        return sub

    def _flat(self, t):
        m = len(self.a1)
        out = 0
        for q in t:
            out = out * m + q
        return out

    def level_dim(self, n):
        if n == 0:
            return len(self.algebra.degree_indices(0))
        return self.plain_dim(n) - self.balancing(n).dim

    def mult_to_algebra(self, n):
        """Matrix of the multiplication (plain tensor)_n -> A (algebra coords)."""
        if n in self._mult:
            return self._mult[n]
        f, a = self.f, self.algebra
        cols = []
        for t in self.tuples(n):
            v = a.unit if n == 0 else None
            vec = None
            for q in t:
                b = a.basis_vector(self.a1[q])
                vec = b if vec is None else a.mult_vec(vec, b)
            cols.append(vec if vec is not None else a.unit)
        m = Matrix.from_cols(f, cols, rows=a.dim)
        self._mult[n] = m
        return m

    def relation_space(self, n):
        """R_n: the kernel of (tensor power)_n -> A_n, containing balancing."""
        f = self.f
        mult = self.mult_to_algebra(n)
        ker = mult.kernel_basis()
        return Subspace(f, self.plain_dim(n), ker)

    def ideal_component(self, n, r2):
        """Sum over i of A_1^i (x) R (x) A_1^{n-i-2} + balancing, inside the
        plain n-tensor.  ``r2`` is a Subspace of the plain 2-tensor."""
        f = self.f
        m = len(self.a1)
        dim = self.plain_dim(n)
        vecs = list(self.balancing(n).basis)
        for i in range(n - 1):
            right_len = n - i - 2
            for pre in self.tuples(i):
                for post in self.tuples(right_len):
                    for rvec in r2.basis:
                        v = [f.zero] * dim
                        for pair_flat, c in enumerate(rvec):
                            if c == f.zero:
                                continue
                            p0, p1 = divmod(pair_flat, m)
                            t = pre + (p0, p1) + post
                            v[self._flat(t)] = f.add(v[self._flat(t)], c)
                        vecs.append(tuple(v))
        return Subspace(f, dim, vecs)


def quadratic_relation_space(algebra):
    """R = ker(A_1 (x)_{A_0} A_1 -> A_2) pulled back to the plain 2-tensor
    (it contains the balancing relations)."""
    tower = TensorTower(algebra, 2)
    return tower.relation_space(2), tower


def is_quadratic(algebra):
    """Kernel of A_0[A_1] -> A generated by its degree-2 component."""
    tower = TensorTower(algebra, 2)
    r2 = tower.relation_space(2)
    n = 3
    while True:
        rn = tower.relation_space(n)
        ideal = tower.ideal_component(n, r2)
        for v in rn.basis:
            if not ideal.contains(v):
                return False
        # once the ideal fills the whole tensor level, it stays full
        if ideal.dim == tower.plain_dim(n):
            return True
        if rn.dim == tower.plain_dim(n):
            # A_n = 0 from here on; relations are everything and contained
            return True
        if n > algebra.max_degree + 2:
            return True
        n += 1


def tensor_algebra_recognition(algebra):
    """(is tensor algebra, first failing degree or None).

    True iff every multiplication A_1 (x)_{A_0} A_i -> A_{i+1} is bijective.
    """
    maxd = algebra.max_degree
    x1 = degree_part_bimodule(algebra, 1)
    for i in range(1, maxd + 1):
        xi = degree_part_bimodule(algebra, i)
        t = bimodule_tensor(x1, xi)
        target = len(algebra.degree_indices(i + 1))
        # multiplication rank on the quotient tensor
        f = algebra.field
        a1 = algebra.degree_indices(1)
        ai = algebra.degree_indices(i)
        cols = []
        for s in t._survivors:
            p, q = divmod(s, xi.dim)
            prod = algebra.mult_vec(algebra.basis_vector(a1[p]),
                                    algebra.basis_vector(ai[q]))
            cols.append(prod)
        m = Matrix.from_cols(f, cols, rows=algebra.dim)
        if t.dim != target or m.rank() != target:
            return False, i + 1
    return True, None

"""Finite-dimensional algebras given by basis and structure constants.

Every basis element b is sandwiched between vertex idempotents,
b = e_tgt(b) * b * e_src(b), and carries a nonnegative degree.  Products are
written left-of-right acting last: ``a * b`` applies ``b`` first, so a
nonzero product requires ``tgt(b) == src(a)``.
"""

from __future__ import annotations

from .errors import NotDirected, NotSplitField, StratkosError
from .linalg import Matrix, Subspace, unit_vec, vec_add, vec_scale, zero_vec


class Algebra:
    def __init__(self, field, names, src, tgt, deg, vertices, idem, mult,
                 generators=None):
        self.field = field
        self.names = list(names)
        self.dim = len(self.names)
        self.src = list(src)
        self.tgt = list(tgt)
        self.deg = list(deg)
        self.vertices = list(vertices)
        self.idem = list(idem)
        # mult[(i, j)] -> tuple of (k, coeff); absent means zero
        self.mult = {k: tuple(v) for k, v in mult.items() if v}
        self.generators = list(generators) if generators is not None else None
        self._cache = {}
        self._validate_basic()

    # ------------------------------------------------------------------
    # basic structure

    def _validate_basic(self):
        f = self.field
        nv = len(self.vertices)
        assert len(self.idem) == nv
        for v, i in enumerate(self.idem):
            assert self.src[i] == v and self.tgt[i] == v and self.deg[i] == 0, \
                f"idempotent {self.names[i]} badly labeled"
        for (i, j), terms in self.mult.items():
            if self.src[i] != self.tgt[j]:
                raise StratkosError(
                    f"nonzero product {self.names[i]}*{self.names[j]} of non-composable elements")
            for k, c in terms:
                if c == f.zero:
                    continue
                if self.src[k] != self.src[j] or self.tgt[k] != self.tgt[i]:
                    raise StratkosError("product term with wrong endpoints")
                if self.deg[k] != self.deg[i] + self.deg[j]:
                    raise StratkosError(
                        f"product {self.names[i]}*{self.names[j]} breaks the grading")
        # vertex idempotents are orthogonal and act as local units
        for v, i in enumerate(self.idem):
            for w, j in enumerate(self.idem):
                expected = ((i, f.one),) if v == w else ()
                got = tuple((k, c) for k, c in self.mult.get((i, j), ()) if c != f.zero)
                if got != expected:
                    raise StratkosError("vertex idempotents are not orthogonal idempotents")
        for j in range(self.dim):
            et, es = self.idem[self.tgt[j]], self.idem[self.src[j]]
            if self._pure_product(et, j) != ((j, f.one),):
                raise StratkosError(f"e*{self.names[j]} != {self.names[j]}")
            if self._pure_product(j, es) != ((j, f.one),):
                raise StratkosError(f"{self.names[j]}*e != {self.names[j]}")

    def _pure_product(self, i, j):
        return tuple((k, c) for k, c in self.mult.get((i, j), ())
                     if c != self.field.zero)

    @property
    def unit(self):
        v = [self.field.zero] * self.dim
        for i in self.idem:
            v[i] = self.field.one
        return tuple(v)

    def vertex_index(self, label):
        return self.vertices.index(label)

    def basis_vector(self, i):
        return unit_vec(self.field, self.dim, i)

    def mult_vec(self, u, v):
        """Product of two coefficient vectors."""
        f = self.field
        z = f.zero
        out = [z] * self.dim
        for i, a in enumerate(u):
            if a == z:
                continue
            for j, b in enumerate(v):
                if b == z:
                    continue
                ab = f.mul(a, b)
                for k, c in self.mult.get((i, j), ()):
                    out[k] = f.add(out[k], f.mul(ab, c))
        return tuple(out)

    def left_mult_matrix(self, u):
        """Matrix of x -> u*x on the regular module (columns = images of basis)."""
        f = self.field
        cols = []
        for j in range(self.dim):
            col = [f.zero] * self.dim
            for i, a in enumerate(u):
                if a == f.zero:
                    continue
                for k, c in self.mult.get((i, j), ()):
                    col[k] = f.add(col[k], f.mul(a, c))
            cols.append(col)
        return Matrix.from_cols(f, cols, rows=self.dim)

    def right_mult_matrix(self, u):
        f = self.field
        cols = []
        for i in range(self.dim):
            col = [f.zero] * self.dim
            for j, a in enumerate(u):
                if a == f.zero:
                    continue
                for k, c in self.mult.get((i, j), ()):
                    col[k] = f.add(col[k], f.mul(a, c))
            cols.append(col)
        return Matrix.from_cols(f, cols, rows=self.dim)

    def check_associativity(self):
        """(ab)c == a(bc) on all basis triples; raises on failure."""
        f = self.field
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.mult.get((i, j), ())
                for k in range(self.dim):
                    jk = self.mult.get((j, k), ())
                    left = [f.zero] * self.dim
                    for m, c in ij:
                        for t, d in self.mult.get((m, k), ()):
                            left[t] = f.add(left[t], f.mul(c, d))
                    right = [f.zero] * self.dim
                    for m, c in jk:
                        for t, d in self.mult.get((i, m), ()):
                            right[t] = f.add(right[t], f.mul(c, d))
                    if left != right:
                        raise StratkosError(
                            f"associativity fails on ({self.names[i]}, {self.names[j]}, {self.names[k]})")
        return True

    @property
    def max_degree(self):
        return max(self.deg) if self.deg else 0

    def degree_indices(self, d):
        return [i for i in range(self.dim) if self.deg[i] == d]

    def block_vectors(self, tgt=None, src=None, deg=None):
        out = []
        for i in range(self.dim):
            if tgt is not None and self.tgt[i] != tgt:
                continue
            if src is not None and self.src[i] != src:
                continue
            if deg is not None and self.deg[i] != deg:
                continue
            out.append(i)
        return out

    def is_generated_in_degrees_01(self):
        """A_1 * A_d spans A_{d+1} for every d."""
        f = self.field
        one_idx = self.degree_indices(1)
        for d in range(self.max_degree):
            target = self.degree_indices(d + 1)
            if not target:
                continue
            prods = []
            for i in one_idx:
                for j in self.degree_indices(d):
                    v = self.mult_vec(self.basis_vector(i), self.basis_vector(j))
                    prods.append(v)
            span = Subspace(f, self.dim, prods)
            if span.dim != len(target):
                return False
        return True

    def __repr__(self):
        return f"Algebra(dim {self.dim}, vertices {self.vertices}, {self.field})"

    # ------------------------------------------------------------------
    # radical and primitive idempotents

    def radical(self):
        """Jacobson radical as a Subspace of the underlying vector space.

        For positively graded algebras rad A = rad(A_0) + (positive part),
        so only degree-0 subalgebras ever hit the general algorithms.
        """
        if "radical" in self._cache:
            return self._cache["radical"]
        if self.max_degree > 0:
            vecs = list(self.degree_zero_radical().basis)
            vecs += [self.basis_vector(i) for i in range(self.dim) if self.deg[i] > 0]
            rad = Subspace(self.field, self.dim, vecs)
        elif self.field.char == 0:
            rad = self._radical_trace_form()
        else:
            rad = self._radical_char_p()
        self._assert_nilpotent_ideal(rad)
        self._cache["radical"] = rad
        return rad

    def _radical_trace_form(self):
        # Dickson: over Q the radical is the kernel of (x, y) -> Tr(L_{xy}).
        f = self.field
        traces = []
        for k in range(self.dim):
            m = self.left_mult_matrix(self.basis_vector(k))
            traces.append(sum((m.data[t][t] for t in range(self.dim)), f.zero))
        rows = []
        for j in range(self.dim):
            row = []
            for i in range(self.dim):
                s = f.zero
                for k, c in self.mult.get((i, j), ()):
                    s = f.add(s, f.mul(c, traces[k]))
                row.append(s)
            rows.append(row)
        ker = Matrix(f, rows, cols=self.dim).kernel_basis()
        return Subspace(f, self.dim, ker)

    def _radical_char_p(self):
        # Cohen-Ivanyos-Wales chain of ideals over GF(p), run on the
        # regular representation with integer lifts.
        f = self.field
        p = f.char
        n = self.dim
        if n == 0:
            return Subspace(f, 0)
        int_left = [[[int(x) for x in row] for row in
                     self.left_mult_matrix(self.basis_vector(i)).data]
                    for i in range(n)]

        def lifted_regular(vec):
            m = [[0] * n for _ in range(n)]
            for i, a in enumerate(vec):
                a = int(a)
                if a == 0:
                    continue
                li = int_left[i]
                for r in range(n):
                    lr = li[r]
                    mr = m[r]
                    for c in range(n):
                        mr[c] += a * lr[c]
            return m

        def int_trace_power(m, e):
            def matmul(a, b):
                return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)]
                        for r in range(n)]
            result = None
            base = m
            while e:
                if e & 1:
                    result = base if result is None else matmul(result, base)
                e >>= 1
                if e:
                    base = matmul(base, base)
            return sum(result[t][t] for t in range(n))

        current = [self.basis_vector(i) for i in range(n)]
        level = 0
        while p ** level <= n:
            q = p ** level
            rows = []
            for y in current:
                row = []
                for x in current:
                    t = int_trace_power(lifted_regular(self.mult_vec(x, y)), q)
                    assert t % q == 0
                    row.append((t // q) % p)
                rows.append(row)
            ker = Matrix(f, rows, cols=len(current)).kernel_basis()
            new = []
            for coeffs in ker:
                v = zero_vec(f, n)
                for c, x in zip(coeffs, current):
                    v = vec_add(f, v, vec_scale(f, c, x))
                new.append(v)
            current = Subspace(f, n, new).basis
            level += 1
            if not current:
                break
        return Subspace(f, n, current)

    def _assert_nilpotent_ideal(self, sub):
        f = self.field
        for v in sub.basis:
            for i in range(self.dim):
                b = self.basis_vector(i)
                if not sub.contains(self.mult_vec(b, v)) or \
                        not sub.contains(self.mult_vec(v, b)):
                    raise StratkosError("computed radical is not an ideal")
        power = sub
        for _ in range(self.dim + 1):
            if power.dim == 0:
                return
            vecs = [self.mult_vec(u, v) for u in power.basis for v in sub.basis]
            power = Subspace(f, self.dim, vecs)
        raise StratkosError("computed radical is not nilpotent")

    def is_semisimple(self):
        return self.radical().dim == 0

    def semisimple_quotient(self):
        """(A/rad A, projection matrix)."""
        if "ss_quotient" not in self._cache:
            self._cache["ss_quotient"] = self.quotient_by_ideal(self.radical())
        return self._cache["ss_quotient"]

    def primitive_idempotents(self):
        """Complete orthogonal set of primitive idempotents refining the
        vertex idempotents; list of (vertex, vector) pairs.

        Representatives are taken inside the degree-0 subalgebra, so they are
        vertex-pure and degree homogeneous.
        """
        if "prims" in self._cache:
            return self._cache["prims"]
        f = self.field
        if self.max_degree > 0:
            a0, idx = self.degree_zero_subalgebra()
            out = []
            for v, e0 in a0.primitive_idempotents():
                e = [f.zero] * self.dim
                for t, i in enumerate(idx):
                    e[i] = e0[t]
                out.append((v, tuple(e)))
            self._cache["prims"] = out
            return out
        quo, proj = self.semisimple_quotient()
        out = []
        for v in range(len(self.vertices)):
            block = quo.block_vectors(tgt=v, src=v)
            if len(block) <= 1:
                out.append((v, self.basis_vector(self.idem[v])))
                continue
            idems_bar = _split_semisimple_block(quo, v, block)
            lifted = []
            for ebar in idems_bar:
                # pull back, sandwich, and orthogonalize against earlier lifts
                e = proj_solve(proj, ebar, f)
                ev = self.basis_vector(self.idem[v])
                e = self.mult_vec(ev, self.mult_vec(e, ev))
                s = zero_vec(f, self.dim)
                for g in lifted:
                    s = vec_add(f, s, g)
                one_minus_s = vec_sub_unit(self, s)
                e = self.mult_vec(one_minus_s, self.mult_vec(e, one_minus_s))
                e = self._newton_idempotent(e)
                lifted.append(e)
            out.extend((v, e) for e in lifted)
        total = zero_vec(f, self.dim)
        for _, e in out:
            total = vec_add(f, total, e)
        assert total == self.unit, "primitive idempotents do not sum to 1"
        for a in range(len(out)):
            for b in range(len(out)):
                prod = self.mult_vec(out[a][1], out[b][1])
                assert prod == (out[a][1] if a == b else zero_vec(f, self.dim))
        self._cache["prims"] = out
        return out

    def _newton_idempotent(self, e):
        f = self.field
        for _ in range(self.dim + 2):
            e2 = self.mult_vec(e, e)
            if e2 == e:
                return e
            e3 = self.mult_vec(e2, e)
            # 3e^2 - 2e^3 works in every characteristic
            e = vec_add(f, vec_scale(f, f.of(3), e2), vec_scale(f, f.of(-2), e3))
        raise StratkosError("idempotent lifting did not converge")

    def has_primitive_vertex_idempotents(self):
        quo, _ = self.semisimple_quotient()
        return all(len(quo.block_vectors(tgt=v, src=v)) <= 1
                   for v in range(len(self.vertices)))

    # ------------------------------------------------------------------
    # derived algebras

    def opposite(self):
        mult = {}
        for (i, j), terms in self.mult.items():
            mult[(j, i)] = terms
        return Algebra(self.field, self.names, self.tgt, self.src, self.deg,
                       self.vertices, self.idem, mult)

    def quotient_by_ideal(self, ideal):
        """(quotient algebra, projection matrix A -> A/I).

        The ideal must be homogeneous for the (tgt, src, deg) block splitting;
        quotient basis elements are classes of surviving basis elements.
        """
        f = self.field
        self._check_block_homogeneous(ideal)
        pivots = set(ideal.pivots)
        survivors = [i for i in range(self.dim) if i not in pivots]
        # classes of pivot coordinates must reduce onto survivors only
        index_of = {i: t for t, i in enumerate(survivors)}

        def residue_coords(v):
            r = ideal.reduce(v)
            return tuple(r[i] for i in survivors)

        names = [self.names[i] for i in survivors]
        src = [self.src[i] for i in survivors]
        tgt = [self.tgt[i] for i in survivors]
        deg = [self.deg[i] for i in survivors]
        alive_vertices = []
        idem = []
        vert_map = {}
        for v in range(len(self.vertices)):
            ei = self.idem[v]
            res = residue_coords(self.basis_vector(ei))
            support = [t for t, c in enumerate(res) if c != f.zero]
            if not support:
                continue
            if len(support) == 1 and res[support[0]] == f.one:
                vert_map[v] = len(alive_vertices)
                alive_vertices.append(self.vertices[v])
                idem.append(support[0])
            else:
                raise StratkosError("vertex idempotent has a non-pure class")
        for t, i in enumerate(survivors):
            if self.src[i] not in vert_map or self.tgt[i] not in vert_map:
                raise StratkosError("surviving element at a dead vertex")
            src[t] = vert_map[self.src[i]]
            tgt[t] = vert_map[self.tgt[i]]
        mult = {}
        for a, i in enumerate(survivors):
            for b, j in enumerate(survivors):
                if self.src[i] != self.tgt[j]:
                    continue
                prod = [f.zero] * self.dim
                for k, c in self.mult.get((i, j), ()):
                    prod[k] = f.add(prod[k], c)
                coords = residue_coords(prod)
                terms = tuple((t, c) for t, c in enumerate(coords) if c != f.zero)
                if terms:
                    mult[(a, b)] = terms
        quo = Algebra(f, names, src, tgt, deg, alive_vertices, idem, mult)
        proj_cols = [residue_coords(self.basis_vector(i)) for i in range(self.dim)]
        proj = Matrix.from_cols(f, proj_cols, rows=len(survivors))
        return quo, proj

    def _check_block_homogeneous(self, sub):
        f = self.field
        for vec in sub.basis:
            blocks = {}
            for i, c in enumerate(vec):
                if c != f.zero:
                    blocks.setdefault((self.tgt[i], self.src[i], self.deg[i]), []).append(i)
            for idxs in blocks.values():
                part = [f.zero] * self.dim
                for i in idxs:
                    part[i] = vec[i]
                if not sub.contains(tuple(part)):
                    raise StratkosError("ideal is not block homogeneous")

    def ideal_closure(self, vectors):
        """Two-sided ideal generated by the given vectors."""
        f = self.field
        span = Subspace(f, self.dim, vectors)
        while True:
            new = []
            for v in span.basis:
                for i in range(self.dim):
                    b = self.basis_vector(i)
                    for w in (self.mult_vec(b, v), self.mult_vec(v, b)):
                        if not span.contains(w):
                            new.append(w)
            if not new:
                return span
            span = span.add_vectors(new)

    def quotient_by_idempotent(self, vertex):
        """A / A e_v A with the induced basis."""
        v = vertex if isinstance(vertex, int) else self.vertex_index(vertex)
        ideal = self.ideal_closure([self.basis_vector(self.idem[v])])
        return self.quotient_by_ideal(ideal)

    def degree_zero_subalgebra(self):
        """(A_0 as an algebra, list of A-basis indices embedding it)."""
        idx = self.degree_indices(0)
        return self._subalgebra(idx), idx

    def vertex_diagonal_subalgebra(self):
        """(sum of e_v A e_v as an algebra, embedding indices)."""
        idx = [i for i in range(self.dim) if self.src[i] == self.tgt[i]]
        return self._subalgebra(idx), idx

    def _subalgebra(self, idx):
        f = self.field
        pos = {i: t for t, i in enumerate(idx)}
        mult = {}
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                terms = []
                for k, c in self.mult.get((i, j), ()):
                    if k not in pos:
                        raise StratkosError("index set is not closed under products")
                    terms.append((pos[k], c))
                if terms:
                    mult[(a, b)] = tuple(terms)
        idem = [pos[self.idem[v]] for v in range(len(self.vertices))]
        return Algebra(f, [self.names[i] for i in idx],
                       [self.src[i] for i in idx], [self.tgt[i] for i in idx],
                       [self.deg[i] for i in idx], self.vertices, idem, mult)

    def degree_zero_radical(self):
        """rad(A_0) embedded as a Subspace of A."""
        if "rad0" in self._cache:
            return self._cache["rad0"]
        a0, idx = self.degree_zero_subalgebra()
        rad0 = a0.radical()
        f = self.field
        vecs = []
        for v in rad0.basis:
            w = [f.zero] * self.dim
            for t, i in enumerate(idx):
                w[i] = v[t]
            vecs.append(tuple(w))
        out = Subspace(f, self.dim, vecs)
        self._cache["rad0"] = out
        return out

    def radical_reduction(self):
        """(A/ArA with r = rad A_0, projection matrix, ideal ArA)."""
        rad0 = self.degree_zero_radical()
        ideal = self.ideal_closure(rad0.basis)
        quo, proj = self.quotient_by_ideal(ideal)
        return quo, proj, ideal

    # ------------------------------------------------------------------
    # directedness and the off-diagonal ideal

    def is_directed(self):
        """Linear extension of the e_mu A e_lambda support order, or None."""
        nv = len(self.vertices)
        edges = {v: set() for v in range(nv)}
        for i in range(self.dim):
            s, t = self.src[i], self.tgt[i]
            if s != t:
                edges[s].add(t)
        indeg = {v: 0 for v in range(nv)}
        for v in range(nv):
            for w in edges[v]:
                indeg[w] += 1
        ready = sorted(v for v in range(nv) if indeg[v] == 0)
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for w in sorted(edges[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
            ready.sort()
        if len(order) != nv:
            return None
        return order

    def offdiagonal_ideal_vectors(self):
        """Basis of J = sum of e_mu A e_lambda over mu != lambda (directed only)."""
        if self.is_directed() is None:
            raise NotDirected("off-diagonal span is only an ideal for directed algebras")
        return [self.basis_vector(i) for i in range(self.dim)
                if self.src[i] != self.tgt[i]]

    def associated_graded(self):
        """Regrade along powers of the off-diagonal ideal J."""
        f = self.field
        jvecs = self.offdiagonal_ideal_vectors()
        filtration = [Subspace(f, self.dim, [self.basis_vector(i) for i in range(self.dim)])]
        cur = Subspace(f, self.dim, jvecs)
        while cur.dim:
            filtration.append(cur)
            nxt = Subspace(f, self.dim,
                           [self.mult_vec(u, v) for u in cur.basis for v in jvecs])
            cur = nxt
        filtration.append(cur)  # zero space

        levels = []  # per level: list of (rep vector, src, tgt)
        for lvl in range(len(filtration) - 1):
            upper, lower = filtration[lvl], filtration[lvl + 1]
            reps = []
            for (t, s) in sorted({(self.tgt[i], self.src[i]) for i in range(self.dim)}):
                block = [v for v in upper.basis
                         if _support_block(self, v) == (t, s)]
                taken = Subspace(f, self.dim, lower.basis)
                for v in block:
                    if not taken.contains(v):
                        reps.append((v, s, t))
                        taken = taken.add_vectors([v])
            levels.append(reps)

        names, src, tgt, deg, reps = [], [], [], [], []
        for lvl, items in enumerate(levels):
            for v, s, t in items:
                support = [i for i, c in enumerate(v) if c != f.zero]
                if len(support) == 1 and v[support[0]] == f.one:
                    names.append(self.names[support[0]])
                else:
                    names.append(f"gr{len(names)}")
                src.append(s)
                tgt.append(t)
                deg.append(lvl)
                reps.append(v)
        if sum(len(it) for it in levels) != self.dim:
            raise StratkosError("graded dimension drifted from dim A")

        # coordinates in the quotient J^l / J^{l+1}
        def coords_in_level(vec, lvl):
            lower = filtration[lvl + 1]
            idx = [t for t in range(len(reps)) if deg[t] == lvl]
            cols = [reps[t] for t in idx] + list(lower.basis)
            m = Matrix.from_cols(f, cols, rows=self.dim)
            sol = m.solve(vec)
            assert sol is not None
            return {idx[a]: sol[a] for a in range(len(idx)) if sol[a] != f.zero}

        mult = {}
        for a in range(len(reps)):
            for b in range(len(reps)):
                if src[a] != tgt[b]:
                    continue
                prod = self.mult_vec(reps[a], reps[b])
                lvl = deg[a] + deg[b]
                if lvl >= len(levels):
                    continue
                coords = coords_in_level(prod, lvl)
                if coords:
                    mult[(a, b)] = tuple(sorted(coords.items()))
        idem = []
        for v in range(len(self.vertices)):
            target = self.basis_vector(self.idem[v])
            spot = None
            for t in range(len(reps)):
                if deg[t] == 0 and filtration[1].contains(
                        vec_sub(f, reps[t], target)):
                    spot = t
                    break
            assert spot is not None, "vertex idempotent lost in regrading"
            names[spot] = self.names[self.idem[v]]
            idem.append(spot)
        gr = Algebra(f, names, src, tgt, deg, self.vertices, idem, mult)
        return gr


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_sub_unit(algebra, s):
    """1 - s in the algebra."""
    return vec_sub(algebra.field, algebra.unit, s)


def proj_solve(proj, target, field):
    """Any preimage of `target` under the surjection with matrix `proj`."""
    sol = proj.solve(target)
    if sol is None:
        raise StratkosError("projection is not surjective onto the class")
    return sol


def _support_block(algebra, vec):
    f = algebra.field
    blocks = {(algebra.tgt[i], algebra.src[i]) for i, c in enumerate(vec) if c != f.zero}
    if len(blocks) != 1:
        raise StratkosError("vector is not vertex homogeneous")
    return blocks.pop()


def _split_semisimple_block(quo, vertex, block_idx):
    """Primitive idempotents of e_v (A/rad) e_v as vectors in A/rad.

    The block must be split semisimple over the coefficient field; all
    fixtures have abelian blocks, so elementwise minimal polynomials with
    in-field roots are enough to split completely.
    """
    f = quo.field
    ev = quo.basis_vector(quo.idem[vertex])

    def split(unit_vec_, members):
        space = Subspace(f, quo.dim, members)
        if space.dim == 1:
            return [unit_vec_]
        for cand in members + [quo.mult_vec(a, b) for a in members for b in members]:
            roots = _inner_spectrum(quo, unit_vec_, space, cand)
            if len(roots) >= 2:
                pieces = []
                for r in roots:
                    e_r = _eigen_idempotent(quo, unit_vec_, space, cand, r, roots)
                    sub_members = [quo.mult_vec(e_r, quo.mult_vec(m, e_r)) for m in space.basis]
                    sub_members = [m for m in Subspace(f, quo.dim, sub_members).basis]
                    pieces.extend(split(e_r, sub_members))
                return pieces
        raise NotSplitField(
            f"cannot split the semisimple block at vertex {quo.vertices[vertex]} over {f}")

    members = [quo.basis_vector(i) for i in block_idx]
    return split(ev, members)


def _inner_spectrum(quo, unit_vec_, space, cand):
    """In-field roots of the minimal polynomial of `cand` acting on `space`."""
    f = quo.field
    basis = list(space.basis)
    mat_cols = []
    for b in basis:
        w = quo.mult_vec(cand, b)
        coords = space.coords(w)
        if coords is None:
            raise StratkosError("element does not stabilize its block")
        mat_cols.append(coords)
    m = Matrix.from_cols(f, mat_cols, rows=len(basis))
    poly = _min_poly(m, f)
    return _roots_in_field(poly, f)


def _eigen_idempotent(quo, unit_vec_, space, cand, root, roots):
    """prod_{s != root} (cand - s) / (root - s), an idempotent for split
    semisimple commutative blocks."""
    f = quo.field
    e = unit_vec_
    for s in roots:
        if s == root:
            continue
        shifted = vec_sub(f, cand, vec_scale(f, s, unit_vec_))
        e = quo.mult_vec(e, shifted)
        e = vec_scale(f, f.inv(f.sub(root, s)), e)
    assert quo.mult_vec(e, e) == e
    return e


def _min_poly(m, f):
    """Minimal polynomial (list of coefficients, low degree first, monic)."""
    n = m.rows
    powers = [Matrix.identity(f, n)]
    while True:
        powers.append(powers[-1].mul(m))
        flat = [tuple(x for row in p.data for x in row) for p in powers]
        mat = Matrix(f, flat, cols=n * n)
        red, pivots, rank = mat.rref()
        if rank < len(powers):
            # last power is dependent on the previous ones
            prev = Matrix(f, flat[:-1], cols=n * n)
            sol = prev.transpose().solve(flat[-1])
            assert sol is not None
            coeffs = [f.neg(c) for c in sol] + [f.one]
            return coeffs


def _roots_in_field(poly, f):
    def eval_poly(x):
        acc = f.zero
        for c in reversed(poly):
            acc = f.add(f.mul(acc, x), c)
        return acc

    roots = []
    if f.is_finite:
        for x in f.elements():
            if eval_poly(f.of(x)) == f.zero:
                roots.append(f.of(x))
        return roots
    # rational root scan on the integer-scaled polynomial
    from fractions import Fraction
    denom = 1
    for c in poly:
        denom = denom * Fraction(c).denominator // _gcd(denom, Fraction(c).denominator)
    ints = [int(Fraction(c) * denom) for c in poly]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return [f.zero]
    lead, const = ints[-1], ints[0]
    if const == 0:
        roots.append(f.zero)
        while ints and ints[0] == 0:
            ints.pop(0)
        const = ints[0]
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            for sign in (1, -1):
                x = Fraction(sign * p, q)
                if eval_poly(x) == 0 and x not in roots:
                    roots.append(x)
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = [d for d in range(1, abs(n) + 1) if n % d == 0]
    return out or [1]

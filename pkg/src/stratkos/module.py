"""Graded left modules over an Algebra.

A module stores one action matrix per algebra basis element, a vertex label
per module basis vector (the e_v eigenspace decomposition) and, when the
module is graded, a degree label per basis vector.  Ungraded modules (the
stratification chapters) carry ``degrees=None``.
"""

from __future__ import annotations

from .algebra import Algebra
from .errors import StratkosError
from .linalg import Matrix, Subspace, unit_vec, vec_add, vec_scale, zero_vec


class Module:
    def __init__(self, algebra, action, vertices, degrees=None, name="M"):
        self.algebra = algebra
        self.action = list(action)          # Matrix per algebra basis element
        self.dim = self.action[0].rows if self.action else 0
        if not self.action:
            raise StratkosError("module needs one action matrix per basis element")
        self.vertex = tuple(vertices)
        self.degrees = tuple(degrees) if degrees is not None else None
        self.name = name
        if len(self.vertex) != self.dim:
            raise StratkosError("vertex labels must match the dimension")
        if self.degrees is not None and len(self.degrees) != self.dim:
            raise StratkosError("degree labels must match the dimension")
        self._cache = {}
        self._validate_cheap()

    # ------------------------------------------------------------------

    def _validate_cheap(self):
        a, f = self.algebra, self.algebra.field
        for v, i in enumerate(a.idem):
            m = self.action[i]
            for r in range(self.dim):
                for c in range(self.dim):
                    want = f.one if (r == c and self.vertex[r] == v) else f.zero
                    if m.data[r][c] != want:
                        raise StratkosError(
                            f"e_{a.vertices[v]} does not project onto its labeled block")
        for i in range(a.dim):
            m = self.action[i]
            for r in range(self.dim):
                for c in range(self.dim):
                    x = m.data[r][c]
                    if x == f.zero:
                        continue
                    if self.vertex[r] != a.tgt[i] or self.vertex[c] != a.src[i]:
                        raise StratkosError("action breaks vertex labels")
                    if self.degrees is not None and \
                            self.degrees[r] != self.degrees[c] + a.deg[i]:
                        raise StratkosError("action breaks the grading")

    def check_action(self):
        """Full homomorphism property on all basis pairs; raises on failure."""
        a, f = self.algebra, self.algebra.field
        for i in range(a.dim):
            for j in range(a.dim):
                left = self.action[i].mul(self.action[j])
                right = Matrix.zeros(f, self.dim, self.dim)
                for k, c in a.mult.get((i, j), ()):
                    right = right.add(self.action[k].scale(c))
                if left != right:
                    raise StratkosError(
                        f"module action violates {a.names[i]}*{a.names[j]}")
        return True

    @property
    def is_graded(self):
        return self.degrees is not None

    def __repr__(self):
        g = "" if self.degrees is None else f", degrees {sorted(set(self.degrees))}"
        return f"Module({self.name}: dim {self.dim}{g})"

    def act_vec(self, avec, v):
        """(algebra vector) . (module vector)."""
        f = self.algebra.field
        out = zero_vec(f, self.dim)
        for i, c in enumerate(avec):
            if c != f.zero:
                out = vec_add(f, out, vec_scale(f, c, self.action[i].mul_vec(v)))
        return out

    def act_basis(self, i, v):
        return self.action[i].mul_vec(v)

    def graded_dims(self):
        if self.degrees is None:
            return None
        out = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return dict(sorted(out.items()))

    def vertex_dims(self):
        out = {}
        for v in self.vertex:
            lbl = self.algebra.vertices[v]
            out[lbl] = out.get(lbl, 0) + 1
        return dict(sorted(out.items()))

    def degree_indices(self, d):
        if self.degrees is None:
            raise StratkosError("module is not graded")
        return [i for i in range(self.dim) if self.degrees[i] == d]

    def min_degree(self):
        return min(self.degrees) if self.degrees else 0

    def shift(self, s):
        """M[s]: degrees move up by s (M[s]_i = M_{i-s})."""
        if self.degrees is None:
            raise StratkosError("cannot shift an ungraded module")
        return Module(self.algebra, self.action, self.vertex,
                      [d + s for d in self.degrees], name=f"{self.name}[{s}]")

    def forget_grading(self):
        return Module(self.algebra, self.action, self.vertex, None, name=self.name)

    # ------------------------------------------------------------------
    # submodules and quotients

    def adapted_basis(self, vectors):
        """Echelon bases of span(vectors) split by (vertex, degree) blocks.

        Returns a list of (vertex, degree_or_None, rows).  Raises if the span
        is not the direct sum of its block projections (cannot happen for
        genuine submodules of labeled modules).
        """
        f = self.algebra.field
        total = Subspace(f, self.dim, vectors)
        blocks = {}
        for vec in total.basis:
            per = {}
            for i, c in enumerate(vec):
                if c != f.zero:
                    key = (self.vertex[i],
                           self.degrees[i] if self.degrees is not None else None)
                    per.setdefault(key, [f.zero] * self.dim)[i] = c
            for key, part in per.items():
                blocks.setdefault(key, []).append(tuple(part))
        out = []
        count = 0
        for key in sorted(blocks, key=lambda kv: (kv[0], -1 if kv[1] is None else kv[1])):
            sub = Subspace(f, self.dim, blocks[key])
            for row in sub.basis:
                if not total.contains(row):
                    raise StratkosError("span is not homogeneous for the labels")
            out.append((key[0], key[1], list(sub.basis)))
            count += sub.dim
        if count != total.dim:
            raise StratkosError("block projections overcount the span")
        return out

    def submodule(self, vectors, name="sub"):
        """(submodule on an adapted basis, inclusion matrix)."""
        f = self.algebra.field
        blocks = self.adapted_basis(vectors)
        rows, verts, degs = [], [], []
        for v, d, basis_rows in blocks:
            for row in basis_rows:
                rows.append(row)
                verts.append(v)
                degs.append(d)
        incl = Matrix.from_cols(f, rows, rows=self.dim)
        sub_dim = len(rows)
        if sub_dim == 0:
            return zero_module(self.algebra, name=name,
                               graded=self.degrees is not None), incl
        span = Subspace(f, self.dim, rows)
        action = []
        for i in range(self.algebra.dim):
            cols = []
            for row in rows:
                img = self.act_basis(i, row)
                coords = _coords_in_rows(f, rows, span, img)
                cols.append(coords)
            action.append(Matrix.from_cols(f, cols, rows=sub_dim))
        degrees = None if self.degrees is None else degs
        return Module(self.algebra, action, verts, degrees, name=name), incl

    def quotient(self, vectors, name="quo"):
        """(quotient module, projection matrix)."""
        f = self.algebra.field
        blocks = self.adapted_basis(vectors)
        rows = [row for _, _, basis_rows in blocks for row in basis_rows]
        span = Subspace(f, self.dim, rows)
        pivots = set(span.pivots)
        survivors = [i for i in range(self.dim) if i not in pivots]

        def residue(v):
            r = span.reduce(v)
            return tuple(r[i] for i in survivors)

        proj_cols = [residue(unit_vec(f, self.dim, i)) for i in range(self.dim)]
        proj = Matrix.from_cols(f, proj_cols, rows=len(survivors))
        if not survivors:
            return zero_module(self.algebra, name=name,
                               graded=self.degrees is not None), proj
        action = []
        for i in range(self.algebra.dim):
            cols = []
            for s in survivors:
                img = self.act_basis(i, unit_vec(f, self.dim, s))
                cols.append(residue(img))
            action.append(Matrix.from_cols(f, cols, rows=len(survivors)))
        verts = [self.vertex[i] for i in survivors]
        degs = None if self.degrees is None else [self.degrees[i] for i in survivors]
        return Module(self.algebra, action, verts, degs, name=name), proj

    # ------------------------------------------------------------------
    # radical, top, generation

    def radical_vectors(self):
        """Spanning set of rad(A) . M."""
        out = []
        for r in self.algebra.radical().basis:
            for c in range(self.dim):
                out.append(self.act_vec(r, unit_vec(self.algebra.field, self.dim, c)))
        return out

    def radical_submodule(self):
        return self.submodule(self.radical_vectors(), name=f"rad {self.name}")

    def top(self):
        """(M / rad M, projection)."""
        return self.quotient(self.radical_vectors(), name=f"top {self.name}")

    def generated_by(self, vectors):
        """Submodule generated by the vectors."""
        f = self.algebra.field
        span = [tuple(v) for v in vectors]
        for i in range(self.algebra.dim):
            for v in vectors:
                span.append(self.act_basis(i, tuple(v)))
        # algebra basis elements close multiplicatively, one pass suffices
        # only when products of basis elements are basis-coefficient
        # combinations; iterate to be safe
        current = Subspace(f, self.dim, span)
        while True:
            new = []
            for row in current.basis:
                for i in range(self.algebra.dim):
                    w = self.act_basis(i, row)
                    if not current.contains(w):
                        new.append(w)
            if not new:
                return current
            current = current.add_vectors(new)

    def is_generated_in_degree(self, s):
        if self.degrees is None:
            raise StratkosError("module is not graded")
        gens = [unit_vec(self.algebra.field, self.dim, i)
                for i in self.degree_indices(s)]
        return self.generated_by(gens).dim == self.dim if self.dim else True

    def trace_from_vertex(self, mu, name=None):
        """tr_{P_mu}(M) = A . (e_mu M) as a submodule."""
        mu = mu if isinstance(mu, int) else self.algebra.vertex_index(mu)
        f = self.algebra.field
        gens = [unit_vec(f, self.dim, i) for i in range(self.dim)
                if self.vertex[i] == mu]
        span = self.generated_by(gens)
        return self.submodule(list(span.basis),
                              name=name or f"tr_P{self.algebra.vertices[mu]}({self.name})")


def _coords_in_rows(field, rows, span, vec):
    m = Matrix.from_cols(field, rows, rows=len(vec))
    sol = m.solve(vec)
    if sol is None:
        raise StratkosError("vector left the submodule")
    return sol


def zero_module(algebra, name="0", graded=True):
    f = algebra.field
    action = [Matrix.zeros(f, 0, 0) for _ in range(algebra.dim)]
    m = Module.__new__(Module)
    m.algebra = algebra
    m.action = action
    m.dim = 0
    m.vertex = ()
    m.degrees = () if graded else None
    m.name = name
    m._cache = {}
    return m


def regular_module(algebra, name="A"):
    """A as a left module over itself (vertex = target of each basis path)."""
    f = algebra.field
    action = [algebra.left_mult_matrix(algebra.basis_vector(i))
              for i in range(algebra.dim)]
    return Module(algebra, action, algebra.tgt, list(algebra.deg), name=name)


def projective_module(algebra, vertex, shift=0, graded=True):
    """P_v = A e_v with the left regular action."""
    v = vertex if isinstance(vertex, int) else algebra.vertex_index(vertex)
    f = algebra.field
    idx = [i for i in range(algebra.dim) if algebra.src[i] == v]
    pos = {i: t for t, i in enumerate(idx)}
    action = []
    for b in range(algebra.dim):
        cols = []
        for i in idx:
            col = [f.zero] * len(idx)
            for k, c in algebra.mult.get((b, i), ()):
                col[pos[k]] = c
            cols.append(col)
        action.append(Matrix.from_cols(f, cols, rows=len(idx)))
    verts = [algebra.tgt[i] for i in idx]
    degs = [algebra.deg[i] + shift for i in idx] if graded else None
    label = algebra.vertices[v]
    name = f"P_{label}" if shift == 0 else f"P_{label}[{shift}]"
    return Module(algebra, action, verts, degs, name=name)


def cyclic_projective(algebra, vertex, f_vec, shift=0, graded=True, name=None):
    """A f for a primitive idempotent f at the given vertex, as a module."""
    reg = regular_module(algebra)
    gens = [algebra.mult_vec(algebra.basis_vector(i), f_vec)
            for i in range(algebra.dim)]
    span = Subspace(algebra.field, algebra.dim, gens)
    sub, incl = reg.submodule(list(span.basis), name=name or "Af")
    if shift and graded:
        sub = sub.shift(shift)
    if not graded:
        sub = sub.forget_grading()
    return sub, incl


def a0_module(algebra, name="A0", graded=True):
    """A_0 = A/J as a graded left module (J the positive-degree span)."""
    reg = regular_module(algebra)
    f = algebra.field
    killers = [unit_vec(f, algebra.dim, i) for i in range(algebra.dim)
               if algebra.deg[i] > 0]
    quo, _ = reg.quotient(killers, name=name)
    if not graded:
        quo = quo.forget_grading()
    return quo


def vertex_heads_module(algebra, name="heads"):
    """A / (span of off-diagonal basis elements): the sum of all e_v A e_v
    pieces as a left module.  For category algebras this is the direct sum of
    the automorphism group algebras."""
    reg = regular_module(algebra)
    f = algebra.field
    killers = [unit_vec(f, algebra.dim, i) for i in range(algebra.dim)
               if algebra.src[i] != algebra.tgt[i]]
    quo, _ = reg.quotient(killers, name=name)
    return quo


def simple_module(algebra, vertex, shift=0, graded=True):
    """top(P_v); one-dimensional whenever e_v is primitive."""
    v = vertex if isinstance(vertex, int) else algebra.vertex_index(vertex)
    p = projective_module(algebra, v, shift=shift, graded=graded)
    t, _ = p.top()
    t.name = f"S_{algebra.vertices[v]}" + (f"[{shift}]" if shift else "")
    return t


def direct_sum(modules, name=None):
    """(sum module, list of inclusion matrices)."""
    mods = [m for m in modules]
    if not mods:
        raise StratkosError("empty direct sum needs an algebra")
    algebra = mods[0].algebra
    f = algebra.field
    total = sum(m.dim for m in mods)
    graded = all(m.degrees is not None for m in mods)
    verts, degs = [], []
    for m in mods:
        verts.extend(m.vertex)
        if graded:
            degs.extend(m.degrees)
    action = []
    for i in range(algebra.dim):
        rows = [[f.zero] * total for _ in range(total)]
        off = 0
        for m in mods:
            a = m.action[i]
            for r in range(m.dim):
                for c in range(m.dim):
                    rows[off + r][off + c] = a.data[r][c]
            off += m.dim
        action.append(Matrix(f, rows, cols=total))
    incls = []
    off = 0
    for m in mods:
        cols = [unit_vec(f, total, off + r) for r in range(m.dim)]
        incls.append(Matrix.from_cols(f, cols, rows=total))
        off += m.dim
    out = Module(algebra, action, verts, degs if graded else None,
                 name=name or "(+)".join(m.name for m in mods))
    return out, incls


# ----------------------------------------------------------------------
# homomorphisms


class ModuleMap:
    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        self.matrix = matrix

    def check(self):
        a = self.source.algebra
        for i in range(a.dim):
            left = self.matrix.mul(self.source.action[i])
            right = self.target.action[i].mul(self.matrix)
            if left != right:
                raise StratkosError(f"map does not intertwine {a.names[i]}")
        return True

    def is_injective(self):
        return self.matrix.rank() == self.source.dim

    def is_surjective(self):
        return self.matrix.rank() == self.target.dim

    def __repr__(self):
        return f"ModuleMap({self.source.name} -> {self.target.name})"


def hom_basis(M, N, graded_only=False):
    """Basis of Hom_A(M, N) (or hom, the degree-preserving maps)."""
    if M.algebra is not N.algebra and M.algebra.mult != N.algebra.mult:
        raise StratkosError("modules live over different algebras")
    a, f = M.algebra, M.algebra.field
    slots = []
    slot_id = {}
    for r in range(N.dim):
        for c in range(M.dim):
            if N.vertex[r] != M.vertex[c]:
                continue
            if graded_only and (M.degrees is None or N.degrees is None
                                or N.degrees[r] != M.degrees[c]):
                continue
            slot_id[(r, c)] = len(slots)
            slots.append((r, c))
    if not slots:
        return []
    rows = []
    idem_set = set(a.idem)
    for i in range(a.dim):
        if i in idem_set:
            continue
        am, nm = M.action[i], N.action[i]
        for r in range(N.dim):
            for c in range(M.dim):
                # coefficient rows of (N.action[i] F - F M.action[i])[r][c]
                row = [f.zero] * len(slots)
                touched = False
                for k in range(N.dim):
                    x = nm.data[r][k]
                    if x != f.zero and (k, c) in slot_id:
                        row[slot_id[(k, c)]] = f.add(row[slot_id[(k, c)]], x)
                        touched = True
                for k in range(M.dim):
                    x = am.data[k][c]
                    if x != f.zero and (r, k) in slot_id:
                        row[slot_id[(r, k)]] = f.sub(row[slot_id[(r, k)]], x)
                        touched = True
                if touched:
                    rows.append(row)
    if rows:
        kernel = Matrix(f, rows, cols=len(slots)).kernel_basis()
    else:
        kernel = [unit_vec(f, len(slots), t) for t in range(len(slots))]
    out = []
    for kv in kernel:
        m = [[f.zero] * M.dim for _ in range(N.dim)]
        for t, (r, c) in enumerate(slots):
            m[r][c] = kv[t]
        out.append(ModuleMap(M, N, Matrix(f, m, cols=M.dim)))
    return out


def hom_dim(M, N, graded_only=False):
    return len(hom_basis(M, N, graded_only=graded_only))


def modules_isomorphic(M, N, graded=False, tries=200):
    """True/False when decidable, None when the search is inconclusive.

    Sound in both directions for finite fields with small hom spaces (the
    search is exhaustive); over Q a randomized search may return None.
    """
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    if sorted(M.vertex) != sorted(N.vertex):
        return False
    if graded:
        if (M.degrees is None) != (N.degrees is None):
            return False
        if M.degrees is not None and \
                sorted(zip(M.vertex, M.degrees)) != sorted(zip(N.vertex, N.degrees)):
            return False
    homs = hom_basis(M, N, graded_only=graded and M.degrees is not None)
    if not homs:
        return False
    f = M.algebra.field
    t = len(homs)
    if f.is_finite:
        total = f.char ** t
        if total <= 4096:
            from itertools import product
            for coeffs in product(f.elements(), repeat=t):
                m = Matrix.zeros(f, N.dim, M.dim)
                for c, h in zip(coeffs, homs):
                    if c:
                        m = m.add(h.matrix.scale(f.of(c)))
                if m.rank() == M.dim:
                    return True
            return False
        import random
        rng = random.Random(20240811)
        for _ in range(tries):
            m = Matrix.zeros(f, N.dim, M.dim)
            for h in homs:
                m = m.add(h.matrix.scale(f.of(rng.randrange(f.char))))
            if m.rank() == M.dim:
                return True
        return None
    import random
    rng = random.Random(20240811)
    for _ in range(tries):
        m = Matrix.zeros(f, N.dim, M.dim)
        for h in homs:
            m = m.add(h.matrix.scale(f.of(rng.randint(-7, 7))))
        if m.rank() == M.dim:
            return True
    return None

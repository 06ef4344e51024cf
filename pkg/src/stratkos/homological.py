"""Minimal graded resolutions, Ext computation, Yoneda products, and the
Koszul-type decision procedures."""

from __future__ import annotations

from .algebra import Algebra
from .covers import projective_cover, is_projective
from .errors import (HypothesisFailed, LiftFailure, NotGeneratedDegreeZero,
                     StratkosError)
from .linalg import Matrix, Subspace, unit_vec
from .module import (Module, ModuleMap, a0_module, direct_sum, hom_basis,
                     modules_isomorphic, projective_module, zero_module)

DEFAULT_BOUND = 6


class Resolution:
    """Minimal projective resolution of M through homological degree `bound`.

    ``covers[i]`` covers the i-th syzygy (the 0-th being M itself); the
    resolution stops early once a syzygy vanishes.
    """

    def __init__(self, M, bound):
        self.module = M
        self.bound = bound
        self.covers = []
        self.syzygies = [M]
        self.inclusions = []     # Omega^{i+1} -> P^i coordinates
        self.terminated = M.dim == 0
        cur = M
        for i in range(bound + 1):
            if cur.dim == 0:
                self.terminated = True
                break
            cover = projective_cover(cur)
            self.covers.append(cover)
            ker = cover.matrix.kernel_basis()
            sub, incl = cover.cover.submodule(list(ker),
                                              name=f"Omega^{i + 1}({M.name})")
            self.syzygies.append(sub)
            self.inclusions.append(incl)
            cur = sub
        self._check_exactness()

    @property
    def length(self):
        return len(self.covers)

    def stage(self, i):
        """P^i as a module (zero module beyond termination)."""
        if i < self.length:
            return self.covers[i].cover
        return zero_module(self.module.algebra,
                           graded=self.module.degrees is not None)

    def stage_summands(self, i):
        return self.covers[i].summands if i < self.length else []

    def differential(self, i):
        """Matrix of d_i : P^i -> P^{i-1} (i >= 1)."""
        if i >= self.length:
            if not self.terminated:
                raise StratkosError(f"stage {i} not built (bound {self.bound})")
            prev = self.stage(i - 1)
            return Matrix.zeros(self.module.algebra.field, prev.dim, self.stage(i).dim)
        return self.inclusions[i - 1].mul(self.covers[i].matrix)

    def augmentation(self):
        return self.covers[0].matrix if self.covers else \
            Matrix.zeros(self.module.algebra.field, self.module.dim, 0)

    def _check_exactness(self):
        for i in range(1, self.length):
            d_i = self.differential(i)
            ker_dim = self.stage(i).dim - d_i.rank()
            if i + 1 < self.length:
                if self.differential(i + 1).rank() != ker_dim:
                    raise StratkosError(f"resolution inexact at stage {i}")
            elif self.terminated and ker_dim != 0:
                raise StratkosError(f"terminated resolution inexact at stage {i}")

    def projective_dimension(self):
        """pd M when the resolution terminated, else None."""
        if not self.terminated:
            return None
        return max(0, self.length - 1) if self.module.dim else -1


_RES_CACHE = {}


def minimal_resolution(M, n):
    key = (id(M), n)
    res = _RES_CACHE.get(key)
    if res is None:
        res = Resolution(M, n)
        _RES_CACHE[key] = res
    return res


# ----------------------------------------------------------------------
# Ext


class ExtTable:
    """Ext^i(M, N) for i <= n with chosen cocycle representatives."""

    def __init__(self, M, N, n, resolution=None):
        self.source = M
        self.target = N
        self.bound = n
        self.resolution = resolution or minimal_resolution(M, n + 1)
        if not self.resolution.terminated and self.resolution.bound < n + 1:
            raise StratkosError("resolution too short for the requested Ext range")
        f = M.algebra.field
        self.hom_bases = []      # per stage: list of ModuleMap
        self.deltas = []         # deltas[i-1] = delta^i : Hom(P^{i-1}) -> Hom(P^i)
        for i in range(n + 2):
            self.hom_bases.append(hom_basis(self.resolution.stage(i), N))
        for i in range(1, n + 2):
            self.deltas.append(self._delta_matrix(i))
        self._rep_coords = []    # chosen cocycle reps in hom-basis coordinates
        self.cocycles = []       # the same reps as ModuleMaps
        self.coboundary_coords = []
        self.dims = []
        for i in range(n + 1):
            z = self._cocycle_space(i)
            b = self._coboundary_space(i)
            reps = _complement_reps(f, z, b)
            self._rep_coords.append(reps)
            self.cocycles.append([self._to_map(i, v) for v in reps])
            self.coboundary_coords.append(b)
            self.dims.append(len(reps))

    def ensure_degree0_rep(self, cocycle_matrix):
        """Rebase the degree-0 representatives so the given cocycle's class is
        the first chosen basis vector."""
        f = self.source.algebra.field
        basis = self.hom_bases[0]
        flat = tuple(x for row in cocycle_matrix.data for x in row)
        hom_flat = Matrix(f, [[x for row in h.matrix.data for x in row] for h in basis],
                          cols=len(flat))
        coords = hom_flat.transpose().solve(flat)
        if coords is None:
            raise StratkosError("cocycle is not in Hom(P^0, N)")
        reps = [coords]
        cob = self.coboundary_coords[0]
        taken = Subspace(f, len(basis), [coords] + list(cob.basis))
        for v in self._rep_coords[0]:
            if not taken.contains(v):
                reps.append(v)
                taken = taken.add_vectors([v])
        if len(reps) != self.dims[0]:
            raise StratkosError("rebase changed the Ext^0 dimension")
        self._rep_coords[0] = reps
        self.cocycles[0] = [self._to_map(0, v) for v in reps]

    def _delta_matrix(self, i):
        f = self.source.algebra.field
        src_basis = self.hom_bases[i - 1]
        tgt_basis = self.hom_bases[i]
        d = self.resolution.differential(i)
        cols = []
        tgt_flat = Matrix(f, [[x for row in h.matrix.data for x in row]
                              for h in tgt_basis],
                          cols=self.resolution.stage(i).dim * self.target.dim
                          if tgt_basis else 0)
        for h in src_basis:
            comp = h.matrix.mul(d)
            flat = tuple(x for row in comp.data for x in row)
            if tgt_basis:
                sol = tgt_flat.transpose().solve(flat)
                if sol is None:
                    raise StratkosError("hom complex differential left the hom space")
                cols.append(sol)
            else:
                if any(x != f.zero for x in flat):
                    raise StratkosError("hom complex differential left the hom space")
                cols.append(())
        return Matrix.from_cols(f, cols, rows=len(tgt_basis))

    def _cocycle_space(self, i):
        f = self.source.algebra.field
        n_i = len(self.hom_bases[i])
        delta_out = self.deltas[i]      # Hom(P^i) -> Hom(P^{i+1})
        return delta_out.kernel_basis() if n_i else []

    def _coboundary_space(self, i):
        f = self.source.algebra.field
        if i == 0:
            return Subspace(f, len(self.hom_bases[0]))
        delta_in = self.deltas[i - 1]
        return Subspace(f, len(self.hom_bases[i]),
                        [delta_in.col(j) for j in range(delta_in.cols)])

    def _to_map(self, i, coords):
        f = self.source.algebra.field
        P = self.resolution.stage(i)
        m = Matrix.zeros(f, self.target.dim, P.dim)
        for c, h in zip(coords, self.hom_bases[i]):
            if c != f.zero:
                m = m.add(h.matrix.scale(c))
        return ModuleMap(P, self.target, m)

    def dim(self, i):
        return self.dims[i] if 0 <= i <= self.bound else 0

    def class_coords(self, i, cocycle_matrix):
        """Coordinates of a cocycle's class in the chosen representatives."""
        f = self.source.algebra.field
        basis = self.hom_bases[i]
        if not basis:
            return ()
        flat_target = tuple(x for row in cocycle_matrix.data for x in row)
        hom_flat = Matrix(f, [[x for row in h.matrix.data for x in row] for h in basis],
                          cols=len(flat_target))
        hv = hom_flat.transpose().solve(flat_target)
        if hv is None:
            raise StratkosError("cocycle is not in the hom space")
        rep_cols = [tuple(x for row in c.matrix.data for x in row)
                    for c in self.cocycles[i]]
        rep_in_hom = []
        for rc in rep_cols:
            sol = hom_flat.transpose().solve(rc)
            rep_in_hom.append(sol)
        cob = self.coboundary_coords[i]
        cols = rep_in_hom + list(cob.basis)
        m = Matrix.from_cols(f, cols, rows=len(basis)) if cols else \
            Matrix.zeros(f, len(basis), 0)
        sol = m.solve(hv)
        if sol is None:
            raise StratkosError("cocycle class escapes the computed Ext space")
        return tuple(sol[: len(self.cocycles[i])])

    def graded_dims(self, i):
        """dim ext^i(M, N[j]) per internal degree j (graded modules only)."""
        M, N = self.source, self.target
        if M.degrees is None or N.degrees is None:
            return None
        f = M.algebra.field
        P = self.resolution.stage(i)
        out = {}
        z = self._cocycle_space(i)
        cob = self.coboundary_coords[i]
        # split cocycles into internal-degree components
        comp_classes = {}
        for v in z:
            mp = self._to_map(i, v).matrix
            per = {}
            for r in range(N.dim):
                for c in range(P.dim):
                    x = mp.data[r][c]
                    if x != f.zero:
                        j = P.degrees[c] - N.degrees[r]
                        per.setdefault(j, [[f.zero] * P.dim for _ in range(N.dim)])
                        per[j][r][c] = x
            for j, rows in per.items():
                comp_classes.setdefault(j, []).append(Matrix(f, rows, cols=P.dim))
        for j, mats in sorted(comp_classes.items()):
            coords = []
            for m in mats:
                flat = tuple(x for row in m.data for x in row)
                basis_flat = Matrix(f, [[x for row in h.matrix.data for x in row]
                                        for h in self.hom_bases[i]], cols=len(flat))
                sol = basis_flat.transpose().solve(flat)
                coords.append(sol)
            total = Subspace(f, len(self.hom_bases[i]), coords + list(cob.basis)).dim
            d = total - cob.dim
            if d:
                out[j] = d
        return out


def _complement_reps(field, cocycle_vectors, coboundaries):
    """Greedy complement of the coboundaries inside the cocycles."""
    reps = []
    taken = coboundaries
    for v in cocycle_vectors:
        if not taken.contains(v):
            reps.append(v)
            taken = taken.add_vectors([v])
    return reps


def ext_dims(M, N, n):
    return ExtTable(M, N, n)


# ----------------------------------------------------------------------
# chain lifting and Yoneda products


def solve_hom_with_constraint(P, Q, post, target):
    """A module map F: P -> Q with post @ F == target (post, target matrices).

    P must be projective and the constraint consistent; raises LiftFailure
    otherwise.
    """
    f = P.algebra.field
    homs = hom_basis(P, Q)
    if not homs and target.is_zero():
        return ModuleMap(P, Q, Matrix.zeros(f, Q.dim, P.dim))
    cols = []
    for h in homs:
        comp = post.mul(h.matrix)
        cols.append(tuple(x for row in comp.data for x in row))
    want = tuple(x for row in target.data for x in row)
    m = Matrix.from_cols(f, cols, rows=len(want)) if cols else \
        Matrix.zeros(f, len(want), 0)
    sol = m.solve(want)
    if sol is None:
        raise LiftFailure("no lift: exactness violated")
    out = Matrix.zeros(f, Q.dim, P.dim)
    for c, h in zip(sol, homs):
        if c != f.zero:
            out = out.add(h.matrix.scale(c))
    return ModuleMap(P, Q, out)


def lift_chain_map(res_M, i, phi, res_N, depth):
    """Chain maps Phi_s: P^{i+s}_M -> P^s_N for s = 0..depth lifting the
    cocycle phi: P^i_M -> N through the resolution of N."""
    maps = []
    # Phi_0: epsilon_N . Phi_0 = phi
    eps = res_N.augmentation()
    phi0 = solve_hom_with_constraint(res_M.stage(i), res_N.stage(0), eps, phi.matrix)
    maps.append(phi0)
    for s in range(1, depth + 1):
        dN = res_N.differential(s)
        dM = res_M.differential(i + s)
        rhs = maps[-1].matrix.mul(dM)
        nxt = solve_hom_with_constraint(res_M.stage(i + s), res_N.stage(s), dN, rhs)
        maps.append(nxt)
    return maps


def yoneda_product(res_M, i, phi, res_N, j, psi):
    """Cocycle of the product class in Ext^{i+j}(M, L).

    ``phi``: cocycle P^i_M -> N; ``psi``: cocycle P^j_N -> L.  Returns a
    ModuleMap P^{i+j}_M -> L (the zero map beyond termination).
    """
    f = res_M.module.algebra.field
    L = psi.target
    if i + j >= res_M.length and res_M.terminated:
        return ModuleMap(res_M.stage(i + j), L,
                         Matrix.zeros(f, L.dim, res_M.stage(i + j).dim))
    chain = lift_chain_map(res_M, i, phi, res_N, j)
    return ModuleMap(res_M.stage(i + j), L, psi.matrix.mul(chain[j].matrix))


# ----------------------------------------------------------------------
# Koszul decisions


class KoszulVerdict:
    def __init__(self, holds, bound, unconditional, failing_stage=None, reason=""):
        self.holds = holds
        self.bound = bound
        self.unconditional = unconditional
        self.failing_stage = failing_stage
        self.reason = reason

    def __bool__(self):
        return self.holds

    def __eq__(self, other):
        if isinstance(other, bool):
            return self.holds == other
        return NotImplemented

    def __repr__(self):
        kind = "unconditional" if self.unconditional else f"to bound {self.bound}"
        extra = f" (stage {self.failing_stage}: {self.reason})" if not self.holds else ""
        return f"KoszulVerdict({self.holds}, {kind}{extra})"


def is_koszul_module(M, n=DEFAULT_BOUND):
    """P^i generated in degree i for all computed stages i <= n."""
    if M.degrees is None:
        raise NotGeneratedDegreeZero("Koszul checks need a graded module")
    if M.dim and not M.is_generated_in_degree(0):
        raise NotGeneratedDegreeZero(f"{M.name} is not generated in degree 0")
    res = minimal_resolution(M, n)
    for i in range(res.length):
        shifts = {s.shift for s in res.stage_summands(i)}
        if shifts and shifts != {i}:
            return KoszulVerdict(False, n, True, failing_stage=i,
                                 reason=f"P^{i} generated in degrees {sorted(shifts)}")
    if res.terminated:
        return KoszulVerdict(True, n, True)
    # periodicity upgrade: a repeated graded syzygy (up to shift) makes the
    # linearity pattern repeat forever
    for a in range(1, res.length):
        for b in range(a + 1, res.length + 1):
            Ma, Mb = res.syzygies[a], res.syzygies[b]
            if Ma.dim != Mb.dim or Ma.dim == 0:
                continue
            if Mb.min_degree() - Ma.min_degree() == b - a:
                iso = modules_isomorphic(Ma.shift(b - a), Mb, graded=True)
                if iso is True:
                    return KoszulVerdict(True, n, True)
    return KoszulVerdict(True, n, False)


def is_koszul_algebra(algebra, n=DEFAULT_BOUND):
    return is_koszul_module(a0_module(algebra), n)


def ext1_span_check(M, n, algebra=None):
    """dim of Ext^1(A_0,A_0) . Ext^i(M,A_0) vs Ext^{i+1}(M,A_0), i < n."""
    algebra = algebra or M.algebra
    A0 = a0_module(algebra)
    res_M = minimal_resolution(M, n + 1)
    res_A0 = minimal_resolution(A0, n + 1)
    ext_M = ExtTable(M, A0, n, resolution=res_M)
    ext_A0 = ExtTable(A0, A0, n, resolution=res_A0)
    f = algebra.field
    report = []
    for i in range(n):
        target_dim = ext_M.dim(i + 1)
        products = []
        for x in ext_M.cocycles[i]:
            for y in ext_A0.cocycles[1]:
                prod = yoneda_product(res_M, i, x, res_A0, 1, y)
                products.append(ext_M.class_coords(i + 1, prod.matrix))
        span = Subspace(f, target_dim, [p for p in products if p]) if target_dim \
            else Subspace(f, 0)
        report.append((i + 1, span.dim, target_dim))
    return report


def is_quasi_koszul(M, n=DEFAULT_BOUND, algebra=None):
    """Ext^1(A_0,A_0) . Ext^i(M,A_0) = Ext^{i+1}(M,A_0) for i < n."""
    report = ext1_span_check(M, n, algebra=algebra)
    return all(got == want for _, got, want in report)


def is_quasi_koszul_algebra(algebra, n=DEFAULT_BOUND):
    return is_quasi_koszul(a0_module(algebra), n, algebra=algebra)


def module_projective_over_degree_zero(M):
    """Is M projective after restriction to the degree-0 subalgebra?"""
    from .covers import restrict_to_subalgebra
    a0, idx = M.algebra.degree_zero_subalgebra()
    return is_projective(restrict_to_subalgebra(M, a0, idx))


def algebra_projective_over_degree_zero(algebra):
    from .covers import restrict_to_subalgebra
    from .module import regular_module
    a0, idx = algebra.degree_zero_subalgebra()
    return is_projective(restrict_to_subalgebra(regular_module(algebra), a0, idx))


def theorem_koszul_vs_quasi_check(algebra, M, n=DEFAULT_BOUND):
    """Cross-check: Koszul == (quasi-Koszul and projective over A_0),
    applicable when A itself is projective over A_0."""
    report = {"hypothesis_A_projective_over_A0": algebra_projective_over_degree_zero(algebra)}
    if not report["hypothesis_A_projective_over_A0"]:
        report["applicable"] = False
        return report
    report["applicable"] = True
    koszul = is_koszul_module(M, n)
    qk = is_quasi_koszul(M, n, algebra=algebra)
    mproj = module_projective_over_degree_zero(M)
    report["koszul"] = koszul.holds
    report["quasi_koszul"] = qk
    report["M_projective_over_A0"] = mproj
    report["consistent"] = koszul.holds == (qk and mproj)
    return report


# ----------------------------------------------------------------------
# Yoneda algebras


class YonedaAlgebra:
    """Ext algebra of a labeled direct sum, with class bookkeeping."""

    def __init__(self, algebra, labeled_summands, n=DEFAULT_BOUND):
        self.base = algebra
        self.labels = [lbl for lbl, _ in labeled_summands]
        self.summands = [m for _, m in labeled_summands]
        self.bound = n
        self.resolutions = [minimal_resolution(m, n + 1) for m in self.summands]
        for lbl, res in zip(self.labels, self.resolutions):
            if not res.terminated:
                raise StratkosError(
                    f"resolution of summand {lbl} does not terminate by {n + 1}; "
                    "the Ext algebra would be a truncation")
        self.tables = {}
        for s, M in enumerate(self.summands):
            for t, N in enumerate(self.summands):
                self.tables[(s, t)] = ExtTable(M, N, n,
                                               resolution=self.resolutions[s])
        for s in range(len(self.summands)):
            self.tables[(s, s)].ensure_degree0_rep(self.resolutions[s].augmentation())
        self.basis = []          # (s, t, i, index)
        for i in range(n + 1):
            for s in range(len(self.summands)):
                for t in range(len(self.summands)):
                    for c in range(self.tables[(s, t)].dim(i)):
                        self.basis.append((s, t, i, c))
        self.algebra = self._build_algebra()

    def _identity_coords(self, s):
        res = self.resolutions[s]
        eps = res.augmentation()
        table = self.tables[(s, s)]
        return table.class_coords(0, eps)

    def _build_algebra(self):
        f = self.base.field
        names, src, tgt, deg = [], [], [], []
        pos = {}
        for (s, t, i, c) in self.basis:
            pos[(s, t, i, c)] = len(names)
            names.append(f"E{i}[{self.labels[s]}->{self.labels[t]}]{c}")
            src.append(s)
            tgt.append(t)
            deg.append(i)
        mult = {}
        for a, (s1, t1, i1, c1) in enumerate(self.basis):
            x = self.tables[(s1, t1)].cocycles[i1][c1]
            for b, (s2, t2, i2, c2) in enumerate(self.basis):
                if t2 != s1:
                    continue
                # product x . y with y applied first: y in Ext^{i2}(s2 -> t2),
                # x in Ext^{i1}(t2=s1 -> t1); composite in Ext^{i1+i2}(s2 -> t1)
                if i1 + i2 > self.bound:
                    continue
                y = self.tables[(s2, t2)].cocycles[i2][c2]
                prod = yoneda_product(self.resolutions[s2], i2, y,
                                      self.resolutions[s1], i1, x)
                coords = self.tables[(s2, t1)].class_coords(i1 + i2, prod.matrix)
                terms = []
                for c, coeff in enumerate(coords):
                    if coeff != f.zero:
                        terms.append((pos[(s2, t1, i1 + i2, c)], coeff))
                if terms:
                    mult[(a, b)] = tuple(terms)
        # idempotents: identity classes (the degree-0 tables were rebased so
        # each identity class is its block's first representative)
        idem = []
        for s in range(len(self.summands)):
            coords = self._identity_coords(s)
            hits = [(c, v) for c, v in enumerate(coords) if v != f.zero]
            if len(hits) == 1 and hits[0][1] == f.one:
                idem.append(pos[(s, s, 0, hits[0][0])])
                continue
            raise StratkosError("identity class is not a chosen basis vector")
        return Algebra(f, names, src, tgt, deg,
                       [str(lbl) for lbl in self.labels], idem, mult)


def yoneda_algebra(algebra, labeled_summands, n=DEFAULT_BOUND):
    """Ext algebra as an Algebra (graded by cohomological degree)."""
    return YonedaAlgebra(algebra, labeled_summands, n)


# ----------------------------------------------------------------------
# the quadratic Koszul complex


def koszul_complex(algebra, n):
    """The quadratic complex A (x) P^m_m with the left-multiplication
    differential, together with a stagewise exactness report.

    P^m_m is the intersection of the shifted relation sandwiches inside the
    m-th tensor power of A_1 over A_0; the complex resolves A_0 exactly when
    the algebra is Koszul.
    """
    from .errors import NotQuadratic
    from .module import regular_module, direct_sum
    from .tensoralg import TensorTower, is_quadratic
    from .linalg import Subspace, unit_vec

    if not is_quadratic(algebra):
        raise NotQuadratic("the Koszul complex needs a quadratic algebra")
    f = algebra.field
    tower = TensorTower(algebra, n + 1)
    r2 = tower.relation_space(2)

    def intersection_reps(m):
        """Coset representatives of P^m_m inside the plain m-tensor."""
        if m == 0:
            return [()], None
        if m == 1:
            dim = tower.plain_dim(1)
            bal = tower.balancing(1)
            reps = []
            taken = bal
            for t in range(dim):
                v = unit_vec(f, dim, t)
                if not taken.contains(v):
                    reps.append(v)
                    taken = taken.add_vectors([v])
            return reps, bal
        dim = tower.plain_dim(m)
        bal = tower.balancing(m)
        # intersection over positions of A_1^i (x) R (x) A_1^{m-i-2} + B
        spaces = []
        for i in range(m - 1):
            vecs = list(bal.basis)
            for pre in tower.tuples(i):
                for post in tower.tuples(m - i - 2):
                    for rvec in r2.basis:
                        v = [f.zero] * dim
                        mlen = len(tower.a1)
                        for pair_flat, c in enumerate(rvec):
                            if c == f.zero:
                                continue
                            p0, p1 = divmod(pair_flat, mlen)
                            t = pre + (p0, p1) + post
                            v[tower._flat(t)] = f.add(v[tower._flat(t)], c)
                        vecs.append(tuple(v))
            spaces.append(Subspace(f, dim, vecs))
        inter = spaces[0]
        for s in spaces[1:]:
            inter = inter.intersect(s)
        reps = []
        taken = bal
        for v in inter.basis:
            if not taken.contains(v):
                reps.append(v)
                taken = taken.add_vectors([v])
        return reps, bal

    reps_per_level = []
    for m in range(n + 2):
        reps, _ = intersection_reps(m)
        reps_per_level.append(reps)
        if m >= 2 and not reps:
            break
    levels = len(reps_per_level)

    # stage modules: P^m = (regular^{r_m} shifted by m) / balancing
    reg = regular_module(algebra)
    stages = []
    stage_data = []
    for m, reps in enumerate(reps_per_level):
        r = len(reps)
        if r == 0:
            stages.append(None)
            stage_data.append(None)
            continue
        big, incls = direct_sum([reg.shift(m) for _ in range(r)],
                                name=f"K^{m}")
        killed = []
        a0_idx = algebra.degree_indices(0)
        if m >= 1:
            for t, w in enumerate(reps):
                for b in range(algebra.dim):
                    for a0 in a0_idx:
                        ba0 = algebra.mult_vec(algebra.basis_vector(b),
                                               algebra.basis_vector(a0))
                        a0w = _tensor_left_act(algebra, tower, a0, w, m)
                        # express a0 . w in reps modulo balancing
                        coords = _tensor_coords(f, tower, m, reps, a0w)
                        vec = [f.zero] * big.dim
                        off_t = t * algebra.dim
                        for k, c in enumerate(ba0):
                            vec[off_t + k] = f.add(vec[off_t + k], c)
                        for s, cs in enumerate(coords):
                            if cs == f.zero:
                                continue
                            off_s = s * algebra.dim
                            bb = algebra.basis_vector(b)
                            for k, c in enumerate(bb):
                                vec[off_s + k] = f.sub(vec[off_s + k], f.mul(cs, c))
                        if any(x != f.zero for x in vec):
                            killed.append(tuple(vec))
        quo, proj = big.quotient(killed, name=f"P^{m}")
        stages.append(quo)
        stage_data.append((big, proj, reps))

    # differentials d_m : P^m -> P^{m-1}
    diffs = {}
    for m in range(1, levels):
        if stages[m] is None or stages[m - 1] is None:
            continue
        big_m, proj_m, reps_m = stage_data[m]
        big_p, proj_p, reps_p = stage_data[m - 1]
        cols = []
        for col in range(stages[m].dim):
            pre = _any_preimage(f, proj_m, unit_vec(f, stages[m].dim, col))
            vec_out = [f.zero] * big_p.dim
            for flat_idx, c in enumerate(pre):
                if c == f.zero:
                    continue
                t, k = divmod(flat_idx, algebra.dim)
                img = _tensor_strip_first(algebra, tower, reps_m[t], m, k, c,
                                          reps_p, f)
                for pos, val in img.items():
                    vec_out[pos] = f.add(vec_out[pos], val)
            cols.append(proj_p.mul_vec(tuple(vec_out)))
        diffs[m] = Matrix.from_cols(f, cols, rows=stages[m - 1].dim)

    # augmentation P^0 = A -> A_0 and exactness bookkeeping
    report = {"stage_dims": [s.dim if s else 0 for s in stages]}
    ok_dd = True
    for m in range(2, levels):
        if m in diffs and (m - 1) in diffs:
            if not diffs[m - 1].mul(diffs[m]).is_zero():
                ok_dd = False
    report["d_squared_zero"] = ok_dd
    a0_dim = len(algebra.degree_indices(0))
    exact = []
    for m in range(1, min(levels, n + 1)):
        if stages[m - 1] is None:
            break
        if m == 1:
            ker = stages[0].dim - a0_dim
        else:
            ker = stages[m - 1].dim - diffs[m - 1].rank()
        image = diffs[m].rank() if m in diffs else 0
        exact.append(image == ker)
    report["exact_stages"] = exact
    report["exact_through_bound"] = all(exact)
    return stages, diffs, report


def _tensor_left_act(algebra, tower, a0_index, w, m):
    """Left action of a degree-0 basis element on a plain m-tensor vector."""
    f = algebra.field
    dim = tower.plain_dim(m)
    out = [f.zero] * dim
    mlen = len(tower.a1)
    for flat, c in enumerate(w):
        if c == f.zero:
            continue
        t = []
        rest = flat
        for pos in range(m):
            power = mlen ** (m - pos - 1)
            t.append(rest // power)
            rest %= power
        first = tower.a1[t[0]]
        for k, ck in algebra.mult.get((a0_index, first), ()):
            ki = tower.a1.index(k)
            t2 = tuple([ki] + t[1:])
            out[tower._flat(t2)] = f.add(out[tower._flat(t2)], f.mul(c, ck))
    return tuple(out)


def _tensor_coords(f, tower, m, reps, vec):
    """Coordinates of a plain m-tensor vector in reps modulo balancing."""
    bal = tower.balancing(m)
    cols = [tuple(r) for r in reps] + list(bal.basis)
    mcols = Matrix.from_cols(f, cols, rows=tower.plain_dim(m))
    sol = mcols.solve(vec)
    if sol is None:
        raise StratkosError("vector escapes the tensor level")
    return tuple(sol[: len(reps)])


def _tensor_strip_first(algebra, tower, w, m, basis_k, coeff, reps_prev, f):
    """Image of (basis_k (x) w) under a (x) v1 (x) ... -> a v1 (x) ...,
    in big-(m-1)-stage coordinates {summand t -> algebra coords}."""
    out = {}
    mlen = len(tower.a1)
    for flat, c in enumerate(w):
        if c == f.zero:
            continue
        t = []
        rest = flat
        for pos in range(m):
            power = mlen ** (m - pos - 1)
            t.append(rest // power)
            rest %= power
        first = tower.a1[t[0]]
        tail = tuple(t[1:])
        prod = algebra.mult.get((basis_k, first), ())
        if not prod:
            continue
        if m == 1:
            for k2, c2 in prod:
                pos = 0 * algebra.dim + k2
                out[pos] = f.add(out.get(pos, f.zero), f.mul(f.mul(coeff, c), c2))
            continue
        tail_vec = [f.zero] * tower.plain_dim(m - 1)
        tail_vec[tower._flat(tail)] = f.one
        coords = _tensor_coords(f, tower, m - 1, reps_prev, tuple(tail_vec))
        for s, cs in enumerate(coords):
            if cs == f.zero:
                continue
            for k2, c2 in prod:
                pos = s * algebra.dim + k2
                out[pos] = f.add(out.get(pos, f.zero),
                                 f.mul(f.mul(f.mul(coeff, c), cs), c2))
    return out


def _any_preimage(f, proj, target):
    sol = proj.solve(target)
    if sol is None:
        raise StratkosError("quotient projection is not surjective")
    return sol


# ----------------------------------------------------------------------
# duality and reduction correspondence


def a0_summand_module(algebra, vertex, name=None):
    """A_0 e_v as a graded left module (quotient of P_v by positive degrees)."""
    from .module import projective_module
    from .linalg import unit_vec as _uv
    v = vertex if isinstance(vertex, int) else algebra.vertex_index(vertex)
    P = projective_module(algebra, v)
    kill = [_uv(algebra.field, P.dim, i) for i in range(P.dim) if P.degrees[i] > 0]
    quo, _ = P.quotient(kill, name=name or f"A0e_{algebra.vertices[v]}")
    return quo


def ext_functor_module(algebra, M, n, yon=None):
    """E(M) = Ext^*(M, A_0) as a graded module over the Yoneda algebra of the
    A_0 summands.  Returns (module, yoneda, per-basis bookkeeping)."""
    from .module import Module as _Module
    f = algebra.field
    labeled = [(algebra.vertices[v], a0_summand_module(algebra, v))
               for v in range(len(algebra.vertices))]
    if yon is None:
        yon = YonedaAlgebra(algebra, labeled, n)
    res_M = minimal_resolution(M, n + 1)
    if not res_M.terminated:
        raise StratkosError("E(M) needs a terminating resolution within the bound")
    tables = {t: ExtTable(M, yon.summands[t], n, resolution=res_M)
              for t in range(len(yon.summands))}
    basis = []   # (t, i, c)
    for i in range(n + 1):
        for t in range(len(yon.summands)):
            for c in range(tables[t].dim(i)):
                basis.append((t, i, c))
    pos = {b: k for k, b in enumerate(basis)}
    dim = len(basis)
    gamma = yon.algebra
    action = []
    for gi in range(gamma.dim):
        s1, t1, j, c1 = yon.basis[gi]
        u = yon.tables[(s1, t1)].cocycles[j][c1]
        cols = []
        for (t, i, c) in basis:
            col = [f.zero] * dim
            if t == s1 and i + j <= n:
                xi = tables[t].cocycles[i][c]
                prod = yoneda_product(res_M, i, xi, yon.resolutions[s1], j, u)
                coords = tables[t1].class_coords(i + j, prod.matrix)
                for c2, val in enumerate(coords):
                    if val != f.zero:
                        col[pos[(t1, i + j, c2)]] = val
            cols.append(col)
        action.append(Matrix.from_cols(f, cols, rows=dim))
    verts = [t for (t, i, c) in basis]
    degs = [i for (t, i, c) in basis]
    em = _Module(gamma, action, verts, degs, name=f"E({M.name})")
    return em, yon, basis


def duality_check(algebra, M, n=DEFAULT_BOUND):
    """Instance-level Koszul duality: E(M) is Koszul over the Yoneda algebra
    and the double dual has the graded dimensions of M."""
    koszul_A = is_koszul_algebra(algebra, n)
    koszul_M = is_koszul_module(M, n)
    if not (koszul_A.holds and koszul_M.holds):
        raise HypothesisFailed("duality needs a Koszul algebra and module")
    em, yon, _ = ext_functor_module(algebra, M, n)
    gamma = yon.algebra
    report = {"gamma_dim": gamma.dim,
              "EM_dims": em.graded_dims()}
    verdict = is_koszul_module(em, n)
    report["EM_koszul"] = bool(verdict)
    gamma0 = a0_module(gamma, name="Gamma_0")
    table = ExtTable(em, gamma0, n)
    double = {i: table.dim(i) for i in range(n + 1) if table.dim(i)}
    mdims = M.graded_dims()
    report["double_dual_dims"] = double
    report["M_dims"] = mdims
    report["dims_match"] = all(double.get(i, 0) == mdims.get(i, 0)
                               for i in range(n + 1))
    return report


def reduction_correspondence_check(algebra, M, n=DEFAULT_BOUND):
    """Generalized Koszulity of M over A versus classical Koszulity of the
    reduced module over the radical reduction; hypothesis violations are
    reported instead of asserted equivalences."""
    from .covers import reduce_module
    report = {}
    report["A_projective_over_A0"] = algebra_projective_over_degree_zero(algebra)
    report["M_projective_over_A0"] = module_projective_over_degree_zero(M)
    hyp = report["A_projective_over_A0"] and report["M_projective_over_A0"]
    report["hypotheses_hold"] = hyp
    abar, proj, ideal = algebra.radical_reduction()
    mbar = reduce_module(M, abar, proj, ideal)
    try:
        left = is_koszul_module(M, n)
        report["koszul_over_A"] = bool(left)
    except NotGeneratedDegreeZero:
        report["koszul_over_A"] = None
    try:
        right = is_koszul_module(mbar, n)
        report["koszul_over_Abar"] = bool(right)
    except NotGeneratedDegreeZero:
        report["koszul_over_Abar"] = None
    if hyp and report["koszul_over_A"] is not None \
            and report["koszul_over_Abar"] is not None:
        report["equivalence_holds"] = \
            report["koszul_over_A"] == report["koszul_over_Abar"]
    else:
        report["equivalence_holds"] = None
        report["note"] = "hypothesis violated; no equivalence asserted"
    return report

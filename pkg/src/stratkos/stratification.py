"""Standard modules for a linear order, Delta-filtrations, stratification
decisions, height machinery, and the extension algebra of the standards."""

from __future__ import annotations

from .algebra import Algebra
from .covers import is_iso_to_projective_power, is_projective, projective_cover
from .errors import (NotFiltered, NotGeneratedInHeight, NotStratified,
                     StratkosError)
from .homological import (DEFAULT_BOUND, ExtTable, is_koszul_module,
                          minimal_resolution, yoneda_algebra)
from .linalg import Matrix, Subspace, unit_vec
from .module import (Module, direct_sum, hom_basis, hom_dim,
                     projective_module, regular_module, zero_module)


class LinearOrder:
    """Total order on the vertex set, stored least-to-greatest."""

    def __init__(self, algebra, ascending):
        self.algebra = algebra
        self.ascending = [v if isinstance(v, int) else algebra.vertex_index(v)
                          for v in ascending]
        if sorted(self.ascending) != list(range(len(algebra.vertices))):
            raise StratkosError("order must be a permutation of the vertices")

    @classmethod
    def from_descending(cls, algebra, descending):
        return cls(algebra, list(reversed(list(descending))))

    @property
    def descending(self):
        return list(reversed(self.ascending))

    def position(self, v):
        return self.ascending.index(v)

    def greater(self, v):
        p = self.position(v)
        return self.ascending[p + 1:]

    def height(self, v):
        """1-based layer in the iterated-minimal partition (linear case:
        the position from the bottom)."""
        return self.position(v) + 1

    def reversed_order(self):
        return LinearOrder(self.algebra, self.descending)

    def labels_descending(self):
        return [self.algebra.vertices[v] for v in self.descending]

    def __repr__(self):
        return " > ".join(self.labels_descending())

    def __eq__(self, other):
        return isinstance(other, LinearOrder) and self.ascending == other.ascending

    def __hash__(self):
        return hash(tuple(self.ascending))


class StandardSystem:
    def __init__(self, algebra, order, graded=None):
        self.algebra = algebra
        self.order = order
        if graded is None:
            graded = algebra.max_degree > 0
        self.graded = graded
        self.deltas = {}
        self.trace_submodules = {}
        for v in range(len(algebra.vertices)):
            p = projective_module(algebra, v, graded=graded)
            gens = []
            f = algebra.field
            for mu in order.greater(v):
                tr = p.generated_by([unit_vec(f, p.dim, i)
                                     for i in range(p.dim) if p.vertex[i] == mu])
                gens.extend(tr.basis)
            tr_sub, _ = p.submodule(gens, name=f"trace>{algebra.vertices[v]}")
            self.trace_submodules[v] = tr_sub
            delta, _ = p.quotient(gens, name=f"Delta_{algebra.vertices[v]}")
            self.deltas[v] = delta
        self._mult_table = None

    def delta(self, v):
        v = v if isinstance(v, int) else self.algebra.vertex_index(v)
        return self.deltas[v]

    def delta_sum(self):
        ordered = sorted(self.deltas)
        mods = [self.deltas[v] for v in ordered]
        total, _ = direct_sum(mods, name="Delta")
        return total

    def labeled_deltas(self):
        return [(self.algebra.vertices[v], self.deltas[v])
                for v in sorted(self.deltas)]

    def dims(self):
        return {self.algebra.vertices[v]: self.deltas[v].dim
                for v in sorted(self.deltas)}

    def regular_multiplicities(self):
        """[P_mu : Delta_lambda] table; None entries when a P fails to filter."""
        if self._mult_table is None:
            table = {}
            for v in range(len(self.algebra.vertices)):
                p = projective_module(self.algebra, v, graded=self.graded)
                table[self.algebra.vertices[v]] = delta_filtration(p, self)
            self._mult_table = table
        return self._mult_table

    def quotient_chain(self):
        """Per strip step (greatest vertex first): the algebra the step works
        over and, for all but the last, the ideal and projection onto the
        next quotient.  Cached; shared by every filtration over this system."""
        if getattr(self, "_chain", None) is None:
            chain = []
            cur_alg = self.algebra
            descending = self.order.descending
            for t, v in enumerate(descending):
                label = self.algebra.vertices[v]
                if t == len(descending) - 1:
                    chain.append((cur_alg, label, None, None, None, None))
                    break
                cur_v = cur_alg.vertex_index(label)
                ideal = cur_alg.ideal_closure(
                    [cur_alg.basis_vector(cur_alg.idem[cur_v])])
                quo_alg, proj = cur_alg.quotient_by_ideal(ideal)
                reps = [proj.solve(unit_vec(self.algebra.field, quo_alg.dim, i))
                        for i in range(quo_alg.dim)]
                chain.append((cur_alg, label, ideal, quo_alg, proj, reps))
                cur_alg = quo_alg
            self._chain = chain
        return self._chain


def standard_modules(algebra, order, graded=None):
    return StandardSystem(algebra, order, graded=graded)


def view_over_quotient(M, quo, proj, killed_ideal, reps=None):
    """Reinterpret M (annihilated by the ideal) over the quotient algebra."""
    algebra, f = M.algebra, M.algebra.field
    for w in killed_ideal.basis:
        for c in range(M.dim):
            if any(x != f.zero for x in M.act_vec(w, unit_vec(f, M.dim, c))):
                raise StratkosError("module is not annihilated by the ideal")
    if reps is None:
        reps = [proj.solve(unit_vec(f, quo.dim, t)) for t in range(quo.dim)]
    action = []
    for rep in reps:
        cols = [M.act_vec(rep, unit_vec(f, M.dim, c)) for c in range(M.dim)]
        action.append(Matrix.from_cols(f, cols, rows=M.dim))
    vert_map = {lbl: i for i, lbl in enumerate(quo.vertices)}
    verts = [vert_map[algebra.vertices[v]] for v in M.vertex]
    return Module(quo, action, verts, M.degrees, name=M.name)


class FiltrationWitness:
    def __init__(self, stage_vertex, trace_dim, projective_dim, message):
        self.stage_vertex = stage_vertex
        self.trace_dim = trace_dim
        self.projective_dim = projective_dim
        self.message = message

    def __repr__(self):
        return f"FiltrationWitness({self.message})"


def delta_filtration(M, system):
    """Multiplicity dict {vertex label: m} when M has a Delta-filtration,
    else a FiltrationWitness.

    Strips the maximal remaining vertex: its trace in the current module must
    be a power of the current projective, then passes to the quotient algebra.
    """
    algebra = system.algebra
    # filtrations are an ungraded notion: a trace may be a sum of shifted
    # copies of the same projective
    cur = M.forget_grading() if M.degrees is not None else M
    mults = {}
    chain = system.quotient_chain()
    for cur_alg, label, ideal, quo_alg, proj, reps in chain[:-1]:
        cur_v = cur_alg.vertex_index(label)
        killed = []
        if cur.dim == 0:
            mults[label] = 0
        else:
            tr_sub, incl = cur.trace_from_vertex(cur_v)
            m = is_iso_to_projective_power(tr_sub, cur_v)
            if m is None:
                return FiltrationWitness(
                    label, tr_sub.dim, projective_module(cur_alg, cur_v).dim,
                    f"trace at {label} is not a projective power")
            mults[label] = m
            killed = [incl.col(j) for j in range(incl.cols)]
        quo_mod, _ = cur.quotient(killed, name=f"{cur.name}/tr")
        cur = view_over_quotient(quo_mod, quo_alg, proj, ideal, reps=reps)
    # bottom vertex: the leftover must itself be a projective power
    cur_alg, label = chain[-1][0], chain[-1][1]
    if cur.dim == 0:
        mults[label] = 0
        return mults
    cur_v = cur_alg.vertex_index(label)
    m = is_iso_to_projective_power(cur, cur_v)
    if m is None:
        return FiltrationWitness(label, cur.dim,
                                 projective_module(cur_alg, cur_v).dim,
                                 f"residue at {label} is not a projective power")
    mults[label] = m
    return mults


def is_standardly_stratified(algebra, order, system=None):
    """(bool, per-vertex filtration data)."""
    system = system or StandardSystem(algebra, order)
    data = system.regular_multiplicities()
    ok = all(not isinstance(v, FiltrationWitness) for v in data.values())
    return ok, data


def is_properly_stratified(algebra, order):
    ok_left, _ = is_standardly_stratified(algebra, order)
    if not ok_left:
        return False
    op = algebra.opposite()
    op_order = LinearOrder(op, order.ascending)
    ok_right, _ = is_standardly_stratified(op, op_order)
    return ok_right


# ----------------------------------------------------------------------
# heights and linear filtrations


def filtration_multiplicities(M, system):
    out = delta_filtration(M, system)
    if isinstance(out, FiltrationWitness):
        raise NotFiltered(out.message)
    return out


def min_height(M, system):
    mults = filtration_multiplicities(M, system)
    heights = [system.order.height(system.algebra.vertex_index(lbl))
               for lbl, m in mults.items() if m]
    return min(heights) if heights else None


def is_generated_in_height(M, i, system, mults=None):
    """Top(M) = sum of S_lambda^{m_lambda} over h(lambda) = i."""
    algebra = system.algebra
    if mults is None:
        mults = filtration_multiplicities(M, system)
    top, _ = M.top()
    top_dims = {}
    for v in top.vertex:
        top_dims[v] = top_dims.get(v, 0) + 1
    for v in range(len(algebra.vertices)):
        lbl = algebra.vertices[v]
        m = mults.get(lbl, 0)
        h = system.order.height(v)
        want = m if h == i else 0
        if top_dims.get(v, 0) != want:
            return False
    return True


def relative_cover_and_syzygy(M, system):
    """(cover, relative syzygy) for M generated in its minimal height.

    For the classical system the relative cover is the ordinary projective
    cover; the kernel is checked to stay in F(Delta).
    """
    mults = filtration_multiplicities(M, system)
    i = min_height(M, system)
    if i is None:
        return None, zero_module(system.algebra, graded=M.degrees is not None)
    if not is_generated_in_height(M, i, system, mults=mults):
        raise NotGeneratedInHeight(f"{M.name} is not generated in height {i}")
    cover = projective_cover(M)
    ker = cover.matrix.kernel_basis()
    omega, _ = cover.cover.submodule(list(ker), name=f"OmegaF({M.name})")
    if omega.dim:
        check = delta_filtration(omega, system)
        if isinstance(check, FiltrationWitness):
            raise NotFiltered("relative syzygy left F(Delta)")
    return cover, omega


def is_linearly_filtered(M, system):
    """All relative syzygies generated in strictly increasing heights."""
    cur = M
    mults = delta_filtration(cur, system)
    if isinstance(mults, FiltrationWitness):
        return False
    i = min_height(cur, system)
    if i is None:
        return True
    bound = len(system.algebra.vertices) + 1
    for step in range(bound):
        if cur.dim == 0:
            return True
        if not is_generated_in_height(cur, i + step, system):
            return False
        cover = projective_cover(cur)
        ker = cover.matrix.kernel_basis()
        cur, _ = cover.cover.submodule(list(ker), name="OmegaF")
        if cur.dim and isinstance(delta_filtration(cur, system), FiltrationWitness):
            return False
    return cur.dim == 0


# ----------------------------------------------------------------------
# the extension algebra of the standard modules


def gamma_of_standards(algebra, order, n=DEFAULT_BOUND, system=None):
    """(Gamma as an Algebra, diagnostics dict)."""
    system = system or StandardSystem(algebra, order)
    ok, _ = is_standardly_stratified(algebra, order, system=system)
    if not ok:
        raise NotStratified(f"not standardly stratified for {order}")
    labeled = system.labeled_deltas()
    yon = yoneda_algebra(algebra, labeled, n)
    gamma = yon.algebra
    diagnostics = {
        "vanishing_above": _check_ext_vanishing(yon, system),
        "gamma_directed": gamma.is_directed() is not None,
    }
    return gamma, diagnostics, yon


def _check_ext_vanishing(yon, system):
    """Ext^n(Delta_l, Delta_m) = 0 unless l <= m in the order."""
    order = system.order
    algebra = system.algebra
    for s, lbl_s in enumerate(yon.labels):
        for t, lbl_t in enumerate(yon.labels):
            vs = algebra.vertex_index(lbl_s)
            vt = algebra.vertex_index(lbl_t)
            if order.position(vs) <= order.position(vt):
                continue
            for i in range(yon.bound + 1):
                if yon.tables[(s, t)].dim(i):
                    return False
    return True


def endomorphism_algebra(M):
    """End_A(M) as a one-vertex table Algebra; also returns the hom basis."""
    f = M.algebra.field
    homs = hom_basis(M, M)
    ident = Matrix.identity(f, M.dim)
    # choose a basis with the identity first
    flat = [tuple(x for row in h.matrix.data for x in row) for h in homs]
    id_flat = tuple(x for row in ident.data for x in row)
    hom_mat = Matrix(f, flat, cols=M.dim * M.dim)
    id_coords = hom_mat.transpose().solve(id_flat)
    if id_coords is None:
        raise StratkosError("identity is not an endomorphism (broken hom solve)")
    basis_mats = [ident]
    taken = Subspace(f, M.dim * M.dim, [id_flat])
    for h in homs:
        fl = tuple(x for row in h.matrix.data for x in row)
        if not taken.contains(fl):
            basis_mats.append(h.matrix)
            taken = taken.add_vectors([fl])
    n = len(basis_mats)
    flat_mat = Matrix(f, [tuple(x for row in m.data for x in row) for m in basis_mats],
                      cols=M.dim * M.dim)
    mult = {}
    for a in range(n):
        for b in range(n):
            comp = basis_mats[a].mul(basis_mats[b])
            fl = tuple(x for row in comp.data for x in row)
            sol = flat_mat.transpose().solve(fl)
            if sol is None:
                raise StratkosError("endomorphisms do not close under composition")
            terms = tuple((k, c) for k, c in enumerate(sol) if c != f.zero)
            if terms:
                mult[(a, b)] = terms
    names = [f"end{t}" for t in range(n)]
    names[0] = "id"
    alg = Algebra(f, names, [0] * n, [0] * n, [0] * n, ["*"], [0], mult)
    return alg, basis_mats


def theorem_ext_projectivity_check(algebra, order, n=DEFAULT_BOUND, system=None):
    """Is Ext^s(Delta_l, Delta_m) projective over End(Delta_m) for all l, m,
    s <= n?  Returns (bool, detail dict)."""
    system = system or StandardSystem(algebra, order)
    ok, _ = is_standardly_stratified(algebra, order, system=system)
    if not ok:
        raise NotStratified("hypothesis: standardly stratified")
    details = {}
    overall = True
    for mu in range(len(algebra.vertices)):
        dmu = system.deltas[mu]
        end_alg, end_mats = endomorphism_algebra(dmu)
        for lam in range(len(algebra.vertices)):
            dl = system.deltas[lam]
            res = minimal_resolution(dl, n + 1)
            table = ExtTable(dl, dmu, n, resolution=res)
            for s in range(n + 1):
                d = table.dim(s)
                if d == 0:
                    continue
                # End(Delta_mu) acts by postcomposition on cocycles
                f = algebra.field
                action = []
                for em in end_mats:
                    cols = []
                    for rep in table.cocycles[s]:
                        comp = em.mul(rep.matrix)
                        cols.append(table.class_coords(s, comp))
                    action.append(Matrix.from_cols(f, cols, rows=d))
                mod = Module(end_alg, action, [0] * d, None,
                             name=f"Ext^{s}(D{lam},D{mu})")
                proj = is_projective(mod)
                details[(algebra.vertices[lam], algebra.vertices[mu], s)] = proj
                overall = overall and proj
    return overall, details


def theorem_gamma_koszul_check(algebra, order, n=DEFAULT_BOUND, system=None):
    """Checks the linear-filtration criterion for Gamma to be generalized
    Koszul: Hom(A, Delta) = End(Delta) in dimension, all standards linearly
    filtered; when the hypotheses hold, certifies a linear resolution of
    Gamma_0 over Gamma up to the bound."""
    system = system or StandardSystem(algebra, order)
    delta = system.delta_sum()
    report = {}
    report["dim_hom_A_delta"] = hom_dim(regular_module(algebra, name="A"), delta)
    report["dim_end_delta"] = hom_dim(delta, delta)
    report["hom_condition"] = report["dim_hom_A_delta"] == report["dim_end_delta"]
    report["linearly_filtered"] = {
        algebra.vertices[v]: is_linearly_filtered(system.deltas[v], system)
        for v in sorted(system.deltas)}
    report["hypotheses_hold"] = report["hom_condition"] and \
        all(report["linearly_filtered"].values())
    gamma, diag, yon = gamma_of_standards(algebra, order, n, system=system)
    report["gamma_diagnostics"] = diag
    report["gamma_dim"] = gamma.dim
    report["gamma_graded_dims"] = {d: len(gamma.degree_indices(d))
                                   for d in range(gamma.max_degree + 1)}
    if report["hypotheses_hold"]:
        verdict = is_koszul_module(_gamma_zero_module(gamma), n)
        report["gamma0_linear"] = bool(verdict)
        report["gamma0_verdict"] = repr(verdict)
    return report, gamma


def _gamma_zero_module(gamma):
    from .module import a0_module
    return a0_module(gamma, name="Gamma_0")

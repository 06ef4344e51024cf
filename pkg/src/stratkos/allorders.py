"""Stratification for all linear orders: characterizations, the associated
graded classification, cokernel closure of F(Delta), and the recursive
order-enumeration algorithm."""

from __future__ import annotations

from itertools import permutations, product

from .covers import is_iso_to_projective_power, is_projective
from .errors import (FieldNotFinite, NotDirected, NotQuasiHereditary,
                     NotStratified, StratkosError)
from .linalg import Subspace
from .module import (Module, direct_sum, hom_basis, projective_module,
                     regular_module)
from .stratification import (FiltrationWitness, LinearOrder, StandardSystem,
                             delta_filtration, is_standardly_stratified)
from .tensoralg import degree_part_bimodule, tensor_algebra_recognition


def is_ss_all_preorders(algebra):
    """Direct sum of local algebras: no morphisms between distinct vertices."""
    return all(algebra.src[i] == algebra.tgt[i] for i in range(algebra.dim))


def offdiagonal_left_module(algebra, name="J"):
    """J as a left submodule of the regular module (directed algebras only)."""
    vecs = algebra.offdiagonal_ideal_vectors()
    reg = regular_module(algebra)
    sub, _ = reg.submodule(vecs, name=name)
    return sub.forget_grading() if sub.degrees is not None else sub


def is_J_projective(algebra):
    """(bool, decomposition {vertex label: multiplicity} or None)."""
    if algebra.is_directed() is None:
        raise NotDirected("J is only defined for directed algebras")
    J = offdiagonal_left_module(algebra)
    if J.dim == 0:
        return True, {}
    if not is_projective(J):
        return False, None
    from .covers import projective_cover
    cover = projective_cover(J)
    decomp = {}
    for s in cover.summands:
        lbl = algebra.vertices[s.vertex]
        decomp[lbl] = decomp.get(lbl, 0) + 1
    return True, decomp


def all_traces_projective(algebra):
    """(bool, first failing (mu, lambda) pair or None).

    Checks tr_{P_mu}(P_lambda) for projectivity for every ordered pair.
    """
    for mu in range(len(algebra.vertices)):
        for lam in range(len(algebra.vertices)):
            p = projective_module(algebra, lam, graded=False)
            tr, _ = p.trace_from_vertex(mu)
            if tr.dim and not is_projective(tr):
                return False, (algebra.vertices[mu], algebra.vertices[lam])
    return True, None


def all_orders(algebra):
    n = len(algebra.vertices)
    return [LinearOrder(algebra, list(p)) for p in permutations(range(n))]


def is_ss_all_linear_orders(algebra, brute_force_limit=5):
    """Verdict with a criterion trace; the routes must agree.

    Routes: (2) directedness plus projective J, (3) projective traces, and
    for small vertex sets (1) brute force over every linear order.
    """
    trace = {}
    directed = algebra.is_directed() is not None
    trace["directed"] = directed
    if directed:
        ok_j, decomp = is_J_projective(algebra)
        trace["J_projective"] = ok_j
        trace["J_decomposition"] = decomp
        route2 = ok_j
    else:
        route2 = False
        trace["J_projective"] = None
    ok_tr, witness = all_traces_projective(algebra)
    trace["traces_projective"] = ok_tr
    trace["trace_witness"] = witness
    route3 = ok_tr
    verdict = route3
    if route2 != route3:
        raise StratkosError(f"route disagreement: J {route2} vs traces {route3}")
    if len(algebra.vertices) <= brute_force_limit:
        brute = all(is_standardly_stratified(algebra, o)[0] for o in all_orders(algebra))
        trace["brute_force"] = brute
        if brute != verdict:
            raise StratkosError(f"brute force {brute} disagrees with criteria {verdict}")
    return verdict, trace


def classify_tensor(algebra):
    """Classification of the associated graded algebra:
    not-all-orders | standardly-all-orders | properly-all-orders."""
    if algebra.is_directed() is None:
        raise NotDirected("classification needs a directed algebra")
    gr = algebra.associated_graded()
    recognized, failing = tensor_algebra_recognition(gr)
    report = {"graded_dim": gr.dim,
              "tensor_recognized": recognized,
              "tensor_failure_degree": failing}
    if not recognized:
        report["classification"] = "not-all-orders"
        return report, gr
    x1 = degree_part_bimodule(gr, 1)
    left_ok = is_projective(x1.left_module()) if x1.dim else True
    right_ok = is_projective(x1.right_module()) if x1.dim else True
    report["A1_left_projective"] = left_ok
    report["A1_right_projective"] = right_ok
    if not left_ok:
        report["classification"] = "not-all-orders"
    elif right_ok:
        report["classification"] = "properly-all-orders"
    else:
        report["classification"] = "standardly-all-orders"
    return report, gr


# ----------------------------------------------------------------------
# the recursive order enumeration


class OrderSet:
    def __init__(self, orders, provenance, dead_branches):
        self.orders = orders                # list of LinearOrder, full length
        self.provenance = provenance        # parallel list of choice traces
        self.dead_branches = dead_branches  # partial chains that ended early

    def descending_label_lists(self):
        return [o.labels_descending() for o in self.orders]

    def __contains__(self, order):
        return any(order == o for o in self.orders)

    def __len__(self):
        return len(self.orders)


def _candidate_set(algebra):
    """O_1: vertices whose traces in every projective are powers of their own
    projective."""
    out = []
    for lam in range(len(algebra.vertices)):
        ok = True
        for mu in range(len(algebra.vertices)):
            p = projective_module(algebra, mu, graded=False)
            tr, _ = p.trace_from_vertex(lam)
            if tr.dim == 0:
                continue
            if is_iso_to_projective_power(tr, lam) is None:
                ok = False
                break
        if ok:
            out.append(lam)
    return out


def _trace_order(algebra, candidates):
    """lambda <= mu iff tr_{P_mu}(P_lambda) != 0, verified to be a partial
    order on the candidate set."""
    leq = {}
    for lam in candidates:
        p = projective_module(algebra, lam, graded=False)
        for mu in candidates:
            tr, _ = p.trace_from_vertex(mu)
            leq[(lam, mu)] = tr.dim > 0
    for a in candidates:
        if not leq[(a, a)]:
            raise StratkosError("trace preorder is not reflexive")
        for b in candidates:
            if a != b and leq[(a, b)] and leq[(b, a)]:
                raise StratkosError("trace relation fails antisymmetry")
            for c in candidates:
                if leq[(a, b)] and leq[(b, c)] and not leq[(a, c)]:
                    raise StratkosError("trace relation fails transitivity")
    return leq


def enumerate_orders(algebra):
    """The recursive maximal-trace enumeration; all maximal choices are
    branched and complete chains collected."""
    results = []
    provenances = []
    dead = []
    base_labels = list(algebra.vertices)

    def recurse(cur_alg, chosen, trail):
        if not cur_alg.vertices:
            results.append(list(chosen))
            provenances.append(list(trail))
            return
        candidates = _candidate_set(cur_alg)
        if not candidates:
            dead.append((list(chosen), list(trail)))
            return
        leq = _trace_order(cur_alg, candidates)
        maximal = [lam for lam in candidates
                   if all(not leq[(lam, mu)] or mu == lam for mu in candidates)]
        for lam in sorted(maximal, key=lambda v: cur_alg.vertices[v]):
            label = cur_alg.vertices[lam]
            quo, _ = cur_alg.quotient_by_idempotent(lam)
            recurse(quo, chosen + [label], trail + [(label, tuple(
                cur_alg.vertices[m] for m in maximal))])

    recurse(algebra, [], [])
    orders = []
    provs = []
    seen = set()
    for labels, prov in zip(results, provenances):
        order = LinearOrder.from_descending(algebra, labels)
        key = tuple(order.ascending)
        if key in seen:
            continue
        seen.add(key)
        orders.append(order)
        provs.append(prov)
    pairs = sorted(zip(orders, provs), key=lambda op: op[0].ascending)
    orders = [o for o, _ in pairs]
    provs = [p for _, p in pairs]
    return OrderSet(orders, provs, dead)


# ----------------------------------------------------------------------
# cokernel closure


def _all_homs(f, hom_maps):
    """Every linear combination of the given ModuleMaps (finite field)."""
    if not hom_maps:
        return
    t = len(hom_maps)
    for coeffs in product(f.elements(), repeat=t):
        if all(c == 0 for c in coeffs):
            continue
        m = hom_maps[0].matrix.scale(f.of(coeffs[0]))
        for c, h in zip(coeffs[1:], hom_maps[1:]):
            m = m.add(h.matrix.scale(f.of(c)))
        yield m


def cokernel_closure_check(algebra, order, system=None, verbose=False):
    """Is F(Delta) closed under cokernels of monomorphisms from standard
    modules into projectives?  (bool, witness or None).

    Enumerates, over the finite base field, the injections Delta_lambda -> P
    where P runs over sums of projectives bounded by hom dimensions; each
    cokernel is tested for Delta-filtration membership.
    """
    f = algebra.field
    if not f.is_finite:
        raise FieldNotFinite("cokernel enumeration needs a finite field")
    system = system or StandardSystem(algebra, order, graded=False)
    ok, _ = is_standardly_stratified(algebra, order, system=system)
    if not ok:
        raise NotStratified(f"not standardly stratified for {order}")
    nverts = len(algebra.vertices)
    projs = [projective_module(algebra, v, graded=False) for v in range(nverts)]
    for lam in range(nverts):
        delta = system.deltas[lam]
        if delta.degrees is not None:
            delta = delta.forget_grading()
        bounds = []
        for v in range(nverts):
            bounds.append(len(hom_basis(delta, projs[v])))
        ranges = [range(b + 1) for b in bounds]
        seen_images = set()
        for counts in product(*ranges):
            if all(c == 0 for c in counts):
                continue
            pieces = []
            for v, c in enumerate(counts):
                pieces.extend([projs[v]] * c)
            P, _ = direct_sum(pieces)
            homs = hom_basis(delta, P)
            for m in _all_homs(f, homs):
                if m.rank() != delta.dim:
                    continue
                img_key = (tuple(counts),
                           Subspace(f, P.dim,
                                    [m.col(j) for j in range(m.cols)]).basis)
                if img_key in seen_images:
                    continue
                seen_images.add(img_key)
                killed = [m.col(j) for j in range(m.cols)]
                coker, _ = P.quotient(killed, name="coker")
                res = delta_filtration(coker, system)
                if isinstance(res, FiltrationWitness):
                    witness = {
                        "delta": algebra.vertices[lam],
                        "target": {algebra.vertices[v]: c
                                   for v, c in enumerate(counts) if c},
                        "cokernel_dims": coker.vertex_dims(),
                        "failure": res.message,
                    }
                    return False, witness
    return True, None


def qh_cokernel_criterion(algebra, order, system=None):
    """Quasi-hereditary closure criterion: all standards simple and the
    vertex support digraph acyclic."""
    system = system or StandardSystem(algebra, order, graded=False)
    ok, _ = is_standardly_stratified(algebra, order, system=system)
    if not ok:
        raise NotStratified(f"not standardly stratified for {order}")
    for v, d in system.deltas.items():
        if len(hom_basis(d, d)) != 1:
            raise NotQuasiHereditary(
                f"End(Delta_{algebra.vertices[v]}) has dimension != 1")
    all_simple = all(d.dim == 1 for d in system.deltas.values())
    acyclic = algebra.is_directed() is not None
    return all_simple and acyclic

"""Projective covers, syzygies, projectivity tests, duals, module reduction.

Covers are minimal: the cover of M is the projective cover of top(M), built
from primitive idempotents.  When every vertex idempotent is primitive the
summands are plain P_v[d]; for category algebras whose automorphism-group
algebras split, the vertex projectives refine and summand records carry the
refined piece.
"""

from __future__ import annotations

from .errors import StratkosError
from .linalg import Matrix, Subspace, unit_vec
from .module import (Module, cyclic_projective, direct_sum,
                     projective_module, regular_module, zero_module)


class CoverSummand:
    """One indecomposable projective summand (Af)[shift] of a cover."""

    def __init__(self, vertex, shift, piece, dim, primitive_index):
        self.vertex = vertex          # vertex index
        self.shift = shift            # degree of the generator (None if ungraded)
        self.piece = piece            # the summand as a Module
        self.dim = dim
        self.primitive_index = primitive_index  # index into primitive_idempotents()

    def key(self):
        return (self.vertex, self.primitive_index, self.shift)

    def __repr__(self):
        return f"CoverSummand(v{self.vertex}#{self.primitive_index}, shift {self.shift})"


class Cover:
    def __init__(self, module, summands, cover_module, matrix):
        self.module = module          # the covered module M
        self.summands = summands      # list of CoverSummand
        self.cover = cover_module     # P (direct sum of the summands)
        self.matrix = matrix          # covering map P -> M

    def summand_multiset(self):
        out = {}
        for s in self.summands:
            out[s.key()] = out.get(s.key(), 0) + 1
        return out

    def vertex_shift_multiset(self):
        out = {}
        for s in self.summands:
            out[(s.vertex, s.shift)] = out.get((s.vertex, s.shift), 0) + 1
        return out

    def __repr__(self):
        return f"Cover({self.module.name}: {len(self.summands)} summands, dim {self.cover.dim})"


def _indecomposable_projective(algebra, vertex, prim_index, f_vec, shift, graded):
    if algebra.has_primitive_vertex_idempotents():
        return projective_module(algebra, vertex, shift=shift if graded else 0,
                                 graded=graded)
    piece, _ = cyclic_projective(algebra, vertex, f_vec,
                                 shift=shift if graded else 0, graded=graded,
                                 name=f"P(v{vertex}#{prim_index})")
    return piece


def projective_cover(M):
    """Minimal cover of M; returns a Cover."""
    algebra, f = M.algebra, M.algebra.field
    graded = M.degrees is not None
    if M.dim == 0:
        return Cover(M, [], zero_module(algebra, graded=graded),
                     Matrix.zeros(f, 0, 0))
    top, proj = M.top()
    prims = algebra.primitive_idempotents()

    summands = []
    generators = []   # lifted generator vector in M per summand
    for prim_index, (v, f_vec) in enumerate(prims):
        # image of f on the top, split by degree
        img_vectors = []
        for c in range(top.dim):
            w = top.act_vec(f_vec, unit_vec(f, top.dim, c))
            img_vectors.append(w)
        img = Subspace(f, top.dim, img_vectors)
        if img.dim == 0:
            continue
        buckets = {}
        for row in img.basis:
            supp = [i for i, x in enumerate(row) if x != f.zero]
            d = top.degrees[supp[0]] if graded else None
            if graded and any(top.degrees[i] != d for i in supp):
                raise StratkosError("top of a graded module mixed degrees")
            buckets.setdefault(d, []).append(row)
        for d in sorted(buckets, key=lambda k: (k is None, k)):
            for w in buckets[d]:
                # lift w through M -> top and project with f
                u0 = proj.solve(w)
                if u0 is None:
                    raise StratkosError("top projection is not surjective")
                u = M.act_vec(f_vec, u0)
                piece = _indecomposable_projective(algebra, v, prim_index,
                                                   f_vec, d or 0, graded)
                summands.append(CoverSummand(v, d if graded else None,
                                             piece, piece.dim, prim_index))
                generators.append(u)

    if not summands:
        raise StratkosError("nonzero module with empty top")
    cover_module, incls = direct_sum([s.piece for s in summands],
                                     name=f"P({M.name})")
    # map: on the summand Af, x |-> x . u  (x runs through the piece basis,
    # which is a set of algebra vectors via the piece construction)
    cols = []
    for s, u in zip(summands, generators):
        piece_vectors = _piece_basis_vectors(algebra, s)
        for pv in piece_vectors:
            cols.append(M.act_vec(pv, u))
    matrix = Matrix.from_cols(f, cols, rows=M.dim)
    if matrix.rank() != M.dim:
        raise StratkosError("covering map failed to be surjective")
    cover = Cover(M, summands, cover_module, matrix)
    _check_minimal(cover)
    return cover


def _piece_basis_vectors(algebra, summand):
    """The piece's basis as vectors in A (generators for the covering map)."""
    if algebra.has_primitive_vertex_idempotents():
        v = summand.vertex
        return [algebra.basis_vector(i) for i in range(algebra.dim)
                if algebra.src[i] == v]
    prims = algebra.primitive_idempotents()
    f_vec = prims[summand.primitive_index][1]
    gens = [algebra.mult_vec(algebra.basis_vector(i), f_vec)
            for i in range(algebra.dim)]
    span = Subspace(algebra.field, algebra.dim, gens)
    reg = regular_module(algebra)
    blocks = reg.adapted_basis(list(span.basis))
    out = []
    for _, _, rows in blocks:
        out.extend(rows)
    return out


def _check_minimal(cover):
    """Kernel of the covering map must sit inside rad(P)."""
    M = cover.module
    algebra, f = M.algebra, M.algebra.field
    P = cover.cover
    ker = cover.matrix.kernel_basis()
    if not ker:
        return
    rad = Subspace(f, P.dim, P.radical_vectors())
    for v in ker:
        if not rad.contains(v):
            raise StratkosError("cover is not minimal: kernel escapes rad P")


def syzygy(M):
    """(Omega M, cover) with Omega M the kernel of the covering map."""
    cover = projective_cover(M)
    ker = cover.matrix.kernel_basis()
    sub, incl = cover.cover.submodule(list(ker), name=f"Omega({M.name})")
    return sub, cover


def syzygy_tower(M, n):
    """[Omega^1 M, ..., Omega^n M], stopping early at 0."""
    out = []
    cur = M
    for _ in range(n):
        if cur.dim == 0:
            break
        cur, _ = syzygy(cur)
        out.append(cur)
        if cur.dim == 0:
            break
    return out


def is_projective(M):
    """Cover-dimension criterion with honest minimal covers."""
    if M.dim == 0:
        return True
    return projective_cover(M).cover.dim == M.dim


_PROJ_PATTERN_CACHE = {}


def _projective_pattern(algebra, v, graded):
    """(dim, cover summand multiset) of P_v, cached per algebra instance."""
    key = (id(algebra), v, graded)
    hit = _PROJ_PATTERN_CACHE.get(key)
    if hit is not None and hit[0] is algebra:
        return hit[1], hit[2]
    p = projective_module(algebra, v, graded=graded)
    multiset = projective_cover(p).summand_multiset() if p.dim else {}
    _PROJ_PATTERN_CACHE[key] = (algebra, p.dim, multiset)
    return p.dim, multiset


def is_iso_to_projective_power(M, vertex):
    """Multiplicity m with M iso to P_vertex^m, or None."""
    algebra = M.algebra
    v = vertex if isinstance(vertex, int) else algebra.vertex_index(vertex)
    if M.dim == 0:
        return 0
    p_dim, p_multiset = _projective_pattern(algebra, v, M.degrees is not None)
    if p_dim == 0 or M.dim % p_dim != 0:
        return None
    m = M.dim // p_dim
    cm = projective_cover(M)
    if cm.cover.dim != M.dim:
        return None
    want = {k: mult * m for k, mult in p_multiset.items()}
    got = cm.summand_multiset()

    def flat(ms):
        out = {}
        for (vv, pi, _), c in ms.items():
            out[(vv, pi)] = out.get((vv, pi), 0) + c
        return out

    if M.degrees is None:
        return m if flat(got) == flat(want) else None
    # allow one uniform degree shift between M and P_v^m
    def normalized(ms):
        if not ms:
            return {}
        low = min(sh if sh is not None else 0 for (_, _, sh) in ms)
        return {(vv, pi, (sh if sh is not None else 0) - low): c
                for (vv, pi, sh), c in ms.items()}

    return m if normalized(got) == normalized(want) else None


def dual_module(M, name=None):
    """hom_k(M, k) as a module over the opposite algebra.

    Degrees are negated and renormalized to start at 0.
    """
    algebra = M.algebra
    op = algebra.opposite()
    action = [M.action[i].transpose() for i in range(algebra.dim)]
    degrees = None
    if M.degrees is not None and M.dim:
        neg = [-d for d in M.degrees]
        low = min(neg)
        degrees = [d - low for d in neg]
    elif M.degrees is not None:
        degrees = []
    return Module(op, action, M.vertex, degrees, name=name or f"D({M.name})")


def dual_of_right_regular(algebra, name=None):
    """D(A as a right module) as a left module over the same algebra."""
    f = algebra.field
    action = [algebra.right_mult_matrix(algebra.basis_vector(i)).transpose()
              for i in range(algebra.dim)]
    # the dual basis vector of a path b carries the vertex src(b)
    return Module(algebra, action, algebra.src, None,
                  name=name or f"D({algebra})")


def is_self_injective(algebra):
    """D(A as right regular module) projective as a left module."""
    if algebra.dim == 0:
        return True
    return is_projective(dual_of_right_regular(algebra))


def splitting_property_status(algebra):
    """First sufficient condition for the splitting property that verifies.

    Returns one of "SatisfiedSemisimple", "SatisfiedLocalSum",
    "SatisfiedSelfInjective", "Unknown"; failure is never claimed.
    """
    if algebra.is_semisimple():
        return "SatisfiedSemisimple"
    if _is_local_sum(algebra):
        return "SatisfiedLocalSum"
    if is_self_injective(algebra):
        return "SatisfiedSelfInjective"
    return "Unknown"


def _is_local_sum(algebra):
    for i in range(algebra.dim):
        if algebra.src[i] != algebra.tgt[i]:
            return False
    quo, _ = algebra.semisimple_quotient()
    return all(len(quo.block_vectors(tgt=v, src=v)) == 1
               for v in range(len(algebra.vertices)))


def restrict_to_subalgebra(M, subalgebra, embedding, name=None):
    """View M over a subalgebra given by its embedding index list."""
    action = [M.action[i] for i in embedding]
    return Module(subalgebra, action, M.vertex, M.degrees,
                  name=name or f"{M.name}|0")


def reduce_module(M, reduced_algebra, proj, ideal, name=None):
    """M / (ideal . M) as a module over the reduced algebra."""
    algebra, f = M.algebra, M.algebra.field
    killed = []
    for w in ideal.basis:
        for c in range(M.dim):
            killed.append(M.act_vec(w, unit_vec(f, M.dim, c)))
    blocks = M.adapted_basis(killed)
    rows = [row for _, _, basis_rows in blocks for row in basis_rows]
    span = Subspace(f, M.dim, rows)
    pivots = set(span.pivots)
    survivors = [i for i in range(M.dim) if i not in pivots]

    def residue(vec):
        r = span.reduce(vec)
        return tuple(r[i] for i in survivors)

    # action of a reduced basis class is the action of any representative
    action = []
    for t in range(reduced_algebra.dim):
        rep = proj.solve(unit_vec(f, reduced_algebra.dim, t))
        if rep is None:
            raise StratkosError("reduction projection not surjective")
        cols = [residue(M.act_vec(rep, unit_vec(f, M.dim, s))) for s in survivors]
        action.append(Matrix.from_cols(f, cols, rows=len(survivors)))
    vert_map = {lbl: i for i, lbl in enumerate(reduced_algebra.vertices)}
    verts = [vert_map[algebra.vertices[M.vertex[i]]] for i in survivors]
    degs = None if M.degrees is None else [M.degrees[i] for i in survivors]
    return Module(reduced_algebra, action, verts, degs,
                  name=name or f"red({M.name})")


def ideal_times_module_vectors(M, ideal):
    f = M.algebra.field
    out = []
    for w in ideal.basis:
        for c in range(M.dim):
            out.append(M.act_vec(w, unit_vec(f, M.dim, c)))
    return out

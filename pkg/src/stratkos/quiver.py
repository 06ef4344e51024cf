"""Quivers, presentations, and path rewriting.

A presentation is turned into an algebra by completing its relations into a
confluent rewriting system on paths (length-lexicographic order, overlap
completion) and taking the irreducible paths as basis.

Paths are tuples of arrow indices written composition-style: ``(f, g)`` is
"apply g, then f", so it needs ``src(f) == tgt(g)`` and runs src(g) -> tgt(f).
The empty path at vertex v is the identity e_v.
"""

from __future__ import annotations

from .algebra import Algebra
from .errors import InhomogeneousRelation, NonConfluent, NotFiniteDimensional

COMPLETION_ROUNDS = 24


class Quiver:
    def __init__(self, vertices, arrows):
        """arrows: list of (name, source, target, degree) with degree in {0, 1}."""
        self.vertices = list(vertices)
        self.arrows = [tuple(a) for a in arrows]
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        for name, s, t, d in self.arrows:
            if s not in self.vertices or t not in self.vertices:
                raise ValueError(f"arrow {name} has undeclared endpoint")
            if d not in (0, 1):
                raise ValueError(f"arrow {name} must have degree 0 or 1")
        self.arrow_index = {a[0]: i for i, a in enumerate(self.arrows)}

    def arrow_src(self, i):
        return self.arrows[i][1]

    def arrow_tgt(self, i):
        return self.arrows[i][2]

    def arrow_deg(self, i):
        return self.arrows[i][3]


class Presentation:
    def __init__(self, quiver, relations, field):
        """relations: list of {path: coeff} dicts over parallel paths."""
        self.quiver = quiver
        self.field = field
        self.relations = [dict(r) for r in relations]
        for rel in self.relations:
            self._check_homogeneous(rel)

    def _check_homogeneous(self, rel):
        q = self.quiver
        sig = None
        for path, coeff in rel.items():
            if coeff == self.field.zero:
                continue
            if not path:
                raise InhomogeneousRelation("trivial paths cannot appear in relations")
            for a, b in zip(path, path[1:]):
                if q.arrow_src(a) != q.arrow_tgt(b):
                    raise InhomogeneousRelation("relation contains a non-composable path")
            s = q.arrow_src(path[-1])
            t = q.arrow_tgt(path[0])
            d = sum(q.arrow_deg(a) for a in path)
            if sig is None:
                sig = (s, t, d)
            elif sig != (s, t, d):
                raise InhomogeneousRelation(
                    f"relation mixes source/target/degree: {sig} vs {(s, t, d)}")


def path_key(path):
    return (len(path), path)


class _Rewriter:
    """Confluent rewriting system on paths of a quiver."""

    def __init__(self, presentation):
        self.q = presentation.quiver
        self.field = presentation.field
        # rules: leading path -> {path: coeff} for the lower-order remainder
        self.rules = {}
        polys = [dict(r) for r in presentation.relations if any(
            c != self.field.zero for c in r.values())]
        for p in polys:
            self._insert(p)
        self._complete()

    def _insert(self, poly):
        poly = self.reduce(poly)
        poly = {p: c for p, c in poly.items() if c != self.field.zero}
        if not poly:
            return False
        lead = max(poly, key=path_key)
        inv = self.field.inv(poly[lead])
        rest = {p: self.field.neg(self.field.mul(inv, c))
                for p, c in poly.items() if p != lead}
        self.rules[lead] = rest
        return True

    def reduce(self, poly):
        """Normal form of a path polynomial {path: coeff}."""
        f = self.field
        work = dict(poly)
        out = {}
        while work:
            path = max(work, key=path_key)
            coeff = work.pop(path)
            if coeff == f.zero:
                continue
            hit = self._find_rule(path)
            if hit is None:
                out[path] = f.add(out.get(path, f.zero), coeff)
                continue
            lead, pos = hit
            pre, post = path[:pos], path[pos + len(lead):]
            for rp, rc in self.rules[lead].items():
                new = pre + rp + post
                work[new] = f.add(work.get(new, f.zero), f.mul(coeff, rc))
        return {p: c for p, c in out.items() if c != f.zero}

    def _find_rule(self, path):
        for lead in self.rules:
            ln = len(lead)
            if ln > len(path):
                continue
            for pos in range(len(path) - ln + 1):
                if path[pos:pos + ln] == lead:
                    return lead, pos
        return None

    def _complete(self):
        for _ in range(COMPLETION_ROUNDS):
            pending = []
            leads = sorted(self.rules, key=path_key)
            for l1 in leads:
                for l2 in leads:
                    # suffix of l1 equals prefix of l2 (proper overlaps)
                    for k in range(1, min(len(l1), len(l2))):
                        if l1[len(l1) - k:] == l2[:k]:
                            left = l1 + l2[k:]
                            a = self._apply_at(left, l1, 0)
                            b = self._apply_at(left, l2, len(l1) - k)
                            d = self._poly_sub(self.reduce(a), self.reduce(b))
                            if d:
                                pending.append(d)
                    # containment l2 inside l1
                    if len(l2) < len(l1):
                        for pos in range(len(l1) - len(l2) + 1):
                            if l1[pos:pos + len(l2)] == l2:
                                a = self._apply_at(l1, l1, 0)
                                b = self._apply_at(l1, l2, pos)
                                d = self._poly_sub(self.reduce(a), self.reduce(b))
                                if d:
                                    pending.append(d)
            changed = False
            for poly in pending:
                if self._insert(poly):
                    changed = True
            if not changed:
                self._tidy()
                return
        raise NonConfluent(f"completion did not stabilize in {COMPLETION_ROUNDS} rounds")

    def _apply_at(self, path, lead, pos):
        f = self.field
        pre, post = path[:pos], path[pos + len(lead):]
        out = {}
        for rp, rc in self.rules[lead].items():
            out[pre + rp + post] = rc
        return out

    def _poly_sub(self, a, b):
        f = self.field
        out = dict(a)
        for p, c in b.items():
            out[p] = f.sub(out.get(p, f.zero), c)
        return {p: c for p, c in out.items() if c != f.zero}

    def _tidy(self):
        # re-reduce right-hand sides against the full system
        for lead in list(self.rules):
            self.rules[lead] = self.reduce(self.rules[lead])

    def is_irreducible(self, path):
        return self._find_rule(path) is None

    def irreducible_paths(self, max_dim):
        """All irreducible paths, by length; raises when max_dim is exceeded."""
        q = self.q
        current = []
        for i in range(len(q.arrows)):
            p = (i,)
            if self.is_irreducible(p):
                current.append(p)
        all_paths = list(current)
        while current:
            if len(all_paths) + len(q.vertices) > max_dim:
                raise NotFiniteDimensional(
                    f"more than {max_dim} irreducible paths; raise max_dim if intended")
            nxt = []
            for p in current:
                tgt = q.arrow_tgt(p[0])
                for i in range(len(q.arrows)):
                    if q.arrow_src(i) == tgt:
                        cand = (i,) + p
                        if self.is_irreducible(cand):
                            nxt.append(cand)
            current = nxt
            all_paths.extend(current)
        return all_paths


def path_name(quiver, path):
    if not path:
        return "e"
    return "*".join(quiver.arrows[i][0] for i in path)


def build_from_presentation(presentation, max_dim=2000):
    """Algebra with basis the irreducible paths of the completed system."""
    q = presentation.quiver
    f = presentation.field
    rw = _Rewriter(presentation)
    nontrivial = rw.irreducible_paths(max_dim)

    names, src, tgt, deg = [], [], [], []
    vertex_of = {v: i for i, v in enumerate(q.vertices)}
    for i, v in enumerate(q.vertices):
        names.append(f"e_{v}")
        src.append(i)
        tgt.append(i)
        deg.append(0)
    path_index = {}
    for p in sorted(nontrivial, key=path_key):
        path_index[p] = len(names)
        names.append(path_name(q, p))
        src.append(vertex_of[q.arrow_src(p[-1])])
        tgt.append(vertex_of[q.arrow_tgt(p[0])])
        deg.append(sum(q.arrow_deg(a) for a in p))

    mult = {}
    dim = len(names)

    def terms_of(poly):
        out = []
        for p, c in poly.items():
            if c == f.zero:
                continue
            if p == ():
                raise NonConfluent("reduction produced a trivial path from arrows")
            out.append((path_index[p], c))
        return tuple(sorted(out))

    paths = [None] * dim
    for v in range(len(q.vertices)):
        paths[v] = ("e", v)
    for p, i in path_index.items():
        paths[i] = ("p", p)

    for i in range(dim):
        for j in range(dim):
            ki, kj = paths[i], paths[j]
            if ki[0] == "e" and kj[0] == "e":
                if i == j:
                    mult[(i, j)] = ((i, f.one),)
                continue
            if ki[0] == "e":
                pj = kj[1]
                if vertex_of[q.arrow_tgt(pj[0])] == ki[1]:
                    mult[(i, j)] = ((j, f.one),)
                continue
            if kj[0] == "e":
                pi = ki[1]
                if vertex_of[q.arrow_src(pi[-1])] == kj[1]:
                    mult[(i, j)] = ((i, f.one),)
                continue
            pi, pj = ki[1], kj[1]
            if q.arrow_src(pi[-1]) != q.arrow_tgt(pj[0]):
                continue
            poly = rw.reduce({pi + pj: f.one})
            terms = terms_of(poly)
            if terms:
                mult[(i, j)] = terms

    idem = list(range(len(q.vertices)))
    gens = [path_index[(a,)] for a in range(len(q.arrows)) if (a,) in path_index]
    alg = Algebra(f, names, src, tgt, deg, list(q.vertices), idem, mult,
                  generators=gens)
    return alg

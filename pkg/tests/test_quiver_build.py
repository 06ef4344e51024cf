"""Presentation builder, with an independent path-enumeration oracle."""

from itertools import product

import pytest

from stratkos import GF, QQ, Matrix, Presentation, Quiver, Subspace, \
    build_from_presentation
from stratkos.errors import InhomogeneousRelation, NotFiniteDimensional

from conftest import build


def oracle_dimension(field, quiver, relations, max_len=10):
    """Quotient dimension by brute force: enumerate all composable paths up
    to a length where products die, then mod out the two-sided ideal spanned
    by all sandwiches of the relations.  Independent of the rewriting code."""
    arrows = list(range(len(quiver.arrows)))
    paths = [()]
    by_len = {0: [()]}
    for ln in range(1, max_len + 1):
        cur = []
        for p in by_len[ln - 1]:
            for a in arrows:
                if not p or quiver.arrow_src(a) == quiver.arrow_tgt(p[0]):
                    cur.append((a,) + p)
        by_len[ln] = cur
        paths.extend(cur)
        if not cur:
            break
    # trivial paths, one per vertex
    all_paths = [("e", v) for v in quiver.vertices] + \
        [("p", p) for p in paths if p]
    index = {key: i for i, key in enumerate(all_paths)}
    n = len(all_paths)

    def concat(p, q):
        # p after q, or None
        if p[0] == "e":
            if q[0] == "e":
                return p if p == q else None
            return q if quiver.arrow_tgt(q[1][0]) == p[1] else None
        if q[0] == "e":
            return p if quiver.arrow_src(p[1][-1]) == q[1] else None
        if quiver.arrow_src(p[1][-1]) != quiver.arrow_tgt(q[1][0]):
            return None
        joined = ("p", p[1] + q[1])
        return joined if joined in index else "TOO_LONG"

    vectors = []
    for rel in relations:
        for left in all_paths:
            for right in all_paths:
                vec = [field.zero] * n
                dead = False
                for path, c in rel.items():
                    mid = ("p", path)
                    lm = concat(left, mid)
                    if lm is None:
                        continue
                    if lm == "TOO_LONG":
                        dead = True
                        break
                    full = concat(lm, right)
                    if full is None:
                        continue
                    if full == "TOO_LONG":
                        dead = True
                        break
                    vec[index[full]] = field.add(vec[index[full]], c)
                if not dead and any(x != field.zero for x in vec):
                    vectors.append(tuple(vec))
    ideal = Subspace(field, n, vectors)
    return n - ideal.dim


def test_bridged_loops_dimension(bridged_loops):
    assert bridged_loops.dim == 5
    assert sorted(bridged_loops.names) == sorted(["e_x", "e_y", "d", "r", "a"])


def test_hereditary_a2(hereditary_a2):
    assert hereditary_a2.dim == 3
    assert hereditary_a2.names == ["e_x", "e_y", "a"]


def test_forked_loop_dimension_against_oracle(forked_loop):
    quiver = Quiver(["x", "y", "z"],
                    [("d", "x", "x", 0), ("b", "x", "y", 0),
                     ("a", "x", "z", 0), ("g", "y", "z", 0)])
    rels = [{(0, 0): QQ.of(1)}, {(1, 0): QQ.of(1)},
            {(2, 0): QQ.of(1), (3, 1): QQ.of(-1)}]
    assert forked_loop.dim == 8
    assert oracle_dimension(QQ, quiver, rels, max_len=6) == 8


def test_glued_bridges_dimension_against_oracle(glued_bridges):
    quiver = Quiver(["x", "y"],
                    [("d", "x", "x", 0), ("t", "y", "y", 0),
                     ("a", "x", "y", 1), ("b", "x", "y", 1)])
    rels = [{(0, 0): QQ.of(1)}, {(1, 1): QQ.of(1)},
            {(1, 2): QQ.of(1), (3,): QQ.of(-1)},
            {(2, 0): QQ.of(1), (3,): QQ.of(-1)}]
    assert glued_bridges.dim == 6
    assert oracle_dimension(QQ, quiver, rels, max_len=6) == 6


def test_qh_triple_quotient_by_top_vertex(qh_triple):
    quo, _ = qh_triple.quotient_by_idempotent("z")
    assert quo.dim == 5
    # oracle: same presentation without the z-arrow
    alt = build(QQ, ["x", "y"],
                [("al", "x", "y", 1), ("be", "y", "x", 1)], [{(0, 1): 1}])
    assert alt.dim == 5


def test_grading_and_structure(bridged_loops):
    assert bridged_loops.deg == [0, 0, 0, 0, 1]
    assert bridged_loops.is_generated_in_degrees_01()
    bridged_loops.check_associativity()


def test_not_finite_dimensional():
    with pytest.raises(NotFiniteDimensional):
        build(QQ, ["x"], [("t", "x", "x", 0)], [], max_dim=30)


def test_inhomogeneous_relation_rejected():
    with pytest.raises(InhomogeneousRelation):
        # degree 1 path equated with a degree 2 path
        build(QQ, ["x", "y", "z"],
              [("a", "x", "y", 1), ("b", "y", "z", 1), ("c", "x", "z", 1)],
              [{(1, 0): 1, (2,): -1, }, {(1, 0): 1}])


def test_non_parallel_relation_rejected():
    with pytest.raises(InhomogeneousRelation):
        build(QQ, ["x", "y", "z"],
              [("a", "x", "y", 1), ("b", "y", "z", 1)],
              [{(0,): 1, (1,): -1}])


def test_completion_on_overlapping_relations():
    # d*d = 0 and a*d = b force a*d*d ambiguities to resolve
    alg = build(QQ, ["x", "y"],
                [("d", "x", "x", 0), ("a", "x", "y", 1), ("b", "x", "y", 1)],
                [{(0, 0): 1}, {(1, 0): 1, (2,): -1}])
    alg.check_associativity()
    # b*d = a*d*d = 0 must be forced
    b = alg.names.index("b")
    d = alg.names.index("d")
    assert alg.mult.get((b, d), ()) == ()

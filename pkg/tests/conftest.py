"""Shared fixture algebras and categories for the whole suite.

Each builder returns a fresh or cached Algebra; relation dictionaries map
paths (tuples of arrow indices, composition right-to-left) to coefficients.
"""

import pytest

from stratkos import (Biset, EIQuiver, FiniteGroup, GF, QQ, Presentation,
                      Quiver, build_from_presentation, free_ei_category)


def build(field, vertices, arrows, relations, max_dim=2000):
    quiver = Quiver(vertices, arrows)
    rels = [{path: field.of(c) for path, c in rel.items()} for rel in relations]
    return build_from_presentation(Presentation(quiver, rels, field), max_dim=max_dim)


@pytest.fixture(scope="session")
def bridged_loops():
    # loops d (x), r (y) in degree 0; bridge a in degree 1
    return build(QQ, ["x", "y"],
                 [("d", "x", "x", 0), ("r", "y", "y", 0), ("a", "x", "y", 1)],
                 [{(2, 0): 1}, {(1, 2): 1}, {(0, 0): 1}, {(1, 1): 1}])


@pytest.fixture(scope="session")
def loop_bridge():
    return build(QQ, ["x", "y"],
                 [("d", "x", "x", 0), ("a", "x", "y", 1)],
                 [{(1, 0): 1}, {(0, 0): 1}])


@pytest.fixture(scope="session")
def glued_bridges():
    # t*a = a*d = b glues the two degree-1 bridges
    return build(QQ, ["x", "y"],
                 [("d", "x", "x", 0), ("t", "y", "y", 0),
                  ("a", "x", "y", 1), ("b", "x", "y", 1)],
                 [{(0, 0): 1}, {(1, 1): 1},
                  {(1, 2): 1, (3,): -1}, {(2, 0): 1, (3,): -1}])


@pytest.fixture(scope="session")
def dual_numbers():
    # one vertex, one degree-0 loop squaring to zero
    return build(QQ, ["x"], [("t", "x", "x", 0)], [{(0, 0): 1}])


@pytest.fixture(scope="session")
def cut_bridges():
    return build(QQ, ["x", "y"],
                 [("d", "x", "x", 0), ("t", "y", "y", 0), ("a", "x", "y", 1)],
                 [{(0, 0): 1}, {(1, 1): 1}, {(1, 2): 1}, {(2, 0): 1}])


@pytest.fixture(scope="session")
def mixed_pair():
    return build(QQ, ["x", "y"],
                 [("b", "x", "y", 0), ("a", "x", "y", 1)], [])


@pytest.fixture(scope="session")
def zigzag():
    return build(QQ, ["x", "y", "z"],
                 [("a1", "x", "y", 1), ("b1", "y", "x", 1),
                  ("a2", "y", "z", 1), ("b2", "z", "y", 1)],
                 [{(0, 1): 1}, {(2, 3): 1}, {(2, 0): 1}, {(1, 3): 1}])


@pytest.fixture(scope="session")
def qh_triple():
    return build(QQ, ["x", "y", "z"],
                 [("al", "x", "y", 1), ("be", "y", "x", 1), ("ga", "y", "z", 1)],
                 [{(0, 1): 1}])


def build_cyclic_loop(field):
    return build(field, ["x", "y", "z"],
                 [("al", "x", "y", 1), ("be", "y", "z", 1),
                  ("ga", "z", "x", 1), ("dl", "y", "y", 0)],
                 [{(3, 3): 1}, {(3, 0): 1}, {(1, 3): 1}, {(1, 0): 1}, {(2, 1): 1}])


@pytest.fixture(scope="session")
def cyclic_loop():
    return build_cyclic_loop(QQ)


@pytest.fixture(scope="session")
def cyclic_loop_gf2():
    # same presentation as cyclic_loop but over GF(2) and ungraded arrows
    return build(GF(2), ["x", "y", "z"],
                 [("al", "x", "y", 0), ("be", "y", "z", 0),
                  ("ga", "z", "x", 0), ("dl", "y", "y", 0)],
                 [{(3, 3): 1}, {(3, 0): 1}, {(1, 3): 1}, {(1, 0): 1}, {(2, 1): 1}])


def build_forked_loop(field):
    return build(field, ["x", "y", "z"],
                 [("d", "x", "x", 0), ("b", "x", "y", 0),
                  ("a", "x", "z", 0), ("g", "y", "z", 0)],
                 [{(0, 0): 1}, {(1, 0): 1}, {(2, 0): 1, (3, 1): -1}])


@pytest.fixture(scope="session")
def forked_loop():
    return build_forked_loop(QQ)


@pytest.fixture(scope="session")
def parallel_fork():
    return build(GF(2), ["x", "y", "z"],
                 [("a", "x", "y", 0), ("a2", "x", "y", 0),
                  ("b", "x", "y", 0), ("b2", "x", "y", 0),
                  ("g", "y", "y", 0), ("d", "y", "z", 0), ("r", "z", "z", 0)],
                 [{(4, 4): 1}, {(6, 6): 1}, {(5, 4): 1}, {(6, 5): 1},
                  {(4, 0): 1, (1,): -1}, {(4, 2): 1, (3,): -1},
                  {(5, 0): 1, (5, 2): -1}])


@pytest.fixture(scope="session")
def branching_loops():
    return build(GF(2), ["x", "y", "z", "w"],
                 [("al", "x", "x", 0), ("b", "x", "y", 0), ("g", "y", "z", 0),
                  ("f", "y", "w", 0), ("dl", "z", "z", 0), ("rh", "w", "w", 0)],
                 [{(0, 0): 1}, {(4, 4): 1}, {(1, 0): 1}, {(4, 2): 1},
                  {(5, 5): 1}, {(5, 3): 1}])


@pytest.fixture(scope="session")
def looped_sink():
    return build(GF(2), ["x", "y", "z"],
                 [("al", "x", "z", 0), ("dl", "z", "z", 0),
                  ("b", "y", "z", 0), ("b2", "y", "z", 0)],
                 [{(1, 1): 1}, {(1, 0): 1}, {(1, 2): 1, (3,): -1}])


@pytest.fixture(scope="session")
def detour_sink():
    return build(GF(2), ["x", "y", "z"],
                 [("al", "x", "y", 0), ("ga", "x", "z", 0),
                  ("b", "y", "z", 0), ("b2", "y", "z", 0), ("dl", "z", "z", 0)],
                 [{(4, 4): 1}, {(4, 1): 1}, {(4, 2): 1, (3,): -1}])


@pytest.fixture(scope="session")
def hereditary_a2():
    return build(QQ, ["x", "y"], [("a", "x", "y", 1)], [])


@pytest.fixture(scope="session")
def a3_zero():
    # chain with the composite killed
    return build(QQ, ["x", "y", "z"],
                 [("a", "x", "y", 1), ("b", "y", "z", 1)], [{(1, 0): 1}])


@pytest.fixture(scope="session")
def a4_cubic():
    return build(QQ, ["x", "y", "z", "w"],
                 [("a", "x", "y", 1), ("b", "y", "z", 1), ("c", "z", "w", 1)],
                 [{(2, 1, 0): 1}])


@pytest.fixture(scope="session")
def semisimple2():
    return build(QQ, ["x", "y"], [], [])


def group_algebra_c2(p):
    """kC2 concentrated in degree 0, as a one-vertex table algebra."""
    from stratkos import Algebra, Field
    f = Field(p)
    mult = {(0, 0): ((0, f.one),), (0, 1): ((1, f.one),),
            (1, 0): ((1, f.one),), (1, 1): ((0, f.one),)}
    return Algebra(f, ["1", "h"], [0, 0], [0, 0], [0, 0], ["*"], [0], mult)


# ----------------------------------------------------------------------
# EI categories


@pytest.fixture(scope="session")
def c2_chain():
    c2 = FiniteGroup.cyclic(2)
    t1 = FiniteGroup.trivial("1x")
    t3 = FiniteGroup.trivial("1z")
    q = EIQuiver(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z")],
                 {"x": t1, "y": c2, "z": t3},
                 {"a": Biset(1, c2, t1, name="a"),
                  "b": Biset(1, t3, c2, name="b")})
    return free_ei_category(q)


@pytest.fixture(scope="session")
def ei4214():
    c2 = FiniteGroup.cyclic(2)
    t1 = FiniteGroup.trivial("1x")
    t3 = FiniteGroup.trivial("1z")
    q = EIQuiver(["x", "y", "z"], [("a", "x", "y"), ("b", "y", "z")],
                 {"x": t1, "y": c2, "z": t3},
                 {"a": Biset(1, c2, t1, name="a"),
                  "b": Biset(2, t3, c2, right=[[0, 1], [1, 0]], name="b")})
    return free_ei_category(q)


@pytest.fixture(scope="session")
def poset_chain4():
    groups = {v: FiniteGroup.trivial(v) for v in "pqrs"}
    q = EIQuiver(list("pqrs"),
                 [("a", "p", "q"), ("b", "q", "r"), ("g", "r", "s")],
                 groups,
                 {n: Biset(1, groups[t], groups[s], name=n)
                  for n, s, t in [("a", "p", "q"), ("b", "q", "r"), ("g", "r", "s")]})
    return free_ei_category(q)

"""Field and dense linear algebra, checked against brute-force oracles."""

import random
from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stratkos import GF, QQ, Matrix, Subspace

FIELDS = [QQ, GF(2), GF(5)]


def rand_matrix(field, rows, cols, rng):
    if field.char == 0:
        data = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3))
                 for _ in range(cols)] for _ in range(rows)]
    else:
        data = [[rng.randrange(field.char) for _ in range(cols)]
                for _ in range(rows)]
    return Matrix(field, data, cols=cols)


def det(field, rows):
    n = len(rows)
    if n == 0:
        return field.one
    total = field.zero
    for j in range(n):
        if rows[0][j] == field.zero:
            continue
        minor = [[r[c] for c in range(n) if c != j] for r in rows[1:]]
        sub = det(field, minor)
        term = field.mul(rows[0][j], sub)
        total = field.add(total, term) if j % 2 == 0 else field.sub(total, term)
    return total


def minor_rank(m):
    """Largest k with a nonzero k x k minor; the brute-force rank oracle."""
    best = 0
    for k in range(1, min(m.rows, m.cols) + 1):
        found = False
        for rsel in combinations(range(m.rows), k):
            for csel in combinations(range(m.cols), k):
                sub = [[m.data[r][c] for c in csel] for r in rsel]
                if det(m.field, sub) != m.field.zero:
                    found = True
                    break
            if found:
                break
        if found:
            best = k
        else:
            break
    return best


scalars_q = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@given(a=scalars_q, b=scalars_q, c=scalars_q)
@settings(max_examples=60, deadline=None)
def test_field_axioms_rationals(a, b, c):
    f = QQ
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    if a != 0:
        assert f.mul(a, f.inv(a)) == f.one


@given(a=st.integers(0, 4), b=st.integers(0, 4), c=st.integers(0, 4))
@settings(max_examples=60, deadline=None)
def test_field_axioms_gf5(a, b, c):
    f = GF(5)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    if a != 0:
        assert f.mul(a, f.inv(a)) == f.one


def test_canonical_forms():
    assert QQ.of(2, 4) == Fraction(1, 2)
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert GF(5).of(7) == 2
    assert GF(5).of(1, 2) == 3  # 1/2 = 3 mod 5


def test_rref_identity():
    m = Matrix.identity(QQ, 2)
    red, pivots, rank = m.rref()
    assert red == m and pivots == (0, 1) and rank == 2


def test_rref_equal_rows_gf2():
    f = GF(2)
    m = Matrix(f, [[1, 1], [1, 1]])
    red, pivots, rank = m.rref()
    assert rank == 1
    assert red.data == ((1, 1), (0, 0))


@pytest.mark.parametrize("seed", [11, 23, 57])
def test_rref_rank_matches_minor_oracle(seed):
    rng = random.Random(seed)
    m = rand_matrix(QQ, 5, 7, rng)
    assert m.rank() == minor_rank(m)


def test_rref_idempotent():
    rng = random.Random(3)
    for field in FIELDS:
        m = rand_matrix(field, 4, 6, rng)
        red, _, _ = m.rref()
        red2, _, _ = red.rref()
        assert red == red2


def test_kernel_identity_empty():
    assert Matrix.identity(QQ, 3).kernel_basis() == []


def test_kernel_equal_rows_gf2():
    f = GF(2)
    m = Matrix(f, [[1, 1], [1, 1]])
    assert m.kernel_basis() == [(1, 1)]


def test_kernel_zero_matrix():
    m = Matrix.zeros(QQ, 3, 4)
    basis = m.kernel_basis()
    assert len(basis) == 4
    assert Subspace(QQ, 4, basis).dim == 4


def test_solve_consistency():
    rng = random.Random(5)
    for field in FIELDS:
        m = rand_matrix(field, 4, 3, rng)
        x = tuple(field.of(rng.randint(-3, 3)) for _ in range(3))
        b = m.mul_vec(x)
        sol = m.solve(b)
        assert sol is not None
        assert m.mul_vec(sol) == b


def test_subspace_trivial_intersection():
    u = Subspace(QQ, 2, [(QQ.one, QQ.zero)])
    v = Subspace(QQ, 2, [(QQ.one, QQ.one)])
    assert u.intersect(v).dim == 0


def test_subspace_self_intersection():
    u = Subspace(QQ, 3, [(QQ.of(1), QQ.of(0), QQ.of(2)),
                         (QQ.of(0), QQ.of(1), QQ.of(1))])
    assert u.intersect(u).basis == u.basis


def gf2_span_enumerate(vectors, n):
    """All elements of the span, by exhaustive combination over GF(2)."""
    out = set()
    for coeffs in product([0, 1], repeat=len(vectors)):
        v = [0] * n
        for c, vec in zip(coeffs, vectors):
            if c:
                v = [(a + b) % 2 for a, b in zip(v, vec)]
        out.add(tuple(v))
    return out


@pytest.mark.parametrize("seed", [1, 9, 40])
def test_grassmann_identity_gf2_exhaustive(seed):
    rng = random.Random(seed)
    f = GF(2)
    n = 6
    u_vecs = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(3)]
    v_vecs = [tuple(rng.randrange(2) for _ in range(n)) for _ in range(3)]
    U = Subspace(f, n, u_vecs)
    V = Subspace(f, n, v_vecs)
    su = gf2_span_enumerate(u_vecs, n)
    sv = gf2_span_enumerate(v_vecs, n)
    inter = su & sv
    total = gf2_span_enumerate(list(su | sv), n)
    # dims from the exhaustive sets
    import math
    dim = lambda s: int(math.log2(len(s)))
    assert U.dim == dim(su) and V.dim == dim(sv)
    assert U.intersect(V).dim == dim(inter)
    assert U.sum(V).dim == dim(total)
    assert U.dim + V.dim == U.intersect(V).dim + U.sum(V).dim


def test_grassmann_identity_rationals():
    rng = random.Random(7)
    for _ in range(5):
        n = 6
        U = Subspace(QQ, n, [tuple(QQ.of(rng.randint(-3, 3)) for _ in range(n))
                             for _ in range(3)])
        V = Subspace(QQ, n, [tuple(QQ.of(rng.randint(-3, 3)) for _ in range(n))
                             for _ in range(3)])
        assert U.dim + V.dim == U.intersect(V).dim + U.sum(V).dim


def test_complement_extends_basis():
    u = Subspace(QQ, 4, [(QQ.of(1), QQ.of(1), QQ.zero, QQ.zero)])
    comp = u.complement_in()
    assert len(comp) == 3
    assert u.add_vectors(comp).dim == 4

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from corank.linalg import (
    LinearSolver,
    SparseEchelon,
    Submodule,
    det,
    hnf,
    identity,
    kernel,
    mat_mul,
    quotient_presentation,
    relations_among,
    snf,
    solve_linear,
    span_solve,
    submodule_intersect,
    submodule_reduce,
    vec_add,
    vec_mat,
)
from corank.rings import GF, QQ, ZZ

F2, F3 = GF(2), GF(3)


def int_matrices(max_dim=6, bound=100):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


# -- Hermite normal form ------------------------------------------------------

def test_hnf_worked_example():
    h, u = hnf([[2, 0], [3, 3]], ZZ)
    assert h == ((1, 3), (0, 6))
    assert mat_mul(u, [[2, 0], [3, 3]], ZZ) == h
    assert abs(det(u, ZZ)) == 1


def test_hnf_trivial_cases():
    I = identity(3, ZZ)
    assert hnf(I, ZZ) == (I, I)
    h, _ = hnf([[0, 0], [0, 0]], ZZ)
    assert h == ((0, 0), (0, 0))


def is_hermite(h):
    last = -1
    seen_zero = False
    for row in h:
        nz = [j for j, a in enumerate(row) if a != 0]
        if not nz:
            seen_zero = True
            continue
        assert not seen_zero, "zero rows must come last"
        p = nz[0]
        assert p > last and row[p] > 0
        for above in h[: h.index(row)]:
            assert 0 <= above[p] < row[p]
        last = p
    return True


@given(int_matrices())
def test_hnf_properties(m):
    h, u = hnf(m, ZZ)
    assert mat_mul(u, m, ZZ) == h
    assert abs(det(u, ZZ)) == 1
    assert is_hermite(h)
    assert hnf(h, ZZ)[0] == h


def test_rref_over_fields():
    h, u = hnf([[2, 4], [1, 3]], QQ)
    assert h == ((1, 0), (0, 1))
    assert mat_mul(u, [[2, 4], [1, 3]], QQ) == h
    h, _ = hnf([[1, 1], [1, 1]], F2)
    assert h == ((1, 1), (0, 0))


# -- Smith normal form --------------------------------------------------------

def test_snf_examples():
    s, u, v = snf([[2, 0], [0, 3]], ZZ)
    assert s == ((1, 0), (0, 6))
    assert mat_mul(mat_mul(u, [[2, 0], [0, 3]], ZZ), v, ZZ) == s
    assert snf([[1, 0], [0, 1]], ZZ)[0] == ((1, 0), (0, 1))
    assert snf([[0]], ZZ)[0] == ((0,),)


@given(int_matrices())
def test_snf_properties(m):
    s, u, v = snf(m, ZZ)
    assert mat_mul(mat_mul(u, m, ZZ), v, ZZ) == s
    assert abs(det(u, ZZ)) == 1 and abs(det(v, ZZ)) == 1
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    for i, row in enumerate(s):
        for j, a in enumerate(row):
            if i != j:
                assert a == 0
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        assert (b == 0) if a == 0 else b % a == 0


# -- kernels, solving, reduction ---------------------------------------------

def test_kernel_examples():
    assert kernel([[2], [4]], ZZ).basis == ((-2, 1),) or kernel([[2], [4]], ZZ).basis == ((2, -1),)
    assert kernel(identity(2, QQ), QQ).is_zero()
    assert kernel([[0, 0], [0, 0]], ZZ).is_full()


@pytest.mark.parametrize("F", [F2, F3], ids=repr)
def test_kernel_brute_force_small_fields(F):
    rng = random.Random(7)
    for _ in range(150):
        r, c = rng.randint(1, 4), rng.randint(1, 4)
        m = [[rng.randrange(F.p) for _ in range(c)] for _ in range(r)]
        K = kernel(m, F, r, c)
        brute = [v for v in itertools.product(range(F.p), repeat=r) if all(a == 0 for a in vec_mat(v, m, F, c))]
        assert len(brute) == F.p ** len(K.basis)
        assert all(v in K for v in brute)


def test_solve_linear_examples():
    assert solve_linear([[1, 0], [0, 2]], (3, 4), ZZ) == (3, 2)
    assert solve_linear([[2]], (3,), ZZ) is None
    assert solve_linear([[1, 2], [3, 4]], (0, 0), ZZ) == (0, 0)
    assert solve_linear([[2]], (3,), QQ) == (QQ("3/2"),)


@given(int_matrices(4, 9), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solver_recovers_consistent_targets(m, x):
    x = tuple(x[: len(m)])
    target = vec_mat(x, m, ZZ, len(m[0]))
    sol = LinearSolver(m, ZZ).solve(target)
    assert sol is not None
    assert vec_mat(sol, m, ZZ, len(m[0])) == target


def test_submodule_reduce_examples():
    s = Submodule(ZZ, 2, [(0, 2)])
    assert submodule_reduce(s, (1, 5)) == ((1, 1), False)
    assert submodule_reduce(s, (0, 4)) == ((0, 0), True)
    assert submodule_reduce(Submodule.zero(ZZ, 2), (3, 7)) == ((3, 7), False)


@given(int_matrices(3, 20), st.lists(st.integers(-30, 30), min_size=3, max_size=3),
       st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_reduce_constant_on_cosets(m, v, coeffs):
    n = len(m[0])
    s = Submodule(ZZ, n, m)
    v = tuple(v[:n]) + (0,) * (n - len(v[:n]))
    w = vec_mat(tuple(coeffs[: len(m)]) + (0,) * (len(m) - len(coeffs[: len(m)])), m, ZZ, n)
    assert s.reduce(v) == s.reduce(vec_add(v, w, ZZ))
    assert s.reduce((0,) * n) == (0,) * n


def test_intersections():
    assert submodule_intersect(Submodule(QQ, 2, [(1, 0)]), Submodule(QQ, 2, [(0, 1)])).is_zero()
    a = Submodule(ZZ, 2, [(2, 0), (0, 1)])
    assert submodule_intersect(a, Submodule(ZZ, 2, [(1, 1)])) == Submodule(ZZ, 2, [(2, 2)])
    assert a.intersect(a) == a


def test_quotient_presentation_examples():
    qp = quotient_presentation(Submodule(ZZ, 2, [(2, 0), (0, 1)]))
    assert qp.generator_count == 1 and qp.invariants == (2,)
    assert qp.relation_rows == ((2,),)
    assert quotient_presentation(Submodule.full(ZZ, 3)).generator_count == 0
    qp = quotient_presentation(Submodule.zero(ZZ, 1))
    assert qp.generator_count == 1 and qp.relation_rows == ()


@given(int_matrices(4, 12))
def test_quotient_invariants_do_not_depend_on_generators(m):
    n = len(m[0])
    s = Submodule(ZZ, n, m)
    shuffled = [tuple(a + b for a, b in zip(m[0], row)) for row in m[1:]] + [tuple(m[0])]
    assert Submodule(ZZ, n, shuffled) == s
    assert quotient_presentation(s).invariants == quotient_presentation(Submodule(ZZ, n, shuffled)).invariants


def test_projection_kills_the_submodule():
    s = Submodule(ZZ, 3, [(2, 4, 0), (0, 3, 3)])
    qp = quotient_presentation(s)
    for b in s.basis:
        assert qp.project(b) in qp.relations
    for i in range(qp.generator_count):
        e = tuple(1 if j == i else 0 for j in range(qp.generator_count))
        assert qp.project(qp.lift_vector(e)) == e


def test_relations_among_redundant_generators():
    rel = relations_among([(2,), (4,)], ZZ, 1)
    assert rel == Submodule(ZZ, 2, [(2, -1)])


# -- sparse span solving -----------------------------------------------------

@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=5),
       st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_span_solve_matches_dense(rows, coeffs):
    coeffs = coeffs[: len(rows)]
    target = vec_mat(coeffs, rows, ZZ, 4)
    sparse_rows = [{j: a for j, a in enumerate(r) if a} for r in rows]
    sol = span_solve(sparse_rows, {j: a for j, a in enumerate(target) if a}, ZZ)
    assert sol is not None
    assert vec_mat(sol, rows, ZZ, 4) == target


def test_span_solve_detects_lattice_gap():
    assert span_solve([{0: 2}], {0: 1}, ZZ) is None
    assert span_solve([{0: 2}, {0: 3}], {0: 1}, ZZ) is not None
    ech = SparseEchelon(QQ)
    ech.add({0: 1, 1: 1})
    assert {0: 2, 1: 2} in ech and {0: 1} not in ech


def test_snf_agrees_with_sympy():
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import invariant_factors

    rng = random.Random(31)
    for _ in range(200):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = [[rng.randint(-30, 30) for _ in range(c)] for _ in range(r)]
        s, _, _ = snf(m, ZZ)
        ours = [d for d in (s[i][i] for i in range(min(r, c))) if d != 0]
        theirs = [abs(int(d)) for d in invariant_factors(sympy.Matrix(m)) if d != 0]
        assert ours == theirs

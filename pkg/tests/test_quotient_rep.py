import random

import pytest

from corank.fixtures import ALGEBRA_FIXTURES, CYCLIC_FIXTURES, aug1, random_corpus, rnt, sub2, zeven
from corank.free_algebra import Alphabet, Polynomial, linear_combination, parse_poly, random_polynomial
from corank.linalg import Submodule
from corank.quotient_rep import (
    AlgebraRep,
    CyclicModuleRep,
    IdealClass,
    InvalidRepresentation,
    closure_submodule,
    co_rank_invariants,
    coset_vector,
    ideal_in_subalgebra,
    is_member,
    kernel_ideal,
    random_member,
    reduce_to_ideal,
    validate_rep,
)
from corank.rings import QQ, ZZ

X1 = Alphabet(["x"])


def P(t, rep):
    return parse_poly(t, rep.alphabet, rep.ring)


def test_classification_of_named_fixtures():
    assert validate_rep(aug1()) is IdealClass.TWO_SIDED_IDEAL
    assert validate_rep(zeven()) is IdealClass.TWO_SIDED_IDEAL
    assert validate_rep(rnt()) is IdealClass.RIGHT_IDEAL
    assert IdealClass.RIGHT_IDEAL.label == "right ideal (not two-sided)"


def test_rnt_witnesses_failure_of_two_sidedness():
    r = rnt()
    assert is_member(r, P("y", r))
    assert not is_member(r, P("x*y", r))


def test_two_label_rnt_breaks_v4():
    # g_b * rho(y) = e leaves the span of the non-identity labels
    X = Alphabet(["x", "y"])
    bad = CyclicModuleRep(QQ, X, ["1", "b"], {"b": "x"}, [], {"x": [[0, 1], [0, 0]], "y": [[0, 0], [1, 0]]})
    with pytest.raises(InvalidRepresentation) as e:
        validate_rep(bad)
    assert any(v.startswith("V4 violated") for v in e.value.violations)


def test_v2_violation_is_named():
    X = Alphabet(["x", "y"])
    bad = CyclicModuleRep(ZZ, X, ["1", "b1", "b2"], {"b1": "x", "b2": "y"}, [[0, 2, 0]],
                          {"x": [[0, 1, 0], [0, 0, 1], [0, 0, 1]], "y": [[0, 0, 1], [0, 0, 1], [0, 0, 1]]})
    with pytest.raises(InvalidRepresentation) as e:
        validate_rep(bad)
    assert "V2 violated: N @ rho(x) is not contained in N" in e.value.violations


def test_v1_violation_is_named():
    bad = CyclicModuleRep(QQ, X1, ["1", "x"], {"x": "x^2 + x"}, [], {"x": [[0, 1], [0, 1]]})
    with pytest.raises(InvalidRepresentation) as e:
        validate_rep(bad)
    assert any(v.startswith("V1 violated") for v in e.value.violations)


def test_v3_violation_is_named():
    bad = CyclicModuleRep(QQ, X1, ["1", "x"], {"x": "x"}, [], {"x": [[1, 1], [0, 1]]})
    with pytest.raises(InvalidRepresentation) as e:
        validate_rep(bad)
    assert any(v.startswith("V3 violated") for v in e.value.violations)


def test_structural_errors():
    with pytest.raises(InvalidRepresentation):
        CyclicModuleRep(QQ, X1, ["b", "1"], {"b": "x"}, [], {"x": [[0, 1], [0, 1]]})
    with pytest.raises(InvalidRepresentation):
        CyclicModuleRep(QQ, X1, ["1", "x"], {"x": "x"}, [], {"x": [[0, 1]]})
    with pytest.raises(InvalidRepresentation):
        CyclicModuleRep(QQ, X1, ["1", "x"], {}, [], {"x": [[0, 1], [0, 1]]})


def test_coset_vector_examples():
    a = aug1()
    assert coset_vector(a, P("x^3", a)) == (1,)
    assert coset_vector(a, P("x^2 - x", a)) == (0,)
    assert coset_vector(a, Polynomial.zero(QQ, X1)) == (0,)
    z = zeven()
    assert coset_vector(z, P("3*x", z)) == (1,)
    assert coset_vector(z, P("2*x^2", z)) == (0,)
    with pytest.raises(TypeError):
        coset_vector(a, P("x", a).embed())


def test_is_member_examples():
    a = aug1()
    assert is_member(a, P("x^2 - x", a))
    assert not is_member(a, P("x", a))
    assert is_member(a, Polynomial.zero(QQ, X1))


def _corpus():
    reps = [f() for f in CYCLIC_FIXTURES.values()] + random_corpus(count=12)
    return reps


def test_coset_constancy_and_containment():
    rng = random.Random(5)
    for rep in _corpus():
        for _ in range(15):
            p = random_polynomial(rng, rep.ring, rep.alphabet, 4, max_terms=3)
            r = random_member(rep, rng, max_deg=3)
            assert is_member(rep, r)
            assert coset_vector(rep, p + r) == coset_vector(rep, p)
            c = coset_vector(rep, p)
            reps = [rep.representatives[b] for b in rep.labels[1:]]
            assert is_member(rep, p - linear_combination(rep.ring, rep.alphabet, list(zip(c, reps))))


def test_right_closure_and_two_sided_closure():
    rng = random.Random(6)
    for rep in _corpus():
        two_sided = validate_rep(rep) is IdealClass.TWO_SIDED_IDEAL
        for _ in range(10):
            p = random_member(rep, rng, max_deg=4)
            m = Polynomial.monomial(rep.ring, rep.alphabet, tuple(rng.randrange(len(rep.alphabet)) for _ in range(2)))
            assert is_member(rep, p * m)
            if two_sided:
                for x in rep.alphabet.names:
                    assert is_member(rep, Polynomial.variable(rep.ring, rep.alphabet, x) * p)


def test_co_rank_invariants():
    assert co_rank_invariants(aug1()) == (0,)
    assert co_rank_invariants(zeven()) == (2,)
    assert len(co_rank_invariants(rnt())) == 2


# -- structure-constant algebras ----------------------------------------------

def test_algebra_fixtures_validate():
    for name, make in ALGEBRA_FIXTURES.items():
        assert validate_rep(make()) >= IdealClass.SUBALGEBRA, name


def test_algebra_invariant_violations():
    # t*t = t^2 but t^2 * t = t: not associative
    sc = [[[0, 1], [1, 0]], [[1, 0], [0, 0]]]
    bad = AlgebraRep(QQ, X1, 2, sc, {"x": [1, 0]})
    with pytest.raises(InvalidRepresentation) as e:
        validate_rep(bad)
    assert any("associativity" in v for v in e.value.violations)
    not_onto = AlgebraRep(QQ, X1, 2, [[[0, 0]] * 2] * 2, {"x": [1, 0]})
    with pytest.raises(InvalidRepresentation) as e:
        validate_rep(not_onto)
    assert any("surjectivity" in v for v in e.value.violations)


def test_submodule_only_classification():
    # S = span(t) in span(t, t^2): t*t = t^2 escapes S
    rep = AlgebraRep(QQ, X1, 2, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]], {"x": [1, 0]}, [[1, 0]])
    assert validate_rep(rep) is IdealClass.SUBMODULE_ONLY


def test_closure_examples():
    rep = sub2()
    t2 = Submodule(QQ, 2, [(0, 1)])
    assert closure_submodule(rep, t2, "two_sided") == t2
    assert closure_submodule(rep, Submodule.zero(QQ, 2)).is_zero()
    assert closure_submodule(rep, Submodule.full(QQ, 2)).is_full()
    assert closure_submodule(rep, Submodule(QQ, 2, [(1, 0)]), "right_ideal").is_full()
    with pytest.raises(ValueError):
        closure_submodule(rep, t2, "sideways")


def test_reduce_sub2_reproduces_b():
    red = ideal_in_subalgebra(sub2())
    assert red.h_kernel == Submodule(QQ, 2, [(0, 1)])
    assert red.ideal == Submodule(QQ, 2, [(0, 1)])
    out = red.rep
    assert out.rank == 1 and out.structure_constants == (((0,),),)
    assert out.marked_submodule.is_zero()
    rng = random.Random(1)
    for _ in range(30):
        p = random_polynomial(rng, QQ, X1, 5, max_terms=3)
        assert is_member(out, p) == is_member(sub2(), p)


def test_reduce_trivial_cases():
    zero_marked = sub2().with_marked([])
    assert ideal_in_subalgebra(zero_marked).ideal.is_zero()
    full = sub2().with_marked([[1, 0], [0, 1]])
    red = ideal_in_subalgebra(full)
    assert red.ideal.is_full() and red.rep.rank == 0
    assert is_member(red.rep, parse_poly("x", X1, QQ))


def test_reduce_rejects_non_subalgebras():
    rep = AlgebraRep(QQ, X1, 2, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]], {"x": [1, 0]}, [[1, 0]])
    with pytest.raises(InvalidRepresentation):
        reduce_to_ideal(rep)


def test_kernel_ideal_is_two_sided():
    for make in ALGEBRA_FIXTURES.values():
        assert validate_rep(kernel_ideal(make())) is IdealClass.TWO_SIDED_IDEAL

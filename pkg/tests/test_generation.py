import random

import pytest

from corank.fixtures import ALGEBRA_FIXTURES, GENERATION_Y, sub2
from corank.free_algebra import Alphabet, Polynomial, parse_poly, random_polynomial
from corank.generation import (
    GenerationSpec,
    Leaf,
    Product,
    Sum,
    evaluate,
    finite_generating_set,
    gamma,
    render,
    rewrite_member,
)
from corank.quotient_rep import AlgebraRep, InvalidRepresentation, is_member, random_member
from corank.rings import GF, QQ

X1 = Alphabet(["x"])


def P(t, A=X1, ring=QQ):
    return parse_poly(t, A, ring)


@pytest.fixture(scope="module")
def S2():
    spec = GenerationSpec(sub2(), ["x"])
    return spec, finite_generating_set(spec)


def test_gamma_examples(S2):
    spec, _ = S2
    assert gamma(spec, P("3*x + 5*x^2")) == P("3*x")
    assert gamma(spec, P("x^2")).is_zero()
    assert gamma(spec, Polynomial.zero(QQ, X1)).is_zero()


def test_sub2_generating_set(S2):
    _, gs = S2
    assert gs.generators == (P("x^2"), P("x^3"))
    assert gs.dropped == 1 and gs.z_part == ()
    assert gs.provenance(X1) == [{"word": "x^2", "kind": "U"}, {"word": "x^3", "kind": "U"}]


def test_sub2_rewrites(S2):
    spec, gs = S2
    four = rewrite_member(spec, gs, P("x^4"))
    assert four == Product((Leaf(0), Leaf(0)))
    assert render(four, QQ) == "g1*g1"
    assert render(rewrite_member(spec, gs, P("x^5")), QQ) == "g1*g2"
    assert rewrite_member(spec, gs, P("x^3")) == Leaf(1)


def test_rewrite_rejects_non_members(S2):
    spec, gs = S2
    with pytest.raises(ValueError):
        rewrite_member(spec, gs, P("x"))
    with pytest.raises(TypeError):
        rewrite_member(spec, gs, P("x^2").embed())


def test_f2_example():
    XY = Alphabet(["x", "y"])
    F2 = GF(2)
    rep = AlgebraRep(F2, XY, 1, [[[0]]], {"x": [1], "y": [1]})
    spec = GenerationSpec(rep, ["x"])
    p = P("x*y + y + x^2*y", XY, F2)
    assert gamma(spec, p) == P("x", XY, F2)
    gs = finite_generating_set(spec)
    assert len(gs.u_part) <= 14
    assert all(is_member(rep, g) for g in gs.generators)


def test_y_must_span():
    with pytest.raises(InvalidRepresentation):
        GenerationSpec(sub2(), [])
    with pytest.raises(InvalidRepresentation):
        GenerationSpec(sub2(), ["z"])


@pytest.mark.parametrize("name", sorted(ALGEBRA_FIXTURES))
def test_gamma_is_constant_on_cosets(name):
    spec = GenerationSpec(ALGEBRA_FIXTURES[name](), GENERATION_Y[name])
    rep = spec.rep
    rng = random.Random(name)
    for _ in range(100):
        p = random_polynomial(rng, rep.ring, rep.alphabet, 4, max_terms=3)
        b = random_member(rep, rng, max_deg=4)
        assert gamma(spec, p + b) == gamma(spec, p)
        assert is_member(rep, p - gamma(spec, p))


@pytest.mark.parametrize("name", sorted(ALGEBRA_FIXTURES))
def test_rewrite_round_trip(name):
    spec = GenerationSpec(ALGEBRA_FIXTURES[name](), GENERATION_Y[name])
    gs = finite_generating_set(spec)
    rep = spec.rep
    rng = random.Random(name + "rw")
    for _ in range(25):
        p = random_member(rep, rng, max_deg=6)
        node = rewrite_member(spec, gs, p)
        assert evaluate(node, gs.generators, rep.ring, rep.alphabet) == p


def test_render_sums():
    node = Sum(((QQ(2), Leaf(0)), (QQ(-1), Product((Leaf(1), Sum(((QQ(1), Leaf(0)), (QQ(1), Leaf(1)))))))))
    assert render(node, QQ) == "2*g1 - g2*(g1 + g2)"
    assert render(Sum(()), QQ) == "0"

import pytest

from corank.extension import compose_extension, present_quotient_subalgebra, restrict_ideal_generators
from corank.fixtures import aug1, rnt
from corank.free_algebra import Alphabet, Polynomial, parse_poly
from corank.membership import ideal_membership_bounded
from corank.presentation import build_symbol_tables, compute_U, present_right_ideal, psibar_eval
from corank.rings import QQ

X1 = Alphabet(["x"])


def P(t):
    return parse_poly(t, X1, QQ)


@pytest.fixture(scope="module")
def R():
    rep = aug1()
    return rep, present_right_ideal(rep)


def test_restrict_empty(R):
    rep, pres = R
    res = restrict_ideal_generators(rep, pres, [])
    assert res.generators == () and res.witnesses == ()


def test_restrict_whole_ideal(R):
    # x^3 - x^2 = (x^2 - x)*x cannot be reached from x^2 - x inside R, so it stays
    rep, pres = R
    res = restrict_ideal_generators(rep, pres, [P("x^2 - x")])
    assert res.witnesses == (P("x^2 - x"), P("x^3 - x^2"))
    assert [p[0] for p in res.pruned] == ["x^4 - x^3"]
    for c, w in zip(res.certificates, res.witnesses):
        assert c.check([P("x^2 - x")]) and c.target == w


def test_restrict_cube_certified_both_ways(R):
    rep, pres = R
    g = P("x^3 - x^2")
    res = restrict_ideal_generators(rep, pres, [g], deg_cap=4)
    ud = compute_U(rep, build_symbol_tables(rep))
    assert res.witnesses[0] == g
    for y, w, cert in zip(res.generators, res.witnesses, res.certificates):
        assert psibar_eval(ud, y) == w
        assert cert.check([g])
    # g itself is a kept generator, so Id_R(G) contains the input
    assert g in res.witnesses


def test_restrict_rejects_non_members(R):
    rep, pres = R
    with pytest.raises(ValueError):
        restrict_ideal_generators(rep, pres, [P("x")])
    with pytest.raises(ValueError):
        restrict_ideal_generators(rep, pres, [P("x^2 - x")], deg_cap=-1)


def test_quotient_with_no_ideal_is_the_plain_presentation(R):
    rep, pres = R
    assert present_quotient_subalgebra(rep, []) == pres


def test_quotient_of_r_by_itself_kills_every_generator(R):
    rep, pres = R
    q = present_quotient_subalgebra(rep, [P("x^2 - x")])
    ud = compute_U(rep, build_symbol_tables(rep))
    extra = q.relations[len(pres.relations):]
    assert dict(q.sections)["G"] == len(extra) == 2
    # every generator's image lies in I = R
    for w in q.witnesses:
        assert w.is_zero() or ideal_membership_bounded([P("x^2 - x")], w, "two_sided", 2)
    assert all(not psibar_eval(ud, r).is_zero() for r in extra)


def test_quotient_by_cube(R):
    rep, pres = R
    q = present_quotient_subalgebra(rep, [P("x^3 - x^2")])
    assert len(q.relations) == 22
    assert q.alphabet == pres.alphabet


def test_quotient_needs_two_sided():
    with pytest.raises(ValueError):
        present_quotient_subalgebra(rnt(), [])


# -- extensions ---------------------------------------------------------------

def test_compose_worked_example():
    t = P("x^2 - x")
    ext = compose_extension(X1, [("t", t)], ["t^2"], deg_cap=3, known_relations=[P("x^3 - x^2")])
    assert ext.i_generators == (P("x^4 - 2*x^3 + x^2"), P("x^3 - x^2"), P("x^3 - x^2"))
    assert all(p.is_zero() for p in ext.witnesses.values())
    assert set(ext.witnesses) == {("x", "t", "left"), ("x", "t", "right")}
    cube = P("x^3 - x^2")
    for g in ext.i_generators:
        assert ideal_membership_bounded([cube], g, "two_sided", 3) is not None
    assert ideal_membership_bounded(list(ext.i_generators), cube, "two_sided", 0) is not None


def test_compose_without_known_relations_is_inconclusive():
    # W-bar alone generates Id((x^2 - x)^2), which misses x(x^2 - x)
    t = P("x^2 - x")
    assert compose_extension(X1, [("t", t)], ["t^2"], deg_cap=3) is None


def test_compose_empty_inputs():
    ext = compose_extension(X1, [], [], ring=QQ)
    assert ext.i_generators == () and ext.presentation.relations == ()
    assert ext.presentation.witnesses == (P("x"),)
    with pytest.raises(ValueError):
        compose_extension(X1, [], [])


def test_compose_cap_zero_is_absent():
    t = P("x^2 - x")
    assert compose_extension(X1, [("t", t)], [], deg_cap=0) is None


def test_compose_nonzero_witness():
    # R = K<x>_+ generated by t -> x, B = R/R presented by the relation t: I = R
    ext = compose_extension(X1, [("t", P("x"))], [], deg_cap=2, known_relations=[])
    assert ext is not None
    p = ext.witnesses[("x", "t", "left")]
    assert p == parse_poly("t^2", Alphabet(["t"]), QQ)
    assert ext.i_generators == ()

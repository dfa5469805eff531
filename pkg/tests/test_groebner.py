import pytest
import sympy
from hypothesis import given, strategies as st

from monocurve.groebner import (
    REDUCED,
    UNVERIFIED,
    VERIFIED,
    ContractError,
    GroebnerBasis,
    buchberger_complete,
    codimension,
    eliminate,
    initial_ideal,
    is_groebner_basis,
    reduce_basis,
    same_ideal,
    verify,
)
from monocurve.monomial_ideal import UnitIdealError
from monocurve.poly import MonomialOrder, default_order, normal_form, parse_polynomial, polys
from strategies import RING3, RING4, binomials, nonzero_polynomials, orders


def to_sympy(p, syms):
    env = {v: s for v, s in zip(p.ring, syms)}
    return sympy.sympify(str(p).replace("^", "**"), locals=env)


def sympy_reduced_gb(F, order_vars):
    """Reduced GB under degrevlex with ``order_vars`` descending, as a set of our polynomials."""
    ring = F[0].ring
    syms = sympy.symbols(" ".join(order_vars))
    env = dict(zip(order_vars, syms))
    G = sympy.groebner([sympy.sympify(str(f).replace("^", "**"), locals=env) for f in F], *syms, order="grevlex")
    return {parse_polynomial(str(sympy.expand(g)).replace("**", "^").replace(" ", ""), ring) for g in G.exprs}


def test_twisted_cubic_like_example():
    ring = RING4
    F = polys(["x2^3 - x1^2*x3", "x1*x3^2 - x2^2*x4", "x3^3 - x2*x4^2", "x2*x3 - x1*x4"], ring)
    gb = buchberger_complete(F, default_order(ring))
    assert gb.status == REDUCED
    assert set(gb.elements) == sympy_reduced_gb(F, ring)
    ok, reports = is_groebner_basis(gb.elements, gb.order)
    assert ok and all(r.reduced_to_zero for r in reports)


@given(st.lists(binomials(RING3), min_size=1, max_size=3))
def test_reduced_basis_matches_sympy(F):
    gb = buchberger_complete(F, default_order(RING3), use_cache=False)
    assert set(gb.elements) == sympy_reduced_gb(F, RING3)


@given(st.data())
def test_reduced_basis_is_permutation_invariant(data):
    o = data.draw(orders(RING3))
    F = data.draw(st.lists(nonzero_polynomials(RING3, max_terms=3, max_exp=2), min_size=1, max_size=3))
    G1 = buchberger_complete(F, o, use_cache=False)
    G2 = buchberger_complete(data.draw(st.permutations(F)), o, use_cache=False)
    assert G1.elements == G2.elements
    assert is_groebner_basis(G1.elements, o)[0]


@given(st.lists(binomials(RING3), min_size=1, max_size=3))
def test_audit_mode_agrees(F):
    o = default_order(RING3)
    assert buchberger_complete(F, o, use_cache=False).elements == buchberger_complete(F, o, audit=True).elements


@given(st.lists(binomials(RING3), min_size=1, max_size=3), nonzero_polynomials(RING3))
def test_membership_by_normal_form(F, h):
    o = default_order(RING3)
    gb = buchberger_complete(F, o)
    combo = h * F[0]
    assert not normal_form(combo, gb.elements, o)


def test_non_basis_detected():
    F = polys(["x1^2 - x2", "x1*x2 - x3"], RING3)
    ok, reports = is_groebner_basis(F, default_order(RING3))
    assert not ok
    assert any(not r.reduced_to_zero for r in reports)
    assert verify(F, default_order(RING3)).status == UNVERIFIED


def test_initial_ideal_requires_verified_basis():
    F = polys(["x1^2 - x2", "x1*x2 - x3"], RING3)
    with pytest.raises(ContractError):
        initial_ideal(GroebnerBasis(tuple(F), default_order(RING3), UNVERIFIED))
    with pytest.raises(ContractError):
        reduce_basis(GroebnerBasis(tuple(F), default_order(RING3), UNVERIFIED))


def test_reduce_verified_basis():
    o = default_order(RING3)
    F = polys(["x1 - x2", "x1^2 - x3", "x2^2 - x3"], RING3)
    gb = buchberger_complete(F, o)
    padded = verify(list(gb.elements) + [gb.elements[0] * parse_polynomial("x3", RING3)], o)
    assert padded.status == VERIFIED
    assert reduce_basis(padded).elements == gb.elements


def test_eliminate_twisted_cubic():
    ring = ("t", "x1", "x2", "x3")
    F = polys(["x1 - t", "x2 - t^2", "x3 - t^3"], ring)
    E = eliminate(F, ["t"])
    sub = ("x1", "x2", "x3")
    expected = polys(["x2 - x1^2", "x3 - x1*x2"], sub)
    assert same_ideal(E, expected, default_order(sub))


def test_codimension_examples():
    assert codimension(polys(["x1", "x2"], RING4)) == 2
    assert codimension(polys(["x1*x2"], RING4)) == 1
    assert codimension(polys(["x1*x2", "x1*x3"], RING4)) == 1
    assert codimension(polys(["x2^3 - x1^2*x3", "x2*x3 - x1*x4", "x3^3 - x2*x4^2"], RING4)) == 2
    with pytest.raises(UnitIdealError):
        codimension(polys(["x1", "x1 - 1"], RING4))


def test_unit_ideal_basis():
    gb = buchberger_complete(polys(["x1", "x1 + 1"], RING3), default_order(RING3))
    assert gb.is_unit()
    assert gb.elements == (parse_polynomial("1", RING3),)


def test_basis_under_alternative_order():
    o = MonomialOrder.degrevlex(RING3, ["x3", "x2", "x1"])
    F = polys(["x1^2 - x2*x3", "x2^2 - x1*x3"], RING3)
    gb = buchberger_complete(F, o)
    assert set(gb.elements) == sympy_reduced_gb(F, ["x3", "x2", "x1"])

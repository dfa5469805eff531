from math import gcd
from functools import reduce

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from monocurve.groebner import ContractError, GroebnerBasis, buchberger_complete, initial_ideal
from monocurve.monomial_ideal import standard_monomials
from monocurve.poly import Polynomial, homogenize, parse_polynomial, polys
from monocurve.toric import (
    AFFINE,
    PROJECTIVE,
    MonomialCurveSpec,
    ScaleGuardError,
    SpecError,
    acm_test,
    affine_order,
    binomial_degrees_match,
    eval_parametrization,
    family_exponents,
    gastinger_verify,
    graph_ideal,
    projective_closure_basis,
    toric_ideal,
    vanishes,
)


def sympy_toric_basis(exps, projective=False):
    """Kernel of x_i -> t^n_i by lex elimination in sympy, returned as a reduced degrevlex basis."""
    r = len(exps)
    t, s = sympy.symbols("t s")
    xs = sympy.symbols(" ".join(f"x{i}" for i in range(1, r + 1)))
    top = exps[-1]
    if projective:
        x0 = sympy.Symbol("x0")
        F = [x0 - s ** top] + [x - t ** a * s ** (top - a) for x, a in zip(xs, exps)]
        G = sympy.groebner(F, t, s, *xs, x0, order="lex")
        kernel = [g for g in G.exprs if not g.has(t) and not g.has(s)]
        G = sympy.groebner(kernel, *xs, x0, order="grevlex")
        ring = ("x0",) + tuple(map(str, xs))
    else:
        F = [x - t ** a for x, a in zip(xs, exps)]
        G = sympy.groebner(F, t, *xs, order="lex")
        kernel = [g for g in G.exprs if not g.has(t)]
        G = sympy.groebner(kernel, *xs, order="grevlex")
        ring = tuple(map(str, xs))
    return {parse_polynomial(str(sympy.expand(g)).replace("**", "^").replace(" ", ""), ring) for g in G.exprs}


# -- specs


def test_spec_validation():
    with pytest.raises(SpecError):
        MonomialCurveSpec((4, 6, 8, 10))
    with pytest.raises(SpecError):
        MonomialCurveSpec((3, 3, 5, 7))
    with pytest.raises(SpecError):
        MonomialCurveSpec((0, 3, 5, 7))
    with pytest.raises(SpecError):
        MonomialCurveSpec((10, 3, 5, 7), PROJECTIVE)
    with pytest.raises(SpecError):
        MonomialCurveSpec((6, 7, 9, 10), family=("arslan", (("h", 3),)))


def test_family_exponents():
    assert family_exponents("backelin", {"n": 2, "r": 8}) == (67, 70, 74, 75)
    assert family_exponents("bresinsky", {"h": 2}) == (12, 15, 20, 23)
    assert family_exponents("arslan", {"h": 2}) == (6, 7, 9, 10)
    with pytest.raises(SpecError):
        family_exponents("nope", {})


def test_spec_json_round_trip():
    spec = MonomialCurveSpec.for_family("backelin", n=2, r=8)
    back = MonomialCurveSpec.from_json(spec.to_json())
    assert back == spec
    assert back.family_name == "backelin" and back.family_params == {"n": 2, "r": 8}
    assert spec.with_mode(PROJECTIVE).ring == ("x0", "x1", "x2", "x3", "x4")


# -- parametrization


def test_eval_parametrization():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    f = parse_polynomial("x2*x3 - x1*x4", spec.ring)
    assert vanishes(f, spec)
    g = parse_polynomial("x1^2 + x2", spec.ring)
    assert str(eval_parametrization(g, spec)) == "t^12 + t^7"
    P = spec.with_mode(PROJECTIVE)
    h = parse_polynomial("x1^3 - x0*x3^2", P.ring)
    assert vanishes(h, P)
    assert not vanishes(parse_polynomial("x1^3 - x3^2", P.ring), P)


def test_eval_rejects_wrong_ring():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    with pytest.raises(Exception):
        eval_parametrization(parse_polynomial("x1", ("x1", "x2")), spec)


@st.composite
def specs(draw):
    while True:
        ex = tuple(sorted(draw(st.sets(st.integers(2, 30), min_size=4, max_size=4))))
        if reduce(gcd, ex) == 1:
            break
    mode = draw(st.sampled_from([AFFINE, PROJECTIVE]))
    return MonomialCurveSpec(ex, mode)


@st.composite
def spec_and_binomial(draw):
    spec = draw(specs())
    n = len(spec.ring)
    u = list(draw(st.tuples(*[st.integers(0, 6)] * n)))
    if draw(st.booleans()):
        # move along a relation so that both weighted degrees agree
        i, j = draw(st.permutations(range(4)))[:2]
        a, b = spec.exponents[i], spec.exponents[j]
        off = 1 if spec.mode == PROJECTIVE else 0
        w = [0] * n
        w[off + i] += b
        w[off + j] -= a
        if spec.mode == PROJECTIVE:
            w[0] += a - b
        u = [max(x, -y) for x, y in zip(u, w)]
        v = [x + y for x, y in zip(u, w)]
    else:
        v = list(draw(st.tuples(*[st.integers(0, 6)] * n)))
    assume(u != v)
    f = Polynomial(spec.ring, {tuple(u): 1, tuple(v): -1})
    return spec, f


@given(spec_and_binomial())
def test_binomial_vanishing_iff_degrees_match(data):
    spec, f = data
    assert vanishes(f, spec) == binomial_degrees_match(f, spec)


# -- toric ideals


@pytest.mark.parametrize("exps", [(3, 4, 5), (6, 7, 9, 10), (4, 5, 6, 7), (5, 7, 11, 13)])
def test_toric_ideal_matches_sympy(exps):
    spec = MonomialCurveSpec(exps)
    gb = toric_ideal(spec)
    assert set(gb.elements) == sympy_toric_basis(exps)
    assert all(vanishes(g, spec) for g in gb.elements)


@pytest.mark.parametrize("exps", [(3, 4, 5), (6, 7, 9, 10)])
def test_projective_toric_ideal_matches_sympy(exps):
    spec = MonomialCurveSpec(exps, PROJECTIVE)
    gb = toric_ideal(spec)
    assert set(gb.elements) == sympy_toric_basis(exps, projective=True)


def test_projective_closure_of_reduced_basis():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    aff = toric_ideal(spec)
    proj = toric_ideal(spec.with_mode(PROJECTIVE))
    assert set(projective_closure_basis(aff).elements) == set(proj.elements)
    with pytest.raises(ContractError):
        projective_closure_basis(GroebnerBasis(aff.elements, aff.order, "verified"))


def test_scale_guard():
    with pytest.raises(ScaleGuardError):
        toric_ideal(MonomialCurveSpec((100, 301, 303, 305)))


def test_graph_ideal_shape():
    spec = MonomialCurveSpec((6, 7, 9, 10), PROJECTIVE)
    G = graph_ideal(spec)
    assert len(G) == 5 and G[0].ring == ("t", "s", "x0", "x1", "x2", "x3", "x4")


# -- Gastinger's criterion


@pytest.mark.parametrize("exps", [(3, 4, 5), (6, 7, 9, 10), (5, 7, 11, 13), (4, 5, 6, 7)])
def test_true_ideal_has_n_i_standard_monomials(exps):
    spec = MonomialCurveSpec(exps)
    gens = list(toric_ideal(spec).elements)
    for i in range(1, len(exps) + 1):
        cert = gastinger_verify(gens, spec, i)
        assert cert.verdict and cert.count == exps[i - 1]


def test_gastinger_rejects_proper_subideal():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    gens = list(toric_ideal(spec).elements)
    cert = gastinger_verify(gens[:-1], spec, 1)
    assert not cert.verdict
    assert cert.count is None or cert.count > 6


def test_gastinger_flags_nonvanishing():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    gens = list(toric_ideal(spec).elements) + [parse_polynomial("x1 - x2", spec.ring)]
    cert = gastinger_verify(gens, spec, 1)
    assert not cert.verdict and not cert.all_vanish and cert.nonvanishing == (len(gens) - 1,)


def test_gastinger_argument_errors():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    gens = list(toric_ideal(spec).elements)
    with pytest.raises(SpecError):
        gastinger_verify(gens, spec, 5)
    with pytest.raises(SpecError):
        gastinger_verify(gens, spec.with_mode(PROJECTIVE), 1)


# -- ACM


def test_acm_examples():
    # the rational normal-like curve (6,7,9,10) is ACM; (1,3,4) style gap curves are not
    assert acm_test(MonomialCurveSpec((6, 7, 9, 10))) == (True, None)
    ok, witness = acm_test(MonomialCurveSpec((1, 3, 4)))
    assert not ok and witness[-1] > 0


def test_acm_needs_degrevlex_basis():
    spec = MonomialCurveSpec((6, 7, 9, 10))
    gb = toric_ideal(spec)
    from monocurve.poly import MonomialOrder

    other = buchberger_complete(gb.elements, MonomialOrder.degrevlex(spec.ring, ["x4", "x3", "x2", "x1"]))
    with pytest.raises(ContractError):
        acm_test(spec, other)

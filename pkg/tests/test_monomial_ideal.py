import itertools

import pytest
from hypothesis import given, strategies as st

from monocurve.monomial_ideal import (
    HilbertNumerator,
    UnitIdealError,
    canonical_key,
    colon_by_monomial,
    dimension_monomial,
    hilbert_numerator,
    minimal_generators,
    standard_monomials,
    standard_monomials_in_degree,
)
from strategies import RING3, RING4, exponents


def ideal(*gens, ring=RING4):
    return minimal_generators(gens, ring)


monomial_ideals = st.lists(exponents(3, 4), min_size=1, max_size=6).map(lambda g: minimal_generators(g, RING3))


def test_minimal_generators_drop_multiples():
    I = ideal((1, 0, 0, 0), (2, 1, 0, 0), (0, 1, 1, 0), (0, 1, 1, 0))
    assert I.gens == ((1, 0, 0, 0), (0, 1, 1, 0))
    assert I.as_strings() == ["x1", "x2*x3"]


def test_canonical_order_is_lex_on_reversed_exponents():
    I = ideal((0, 0, 0, 1), (3, 0, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0))
    assert [canonical_key(g) for g in I.gens] == sorted(canonical_key(g) for g in I.gens)
    assert I.gens[0] == (3, 0, 0, 0) and I.gens[-1] == (0, 0, 0, 1)


def test_colon():
    I = ideal((2, 1, 0, 0), (0, 0, 3, 0))
    assert colon_by_monomial(I, (1, 0, 1, 0)).gens == ((1, 1, 0, 0), (0, 0, 2, 0))


def test_hilbert_numerator_examples():
    # k[x1..x4]/(x1): numerator 1 - t
    assert hilbert_numerator(ideal((1, 0, 0, 0))) == HilbertNumerator({0: 1, 1: -1})
    # complete intersection of degrees 2, 3
    assert hilbert_numerator(ideal((2, 0, 0, 0), (0, 3, 0, 0))) == HilbertNumerator({0: 1, 2: -1, 3: -1, 5: 1})
    # zero ideal and unit ideal
    assert hilbert_numerator(minimal_generators([], RING4)) == HilbertNumerator({0: 1})
    assert hilbert_numerator(ideal((0, 0, 0, 0))) == HilbertNumerator({})


def test_numerator_parse_and_pretty():
    h = HilbertNumerator({0: 1, 3: -1, 4: -2, 13: -6})
    assert HilbertNumerator.parse(str(h)) == h
    assert h.pretty() == "1 - t^3 - 2*t^4 - 6*t^13"
    assert h.degree() == 13


def test_series_counts_monomials():
    assert HilbertNumerator({0: 1}).series(3, 4) == [1, 3, 6, 10, 15]


@given(monomial_ideals)
def test_hilbert_function_matches_brute_force(I):
    h = hilbert_numerator(I)
    series = h.series(3, 10)
    assert series == [standard_monomials_in_degree(I, d) for d in range(11)]


@given(monomial_ideals, st.randoms(use_true_random=False))
def test_hilbert_numerator_order_invariance(I, rnd):
    base = hilbert_numerator(I)
    perm = list(range(3))
    rnd.shuffle(perm)
    # any total order on generators gives the same numerator
    alt = hilbert_numerator(I, pivot_order=lambda e: tuple(e[i] for i in perm))
    assert alt == base
    shuffled = {g: rnd.random() for g in I.gens}
    assert hilbert_numerator(I, pivot_order=lambda e: shuffled.get(e, 0.5)) == base


def test_standard_monomials_artinian():
    I = ideal((2, 0, 0), (0, 3, 0), (0, 0, 1), (1, 1, 0), ring=RING3)
    sm = standard_monomials(I, enumerate_all=True)
    assert sm.finite and sm.count == 4
    assert sm.monomials == ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 2, 0))


def test_standard_monomials_infinite_witness():
    sm = standard_monomials(ideal((2, 0, 0), (0, 0, 1), ring=RING3))
    assert not sm.finite and sm.witness == "x2"


@given(st.lists(exponents(3, 3), min_size=1, max_size=5))
def test_standard_monomial_count_brute_force(gens):
    gens = gens + [(4, 0, 0), (0, 4, 0), (0, 0, 4)]
    I = minimal_generators(gens, RING3)
    brute = sum(1 for e in itertools.product(range(4), repeat=3) if not I.contains(e))
    assert standard_monomials(I).count == brute
    # agrees with the Hilbert numerator evaluated at t = 1
    assert hilbert_numerator(I).series(3, 12)[-1] == 0
    assert sum(hilbert_numerator(I).series(3, 12)) == brute


def test_dimension():
    assert dimension_monomial(ideal((1, 0, 0, 0), (0, 1, 0, 0))) == 2
    assert dimension_monomial(ideal((1, 1, 0, 0))) == 3
    assert dimension_monomial(ideal((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))) == 0
    with pytest.raises(UnitIdealError):
        dimension_monomial(ideal((0, 0, 0, 0)))


@given(monomial_ideals)
def test_dimension_matches_numerator_pole_order(I):
    if I.is_unit():
        return
    h = hilbert_numerator(I)
    # the pole order at t = 1 is the Krull dimension
    n, order = 3, 0
    coeffs = dict(h.coeffs)
    while coeffs and sum(coeffs.values()) == 0:
        # divide by (1 - t)
        q, run = {}, 0
        for d in range(max(coeffs) + 1):
            run += coeffs.get(d, 0)
            if run:
                q[d] = run
        coeffs = q
        order += 1
    assert n - order == dimension_monomial(I)

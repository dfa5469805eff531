import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from monocurve.linsolve import solve_exact, solve_mod
from monocurve.matrix import (
    MatrixAssembler,
    PolynomialMatrix,
    ShapeError,
    bareiss_rank,
    cofactor_determinant,
    determinant,
    modular_rank,
    rank_mod,
)
from monocurve.poly import Polynomial, parse_polynomial
from strategies import RING3, polynomials

small_polys = polynomials(RING3, max_terms=2, max_exp=2, coeffs=st.integers(-3, 3))


def M(rows, ring=RING3):
    return PolynomialMatrix.from_rows([[parse_polynomial(x, ring) for x in r] for r in rows], ring)


def test_shape_and_access():
    A = M([["x1", "0"], ["x2", "x3"]])
    assert A.shape == (2, 2)
    assert A[0, 1] == 0 and A[1, 0] == parse_polynomial("x2", RING3)
    with pytest.raises(IndexError):
        A[2, 0] = parse_polynomial("x1", RING3)
    with pytest.raises(ShapeError):
        A @ M([["x1", "x2", "x3"]])


def test_product_and_transpose():
    A = M([["x1", "x2"]])
    B = M([["x2"], ["-x1"]])
    assert (A @ B).is_zero()
    assert A.transpose().shape == (2, 1)
    assert (A @ A.transpose())[0, 0] == parse_polynomial("x1^2 + x2^2", RING3)


def test_serialization_round_trip():
    A = M([["x1", "0", "3/2*x2^2"], ["0", "x3 - 1", "0"]])
    d = A.to_dict()
    assert d["entries"][0] == [1, 1, "x1"]
    assert PolynomialMatrix.from_dict(d, RING3) == A


def test_constant_cells():
    A = M([["x1", "2"], ["0", "x3"]])
    assert A.constant_cells() == [(0, 1)]


def test_determinant_examples():
    assert determinant(PolynomialMatrix(0, 0, RING3)) == 1
    A = M([["x1", "x2"], ["x3", "x1"]])
    assert determinant(A) == parse_polynomial("x1^2 - x2*x3", RING3)
    sing = M([["x1", "x2"], ["x1*x3", "x2*x3"]])
    assert determinant(sing) == 0
    with pytest.raises(ShapeError):
        determinant(M([["x1", "x2"]]))


@given(st.lists(st.lists(small_polys, min_size=3, max_size=3), min_size=3, max_size=3))
def test_bareiss_matches_cofactor_expansion(rows):
    A = PolynomialMatrix.from_rows(rows, RING3)
    assert determinant(A) == cofactor_determinant(rows)


@given(st.lists(st.lists(small_polys, min_size=3, max_size=3), min_size=3, max_size=3),
       st.lists(st.lists(small_polys, min_size=3, max_size=3), min_size=3, max_size=3))
def test_determinant_is_multiplicative(a, b):
    A = PolynomialMatrix.from_rows(a, RING3)
    B = PolynomialMatrix.from_rows(b, RING3)
    assert determinant(A @ B) == determinant(A) * determinant(B)


def rank_by_minors(rows):
    m, n = len(rows), len(rows[0])
    for k in range(min(m, n), 0, -1):
        for rs in itertools.combinations(range(m), k):
            for cs in itertools.combinations(range(n), k):
                if cofactor_determinant([[rows[i][j] for j in cs] for i in rs]):
                    return k
    return 0


@given(st.lists(st.lists(small_polys, min_size=4, max_size=4), min_size=3, max_size=3))
def test_rank_matches_largest_nonzero_minor(rows):
    A = PolynomialMatrix.from_rows(rows, RING3)
    expected = rank_by_minors(rows)
    assert bareiss_rank(A) == expected
    lower, _ = modular_rank(A, seed=1)
    assert lower <= expected


def test_rank_mod_pivots():
    r, piv = rank_mod([[1, 2, 3], [2, 4, 6], [0, 1, 1]], 101)
    assert r == 2
    assert [p[1] for p in piv] == [0, 1]


# -- assembly


def test_assembler_single_writer():
    x1 = parse_polynomial("x1", RING3)
    x2 = parse_polynomial("x2", RING3)
    a = MatrixAssembler("A", 2, 2, RING3)
    a.put(1, 1, x1, "r1")
    a.put(1, 1, x1, "r1 again")
    a.put(1, 1, x2, "r2")
    a.put(3, 1, x2, "r3")
    kinds = [d.kind for d in a.diagnostics]
    assert kinds == ["duplicate", "conflict", "out-of-range"]
    assert a.matrix[0, 0] == x1
    assert len(a.conflicts()) == 2
    assert "first writer kept" in str(a.diagnostics[1])
    assert "(3,1)" in str(a.diagnostics[2])


# -- linear systems


def test_solve_exact_and_mod():
    eqs = [({0: 1, 1: 1}, 3), ({0: 1, 1: -1}, 1)]
    assert solve_exact(eqs) == {0: 2, 1: 1}
    assert solve_mod(eqs, 101) == {0: 2, 1: 1}
    assert solve_exact([({0: 1}, 1), ({0: 2}, 3)]) is None
    sol = solve_exact([({0: 2, 1: 4}, 1)])
    assert sol == {0: Fraction(1, 2)}


@given(st.lists(st.lists(st.integers(-4, 4), min_size=4, max_size=4), min_size=1, max_size=4),
       st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_solve_exact_returns_solution_of_consistent_system(A, x):
    eqs = [({j: a for j, a in enumerate(row) if a}, sum(a * b for a, b in zip(row, x))) for row in A]
    sol = solve_exact(eqs)
    assert sol is not None
    for coeffs, rhs in eqs:
        assert sum(c * sol.get(j, 0) for j, c in coeffs.items()) == rhs

import math

import pytest

from monocurve.families import arslan_certificates, arslan_system, bresinsky_system
from monocurve.matrix import PolynomialMatrix, ShapeError
from monocurve.poly import parse_polynomial
from monocurve.resolution import (
    CertificateRejected,
    FreeComplex,
    buchsbaum_eisenbud_verify,
    complex_ranks,
    compose_check,
    matrix_rank,
    minor_determinant,
    repair_complex,
)

R3 = ("x1", "x2", "x3")


def M(rows, ring=R3):
    return PolynomialMatrix.from_rows([[parse_polynomial(x, ring) for x in r] for r in rows], ring)


def koszul3():
    d1 = M([["x1", "x2", "x3"]])
    d2 = M([["x2", "x3", "0"], ["-x1", "0", "x3"], ["0", "-x1", "-x2"]])
    d3 = M([["x3"], ["-x2"], ["x1"]])
    return FreeComplex([d1, d2, d3])


def test_expected_ranks():
    C = koszul3()
    assert C.free_ranks() == [1, 3, 3, 1]
    assert C.expected_ranks() == [1, 2, 1]


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        FreeComplex([M([["x1", "x2"]]), M([["x1"]])])


def test_compose_check():
    assert compose_check(koszul3()) == (True, [])
    zero = FreeComplex([M([["x1", "x2"]]), PolynomialMatrix(2, 1, R3)])
    assert compose_check(zero)[0]
    bad = FreeComplex([M([["x1", "x2"]]), M([["x1"], ["x2"]])])
    ok, cells = compose_check(bad)
    assert not ok and cells == [(1, 1, 1)]


def test_matrix_rank_and_minors():
    C = koszul3()
    assert complex_ranks(C) == [1, 2, 1]
    assert matrix_rank(C.differentials[1]) == 2
    d2 = C.differentials[1]
    assert minor_determinant(d2, [], []) == 1
    assert minor_determinant(d2, [1, 2], [1, 2]) == parse_polynomial("x1*x3", R3)
    with pytest.raises(ValueError):
        minor_determinant(d2, [2, 1], [1, 2])
    with pytest.raises(ValueError):
        minor_determinant(d2, [1, 4], [1, 2])


def test_koszul_complex_is_exact():
    v = buchsbaum_eisenbud_verify(koszul3())
    assert v.verdict and v.minimal
    assert all(lv.codim >= lv.level for lv in v.levels)


def test_single_map_complex():
    v = buchsbaum_eisenbud_verify(FreeComplex([M([["x1*x2 - x3^2"]])]), {1: [([1], [1])]})
    assert v.verdict
    assert v.levels[0].codim == 1


def test_zero_certificate_minor_rejected():
    with pytest.raises(CertificateRejected):
        buchsbaum_eisenbud_verify(FreeComplex([M([["x1", "0"]])]), {1: [([1], [2])]})
    # wrong size for the expected rank
    with pytest.raises(CertificateRejected):
        buchsbaum_eisenbud_verify(koszul3(), {2: [([1], [1])]})


def test_grade_failure_gives_false_verdict():
    # the image of d2 is x1 times the kernel of d1
    C = FreeComplex([M([["x1", "x2"]]), M([["x1*x2"], ["-x1^2"]])])
    assert compose_check(C)[0]
    v = buchsbaum_eisenbud_verify(C)
    assert v.levels[1].rank_ok and not v.levels[1].grade_ok
    assert not v.verdict


def test_rank_failure_gives_false_verdict():
    C = FreeComplex([M([["x1", "x2", "x3"]]), M([["x2"], ["-x1"], ["0"]])])
    v = buchsbaum_eisenbud_verify(C)
    assert not v.levels[0].rank_ok and not v.verdict


def test_repair_restores_corrupted_column():
    C = koszul3()
    d2 = C.differentials[1]
    d2[2, 2] = parse_polynomial("-x1", R3)
    assert not compose_check(C)[0]
    fixed, repairs = repair_complex(C)
    assert compose_check(fixed)[0]
    assert len(repairs) == 1
    rep = repairs[0]
    assert (rep.level, rep.column) == (2, 3)
    assert fixed.differentials[0] == C.differentials[0]
    v = buchsbaum_eisenbud_verify(C, repair=True)
    assert v.verdict and v.repairs


def test_constant_entries_flag_non_minimal():
    C = FreeComplex([M([["x1", "x1"]]), M([["1"], ["-1"]])])
    v = buchsbaum_eisenbud_verify(C)
    assert not v.minimal and v.constant_entries == [(2, 1, 1), (2, 2, 1)]
    # unit minors have infinite grade
    assert v.levels[1].codim == math.inf and v.to_dict()["levels"][1]["codim"] == "inf"


def test_complex_serialization():
    C = koszul3()
    back = FreeComplex.from_dict(C.to_dict())
    assert [d == e for d, e in zip(back.differentials, C.differentials)] == [True] * 3
    assert C.to_dict()["expected_ranks"] == [1, 2, 1]


# -- family complexes


def test_arslan_h2_complex():
    inst = arslan_system(2)
    C = inst.complex.free_complex()
    assert not compose_check(C)[0]
    v = buchsbaum_eisenbud_verify(C, arslan_certificates(2), repair=True)
    assert v.verdict and v.minimal
    assert [lv.rank for lv in v.levels] == [1, 6, 3]
    assert len(v.repairs) == 1
    d3 = v.complex.differentials[2]
    assert d3[0, 2] == parse_polynomial("-x2*x3 + x1*x4", d3.ring)


def test_arslan_h2_certificate_minor_value():
    C = arslan_system(2).complex.free_complex()
    rows, cols = arslan_certificates(2)[2][0]
    m = minor_determinant(C.differentials[1], rows, cols)
    ring = C.ring
    expected = (parse_polynomial("x2^3 - x1^2*x3", ring) * parse_polynomial("-x3^3 + x2*x4^2", ring)
                * parse_polynomial("x3", ring))
    assert m == expected


def test_bresinsky_h2_repairs_leave_d1_alone():
    inst = bresinsky_system(2)
    C = inst.complex.free_complex()
    fixed, repairs = repair_complex(C)
    assert compose_check(fixed)[0]
    assert fixed.differentials[0] == C.differentials[0]
    assert {(r.level, r.column) for r in repairs} == {(2, 2), (2, 18), (2, 20), (3, 1), (3, 2), (3, 10), (3, 11)}
    assert fixed.free_ranks() == C.free_ranks()

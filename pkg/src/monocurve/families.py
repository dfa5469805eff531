"""Closed-form constructions for the Backelin, Bresinsky and Arslan curve families."""

from __future__ import annotations

from dataclasses import dataclass, field

from .groebner import REDUCED, VERIFIED, GroebnerBasis, buchberger_complete, verify
from .matrix import MatrixAssembler, PolynomialMatrix
from .monomial_ideal import HilbertNumerator
from .poly import Polynomial, dehomogenize, homogenize
from .resolution import FreeComplex
from .toric import (
    MonomialCurveSpec,
    affine_order,
    affine_ring,
    projective_order,
    projective_ring,
)

AFF = affine_ring(4)
PROJ = projective_ring(4)


class FamilyParameterError(ValueError):
    pass


def _mono(ring, **powers) -> Polynomial:
    e = [0] * len(ring)
    for v, k in powers.items():
        if k < 0:
            raise FamilyParameterError(f"negative exponent {v}^{k}")
        e[ring.index(v)] += k
    return Polynomial.monomial(tuple(e), ring)


def _binom(ring, lead: dict, tail: dict) -> Polynomial:
    return _mono(ring, **lead) - _mono(ring, **tail)


# ---------------------------------------------------------------------------
# Backelin


@dataclass
class BackelinInstance:
    n: int
    r: int
    generators: dict  # name -> binomial, the minimal generating set
    basis: dict  # name -> binomial, the closed-form Groebner basis

    @property
    def s(self) -> int:
        return self.r * (3 * self.n + 2) + 3

    @property
    def spec(self) -> MonomialCurveSpec:
        return MonomialCurveSpec.for_family("backelin", n=self.n, r=self.r)

    @property
    def exponents(self) -> tuple:
        return self.spec.exponents

    def gb(self) -> GroebnerBasis:
        return GroebnerBasis(tuple(self.basis.values()), affine_order(4))

    def expected_initial_generators(self) -> list:
        """Minimal generators of the initial ideal in closed form."""
        n, r = self.n, self.r
        out = [{"x2": 1, "x3": 3}]
        out += [{"x1": n - i, "x3": 3 * i - 1} for i in range(1, n + 1)]
        out += [{"x1": r - n + 3 + j, "x2": n - 1 - j} for j in range(n)]
        out += [{"x1": r - 2 * n + 3 + j, "x2": 2 * n - j} for j in range(n)]
        out += [{"x1": r - n + 2, "x2": n, "x3": 1}, {"x2": n + 1, "x3": 1}, {"x2": 2 * n + 1}]
        return [_mono(AFF, **d).leading_monomial(affine_order(4)) for d in out]


def backelin_system(n: int, r: int) -> BackelinInstance:
    if n < 2 or r < 3 * n + 2:
        raise FamilyParameterError(f"need n >= 2 and r >= 3n+2, got n={n}, r={r}")
    R = AFF
    gens = {"f1": _binom(R, {"x2": 1, "x3": 3}, {"x1": 1, "x4": 3})}
    for i in range(1, n + 1):
        gens[f"f2_{i}"] = _binom(R, {"x1": n - i, "x3": 3 * i - 1}, {"x2": n - i + 1, "x4": 3 * i - 2})
    for j in range(n):
        gens[f"f3_{j}"] = _binom(R, {"x1": r - n + 3 + j, "x2": n - 1 - j}, {"x3": 2 + 3 * j, "x4": r - 1 - 3 * j})
    for j in range(n):
        gens[f"f4_{j}"] = _binom(R, {"x1": r - 2 * n + 3 + j, "x2": 2 * n - j}, {"x3": 3 * j + 1, "x4": r + 1 - 3 * j})
    gens["f5"] = _binom(R, {"x1": r - n + 2, "x2": n, "x3": 1}, {"x4": r + 2})
    gens["f6"] = _binom(R, {"x2": n + 1, "x3": 1}, {"x1": n, "x4": 2})
    gens["f7"] = _binom(R, {"x2": 2 * n + 1}, {"x1": 2 * n - 1, "x3": 1, "x4": 1})
    g = _binom(R, {"x1": r + 2}, {"x2": 1, "x4": r})
    basis = {k: v for k, v in gens.items() if k != f"f3_{n - 1}"}
    basis["g"] = g
    return BackelinInstance(n, r, gens, basis)


def backelin_replacement_identity(inst: BackelinInstance) -> bool:
    """g = f_{3,n-1} + x4^(r-3n+2) f_{2,n}."""
    n, r = inst.n, inst.r
    rhs = inst.generators[f"f3_{n - 1}"] + _mono(AFF, x4=r - 3 * n + 2) * inst.generators[f"f2_{n}"]
    return rhs == inst.basis["g"]


def backelin_hilbert_formula(n: int, r: int) -> HilbertNumerator:
    """Closed-form numerator of the Hilbert series of the affine coordinate ring."""
    if n < 2 or r < 3 * n + 2:
        raise FamilyParameterError(f"need n >= 2 and r >= 3n+2, got n={n}, r={r}")
    c = {}

    def add(d, v):
        c[d] = c.get(d, 0) + v

    add(0, 1)
    add(r + 2, -n)
    add(r + 3, -2)
    add(r + 4, 3 * n + 4)
    add(r + 5, -(2 * n + 2))
    add(2 * n + 3, -1)
    add(2 * n + 2, 2)
    add(2 * n + 1, -1)
    add(n + 4, 1)
    add(n + 3, 1)
    add(n + 2, -1)
    add(n + 1, -1)
    add(4, -1)
    for i in range(2, n + 1):
        add(n + 2 * i - 1, -1)
        add(n + 2 * i + 1, -1)
        add(n + 2 * i, 2)
    return HilbertNumerator(c)


def backelin_hilbert_formula_as_stated(n: int, r: int) -> HilbertNumerator:
    """Variant differing in two terms (no t^4 term, 2t^(n+2) in place of 2t^(2n+2))."""
    f = backelin_hilbert_formula(n, r)
    # add term by term: n + 2 and 4 coincide when n = 2
    return f + HilbertNumerator({4: 1}) + HilbertNumerator({2 * n + 2: -2}) + HilbertNumerator({n + 2: 2})


# ---------------------------------------------------------------------------
# Bresinsky


@dataclass
class FamilyComplex:
    """Differentials d1..dk of a stated resolution plus assembly diagnostics."""

    matrices: list
    names: list
    diagnostics: dict = field(default_factory=dict)

    def shapes(self) -> list:
        return [M.shape for M in self.matrices]

    def free_complex(self) -> FreeComplex:
        return FreeComplex([M.copy() for M in self.matrices], list(self.names))


@dataclass
class BresinskyInstance:
    h: int
    basis: dict  # affine Groebner basis, name -> polynomial
    projective: dict  # homogenized minimal generators, name -> polynomial
    complex: FamilyComplex

    @property
    def spec(self) -> MonomialCurveSpec:
        return MonomialCurveSpec.for_family("bresinsky", h=self.h)

    @property
    def exponents(self) -> tuple:
        return self.spec.exponents

    def gb(self) -> GroebnerBasis:
        return GroebnerBasis(tuple(self.basis.values()), affine_order(4))

    def affine_generators(self) -> list:
        return [dehomogenize(p, "x0", AFF) for p in self.projective.values()]


def _bresinsky_affine(h: int) -> dict:
    R = AFF
    G = {
        "p1": _binom(R, {"x2": 1, "x3": 1}, {"x1": 1, "x4": 1}),
        "p2": _binom(R, {"x2": 2 * h}, {"x3": 2 * h - 1}),
    }
    for j in range(2 * h):
        G[f"p3_{j}"] = _binom(R, {"x1": j + 1, "x3": 2 * h - j}, {"x2": j, "x4": 2 * h - j})
    for i in range(1, 2 * h + 1):
        G[f"p4_{i}"] = _binom(R, {"x1": i + 1, "x2": 2 * h - i}, {"x3": i - 1, "x4": 2 * h - i})
    G["p5"] = _binom(R, {"x3": 4 * h}, {"x2": 2 * h - 1, "x4": 2 * h + 1})
    for i in range(2 * h - 2):
        G[f"p6_{i}"] = _binom(R, {"x1": 2 + i, "x2": 2 * h - 2 - i, "x4": 2 + i}, {"x3": 2 * h + 1 + i})
    G["p7"] = _binom(R, {"x1": 1, "x2": 2 * h - 1, "x4": 1}, {"x3": 2 * h})
    G["p8"] = _binom(R, {"x1": 2 * h, "x4": 2 * h}, {"x3": 4 * h - 1})
    return G


def bresinsky_generator_names(h: int) -> list:
    return (["p1", "p2"] + [f"p3_{j}" for j in range(2 * h)]
            + [f"p4_{i}" for i in range(1, 2 * h + 1)] + ["p5"])


def _bresinsky_matrices(h: int, gens: list) -> FamilyComplex:
    R = PROJ
    x0, x1, x2, x3, x4 = (Polynomial.var(v, R) for v in R)

    def m(**k):
        return _mono(R, **k)

    N1, N2 = 4 * h + 3, 8 * h + 4
    B1 = MatrixAssembler("B1", 1, N1, R)
    for c, g in enumerate(gens, 1):
        B1.put(1, c, g, f"gen{c}")

    O = MatrixAssembler("B2", N1, N2, R)
    O.put(2, 1, x0 * x4, "col1")
    O.put(2 * h + 2, 1, x2, "col1")
    O.put(4 * h + 1, 1, -x3, "col1")
    O.put(2, 2, x1 ** 2, "col2")
    O.put(4, 2, x2, "col2")
    O.put(2 * h + 3, 2, -x2, "col2")
    for l in range(2 * h - 1):
        rule = f"col3+l[l={l}]"
        O.put(1, 3 + l, m(x0=1, x2=l, x4=2 * h - 1 - l), rule)
        O.put(3 + l, 3 + l, -x1, rule)
        O.put(4 + l, 3 + l, x3, rule)
    for l in range(1, 2 * h):
        rule = f"col2h+1+l[l={l}]"
        O.put(1, 2 * h + 1 + l, m(x0=2, x3=l - 1, x4=2 * h - 1 - l), rule)
        O.put(2 * h + 2 + l, 2 * h + 1 + l, -x1, rule)
        O.put(2 * h + 3 + l, 2 * h + 1 + l, x2, rule)
    for l in range(2 * h - 1):
        rule = f"col4h+1+l[l={l}]"
        O.put(1, 4 * h + 1 + l, m(x1=l + 1, x3=2 * h - 1 - l), rule)
        O.put(3 + l, 4 * h + 1 + l, -x2, rule)
        O.put(4 + l, 4 * h + 1 + l, x4, rule)
    for l in range(1, 2 * h):
        rule = f"col6h-1+l[l={l}]"
        O.put(1, 6 * h - 1 + l, m(x1=l + 1, x2=2 * h - 1 - l), rule)
        O.put(2 * h + 2 + l, 6 * h - 1 + l, -x3, rule)
        O.put(2 * h + 3 + l, 6 * h - 1 + l, x4, rule)
    c = 8 * h - 1
    O.put(1, c, x2 ** (2 * h) - x0 * x3 ** (2 * h - 1), "col8h-1")
    O.put(2, c, -x2 * x3 + x1 * x4, "col8h-1")
    c = 8 * h
    O.put(1, c, m(x1=1, x2=2 * h - 1), "col8h")
    O.put(2, c, -x1 * x3, "col8h")
    O.put(3, c, -x0, "col8h")
    O.put(2 * h + 3, c, x4, "col8h")
    c = 8 * h + 1
    O.put(1, c, m(x0=1, x2=2 * h - 1), "col8h+1")
    O.put(2, c, -x0 * x3, "col8h+1")
    O.put(2 * h + 2, c, -x1, "col8h+1")
    O.put(4 * h + 2, c, x3, "col8h+1")
    c = 8 * h + 2
    O.put(1, c, m(x2=2 * h - 1, x4=2 * h), "col8h+2")
    O.put(2, c, -x3 * x4, "col8h+2")
    O.put(3, c, m(x3=2 * h), "col8h+2")
    O.put(4 * h + 3, c, -x1, "col8h+2")
    c = 8 * h + 3
    O.put(1, c, m(x3=4 * h - 1), "col8h+3")
    O.put(2, c, -m(x4=2 * h + 1), "col8h+3")
    O.put(3, c, m(x3=2 * h - 1, x4=1), "col8h+3")
    O.put(4 * h + 3, c, -x2, "col8h+3")
    c = 8 * h + 4
    O.put(1, c, m(x2=2 * h - 1, x3=2 * h), "col8h+4")
    O.put(2, c, -m(x3=2 * h + 1), "col8h+4")
    O.put(3, c, m(x2=2 * h - 1, x4=1), "col8h+4")
    O.put(4 * h + 3, 8 * h + 3, -x0, "col8h+4")  # column index as printed

    D = MatrixAssembler("B3", N2, N1, R)
    for l in range(2 * h - 2):
        rule = f"col l+1[l={l}]"
        D.put(4 * h + l, l + 1, x1, rule)
        D.put(3 + l, l + 1, -x2, rule)
        D.put(4 * h + l + 1, l + 1, -x3, rule)
        D.put(4 + l, l + 1, x4, rule)
    c = 2 * h - 1
    D.put(6 * h - 1, c, x1, "col2h-1")
    D.put(2 * h + 1, c, -x2, "col2h-1")
    D.put(8 * h - 2, c, -x3, "col2h-1")
    D.put(1, c, x3, "col2h-1")
    D.put(8 * h + 1, c, x4, "col2h-1")
    for l in range(1, 2 * h - 1):
        rule = f"col2h-1+l[l={l}]"
        D.put(6 * h - 1 + l, 2 * h - 1 + l, x1, rule)
        D.put(6 * h + l, 2 * h - 1 + l, -x2, rule)
        D.put(2 * h + 1 + l, 2 * h - 1 + l, -x3, rule)
        D.put(2 * h + 2 + l, 2 * h - 1 + l, x4, rule)
    c = 4 * h - 2
    D.put(3, c, x0, "col4h-2")
    D.put(8 * h, c, -x1, "col4h-2")
    D.put(6 * h, c, x2, "col4h-2")
    D.put(2, c, -x3, "col4h-2")
    D.put(2 * h + 2, c, -x4, "col4h-2")
    c = 4 * h - 1
    D.put(4 * h + 1, c, x0, "col4h-1")
    D.put(8 * h - 1, c, x1, "col4h-1")
    D.put(8 * h, c, -x2, "col4h-1")
    D.put(2, c, -x4, "col4h-1")
    c = 4 * h
    D.put(8 * h - 1, c, x0, "col4h")
    D.put(1, c, -x1, "col4h")
    D.put(8 * h + 1, c, -x2, "col4h")
    D.put(4 * h, c, x3, "col4h")
    c = 4 * h + 1
    D.put(4 * h + 1, c, m(x3=2 * h), "col4h+1")
    D.put(3, c, -m(x3=2 * h - 1, x4=1), "col4h+1")
    D.put(8 * h - 1, c, -m(x4=2 * h), "col4h+1")
    D.put(8 * h + 3, c, -x1, "col4h+1")
    D.put(8 * h + 2, c, x2, "col4h+1")
    c = 4 * h + 2
    D.put(4 * h + 2, 8 * h - 1, m(x3=2 * h), "col4h+2")  # indices as printed
    for i in range(2 * h - 1):
        D.put(4 * h + 1 + i, c, -m(x2=2 * h - 1 - i, x4=i + 1), f"col4h+2[i={i}]")
    D.put(8 * h, c, m(x3=2 * h - 1, x4=1), "col4h+2")
    for j in range(1, 2 * h - 1):
        D.put(6 * h - 1 + j, c, m(x3=2 * h - 1 - j, x4=j + 1), f"col4h+2[j={j}]")
    D.put(1, c, m(x4=2 * h), "col4h+2")
    D.put(8 * h + 3, c, x0, "col4h+2")
    D.put(8 * h + 4, c, -x2, "col4h+2")
    c = 4 * h + 3
    D.put(8 * h, c, m(x3=2 * h), "col4h+3")
    D.put(3, c, -m(x2=2 * h - 1, x4=1), "col4h+3")
    for i in range(2 * h - 1):
        D.put(4 * h + 1 + i, c, -m(x2=2 * h - 1 - i, x3=1, x4=i), f"col4h+3[i={i}]")
    for i in range(1, 2 * h - 1):
        D.put(6 * h - 1 + i, c, m(x3=2 * h - i, x4=i), f"col4h+3[i'={i}]")
    D.put(1, c, m(x3=1, x4=2 * h - 1), "col4h+3")
    D.put(8 * h + 2, c, x0, "col4h+3")
    D.put(8 * h + 4, c, -x1, "col4h+3")

    G = MatrixAssembler("B4", N1, 1, R)
    G.put(4 * h - 1, 1, m(x3=2 * h), "row4h-1")
    for k in range(1, 2 * h):
        G.put(k, 1, -m(x2=2 * h - k, x4=k), f"row m[m={k}]")
    G.put(4 * h - 2, 1, -m(x3=2 * h - 1, x4=1), "row4h-2")
    for k in range(1, 2 * h - 1):
        G.put(2 * h - 1 + k, 1, m(x3=2 * h - 1 - k, x4=k + 1), f"row2h-1+n[n={k}]")
    G.put(4 * h, 1, -m(x4=2 * h), "row4h")
    G.put(4 * h + 1, 1, -x0, "row4h+1")
    G.put(4 * h + 2, 1, -x1, "row4h+2")
    G.put(4 * h + 3, 1, x2, "row4h+3")

    parts = [B1, O, D, G]
    return FamilyComplex(
        [a.matrix for a in parts], [a.name for a in parts], {a.name: a.diagnostics for a in parts}
    )


def bresinsky_system(h: int) -> BresinskyInstance:
    if h < 2:
        raise FamilyParameterError(f"need h >= 2, got {h}")
    G = _bresinsky_affine(h)
    proj = {}
    for name in bresinsky_generator_names(h):
        proj[name] = homogenize(G[name], "x0", PROJ)
    cx = _bresinsky_matrices(h, list(proj.values()))
    return BresinskyInstance(h, G, proj, cx)


def bresinsky_certificates(h: int) -> dict:
    """Minor index lists (1-based) certifying the grade bounds, per level."""
    # the printed row list for the first level-3 minor has one row too many;
    # dropping row 4h gives the minor with leading term x1^(4h+2)
    L31_rows = [1] + list(range(4 * h + 1, 8 * h - 2)) + [8 * h - 1, 8 * h, 8 * h + 3, 8 * h + 4]
    return {
        1: [([1], [1])],
        2: [
            ([1] + list(range(3, 4 * h + 4)), list(range(4 * h + 1, 8 * h - 1)) + [8 * h, 8 * h + 2, 8 * h + 3, 8 * h + 4]),
            (list(range(2, 4 * h + 4)), [1] + list(range(3, 4 * h + 1)) + [8 * h + 1, 8 * h + 2, 8 * h + 4]),
        ],
        3: [
            (L31_rows, list(range(1, 4 * h + 2)) + [4 * h + 3]),
            (list(range(1, 4 * h + 1)) + [8 * h + 1, 8 * h + 2], list(range(1, 4 * h + 3))),
            (list(range(3, 2 * h + 2)) + [4 * h + 1] + list(range(6 * h, 8 * h + 1)) + [8 * h + 3], list(range(1, 4 * h + 3))),
        ],
        4: [([4 * h], [1]), ([4 * h + 1], [1]), ([4 * h + 2], [1]), ([4 * h + 3], [1])],
    }


# ---------------------------------------------------------------------------
# Arslan


@dataclass
class ArslanInstance:
    h: int
    projective: dict  # Groebner basis of the projective closure, name -> polynomial
    complex: FamilyComplex

    @property
    def spec(self) -> MonomialCurveSpec:
        return MonomialCurveSpec.for_family("arslan", h=self.h, mode="projective")

    @property
    def exponents(self) -> tuple:
        return self.spec.exponents

    def gb(self) -> GroebnerBasis:
        return GroebnerBasis(tuple(self.projective.values()), projective_order(4))

    def affine_generators(self) -> list:
        return [dehomogenize(p, "x0", AFF) for p in self.projective.values()]


def _arslan_polys(h: int) -> dict:
    R = PROJ
    U = {"w": _binom(R, {"x2": 1, "x3": 1}, {"x1": 1, "x4": 1})}
    for i in range(h):
        U[f"g{i}"] = _binom(R, {"x1": i, "x3": h - i + 1}, {"x2": i + 1, "x4": h - i})
    U[f"g{h}"] = _binom(R, {"x2": h + 1}, {"x1": h, "x3": 1})
    for j in range(h + 1):
        U[f"q{j}"] = _binom(R, {"x1": j + 1, "x2": h - j}, {"x3": j, "x4": h - j, "x0": 1})
    return U


def _arslan_matrices(h: int, gens: list) -> FamilyComplex:
    R = PROJ
    x0, x1, x2, x3, x4 = (Polynomial.var(v, R) for v in R)

    def m(**k):
        return _mono(R, **k)

    N1, N2, N3 = 2 * h + 3, 4 * h + 1, 2 * h - 1
    A1 = MatrixAssembler("A1", 1, N1, R)
    for c, g in enumerate(gens, 1):
        A1.put(1, c, g, f"gen{c}")

    P = MatrixAssembler("A2", N1, N2, R)
    P.put(h + 2, 1, x1, "col1")
    P.put(h + 3, 1, -x2, "col1")
    P.put(2 * h + 3, 1, x3, "col1")
    P.put(2, 1, x0, "col1")
    for i in range(h):
        rule = f"col2+i[i={i}]"
        P.put(1, 2 + i, m(x3=i, x4=h - i - 1, x0=1), rule)
        P.put(h + 3 + i, 2 + i, -x1, rule)
        P.put(h + 4 + i, 2 + i, x2, rule)
    for i in range(h - 1):
        rule = f"colh+2+i[i={i}]"
        P.put(1, h + 2 + i, m(x2=i + 1, x4=h - i - 1), rule)
        P.put(2 + i, h + 2 + i, -x1, rule)
        P.put(3 + i, h + 2 + i, x3, rule)
    P.put(1, 2 * h + 1, m(x2=h), "col2h+1")
    P.put(h + 1, 2 * h + 1, -x1, "col2h+1")
    P.put(h + 2, 2 * h + 1, -x3, "col2h+1")
    for i in range(h - 1):
        rule = f"col2h+2+i[i={i}]"
        P.put(1, 2 * h + 2 + i, m(x1=i, x3=h - i), rule)
        P.put(2 + i, 2 * h + 2 + i, -x2, rule)
        P.put(3 + i, 2 * h + 2 + i, x4, rule)
    P.put(1, 3 * h + 1, m(x1=h - 1, x3=1), "col3h+1")
    P.put(h + 1, 3 * h + 1, -x2, "col3h+1")
    P.put(h + 2, 3 * h + 1, -x4, "col3h+1")
    for i in range(h):
        rule = f"col3h+2+i[i={i}]"
        P.put(1, 3 * h + 2 + i, m(x1=i + 1, x2=h - i - 1), rule)
        P.put(h + 3 + i, 3 * h + 2 + i, -x3, rule)
        P.put(h + 4 + i, 3 * h + 2 + i, x4, rule)

    S = MatrixAssembler("A3", N2, N3, R)
    for i in range(h - 1):
        rule = f"col1+i[i={i}]"
        S.put(2 * h + 2 + i, 1 + i, x1, rule)
        S.put(h + 2 + i, 1 + i, -x2, rule)
        S.put(2 * h + 3 + i, 1 + i, -x3, rule)
        S.put(h + 3 + i, 1 + i, x4, rule)
    for i in range(h - 1):
        rule = f"colh+i[i={i}]"
        S.put(3 * h + 2 + i, h + i, x1, rule)
        S.put(3 * h + 3 + i, h + i, -x2, rule)
        S.put(2 + i, h + i, -x3, rule)
        S.put(3 + i, h + i, x4, rule)
    c = 2 * h - 1
    S.put(3 * h + 1, c, x1 ** 2, "col2h-1")
    S.put(2 * h + 1, c, -x1 * x2, "col2h-1")
    S.put(3 * h + 2, c, x2 ** 2, "col2h-1")
    S.put(4 * h + 1, c, -x1 * x3, "col2h-1")
    S.put(1, c, -x2 * x3, "col2h-1")
    S.put(h + 1, c, x3 ** 2, "col2h-1")
    S.put(1, c, x1 * x4, "col2h-1'")
    S.put(2, c, -x2 * x4, "col2h-1")
    S.put(2 * h + 2, c, -x3 * x0, "col2h-1")
    S.put(h + 2, c, x0 * x4, "col2h-1")

    parts = [A1, P, S]
    return FamilyComplex(
        [a.matrix for a in parts], [a.name for a in parts], {a.name: a.diagnostics for a in parts}
    )


def arslan_system(h: int) -> ArslanInstance:
    if h < 2:
        raise FamilyParameterError(f"need h >= 2, got {h}")
    U = _arslan_polys(h)
    return ArslanInstance(h, U, _arslan_matrices(h, list(U.values())))


def arslan_certificates(h: int) -> dict:
    return {
        1: [([1], [1])],
        2: [
            ([1] + list(range(3, 2 * h + 4)), list(range(1, 2 * h + 3))),
            (list(range(2, 2 * h + 4)), [1, 2] + list(range(2 * h + 2, 4 * h + 2))),
        ],
        3: [
            (list(range(2, h + 1)) + list(range(2 * h + 2, 3 * h + 2)), list(range(1, 2 * h))),
            (list(range(2, 2 * h + 1)), list(range(1, 2 * h))),
            (list(range(h + 2, 2 * h + 2)) + list(range(3 * h + 2, 4 * h + 1)), list(range(1, 2 * h))),
        ],
    }


# ---------------------------------------------------------------------------
# lookups by name


def affine_basis_for(name: str, params: dict) -> GroebnerBasis:
    """Closed-form affine basis of a family, tagged verified once it passes Buchberger's test."""
    order = affine_order(4)
    if name == "backelin":
        elems = list(backelin_system(params["n"], params["r"]).basis.values())
    elif name == "bresinsky":
        elems = list(bresinsky_system(params["h"]).basis.values())
    elif name == "arslan":
        elems = arslan_system(params["h"]).affine_generators()
    else:
        raise FamilyParameterError(f"unknown family {name!r}")
    gb = verify(elems, order)
    if gb.status != VERIFIED:
        return buchberger_complete(elems, order)
    return gb

"""Monomial curves: parametrizations, toric ideals, Gastinger's certificate, the ACM test."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from functools import reduce
from typing import Sequence

from .groebner import (
    REDUCED,
    ContractError,
    GroebnerBasis,
    buchberger_complete,
    eliminate,
    initial_ideal,
)
from .monomial_ideal import standard_monomials
from .poly import MonomialOrder, Polynomial, RingMismatchError, homogenize

AFFINE, PROJECTIVE = "affine", "projective"
MAX_ELIMINATION_EXPONENT = 300


class ScaleGuardError(RuntimeError):
    pass


class SpecError(ValueError):
    pass


def affine_ring(r: int) -> tuple:
    return tuple(f"x{i}" for i in range(1, r + 1))


def projective_ring(r: int) -> tuple:
    return ("x0",) + affine_ring(r)


def affine_order(r: int) -> MonomialOrder:
    """Degrevlex with x1 > x2 > ... > xr."""
    return MonomialOrder.degrevlex(affine_ring(r))


def projective_order(r: int) -> MonomialOrder:
    """Degrevlex with x1 > ... > xr > x0."""
    ring = projective_ring(r)
    return MonomialOrder.degrevlex(ring, ring[1:] + ("x0",))


def family_exponents(name: str, params: dict) -> tuple:
    if name == "backelin":
        n, r = params["n"], params["r"]
        s = r * (3 * n + 2) + 3
        return (s, s + 3, s + 3 * n + 1, s + 3 * n + 2)
    if name == "bresinsky":
        h = params["h"]
        return ((2 * h - 1) * 2 * h, (2 * h - 1) * (2 * h + 1), 2 * h * (2 * h + 1), 2 * h * (2 * h + 1) + 2 * h - 1)
    if name == "arslan":
        h = params["h"]
        return (h * (h + 1), h * (h + 1) + 1, (h + 1) ** 2, (h + 1) ** 2 + 1)
    raise SpecError(f"unknown family {name!r}")


@dataclass(frozen=True)
class MonomialCurveSpec:
    exponents: tuple
    mode: str = AFFINE
    family: tuple | None = None  # (name, ((param, value), ...))

    def __post_init__(self):
        ex = tuple(int(a) for a in self.exponents)
        object.__setattr__(self, "exponents", ex)
        if not ex:
            raise SpecError("empty exponent list")
        if min(ex) <= 0:
            raise SpecError(f"exponents must be positive: {ex}")
        if len(set(ex)) != len(ex):
            raise SpecError(f"exponents must be distinct: {ex}")
        if reduce(gcd, ex) != 1:
            raise SpecError(f"gcd of {ex} is not 1")
        if self.mode not in (AFFINE, PROJECTIVE):
            raise SpecError(f"unknown mode {self.mode!r}")
        if self.mode == PROJECTIVE and ex[-1] != max(ex):
            raise SpecError("projective mode needs the last exponent to be the largest")
        if self.family is not None:
            name, params = self.family
            params = tuple(sorted(dict(params).items()))
            object.__setattr__(self, "family", (name, params))
            if family_exponents(name, dict(params)) != ex:
                raise SpecError(f"exponents {ex} inconsistent with family {name}{dict(params)}")

    @classmethod
    def for_family(cls, name: str, mode: str = AFFINE, **params) -> "MonomialCurveSpec":
        return cls(family_exponents(name, params), mode, (name, tuple(sorted(params.items()))))

    @property
    def r(self) -> int:
        return len(self.exponents)

    @property
    def ring(self) -> tuple:
        return projective_ring(self.r) if self.mode == PROJECTIVE else affine_ring(self.r)

    @property
    def order(self) -> MonomialOrder:
        return projective_order(self.r) if self.mode == PROJECTIVE else affine_order(self.r)

    @property
    def family_name(self) -> str | None:
        return self.family[0] if self.family else None

    @property
    def family_params(self) -> dict:
        return dict(self.family[1]) if self.family else {}

    def with_mode(self, mode: str) -> "MonomialCurveSpec":
        return MonomialCurveSpec(self.exponents, mode, self.family)

    def to_dict(self) -> dict:
        out = {"exponents": list(self.exponents), "mode": self.mode}
        if self.family:
            out["family"] = {self.family[0]: dict(self.family[1])}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> "MonomialCurveSpec":
        fam = None
        if d.get("family"):
            (name, params), = d["family"].items()
            fam = (name, tuple(sorted(params.items())))
        return cls(tuple(d["exponents"]), d.get("mode", AFFINE), fam)

    @classmethod
    def from_json(cls, text: str) -> "MonomialCurveSpec":
        return cls.from_dict(json.loads(text))


# ---------------------------------------------------------------------------
# parametrization


def parameter_ring(spec: MonomialCurveSpec) -> tuple:
    return ("t", "s") if spec.mode == PROJECTIVE else ("t",)


def eval_parametrization(f: Polynomial, spec: MonomialCurveSpec) -> Polynomial:
    """Image of ``f`` under x_i -> t^n_i (affine) or x_i -> t^n_i s^(n_r - n_i), x0 -> s^n_r."""
    if f.ring != spec.ring:
        raise RingMismatchError(f"{f.ring} is not the ambient ring {spec.ring} of the curve")
    ex = spec.exponents
    top = ex[-1]
    out = {}
    for e, c in f.terms.items():
        if spec.mode == PROJECTIVE:
            t = sum(k * a for k, a in zip(e[1:], ex))
            s = e[0] * top + sum(k * (top - a) for k, a in zip(e[1:], ex))
            key = (t, s)
        else:
            key = (sum(k * a for k, a in zip(e, ex)),)
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return Polynomial(parameter_ring(spec), out)


def vanishes(f: Polynomial, spec: MonomialCurveSpec) -> bool:
    return not eval_parametrization(f, spec)


def binomial_degrees_match(f: Polynomial, spec: MonomialCurveSpec) -> bool:
    """Arithmetic shortcut for a binomial x^u - x^v: equal weighted degrees."""
    if len(f) != 2:
        raise ValueError("not a binomial")
    (u, cu), (v, cv) = f.terms.items()
    if cu + cv != 0:
        return False
    ex = spec.exponents
    if spec.mode == PROJECTIVE:
        return sum(u) == sum(v) and sum(a * k for a, k in zip(ex, u[1:])) == sum(a * k for a, k in zip(ex, v[1:]))
    return sum(a * k for a, k in zip(ex, u)) == sum(a * k for a, k in zip(ex, v))


# ---------------------------------------------------------------------------
# toric ideals


def graph_ideal(spec: MonomialCurveSpec) -> list:
    """Generators x_i - image(x_i) in the ring with the parameters prepended."""
    params = parameter_ring(spec)
    ring = params + spec.ring
    ex = spec.exponents
    gens = []
    np_ = len(params)
    if spec.mode == PROJECTIVE:
        top = ex[-1]
        x0 = [0] * len(ring)
        x0[np_] = 1
        img = [0] * len(ring)
        img[1] = top
        gens.append(Polynomial(ring, {tuple(x0): 1, tuple(img): -1}))
        for i, a in enumerate(ex):
            xe = [0] * len(ring)
            xe[np_ + 1 + i] = 1
            ie = [0] * len(ring)
            ie[0], ie[1] = a, top - a
            gens.append(Polynomial(ring, {tuple(xe): 1, tuple(ie): -1}))
    else:
        for i, a in enumerate(ex):
            xe = [0] * len(ring)
            xe[np_ + i] = 1
            ie = [0] * len(ring)
            ie[0] = a
            gens.append(Polynomial(ring, {tuple(xe): 1, tuple(ie): -1}))
    return gens


def toric_ideal(spec: MonomialCurveSpec, max_exponent: int = MAX_ELIMINATION_EXPONENT) -> GroebnerBasis:
    """Reduced Groebner basis of the curve's defining ideal, by eliminating the parameters."""
    if max(spec.exponents) > max_exponent:
        raise ScaleGuardError(
            f"exponent {max(spec.exponents)} exceeds elimination guard {max_exponent}; "
            "use gastinger_verify with explicit generators instead"
        )
    order = spec.order
    keep = [spec.ring[i] for i in order.blocks[0]]
    kernel = eliminate(graph_ideal(spec), list(parameter_ring(spec)), keep)
    return buchberger_complete(kernel, order)


# ---------------------------------------------------------------------------
# Gastinger's criterion


@dataclass(frozen=True)
class GastingerCertificate:
    generators: tuple
    variable: int
    count: int | None
    target: int
    all_vanish: bool
    verdict: bool
    nonvanishing: tuple = ()
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "variable": f"x{self.variable}",
            "count": self.count,
            "target": self.target,
            "all_vanish": self.all_vanish,
            "verdict": self.verdict,
            "nonvanishing": list(self.nonvanishing),
            "witness": self.witness,
            "generators": [str(g) for g in self.generators],
        }


def gastinger_verify(J: Sequence[Polynomial], spec: MonomialCurveSpec, i: int) -> GastingerCertificate:
    """Certify ``<J>`` equals the curve ideal via dim_k A/(J + x_i) = n_i.

    ``i`` is the 1-based variable index.
    """
    if spec.mode != AFFINE:
        raise SpecError("Gastinger's criterion applies to affine curves")
    J = tuple(g for g in J if g)
    if not J:
        raise SpecError("empty candidate ideal")
    if not 1 <= i <= spec.r:
        raise SpecError(f"variable index {i} out of range 1..{spec.r}")
    bad = tuple(k for k, g in enumerate(J) if not vanishes(g, spec))
    xi = Polynomial.var(f"x{i}", spec.ring)
    gb = buchberger_complete(list(J) + [xi], spec.order)
    sm = standard_monomials(initial_ideal(gb))
    target = spec.exponents[i - 1]
    if not sm.finite:
        return GastingerCertificate(J, i, None, target, not bad, False, bad, sm.witness)
    verdict = not bad and sm.count == target
    return GastingerCertificate(J, i, sm.count, target, not bad, verdict, bad)


# ---------------------------------------------------------------------------
# arithmetic Cohen-Macaulayness


def family_affine_basis(spec: MonomialCurveSpec) -> GroebnerBasis | None:
    """Closed-form affine Groebner basis for family specs, verified before use."""
    if not spec.family:
        return None
    from . import families

    return families.affine_basis_for(spec.family_name, spec.family_params)


def acm_test(spec: MonomialCurveSpec, gb: GroebnerBasis | None = None):
    """Return ``(is_acm, witness)`` for the projective closure of the curve.

    ACM iff x_r divides no minimal generator of the affine initial ideal
    under degrevlex with x_r least; ``witness`` is the first offending
    exponent vector in canonical order.
    """
    aff = spec.with_mode(AFFINE)
    if gb is None:
        gb = family_affine_basis(aff)
    if gb is None:
        gb = toric_ideal(aff)
    if gb.order != aff.order:
        raise ContractError("ACM test needs degrevlex with x_r least")
    ini = initial_ideal(gb)
    offenders = [m for m in ini.gens if m[-1] > 0]
    return (not offenders, offenders[0] if offenders else None)


def projective_closure_basis(affine_gb: GroebnerBasis) -> GroebnerBasis:
    """Homogenize a reduced affine basis by x0; the result is reduced for x0 least."""
    if affine_gb.status != REDUCED:
        raise ContractError("projective closure needs a reduced affine basis")
    ring = affine_gb.ring
    r = len(ring)
    if ring != affine_ring(r) or affine_gb.order != affine_order(r):
        raise ContractError("projective closure needs degrevlex x1 > ... > xr on x1..xr")
    pring = projective_ring(r)
    porder = projective_order(r)
    out = []
    for f in affine_gb.elements:
        fh = homogenize(f, "x0", pring)
        lm = fh.leading_monomial(porder)
        if lm != (0,) + f.leading_monomial(affine_gb.order):
            raise ContractError(f"leading monomial changed under homogenization: {f}")
        out.append(fh)
    return GroebnerBasis(tuple(out), porder, REDUCED)

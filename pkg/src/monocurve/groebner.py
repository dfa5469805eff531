"""S-polynomials, Buchberger completion and verification, elimination, codimension."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .monomial_ideal import MonomialIdeal, UnitIdealError, dimension_monomial, minimal_generators
from .poly import (
    MonomialOrder,
    Polynomial,
    ZeroPolynomialError,
    default_order,
    divides,
    exp_lcm,
    normal_form,
)

UNVERIFIED, VERIFIED, REDUCED = "unverified", "verified", "reduced"
_STATUS_RANK = {UNVERIFIED: 0, VERIFIED: 1, REDUCED: 2}


class ContractError(ValueError):
    pass


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple
    order: MonomialOrder
    status: str = UNVERIFIED

    @property
    def ring(self) -> tuple:
        return self.elements[0].ring if self.elements else ()

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list:
        return [g.leading_monomial(self.order) for g in self.elements]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Polynomial) -> bool:
        if _STATUS_RANK[self.status] < 1:
            raise ContractError("membership needs a verified Groebner basis")
        return not self.reduce(f)

    def is_unit(self) -> bool:
        return any(g.is_constant() and g for g in self.elements)


@dataclass(frozen=True)
class SPolyReport:
    pair: tuple
    spoly: Polynomial | None
    reduced_to_zero: bool
    skip_reason: str | None = None


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """Monic lcm-cofactor combination cancelling the leading terms of ``f`` and ``g``."""
    if not f or not g:
        raise ZeroPolynomialError("S-polynomial of a zero polynomial")
    f._check(g)
    cf, ef = f.leading_term(order)
    cg, eg = g.leading_term(order)
    lcm = exp_lcm(ef, eg)
    mf = tuple(x - y for x, y in zip(lcm, ef))
    mg = tuple(x - y for x, y in zip(lcm, eg))
    return f.mul_term(mf, Fraction(1) / cf if cf not in (1, -1) else cf) - g.mul_term(
        mg, Fraction(1) / cg if cg not in (1, -1) else cg
    )


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder, audit: bool = False):
    """Buchberger's criterion over every pair.

    Pairs with coprime leading monomials are skipped (and reported as such)
    unless ``audit`` is set, in which case they are reduced like the rest.
    Returns ``(ok, reports)``.
    """
    G = [g for g in G if g]
    reports = []
    ok = True
    lms = [g.leading_monomial(order) for g in G]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if not audit and _coprime(lms[i], lms[j]):
                reports.append(SPolyReport((i, j), None, True, "coprime-leads"))
                continue
            s = s_polynomial(G[i], G[j], order)
            r = normal_form(s, G, order)
            reports.append(SPolyReport((i, j), s, not r))
            ok = ok and not r
    return ok, reports


def verify(G: Sequence[Polynomial], order: MonomialOrder, audit: bool = False) -> GroebnerBasis:
    """Tag ``G`` verified if it passes Buchberger's criterion, else unverified."""
    ok, _ = is_groebner_basis(G, order, audit)
    return GroebnerBasis(tuple(g for g in G if g), order, VERIFIED if ok else UNVERIFIED)


_GB_CACHE: dict = {}


def buchberger_complete(
    gens: Iterable[Polynomial], order: MonomialOrder, audit: bool = False, use_cache: bool = True
) -> GroebnerBasis:
    """Reduced Groebner basis of ``<gens>``.

    Normal selection strategy (smallest lcm first, ties by pair index) with
    the coprime and chain criteria; ``audit`` turns both criteria off.
    The result is monic, inter-reduced and sorted by descending leading
    monomial, so it depends only on the ideal and the order.
    """
    gens = [g for g in gens if g]
    cache_key = (frozenset(gens), order, audit)
    hit = _GB_CACHE.get(cache_key) if use_cache else None
    if hit is not None:
        return hit
    if not gens:
        return GroebnerBasis((), order, REDUCED)
    G = _buchberger_plain(gens, order) if audit else _buchberger_gm(gens, order)
    result = GroebnerBasis(tuple(_interreduce(G, order)), order, REDUCED)
    if use_cache:
        _GB_CACHE[cache_key] = result
    return result


def _buchberger_plain(gens, order) -> list:
    key = order._key
    G, lms, heap = [], [], []

    def add(p):
        p = p.monic(order)
        k = len(G)
        G.append(p)
        lms.append(p.leading_monomial(order))
        for i in range(k):
            heapq.heappush(heap, (key(exp_lcm(lms[i], lms[k])), i, k))

    for g in gens:
        add(g)
    while heap:
        _, i, j = heapq.heappop(heap)
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            add(r)
    return G


def _buchberger_gm(gens, order) -> list:
    """Buchberger with the Gebauer-Moeller pair update."""
    key = order._key
    polys, lms = [], []
    active = []  # indices of the current basis, in insertion order
    heap = []
    live = set()

    def update(h):
        lh = lms[h]
        cands = [(g, exp_lcm(lh, lms[g])) for g in active]
        kept = []
        for pos, (g1, l1) in enumerate(cands):
            if _coprime(lh, lms[g1]):
                kept.append((g1, l1))
                continue
            dominated = any(divides(l2, l1) for _, l2 in cands[pos + 1:]) or any(
                divides(l2, l1) for _, l2 in kept
            )
            if not dominated:
                kept.append((g1, l1))
        stale = [p for p in live if divides(lh, p[2])
                 and exp_lcm(lms[p[0]], lh) != p[2] and exp_lcm(lh, lms[p[1]]) != p[2]]
        live.difference_update(stale)
        for g1, l1 in kept:
            if _coprime(lh, lms[g1]):
                continue
            live.add((g1, h, l1))
            heapq.heappush(heap, (key(l1), g1, h, l1))
        active[:] = [g for g in active if not divides(lh, lms[g])] + [h]

    def push(p):
        p = p.monic(order)
        polys.append(p)
        lms.append(p.leading_monomial(order))
        update(len(polys) - 1)

    for g in gens:
        push(g)
    while heap:
        _, i, j, lij = heapq.heappop(heap)
        if (i, j, lij) not in live:
            continue
        live.discard((i, j, lij))
        r = normal_form(s_polynomial(polys[i], polys[j], order), [polys[k] for k in active], order)
        if r:
            push(r)
    return [polys[k] for k in active]


def _interreduce(G: Sequence[Polynomial], order: MonomialOrder) -> list:
    lms = [g.leading_monomial(order) for g in G]
    keep = []
    for i, m in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if j == i or not divides(other, m):
                continue
            if other != m or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(G[i])
    out = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        c, e = g.leading_term(order)
        tail = g - Polynomial.monomial(e, g.ring, c)
        red = Polynomial.monomial(e, g.ring, c) + normal_form(tail, others, order)
        out.append(red.monic(order))
    out.sort(key=lambda p: order._key(p.leading_monomial(order)), reverse=True)
    return out


def reduce_basis(G: GroebnerBasis) -> GroebnerBasis:
    if _STATUS_RANK[G.status] < 1:
        raise ContractError("cannot reduce an unverified basis")
    return GroebnerBasis(tuple(_interreduce(list(G.elements), G.order)), G.order, REDUCED)


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    """Minimal generators of the initial ideal of a verified basis."""
    if _STATUS_RANK[G.status] < 1:
        raise ContractError("initial ideal requested from an unverified basis")
    return minimal_generators(G.leading_monomials(), G.ring)


def eliminate(gens: Sequence[Polynomial], drop_vars: Sequence[str], keep_order: Sequence[str] | None = None) -> list:
    """Generators of ``<gens>`` intersected with the subring free of ``drop_vars``.

    Uses a block order with ``drop_vars`` first; the result lives in the
    smaller ring.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    drop = set(drop_vars)
    rest = [v for v in ring if v not in drop]
    if keep_order is None:
        keep_order = [v for v in rest if v != "x0"] + (["x0"] if "x0" in rest else [])
    order = MonomialOrder.block(ring, list(drop_vars), list(keep_order))
    gb = buchberger_complete(gens, order)
    drop_idx = {ring.index(v) for v in drop}
    sub = tuple(rest)
    return [g.change_ring(sub) for g in gb.elements if not (g.variables_used() & drop_idx)]


def codimension(gens: Sequence[Polynomial], order: MonomialOrder | None = None) -> int:
    """Number of variables minus the Krull dimension of the quotient."""
    gens = [g for g in gens if g]
    if not gens:
        return 0
    ring = gens[0].ring
    order = order or default_order(ring)
    gb = buchberger_complete(gens, order)
    if gb.is_unit():
        raise UnitIdealError("codimension of the unit ideal")
    return len(ring) - dimension_monomial(initial_ideal(gb))


def same_ideal(A: Sequence[Polynomial], B: Sequence[Polynomial], order: MonomialOrder) -> bool:
    return buchberger_complete(A, order).elements == buchberger_complete(B, order).elements

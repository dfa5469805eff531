"""Schreyer resolutions of homogeneous ideals and Betti numbers by minimization."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .groebner import buchberger_complete
from .matrix import PolynomialMatrix
from .poly import MonomialOrder, Polynomial, divides, exp_lcm, norm_coeff
from .toric import ScaleGuardError

MAX_VARIABLES = 5
MAX_GENERATORS = 40


class NotHomogeneousError(ValueError):
    pass


@dataclass
class SchreyerLevel:
    """Generators of F_k as vectors in F_{k-1}, with their Schreyer data."""

    vectors: list  # dict (component, exponent) -> coefficient
    leads: list  # (component, exponent) leading terms
    degrees: list  # degree of each basis element of F_k


@dataclass
class SchreyerResolution:
    ring: tuple
    levels: list  # SchreyerLevel for F_1, F_2, ...

    def ranks(self) -> list:
        return [1] + [len(lv.vectors) for lv in self.levels]

    def matrices(self) -> list:
        """Differentials as polynomial matrices (d_k : F_k -> F_{k-1})."""
        out = []
        prev = 1
        for lv in self.levels:
            M = PolynomialMatrix(prev, len(lv.vectors), self.ring)
            for j, v in enumerate(lv.vectors):
                col = {}
                for (c, e), a in v.items():
                    col.setdefault(c, {})[e] = a
                for c, terms in col.items():
                    M[c, j] = Polynomial(self.ring, terms)
            out.append(M)
            prev = len(lv.vectors)
        return out

    def scalar_blocks(self, k: int) -> list:
        """Constant entries of d_k as (row, col, value) triples."""
        lv = self.levels[k - 1]
        zero = (0,) * len(self.ring)
        return [(c, j, a) for j, v in enumerate(lv.vectors) for (c, e), a in v.items() if e == zero]


def _lex_desc(e):
    return tuple(-x for x in e)


def _reduce_with_quotients(f: dict, basis: list, leads: list, key, by_comp: dict):
    """Top-reduce module vector ``f`` to zero; return the quotient vector or raise."""
    f = dict(f)
    quot = {}
    while f:
        lt = max(f, key=key)
        c, e = lt
        coeff = f[lt]
        for idx in by_comp.get(c, ()):
            lc_, le = leads[idx]
            if divides(le, e):
                break
        else:
            raise ArithmeticError("S-vector did not reduce to zero; input is not a Groebner basis")
        m = tuple(x - y for x, y in zip(e, le))
        q = norm_coeff(Fraction(coeff) / basis[idx][lc_, le])
        quot[(idx, m)] = quot.get((idx, m), 0) + q
        for (cc, ee), a in basis[idx].items():
            t = (cc, tuple(x + y for x, y in zip(ee, m)))
            v = f.get(t, 0) - q * a
            if v:
                f[t] = norm_coeff(v) if isinstance(v, Fraction) else v
            else:
                f.pop(t, None)
    return quot


def schreyer_resolution(gens: Sequence[Polynomial], order: MonomialOrder, max_length: int | None = None) -> SchreyerResolution:
    """Free resolution of R/<gens> by iterated Schreyer syzygies (not minimal)."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("empty generating set")
    ring = gens[0].ring
    n = len(ring)
    if n > MAX_VARIABLES or len(gens) > MAX_GENERATORS:
        raise ScaleGuardError(f"Schreyer resolution limited to {MAX_VARIABLES} variables and {MAX_GENERATORS} generators")
    for g in gens:
        if not g.is_homogeneous():
            raise NotHomogeneousError(f"{g} is not homogeneous")
    okey = order._key
    max_length = max_length or n + 1
    G = buchberger_complete(gens, order).elements
    # F_0 has one basis element of degree 0
    prev_N = [(0,) * n]
    prev_T = [()]
    prev_deg = [0]
    vectors = [{(0, e): a for e, a in g.terms.items()} for g in G]
    levels = []
    while vectors and len(levels) < max_length:

        def key(t, N=prev_N, T=prev_T):
            c, e = t
            return (okey(tuple(x + y for x, y in zip(e, N[c]))), T[c])

        leads = [max(v, key=key) for v in vectors]
        perm = sorted(range(len(vectors)), key=lambda i: (leads[i][0], _lex_desc(leads[i][1])))
        vectors = [vectors[i] for i in perm]
        leads = [leads[i] for i in perm]
        degs = [sum(e) + prev_deg[c] for c, e in leads]
        levels.append(SchreyerLevel(vectors, leads, degs))
        N = [tuple(x + y for x, y in zip(e, prev_N[c])) for c, e in leads]
        T = [prev_T[c] + (-i,) for i, (c, _) in enumerate(leads)]
        by_comp = {}
        for i, (c, _) in enumerate(leads):
            by_comp.setdefault(c, []).append(i)
        syz = []
        for a in range(len(vectors)):
            ca, ua = leads[a]
            cands = {}
            for b in by_comp[ca]:
                if b <= a:
                    continue
                ub = leads[b][1]
                l = exp_lcm(ua, ub)
                cands.setdefault(tuple(x - y for x, y in zip(l, ua)), b)
            ms = sorted(cands, key=lambda m: (sum(m), m))
            kept = []
            for m in ms:
                if not any(divides(k, m) for k in kept):
                    kept.append(m)
            for mab in kept:
                b = cands[mab]
                ub = leads[b][1]
                l = exp_lcm(ua, ub)
                mba = tuple(x - y for x, y in zip(l, ub))
                la, lb = vectors[a][leads[a]], vectors[b][leads[b]]
                s = {}
                for (c, e), v in vectors[a].items():
                    t = (c, tuple(x + y for x, y in zip(e, mab)))
                    s[t] = s.get(t, 0) + Fraction(v) / la
                for (c, e), v in vectors[b].items():
                    t = (c, tuple(x + y for x, y in zip(e, mba)))
                    s[t] = s.get(t, 0) - Fraction(v) / lb
                s = {t: norm_coeff(v) for t, v in s.items() if v}
                quot = _reduce_with_quotients(s, vectors, leads, key, by_comp)
                vec = {(a, mab): norm_coeff(Fraction(1) / la), (b, mba): norm_coeff(Fraction(-1) / lb)}
                for t, q in quot.items():
                    v = vec.get(t, 0) - q
                    if v:
                        vec[t] = norm_coeff(v) if isinstance(v, Fraction) else v
                    else:
                        vec.pop(t, None)
                syz.append(vec)
        prev_N, prev_T, prev_deg = N, T, degs
        vectors = syz
    return SchreyerResolution(ring, levels)


# ---------------------------------------------------------------------------
# minimization


def _scalar_rank(entries: list, pivot_order: str = "row-major") -> int:
    """Rank of a sparse rational matrix by greedy unit-pivot elimination."""
    rows = {}
    for r, c, v in entries:
        rows.setdefault(r, {})[c] = Fraction(v)
    rank = 0
    while True:
        cells = [(r, c) for r, row in rows.items() for c, v in row.items() if v]
        if not cells:
            return rank
        r, c = min(cells) if pivot_order == "row-major" else min(cells, key=lambda rc: (rc[1], rc[0]))
        prow = rows.pop(r)
        pv = prow[c]
        for rr, row in rows.items():
            f = row.get(c)
            if not f:
                continue
            for cc, v in prow.items():
                nv = row.get(cc, 0) - f * v / pv
                if nv:
                    row[cc] = nv
                else:
                    row.pop(cc, None)
        rank += 1


@dataclass
class BettiTable:
    totals: list
    graded: dict  # (homological degree, internal degree) -> count

    def as_list(self) -> list:
        return list(self.totals)


def minimize(res: SchreyerResolution, pivot_order: str = "row-major") -> BettiTable:
    """Betti numbers from the ranks of the constant parts of the differentials.

    Splitting off a unit entry removes one generator from two consecutive
    free modules; the number of such splittings at d_k equals the rank of
    its constant part, computed per internal degree.
    """
    k_max = len(res.levels)
    degs = [[0]] + [lv.degrees for lv in res.levels]
    rho = {}
    for k in range(1, k_max + 1):
        by_deg = {}
        for r, c, v in res.scalar_blocks(k):
            by_deg.setdefault(degs[k][c], []).append((r, c, v))
        for d, ent in by_deg.items():
            rho[k, d] = _scalar_rank(ent, pivot_order)
    graded = {}
    for k in range(k_max + 1):
        for d in set(degs[k]):
            count = degs[k].count(d) - rho.get((k, d), 0) - rho.get((k + 1, d), 0)
            if count:
                graded[k, d] = count
    totals = [sum(v for (k, _), v in graded.items() if k == i) for i in range(k_max + 1)]
    while len(totals) > 1 and totals[-1] == 0:
        totals.pop()
    return BettiTable(totals, graded)


def betti_via_schreyer(gens: Sequence[Polynomial], order: MonomialOrder, pivot_order: str = "row-major") -> list:
    """Total Betti numbers (beta_0, beta_1, ...) of R/<gens> for homogeneous ``gens``."""
    return minimize(schreyer_resolution(gens, order), pivot_order).as_list()

"""Monomial ideals: minimal generators, colons, staircases, Hilbert numerators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .poly import Exp, divides, monomial_str


class UnitIdealError(ValueError):
    pass


def canonical_key(e: Exp):
    """Ascending lexicographic order on the reversed variable list."""
    return tuple(reversed(e))


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple
    ring: tuple

    @property
    def nvars(self) -> int:
        return len(self.ring)

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def contains(self, m: Exp) -> bool:
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m) -> bool:
        return self.contains(tuple(m))

    def __str__(self):
        if not self.gens:
            return "(0)"
        return "(" + ", ".join(monomial_str(g, self.ring) for g in self.gens) + ")"

    def as_strings(self) -> list:
        return [monomial_str(g, self.ring) for g in self.gens]

    def add(self, monomials: Iterable[Exp]) -> "MonomialIdeal":
        return minimal_generators(list(self.gens) + [tuple(m) for m in monomials], self.ring)


def minimal_generators(monomials: Iterable[Exp], ring: Sequence[str]) -> MonomialIdeal:
    """Divisibility-minimal, deduplicated, canonically sorted generating set."""
    ring = tuple(ring)
    uniq = {tuple(m) for m in monomials}
    for m in uniq:
        if len(m) != len(ring):
            raise ValueError(f"monomial {m} does not match ring {ring}")
    kept = []
    for m in sorted(uniq, key=lambda e: (sum(e), canonical_key(e))):
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return MonomialIdeal(tuple(sorted(kept, key=canonical_key)), ring)


def colon_by_monomial(I: MonomialIdeal, m: Exp) -> MonomialIdeal:
    """``I : m``, generated by ``g / gcd(g, m)``."""
    return minimal_generators(
        (tuple(max(a - b, 0) for a, b in zip(g, m)) for g in I.gens), I.ring
    )


# ---------------------------------------------------------------------------
# standard monomials


@dataclass(frozen=True)
class StandardMonomials:
    finite: bool
    count: int | None = None
    monomials: tuple | None = None
    witness: str | None = None


def _pure_power_bounds(I: MonomialIdeal):
    bounds = [None] * I.nvars
    for g in I.gens:
        support = [i for i, k in enumerate(g) if k]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or g[i] < bounds[i]:
                bounds[i] = g[i]
    return bounds


def standard_monomials(I: MonomialIdeal, enumerate_all: bool = False) -> StandardMonomials:
    """Count (and optionally list) the monomials outside ``I``.

    Finite exactly when every variable has a pure power in ``I``; otherwise
    the first variable lacking one is returned as the witness.
    """
    if I.is_unit():
        return StandardMonomials(True, 0, () if enumerate_all else None)
    bounds = _pure_power_bounds(I)
    for i, b in enumerate(bounds):
        if b is None:
            return StandardMonomials(False, witness=I.ring[i])

    memo = {}

    def count(gens: frozenset, depth: int) -> int:
        # gens are exponent tails over variables depth..n-1
        if any(not any(g) for g in gens):
            return 0
        if depth == I.nvars:
            return 1
        key = (gens, depth)
        if key in memo:
            return memo[key]
        total = 0
        for k in range(bounds[depth]):
            sliced = frozenset(g[1:] for g in gens if g[0] <= k)
            total += count(sliced, depth + 1)
        memo[key] = total
        return total

    n = count(frozenset(I.gens), 0)
    mons = None
    if enumerate_all:
        mons = tuple(
            e for e in itertools.product(*(range(b) for b in bounds)) if not I.contains(e)
        )
        mons = tuple(sorted(mons, key=lambda e: (sum(e), canonical_key(e))))
        assert len(mons) == n
    return StandardMonomials(True, n, mons)


def standard_monomials_in_degree(I: MonomialIdeal, d: int) -> int:
    """Number of degree-``d`` monomials outside ``I`` (brute force)."""
    n = I.nvars
    total = 0
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + n - 1 - prev - 1)
        if not I.contains(tuple(e)):
            total += 1
    return total


# ---------------------------------------------------------------------------
# Hilbert series numerators


class HilbertNumerator:
    """Integer polynomial in ``t``, stored sparsely as degree -> coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(d): int(c) for d, c in (coeffs or {}).items() if c}

    def __eq__(self, other):
        if isinstance(other, HilbertNumerator):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, 0) + c
        return HilbertNumerator(out)

    def __sub__(self, other):
        return self + other.shift(0, -1)

    def shift(self, k: int, scale: int = 1) -> "HilbertNumerator":
        return HilbertNumerator({d + k: c * scale for d, c in self.coeffs.items()})

    def __getitem__(self, d: int) -> int:
        return self.coeffs.get(d, 0)

    def __call__(self, t):
        return sum(c * t ** d for d, c in self.coeffs.items())

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __str__(self):
        return "{" + ", ".join(f"{d}:{c}" for d, c in sorted(self.coeffs.items())) + "}"

    __repr__ = __str__

    def to_dict(self) -> dict:
        return {str(d): c for d, c in sorted(self.coeffs.items())}

    @classmethod
    def parse(cls, text: str) -> "HilbertNumerator":
        body = text.strip().strip("{}").strip()
        if not body:
            return cls()
        out = {}
        for item in body.split(","):
            d, c = item.split(":")
            out[int(d)] = out.get(int(d), 0) + int(c)
        return cls(out)

    def series(self, nvars: int, upto: int) -> list:
        """Coefficients of ``self / (1-t)^nvars`` through degree ``upto``."""
        out = []
        for d in range(upto + 1):
            out.append(
                sum(c * comb(d - k + nvars - 1, nvars - 1) for k, c in self.coeffs.items() if k <= d)
            )
        return out

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in sorted(self.coeffs.items()):
            mono = "1" if d == 0 else (var if d == 1 else f"{var}^{d}")
            a = abs(c)
            body = mono if a == 1 else (str(a) if d == 0 else f"{a}*{mono}")
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)


def hilbert_numerator(I: MonomialIdeal, pivot_order=None) -> HilbertNumerator:
    """Numerator of the Hilbert series of ``k[x]/I`` over ``(1-t)^n``.

    Colon recursion ``p(I) = p(x^A1) - sum_i t^|Ai| p((x^A1..x^A{i-1}) : x^Ai)``
    with generators taken in ascending lexicographic order on the reversed
    variable list (``pivot_order`` may override it; the result is the same).
    """
    sort_key = pivot_order or canonical_key
    memo = {}

    def p(gens: tuple) -> dict:
        if not gens:
            return {0: 1}
        if any(not any(g) for g in gens):
            return {}
        if len(gens) == 1:
            return {0: 1, sum(gens[0]): -1}
        hit = memo.get(gens)
        if hit is not None:
            return hit
        ordered = sorted(gens, key=sort_key)
        acc = {0: 1}
        acc[sum(ordered[0])] = acc.get(sum(ordered[0]), 0) - 1
        for i in range(1, len(ordered)):
            a = ordered[i]
            col = minimal_generators(
                (tuple(max(x - y, 0) for x, y in zip(g, a)) for g in ordered[:i]), I.ring
            )
            sub = p(col.gens)
            shift = sum(a)
            for d, c in sub.items():
                acc[d + shift] = acc.get(d + shift, 0) - c
        acc = {d: c for d, c in acc.items() if c}
        memo[gens] = acc
        return acc

    return HilbertNumerator(p(tuple(sorted(I.gens, key=canonical_key))))


def dimension_monomial(I: MonomialIdeal) -> int:
    """Krull dimension of ``k[x]/I``: largest variable set avoiding every generator's support."""
    if I.is_unit():
        raise UnitIdealError("unit ideal has no dimension")
    supports = [frozenset(i for i, k in enumerate(g) if k) for g in I.gens]
    n = I.nvars
    for size in range(n, -1, -1):
        for V in itertools.combinations(range(n), size):
            Vs = set(V)
            if not any(s <= Vs for s in supports):
                return size
    return 0

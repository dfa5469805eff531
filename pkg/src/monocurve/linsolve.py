"""Sparse linear systems over Q or GF(p), used to solve for homogeneous syzygy entries."""

from __future__ import annotations

from fractions import Fraction

from .matrix import DEFAULT_PRIME


class SparseSystem:
    """Equations ``sum_k a_k x_k = b`` stored as dict rows.

    With ``prime`` set, arithmetic is mod ``prime``; otherwise exact over Q.
    """

    def __init__(self, prime: int | None = None):
        self.prime = prime
        self.rows = []  # (coeffs dict, rhs)

    def _norm(self, v):
        if self.prime is None:
            return Fraction(v)
        if isinstance(v, Fraction):
            return v.numerator * pow(v.denominator, self.prime - 2, self.prime) % self.prime
        return v % self.prime

    def add(self, coeffs: dict, rhs):
        row = {}
        for k, v in coeffs.items():
            v = self._norm(v)
            if v:
                row[k] = v
        self.rows.append((row, self._norm(rhs)))

    def _inv(self, a):
        return pow(a, self.prime - 2, self.prime) if self.prime else 1 / a

    def solve(self):
        """Return a solution dict (free unknowns set to 0) or None if inconsistent."""
        p = self.prime
        pivots = {}  # var -> (row dict normalized so pivot coeff is 1, rhs)
        order = []
        for row, rhs in self.rows:
            row = dict(row)
            # eliminate known pivots
            changed = True
            while changed:
                changed = False
                for k in [k for k in row if k in pivots]:
                    f = row.pop(k, None)
                    if not f:
                        continue
                    prow, prhs = pivots[k]
                    for kk, vv in prow.items():
                        nv = row.get(kk, 0) - f * vv
                        if p:
                            nv %= p
                        if nv:
                            row[kk] = nv
                        else:
                            row.pop(kk, None)
                    rhs = rhs - f * prhs
                    if p:
                        rhs %= p
                    changed = True
            if not row:
                if rhs:
                    return None
                continue
            k = min(row)
            inv = self._inv(row[k])
            prow = {kk: (vv * inv) % p if p else vv * inv for kk, vv in row.items() if kk != k}
            prhs = (rhs * inv) % p if p else rhs * inv
            # keep pivot rows fully reduced against the new pivot
            for other, (orow, orhs) in pivots.items():
                f = orow.pop(k, None)
                if f:
                    for kk, vv in prow.items():
                        nv = orow.get(kk, 0) - f * vv
                        if p:
                            nv %= p
                        if nv:
                            orow[kk] = nv
                        else:
                            orow.pop(kk, None)
                    nr = orhs - f * prhs
                    pivots[other] = (orow, nr % p if p else nr)
            pivots[k] = (prow, prhs)
            order.append(k)
        # free variables are zero; pivot rows are fully reduced
        return {k: rhs for k, (row, rhs) in pivots.items() if rhs}


def solve_mod(eqs: list, prime: int = DEFAULT_PRIME):
    s = SparseSystem(prime)
    for coeffs, rhs in eqs:
        s.add(coeffs, rhs)
    return s.solve()


def solve_exact(eqs: list):
    s = SparseSystem(None)
    for coeffs, rhs in eqs:
        s.add(coeffs, rhs)
    return s.solve()

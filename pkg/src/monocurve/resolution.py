"""Free complexes: composition, ranks, minors, Buchsbaum-Eisenbud checks and column repair."""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .groebner import codimension
from .monomial_ideal import UnitIdealError
from .linsolve import solve_exact, solve_mod
from .matrix import (
    DEFAULT_PRIME,
    PolynomialMatrix,
    ShapeError,
    bareiss_rank,
    determinant,
    env_seed,
    modular_rank,
    random_point,
    rank_mod,
)
from .poly import Polynomial, default_order
from .syzygy import betti_via_schreyer, schreyer_resolution  # noqa: F401


class CertificateRejected(ValueError):
    """A supplied certificate minor is identically zero."""


class RepairError(RuntimeError):
    pass


@dataclass
class FreeComplex:
    """Differentials d1..dk with d_i : F_i -> F_{i-1}."""

    differentials: list
    names: list | None = None

    def __post_init__(self):
        ds = self.differentials
        if not ds:
            raise ShapeError("empty complex")
        for a, b in zip(ds, ds[1:]):
            if a.cols != b.rows:
                raise ShapeError(f"incompatible shapes {a.shape} then {b.shape}")
            if a.ring != b.ring:
                raise ShapeError("differentials over different rings")
        if self.names is None:
            self.names = [f"d{i}" for i in range(1, len(ds) + 1)]

    @property
    def ring(self) -> tuple:
        return self.differentials[0].ring

    def __len__(self):
        return len(self.differentials)

    def free_ranks(self) -> list:
        """Ranks of F_0, F_1, ..., F_k."""
        return [self.differentials[0].rows] + [d.cols for d in self.differentials]

    def expected_ranks(self) -> list:
        """r_i = sum_{j >= i} (-1)^(j-i) rank F_j, for i = 1..k."""
        F = self.free_ranks()
        k = len(self.differentials)
        return [sum((-1) ** (j - i) * F[j] for j in range(i, k + 1)) for i in range(1, k + 1)]

    def copy(self) -> "FreeComplex":
        return FreeComplex([d.copy() for d in self.differentials], list(self.names))

    def to_dict(self) -> dict:
        return {
            "ring": list(self.ring),
            "differentials": [
                dict(d.to_dict(), name=n) for d, n in zip(self.differentials, self.names)
            ],
            "expected_ranks": self.expected_ranks(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "FreeComplex":
        ring = tuple(d["ring"])
        mats = [PolynomialMatrix.from_dict(m, ring) for m in d["differentials"]]
        return cls(mats, [m.get("name", f"d{i + 1}") for i, m in enumerate(d["differentials"])])


def compose_check(C: FreeComplex):
    """Return ``(ok, cells)``; ``cells`` lists (level, row, col), 1-based, of nonzero products d_i d_{i+1}."""
    bad = []
    for i in range(len(C) - 1):
        P = C.differentials[i] @ C.differentials[i + 1]
        bad.extend((i + 1, r + 1, c + 1) for (r, c) in sorted(P.entries))
    return (not bad, bad)


# ---------------------------------------------------------------------------
# ranks and minors


def matrix_rank(M: PolynomialMatrix, seed: int | None = None) -> int:
    """Rank over the fraction field.

    A seeded modular evaluation gives a certified lower bound (a minor that
    is nonzero at a point is a nonzero polynomial); when it is not already
    full, the exact value comes from fraction-free elimination.
    """
    if M.rows == 0 or M.cols == 0 or M.is_zero():
        return 0
    low, _ = modular_rank(M, seed)
    if low == min(M.rows, M.cols):
        return low
    return bareiss_rank(M)


def _check_indices(idx: Sequence[int], bound: int, what: str):
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing: {list(idx)}")
    if idx and (idx[0] < 1 or idx[-1] > bound):
        raise ValueError(f"{what} indices out of range 1..{bound}: {list(idx)}")


def minor_determinant(M: PolynomialMatrix, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    """Determinant of the submatrix on 1-based ``rows`` and ``cols``."""
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise ValueError(f"minor needs as many rows as columns ({len(rows)} vs {len(cols)})")
    _check_indices(rows, M.rows, "row")
    _check_indices(cols, M.cols, "column")
    return determinant(M.submatrix([r - 1 for r in rows], [c - 1 for c in cols]))


def complex_ranks(C: FreeComplex, seed: int | None = None) -> list:
    """Exact rank of every differential of a complex with vanishing compositions.

    Lower bounds come from modular evaluation; d_i d_{i+1} = 0 gives
    rank d_i <= cols(d_i) - rank d_{i+1} and rank d_i <= rows(d_i) - rank d_{i-1}.
    Where the bounds do not meet, fraction-free elimination decides.
    """
    ok, _ = compose_check(C)
    lows = [modular_rank(d, seed)[0] for d in C.differentials]
    out = []
    k = len(C)
    for i, d in enumerate(C.differentials):
        up = min(d.rows, d.cols)
        if ok:
            if i + 1 < k:
                up = min(up, d.cols - lows[i + 1])
            if i > 0:
                up = min(up, d.rows - lows[i - 1])
        out.append(lows[i] if lows[i] == up else bareiss_rank(d))
    return out


# ---------------------------------------------------------------------------
# repair of stated differentials


@dataclass
class ColumnRepair:
    level: int  # differential index, 1-based
    column: int  # 1-based
    rows: tuple  # 1-based rows whose entries changed
    stated: dict  # row -> text
    repaired: dict  # row -> text
    alternatives: list = field(default_factory=list)
    method: str = "minimal-rows"

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "column": self.column,
            "rows": list(self.rows),
            "stated": {str(k): v for k, v in self.stated.items()},
            "repaired": {str(k): v for k, v in self.repaired.items()},
            "alternatives": [list(a) for a in self.alternatives],
            "method": self.method,
        }

    def __str__(self):
        diffs = ", ".join(f"row {r}: {self.stated[r]} -> {self.repaired[r]}" for r in self.rows)
        return f"d{self.level} column {self.column}: {diffs}"


def _monomials(n: int, d: int) -> list:
    if d < 0:
        return []
    out = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev, e = -1, []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(d + n - 2 - prev)
        out.append(tuple(e))
    return out


def basis_degrees(C: FreeComplex) -> list:
    """Degrees of the bases of F_0..F_k, each column's degree by majority over its entries."""
    degs = [[0] * C.differentials[0].rows]
    for d in C.differentials:
        prev = degs[-1]
        cur = []
        for c in range(d.cols):
            votes = Counter(
                p.degree() + prev[r] for r, p in d.column(c).items() if p.is_homogeneous()
            )
            if not votes:
                raise RepairError(f"cannot infer the degree of an empty column {c + 1} of {d!r}")
            cur.append(max(votes.items(), key=lambda kv: (kv[1], -kv[0]))[0])
        degs.append(cur)
    return degs


class _ColumnSolver:
    """Solve prev * v = 0 for v homogeneous, varying only a chosen set of entries."""

    def __init__(self, prev: PolynomialMatrix, row_degrees: list):
        self.prev = prev
        self.rdeg = row_degrees
        self.n = len(prev.ring)
        self.by_col = {}
        for (j, k), q in prev.entries.items():
            self.by_col.setdefault(k, []).append((j, q))
        self._contrib = {}

    def contribution(self, k: int, D: int) -> dict:
        """Equation coefficients contributed by unknown entry k of degree D - deg_k."""
        key = (k, D)
        hit = self._contrib.get(key)
        if hit is None:
            hit = {}
            for m in _monomials(self.n, D - self.rdeg[k]):
                for j, q in self.by_col.get(k, ()):
                    for a, c in q.terms.items():
                        eq = (j, tuple(x + y for x, y in zip(a, m)))
                        row = hit.setdefault(eq, {})
                        row[(k, m)] = row.get((k, m), 0) + c
            self._contrib[key] = hit
        return hit

    def system(self, col: dict, S: tuple, D: int) -> list:
        eqs = {}
        for k, p in col.items():
            if k in S:
                continue
            for j, q in self.by_col.get(k, ()):
                for e, c in (q * p).terms.items():
                    row = eqs.setdefault((j, e), [{}, 0])
                    row[1] -= c
        for k in S:
            for eq, coeffs in self.contribution(k, D).items():
                row = eqs.setdefault(eq, [{}, 0])
                for u, c in coeffs.items():
                    row[0][u] = row[0].get(u, 0) + c
        return [(a, b) for a, b in eqs.values()]

    def solve(self, col: dict, S: tuple, D: int, exact: bool):
        sol = (solve_exact if exact else solve_mod)(self.system(col, S, D))
        if sol is None or not exact:
            return sol
        new = {k: p for k, p in col.items() if k not in S}
        for k in S:
            p = Polynomial(self.prev.ring, {m: v for (kk, m), v in sol.items() if kk == k})
            if p:
                new[k] = p
        return new


def _column_options(solver, prev, col, D, max_rows):
    rows = sorted(solver.by_col)
    for size in range(1, max_rows + 1):
        found = []
        for S in itertools.combinations(rows, size):
            if solver.solve(col, S, D, exact=False) is None:
                continue
            new = solver.solve(col, S, D, exact=True)
            if new is not None:
                found.append((S, new))
        if found:
            return found, "minimal-rows"
    S = tuple(rows)
    new = solver.solve(col, S, D, exact=True)
    if new is None:
        raise RepairError("no homogeneous syzygy of the expected degree fits this column")
    return [(S, new)], "full-lift"


def repair_complex(C: FreeComplex, max_rows: int = 3, max_combos: int = 256):
    """Replace failing columns of d_2..d_k by syzygies of the preceding differential.

    d_1 is never altered.  Each failing column is rewritten by changing as
    few entries as possible; when several row sets of that size work, the
    choice that leaves the fewest failing columns in the next composition
    wins.  Returns ``(repaired_complex, repairs)``.
    """
    out = C.copy()
    repairs = []
    degs = basis_degrees(C)
    for i in range(1, len(out)):
        prev, cur = out.differentials[i - 1], out.differentials[i]
        bad = sorted({c for (_, c) in (prev @ cur).entries})
        if not bad:
            continue
        solver = _ColumnSolver(prev, degs[i])
        options = {}
        for c in bad:
            options[c] = _column_options(solver, prev, cur.column(c), degs[i + 1][c], max_rows)
        nxt = out.differentials[i + 1] if i + 1 < len(out) else None
        choice = {c: 0 for c in bad}
        ambiguous = [c for c in bad if len(options[c][0]) > 1]
        if ambiguous and nxt is not None:
            best = None
            ranges = [range(len(options[c][0])) for c in ambiguous]
            for combo in itertools.islice(itertools.product(*ranges), max_combos):
                trial = cur.copy()
                for c in bad:
                    k = combo[ambiguous.index(c)] if c in ambiguous else 0
                    trial.set_column(c, options[c][0][k][1])
                score = len({cc for (_, cc) in (trial @ nxt).entries})
                if best is None or score < best[0]:
                    best = (score, combo)
            for c, k in zip(ambiguous, best[1]):
                choice[c] = k
        for c in bad:
            opts, method = options[c]
            S, new = opts[choice[c]]
            stated = cur.column(c)
            changed = tuple(sorted(r for r in set(stated) | set(new) if stated.get(r) != new.get(r)))
            repairs.append(
                ColumnRepair(
                    i + 1,
                    c + 1,
                    tuple(r + 1 for r in changed),
                    {r + 1: str(stated.get(r, "0")) for r in changed},
                    {r + 1: str(new.get(r, "0")) for r in changed},
                    [tuple(r + 1 for r in s) for s, _ in opts if s != S],
                    method,
                )
            )
            cur.set_column(c, new)
    return out, repairs


# ---------------------------------------------------------------------------
# Buchsbaum-Eisenbud


@dataclass
class LevelReport:
    level: int
    expected_rank: int
    rank: int
    minors: list  # (rows, cols) 1-based, as supplied
    certificate_codim: int | None
    supplemental: list  # extra (rows, cols) found by search
    codim: int | None
    rank_ok: bool
    grade_ok: bool

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "expected_rank": self.expected_rank,
            "rank": self.rank,
            "rank_ok": self.rank_ok,
            "minors": [[list(r), list(c)] for r, c in self.minors],
            "certificate_codim": _codim_json(self.certificate_codim),
            "supplemental": [[list(r), list(c)] for r, c in self.supplemental],
            "codim": _codim_json(self.codim),
            "grade_ok": self.grade_ok,
        }


@dataclass
class ExactnessVerdict:
    composition_ok: bool
    levels: list
    repairs: list = field(default_factory=list)
    constant_entries: list = field(default_factory=list)
    complex: FreeComplex | None = None

    @property
    def rank_ok(self) -> list:
        return [lv.rank_ok for lv in self.levels]

    @property
    def grade_certificates(self) -> list:
        return [{"minors": lv.minors, "codim": lv.codim} for lv in self.levels]

    @property
    def verdict(self) -> bool:
        return self.composition_ok and all(lv.rank_ok and lv.grade_ok for lv in self.levels)

    @property
    def minimal(self) -> bool:
        return not self.constant_entries

    def to_dict(self) -> dict:
        return {
            "composition_ok": self.composition_ok,
            "levels": [lv.to_dict() for lv in self.levels],
            "repairs": [r.to_dict() for r in self.repairs],
            "constant_entries": [list(c) for c in self.constant_entries],
            "minimal": self.minimal,
            "verdict": self.verdict,
        }


def _candidate_minors(d: PolynomialMatrix, size: int, seed: int):
    """Yield (rows, cols), 1-based, with a minor that is nonzero at some point.

    Points are drawn on coordinate subspaces (some variables zero) so the
    minors found avoid the corresponding coordinate primes.
    """
    rng = random.Random(seed)
    n = len(d.ring)
    patterns = [()] + [z for k in range(1, n) for z in itertools.combinations(range(n), k)]
    seen = set()
    for rnd in range(2):
        for zeros in patterns:
            vals = [0 if i in zeros else rng.randrange(1, DEFAULT_PRIME) for i in range(n)]
            A = d.evaluate_mod(vals)
            rows = list(range(d.rows))
            cols = list(range(d.cols))
            if rnd:
                rng.shuffle(rows)
                rng.shuffle(cols)
            rk, piv = rank_mod([[A[r][c] for c in cols] for r in rows])
            if rk < size:
                continue
            rs = tuple(sorted(rows[p[0]] + 1 for p in piv[:size]))
            cs = tuple(sorted(cols[p[1]] + 1 for p in piv[:size]))
            if (rs, cs) not in seen:
                seen.add((rs, cs))
                yield list(rs), list(cs)


def _minor_codim(polys: list, order):
    """Codimension of the ideal of minors; the unit ideal has infinite grade."""
    try:
        return codimension(polys, order)
    except UnitIdealError:
        return math.inf


def _codim_json(c):
    return "inf" if c == math.inf else c


def buchsbaum_eisenbud_verify(
    C: FreeComplex,
    certificates: dict | None = None,
    repair: bool = False,
    attempts: int = 40,
    seed: int | None = None,
) -> ExactnessVerdict:
    """Check exactness: expected ranks plus grade(I_{r_i}(d_i)) >= i via codimension of minors.

    ``certificates`` maps level -> list of (rows, cols), 1-based.  A zero
    certificate minor raises ``CertificateRejected``.  When the supplied
    minors (or none) fall short of codimension i, further nonzero minors
    are searched for (seeded, at most ``attempts``) and reported separately.
    """
    seed = env_seed() if seed is None else seed
    repairs = []
    ok, _ = compose_check(C)
    if not ok and repair:
        C, repairs = repair_complex(C)
        ok, _ = compose_check(C)
    expected = C.expected_ranks()
    ranks = complex_ranks(C, seed)
    order = default_order(C.ring)
    levels = []
    for i, d in enumerate(C.differentials, start=1):
        r = expected[i - 1]
        rank_ok = ranks[i - 1] == r
        minors, polys, extra = [], [], []
        cert_codim = codim = None
        for rows, cols in (certificates or {}).get(i, []):
            if len(rows) != r or len(cols) != r:
                raise CertificateRejected(f"level {i}: minor of size {len(rows)} but expected rank {r}")
            m = minor_determinant(d, rows, cols)
            if not m:
                raise CertificateRejected(f"level {i}: minor rows={list(rows)} cols={list(cols)} is zero")
            minors.append((list(rows), list(cols)))
            polys.append(m)
        if polys:
            cert_codim = codim = _minor_codim(polys, order)
        if rank_ok and r > 0 and (codim is None or codim < i):
            for rows, cols in itertools.islice(_candidate_minors(d, r, seed + i), attempts):
                if (rows, cols) in minors:
                    continue
                m = minor_determinant(d, rows, cols)
                if not m or m in polys:
                    continue
                extra.append((rows, cols))
                polys.append(m)
                codim = _minor_codim(polys, order)
                if codim >= i:
                    break
        levels.append(
            LevelReport(i, r, ranks[i - 1], minors, cert_codim, extra, codim, rank_ok,
                        codim is not None and codim >= i)
        )
    consts = [
        (i, r + 1, c + 1) for i, d in enumerate(C.differentials, start=1) for (r, c) in d.constant_cells()
    ]
    return ExactnessVerdict(ok, levels, repairs, consts, C)

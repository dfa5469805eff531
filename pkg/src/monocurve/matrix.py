"""Sparse polynomial matrices, rule-driven assembly, fraction-free determinants and ranks."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .poly import Polynomial, RingMismatchError

DEFAULT_PRIME = 2_147_483_647  # 2^31 - 1


def env_seed() -> int:
    return int(os.environ.get("MONOCURVE_SEED", "0"))


class ShapeError(ValueError):
    pass


class PolynomialMatrix:
    """``rows x cols`` matrix over a polynomial ring; absent cells are zero.

    Indices are 0-based internally; serialization uses 1-based indices.
    """

    __slots__ = ("rows", "cols", "ring", "entries")

    def __init__(self, rows: int, cols: int, ring: Sequence[str], entries=None):
        if rows < 0 or cols < 0:
            raise ShapeError(f"bad shape {rows}x{cols}")
        self.rows, self.cols, self.ring = rows, cols, tuple(ring)
        self.entries = {}
        for (i, j), p in (entries or {}).items():
            self[i, j] = p

    # -- access
    def __getitem__(self, ij) -> Polynomial:
        p = self.entries.get(ij)
        return p if p is not None else Polynomial.zero(self.ring)

    def __setitem__(self, ij, p: Polynomial):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"cell {(i + 1, j + 1)} outside {self.rows}x{self.cols}")
        if p.ring != self.ring:
            raise RingMismatchError(f"entry ring {p.ring} != {self.ring}")
        if p:
            self.entries[i, j] = p
        else:
            self.entries.pop((i, j), None)

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def copy(self) -> "PolynomialMatrix":
        return PolynomialMatrix(self.rows, self.cols, self.ring, dict(self.entries))

    def column(self, j: int) -> dict:
        return {i: p for (i, jj), p in self.entries.items() if jj == j}

    def set_column(self, j: int, col: dict):
        for i in range(self.rows):
            self.entries.pop((i, j), None)
        for i, p in col.items():
            self[i, j] = p

    def row(self, i: int) -> dict:
        return {j: p for (ii, j), p in self.entries.items() if ii == i}

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialMatrix)
            and self.shape == other.shape
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"PolynomialMatrix({self.rows}x{self.cols}, {len(self.entries)} nonzero)"

    # -- algebra
    def __matmul__(self, other: "PolynomialMatrix") -> "PolynomialMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        if self.ring != other.ring:
            raise RingMismatchError("matrix rings differ")
        by_row = {}
        for (k, j), q in other.entries.items():
            by_row.setdefault(k, []).append((j, q))
        acc = {}
        for (i, k), p in self.entries.items():
            for j, q in by_row.get(k, ()):
                prev = acc.get((i, j))
                acc[i, j] = p * q if prev is None else prev + p * q
        return PolynomialMatrix(self.rows, other.cols, self.ring, acc)

    def transpose(self) -> "PolynomialMatrix":
        return PolynomialMatrix(self.cols, self.rows, self.ring, {(j, i): p for (i, j), p in self.entries.items()})

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolynomialMatrix":
        rpos = {r: a for a, r in enumerate(rows)}
        cpos = {c: b for b, c in enumerate(cols)}
        sub = {}
        for (i, j), p in self.entries.items():
            if i in rpos and j in cpos:
                sub[rpos[i], cpos[j]] = p
        return PolynomialMatrix(len(rows), len(cols), self.ring, sub)

    def dense(self) -> list:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def evaluate_mod(self, vals: Sequence[int], prime: int = DEFAULT_PRIME) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), p in self.entries.items():
            out[i][j] = p.evaluate_mod(vals, prime)
        return out

    def constant_cells(self) -> list:
        """Cells holding a nonzero constant (these break minimality)."""
        return sorted(ij for ij, p in self.entries.items() if p.is_constant())

    # -- serialization
    def to_entry_list(self) -> list:
        return [[i + 1, j + 1, str(p)] for (i, j), p in sorted(self.entries.items())]

    def to_dict(self) -> dict:
        return {"shape": [self.rows, self.cols], "entries": self.to_entry_list()}

    @classmethod
    def from_dict(cls, d: dict, ring: Sequence[str]) -> "PolynomialMatrix":
        rows, cols = d["shape"]
        M = cls(rows, cols, ring)
        for i, j, text in d["entries"]:
            M[i - 1, j - 1] = Polynomial.parse(text, ring)
        return M

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Polynomial]], ring: Sequence[str]) -> "PolynomialMatrix":
        ncols = len(rows[0]) if rows else 0
        M = cls(len(rows), ncols, ring)
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ShapeError("ragged rows")
            for j, p in enumerate(r):
                M[i, j] = p
        return M


# ---------------------------------------------------------------------------
# assembly from index rules


@dataclass(frozen=True)
class AssemblyDiagnostic:
    kind: str  # "conflict" | "out-of-range" | "duplicate"
    cell: tuple  # 1-based (row, col)
    rule: str
    value: str
    existing: str | None = None
    existing_rule: str | None = None

    def __str__(self):
        r, c = self.cell
        if self.kind == "conflict":
            return (f"conflict at ({r},{c}): rule {self.rule} writes {self.value} "
                    f"but {self.existing_rule} already wrote {self.existing}; first writer kept")
        if self.kind == "out-of-range":
            return f"out-of-range cell ({r},{c}) from rule {self.rule} (value {self.value}); dropped"
        return f"duplicate write at ({r},{c}) from rule {self.rule}; same value"


class MatrixAssembler:
    """Collect 1-based cell assignments; at most one writer per cell."""

    def __init__(self, name: str, rows: int, cols: int, ring: Sequence[str]):
        self.name = name
        self.matrix = PolynomialMatrix(rows, cols, ring)
        self.writers = {}
        self.diagnostics = []

    def put(self, row: int, col: int, value: Polynomial, rule: str):
        M = self.matrix
        if not (1 <= row <= M.rows and 1 <= col <= M.cols):
            self.diagnostics.append(AssemblyDiagnostic("out-of-range", (row, col), rule, str(value)))
            return
        key = (row - 1, col - 1)
        if key in self.writers:
            old = M[key]
            kind = "duplicate" if old == value else "conflict"
            self.diagnostics.append(
                AssemblyDiagnostic(kind, (row, col), rule, str(value), str(old), self.writers[key])
            )
            return
        self.writers[key] = rule
        M[key] = value

    def conflicts(self) -> list:
        return [d for d in self.diagnostics if d.kind != "duplicate"]


# ---------------------------------------------------------------------------
# modular rank (probabilistic lower bound, rigorous as such)


def rank_mod(rows: list, prime: int = DEFAULT_PRIME) -> tuple:
    """Rank of an integer matrix mod ``prime`` and the pivot (row, col) pairs used."""
    A = [list(r) for r in rows]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots = []
    row_ids = list(range(m))
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c] % prime), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        row_ids[r], row_ids[piv] = row_ids[piv], row_ids[r]
        inv = pow(A[r][c], prime - 2, prime)
        for i in range(r + 1, m):
            if A[i][c] % prime:
                f = A[i][c] * inv % prime
                A[i] = [(x - f * y) % prime for x, y in zip(A[i], A[r])]
        pivots.append((row_ids[r], c))
        r += 1
        if r == m:
            break
    return r, pivots


def random_point(nvars: int, seed: int | None = None, prime: int = DEFAULT_PRIME) -> list:
    rng = random.Random(env_seed() if seed is None else seed)
    return [rng.randrange(1, prime) for _ in range(nvars)]


def modular_rank(M: PolynomialMatrix, seed: int | None = None, prime: int = DEFAULT_PRIME) -> tuple:
    """Rank of ``M`` evaluated at a seeded random point; a lower bound on the true rank."""
    vals = random_point(len(M.ring), seed, prime)
    return rank_mod(M.evaluate_mod(vals, prime), prime)


# ---------------------------------------------------------------------------
# fraction-free elimination


def _bareiss(A: list, ring: tuple, stop_at_zero: bool) -> tuple:
    """Full-pivoting Bareiss elimination in place.

    Returns ``(rank, last_pivot, sign)``.  With ``stop_at_zero`` the loop
    ends at the first step with no nonzero pivot (determinant mode).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    one = Polynomial.constant(1, ring)
    prev = one
    sign = 1
    k = 0
    while k < min(m, n):
        best = None
        for i in range(k, m):
            row = A[i]
            for j in range(k, n):
                p = row[j]
                if p and (best is None or len(p) < best[0]):
                    best = (len(p), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            A[k], A[pi] = A[pi], A[k]
            sign = -sign
        if pj != k:
            for row in A:
                row[k], row[pj] = row[pj], row[k]
            sign = -sign
        piv = A[k][k]
        for i in range(k + 1, m):
            aik = A[i][k]
            row = A[i]
            for j in range(k + 1, n):
                v = piv * row[j]
                if aik and A[k][j]:
                    v = v - aik * A[k][j]
                row[j] = v.exact_div(prev) if prev != one and v else v
            row[k] = Polynomial.zero(ring)
        prev = piv
        k += 1
        if stop_at_zero and k == m:
            break
    return k, prev, sign


def determinant(M: PolynomialMatrix) -> Polynomial:
    if M.rows != M.cols:
        raise ShapeError(f"determinant of non-square {M.shape} matrix")
    if M.rows == 0:
        return Polynomial.constant(1, M.ring)
    A = M.dense()
    k, last, sign = _bareiss(A, M.ring, True)
    if k < M.rows:
        return Polynomial.zero(M.ring)
    return last if sign > 0 else -last


def bareiss_rank(M: PolynomialMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    # work on the orientation with fewer rows
    A = M.dense() if M.rows <= M.cols else M.transpose().dense()
    k, _, _ = _bareiss(A, M.ring, False)
    return k


def cofactor_determinant(rows: list) -> Polynomial:
    """Laplace expansion along the first row; only for small test matrices."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_determinant(minor)
        term = term if j % 2 == 0 else -term
        total = term if total is None else total + term
    return total

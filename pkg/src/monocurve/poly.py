"""Sparse multivariate polynomials over Q, monomial orders and division.

Exponent vectors are plain tuples of non-negative ints; a polynomial maps
exponent tuples to nonzero rational coefficients (``int`` or ``Fraction``).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

Exp = tuple  # tuple[int, ...]
Coeff = "int | Fraction"

MAX_EXPONENT = 1 << 20


class RingMismatchError(ValueError):
    pass


class DimensionError(ValueError):
    pass


class ZeroPolynomialError(ValueError):
    """Raised when a leading term is requested from the zero polynomial."""


class ExponentOverflowError(OverflowError):
    pass


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def divides(a: Exp, b: Exp) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_add(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exp, b: Exp) -> Exp:
    out = tuple(x - y for x, y in zip(a, b))
    if min(out, default=0) < 0:
        raise ValueError(f"{b} does not divide {a}")
    return out


def exp_lcm(a: Exp, b: Exp) -> Exp:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def exp_gcd(a: Exp, b: Exp) -> Exp:
    return tuple(x if x <= y else y for x, y in zip(a, b))


def check_exp(a: Exp) -> Exp:
    if max(a, default=0) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent exceeds {MAX_EXPONENT}: {a}")
    return a


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """Degrevlex on one or more variable blocks.

    ``blocks`` lists variable indices in decreasing priority. A single block
    is plain degrevlex over a permuted variable list; with several blocks the
    first is compared first (degrevlex inside each block), which makes the
    order eliminate the first block.
    """

    nvars: int
    blocks: tuple
    kind: str = "degrevlex"
    _key: Callable = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        flat = [i for b in self.blocks for i in b]
        if sorted(flat) != list(range(self.nvars)):
            raise DimensionError(f"blocks {self.blocks} do not cover {self.nvars} variables")
        object.__setattr__(self, "_key", _make_key(self.blocks))

    @classmethod
    def degrevlex(cls, ring: Sequence[str], order: Sequence[str] | None = None) -> "MonomialOrder":
        order = list(ring) if order is None else list(order)
        return cls(len(ring), (tuple(_index(ring, v) for v in order),), "degrevlex")

    @classmethod
    def block(cls, ring: Sequence[str], first: Sequence[str], rest: Sequence[str] | None = None) -> "MonomialOrder":
        if rest is None:
            rest = [v for v in ring if v not in first]
        b1 = tuple(_index(ring, v) for v in first)
        b2 = tuple(_index(ring, v) for v in rest)
        return cls(len(ring), (b1, b2), "block")

    def key(self, a: Exp):
        """Sort key; larger key means larger monomial."""
        return self._key(a)

    def compare(self, a: Exp, b: Exp) -> Ordering:
        if len(a) != self.nvars or len(b) != self.nvars:
            raise DimensionError(f"exponent lengths {len(a)}, {len(b)} vs order on {self.nvars} variables")
        ka, kb = self._key(a), self._key(b)
        if ka == kb:
            return Ordering.EQ
        return Ordering.GT if ka > kb else Ordering.LT

    def eliminates(self, var_index: int) -> bool:
        return self.kind == "block" and var_index in self.blocks[0]

    def describe(self, ring: Sequence[str]) -> str:
        parts = [">".join(ring[i] for i in b) for b in self.blocks]
        return f"{self.kind}(" + " | ".join(parts) + ")"


def _index(ring: Sequence[str], v: str) -> int:
    try:
        return list(ring).index(v)
    except ValueError:
        raise RingMismatchError(f"unknown variable {v!r} for ring {tuple(ring)}") from None


def _make_key(blocks):
    if len(blocks) == 1:
        rev = tuple(reversed(blocks[0]))

        def key(a):
            return (sum(a),) + tuple(-a[i] for i in rev)

        return key

    revs = [tuple(reversed(b)) for b in blocks]

    def key(a):
        out = ()
        for b, rev in zip(blocks, revs):
            out += (sum(a[i] for i in b),) + tuple(-a[i] for i in rev)
        return out

    return key


def default_order(ring: Sequence[str]) -> MonomialOrder:
    """Degrevlex in ring order, except a homogenizing ``x0`` is least."""
    order = [v for v in ring if v != "x0"]
    if "x0" in ring:
        order.append("x0")
    return MonomialOrder.degrevlex(ring, order)


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    __slots__ = ("ring", "terms", "_cache", "_hash")

    def __init__(self, ring: Sequence[str], terms: Mapping | None = None):
        self.ring = tuple(ring)
        n = len(self.ring)
        clean = {}
        if terms:
            for e, c in terms.items():
                if c == 0:
                    continue
                e = tuple(e)
                if len(e) != n:
                    raise DimensionError(f"exponent {e} has wrong length for ring {self.ring}")
                if min(e, default=0) < 0:
                    raise DimensionError(f"negative exponent {e}")
                clean[e] = norm_coeff(c)
        self.terms = clean
        self._cache = {}
        self._hash = None

    # -- constructors
    @classmethod
    def _raw(cls, ring: tuple, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._cache = {}
        p._hash = None
        return p

    @classmethod
    def zero(cls, ring) -> "Polynomial":
        return cls._raw(tuple(ring), {})

    @classmethod
    def constant(cls, c, ring) -> "Polynomial":
        ring = tuple(ring)
        return cls(ring, {(0,) * len(ring): c})

    @classmethod
    def monomial(cls, exp: Exp, ring, coeff=1) -> "Polynomial":
        return cls(ring, {tuple(exp): coeff})

    @classmethod
    def var(cls, name: str, ring) -> "Polynomial":
        ring = tuple(ring)
        e = [0] * len(ring)
        e[_index(ring, name)] = 1
        return cls._raw(ring, {tuple(e): 1})

    @classmethod
    def parse(cls, text: str, ring) -> "Polynomial":
        return parse_polynomial(text, ring)

    # -- basic protocol
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.ring): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return self.to_str()

    def to_str(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        order = order or default_order(self.ring)
        out = []
        for e, c in self.sorted_terms(order):
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self.ring, e) if k
            )
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append(("- " if neg else "+ ") + body)
        return " ".join(out)

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.ring)
        return None

    # -- arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = norm_coeff(s)
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return Polynomial.zero(self.ring)
        if self.degree() + other.degree() > MAX_EXPONENT:
            raise ExponentOverflowError("product degree too large")
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.ring, {e: norm_coeff(c) for e, c in out.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.ring)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(self.ring, {e: norm_coeff(v * c) for e, v in self.terms.items()})

    def mul_term(self, exp: Exp, c=1) -> "Polynomial":
        """Multiply by the single term ``c * x^exp``."""
        if c == 0:
            return Polynomial.zero(self.ring)
        return Polynomial._raw(
            self.ring,
            {check_exp(tuple(x + y for x, y in zip(e, exp))): norm_coeff(v * c) for e, v in self.terms.items()},
        )

    # -- inspection
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_coeff(self):
        return self.terms.get((0,) * len(self.ring), 0)

    def variables_used(self) -> set:
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return used

    def sorted_terms(self, order: MonomialOrder) -> list:
        """Terms sorted descending under ``order`` (cached per order)."""
        hit = self._cache.get(order)
        if hit is None:
            hit = sorted(self.terms.items(), key=lambda t: order._key(t[0]), reverse=True)
            self._cache[order] = hit
        return hit

    def leading_term(self, order: MonomialOrder):
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no leading term")
        key = ("lt", order)
        hit = self._cache.get(key)
        if hit is None:
            k = order._key
            e = max(self.terms, key=k)
            hit = (self.terms[e], e)
            self._cache[key] = hit
        return hit

    def leading_monomial(self, order: MonomialOrder) -> Exp:
        return self.leading_term(order)[1]

    def leading_coeff(self, order: MonomialOrder):
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        c = self.leading_coeff(order)
        if c == 1:
            return self
        return self.scale(Fraction(1) / c)

    # -- ring changes and substitution
    def change_ring(self, ring: Sequence[str]) -> "Polynomial":
        """Re-embed into ``ring`` by variable name; used variables must exist there."""
        ring = tuple(ring)
        if ring == self.ring:
            return self
        pos = {v: i for i, v in enumerate(ring)}
        moves = []
        for i, v in enumerate(self.ring):
            if v in pos:
                moves.append((i, pos[v]))
        present = {i for i, _ in moves}
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(ring)
            for i, k in enumerate(e):
                if k and i not in present:
                    raise RingMismatchError(f"variable {self.ring[i]} not in {ring}")
            for i, j in moves:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return Polynomial._raw(ring, out)

    def substitute(self, images: Mapping[str, "Polynomial"], ring: Sequence[str]) -> "Polynomial":
        """Replace each variable by a polynomial in ``ring``."""
        ring = tuple(ring)
        powers = {}
        imgs = []
        for v in self.ring:
            if v not in images:
                raise RingMismatchError(f"no image given for {v}")
            img = images[v]
            if img.ring != ring:
                raise RingMismatchError(f"image of {v} lives in {img.ring}, expected {ring}")
            imgs.append(img)
        total = Polynomial.zero(ring)
        for e, c in self.terms.items():
            term = Polynomial.constant(c, ring)
            for i, k in enumerate(e):
                if k:
                    key = (i, k)
                    if key not in powers:
                        powers[key] = imgs[i] ** k
                    term = term * powers[key]
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, object] | Sequence):
        """Evaluate at a point (exact for int/Fraction inputs)."""
        if isinstance(point, Mapping):
            vals = [point[v] for v in self.ring]
        else:
            vals = list(point)
        total = 0
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x ** k
            total += t
        return total

    def evaluate_mod(self, vals: Sequence[int], prime: int) -> int:
        total = 0
        for e, c in self.terms.items():
            if isinstance(c, Fraction):
                t = c.numerator * pow(c.denominator, -1, prime)
            else:
                t = c
            for x, k in zip(vals, e):
                if k:
                    t = t * pow(x, k, prime)
            total = (total + t) % prime
        return total

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises if ``other`` does not divide."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        q, r = divide(self, [other], default_order(self.ring))
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q[0]


# ---------------------------------------------------------------------------
# leading terms, division, normal forms


def compare_monomials(order: MonomialOrder, a: Exp, b: Exp) -> Ordering:
    return order.compare(tuple(a), tuple(b))


def leading_term(order: MonomialOrder, f: Polynomial):
    """Order-maximal term of ``f`` as ``(coefficient, exponent)``."""
    return f.leading_term(order)


def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division of ``f`` by ``G``.

    Returns ``(quotients, remainder)`` with ``f = sum q_i g_i + r``, no term of
    ``r`` divisible by a leading monomial of ``G``. Divisors are tried in list
    order; zero divisors are skipped.
    """
    for g in G:
        f._check(g)
    key = order._key
    divisors = []
    for i, g in enumerate(G):
        if g.terms:
            c, e = g.leading_term(order)
            divisors.append((i, e, c, g.sorted_terms(order)))
    quots = [dict() for _ in G]
    rem = {}
    p = dict(f.terms)
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, lm, lc, gterms in divisors:
            if divides(lm, m):
                mult = tuple(x - y for x, y in zip(m, lm))
                if lc == 1:
                    coef = c
                elif lc == -1:
                    coef = -c
                else:
                    coef = norm_coeff(Fraction(c) / lc)
                quots[i][mult] = quots[i].get(mult, 0) + coef
                for ge, gc in gterms:
                    e = tuple(x + y for x, y in zip(ge, mult))
                    s = p.get(e, 0) - coef * gc
                    if s:
                        p[e] = s
                    else:
                        p.pop(e, None)
                break
        else:
            rem[m] = c
            del p[m]
    qs = [Polynomial(f.ring, q) for q in quots]
    return qs, Polynomial(f.ring, rem)


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Fully reduced remainder of ``f`` modulo ``G``."""
    if not f.terms:
        return f
    return divide(f, G, order)[1]


def homogenize(f: Polynomial, new_var: str, ring: Sequence[str] | None = None) -> Polynomial:
    """Pad every term of ``f`` with ``new_var`` up to the top degree.

    ``ring`` is the target ring (defaults to ``f.ring`` with ``new_var``
    prepended when absent).
    """
    if ring is None:
        ring = f.ring if new_var in f.ring else (new_var,) + f.ring
    ring = tuple(ring)
    j = _index(ring, new_var)
    g = f.change_ring(ring)
    if not g.terms:
        return g
    d = g.degree()
    out = {}
    for e, c in g.terms.items():
        e = list(e)
        e[j] += d - sum(e)
        out[tuple(e)] = c
    return Polynomial._raw(ring, out)


def dehomogenize(f: Polynomial, var: str, ring: Sequence[str] | None = None) -> Polynomial:
    """Set ``var = 1`` and drop it (or re-embed into ``ring``)."""
    j = _index(f.ring, var)
    if ring is None:
        ring = tuple(v for v in f.ring if v != var)
    ring = tuple(ring)
    if var in ring:
        raise RingMismatchError(f"target ring still contains {var}")
    pos = {v: i for i, v in enumerate(ring)}
    moves = []
    for i, v in enumerate(f.ring):
        if i != j:
            moves.append((i, pos.get(v)))
    out = {}
    for e, c in f.terms.items():
        ne = [0] * len(ring)
        for i, k in moves:
            if e[i]:
                if k is None:
                    raise RingMismatchError(f"variable {f.ring[i]} not in {ring}")
                ne[k] = e[i]
        ne = tuple(ne)
        v = out.get(ne, 0) + c
        if v:
            out[ne] = norm_coeff(v)
        else:
            out.pop(ne, None)
    return Polynomial._raw(ring, out)


# ---------------------------------------------------------------------------
# text format

_TERM_RE = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_polynomial(text: str, ring: Sequence[str]) -> Polynomial:
    """Parse the text format produced by ``Polynomial.to_str``.

    Accepts ``c*x1^2*x3``-style terms joined by ``+``/``-``; coefficients may
    be integers or ``p/q``.
    """
    ring = tuple(ring)
    pos = {v: i for i, v in enumerate(ring)}
    s = text.strip()
    if s in ("", "0"):
        return Polynomial.zero(ring)
    out = {}
    idx = 0
    first = True
    while idx < len(s):
        m = _TERM_RE.match(s, idx)
        if not m or m.end() == idx:
            raise ValueError(f"cannot parse polynomial near {s[idx:]!r}")
        sign, body = m.group(1), m.group(2).strip()
        if sign is None and not first:
            raise ValueError(f"missing operator before {body!r}")
        first = False
        idx = m.end()
        coeff = Fraction(-1 if sign == "-" else 1)
        e = [0] * len(ring)
        for factor in body.split("*"):
            factor = factor.strip()
            if not factor:
                raise ValueError(f"empty factor in {body!r}")
            if factor[0].isdigit():
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in pos:
                raise RingMismatchError(f"unknown variable {name!r} for ring {ring}")
            e[pos[name]] += int(power) if power else 1
        e = tuple(e)
        v = out.get(e, 0) + coeff
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return Polynomial(ring, out)


def monomial_str(exp: Exp, ring: Sequence[str]) -> str:
    body = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(ring, exp) if k)
    return body or "1"


def variables(ring: Sequence[str]) -> list:
    return [Polynomial.var(v, ring) for v in ring]


def polys(texts: Iterable[str], ring: Sequence[str]) -> list:
    return [parse_polynomial(t, ring) for t in texts]

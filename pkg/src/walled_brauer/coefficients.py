"""Exact scalars in the variable delta and exact linear algebra over them.

``DeltaPoly`` is a univariate polynomial with rational coefficients and
``RatFunc`` a reduced quotient of two of them. Matrices are plain lists of
rows. Ranks are computed by fraction-free (Bareiss) elimination, or, as a
fast path, modulo a large prime at random integer values of delta.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

Scalar = int | Fraction


@dataclass(frozen=True, slots=True)
class DeltaPoly:
    """Polynomial in delta; ``terms`` is a sorted tuple of (exponent, coeff)."""

    terms: tuple[tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[int, Scalar]) -> DeltaPoly:
        return cls(tuple(sorted((e, Fraction(c)) for e, c in d.items() if c != 0)))

    @classmethod
    def const(cls, c: Scalar) -> DeltaPoly:
        return cls(((0, Fraction(c)),)) if c else ZERO

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> DeltaPoly:
        if e < 0:
            raise ValueError("negative exponent")
        return cls(((e, Fraction(c)),)) if c else ZERO

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else -1

    @property
    def lead(self) -> Fraction:
        return self.terms[-1][1] if self.terms else Fraction(0)

    def _coerce(self, other) -> DeltaPoly:
        if isinstance(other, DeltaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DeltaPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> DeltaPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return DeltaPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> DeltaPoly:
        return DeltaPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> DeltaPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> DeltaPoly:
        return (-self) + other

    def __mul__(self, other) -> DeltaPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d: dict[int, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return DeltaPoly.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> DeltaPoly:
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DeltaPoly.const(other)
        if not isinstance(other, DeltaPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def eval(self, x: Scalar) -> Fraction:
        return sum((c * Fraction(x) ** e for e, c in self.terms), Fraction(0))

    def eval_mod(self, x: int, p: int) -> int:
        acc = 0
        for e, c in self.terms:
            acc += c.numerator * pow(c.denominator, -1, p) * pow(x, e, p)
        return acc % p

    def divmod(self, other: DeltaPoly) -> tuple[DeltaPoly, DeltaPoly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self.as_dict()
        quo: dict[int, Fraction] = {}
        dg, lc = other.degree, other.lead
        while rem:
            top = max(rem)
            if top < dg:
                break
            c = rem[top] / lc
            shift = top - dg
            quo[shift] = c
            for e, oc in other.terms:
                rem[e + shift] = rem.get(e + shift, 0) - c * oc
                if rem[e + shift] == 0:
                    del rem[e + shift]
        return DeltaPoly.from_dict(quo), DeltaPoly.from_dict(rem)

    def exact_div(self, other: DeltaPoly) -> DeltaPoly:
        q, rem = self.divmod(other)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> DeltaPoly:
        return self * (1 / self.lead) if self else self

    def content_normal(self) -> DeltaPoly:
        """Scale to an integer polynomial with positive leading coefficient and content one."""
        if not self:
            return self
        from math import gcd, lcm

        den = lcm(*(c.denominator for _, c in self.terms))
        ints = [int(c * den) for _, c in self.terms]
        g = 0
        for v in ints:
            g = gcd(g, v)
        sign = 1 if ints[-1] > 0 else -1
        return self * Fraction(sign * den, g)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"DeltaPoly({format_poly(self)!r})"


ZERO = DeltaPoly()
ONE = DeltaPoly(((0, Fraction(1)),))
DELTA = DeltaPoly(((1, Fraction(1)),))


def poly_gcd(a: DeltaPoly, b: DeltaPoly) -> DeltaPoly:
    while b:
        a, b = b, a.divmod(b)[1]
    return a.monic() if a else a


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: DeltaPoly) -> str:
    if not p:
        return "0"
    parts = []
    for e, c in reversed(p.terms):
        mag = abs(c)
        var = "" if e == 0 else ("d" if e == 1 else f"d^{e}")
        if not var:
            body = _format_coeff(mag)
        elif mag == 1:
            body = var
        else:
            body = f"{_format_coeff(mag)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


_POLY_TERM = re.compile(
    r"\s*([+-])?\s*(?:(\d+)(?:/(\d+))?\s*(?:\*\s*)?)?(?:(d)(?:\s*\^\s*(\d+))?)?\s*"
)


def parse_poly(text: str) -> DeltaPoly:
    """Parse text such as ``3/2*d^2 - d + 1`` (variable ``d``)."""
    src = text.strip()
    if src.startswith("(") and src.endswith(")"):
        src = src[1:-1]
    if not src.strip():
        raise ValueError("empty polynomial")
    pos = 0
    acc: dict[int, Fraction] = {}
    first = True
    while pos < len(src):
        m = _POLY_TERM.match(src, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, num, den, var, exp = m.groups()
        if num is None and var is None:
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r} at position {pos}")
        c = Fraction(int(num), int(den) if den else 1) if num else Fraction(1)
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if var else 0
        acc[e] = acc.get(e, 0) + c
        pos = m.end()
        first = False
    return DeltaPoly.from_dict(acc)


@dataclass(frozen=True, slots=True)
class RatFunc:
    """Reduced fraction num/den with monic denominator."""

    num: DeltaPoly
    den: DeltaPoly = ONE

    @classmethod
    def make(cls, num: DeltaPoly, den: DeltaPoly = ONE) -> RatFunc:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(ZERO, ONE)
        g = poly_gcd(num, den)
        num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lead
        return cls(num * (1 / lc), den * (1 / lc))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, o: RatFunc) -> RatFunc:
        return RatFunc.make(self.num * o.den + o.num * self.den, self.den * o.den)

    def __sub__(self, o: RatFunc) -> RatFunc:
        return RatFunc.make(self.num * o.den - o.num * self.den, self.den * o.den)

    def __mul__(self, o: RatFunc) -> RatFunc:
        return RatFunc.make(self.num * o.num, self.den * o.den)

    def __truediv__(self, o: RatFunc) -> RatFunc:
        return RatFunc.make(self.num * o.den, self.den * o.num)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __str__(self) -> str:
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


RAT_ZERO = RatFunc(ZERO, ONE)


# ------------------------------------------------------------ linear algebra

Matrix = list[list[DeltaPoly]]


def as_poly_matrix(rows: Iterable[Sequence]) -> Matrix:
    out = []
    for row in rows:
        out.append([x if isinstance(x, DeltaPoly) else DeltaPoly.const(x) for x in row])
    return out


def rank_exact(M: Sequence[Sequence[DeltaPoly]]) -> int:
    """Rank over Q(delta) by Bareiss fraction-free elimination."""
    A = [list(row) for row in M]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    prev = ONE
    rank = 0
    for col in range(ncols):
        piv = next((k for k in range(rank, nrows) if A[k][col]), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][col]
        for k in range(rank + 1, nrows):
            a = A[k][col]
            row_k, row_p = A[k], A[rank]
            for c in range(col + 1, ncols):
                row_k[c] = (p * row_k[c] - a * row_p[c]).exact_div(prev)
            row_k[col] = ZERO
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


PRIMES = (2_147_483_647, 2_147_483_629, 2_147_483_587, 2_147_483_579, 2_147_483_563)


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Rank of an integer matrix modulo the prime p (p < 2**31)."""
    A = np.array(A, dtype=np.int64) % p
    nrows, ncols = A.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(A[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            A[[rank, piv]] = A[[piv, rank]]
        inv = pow(int(A[rank, col]), -1, p)
        A[rank] = (A[rank] * inv) % p
        below = A[rank + 1:, col].copy()
        mask = below != 0
        if mask.any():
            rows = np.nonzero(mask)[0] + rank + 1
            A[rows] = (A[rows] - (below[mask, None] * A[rank]) % p) % p
        rank += 1
    return rank


def evaluate_mod(M: Sequence[Sequence[DeltaPoly]], x: int, p: int) -> np.ndarray:
    cache: dict[DeltaPoly, int] = {}
    out = np.zeros((len(M), len(M[0]) if M else 0), dtype=np.int64)
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            if v:
                if v not in cache:
                    cache[v] = v.eval_mod(x, p)
                out[i, j] = cache[v]
    return out


def rank_generic(
    M: Sequence[Sequence[DeltaPoly]],
    exact: bool = False,
    trials: int = 3,
    seed: int | None = 0,
) -> int:
    """Rank over the rational-function field.

    ``exact=True`` runs Bareiss elimination. Otherwise delta is evaluated at
    ``trials`` random integers in [10^3, 10^6] and the rank is taken modulo a
    large prime; the maximum over trials is returned. Each evaluation is a
    lower bound for the generic rank, so a full-rank result is certified.
    """
    if exact:
        return rank_exact(M)
    return max(rank_evaluations(M, trials, seed))


def rank_evaluations(M: Sequence[Sequence[DeltaPoly]], trials: int = 3, seed: int | None = 0) -> list[int]:
    if not M:
        return [0] * trials
    rng = random.Random(seed)
    out = []
    for t in range(trials):
        p = PRIMES[t % len(PRIMES)]
        x = rng.randint(10**3, 10**6)
        out.append(rank_mod_p(evaluate_mod(M, x, p), p))
    return out


def kernel_basis(M: Sequence[Sequence[DeltaPoly]], ncols: int | None = None) -> list[list[RatFunc]]:
    """Basis of {v : M v = 0} over Q(delta), from the reduced echelon form.

    Pivots are the leftmost nonzero column, taken from the lowest row index.
    Each basis vector has a 1 in one free column and zeros in the others.
    """
    rows = [[RatFunc.make(x) if isinstance(x, DeltaPoly) else x for x in row] for row in M]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = RatFunc.make(ONE) / rows[r][col]
        rows[r] = [x * inv if x else x for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                a = rows[k][col]
                rows[k] = [x - a * y if y else x for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in set(pivots)]
    one = RatFunc.make(ONE)
    basis = []
    for fc in free:
        v = [RAT_ZERO] * ncols
        v[fc] = one
        for k, pc in enumerate(pivots):
            if rows[k][fc]:
                v[pc] = -rows[k][fc]
        basis.append(v)
    return basis


def clear_denominators(v: Sequence[RatFunc]) -> list[DeltaPoly]:
    """Multiply a rational vector by the product of its distinct denominators."""
    dens: list[DeltaPoly] = []
    for x in v:
        if x and x.den != ONE and x.den not in dens:
            dens.append(x.den)
    common = ONE
    for d in dens:
        common = common * d.exact_div(poly_gcd(common, d))
    return [(x.num * common).exact_div(x.den) if x else ZERO for x in v]

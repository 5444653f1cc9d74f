"""Elements of B_{r,s}(delta) as linear combinations of normal words."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .coefficients import DELTA, ONE, ZERO, DeltaPoly, format_poly, parse_poly
from .normal_form import NormalWord, parse_normal
from .rewriting import reduce
from .words import Context, Word, WordError, format_word, parse_word, run


@dataclass(frozen=True)
class AlgebraElement:
    """Finite map from normal words to polynomials in delta.

    Keys are the words themselves (tuples); ``ctx`` fixes the algebra.
    """

    ctx: Context
    terms: Mapping[Word, DeltaPoly] = field(default_factory=dict)

    @classmethod
    def build(cls, ctx: Context, pairs: Iterable[tuple[Word, DeltaPoly | int | Fraction]]) -> AlgebraElement:
        """Sum of coefficient times word, reducing every word to normal form."""
        acc: dict[Word, DeltaPoly] = {}
        for w, c in pairs:
            c = c if isinstance(c, DeltaPoly) else DeltaPoly.const(c)
            if not c:
                continue
            d, nw = reduce(w, ctx)
            if d:
                c = c * DeltaPoly.monomial(d)
            acc[nw] = acc.get(nw, ZERO) + c
        return cls(ctx, {w: c for w, c in acc.items() if c})

    @classmethod
    def word(cls, ctx: Context, w: Word, coeff: DeltaPoly | int = 1) -> AlgebraElement:
        return cls.build(ctx, [(w, coeff)])

    @classmethod
    def zero(cls, ctx: Context) -> AlgebraElement:
        return cls(ctx, {})

    @classmethod
    def one(cls, ctx: Context) -> AlgebraElement:
        return cls(ctx, {(): ONE})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _same(self, other: AlgebraElement) -> None:
        if self.ctx != other.ctx:
            raise ValueError("elements of different algebras")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._same(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, ZERO) + c
        return AlgebraElement(self.ctx, {w: c for w, c in acc.items() if c})

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.ctx, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: DeltaPoly | int | Fraction) -> AlgebraElement:
        c = c if isinstance(c, DeltaPoly) else DeltaPoly.const(c)
        if not c:
            return AlgebraElement.zero(self.ctx)
        return AlgebraElement(self.ctx, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        return mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ctx == other.ctx and dict(self.terms) == dict(other.terms)

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Word, DeltaPoly]]:
        return sorted(self.terms.items(), key=lambda kv: parse_normal(kv[0], self.ctx).sort_key())

    def coefficient(self, w: Word) -> DeltaPoly:
        return self.terms.get(tuple(w), ZERO)

    def max_wall_count(self) -> int:
        r = self.ctx.r
        return max((w.count(r) for w in self.terms), default=-1)

    def leading_words(self) -> set[Word]:
        """Words carrying the largest number of s_r letters."""
        top = self.max_wall_count()
        return {w for w in self.terms if w.count(self.ctx.r) == top}

    def evaluate(self, x: int | Fraction) -> dict[Word, Fraction]:
        return {w: c.eval(x) for w, c in self.terms.items() if c.eval(x)}

    def __str__(self) -> str:
        return format_element(self)


def mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    a._same(b)
    pairs = []
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            pairs.append((u + v, cu * cv))
    return AlgebraElement.build(a.ctx, pairs)


def mul_words(u: Word, v: Word, ctx: Context) -> AlgebraElement:
    return AlgebraElement.word(ctx, tuple(u) + tuple(v))


def gen(p: int, ctx: Context) -> AlgebraElement:
    return AlgebraElement.word(ctx, (p,))


def delta_power(k: int) -> DeltaPoly:
    return DELTA ** k


# ------------------------------------------------------------ text format

def format_element(a: AlgebraElement) -> str:
    if not a.terms:
        return "0"
    out = []
    for w, c in a.sorted_terms():
        word = format_word(w)
        neg = False
        if len(c.terms) == 1 and c.terms[0][1] < 0:
            neg, c = True, -c
        if c == ONE:
            body = word
        elif len(c.terms) == 1:
            body = f"{format_poly(c)}*{word}"
        else:
            body = f"({format_poly(c)})*{word}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out)


def _split_terms(text: str) -> list[tuple[int, str]]:
    # split on top-level + and - (outside parentheses)
    parts: list[tuple[int, str]] = []
    depth, sign, cur = 0, 1, []
    stripped = text.strip()
    if not stripped:
        raise WordError("empty element")
    for ch in stripped:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise WordError("unbalanced parentheses")
        if depth == 0 and ch in "+-":
            if "".join(cur).strip():
                parts.append((sign, "".join(cur)))
            elif parts:
                raise WordError(f"dangling operator in {text!r}")
            sign = 1 if ch == "+" else -1
            cur = []
            continue
        cur.append(ch)
    if depth != 0:
        raise WordError("unbalanced parentheses")
    if not "".join(cur).strip():
        raise WordError(f"trailing operator in {text!r}")
    parts.append((sign, "".join(cur)))
    return parts


_WORD_TAIL = re.compile(r"(?:^|\*)\s*((?:e|s\d+(?:\s+s\d+)*))\s*$")


def parse_element(text: str, ctx: Context) -> AlgebraElement:
    """Parse ``(d^2-1)*s2 s1 + 2*e`` style text into a reduced element."""
    if text.strip() == "0":
        return AlgebraElement.zero(ctx)
    pairs = []
    for sign, chunk in _split_terms(text):
        chunk = chunk.strip()
        m = _WORD_TAIL.search(chunk)
        if m is None:
            raise WordError(f"term {chunk!r} does not end in a word")
        word = parse_word(m.group(1), ctx)
        head = chunk[: m.start()].strip()
        coeff = parse_poly(head) if head else ONE
        pairs.append((word, coeff * sign))
    return AlgebraElement.build(ctx, pairs)


# ------------------------------------------------------------ left table

def _normal_perm(w: Word, ctx: Context) -> Word:
    d, out = reduce(w, ctx)
    assert d == 0
    return out


def left_mul_case(p: int, nw: NormalWord, ctx: Context) -> tuple[str, Word, int]:
    """Dispatch s_p * nw to its case of the left multiplication table.

    Returns (case label, product word, delta exponent). The product word is
    normal. Run data are read in the shifted coordinates of the table: run
    a is [r+a-1+i'_a, r-f+a-j'_{f-a+1}] with both primed sequences weakly
    monotone. Labels IIe, IVc and IVd are completions for inputs the printed
    conditions do not reach.
    """
    r, f = ctx.r, nw.f
    if not 1 <= p < ctx.n:
        raise ValueError(f"generator s{p} outside 1..{ctx.n - 1}")
    left = _left_word(nw)
    right = _right_word(nw, ctx)
    mid = nw.word[len(left):len(nw.word) - len(right)]
    ip = [i - a for a, (i, _) in enumerate(nw.middle)]  # ip[a-1] = i'_a
    jp = {f - a: j - (f - 1 - a) for a, (_, j) in enumerate(nw.middle)}  # jp[b] = j'_b
    q = nw.left[-1] if r >= 2 else -1
    dots = _word_of_left_code(nw.left[:-1]) if r >= 2 else ()

    def I(a: int) -> int:
        return ip[a - 1]

    def J(b: int) -> int:
        return jp[b]

    if p < r:
        return "I", _normal_perm((p,) + left, ctx) + mid + right, 0
    if p == r:
        if f == 0:
            return "III", dots + run(r, r - 1 - q) + right, 0
        if I(1) == 0:
            if q == -1:
                return "IIa", nw.word, 1
            return "IIb", _normal_perm(dots + run(r - 2, r - 1 - q), ctx) + mid + right, 0
        if q - f + 1 >= J(f):
            return "IIc", dots + run(r, r - 1 - q) + mid + right, 0
        if q <= f - 2:
            out = dots + run(r, r - f + 1 - J(f))
            for m in range(1, q + 2):
                out += run(r + m - 1 + I(m), r - f + m + 1 - J(f - m))
            for m in range(q + 3, f + 1):
                out += run(r + m - 1 + I(m), r - f + m - J(f - m + 1))
            tail = run(r + f + I(q + 2) - 1, r + f + 1) + right
            return "IId", out + _normal_perm(tail, ctx), 0
        # both strands met by s_r propagate: a new arc forms and the runs
        # are put in order by the RED9/RED8 stage
        d, out = reduce(dots + run(r, r - 1 - q) + mid + right, ctx)
        return "IIe", out, d
    if f == 0 or p > r + f + I(f):
        return "V", left + mid + _normal_perm((p,) + right, ctx), 0
    for k in range(1, f + 1):
        if p == r + k + I(k):
            if k == f or I(k + 1) > I(k):
                runs = list(nw.middle)
                runs[k - 1] = (runs[k - 1][0] + 1, runs[k - 1][1])
                return "IVa", left + _runs_word(runs, r) + right, 0
            return "IVb", _normal_perm(left + (r - k,), ctx) + mid + right, 0
    a = next(a for a in range(1, f + 1) if p <= r + a - 1 + I(a))
    top = r + a - 1 + I(a)
    if p == top:
        runs = list(nw.middle)
        runs[a - 1] = (runs[a - 1][0] - 1, runs[a - 1][1])
        return "IVc", left + _runs_word(runs, r) + right, 0
    return "IVd", left + mid + _normal_perm((p + f - a + 1,) + right, ctx), 0


def left_mul_guards(p: int, nw: NormalWord, ctx: Context) -> list[str]:
    """Labels of every table case whose condition holds, each tested on its own."""
    r, f = ctx.r, nw.f
    ip = [i - a for a, (i, _) in enumerate(nw.middle)]
    Jf = nw.middle[0][1] - (f - 1) if f else None
    q = nw.left[-1] if r >= 2 else -1
    tops = [r + k + ip[k - 1] for k in range(1, f + 1)]
    hit = [k for k in range(1, f + 1) if p == tops[k - 1]]
    inside = f > 0 and r < p <= r + f + ip[-1]
    first = next((a for a in range(1, f + 1) if p <= r + a - 1 + ip[a - 1]), None) if inside else None
    conds = {
        "I": p < r,
        "III": p == r and f == 0,
        "IIa": p == r and f > 0 and ip[0] == 0 and q == -1,
        "IIb": p == r and f > 0 and ip[0] == 0 and q >= 0,
        "IIc": p == r and f > 0 and ip[0] > 0 and q - f + 1 >= Jf,
        "IId": p == r and f > 0 and ip[0] > 0 and q - f + 1 < Jf and q <= f - 2,
        "IIe": p == r and f > 0 and ip[0] > 0 and q - f + 1 < Jf and q >= f - 1,
        "IVa": inside and bool(hit) and (hit[0] == f or ip[hit[0]] > ip[hit[0] - 1]),
        "IVb": inside and bool(hit) and hit[0] < f and ip[hit[0]] == ip[hit[0] - 1],
        "IVc": inside and not hit and first is not None and p == r + first - 1 + ip[first - 1],
        "IVd": inside and not hit and first is not None and p < r + first - 1 + ip[first - 1],
        "V": p > r and (f == 0 or p > r + f + ip[-1]),
    }
    return [label for label, ok in conds.items() if ok]


def left_mul_gen(p: int, nw: NormalWord | Word, ctx: Context) -> AlgebraElement:
    """s_p times a basis word via the left multiplication table."""
    if not isinstance(nw, NormalWord):
        nw = parse_normal(tuple(nw), ctx)
    _, w, d = left_mul_case(p, nw, ctx)
    return AlgebraElement(ctx, {w: DeltaPoly.monomial(d)})


def _runs_word(runs, r: int) -> Word:
    return tuple(x for i, j in runs for x in run(r + i, r - j))


def _word_of_left_code(code: tuple[int, ...]) -> Word:
    out: list[int] = []
    for k, i in enumerate(code, start=1):
        out += run(k, k - i)
    return tuple(out)


def _left_word(nw: NormalWord) -> Word:
    return _word_of_left_code(nw.left)


def _right_word(nw: NormalWord, ctx: Context) -> Word:
    r, s = ctx.r, ctx.s
    out: list[int] = []
    for k in range(1, s):
        out += run(r + k + nw.right[s - 1 - k], r + k)
    return tuple(out)

"""The normal-form basis S^L_r D^(f) S^R_s and its length generating function."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import comb, factorial

from .rewriting import parse_bstar
from .words import Context, ShapeError, Word, run


@dataclass(frozen=True)
class NormalWord:
    """A basis word ``w_L [r+i_1, r-j_1] ... [r+i_f, r-j_f] w_R``.

    ``left`` is the code (i_1..i_{r-1}) of w_L = [1, 1-i_1]...[r-1, r-1-i_{r-1}]
    with -1 <= i_k < k. ``right`` is the code (j_1..j_{s-1}) of
    w_R = [r+1+j_{s-1}, r+1]...[r+s-1+j_1, r+s-1], where the run with bottom
    r+k has j_{s-k} in [-1, s-1-k]. ``middle`` holds the pairs (i_a, j_a).
    """

    r: int
    s: int
    left: tuple[int, ...]
    middle: tuple[tuple[int, int], ...]
    right: tuple[int, ...]

    @property
    def f(self) -> int:
        return len(self.middle)

    @cached_property
    def word(self) -> Word:
        r = self.r
        out: list[int] = []
        for k, i in enumerate(self.left, start=1):
            out += run(k, k - i)
        for i, j in self.middle:
            out += run(r + i, r - j)
        s = self.s
        for k in range(1, s):
            j = self.right[s - 1 - k]
            out += run(r + k + j, r + k)
        return tuple(out)

    def sort_key(self) -> tuple:
        return (self.f, self.left, self.middle, self.right)

    def __lt__(self, other: NormalWord) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return " ".join(f"s{a}" for a in self.word) or "e"


def left_words(r: int) -> list[tuple[int, ...]]:
    return list(itertools.product(*[range(-1, k) for k in range(1, r)]))


def right_codes(s: int) -> list[tuple[int, ...]]:
    # right[m-1] = j_m belongs to the run with bottom r+s-m, so -1 <= j_m < m
    return list(itertools.product(*[range(-1, m) for m in range(1, s)]))


def middle_codes(ctx: Context, f: int) -> list[tuple[tuple[int, int], ...]]:
    if not 0 <= f <= min(ctx.r, ctx.s):
        raise ValueError(f"f={f} outside 0..{min(ctx.r, ctx.s)}")
    out = []
    for i_vals in itertools.combinations(range(ctx.s), f):
        for j_desc in itertools.combinations(range(ctx.r - 1, -1, -1), f):
            out.append(tuple(zip(i_vals, j_desc)))
    out.sort()
    return out


def _word_of_left(code: tuple[int, ...]) -> Word:
    out: list[int] = []
    for k, i in enumerate(code, start=1):
        out += run(k, k - i)
    return tuple(out)


def _word_of_right(code: tuple[int, ...], r: int, s: int) -> Word:
    out: list[int] = []
    for k in range(1, s):
        out += run(r + k + code[s - 1 - k], r + k)
    return tuple(out)


def enumerate_SL(r: int) -> list[Word]:
    return [_word_of_left(c) for c in left_words(r)]


def enumerate_SR(s: int, ctx: Context) -> list[Word]:
    return [_word_of_right(c, ctx.r, s) for c in right_codes(s)]


def enumerate_D(ctx: Context, f: int) -> list[Word]:
    r = ctx.r
    return [tuple(a for i, j in m for a in run(r + i, r - j)) for m in middle_codes(ctx, f)]


@lru_cache(maxsize=None)
def _basis(ctx: Context) -> tuple[NormalWord, ...]:
    r, s = ctx.r, ctx.s
    out = []
    for f in range(min(r, s) + 1):
        for lc in left_words(r):
            for mc in middle_codes(ctx, f):
                for rc in right_codes(s):
                    out.append(NormalWord(r, s, lc, mc, rc))
    return tuple(out)


def enumerate_basis(ctx: Context) -> list[NormalWord]:
    return list(_basis(ctx))


@lru_cache(maxsize=None)
def _index(ctx: Context) -> dict[Word, NormalWord]:
    return {nw.word: nw for nw in _basis(ctx)}


def _parse_left(w: Word, r: int) -> tuple[int, ...]:
    """Code of an S^L normal word, or ShapeError."""
    code = [-1] * (r - 1)
    pos, last_top = 0, 0
    while pos < len(w):
        top = w[pos]
        k = pos
        while k + 1 < len(w) and w[k + 1] == w[k] - 1:
            k += 1
        if not last_top < top < r:
            raise ShapeError("left runs are not in normal order")
        code[top - 1] = top - w[k]
        last_top, pos = top, k + 1
    return tuple(code)


def _parse_right(w: Word, r: int, s: int) -> tuple[int, ...]:
    code = [-1] * (s - 1)
    pos, last_bottom = 0, r
    while pos < len(w):
        k = pos
        while k + 1 < len(w) and w[k + 1] == w[k] - 1:
            k += 1
        bottom = w[k]
        if not last_bottom < bottom < r + s:
            raise ShapeError("right runs are not in normal order")
        kk = bottom - r
        code[s - 1 - kk] = w[pos] - bottom
        last_bottom, pos = bottom, k + 1
    return tuple(code)


def parse_normal(w: Word, ctx: Context) -> NormalWord:
    """Structured parse of a normal word; ShapeError when ``w`` is not normal."""
    hit = _index(ctx).get(tuple(w))
    if hit is None:
        raise ShapeError(f"{w} is not a normal word for r={ctx.r}, s={ctx.s}")
    return hit


def parse_structure(w: Word, ctx: Context) -> NormalWord:
    """Parse without consulting the cached basis index (independent check)."""
    b = parse_bstar(tuple(w), ctx)
    r, s = ctx.r, ctx.s
    runs = b.runs
    if any(i >= s or j >= r for i, j in runs):
        raise ShapeError("middle run out of range")
    if any(runs[a][0] >= runs[a + 1][0] or runs[a][1] <= runs[a + 1][1] for a in range(len(runs) - 1)):
        raise ShapeError("middle runs not strictly ordered")
    nw = NormalWord(r, s, _parse_left(b.left, r), runs, _parse_right(b.right, r, s))
    if nw.word != tuple(w):
        raise ShapeError("word does not round-trip through its parse")
    return nw


def is_normal(w: Word, ctx: Context) -> bool:
    try:
        parse_structure(w, ctx)
    except ShapeError:
        return False
    return True


def genfun(ctx: Context) -> list[int]:
    counts: dict[int, int] = {}
    for nw in _basis(ctx):
        counts[len(nw.word)] = counts.get(len(nw.word), 0) + 1
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def q_int(m: int) -> list[int]:
    return [1] * m if m > 0 else [0]


def q_factorial(n: int) -> list[int]:
    out = [1]
    for m in range(1, n + 1):
        out = poly_mul(out, q_int(m))
    return out


def q_binomial(n: int, k: int) -> list[int]:
    if k < 0 or k > n:
        return [0]
    num = q_factorial(n)
    den = poly_mul(q_factorial(k), q_factorial(n - k))
    return _poly_exact_div(num, den)


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c, rem = divmod(num[k + len(den) - 1], den[-1])
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        for t, d in enumerate(den):
            num[k + t] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


def trim(p: list[int]) -> list[int]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def middle_genfun(ctx: Context) -> list[int]:
    """Length generating function of the union of the D^(f) sets."""
    counts: dict[int, int] = {}
    for f in range(min(ctx.r, ctx.s) + 1):
        for w in enumerate_D(ctx, f):
            counts[len(w)] = counts.get(len(w), 0) + 1
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def graded_counts(ctx: Context) -> list[int]:
    r, s = ctx.r, ctx.s
    return [factorial(r) * factorial(s) * comb(r, f) * comb(s, f) for f in range(min(r, s) + 1)]


def subalgebra_basis(ctx: Context, p: int, q: int) -> list[NormalWord]:
    """Basis words built only from s_{p+1}, ..., s_{r+s-1-q}."""
    if not (0 <= p <= ctx.r and 0 <= q <= ctx.s):
        raise ValueError(f"need 0 <= p <= r and 0 <= q <= s, got p={p}, q={q}")
    lo, hi = p + 1, ctx.r + ctx.s - 1 - q
    return [nw for nw in _basis(ctx) if all(lo <= a <= hi for a in nw.word)]


@lru_cache(maxsize=None)
def _diagram_index(ctx: Context) -> dict:
    from .diagrams import word_to_diagram

    out = {}
    for nw in _basis(ctx):
        loops, d = word_to_diagram(nw.word, ctx)
        assert loops == 0
        out[d] = nw.word
    return out


def normal_word_of(d, ctx: Context) -> Word:
    """The basis word whose diagram is ``d`` (inverse of the diagram map on the basis)."""
    try:
        return _diagram_index(ctx)[d]
    except KeyError:
        raise ShapeError("not a walled diagram of this algebra") from None

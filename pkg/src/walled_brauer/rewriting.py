"""The reduction system RED1-RED9, its termination order, and the staged
reduction algorithm (exhaust RED1-RED7, then order the middle runs with
RED9 and RED8).
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .words import Context, ScaledWord, ShapeError, Word, run

log = logging.getLogger(__name__)

MAX_STEPS = 1_000_000


class RuleId(NamedTuple):
    family: int
    params: tuple[int, ...]

    def __str__(self) -> str:
        names = {1: "i", 2: "", 3: "ij", 4: "ij", 5: "ij", 6: "i", 7: "i", 8: "ij", 9: "ij"}
        inner = ",".join(f"{k}={v}" for k, v in zip(names[self.family], self.params))
        return f"RED{self.family}({inner})"


@dataclass(frozen=True, slots=True)
class Rule:
    id: RuleId
    lhs: Word
    rhs: Word
    delta: int = 0


class Match(NamedTuple):
    rule: RuleId
    position: int


class Order(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"

    def flip(self) -> Order:
        if self is Order.LESS:
            return Order.GREATER
        if self is Order.GREATER:
            return Order.LESS
        return self


PRIME = frozenset(range(1, 8))
SECOND = frozenset({8, 9})
ALL = frozenset(range(1, 10))
RULESETS = {"R": ALL, "R'": PRIME, "R''": SECOND}


@lru_cache(maxsize=None)
def rules(ctx: Context) -> tuple[Rule, ...]:
    """Every parameterized instance of RED1-RED9 valid in ``ctx``."""
    r, n = ctx.r, ctx.n
    out: list[Rule] = []
    for i in range(1, n):
        if i != r:
            out.append(Rule(RuleId(1, (i,)), (i, i), ()))
    out.append(Rule(RuleId(2, ()), (r, r), (r,), 1))
    for i in range(1, n):
        for j in range(i + 2, n):
            out.append(Rule(RuleId(3, (i, j)), (j, i), (i, j)))
    for i in range(1, r - 1):
        for j in range(i):
            body = run(i, i - j)
            out.append(Rule(RuleId(4, (i, j)), (i + 1, *body, i + 1), (i, i + 1, *body)))
    for i in range(r + 1, n):
        for j in range(1, n - i):
            body = run(i + j, i)
            out.append(Rule(RuleId(5, (i, j)), (i, *body), (*body, i + 1)))
    for i in range(1, r):
        out.append(Rule(RuleId(6, (i,)), (r, *run(r - 1, r - i), r), (*run(r - 2, r - i), r)))
    for i in range(1, ctx.s):
        out.append(Rule(RuleId(7, (i,)), (r, *run(r + i, r + 1), r), (r, *run(r + i, r + 2))))
    for i in range(1, r):
        for j in range(1, ctx.s):
            lhs = run(r + j, r - i) + run(r + j, r)
            rhs = (r - 1, *run(r + j - 1, r - i), *run(r + j, r))
            out.append(Rule(RuleId(8, (i, j)), lhs, rhs))
    for i in range(1, r):
        for j in range(1, ctx.s):
            lhs = run(r, r - i) + run(r + j, r - i)
            rhs = run(r, r - i) + run(r + j, r - i + 1) + (r + 1,)
            out.append(Rule(RuleId(9, (i, j)), lhs, rhs))
    return tuple(out)


@lru_cache(maxsize=None)
def _rule_table(ctx: Context) -> dict[RuleId, Rule]:
    return {rule.id: rule for rule in rules(ctx)}


@lru_cache(maxsize=None)
def _by_first_letter(ctx: Context, families: frozenset[int]) -> dict[int, tuple[Rule, ...]]:
    table: dict[int, list[Rule]] = {}
    for rule in rules(ctx):
        if rule.id.family in families:
            table.setdefault(rule.lhs[0], []).append(rule)
    return {k: tuple(sorted(v, key=lambda x: x.id)) for k, v in table.items()}


def get_rule(rule_id: RuleId, ctx: Context) -> Rule:
    try:
        return _rule_table(ctx)[rule_id]
    except KeyError:
        raise ValueError(f"{rule_id} is not a valid rule instance for r={ctx.r}, s={ctx.s}") from None


def find_matches(w: Word, ruleset: str, ctx: Context) -> list[Match]:
    index = _by_first_letter(ctx, RULESETS[ruleset])
    out = []
    for pos, a in enumerate(w):
        for rule in index.get(a, ()):
            if w[pos:pos + len(rule.lhs)] == rule.lhs:
                out.append(Match(rule.id, pos))
    return out


def apply_match(w: Word, m: Match, ctx: Context) -> ScaledWord:
    rule = get_rule(m.rule, ctx)
    p = m.position
    if w[p:p + len(rule.lhs)] != rule.lhs:
        raise ValueError(f"invalid match: {m.rule} does not occur at position {p}")
    return ScaledWord(rule.delta, w[:p] + rule.rhs + w[p + len(rule.lhs):])


# ---------------------------------------------------------------- the order

def _segment_order(x: Word, y: Word, r: int) -> Order:
    """The auxiliary order on words free of s_r, comparing x and y."""
    xl = [a for a in x if a < r]
    yl = [a for a in y if a < r]
    if len(xl) != len(yl):
        return Order.LESS if len(xl) < len(yl) else Order.GREATER
    xr = [a for a in x if a > r]
    yr = [a for a in y if a > r]
    if len(xr) != len(yr):
        return Order.LESS if len(xr) < len(yr) else Order.GREATER
    for a, b in zip(xl, yl):
        if a != b:
            return Order.LESS if a < b else Order.GREATER
    for a, b in zip(reversed(xr), reversed(yr)):
        if a != b:
            return Order.LESS if a > b else Order.GREATER
    return Order.INCOMPARABLE


def compare(u: Word, v: Word, ctx: Context) -> Order:
    """Decide whether u precedes v in the termination order."""
    r = ctx.r
    if len(u) != len(v):
        return Order.LESS if len(u) < len(v) else Order.GREATER
    # Step ii counts occurrences of s_r as printed; counting letters right of
    # the wall would be the other natural reading.
    cu, cv = u.count(r), v.count(r)
    if cu != cv:
        return Order.LESS if cu < cv else Order.GREATER

    def cls(a: int) -> int:
        return 0 if a < r else (1 if a == r else 2)

    for a, b in zip(u, v):
        ca, cb = cls(a), cls(b)
        if ca != cb:
            return Order.LESS if ca < cb else Order.GREATER
    useg, vseg = _split_wall(u, r), _split_wall(v, r)
    for x, y in zip(useg, vseg):
        res = _segment_order(x, y, r)
        if res is not Order.INCOMPARABLE:
            return res
    return Order.INCOMPARABLE


def _split_wall(w: Word, r: int) -> list[Word]:
    out, cur = [], []
    for a in w:
        if a == r:
            out.append(tuple(cur))
            cur = []
        else:
            cur.append(a)
    out.append(tuple(cur))
    return out


# ------------------------------------------------------------ reductions

@lru_cache(maxsize=500_000)
def _reduce_prime(ctx: Context, w: Word) -> ScaledWord:
    index = _by_first_letter(ctx, PRIME)
    maxlen = max(len(rule.lhs) for rule in rules(ctx))
    word = list(w)
    delta = 0
    start = 0
    for _ in range(MAX_STEPS):
        hit = None
        for pos in range(start, len(word)):
            for rule in index.get(word[pos], ()):
                k = len(rule.lhs)
                if tuple(word[pos:pos + k]) == rule.lhs:
                    hit = (pos, rule)
                    break
            if hit:
                break
        if hit is None:
            return ScaledWord(delta, tuple(word))
        pos, rule = hit
        word[pos:pos + len(rule.lhs)] = rule.rhs
        delta += rule.delta
        start = max(0, pos - maxlen + 1)
    raise RuntimeError(f"reduction did not terminate within {MAX_STEPS} steps")


def reduce_prime(w: Word, ctx: Context) -> ScaledWord:
    return _reduce_prime(ctx, tuple(ctx.check(w)))


@dataclass(frozen=True, slots=True)
class BStar:
    """Parse of an RED1-RED7 irreducible word.

    ``left`` and ``right`` are the outer permutation words; ``runs`` holds the
    pairs (i_a, j_a) of the middle runs [r+i_a, r-j_a]; ``wall`` holds the
    positions of the s_r letters.
    """

    left: Word
    runs: tuple[tuple[int, int], ...]
    right: Word
    wall: tuple[int, ...]


def _descent_from(seg: Word, top: int, step_ok) -> int:
    # length of the maximal prefix top, top-1, ... whose letters satisfy step_ok
    k = 0
    while k < len(seg) and seg[k] == top - k and step_ok(seg[k]):
        k += 1
    return k


def parse_bstar(w: Word, ctx: Context) -> BStar:
    r = ctx.r
    wall = tuple(p for p, a in enumerate(w) if a == r)
    if not wall:
        k = 0
        while k < len(w) and w[k] < r:
            k += 1
        if any(a < r for a in w[k:]):
            raise ShapeError("left letter after a right letter")
        return BStar(w[:k], (), w[k:], ())
    head = w[:wall[0]]
    k = 0
    while k < len(head) and head[k] < r:
        k += 1
    left, top = head[:k], head[k:]
    i_vals: list[int] = []
    j_vals: list[int] = []

    def right_run(seg: Word) -> int:
        if seg and (seg[-1] != r + 1 or any(seg[t] != seg[0] - t for t in range(len(seg)))):
            raise ShapeError(f"expected a run [r+i, r+1], got {seg}")
        return len(seg)

    i_vals.append(right_run(top))
    for a in range(len(wall)):
        end = wall[a + 1] if a + 1 < len(wall) else len(w)
        seg = w[wall[a] + 1:end]
        j = _descent_from(seg, r - 1, lambda x: x < r)
        j_vals.append(j)
        rest = seg[j:]
        if a + 1 < len(wall):
            i_vals.append(right_run(rest))
        else:
            if any(x < r for x in rest):
                raise ShapeError("left letter after the last middle run")
            right = rest
    return BStar(left, tuple(zip(i_vals, j_vals)), right, wall)


def _step_second(w: Word, ctx: Context) -> Match | None:
    b = parse_bstar(w, ctx)
    runs = b.runs
    f = len(runs)
    bad_j = [k for k in range(f - 1) if runs[k][1] <= runs[k + 1][1]]
    if bad_j:
        k = bad_j[-1]
        return Match(RuleId(9, (runs[k][1], runs[k + 1][0])), b.wall[k])
    bad_i = [k for k in range(f - 1) if runs[k][0] >= runs[k + 1][0]]
    if bad_i:
        k = bad_i[0]
        i_next = runs[k + 1][0]
        return Match(RuleId(8, (runs[k][1], i_next)), b.wall[k] - i_next)
    return None


@lru_cache(maxsize=500_000)
def _reduce_second(ctx: Context, w: Word) -> ScaledWord:
    delta = 0
    for _ in range(MAX_STEPS):
        m = _step_second(w, ctx)
        if m is None:
            return ScaledWord(delta, w)
        d1, w = apply_match(w, m, ctx)
        d2, w = _reduce_prime(ctx, w)
        delta += d1 + d2
    raise RuntimeError("ordering stage did not terminate")


def reduce_second(sw: ScaledWord | Word, ctx: Context) -> ScaledWord:
    if isinstance(sw, ScaledWord):
        d, w = sw
    else:
        d, w = 0, tuple(sw)
    if find_matches(w, "R'", ctx):
        raise ShapeError("input is reducible by RED1-RED7")
    e, out = _reduce_second(ctx, w)
    return ScaledWord(d + e, out)


@lru_cache(maxsize=500_000)
def _reduce(ctx: Context, w: Word) -> ScaledWord:
    d1, w1 = _reduce_prime(ctx, w)
    d2, w2 = _reduce_second(ctx, w1)
    return ScaledWord(d1 + d2, w2)


def reduce(w: Word, ctx: Context) -> ScaledWord:
    """Normal form of ``w`` together with the collected power of delta."""
    return _reduce(ctx, tuple(ctx.check(w)))


def trace_second(w: Word, ctx: Context) -> list[tuple[Match, Word]]:
    """Sequence of RED8/RED9 steps taken on an RED1-RED7 irreducible word."""
    steps = []
    for _ in range(MAX_STEPS):
        m = _step_second(w, ctx)
        if m is None:
            return steps
        _, w = apply_match(w, m, ctx)
        _, w = _reduce_prime(ctx, w)
        steps.append((m, w))
    raise RuntimeError("ordering stage did not terminate")

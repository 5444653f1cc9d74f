"""Walled diagrams: the independent semantic model of B_{r,s}(delta).

Nodes are numbered 0..2n-1 internally: ``k-1`` is the top node u_k and
``n+k-1`` the bottom node d_k. A diagram stores the matching as an involution
``partner`` on these indices.

Convention for words: the diagram of ``a_1 ... a_m`` stacks the generator
diagrams with ``a_m`` on top, so the rightmost letter acts first on a module
vector placed above.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .words import Context, Word


@dataclass(frozen=True, slots=True)
class WalledDiagram:
    r: int
    s: int
    partner: tuple[int, ...]

    @property
    def n(self) -> int:
        return self.r + self.s

    def __post_init__(self) -> None:
        n = self.r + self.s
        p = self.partner
        if len(p) != 2 * n or any(p[p[x]] != x or p[x] == x for x in range(2 * n)):
            raise ValueError("partner is not a fixed-point-free involution")
        for x in range(2 * n):
            y = p[x]
            if x > y:
                continue
            same_row = (x < n) == (y < n)
            same_side = ((x % n) < self.r) == ((y % n) < self.r)
            if same_row == same_side:
                raise ValueError(f"edge {node_name(x, n)}-{node_name(y, n)} violates the wall")

    def edges(self) -> list[tuple[int, int]]:
        # canonical order: by first node, top row first, ascending index
        return sorted((x, y) for x, y in enumerate(self.partner) if x < y)

    def named_edges(self) -> list[list[str]]:
        return [[node_name(x, self.n), node_name(y, self.n)] for x, y in self.edges()]

    def arcs(self) -> int:
        """Number of top arcs (equal to the number of bottom arcs)."""
        n = self.n
        return sum(1 for x in range(n) if self.partner[x] < n) // 2

    def to_dict(self) -> dict:
        return {"r": self.r, "s": self.s, "edges": self.named_edges()}

    @classmethod
    def from_dict(cls, data: dict) -> WalledDiagram:
        r, s = int(data["r"]), int(data["s"])
        n = r + s
        partner = [-1] * (2 * n)
        for a, b in data["edges"]:
            x, y = parse_node(a, n), parse_node(b, n)
            partner[x], partner[y] = y, x
        return cls(r, s, tuple(partner))

    def as_permutation(self) -> tuple[int, ...] | None:
        """Top-to-bottom map (0-based) when there are no arcs, else None."""
        n = self.n
        if any(self.partner[x] < n for x in range(n)):
            return None
        return tuple(self.partner[x] - n for x in range(n))

    def ascii(self) -> str:
        lines = [f"walled diagram r={self.r} s={self.s}"]
        lines += [f"  {a} -- {b}" for a, b in self.named_edges()]
        return "\n".join(lines)


class ScaledDiagram(NamedTuple):
    delta_exp: int
    diagram: WalledDiagram


def node_name(x: int, n: int) -> str:
    return f"u{x + 1}" if x < n else f"d{x - n + 1}"


def parse_node(text: str, n: int) -> int:
    row, k = text[0], int(text[1:])
    if row not in "ud" or not 1 <= k <= n:
        raise ValueError(f"bad node {text!r}")
    return k - 1 if row == "u" else n + k - 1


def identity_diagram(ctx: Context) -> WalledDiagram:
    n = ctx.n
    return WalledDiagram(ctx.r, ctx.s, tuple(list(range(n, 2 * n)) + list(range(n))))


def gen_diagram(i: int, ctx: Context) -> WalledDiagram:
    n, r = ctx.n, ctx.r
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} outside 1..{n - 1}")
    p = list(range(n, 2 * n)) + list(range(n))
    a, b = i - 1, i
    if i == r:
        p[a], p[b], p[n + a], p[n + b] = b, a, n + b, n + a
    else:
        p[a], p[b], p[n + a], p[n + b] = n + b, n + a, b, a
    return WalledDiagram(ctx.r, ctx.s, tuple(p))


def compose(d2: WalledDiagram, d1: WalledDiagram) -> ScaledDiagram:
    """The product d2*d1: d1 is placed above d2; closed loops become delta."""
    if (d1.r, d1.s) != (d2.r, d2.s):
        raise ValueError("diagrams from different contexts")
    n = d1.n
    p1, p2 = d1.partner, d2.partner
    # middle node k is both d1's bottom node k and d2's top node k
    seen = [False] * n
    result = [-1] * (2 * n)

    def walk(k: int, down: bool) -> int:
        # arrive at middle node k; returns the outer node reached
        while True:
            seen[k] = True
            y = p2[k] if down else p1[n + k]
            if down and y >= n:
                return y
            if not down and y < n:
                return y
            k = y if down else y - n
            seen[k] = True
            down = not down

    for x in range(n):
        y = p1[x]
        result[x] = y if y < n else walk(y - n, True)
    for x in range(n, 2 * n):
        y = p2[x]
        result[x] = y if y >= n else walk(y, False)
    loops = 0
    for k in range(n):
        if seen[k]:
            continue
        loops += 1
        j, down = k, True
        while True:
            seen[j] = True
            j = p2[j] if down else p1[n + j] - n
            down = not down
            if j == k and down:
                break
    return ScaledDiagram(loops, WalledDiagram(d1.r, d1.s, tuple(result)))


@lru_cache(maxsize=200_000)
def _word_diagram(r: int, s: int, w: Word) -> ScaledDiagram:
    ctx = Context(r, s)
    if not w:
        return ScaledDiagram(0, identity_diagram(ctx))
    if len(w) == 1:
        return ScaledDiagram(0, gen_diagram(w[0], ctx))
    half = len(w) // 2
    e1, left = _word_diagram(r, s, w[:half])
    e2, right = _word_diagram(r, s, w[half:])
    loops, d = compose(left, right)
    return ScaledDiagram(e1 + e2 + loops, d)


def word_to_diagram(w: Word, ctx: Context) -> ScaledDiagram:
    ctx.check(w)
    return _word_diagram(ctx.r, ctx.s, tuple(w))


def diagram_from_permutation(sigma: tuple[int, ...], ctx: Context) -> WalledDiagram:
    """Partial-transpose bijection S_{r+s} -> walled diagrams.

    Flipping the right block of a walled diagram (swap its top and bottom
    nodes) gives a permutation diagram, and conversely.
    """
    n, r = ctx.n, ctx.r
    top = [x if x < r else n + x for x in range(n)]
    bottom = [n + y if y < r else y for y in range(n)]
    p = [-1] * (2 * n)
    for x in range(n):
        a, b = top[x], bottom[sigma[x]]
        p[a], p[b] = b, a
    return WalledDiagram(ctx.r, ctx.s, tuple(p))


def enumerate_diagrams(ctx: Context) -> list[WalledDiagram]:
    out = [diagram_from_permutation(sigma, ctx) for sigma in itertools.permutations(range(ctx.n))]
    out.sort(key=lambda d: d.edges())
    return out

"""Words in the free monoid on the generators s_1, ..., s_{r+s-1}.

A word is stored as a plain tuple of 1-based generator indices. The empty
tuple is the unit and prints as ``e``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

Word = tuple[int, ...]


class WordError(ValueError):
    """Raised for malformed word text or indices outside the context."""


class ShapeError(ValueError):
    """Raised when a word does not have a structurally required shape."""


@dataclass(frozen=True, slots=True)
class Context:
    """The pair (r, s) fixing the algebra B_{r,s}; s_r is the wall generator."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 1 or self.s < 1:
            raise ValueError(f"need r >= 1 and s >= 1, got r={self.r}, s={self.s}")

    @property
    def n(self) -> int:
        return self.r + self.s

    @property
    def max_gen(self) -> int:
        return self.r + self.s - 1

    def check(self, w: Word) -> Word:
        for k, a in enumerate(w):
            if not 1 <= a <= self.max_gen:
                raise WordError(f"generator s{a} at position {k} is outside 1..{self.max_gen}")
        return w


class ScaledWord(NamedTuple):
    """A word together with the power of delta collected while rewriting it."""

    delta_exp: int
    word: Word


class LengthStats(NamedTuple):
    len: int
    count_r: int
    count_left: int
    count_right: int


def make_run(p: int, q: int, ctx: Context) -> Word:
    """The descending run [p, q] = s_p s_{p-1} ... s_q; empty when p = q - 1."""
    if p < q - 1:
        raise WordError(f"invalid run [{p},{q}]")
    if p == q - 1:
        return ()
    if q < 1 or p > ctx.max_gen:
        raise WordError(f"run [{p},{q}] uses generators outside 1..{ctx.max_gen}")
    return tuple(range(p, q - 1, -1))


def run(p: int, q: int) -> Word:
    # context-free variant used internally where bounds are already known
    return tuple(range(p, q - 1, -1)) if p >= q else ()


def length_stats(w: Word, ctx: Context) -> LengthStats:
    r = ctx.r
    left = sum(1 for a in w if a < r)
    wall = sum(1 for a in w if a == r)
    return LengthStats(len(w), wall, left, len(w) - left - wall)


_TOKEN = re.compile(r"s(\d+)")


def parse_word(text: str, ctx: Context | None = None) -> Word:
    """Parse ``"e"`` or space separated tokens ``s<i>``.

    Runs of whitespace are tolerated; anything else raises WordError with the
    offending character position.
    """
    stripped = text.strip()
    if stripped == "e":
        return ()
    if not stripped:
        raise WordError("empty word text; use 'e' for the unit")
    letters: list[int] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or (m.end() < len(text) and not text[m.end()].isspace()):
            raise WordError(f"syntax error at position {pos} in {text!r}")
        idx = int(m.group(1))
        if idx < 1:
            raise WordError(f"generator index must be >= 1 at position {pos}")
        letters.append(idx)
        pos = m.end()
    w = tuple(letters)
    if ctx is not None:
        ctx.check(w)
    return w


def format_word(w: Word) -> str:
    return " ".join(f"s{a}" for a in w) if w else "e"

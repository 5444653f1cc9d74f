"""Quick internal consistency suites behind ``walled-brauer selfcheck``."""

from __future__ import annotations

import random
from math import factorial

from .cells import module_dim, module_labels, verify_theorem1
from .diagrams import compose, word_to_diagram
from .elements import AlgebraElement, gen, left_mul_gen
from .normal_form import enumerate_basis, genfun, normal_word_of, q_factorial
from .symmetric import hook_length_dim, partitions, specht_dim
from .words import Context


def _contexts(max_n: int, cap: int | None = None):
    for n in range(2, max_n + 1):
        for r in range(1, n):
            s = n - r
            if cap is None or max(r, s) <= cap:
                yield Context(r, s)


def _mul_matches_diagrams(ctx: Context, samples: int, rng: random.Random) -> bool:
    basis = [nw.word for nw in enumerate_basis(ctx)]
    for _ in range(samples):
        u, v = rng.choice(basis), rng.choice(basis)
        prod = AlgebraElement.word(ctx, u + v)
        e1, d1 = word_to_diagram(u, ctx)
        e2, d2 = word_to_diagram(v, ctx)
        loops, d = compose(d1, d2)
        want = {normal_word_of(d, ctx): loops + e1 + e2}
        got = {w: c.degree for w, c in prod.terms.items() if len(c.terms) == 1 and c.lead == 1}
        if got != want or len(prod.terms) != 1:
            return False
    return True


def run_selfcheck(max_n: int = 5, seed: int = 0) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    out: list[tuple[str, bool]] = []
    out.append(("basis size is (r+s)!",
                all(len(enumerate_basis(c)) == factorial(c.n) for c in _contexts(max_n))))
    out.append(("length generating function is the q-factorial",
                all(genfun(c) == q_factorial(c.n) for c in _contexts(max_n))))
    out.append(("reduction agrees with diagram composition",
                all(_mul_matches_diagrams(c, 200, rng) for c in _contexts(min(max_n, 6), cap=3))))
    ok = True
    for c in _contexts(min(max_n, 5), cap=2):
        for nw in enumerate_basis(c):
            for p in range(1, c.n):
                if left_mul_gen(p, nw, c) != gen(p, c) * AlgebraElement.word(c, nw.word):
                    ok = False
    out.append(("left multiplication table matches reduction", ok))
    out.append(("sum of squared module dimensions is (r+s)!",
                all(sum(module_dim(l, c) ** 2 for l in module_labels(c)) == factorial(c.n)
                    for c in _contexts(max_n))))
    out.append(("Specht dimensions match hook lengths",
                all(specht_dim(lam) == hook_length_dim(lam) for n in range(1, max_n + 1) for lam in partitions(n))))
    out.append(("annihilator and orbit bases span the algebra",
                all(verify_theorem1(l, c).passed for c in _contexts(min(max_n, 4), cap=2) for l in module_labels(c))))
    return out

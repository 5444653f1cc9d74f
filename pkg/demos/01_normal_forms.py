"""Words, rewriting and the normal-form basis of B_{2,2}.

Run with ``python3 demos/01_normal_forms.py``.
"""

from __future__ import annotations

from walled_brauer import Context, enumerate_basis, genfun, parse_word, reduce
from walled_brauer.words import format_word

ctx = Context(2, 2)
print(f"B_{{2,2}} has generators s1 s2 s3; the wall sits at s{ctx.r}.\n")

print("Squaring the wall generator closes a loop, so a factor of delta appears:")
k, w = reduce(parse_word("s2 s2", ctx), ctx)
print(f"  s2 s2  ->  d^{k} * {format_word(w)}\n")

print("A longer word collapses to a basis word after the staged rewriting:")
word = parse_word("s2 s1 s3 s2 s1 s2 s1 s3 s2", ctx)
k, w = reduce(word, ctx)
print(f"  {format_word(word)}\n  ->  d^{k} * {format_word(w)}\n")

basis = enumerate_basis(ctx)
print(f"The basis has {len(basis)} words, one per permutation of 4 strands.")
by_f: dict[int, list[str]] = {}
for nw in basis:
    by_f.setdefault(nw.f, []).append(format_word(nw.word))
for f, words in sorted(by_f.items()):
    print(f"  {len(words):2d} words with {f} wall arc(s), e.g. {', '.join(words[:4])}")

print("\nCounting basis words by length gives the q-factorial [4]_q!:")
print("  " + " ".join(map(str, genfun(ctx))))

"""Multiplying in B_{2,1} two ways: by rewriting words and by stacking diagrams.

Run with ``python3 demos/02_diagrams_and_products.py``.
"""

from __future__ import annotations

from walled_brauer import Context, compose, normal_word_of, parse_element, word_to_diagram
from walled_brauer.elements import format_element

ctx = Context(2, 1)

a = parse_element("s2 + d*e", ctx)
b = parse_element("s1 s2", ctx)
print(f"a = {format_element(a)}")
print(f"b = {format_element(b)}")
print(f"a * b = {format_element(a * b)}\n")

print("The same product of basis words, computed with diagrams:")
_, top = word_to_diagram((2,), ctx)
_, bottom = word_to_diagram((1, 2), ctx)
print(top.ascii())
print(bottom.ascii())
loops, d = compose(top, bottom)
print(f"stacking gives {loops} closed loop(s) and the diagram of "
      f"{' '.join(f's{x}' for x in normal_word_of(d, ctx)) or 'e'}")
print(d.ascii())

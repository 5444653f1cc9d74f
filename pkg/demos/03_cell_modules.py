"""Cell modules of B_{2,1} and the annihilator of the cyclic vector v_f.

Run with ``python3 demos/03_cell_modules.py``.
"""

from __future__ import annotations

from walled_brauer import Context, X_set, act_element, annihilator, module_dim, module_labels, v_f, verify_theorem1
from walled_brauer.cells import ModuleElement
from walled_brauer.elements import format_element, parse_element

ctx = Context(2, 1)
print("Labels and dimensions (the squares add up to 3! = 6):")
for lab in module_labels(ctx):
    print(f"  {lab}  dim {module_dim(lab, ctx)}")

lab = module_labels(ctx)[-1]
v = ModuleElement.vector(v_f(lab, ctx))
print(f"\nTake {lab}. Its cyclic vector is v = {v}.")
for text in ("s2", "s1", "s2 s1", "s2 - d*e"):
    print(f"  ({text}) v = {act_element(parse_element(text, ctx), v, ctx)}")

print("\nA basis of the annihilator of v:")
for a in annihilator(lab, ctx):
    print(f"  {format_element(a)}")
print(f"and the complementary words X = {[' '.join(f's{x}' for x in w) or 'e' for w in X_set(lab, ctx)]}")

print("\nTogether they form a basis of the algebra:")
for lab in module_labels(ctx):
    print("  " + verify_theorem1(lab, ctx).line())

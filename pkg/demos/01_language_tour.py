"""Tour of the indexing language and formula layer.

Indices are words over the axes with `;` as sequential composition and
`eps` as its unit; modal prefixes expand so each operator carries one
atomic index.
"""

from modalcubes import normalize_index, parse_axiom, parse_formula, parse_index, render
from modalcubes.errors import ParseError

print("== indices ==")
for text in ["eps", "0;1", "0;(1;2)", "eps;(2;eps)"]:
    idx = parse_index(text)
    print(f"  {text!r:14} -> {render(idx)!r}")

print("\n== raw trees normalize the same way ==")
tree = ["eps", [0, ["eps", 1]], 2]
print(f"  {tree!r} -> {render(normalize_index(tree))!r}")

print("\n== composite prefixes expand ==")
for text in ["box_{0;1} A", "dia_eps A", "box_0 dia_{1;1} A"]:
    print(f"  {text!r:22} -> {render(parse_formula(text))!r}")

print("\n== axioms round-trip ==")
ax = parse_axiom("box_1 box_0 A -> box_0 box_1 A")
assert parse_axiom(render(ax)) == ax
print(f"  {render(ax)}")

print("\n== non-deterministic choice is rejected up front ==")
try:
    parse_index("0 cup 1")
except ParseError as e:
    print(f"  {e}")

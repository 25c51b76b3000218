"""Transpositions acting on cells: orbits, relations, flavour changes.

In the symmetric modes the generator s_k swaps axes k and k-1 everywhere:
in index chains, in composition directions, and through the parity
convention of the entwined mode it can turn a necessity axis into a
possibility axis (and so change a cell's kind).
"""

import itertools

from modalcubes import Mode, ModeKind, as_axiom, law, render, render_law
from modalcubes.modlang import ModIndex
from modalcubes.sym import Transposition, act_on_law, act_word, parse_word

sdcmd3 = Mode(ModeKind.SDCMD, 3)

print("== basic actions ==")
d10 = law(sdcmd3, 1, 0)
print(f"  s1({render_law(d10)}) = {render_law(act_on_law(Transposition(1), d10))}")
d211 = law(sdcmd3, 2, ModIndex((1, 1)))
print(f"  s1({render_law(d211)}) = {render_law(act_on_law(Transposition(1), d211))}")
print(f"  s2({render_law(d10)}) = {render_law(act_on_law(Transposition(2), d10))}")

print("\n== acting on the axiom reading ==")
print(f"  before: {render(as_axiom(d211))}")
print(f"  after:  {render(as_axiom(act_on_law(Transposition(1), d211)))}")

print("\n== the braid relation ==")
for i, j in itertools.permutations(range(3), 2):
    d = law(sdcmd3, i, j)
    assert act_word(parse_word("s1,s2,s1"), d) == act_word(parse_word("s2,s1,s2"), d)
print("  s1 s2 s1 = s2 s1 s2 on every atomic cell at three axes")

print("\n== orbit of d[1;0] under the full action ==")
seen = {d10}
frontier = [d10]
while frontier:
    d = frontier.pop()
    for k in (1, 2):
        nd = act_on_law(Transposition(k), d)
        if nd not in seen:
            seen.add(nd)
            frontier.append(nd)
print("  " + ", ".join(sorted(render_law(d) for d in seen)))

print("\n== flavour change in the entwined symmetric mode ==")
sent3 = Mode(ModeKind.SENT, 3)
d = law(sent3, 1, 0)
moved = act_on_law(Transposition(1), d)
print(f"  {render_law(d)} is {d.kind.value}; s1 gives {render_law(moved)}, "
      f"which is {moved.kind.value}")
print(f"  axiom reading: {render(as_axiom(moved))}")

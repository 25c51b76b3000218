"""Law cells and their compositions, at cell level and cube level.

A law cell d[I;J] moves the operator chain I past J.  Composing along a
direction of the moving chain stacks cells (the moving chains concatenate);
composing along a stationary direction pastes them side by side.  The same
compositions exist lazily on cubical cells, where normalization fuses grids
back into single cells and the middle-four interchange holds.
"""

from modalcubes import (
    Mode,
    ModeKind,
    as_axiom,
    compose_dir,
    compose_h,
    law,
    render,
    render_law,
)
from modalcubes.cube import compose, degeneracy, edge, face, interchange_check, law_square, normalize
from modalcubes.modlang import ModIndex

dcmd3 = Mode(ModeKind.DCMD, 3)
d10 = law(dcmd3, 1, 0)

print("== directed composition ==")
print(f"  {render_law(d10)} +_0 {render_law(d10)} = {render_law(compose_dir(d10, d10, 0))}")
print(f"  {render_law(d10)} +_1 {render_law(d10)} = {render_law(compose_dir(d10, d10, 1))}")

sdcmd3 = Mode(ModeKind.SDCMD, 3)
d01, d02 = law(sdcmd3, 0, 1), law(sdcmd3, 0, 2)
print(f"  {render_law(d01)} +_1 {render_law(d02)} = {render_law(compose_dir(d01, d02, 1))}")

print("\n== every cell reads as an axiom ==")
for cell in (d10, compose_dir(d10, d10, 0), law(Mode(ModeKind.SENT, 3), 2, 1)):
    print(f"  {render_law(cell):12} |- {render(as_axiom(cell))}")

print("\n== whiskered composite with its explicit two-cell term ==")
out = compose_h(law(dcmd3, 2, 0), law(dcmd3, 2, 1))
print(f"  label: {render_law(out.cell)}")
print(f"  term:  {out.term}")

print("\n== cubes: faces, degeneracies, fusion ==")
sq = law_square(d10)
print(f"  face({sq}, 1, -) = {face(sq, 1, '-')}")
unit = degeneracy(edge(dcmd3, 1), 0)
comp = compose(unit, sq, 0)
print(f"  {comp} normalizes to {normalize(comp)}")

print("\n== middle-four interchange on a 2x2 grid ==")
grid_ok = interchange_check(sq, sq, sq, sq, 0, 1)
print(f"  four copies of {render_law(d10)}: interchange holds: {grid_ok}")
big = compose(compose(sq, sq, 0), compose(sq, sq, 0), 1)
print(f"  normalized grid: {normalize(big)}")
assert normalize(big) == law_square(
    law(dcmd3, ModIndex((1, 1)), ModIndex((0, 0)))
)

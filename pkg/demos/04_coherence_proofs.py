"""Machine-checked coherence: composites of laws are again laws.

`verify_law` instantiates the defining diagrams of a cell's kind and hunts
for a rewrite path between the two legs of each diagram.  Every `equal`
verdict carries a replayable trace.
"""

from modalcubes import Mode, ModeKind, compose_h, compose_v, law, render_law, unit_square_v
from modalcubes import paste
from modalcubes.modlang import ModIndex

dcmd3 = Mode(ModeKind.DCMD, 3)
dmnd3 = Mode(ModeKind.DMND, 3)
ent4 = Mode(ModeKind.ENT, 4)


def show(label, composite):
    report = paste.verify_law(composite, bound=12)
    print(f"  {label}: {render_law(composite.cell)}")
    for diag in report.diagrams:
        steps = len(diag.result.path)
        print(f"    {diag.name}: equal in {steps} rewrite steps")
        for rule in diag.result.path:
            print(f"      {rule}")


print("== composites of necessity laws ==")
show("side-by-side", compose_h(law(dcmd3, 2, 0), law(dcmd3, 2, 1)))
show("stacked", compose_v(law(dcmd3, 2, 0), law(dcmd3, 1, 0)))

print("\n== possibility duals ==")
show("side-by-side", compose_h(law(dmnd3, 2, 0), law(dmnd3, 2, 1)))

print("\n== an entwining composite (possibility past two necessities) ==")
show("side-by-side", compose_h(law(ent4, 3, 0), law(ent4, 3, 2)))

print("\n== replaying a proof trace ==")
out = compose_h(law(dcmd3, 2, 0), law(dcmd3, 2, 1))
report = paste.verify_law(out, bound=12)
diag = report.diagrams[1]
leg1 = paste.vcomp(
    out.term,
    paste.make_term(paste.target_of(out.term), (paste.Layer(2, paste.Comult(2)),)),
)
res = paste.check_equal(
    leg1,
    paste.vcomp(
        paste.vcomp(
            paste.make_term(out.term.source, (paste.Layer(0, paste.Comult(2)),)),
            paste.whisker(out.term, left=paste.boxes(2)),
        ),
        paste.whisker(out.term, right=paste.boxes(2)),
    ),
)
replayed = paste.replay(leg1, res.path, res.law_gens)
print(f"  path of length {len(res.path)} replays to the target term: "
      f"{paste.target_of(replayed) == paste.target_of(leg1)}")

print("\n== three modalities: both pasting orders agree ==")
d20, d10 = law(dcmd3, 2, 0), law(dcmd3, 1, 0)
side1 = compose_v(compose_h(d20, unit_square_v(dcmd3, 2)), d10)
side2 = compose_h(compose_v(d20, d10), unit_square_v(dcmd3, ModIndex((2, 1))))
res = paste.check_equal(side1.term, side2.term, bound=12)
print(f"  {render_law(side1.cell)} both ways: equal={res.equal} "
      f"({len(res.path)} steps needed)")

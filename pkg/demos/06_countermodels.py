"""The semantic oracle: finite frames, correspondence, countermodels.

Axioms with a confluence-schema form are mirrored by a first-order frame
condition; on small frames the implication "condition holds => axiom valid"
is checked exhaustively.  Axioms outside the derivable fragment fall to tiny
countermodels.
"""

from modalcubes import Mode, ModeKind, render
from modalcubes.axioms import GeachAxiom, generate, geach_to_sentence
from modalcubes.kripke import (
    countermodel_search,
    eval_formula,
    frame,
    frames_upto,
    geach_condition,
    valid_on,
)
from modalcubes.modlang import EPS, ModIndex, parse_axiom, parse_formula

print("== evaluation ==")
fr = frame(2, [(0, 1), (1, 1)])
val = {1}
for text in ["A", "box_0 A", "dia_0 A", "box_0 box_0 A"]:
    f = parse_formula(text)
    print(f"  {text:14} at world 0: {eval_formula(f, fr, val, 0)}")

print("\n== reflexivity corresponds to its frame condition ==")
g = GeachAxiom(EPS, ModIndex((0,)), EPS, EPS)
sent = geach_to_sentence(g)
agree = all(
    geach_condition(fr, g) == valid_on(sent, fr) for fr in frames_upto(3, 1)
)
print(f"  {render(sent)}: condition <=> validity on every frame with <= 3 "
      f"worlds: {agree}")

print("\n== derived axioms respect their conditions ==")
mode = Mode(ModeKind.ENT, 2)
axs = [ax for ax in generate(mode, 2) if ax.geach and ax.sentence.lhs != ax.sentence.rhs]
checked = 0
for fr in frames_upto(2, 2):
    for ax in axs:
        if geach_condition(fr, ax.geach):
            assert valid_on(ax.sentence, fr)
            checked += 1
print(f"  {len(axs)} axioms x 260 frames: {checked} condition hits, no violations")

print("\n== countermodels for the non-derivable directions ==")
for text in [
    "box_0 A -> A",
    "box_0 A -> box_0 box_0 A",
    "box_0 dia_1 A -> dia_1 box_0 A",
]:
    cm = countermodel_search(parse_axiom(text), 3)
    rels = {i: sorted(rel) for i, rel in enumerate(cm.frame.relations)}
    print(f"  {text}")
    print(f"    falsified on {cm.frame.worlds} world(s), relations {rels}, "
          f"A true at {sorted(cm.valuation)}, at world {cm.world}")

print("\n== and none for a tautology ==")
print(f"  box_0 A -> box_0 A: "
      f"{countermodel_search(parse_axiom('box_0 A -> box_0 A'), 3)}")

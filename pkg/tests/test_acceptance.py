"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines and
timings.
"""

import itertools
import random
import time
from contextlib import contextmanager

from modalcubes import (
    LawKind,
    Mode,
    ModeKind,
    classify,
    compose_dir,
    compose_h,
    compose_v,
    law,
    render,
    unit_square_v,
)
from modalcubes import kripke, paste
from modalcubes.axioms import diff_against_reference, generate
from modalcubes.cube import compose, interchange_check, normalize
from modalcubes.errors import CompositionError
from modalcubes.modlang import ModIndex, parse_axiom
from modalcubes.sym import Transposition, act_on_cube, act_on_law, act_word

import randgen


@contextmanager
def criterion(number: int, label: str, limit: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {number}: {label}")
        raise
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        print(f"FAIL criterion {number}: {label} ({elapsed:.1f}s over {limit:.0f}s budget)")
        raise AssertionError(f"criterion {number} exceeded its {limit:.0f}s budget")
    print(f"PASS criterion {number}: {label} ({elapsed:.1f}s)")


def test_criterion_1_reference_tables_reproduced():
    with criterion(1, "reference axiom tables reproduced with exactly two flags", 10.0):
        for arity in (2, 3):
            flagged = []
            for kind in ModeKind:
                report = diff_against_reference(Mode(kind, arity), depth=2)
                for t in report.templates:
                    unmatched = [i.sentence for i in t.instances if not i.matched]
                    assert not unmatched, (kind, arity, t.family, unmatched)
                    if t.flagged:
                        flagged.append((kind, t.family.value))
            assert flagged == [
                (ModeKind.SDCMD, "composition"),
                (ModeKind.SDMND, "composition"),
            ], flagged


def test_criterion_2_worked_composition_values():
    with criterion(2, "the four worked composition/transposition values are exact"):
        dcmd3 = Mode(ModeKind.DCMD, 3)
        d10 = law(dcmd3, 1, 0)
        assert compose_dir(d10, d10, 0) == law(dcmd3, 1, ModIndex((0, 0)))

        sdcmd3 = Mode(ModeKind.SDCMD, 3)
        assert compose_dir(
            law(sdcmd3, 0, 1), law(sdcmd3, 0, 2), 1
        ) == law(sdcmd3, 0, ModIndex((2, 1)))

        sdcmd2 = Mode(ModeKind.SDCMD, 2)
        assert act_on_law(Transposition(1), law(sdcmd2, 1, 0)) == law(sdcmd2, 0, 1)

        assert act_on_law(
            Transposition(1), law(sdcmd3, 2, ModIndex((1, 1)))
        ) == law(sdcmd3, 2, ModIndex((0, 0)))


def test_criterion_3_group_action_relations():
    with criterion(3, "involution/braid/commutation on 10000 cells+cubes, "
                      "equivariance on 1000 pairs", 30.0):
        rng = random.Random(20240809)
        sym_modes = [
            Mode(kind, arity)
            for kind in randgen.SYM
            for arity in (2, 3, 4)
        ]
        for step in range(10_000):
            mode = sym_modes[step % len(sym_modes)]
            n = mode.arity
            ks = list(range(1, n))
            if step % 5 == 4:
                # cube with a composite in it
                a, b, c, d, i, j = randgen.rand_grid(rng, mode)
                obj = compose(a, b, i)
                k = rng.choice(ks)
                s = Transposition(k)
                assert act_on_cube(s, act_on_cube(s, obj)) == obj
                if n >= 3:
                    k = rng.choice(ks[:-1])
                    w1 = (Transposition(k), Transposition(k + 1), Transposition(k))
                    w2 = (Transposition(k + 1), Transposition(k), Transposition(k + 1))
                    assert act_word(w1, obj) == act_word(w2, obj)
                if n >= 4:
                    assert act_word(
                        (Transposition(1), Transposition(3)), obj
                    ) == act_word((Transposition(3), Transposition(1)), obj)
            else:
                max_len = 1 if mode.kind is ModeKind.SENT else 2
                cell = randgen.rand_law_cell(rng, mode, max_len)
                k = rng.choice(ks)
                s = Transposition(k)
                assert act_on_law(s, act_on_law(s, cell)) == cell
                if n >= 3:
                    k = rng.choice(ks[:-1])
                    w1 = (Transposition(k), Transposition(k + 1), Transposition(k))
                    w2 = (Transposition(k + 1), Transposition(k), Transposition(k + 1))
                    assert act_word(w1, cell) == act_word(w2, cell)
                if n >= 4:
                    assert act_word(
                        (Transposition(1), Transposition(3)), cell
                    ) == act_word((Transposition(3), Transposition(1)), cell)

        pairs = 0
        while pairs < 1_000:
            mode = sym_modes[pairs % len(sym_modes)]
            max_len = 1 if mode.kind is ModeKind.SENT else 2
            d1, d2, direction = randgen.rand_composable_pair(rng, mode, max_len)
            try:
                comp = compose_dir(d1, d2, direction)
            except CompositionError:
                continue
            s = Transposition(rng.randint(1, mode.arity - 1))
            try:
                lhs = act_on_law(s, comp)
                rhs = compose_dir(
                    act_on_law(s, d1), act_on_law(s, d2), s.apply(direction)
                )
            except CompositionError:
                continue  # sent-mode action left its flavour class
            assert lhs == rhs
            pairs += 1


def test_criterion_4_interchange_on_random_grids():
    with criterion(4, "middle-four interchange on 1000 grids per mode"):
        rng = random.Random(20240810)
        for kind in (ModeKind.DCMD, ModeKind.DMND, ModeKind.ENT):
            for count in range(1_000):
                mode = Mode(kind, 2 + count % 3)
                a, b, c, d, i, j = randgen.rand_grid(rng, mode)
                assert interchange_check(a, b, c, d, i, j), (kind, count)


def test_criterion_5_coherence_of_composites():
    with criterion(5, "defining diagrams hold for all composite instances", 60.0):
        dcmd3 = Mode(ModeKind.DCMD, 3)
        dmnd3 = Mode(ModeKind.DMND, 3)
        ent4 = Mode(ModeKind.ENT, 4)

        instances = [
            # box laws: side-by-side and stacked
            compose_h(law(dcmd3, 2, 0), law(dcmd3, 2, 1)),
            compose_v(law(dcmd3, 2, 0), law(dcmd3, 1, 0)),
            # diamond duals
            compose_h(law(dmnd3, 2, 0), law(dmnd3, 2, 1)),
            compose_v(law(dmnd3, 2, 0), law(dmnd3, 1, 0)),
            # entwining composite: one possibility past two necessities
            compose_h(law(ent4, 3, 0), law(ent4, 3, 2)),
        ]
        for composite in instances:
            report = paste.verify_law(composite, bound=12)
            assert report.diagrams, composite.cell
            for diag in report.diagrams:
                assert diag.result.equal, (str(composite.cell), diag.name,
                                           diag.result.reason)

        # three-modality pasting: both associations give the same two-cell
        d20, d10 = law(dcmd3, 2, 0), law(dcmd3, 1, 0)
        side1 = compose_v(compose_h(d20, unit_square_v(dcmd3, 2)), d10)
        side2 = compose_h(
            compose_v(d20, d10), unit_square_v(dcmd3, ModIndex((2, 1)))
        )
        assert side1.cell == side2.cell == law(dcmd3, ModIndex((2, 1)), 0)
        res = paste.check_equal(side1.term, side2.term, bound=12)
        assert res.equal
        report = paste.verify_law(side1, bound=12)
        for diag in report.diagrams:
            assert diag.result.equal, diag.name


def test_criterion_6_semantic_soundness():
    with criterion(6, "schema condition implies validity on all small frames; "
                      "countermodels found", 120.0):
        pairs = {}
        for kind in ModeKind:
            for ax in generate(Mode(kind, 2), 2):
                if ax.geach is None:
                    continue
                if any(len(s) > 2 for s in
                       (ax.geach.a, ax.geach.b, ax.geach.c, ax.geach.d)):
                    continue
                pairs[render(ax.sentence)] = (ax.geach, ax.sentence)
        assert len(pairs) > 20
        frames, hits, violations = kripke.soundness_sweep(
            sorted(pairs.values(), key=lambda p: render(p[1])), 3, 2
        )
        assert frames == 4 + 256 + 262_144
        assert hits > 0
        assert violations == [], violations[:3]

        cm = kripke.countermodel_search(parse_axiom("box_0 A -> A"), 3)
        assert cm is not None and cm.frame.worlds <= 3
        cm = kripke.countermodel_search(
            parse_axiom("box_0 dia_1 A -> dia_1 box_0 A"), 3
        )
        assert cm is not None and cm.frame.worlds <= 3


def test_criterion_7_classification_totality():
    with criterion(7, "flavour classification total and exact up to eight axes"):
        table = {
            (0, 0): LawKind.BOX_BOX,
            (1, 0): LawKind.DIA_BOX,
            (0, 1): LawKind.BOX_DIA,
            (1, 1): LawKind.DIA_DIA,
        }
        for n in range(2, 9):
            for mode in (Mode(ModeKind.ENT, n), Mode(ModeKind.SENT, n)):
                pairs = (
                    [(i, j) for i in range(n) for j in range(i + 1)]
                    if not mode.symmetric
                    else [(i, j) for i in range(n) for j in range(n)]
                )
                for i, j in pairs:
                    kinds = {classify(i, j, mode)}
                    assert len(kinds) == 1
                    assert kinds.pop() is table[(i % 2, j % 2)]

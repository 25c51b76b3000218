import random

import pytest

from modalcubes import (
    LawKind,
    Mode,
    ModeKind,
    compose_h,
    compose_v,
    law,
    unit_square_v,
)
from modalcubes import paste
from modalcubes.errors import ChainError, CompositionError
from modalcubes.modlang import ModIndex, OpKind
from modalcubes.paste import (
    Comult,
    Counit,
    Layer,
    LawGen,
    Mult,
    Term,
    Unit,
    boxes,
    check_equal,
    chains_of,
    dias,
    gen_term,
    make_term,
    replay,
    target_of,
    term_of_law,
    vcomp,
    verify_law,
    whisker,
)

DCMD3 = Mode(ModeKind.DCMD, 3)
DCMD4 = Mode(ModeKind.DCMD, 4)
DMND3 = Mode(ModeKind.DMND, 3)
ENT4 = Mode(ModeKind.ENT, 4)


def test_generator_chains():
    assert Counit(0).src == boxes(0) and Counit(0).tgt == ()
    assert Comult(1).tgt == boxes(1, 1)
    assert Unit(2).src == () and Unit(2).tgt == dias(2)
    assert Mult(2).src == dias(2, 2)
    lg = LawGen(3, 0, LawKind.DIA_BOX)
    assert lg.src == ((OpKind.DIA, 3), (OpKind.BOX, 0))
    assert lg.tgt == ((OpKind.BOX, 0), (OpKind.DIA, 3))


def test_make_term_validates():
    with pytest.raises(ChainError):
        make_term(boxes(0), (Layer(0, Counit(1)),))
    with pytest.raises(ChainError):
        make_term(boxes(0), (Layer(2, Counit(0)),))
    t = make_term(boxes(1, 0), (Layer(0, LawGen(1, 0, LawKind.BOX_BOX)),))
    assert target_of(t) == boxes(0, 1)


def test_vcomp_and_whisker():
    t = gen_term(Counit(0))
    w = whisker(t, left=boxes(1), right=dias(3))
    assert w.source == boxes(1, 0) + dias(3)
    assert w.layers[0].pos == 1
    with pytest.raises(ChainError):
        vcomp(gen_term(Counit(0)), gen_term(Counit(0)))


def test_term_of_law_composite():
    d = law(DCMD4, ModIndex((3, 2)), ModIndex((1, 0)))
    t = term_of_law(d)
    assert t.source == boxes(3, 2, 1, 0)
    assert target_of(t) == boxes(1, 0, 3, 2)
    assert t.layers == (
        Layer(1, LawGen(2, 1, LawKind.BOX_BOX)),
        Layer(2, LawGen(2, 0, LawKind.BOX_BOX)),
        Layer(0, LawGen(3, 1, LawKind.BOX_BOX)),
        Layer(1, LawGen(3, 0, LawKind.BOX_BOX)),
    )


class TestCheckEqual:
    def test_reflexive(self):
        t = term_of_law(law(DCMD3, 2, 0))
        res = check_equal(t, t)
        assert res.equal and res.path == ()

    def test_chain_mismatch(self):
        with pytest.raises(ChainError):
            check_equal(gen_term(Counit(0)), gen_term(Counit(1)))

    def test_symmetric(self):
        d = law(DCMD3, 2, 0)
        t1 = vcomp(term_of_law(d), make_term(boxes(0, 2), (Layer(0, Counit(0)),)))
        t2 = make_term(boxes(2, 0), (Layer(1, Counit(0)),))
        assert check_equal(t1, t2, bound=2).equal
        assert check_equal(t2, t1, bound=2).equal

    def test_counit_cancellation_and_replay(self):
        # comult then counit on the same axis is the identity
        t1 = make_term(boxes(0), (Layer(0, Comult(0)), Layer(0, Counit(0))))
        t2 = Term(boxes(0), ())
        res = check_equal(t1, t2, bound=2)
        assert res.equal
        assert replay(t1, res.path, res.law_gens) == t2
        res2 = check_equal(t2, t1, bound=2)
        assert res2.equal
        assert replay(t2, res2.path, res2.law_gens) == t1

    def test_exchange_of_disjoint_layers(self):
        t1 = make_term(boxes(0), (Layer(0, Counit(0)), Layer(0, Unit(1))))
        t2 = make_term(boxes(0), (Layer(1, Unit(1)), Layer(0, Counit(0))))
        res = check_equal(t1, t2, bound=2)
        assert res.equal and len(res.path) == 1
        assert res.path[0][0] == "exchange"

    def test_not_proven_within_bound(self):
        # counit on different axes of box_0 box_1: genuinely different cells
        t1 = make_term(boxes(0, 0), (Layer(0, Counit(0)),))
        t2 = make_term(boxes(0, 0), (Layer(1, Counit(0)),))
        res = check_equal(t1, t2, bound=2, max_states=2000)
        assert not res.equal
        assert res.path is None

    def test_whisker_closure(self):
        d20, d21 = law(DCMD3, 2, 0), law(DCMD3, 2, 1)
        out = compose_h(d20, d21)
        rep = verify_law(out, bound=12)
        for diag in rep.diagrams:
            assert diag.result.equal
        # re-run the counit diagram under extra whiskering
        t = out.term
        leg1 = vcomp(t, make_term(target_of(t), (Layer(2, Counit(2)),)))
        leg2 = make_term(t.source, (Layer(0, Counit(2)),))
        res = check_equal(leg1, leg2)
        assert res.equal
        wleg1 = whisker(leg1, left=boxes(1), right=boxes(0))
        wleg2 = whisker(leg2, left=boxes(1), right=boxes(0))
        wres = check_equal(wleg1, wleg2)
        assert wres.equal

    def test_replay_reconstructs_across_meet(self):
        d20, d21 = law(DCMD3, 2, 0), law(DCMD3, 2, 1)
        out = compose_h(d20, d21)
        t = out.term
        leg1 = vcomp(t, make_term(target_of(t), (Layer(2, Comult(2)),)))
        leg2 = vcomp(
            vcomp(make_term(t.source, (Layer(0, Comult(2)),)), whisker(t, left=boxes(2))),
            whisker(t, right=boxes(2)),
        )
        res = check_equal(leg1, leg2)
        assert res.equal and len(res.path) >= 2
        assert replay(leg1, res.path, res.law_gens) == leg2


class TestVerifyLaw:
    @pytest.mark.parametrize(
        "mode,i,j",
        [(DCMD3, 2, 0), (DMND3, 2, 0), (ENT4, 3, 0), (ENT4, 2, 1), (ENT4, 3, 1), (ENT4, 2, 0)],
    )
    def test_single_generators_one_step(self, mode, i, j):
        rep = verify_law(law(mode, i, j), bound=2)
        assert rep.ok
        for diag in rep.diagrams:
            assert len(diag.result.path) <= 1

    def test_unit_square_trivially_a_law(self):
        rep = verify_law(unit_square_v(DCMD3, 1), bound=1)
        assert rep.ok
        for diag in rep.diagrams:
            assert diag.result.path == ()

    def test_horizontal_composite_is_a_law(self):
        out = compose_h(law(DCMD3, 2, 0), law(DCMD3, 2, 1))
        rep = verify_law(out, bound=12)
        assert rep.ok
        names = [d.name for d in rep.diagrams]
        assert names == ["moving-counit", "moving-comult"]

    def test_vertical_composite_is_a_law(self):
        out = compose_v(law(DCMD3, 2, 0), law(DCMD3, 1, 0))
        rep = verify_law(out, bound=12)
        assert rep.ok
        names = [d.name for d in rep.diagrams]
        assert names == ["fixed-counit", "fixed-comult"]

    def test_shape_mismatch(self):
        t = gen_term(Counit(0))
        with pytest.raises(CompositionError):
            verify_law(t, LawKind.BOX_BOX)


class TestMiddleFourAtTermLevel:
    def test_grid_both_ways(self):
        # rows move box_2 (top) and box_3 (bottom); columns fix box_0, box_1
        top = compose_h(law(DCMD4, 2, 0), law(DCMD4, 2, 1))
        bottom = compose_h(law(DCMD4, 3, 0), law(DCMD4, 3, 1))
        left = compose_v(law(DCMD4, 3, 0), law(DCMD4, 2, 0))
        right = compose_v(law(DCMD4, 3, 1), law(DCMD4, 2, 1))
        rowfirst = compose_v(bottom, top)
        colfirst = compose_h(left, right)
        assert rowfirst.cell == colfirst.cell
        res = check_equal(rowfirst.term, colfirst.term, bound=6)
        assert res.equal

    def test_three_modality_associativity(self):
        d20 = law(DCMD3, 2, 0)
        d10 = law(DCMD3, 1, 0)
        side1 = compose_v(compose_h(d20, unit_square_v(DCMD3, 2)), d10)
        side2 = compose_h(compose_v(d20, d10), unit_square_v(DCMD3, ModIndex((2, 1))))
        assert side1.cell == side2.cell == law(DCMD3, ModIndex((2, 1)), 0)
        res = check_equal(side1.term, side2.term, bound=6)
        assert res.equal


def test_rule_applications_preserve_boundaries():
    rng = random.Random(7)
    for _ in range(20):
        d = law(DCMD3, 2, rng.choice([0, 1]))
        t = term_of_law(compose_dirish(d))
        src, tgt = t.source, target_of(t)
        for step, nt in paste._neighbors(t, paste.law_gens_of(t)):
            assert nt.source == src
            assert target_of(nt) == tgt


def compose_dirish(d):
    from modalcubes import compose_dir

    return compose_dir(d, d, d.right.atoms[0])

import itertools
import random

import pytest

from modalcubes import Mode, ModeKind, law, render
from modalcubes.axioms import (
    AxiomFamily,
    GeachAxiom,
    WGen,
    WLaw,
    classify,
    diff_against_reference,
    generate,
    geach_to_sentence,
    replay,
    seed_cells,
    sentence_of_term,
    sentence_to_geach,
    witness_to_json,
)
from modalcubes.modlang import EPS, ModIndex, parse_axiom

DCMD2 = Mode(ModeKind.DCMD, 2)
DCMD3 = Mode(ModeKind.DCMD, 3)
SDCMD3 = Mode(ModeKind.SDCMD, 3)
DMND2 = Mode(ModeKind.DMND, 2)
SDMND3 = Mode(ModeKind.SDMND, 3)
ENT2 = Mode(ModeKind.ENT, 2)
ENT3 = Mode(ModeKind.ENT, 3)
SENT2 = Mode(ModeKind.SENT, 2)

ALL_MODES_23 = [
    Mode(kind, arity) for kind in ModeKind for arity in (2, 3)
]


def idx(*atoms: int) -> ModIndex:
    return ModIndex(atoms)


class TestGeach:
    def test_to_sentence_examples(self):
        g = GeachAxiom(EPS, idx(0), EPS, EPS)
        assert render(geach_to_sentence(g)) == "box_0 A -> A"
        g = GeachAxiom(EPS, idx(0), idx(0, 0), EPS)
        assert render(geach_to_sentence(g)) == "box_0 A -> box_0 box_0 A"
        g = GeachAxiom(idx(1), idx(0), idx(0), idx(1))
        assert render(geach_to_sentence(g)) == "dia_1 box_0 A -> box_0 dia_1 A"

    def test_eps_modalities_vanish(self):
        g = GeachAxiom(EPS, EPS, EPS, EPS)
        assert render(geach_to_sentence(g)) == "A -> A"

    def test_round_trip_on_one_sided_sentences(self):
        for sent in (
            "box_1 box_0 A -> box_0 box_1 A",
            "dia_1 dia_0 A -> dia_0 dia_1 A",
            "box_0 A -> A",
            "A -> dia_1 A",
        ):
            ax = parse_axiom(sent)
            g = sentence_to_geach(ax)
            assert g is not None
            assert geach_to_sentence(g) == ax

    def test_mckinsey_form_has_no_geach(self):
        assert sentence_to_geach(parse_axiom("box_0 dia_1 A -> dia_1 box_0 A")) is None
        assert sentence_to_geach(parse_axiom("box_0 A -> dia_1 box_0 A")) is None


class TestClassify:
    @pytest.mark.parametrize(
        "sent,family",
        [
            ("box_0 A -> A", AxiomFamily.REFLEXIVITY),
            ("A -> dia_1 A", AxiomFamily.REFLEXIVITY),
            ("box_0 A -> box_0 box_0 A", AxiomFamily.TRANSITIVITY),
            ("dia_1 dia_1 A -> dia_1 A", AxiomFamily.TRANSITIVITY),
            ("box_1 box_0 A -> box_0 box_1 A", AxiomFamily.RESTRICTED_PERSISTENCY),
            ("box_1 box_0 A -> box_0 A", AxiomFamily.COMPOSITION),
            ("dia_1 A -> dia_0 dia_1 A", AxiomFamily.COMPOSITION),
            ("dia_1 box_0 A -> box_0 dia_1 A", AxiomFamily.COMPOSITION),
            ("box_0 A -> dia_1 A", AxiomFamily.SERIALITY),
            ("box_0 dia_1 A -> dia_1 box_0 A", AxiomFamily.MCKINSEY),
            ("box_0 box_0 A -> box_0 box_0 A", AxiomFamily.K),
            ("dia_1 box_0 A -> dia_1 A", AxiomFamily.UNNAMED),
            ("box_0 A -> dia_1 box_0 A", AxiomFamily.UNNAMED),
        ],
    )
    def test_families(self, sent, family):
        assert classify(parse_axiom(sent)) is family

    def test_symmetric_flag_switches_persistency(self):
        ax = parse_axiom("box_1 box_0 A -> box_0 box_1 A")
        assert classify(ax, symmetric=True) is AxiomFamily.GENERAL_PERSISTENCY

    def test_unnamed_with_geach(self):
        ax = parse_axiom("dia_1 box_0 A -> dia_1 A")
        assert classify(ax) is AxiomFamily.UNNAMED
        assert sentence_to_geach(ax) == GeachAxiom(idx(1), idx(0), EPS, idx(1))


class TestSeeds:
    def test_nonsymmetric_seed_cells(self):
        cells = seed_cells(DCMD3)
        assert {(c.left.atoms, c.right.atoms) for c in cells} == {
            ((1,), (0,)),
            ((2,), (0,)),
            ((2,), (1,)),
        }

    def test_symmetric_seed_cells_all_pairs(self):
        cells = seed_cells(SDCMD3)
        assert len(cells) == 6


class TestGenerate:
    def test_dcmd_contains_persistency(self):
        sentences = {render(ax.sentence) for ax in generate(DCMD2, 2)}
        assert "box_1 box_0 A -> box_0 box_1 A" in sentences
        assert "box_0 A -> A" in sentences
        assert "box_1 A -> box_1 box_1 A" in sentences

    def test_sent_contains_mckinsey(self):
        sentences = {render(ax.sentence) for ax in generate(SENT2, 2)}
        assert "box_0 dia_1 A -> dia_1 box_0 A" in sentences
        assert "box_0 A -> dia_1 box_0 A" in sentences

    def test_dmnd_persistency_respects_order(self):
        axs = {render(ax.sentence): ax for ax in generate(DMND2, 2)}
        ax = axs["dia_1 dia_0 A -> dia_0 dia_1 A"]
        assert ax.witness == WLaw(law(DMND2, 1, 0))
        # the mirrored instance needs a transposition, absent in this mode
        assert "dia_0 dia_1 A -> dia_1 dia_0 A" not in axs

    def test_ent_box_contents(self):
        sentences = {render(ax.sentence) for ax in generate(ENT2, 2)}
        assert "box_0 A -> dia_1 A" in sentences  # seriality
        assert "dia_1 box_0 A -> box_0 dia_1 A" in sentences
        assert "dia_1 box_0 A -> dia_1 A" in sentences

    def test_monotone_in_depth(self):
        for mode in (DCMD2, SDCMD3, ENT3):
            prev: set[str] = set()
            for depth in (0, 1, 2):
                cur = {render(ax.sentence) for ax in generate(mode, depth)}
                assert prev <= cur
                prev = cur

    def test_witness_replay(self):
        for mode in ALL_MODES_23:
            for ax in generate(mode, 2):
                term = replay(ax.witness, mode)
                assert sentence_of_term(term) == ax.sentence

    def test_witness_depths(self):
        axs = {render(ax.sentence): ax for ax in generate(ENT2, 2)}
        assert axs["dia_1 box_0 A -> box_0 dia_1 A"].depth == 0
        assert axs["box_0 A -> dia_1 A"].depth == 1  # counit pasted with unit
        assert axs["dia_1 box_0 A -> dia_1 A"].depth == 1  # whiskered counit

    def test_symmetric_closure_under_relabelling(self):
        from modalcubes.modlang import AxiomSentence, Formula

        axs = generate(SDCMD3, 2)
        sentences = {render(ax.sentence) for ax in axs}
        rng = random.Random(5)
        perms = list(itertools.permutations(range(3)))
        for ax in axs:
            perm = rng.choice(perms)
            lhs = tuple((k, perm[a]) for k, a in ax.sentence.lhs.prefix)
            rhs = tuple((k, perm[a]) for k, a in ax.sentence.rhs.prefix)
            assert render(AxiomSentence(Formula(lhs), Formula(rhs))) in sentences

    def test_nonsymmetric_moving_index_dominates(self):
        for mode in (DCMD3, DMND2, ENT3):
            for ax in generate(mode, 2):
                fam = ax.family
                if fam is AxiomFamily.RESTRICTED_PERSISTENCY:
                    (k1, a1), (k2, a2) = ax.sentence.lhs.prefix
                    assert a1 > a2

    def test_deterministic(self):
        assert generate(SDCMD3, 2) == generate(SDCMD3, 2)

    def test_witness_json_shape(self):
        for ax in generate(ENT2, 2)[:10]:
            data = witness_to_json(ax.witness)
            assert isinstance(data, dict) and "op" in data


class TestDiff:
    def test_dcmd_all_matched_no_flags(self):
        rep = diff_against_reference(DCMD2)
        assert rep.ok
        assert rep.flags == ()
        assert len(rep.templates) == 3

    def test_flagged_templates(self):
        rep = diff_against_reference(Mode(ModeKind.SDCMD, 2))
        assert [t.family for t in rep.flags] == [AxiomFamily.COMPOSITION]
        assert rep.ok  # flagged entry still matched on its label side
        rep = diff_against_reference(Mode(ModeKind.SDMND, 2))
        assert [t.family for t in rep.flags] == [AxiomFamily.COMPOSITION]
        assert rep.ok

    def test_sdcmd_flag_is_the_ill_formed_printing(self):
        rep = diff_against_reference(Mode(ModeKind.SDCMD, 2))
        (flag,) = rep.flags
        assert "not well-formed" in flag.flagged
        # the engine matches the schema-label reading
        assert flag.instances[0].sentence == "box_1 box_0 A -> box_0 A"

    def test_sdmnd_flag_keeps_printed_side(self):
        rep = diff_against_reference(Mode(ModeKind.SDMND, 2))
        (flag,) = rep.flags
        targets = {i.sentence for i in flag.instances}
        assert targets == {"dia_0 A -> dia_1 dia_0 A", "dia_1 A -> dia_0 dia_1 A"}
        # the label instantiation is not derivable and must stay absent
        produced = {render(ax.sentence) for ax in generate(Mode(ModeKind.SDMND, 2), 2)}
        assert "dia_1 dia_0 A -> dia_0 A" not in produced

    @pytest.mark.parametrize("kind", list(ModeKind))
    @pytest.mark.parametrize("arity", [2, 3])
    def test_all_boxes_reproduced(self, kind, arity):
        rep = diff_against_reference(Mode(kind, arity))
        assert rep.ok, [
            (t.family.value, [i.sentence for i in t.instances if not i.matched])
            for t in rep.templates
            if not t.all_matched
        ]

    def test_report_json(self):
        rep = diff_against_reference(ENT2)
        data = rep.to_json()
        assert data["mode"] == "ent"
        assert {t["family"] for t in data["templates"]} == {
            "seriality",
            "composition",
            "unnamed",
        }

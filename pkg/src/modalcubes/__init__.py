"""Derivation engine for multimodal axiom systems.

Modal operators are arranged as directions of cubes; swap cells between them
(distributive and entwining laws) compose, transpose under the symmetric
group, and read off as implication schemata over a single atom.  A pasting
checker verifies that composites again satisfy their defining diagrams, and
a finite Kripke-frame oracle cross-checks the axioms semantically.
"""

from .modes import Mode, ModeKind, mode_from_string
from .modlang import (
    AxiomSentence,
    EPS,
    Formula,
    ModIndex,
    OpKind,
    normalize_index,
    parse_axiom,
    parse_formula,
    parse_index,
    render,
)
from .dlaw import (
    ComposedLaw,
    LawCell,
    LawKind,
    SpecialCell,
    as_axiom,
    classify,
    compose_dir,
    compose_h,
    compose_v,
    identity_square,
    law,
    parse_law,
    render_law,
    unit_square_h,
    unit_square_v,
)

__all__ = [
    "AxiomSentence",
    "ComposedLaw",
    "EPS",
    "Formula",
    "LawCell",
    "LawKind",
    "ModIndex",
    "Mode",
    "ModeKind",
    "OpKind",
    "SpecialCell",
    "as_axiom",
    "classify",
    "compose_dir",
    "compose_h",
    "compose_v",
    "identity_square",
    "law",
    "mode_from_string",
    "normalize_index",
    "parse_axiom",
    "parse_formula",
    "parse_index",
    "parse_law",
    "render",
    "render_law",
    "unit_square_h",
    "unit_square_v",
]

__version__ = "0.1.0"

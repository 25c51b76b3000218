"""Law cells: the swap 2-cells between composed modal operators.

A law cell moves one operator chain past another:

    d[I;J] : M_I M_J -> M_J M_I

``I`` is the moving chain, ``J`` the stationary one.  The cell's kind says
which flavours are involved: box past box, diamond past diamond, or the two
mixed (entwining) variants.  In the entwined modes the kind is forced by the
parity of the axes; in the plain comonadic/monadic modes it is fixed.

Non-symmetric modes only admit cells whose moving atoms dominate the
stationary ones (every atom of I >= every atom of J); the symmetric modes
drop that restriction.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Union

from .errors import CompositionError, ModeError, ParseError
from .modlang import (
    AxiomSentence,
    EPS,
    Formula,
    ModIndex,
    OpKind,
    Prefix,
    parse_index,
    render_index,
)
from .modes import Mode, ModeKind

if TYPE_CHECKING:  # pragma: no cover
    from .paste import Term


class LawKind(Enum):
    BOX_BOX = "box"
    DIA_DIA = "dia"
    DIA_BOX = "diabox"
    BOX_DIA = "boxdia"

    @property
    def moving_op(self) -> OpKind:
        return OpKind.BOX if self in (LawKind.BOX_BOX, LawKind.BOX_DIA) else OpKind.DIA

    @property
    def fixed_op(self) -> OpKind:
        return OpKind.BOX if self in (LawKind.BOX_BOX, LawKind.DIA_BOX) else OpKind.DIA

    def __repr__(self) -> str:
        return f"LawKind.{self.name}"


_KIND_BY_OPS = {
    (OpKind.BOX, OpKind.BOX): LawKind.BOX_BOX,
    (OpKind.DIA, OpKind.DIA): LawKind.DIA_DIA,
    (OpKind.DIA, OpKind.BOX): LawKind.DIA_BOX,
    (OpKind.BOX, OpKind.DIA): LawKind.BOX_DIA,
}


def classify(i: int, j: int, mode: Mode) -> LawKind:
    """Kind of the atomic cell d[i;j] in the given mode.

    In the entwined modes the parity table applies: even/even -> box law,
    odd/even -> diamond past box, even/odd -> box past diamond, odd/odd ->
    diamond law.  Non-symmetric modes require i >= j.
    """
    mode.check_atom(i)
    mode.check_atom(j)
    if not mode.symmetric and i < j:
        raise ModeError(
            f"{mode} admits d[i;j] only for i >= j; got d[{i};{j}]"
        )
    return _KIND_BY_OPS[(mode.op_for(i), mode.op_for(j))]


def _side_op(side: ModIndex, mode: Mode, name: str) -> OpKind:
    ops = {mode.op_for(a) for a in side}
    if len(ops) != 1:
        raise CompositionError(
            f"{name} chain {render_index(side)} mixes operator flavours; "
            "single-sided law cells must be flavour-homogeneous"
        )
    return ops.pop()


@dataclass(frozen=True)
class LawCell:
    mode: Mode
    left: ModIndex
    right: ModIndex
    kind: LawKind

    def __post_init__(self):
        if not self.left or not self.right:
            raise CompositionError("law cells need non-empty index chains on both sides")
        for a in self.left.atoms + self.right.atoms:
            self.mode.check_atom(a)
        if not self.mode.symmetric and min(self.left) < max(self.right):
            raise ModeError(
                f"{self.mode} requires every moving atom >= every stationary atom; "
                f"got d[{render_index(self.left)};{render_index(self.right)}]"
            )
        expected = _KIND_BY_OPS[
            (
                _side_op(self.left, self.mode, "moving"),
                _side_op(self.right, self.mode, "stationary"),
            )
        ]
        if self.kind is not expected:
            raise ModeError(
                f"kind {self.kind.value} conflicts with mode/parity "
                f"(expected {expected.value})"
            )

    def __str__(self) -> str:
        return render_law(self)


def law(mode: Mode, left, right, kind: LawKind | None = None) -> LawCell:
    """Build a law cell, inferring the kind from mode and parity."""
    left = left if isinstance(left, ModIndex) else ModIndex(tuple(_atoms(left)))
    right = right if isinstance(right, ModIndex) else ModIndex(tuple(_atoms(right)))
    inferred = _KIND_BY_OPS[
        (_side_op(left, mode, "moving"), _side_op(right, mode, "stationary"))
    ]
    if kind is not None and kind is not inferred:
        raise ModeError(
            f"kind override {kind.value} conflicts with mode/parity "
            f"(inferred {inferred.value})"
        )
    return LawCell(mode, left, right, inferred)


def _atoms(x) -> tuple[int, ...]:
    if isinstance(x, int):
        return (x,)
    return tuple(x)


class SpecialKind(Enum):
    IDENTITY = "identity"  # all four edges carry the same operator
    UNIT_H = "unit-h"  # operator runs horizontally, vertical edges trivial
    UNIT_V = "unit-v"  # operator runs vertically, horizontal edges trivial


@dataclass(frozen=True)
class SpecialCell:
    """The iso-cells: identity squares and the two one-sided unit squares.

    They read as identity axioms and absorb into compositions without trace;
    this is the square shape behind the K-style schemata of normal systems.
    The carried chain is a single operator in the basic cases but may be any
    composed modality.
    """

    mode: Mode
    variant: SpecialKind
    chain: ModIndex

    def __post_init__(self):
        if not self.chain:
            raise CompositionError("special cells carry a non-empty chain")
        for a in self.chain:
            self.mode.check_atom(a)

    @property
    def left(self) -> ModIndex:
        if self.variant is SpecialKind.UNIT_H:
            return EPS
        return self.chain

    @property
    def right(self) -> ModIndex:
        if self.variant is SpecialKind.UNIT_V:
            return EPS
        return self.chain


def _as_index(x) -> ModIndex:
    if isinstance(x, ModIndex):
        return x
    if isinstance(x, int):
        return ModIndex((x,))
    return ModIndex(tuple(x))


def identity_square(mode: Mode, chain) -> SpecialCell:
    return SpecialCell(mode, SpecialKind.IDENTITY, _as_index(chain))


def unit_square_h(mode: Mode, chain) -> SpecialCell:
    return SpecialCell(mode, SpecialKind.UNIT_H, _as_index(chain))


def unit_square_v(mode: Mode, chain) -> SpecialCell:
    return SpecialCell(mode, SpecialKind.UNIT_V, _as_index(chain))


@dataclass(frozen=True)
class ComposedLaw:
    """A law composite: the labelling cell plus its explicit two-cell term."""

    cell: LawCell
    term: "Term"


AnyLaw = Union[LawCell, SpecialCell, ComposedLaw]


# ---------------------------------------------------------------------------
# Directed composition (index bookkeeping)


def compose_dir(d1: LawCell, d2: LawCell, direction: int) -> LawCell:
    """Compose two law cells along a direction of the first operand.

    A direction among the moving atoms stacks the cells and concatenates the
    moving chains (second operand outermost); a direction among the
    stationary atoms pastes them side by side and concatenates the stationary
    chains the same way.  The untouched side must agree between the operands;
    the second cell may extend the concatenated side in new directions.
    """
    if d1.mode != d2.mode:
        raise CompositionError(f"mode mismatch: {d1.mode} vs {d2.mode}")
    mode = d1.mode
    mode.check_atom(direction)
    in_left = direction in set(d1.left.atoms)
    in_right = direction in set(d1.right.atoms)
    if in_left and in_right:
        raise CompositionError(
            f"direction {direction} occurs on both sides of {d1}; composition is ambiguous"
        )
    if not in_left and not in_right:
        raise CompositionError(f"direction {direction} does not occur in {d1}")
    if in_left:
        if d1.right != d2.right:
            raise CompositionError(
                f"cannot stack {d1} and {d2} along {direction}: stationary chains differ"
            )
        return law(mode, d2.left + d1.left, d1.right)
    if d1.left != d2.left:
        raise CompositionError(
            f"cannot paste {d1} and {d2} along {direction}: moving chains differ"
        )
    return law(mode, d1.left, d2.right + d1.right)


# ---------------------------------------------------------------------------
# Whiskered horizontal / vertical composition (explicit two-cell terms)


def _as_composed(x: AnyLaw) -> tuple[Mode, ModIndex, ModIndex, "Term"]:
    from . import paste

    if isinstance(x, ComposedLaw):
        return x.cell.mode, x.cell.left, x.cell.right, x.term
    if isinstance(x, LawCell):
        return x.mode, x.left, x.right, paste.term_of_law(x)
    if isinstance(x, SpecialCell):
        return x.mode, x.left, x.right, paste.term_of_special(x)
    raise TypeError(f"not a law-like cell: {x!r}")


def _label(mode: Mode, left: ModIndex, right: ModIndex, term: "Term") -> ComposedLaw:
    return ComposedLaw(law(mode, left, right), term)


def compose_h(a: AnyLaw, b: AnyLaw) -> ComposedLaw:
    """Side-by-side composite of two cells sharing the moving chain.

    The term runs b first, whiskered by a's stationary chain, then a
    whiskered by b's; the label concatenates the stationary chains with b's
    outermost.
    """
    from . import paste

    mode_a, left_a, right_a, term_a = _as_composed(a)
    mode_b, left_b, right_b, term_b = _as_composed(b)
    if mode_a != mode_b:
        raise CompositionError(f"mode mismatch: {mode_a} vs {mode_b}")
    if left_a != left_b:
        raise CompositionError(
            "horizontal composition needs a shared moving chain; "
            f"got {render_index(left_a)} vs {render_index(left_b)}"
        )
    chain_a = paste.chain_of(right_a, mode_a)
    chain_b = paste.chain_of(right_b, mode_b)
    term = paste.vcomp(
        paste.whisker(term_b, right=chain_a),
        paste.whisker(term_a, left=chain_b),
    )
    return _label(mode_a, left_a, right_b + right_a, term)


def compose_v(a: AnyLaw, b: AnyLaw) -> ComposedLaw:
    """Stacked composite of two cells sharing the stationary chain.

    The term runs b first, whiskered inside a's moving chain, then a
    whiskered by b's; the label concatenates the moving chains with a's
    outermost.
    """
    from . import paste

    mode_a, left_a, right_a, term_a = _as_composed(a)
    mode_b, left_b, right_b, term_b = _as_composed(b)
    if mode_a != mode_b:
        raise CompositionError(f"mode mismatch: {mode_a} vs {mode_b}")
    if right_a != right_b:
        raise CompositionError(
            "vertical composition needs a shared stationary chain; "
            f"got {render_index(right_a)} vs {render_index(right_b)}"
        )
    chain_a = paste.chain_of(left_a, mode_a)
    chain_b = paste.chain_of(left_b, mode_b)
    term = paste.vcomp(
        paste.whisker(term_b, left=chain_a),
        paste.whisker(term_a, right=chain_b),
    )
    return _label(mode_a, left_a + left_b, right_a, term)


# ---------------------------------------------------------------------------
# Axiom reading


def _ops(side: ModIndex, op: OpKind) -> Prefix:
    return tuple((op, a) for a in side)


def as_axiom(d: AnyLaw) -> AxiomSentence:
    """Read a cell as an axiom schema over the atom A."""
    if isinstance(d, ComposedLaw):
        return as_axiom(d.cell)
    if isinstance(d, SpecialCell):
        side = tuple((d.mode.op_for(a), a) for a in d.left) + tuple(
            (d.mode.op_for(a), a) for a in d.right
        )
        return AxiomSentence(Formula(side), Formula(side))
    lhs = _ops(d.left, d.kind.moving_op) + _ops(d.right, d.kind.fixed_op)
    rhs = _ops(d.right, d.kind.fixed_op) + _ops(d.left, d.kind.moving_op)
    return AxiomSentence(Formula(lhs), Formula(rhs))


# ---------------------------------------------------------------------------
# Text form: d[I;J]


def _render_side(side: ModIndex) -> str:
    if len(side) > 1:
        return f"({render_index(side)})"
    return render_index(side)


def render_law(d: LawCell | SpecialCell | ComposedLaw) -> str:
    if isinstance(d, ComposedLaw):
        return render_law(d.cell)
    return f"d[{_render_side(d.left)};{_render_side(d.right)}]"


def parse_law(text: str, mode: Mode, kind: LawKind | None = None) -> LawCell:
    """Parse the d[I;J] syntax; sides with more than one atom need parens."""
    s = text.strip()
    if not (s.startswith("d[") and s.endswith("]")):
        raise ParseError(f"expected d[I;J] syntax, got {text!r}")
    body = s[2:-1]
    depth = 0
    split = -1
    for pos, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == ";" and depth == 0:
            if split != -1:
                raise ParseError(f"too many top-level ';' in {text!r}")
            split = pos
    if split == -1:
        raise ParseError(f"expected two ';'-separated sides in {text!r}")
    left = parse_index(body[:split], mode.arity)
    right = parse_index(body[split + 1 :], mode.arity)
    return law(mode, left, right, kind)

"""Transpositions: the symmetric-group action on cells.

``s_k`` swaps the axes ``k`` and ``k-1`` of every cell of a symmetric mode.
Acting on a law cell maps every atom of both index chains through the swap
and re-derives the kind, which in the entwined symmetric mode may change the
flavour of an axis (a necessity direction becomes a possibility direction
and vice versa).  Acting on a composite redirects it: composition along an
axis in the swapped pair moves to the partner axis, all other directions
are untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from . import dlaw
from .cube import Composite, Cube, Degenerate, Edge, LawSquare, Point
from .dlaw import LawCell, SpecialCell
from .errors import ModeError
from .modlang import ModIndex
from .modes import Mode


@dataclass(frozen=True)
class Transposition:
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ModeError("transpositions s_k need k >= 1")

    def check(self, mode: Mode) -> None:
        if not mode.symmetric:
            raise ModeError(f"{mode} carries no transpositions")
        if self.k > mode.arity - 1:
            raise ModeError(
                f"s_{self.k} out of range for arity {mode.arity} (need k <= n-1)"
            )

    def apply(self, atom: int) -> int:
        if atom == self.k:
            return self.k - 1
        if atom == self.k - 1:
            return self.k
        return atom

    def __str__(self) -> str:
        return f"s{self.k}"


def act_on_index(s: Transposition, idx: ModIndex) -> ModIndex:
    return ModIndex(tuple(s.apply(a) for a in idx))


def act_on_law(s: Transposition, d: LawCell | SpecialCell) -> LawCell | SpecialCell:
    """Swap the axes of a law cell atom-wise; the kind is re-derived.

    Equivalent to the case table for atomic cells: the moved index steps to
    its partner when it touches the swapped pair, both swap together when
    the cell sits exactly on the pair, everything else is fixed.
    """
    if isinstance(d, SpecialCell):
        s.check(d.mode)
        return SpecialCell(d.mode, d.variant, act_on_index(s, d.chain))
    s.check(d.mode)
    return dlaw.law(d.mode, act_on_index(s, d.left), act_on_index(s, d.right))


def kind_changed(s: Transposition, d: LawCell) -> bool:
    """Whether the action crosses flavour classes (possible in sent mode)."""
    return act_on_law(s, d).kind is not d.kind


def act_on_cube(s: Transposition, c: Cube) -> Cube:
    s.check(c.mode)
    return _act_cube(s, c)


def _act_cube(s: Transposition, c: Cube) -> Cube:
    content = c.content
    mode = c.mode
    if isinstance(content, Point):
        return c
    if isinstance(content, Edge):
        return Cube(mode, Edge(act_on_index(s, content.index)))
    if isinstance(content, LawSquare):
        return Cube(mode, LawSquare(act_on_law(s, content.cell)))
    if isinstance(content, Composite):
        parts = tuple(_act_cube(s, p) for p in content.parts)
        return Cube(mode, Composite(s.apply(content.direction), parts))
    return Cube(mode, Degenerate(_act_cube(s, content.base), s.apply(content.axis)))


Actable = Union[Cube, LawCell, SpecialCell]


def act(s: Transposition, x: Actable) -> Actable:
    if isinstance(x, Cube):
        return act_on_cube(s, x)
    return act_on_law(s, x)


def act_word(word: Iterable[Transposition], x: Actable) -> Actable:
    """Apply a word of transpositions left to right."""
    for s in word:
        x = act(s, x)
    return x


def parse_word(text: str) -> tuple[Transposition, ...]:
    """Parse a comma-separated generator list such as ``s1,s2,s1``."""
    text = text.strip()
    if not text:
        return ()
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk.startswith("s") or not chunk[1:].isdigit():
            raise ModeError(f"bad transposition {chunk!r}; expected e.g. s1")
        out.append(Transposition(int(chunk[1:])))
    return tuple(out)

"""Indexing language and modal formulas over a single atom.

The concrete syntax is plain ASCII:

    axiom   := formula "->" formula
    formula := (op)* "A"
    op      := ("box" | "dia") "_" index
    index   := "eps" | term (";" term)* | "{" index "}"
    term    := "eps" | number | "(" index ")"

``eps`` is the empty index (the unit for ``;``).  Indices normalize to flat
sequences of atoms: ``;`` is associative and ``eps`` disappears.  Modal
prefixes are kept in expanded form, one atomic index per operator, so
``box_{0;1} A`` and ``box_0 box_1 A`` denote the same formula.

Non-deterministic choice (``cup``) is recognized and rejected with a
dedicated diagnostic; the engine works with the sequential fragment only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

from .errors import ParseError


class OpKind(Enum):
    BOX = "box"
    DIA = "dia"

    def __repr__(self) -> str:
        return f"OpKind.{self.name}"


# An operator occurrence: (kind, atomic index).
Op = tuple[OpKind, int]
# A modal prefix / operator chain, outermost operator first.
Prefix = tuple[Op, ...]


@dataclass(frozen=True)
class ModIndex:
    """A normalized index: a flat sequence of atoms; empty means eps."""

    atoms: tuple[int, ...] = ()

    def __post_init__(self):
        for a in self.atoms:
            if not isinstance(a, int) or a < 0:
                raise ValueError(f"index atoms must be natural numbers, got {a!r}")

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)

    def __bool__(self) -> bool:
        return bool(self.atoms)

    def __add__(self, other: "ModIndex") -> "ModIndex":
        return ModIndex(self.atoms + other.atoms)

    def __str__(self) -> str:
        return render_index(self)


EPS = ModIndex(())

# Raw index trees as accepted by normalize_index: an atom, the literal
# string "eps", a ModIndex, or a nested sequence of trees (a `;` chain).
IndexTree = Union[int, str, ModIndex, Sequence]


def normalize_index(tree: IndexTree) -> ModIndex:
    """Flatten a raw index tree: drop eps, splice nested `;` chains."""
    atoms: list[int] = []

    def walk(node: IndexTree) -> None:
        if isinstance(node, bool):
            raise ValueError("booleans are not index atoms")
        if isinstance(node, int):
            if node < 0:
                raise ValueError(f"negative index atom {node}")
            atoms.append(node)
        elif isinstance(node, str):
            if node != "eps":
                raise ValueError(f"unknown index symbol {node!r}")
        elif isinstance(node, ModIndex):
            atoms.extend(node.atoms)
        elif isinstance(node, Sequence):
            for child in node:
                walk(child)
        else:
            raise ValueError(f"bad index tree node {node!r}")

    walk(tree)
    return ModIndex(tuple(atoms))


def expand_prefix(pairs: Iterable[tuple[OpKind, ModIndex]]) -> Prefix:
    """Expand composite-indexed operators into one operator per atom.

    Operators with an eps index vanish (the eps modality is the identity).
    """
    ops: list[Op] = []
    for kind, idx in pairs:
        for atom in idx:
            ops.append((kind, atom))
    return tuple(ops)


@dataclass(frozen=True)
class Formula:
    """A modal prefix applied to the single propositional atom A."""

    prefix: Prefix = ()

    def __str__(self) -> str:
        return render_formula(self)


@dataclass(frozen=True)
class AxiomSentence:
    lhs: Formula
    rhs: Formula

    def __str__(self) -> str:
        return render_sentence(self)


# ---------------------------------------------------------------------------
# Rendering


def render_index(idx: ModIndex) -> str:
    if not idx.atoms:
        return "eps"
    return ";".join(str(a) for a in idx.atoms)


def render_op(op: Op) -> str:
    kind, atom = op
    return f"{kind.value}_{atom}"


def render_formula(f: Formula) -> str:
    if not f.prefix:
        return "A"
    return " ".join(render_op(op) for op in f.prefix) + " A"


def render_sentence(s: AxiomSentence) -> str:
    return f"{render_formula(s.lhs)} -> {render_formula(s.rhs)}"


def render(x: ModIndex | Formula | AxiomSentence) -> str:
    if isinstance(x, ModIndex):
        return render_index(x)
    if isinstance(x, Formula):
        return render_formula(x)
    if isinstance(x, AxiomSentence):
        return render_sentence(x)
    raise TypeError(f"cannot render {type(x).__name__}")


# ---------------------------------------------------------------------------
# Lexer

_TOKEN_RE = re.compile(
    r"""
    (?P<WS>\s+)
  | (?P<NUMBER>\d+)
  | (?P<NAME>[A-Za-z]+)
  | (?P<ARROW>->)
  | (?P<SEMI>;)
  | (?P<LP>\()
  | (?P<RP>\))
  | (?P<LB>\{)
  | (?P<RB>\})
  | (?P<UNDER>_)
  | (?P<UNION>[∪|])
""",
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        assert kind is not None
        if kind != "WS":
            tokens.append(_Token(kind, m.group(), pos))
        pos = m.end()
    tokens.append(_Token("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, arity: int | None = None):
        self.tokens = _lex(text)
        self.i = 0
        self.arity = arity
        for tok in self.tokens:
            if tok.kind == "UNION" or (tok.kind == "NAME" and tok.text == "cup"):
                raise ParseError(
                    "non-deterministic choice (cup) is not part of the sequential "
                    "index fragment handled by this engine",
                    tok.pos,
                )

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def advance(self) -> _Token:
        tok = self.cur
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Token:
        if self.cur.kind != kind:
            raise ParseError(
                f"expected {kind}, found {self.cur.text or 'end of input'!r}",
                self.cur.pos,
            )
        return self.advance()

    # index := term (";" term)*
    def index(self) -> list:
        parts = [self.index_term()]
        while self.cur.kind == "SEMI":
            self.advance()
            parts.append(self.index_term())
        return parts

    def index_term(self):
        tok = self.cur
        if tok.kind == "NUMBER":
            self.advance()
            atom = int(tok.text)
            if self.arity is not None and atom >= self.arity:
                raise ParseError(
                    f"index {atom} out of range for arity {self.arity}", tok.pos
                )
            return atom
        if tok.kind == "NAME" and tok.text == "eps":
            self.advance()
            return "eps"
        if tok.kind == "LP":
            self.advance()
            inner = self.index()
            self.expect("RP")
            return inner
        raise ParseError(f"expected an index, found {tok.text or 'end of input'!r}", tok.pos)

    # op index position: "{" index "}" | index
    def op_index(self) -> ModIndex:
        if self.cur.kind == "LB":
            self.advance()
            tree = self.index()
            self.expect("RB")
            return normalize_index(tree)
        return normalize_index(self.index())

    def formula(self) -> Formula:
        pairs: list[tuple[OpKind, ModIndex]] = []
        while True:
            tok = self.cur
            if tok.kind == "NAME" and tok.text in ("box", "dia"):
                self.advance()
                self.expect("UNDER")
                idx = self.op_index()
                pairs.append((OpKind(tok.text), idx))
            elif tok.kind == "NAME" and tok.text == "A":
                self.advance()
                return Formula(expand_prefix(pairs))
            else:
                raise ParseError(
                    f"expected 'box', 'dia' or 'A', found {tok.text or 'end of input'!r}",
                    tok.pos,
                )

    def axiom(self) -> AxiomSentence:
        lhs = self.formula()
        self.expect("ARROW")
        rhs = self.formula()
        return AxiomSentence(lhs, rhs)


def parse_index(text: str, arity: int | None = None) -> ModIndex:
    p = _Parser(text, arity)
    idx = p.op_index()
    p.expect("EOF")
    return idx


def parse_formula(text: str, arity: int | None = None) -> Formula:
    p = _Parser(text, arity)
    f = p.formula()
    p.expect("EOF")
    return f


def parse_axiom(text: str, arity: int | None = None) -> AxiomSentence:
    p = _Parser(text, arity)
    ax = p.axiom()
    p.expect("EOF")
    return ax

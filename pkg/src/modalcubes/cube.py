"""Cubical cells: multi-indexed cells with faces, degeneracies and
per-direction composition.

A cell is an object node, an operator edge, a law square, a lazy composite
along a direction, or a degenerate cell.  Faces and degeneracies satisfy the
standard cubical identities; composites store their operands and are
flattened by ``normalize``, which also erases degenerate units, fuses edge
paths and grids of law squares, and sorts nested degeneracies.  Structural
equality of normal forms is the cell equality used by the interchange check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from . import dlaw
from .dlaw import LawCell
from .errors import AxisError, CompositionError
from .modlang import ModIndex, render_index
from .modes import Mode

MINUS = "-"
PLUS = "+"


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class Edge:
    index: ModIndex

    def __post_init__(self):
        if not self.index:
            raise CompositionError("operator edges need a non-empty index")


@dataclass(frozen=True)
class LawSquare:
    cell: LawCell


@dataclass(frozen=True)
class Composite:
    direction: int
    parts: tuple["Cube", ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise CompositionError("composites need at least two parts")


@dataclass(frozen=True)
class Degenerate:
    base: "Cube"
    axis: int


Content = Union[Point, Edge, LawSquare, Composite, Degenerate]


@dataclass(frozen=True)
class Cube:
    mode: Mode
    content: Content

    @property
    def axes(self) -> tuple[int, ...]:
        return _axes(self)

    def __str__(self) -> str:
        c = self.content
        if isinstance(c, Point):
            return "*"
        if isinstance(c, Edge):
            return f"edge[{render_index(c.index)}]"
        if isinstance(c, LawSquare):
            return str(c.cell)
        if isinstance(c, Composite):
            return "(" + f" +_{c.direction} ".join(str(p) for p in c.parts) + ")"
        return f"e_{c.axis}({c.base})"


def _axes(c: Cube) -> tuple[int, ...]:
    content = c.content
    if isinstance(content, Point):
        return ()
    if isinstance(content, Edge):
        return tuple(sorted(set(content.index.atoms)))
    if isinstance(content, LawSquare):
        cell = content.cell
        return tuple(sorted(set(cell.left.atoms) | set(cell.right.atoms)))
    if isinstance(content, Composite):
        out: set[int] = set()
        for p in content.parts:
            out |= set(_axes(p))
        return tuple(sorted(out))
    return tuple(sorted(set(_axes(content.base)) | {content.axis}))


def point(mode: Mode) -> Cube:
    return Cube(mode, Point())


def edge(mode: Mode, index) -> Cube:
    idx = index if isinstance(index, ModIndex) else ModIndex(tuple(index) if not isinstance(index, int) else (index,))
    for a in idx:
        mode.check_atom(a)
    return Cube(mode, Edge(idx))


def law_square(cell: LawCell) -> Cube:
    return Cube(cell.mode, LawSquare(cell))


def _check_sign(sign: str) -> None:
    if sign not in (MINUS, PLUS):
        raise ValueError(f"sign must be '-' or '+', got {sign!r}")


def face(c: Cube, i: int, sign: str) -> Cube:
    """The boundary cell of ``c`` in direction ``i`` on the given side."""
    _check_sign(sign)
    if i not in c.axes:
        raise AxisError(f"axis {i} not present in {c}")
    content = c.content
    mode = c.mode
    if isinstance(content, Edge):
        return point(mode)
    if isinstance(content, LawSquare):
        cell = content.cell
        vert = set(cell.left.atoms)
        horiz = set(cell.right.atoms)
        if i in vert and i not in horiz:
            if vert != {i}:
                raise CompositionError(
                    f"face of {c} along {i} is not axis-aligned (moving chain spans "
                    f"{sorted(vert)})"
                )
            return edge(mode, cell.right)
        if i in horiz and i not in vert:
            if horiz != {i}:
                raise CompositionError(
                    f"face of {c} along {i} is not axis-aligned (stationary chain "
                    f"spans {sorted(horiz)})"
                )
            return edge(mode, cell.left)
        raise CompositionError(f"face of {c} along {i} is ambiguous")
    if isinstance(content, Composite):
        if i == content.direction:
            if sign == MINUS:
                return face(content.parts[0], i, sign)
            return face(content.parts[-1], i, sign)
        parts = tuple(face(p, i, sign) for p in content.parts)
        return Cube(mode, Composite(content.direction, parts))
    if isinstance(content, Degenerate):
        if i == content.axis:
            return content.base
        return Cube(mode, Degenerate(face(content.base, i, sign), content.axis))
    raise AxisError(f"{c} has no faces")


def degeneracy(c: Cube, j: int) -> Cube:
    """The degenerate cell of ``c`` in the fresh direction ``j``."""
    c.mode.check_atom(j)
    if j in c.axes:
        raise AxisError(f"axis {j} already present in {c}")
    return Cube(c.mode, Degenerate(c, j))


def compose(a: Cube, b: Cube, direction: int) -> Cube:
    """Lazy composite of two cells along a shared direction.

    The cells must span the same axes and agree on the shared face:
    face(a, direction, +) == face(b, direction, -).
    """
    if a.mode != b.mode:
        raise CompositionError(f"mode mismatch: {a.mode} vs {b.mode}")
    if direction not in a.axes or direction not in b.axes:
        raise AxisError(f"axis {direction} not present in both cells")
    if a.axes != b.axes:
        raise CompositionError(
            f"cells span different axes: {a.axes} vs {b.axes}"
        )
    fa = normalize(face(a, direction, PLUS))
    fb = normalize(face(b, direction, MINUS))
    if fa != fb:
        raise CompositionError(
            f"not composable along {direction}: {fa} != {fb}"
        )
    return Cube(a.mode, Composite(direction, (a, b)))


# ---------------------------------------------------------------------------
# Normalization


def _peel_axis(c: Cube, axis: int) -> Cube | None:
    """Remove one degeneracy along ``axis`` from anywhere in a degeneracy
    stack; None if the cell is not degenerate along it."""
    content = c.content
    if not isinstance(content, Degenerate):
        return None
    if content.axis == axis:
        return content.base
    inner = _peel_axis(content.base, axis)
    if inner is None:
        return None
    return Cube(c.mode, Degenerate(inner, content.axis))


def _degeneracy_axes(c: Cube) -> tuple[int, ...]:
    axes = []
    while isinstance(c.content, Degenerate):
        axes.append(c.content.axis)
        c = c.content.base
    return tuple(axes)


def normalize(c: Cube) -> Cube:
    """Canonical form: flattened composites, fused grids and edge paths,
    erased degenerate units, sorted degeneracy stacks."""
    mode = c.mode
    content = c.content
    if isinstance(content, (Point, Edge, LawSquare)):
        return c
    if isinstance(content, Degenerate):
        base = normalize(content.base)
        stack = [content.axis]
        while isinstance(base.content, Degenerate):
            stack.append(base.content.axis)
            base = base.content.base
        out = base
        for axis in sorted(stack):
            out = Cube(mode, Degenerate(out, axis))
        return out
    # composite
    d = content.direction
    parts: list[Cube] = []
    for p in content.parts:
        np = normalize(p)
        if isinstance(np.content, Composite) and np.content.direction == d:
            parts.extend(np.content.parts)
        else:
            parts.append(np)
    # erase units for this direction
    kept: list[Cube] = []
    unit_base: Cube | None = None
    for p in parts:
        peeled = _peel_axis(p, d)
        if peeled is None:
            kept.append(p)
        elif unit_base is None:
            unit_base = peeled
    if not kept:
        assert unit_base is not None
        return normalize(Cube(mode, Degenerate(unit_base, d)))
    if len(kept) == 1:
        return kept[0]
    # pull a common transverse degeneracy out of all parts
    common = set(_degeneracy_axes(kept[0]))
    for p in kept[1:]:
        common &= set(_degeneracy_axes(p))
    common.discard(d)
    if common:
        axis = min(common)
        peeled_parts = tuple(_peel_axis(p, axis) for p in kept)
        assert all(pp is not None for pp in peeled_parts)
        inner = Cube(mode, Composite(d, peeled_parts))  # type: ignore[arg-type]
        return normalize(Cube(mode, Degenerate(inner, axis)))
    # fuse edge paths: functor order puts later parts outermost
    if all(isinstance(p.content, Edge) for p in kept):
        idx = ModIndex(())
        for p in kept:
            idx = p.content.index + idx  # type: ignore[union-attr]
        return Cube(mode, Edge(idx))
    # fuse grids of law squares via directed composition
    if all(isinstance(p.content, LawSquare) for p in kept):
        try:
            fused = reduce(
                lambda acc, p: dlaw.compose_dir(acc, p.content.cell, d),  # type: ignore[union-attr]
                kept[1:],
                kept[0].content.cell,  # type: ignore[union-attr]
            )
            return Cube(mode, LawSquare(fused))
        except CompositionError:
            pass
    return Cube(mode, Composite(d, tuple(kept)))


def interchange_check(a: Cube, b: Cube, c: Cube, d: Cube, i: int, j: int) -> bool:
    """Middle-four interchange on a composable 2-by-2 grid.

    Compares ``(a +_i b) +_j (c +_i d)`` with ``(a +_j c) +_i (b +_j d)``
    after normalization; raises if either association is not composable.
    """
    if not i < j:
        raise AxisError(f"interchange needs i < j, got {i}, {j}")
    rows = compose(compose(a, b, i), compose(c, d, i), j)
    cols = compose(compose(a, c, j), compose(b, d, j), i)
    return normalize(rows) == normalize(cols)


# ---------------------------------------------------------------------------
# JSON form


def to_json(c: Cube) -> dict:
    content = c.content
    if isinstance(content, Point):
        return {"type": "point"}
    if isinstance(content, Edge):
        return {"type": "edge", "index": render_index(content.index)}
    if isinstance(content, LawSquare):
        cell = content.cell
        return {
            "type": "law",
            "left": render_index(cell.left),
            "right": render_index(cell.right),
            "kind": cell.kind.value,
        }
    if isinstance(content, Composite):
        return {
            "type": "compose",
            "dir": content.direction,
            "parts": [to_json(p) for p in content.parts],
        }
    return {"type": "degenerate", "axis": content.axis, "base": to_json(content.base)}


def from_json(data: dict, mode: Mode) -> Cube:
    from .modlang import parse_index

    t = data["type"]
    if t == "point":
        return point(mode)
    if t == "edge":
        return edge(mode, parse_index(data["index"], mode.arity))
    if t == "law":
        cell = dlaw.law(
            mode,
            parse_index(data["left"], mode.arity),
            parse_index(data["right"], mode.arity),
        )
        return law_square(cell)
    if t == "compose":
        parts = [from_json(p, mode) for p in data["parts"]]
        return reduce(lambda x, y: compose(x, y, data["dir"]), parts)
    if t == "degenerate":
        return degeneracy(from_json(data["base"], mode), data["axis"])
    raise ValueError(f"unknown cube node type {t!r}")

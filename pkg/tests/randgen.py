"""Seeded random generators shared by the property and acceptance suites."""

from __future__ import annotations

import random

from modalcubes import LawCell, Mode, ModeKind, law
from modalcubes.cube import Cube, degeneracy, edge, law_square, point
from modalcubes.errors import CompositionError, ModeError
from modalcubes.modlang import ModIndex

ALL_MODE_KINDS = tuple(ModeKind)
NONSYM = (ModeKind.DCMD, ModeKind.DMND, ModeKind.ENT)
SYM = (ModeKind.SDCMD, ModeKind.SDMND, ModeKind.SENT)


def rand_chain(rng: random.Random, atoms: list[int], max_len: int = 2) -> ModIndex:
    n = rng.randint(1, max_len)
    return ModIndex(tuple(rng.choice(atoms) for _ in range(n)))


def rand_law_cell(rng: random.Random, mode: Mode, max_len: int = 2) -> LawCell:
    """A random valid law cell for the mode (retry sampling)."""
    n = mode.arity
    for _ in range(200):
        if mode.symmetric:
            i, j = rng.sample(range(n), 2)
        else:
            i = rng.randint(1, n - 1)
            j = rng.randint(0, i - 1)
        # same-parity pools keep the sides flavour-homogeneous in ent modes
        left_pool = [a for a in range(n) if a % 2 == i % 2] if mode.entwined else list(range(n))
        right_pool = [a for a in range(n) if a % 2 == j % 2] if mode.entwined else list(range(n))
        if not mode.symmetric:
            right_pool = [a for a in right_pool if a <= j]
            left_pool = [a for a in left_pool if a >= i]
        left = rand_chain(rng, left_pool or [i], max_len)
        right = rand_chain(rng, right_pool or [j], max_len)
        try:
            return law(mode, left, right)
        except (CompositionError, ModeError):
            continue
    # guaranteed fallback: an atomic cell
    if mode.symmetric:
        return law(mode, 1, 0)
    return law(mode, n - 1, 0)


def rand_composable_pair(
    rng: random.Random, mode: Mode, max_len: int = 2
) -> tuple[LawCell, LawCell, int]:
    """Two cells composable along a direction of the first."""
    for _ in range(200):
        d1 = rand_law_cell(rng, mode, max_len)
        sides = sorted(set(d1.left.atoms) ^ set(d1.right.atoms))
        if not sides:
            continue
        direction = rng.choice(sides)
        try:
            if direction in set(d1.left.atoms):
                pool = sorted(set(d1.left.atoms))
                moving = ModIndex(tuple(rng.choice(pool) for _ in range(rng.randint(1, max_len))))
                d2 = law(mode, moving, d1.right)
            else:
                pool = sorted(set(d1.right.atoms))
                fixed = ModIndex(tuple(rng.choice(pool) for _ in range(rng.randint(1, max_len))))
                d2 = law(mode, d1.left, fixed)
        except (CompositionError, ModeError):
            continue
        return d1, d2, direction
    d1 = law(mode, 1, 0)
    return d1, d1, 0


def grid_axes(rng: random.Random, mode: Mode) -> tuple[int, int]:
    """A (vertical, horizontal) direction pair valid for law squares."""
    n = mode.arity
    p = rng.randint(1, n - 1)
    q = rng.randint(0, p - 1)
    return p, q


def rand_grid(rng: random.Random, mode: Mode) -> tuple[Cube, Cube, Cube, Cube, int, int]:
    """A composable 2x2 grid of squares: returns (a, b, c, d, i, j) for the
    interchange ``(a +_i b) +_j (c +_i d)`` with i < j."""
    p, q = grid_axes(rng, mode)

    def maybe_chain(axis: int) -> ModIndex | None:
        if rng.random() < 0.25:
            return None  # degenerate strip
        return ModIndex((axis,) * rng.randint(1, 2))

    rows = [maybe_chain(p), maybe_chain(p)]
    cols = [maybe_chain(q), maybe_chain(q)]
    if all(r is None for r in rows) and all(c is None for c in cols):
        rows[0] = ModIndex((p,))

    def cell(r: ModIndex | None, c: ModIndex | None) -> Cube:
        if r is not None and c is not None:
            return law_square(law(mode, r, c))
        if r is not None and c is None:
            return degeneracy(edge(mode, r), q)
        if r is None and c is not None:
            return degeneracy(edge(mode, c), p)
        return degeneracy(degeneracy(point(mode), q), p)

    a, b = cell(rows[0], cols[0]), cell(rows[0], cols[1])
    c, d = cell(rows[1], cols[0]), cell(rows[1], cols[1])
    return a, b, c, d, q, p

"""Finite Kripke frames: the semantic oracle for derived axioms.

Worlds are ``0..n-1``; each atomic index carries its own accessibility
relation.  Truth is standard: a necessity operator quantifies universally
over successors, a possibility operator existentially.  Validity of a
sentence on a frame quantifies over all valuations of the single atom and
all worlds (brute force, so frames are kept small).

``geach_condition`` is the classical confluence property corresponding to
the schema dia_a box_b A -> box_c dia_d A: whenever w reaches u through the
a-chain and v through the c-chain, some x is reachable from u through b and
from v through d.  Chains compose relationally; the empty chain is the
identity relation.  The soundness direction (condition implies validity) is
exercised by the test suite rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .axioms import GeachAxiom
from .errors import EngineError
from .modlang import AxiomSentence, Formula, ModIndex, OpKind


@dataclass(frozen=True)
class Frame:
    worlds: int
    relations: tuple[frozenset[tuple[int, int]], ...]

    def __post_init__(self):
        if self.worlds < 1:
            raise EngineError("frames need at least one world")
        for rel in self.relations:
            for u, v in rel:
                if not (0 <= u < self.worlds and 0 <= v < self.worlds):
                    raise EngineError(f"edge ({u},{v}) outside 0..{self.worlds - 1}")

    @property
    def arity(self) -> int:
        return len(self.relations)

    def succ_masks(self) -> tuple[tuple[int, ...], ...]:
        """Per relation, per world: bitmask of successors."""
        out = []
        for rel in self.relations:
            masks = [0] * self.worlds
            for u, v in rel:
                masks[u] |= 1 << v
            out.append(tuple(masks))
        return tuple(out)

    def to_json(self) -> dict:
        return {
            "worlds": self.worlds,
            "relations": {
                str(i): sorted(map(list, rel)) for i, rel in enumerate(self.relations)
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> "Frame":
        keys = sorted(int(k) for k in data["relations"])
        if keys != list(range(len(keys))):
            raise EngineError("relation indices must be 0..k-1")
        rels = tuple(
            frozenset((u, v) for u, v in data["relations"][str(i)]) for i in keys
        )
        return cls(data["worlds"], rels)


def frame(worlds: int, *relations: Iterable[tuple[int, int]]) -> Frame:
    return Frame(worlds, tuple(frozenset(r) for r in relations))


def _check_index(fr: Frame, atom: int) -> None:
    if atom >= fr.arity:
        raise EngineError(f"frame has no relation {atom}")


def eval_formula(f: Formula, fr: Frame, valuation, world: int) -> bool:
    """Truth of a formula at a world (direct recursive clauses)."""
    if not 0 <= world < fr.worlds:
        raise EngineError(f"unknown world {world}")
    val = frozenset(valuation)
    if not f.prefix:
        return world in val
    (kind, atom), rest = f.prefix[0], Formula(f.prefix[1:])
    _check_index(fr, atom)
    succs = [v for (u, v) in fr.relations[atom] if u == world]
    if kind is OpKind.BOX:
        return all(eval_formula(rest, fr, val, v) for v in succs)
    return any(eval_formula(rest, fr, val, v) for v in succs)


def extension(f: Formula, fr: Frame, val_mask: int,
              masks: tuple[tuple[int, ...], ...] | None = None) -> int:
    """Bitmask of worlds where the formula holds, for a valuation bitmask."""
    if masks is None:
        masks = fr.succ_masks()
    ext = val_mask
    full = (1 << fr.worlds) - 1
    for kind, atom in reversed(f.prefix):
        _check_index(fr, atom)
        rel = masks[atom]
        if kind is OpKind.BOX:
            ext = sum(
                1 << w for w in range(fr.worlds) if rel[w] & ~ext & full == 0
            )
        else:
            ext = sum(1 << w for w in range(fr.worlds) if rel[w] & ext)
    return ext


def valid_on(ax: AxiomSentence, fr: Frame) -> bool:
    """Truth at every world under every valuation of the atom."""
    masks = fr.succ_masks()
    for val_mask in range(1 << fr.worlds):
        lhs = extension(ax.lhs, fr, val_mask, masks)
        rhs = extension(ax.rhs, fr, val_mask, masks)
        if lhs & ~rhs:
            return False
    return True


def _chain_masks(idx: ModIndex, masks: tuple[tuple[int, ...], ...],
                 worlds: int) -> tuple[int, ...]:
    """Successor masks of the composed relation of an index chain."""
    out = tuple(1 << w for w in range(worlds))  # identity for eps
    for atom in idx:
        step = masks[atom]
        out = tuple(
            _union_over(out[w], step, worlds) for w in range(worlds)
        )
    return out


def _union_over(mask: int, step: tuple[int, ...], worlds: int) -> int:
    acc = 0
    for v in range(worlds):
        if mask & (1 << v):
            acc |= step[v]
    return acc


def geach_condition(fr: Frame, g: GeachAxiom) -> bool:
    masks = fr.succ_masks()
    for idx in (g.a, g.b, g.c, g.d):
        for atom in idx:
            _check_index(fr, atom)
    ra = _chain_masks(g.a, masks, fr.worlds)
    rb = _chain_masks(g.b, masks, fr.worlds)
    rc = _chain_masks(g.c, masks, fr.worlds)
    rd = _chain_masks(g.d, masks, fr.worlds)
    for w in range(fr.worlds):
        for u in range(fr.worlds):
            if not ra[w] & (1 << u):
                continue
            for v in range(fr.worlds):
                if not rc[w] & (1 << v):
                    continue
                if not rb[u] & rd[v]:
                    return False
    return True


# ---------------------------------------------------------------------------
# Frame enumeration and countermodel search


def frames_with(worlds: int, num_relations: int) -> Iterator[Frame]:
    """All frames on the given worlds, one relation bitmask at a time."""
    pairs = [(u, v) for u in range(worlds) for v in range(worlds)]
    cells = len(pairs)
    total = 1 << cells

    def rel_from_bits(bits: int) -> frozenset[tuple[int, int]]:
        return frozenset(pairs[k] for k in range(cells) if bits & (1 << k))

    counters = [0] * num_relations
    while True:
        yield Frame(worlds, tuple(rel_from_bits(b) for b in counters))
        pos = 0
        while pos < num_relations:
            counters[pos] += 1
            if counters[pos] < total:
                break
            counters[pos] = 0
            pos += 1
        else:
            return


def frames_upto(max_worlds: int, num_relations: int) -> Iterator[Frame]:
    for worlds in range(1, max_worlds + 1):
        yield from frames_with(worlds, num_relations)


def _atoms_of(ax: AxiomSentence) -> int:
    atoms = [a for _, a in ax.lhs.prefix + ax.rhs.prefix]
    return max(atoms) + 1 if atoms else 1


def soundness_sweep(
    axioms: Iterable[tuple[GeachAxiom, AxiomSentence]],
    max_worlds: int,
    num_relations: int = 2,
) -> tuple[int, int, list[tuple[GeachAxiom, dict]]]:
    """Exhaustively check condition-implies-validity over small frames.

    Returns (frames checked, condition hits, violations); a violation records
    the schema and an offending frame.  The frame grid is swept with
    vectorized relation tables, one relation bitmask per axis, so the full
    enumeration at three worlds stays affordable.
    """
    import numpy as np

    if num_relations != 2:
        raise EngineError("the vectorized sweep is wired for two relations")
    prepared = [(g, sent, sent.lhs == sent.rhs) for g, sent in axioms]
    frames_checked = 0
    hits = 0
    violations: list[tuple[GeachAxiom, dict]] = []
    for worlds in range(1, max_worlds + 1):
        cells = worlds * worlds
        t = 1 << cells
        frames_checked += t * t
        # rel_table[b, u, v] = bit u*worlds+v of b
        bits = np.arange(t, dtype=np.uint32)
        rel_table = np.zeros((t, worlds, worlds), dtype=np.uint8)
        for u in range(worlds):
            for v in range(worlds):
                rel_table[:, u, v] = (bits >> (u * worlds + v)) & 1
        eye = np.eye(worlds, dtype=np.uint8).reshape(1, 1, worlds, worlds)
        shaped = (
            rel_table.reshape(t, 1, worlds, worlds),
            rel_table.reshape(1, t, worlds, worlds),
        )
        chain_cache: dict[tuple[int, ...], "np.ndarray"] = {(): eye}

        def chain(idx: ModIndex) -> "np.ndarray":
            key = idx.atoms
            got = chain_cache.get(key)
            if got is None:
                got = eye
                for atom in key:
                    got = (np.matmul(got, shaped[atom]) > 0).astype(np.uint8)
                chain_cache[key] = got
            return got

        def swap(arr):
            return np.swapaxes(arr, -1, -2)

        for g, sent, trivial in prepared:
            ra, rb = chain(g.a), chain(g.b)
            rc, rd = chain(g.c), chain(g.d)
            # meets[u, v]: some x with u ->b x and v ->d x
            meets = np.matmul(rb, swap(rd)) > 0
            # fail[u, w]: some v with w ->c v that u cannot meet
            fail = np.matmul(~meets, swap(rc).astype(np.uint8)) > 0
            # cond[w]: no u with w ->a u that fails at w
            bad = (ra.astype(bool) & swap(fail)).any(-1)
            cond = ~bad.any(-1)
            cond = np.broadcast_to(cond, (t, t))
            n_hits = int(cond.sum())
            hits += n_hits
            if trivial or n_hits == 0:
                continue
            idx = np.flatnonzero(cond)
            rels = (rel_table[idx // t].astype(bool), rel_table[idx % t].astype(bool))

            def ext_of(prefix, val_bits):
                ext = np.broadcast_to(val_bits, (len(idx), worlds))
                for kind, atom in reversed(prefix):
                    rel = rels[atom]
                    if kind is OpKind.BOX:
                        ext = ~((rel & ~ext[:, None, :]).any(-1))
                    else:
                        ext = (rel & ext[:, None, :]).any(-1)
                return ext

            invalid = np.zeros(len(idx), dtype=bool)
            for val_mask in range(1 << worlds):
                val_bits = np.array(
                    [(val_mask >> w) & 1 for w in range(worlds)], dtype=bool
                )
                lhs = ext_of(sent.lhs.prefix, val_bits)
                rhs = ext_of(sent.rhs.prefix, val_bits)
                invalid |= (lhs & ~rhs).any(-1)
            for flat in np.flatnonzero(invalid):
                frame_idx = int(idx[flat])
                b0, b1 = frame_idx // t, frame_idx % t
                violations.append(
                    (
                        g,
                        {
                            "worlds": worlds,
                            "relations": {
                                "0": sorted(
                                    [u, v]
                                    for u in range(worlds)
                                    for v in range(worlds)
                                    if (b0 >> (u * worlds + v)) & 1
                                ),
                                "1": sorted(
                                    [u, v]
                                    for u in range(worlds)
                                    for v in range(worlds)
                                    if (b1 >> (u * worlds + v)) & 1
                                ),
                            },
                        },
                    )
                )
    return frames_checked, hits, violations


@dataclass(frozen=True)
class Countermodel:
    frame: Frame
    valuation: frozenset[int]
    world: int

    def to_json(self) -> dict:
        return {
            "frame": self.frame.to_json(),
            "valuation": sorted(self.valuation),
            "world": self.world,
        }


def countermodel_search(
    ax: AxiomSentence, max_worlds: int, num_relations: int | None = None
) -> Countermodel | None:
    """Exhaustive falsification search over frames of bounded size.

    Frames are enumerated without isomorphism reduction, smallest world
    count first, so a returned countermodel has minimal world count.
    """
    if max_worlds < 1:
        raise EngineError("max_worlds must be at least 1")
    k = num_relations if num_relations is not None else _atoms_of(ax)
    for fr in frames_upto(max_worlds, k):
        masks = fr.succ_masks()
        for val_mask in range(1 << fr.worlds):
            lhs = extension(ax.lhs, fr, val_mask, masks)
            rhs = extension(ax.rhs, fr, val_mask, masks)
            bad = lhs & ~rhs
            if bad:
                world = (bad & -bad).bit_length() - 1
                valuation = frozenset(
                    w for w in range(fr.worlds) if val_mask & (1 << w)
                )
                return Countermodel(fr, valuation, world)
    return None

"""Two-cell terms and a bounded equality checker for pasting diagrams.

A term is a vertical composite of layers over an operator chain; each layer
is a single generator (counit, comultiplication, unit, multiplication, or an
atomic law cell) whiskered into position.  Equality of terms is decided, up
to a step bound, by bidirectional breadth-first search over the equational
theory:

* counit/coassociativity for every necessity operator,
* unit/associativity for every possibility operator,
* the four defining equations of every atomic law generator with respect to
  the (co)monad structure on its two axes,
* exchange of adjacent layers acting on disjoint chain segments
  (naturality of whiskering).

The search is sound and incomplete: an ``Equal`` verdict always carries a
replayable rewrite path, ``NotProven`` means no path was found within the
bound.  ``verify_law`` instantiates, for a candidate swap cell, the defining
diagrams of its law kind on every atomic side and checks each pair of legs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Union

from .dlaw import ComposedLaw, LawCell, LawKind, SpecialCell
from .errors import ChainError, CompositionError
from .modlang import ModIndex, OpKind, Prefix
from .modes import Mode

Chain = Prefix  # operator chain, outermost first
Step = tuple  # (rule name, layer index, direction, extra...)


def chain_of(idx: ModIndex, mode: Mode) -> Chain:
    return tuple((mode.op_for(a), a) for a in idx)


def boxes(*atoms: int) -> Chain:
    return tuple((OpKind.BOX, a) for a in atoms)


def dias(*atoms: int) -> Chain:
    return tuple((OpKind.DIA, a) for a in atoms)


# ---------------------------------------------------------------------------
# Generators


@dataclass(frozen=True)
class Counit:
    atom: int

    @property
    def src(self) -> Chain:
        return ((OpKind.BOX, self.atom),)

    @property
    def tgt(self) -> Chain:
        return ()

    def __str__(self) -> str:
        return f"counit_{self.atom}"


@dataclass(frozen=True)
class Comult:
    atom: int

    @property
    def src(self) -> Chain:
        return ((OpKind.BOX, self.atom),)

    @property
    def tgt(self) -> Chain:
        return ((OpKind.BOX, self.atom), (OpKind.BOX, self.atom))

    def __str__(self) -> str:
        return f"comult_{self.atom}"


@dataclass(frozen=True)
class Unit:
    atom: int

    @property
    def src(self) -> Chain:
        return ()

    @property
    def tgt(self) -> Chain:
        return ((OpKind.DIA, self.atom),)

    def __str__(self) -> str:
        return f"unit_{self.atom}"


@dataclass(frozen=True)
class Mult:
    atom: int

    @property
    def src(self) -> Chain:
        return ((OpKind.DIA, self.atom), (OpKind.DIA, self.atom))

    @property
    def tgt(self) -> Chain:
        return ((OpKind.DIA, self.atom),)

    def __str__(self) -> str:
        return f"mult_{self.atom}"


@dataclass(frozen=True)
class LawGen:
    """An atomic swap cell used inside terms: moving atom past fixed atom."""

    moving: int
    fixed: int
    kind: LawKind

    @property
    def src(self) -> Chain:
        return ((self.kind.moving_op, self.moving), (self.kind.fixed_op, self.fixed))

    @property
    def tgt(self) -> Chain:
        return ((self.kind.fixed_op, self.fixed), (self.kind.moving_op, self.moving))

    def __str__(self) -> str:
        return f"law_{self.moving}_{self.fixed}"


Gen = Union[Counit, Comult, Unit, Mult, LawGen]


@dataclass(frozen=True)
class Layer:
    pos: int
    gen: Gen


@dataclass(frozen=True)
class Term:
    source: Chain
    layers: tuple[Layer, ...] = ()

    def __str__(self) -> str:
        if not self.layers:
            return f"id({_chain_str(self.source)})"
        steps = " . ".join(f"{l.gen}@{l.pos}" for l in self.layers)
        return f"[{steps} : {_chain_str(self.source)}]"


def _chain_str(chain: Chain) -> str:
    if not chain:
        return "1"
    return " ".join(f"{k.value}_{a}" for k, a in chain)


def _apply_layer(chain: Chain, layer: Layer) -> Chain:
    gen, p = layer.gen, layer.pos
    src = gen.src
    if p < 0 or p + len(src) > len(chain):
        raise ChainError(f"layer {gen}@{p} does not fit chain {_chain_str(chain)}")
    if chain[p : p + len(src)] != src:
        raise ChainError(
            f"layer {gen}@{p} expects {_chain_str(src)}, chain is {_chain_str(chain)}"
        )
    return chain[:p] + gen.tgt + chain[p + len(src) :]


def chains_of(term: Term) -> tuple[Chain, ...]:
    """All intermediate chains, from the source to the target inclusive."""
    out = [term.source]
    for layer in term.layers:
        out.append(_apply_layer(out[-1], layer))
    return tuple(out)


def make_term(source: Chain, layers: Iterable[Layer]) -> Term:
    term = Term(source, tuple(layers))
    chains_of(term)  # validates
    return term


def target_of(term: Term) -> Chain:
    return chains_of(term)[-1]


def gen_term(gen: Gen) -> Term:
    """The generator as a minimal term on its own source chain."""
    return Term(gen.src, (Layer(0, gen),))


def whisker(term: Term, left: Chain = (), right: Chain = ()) -> Term:
    layers = tuple(Layer(l.pos + len(left), l.gen) for l in term.layers)
    return Term(left + term.source + right, layers)


def vcomp(t1: Term, t2: Term) -> Term:
    if target_of(t1) != t2.source:
        raise ChainError(
            f"cannot stack terms: target {_chain_str(target_of(t1))} "
            f"!= source {_chain_str(t2.source)}"
        )
    return Term(t1.source, t1.layers + t2.layers)


def term_of_law(cell: LawCell) -> Term:
    """Canonical term of a (possibly composite-indexed) law cell.

    The moving chain is pushed through the stationary chain one atomic swap
    at a time, innermost moving atom first.
    """
    left, right, kind = cell.left.atoms, cell.right.atoms, cell.kind
    source = tuple((kind.moving_op, a) for a in left) + tuple(
        (kind.fixed_op, a) for a in right
    )
    layers = []
    for a in reversed(range(len(left))):
        for b in range(len(right)):
            layers.append(Layer(a + b, LawGen(left[a], right[b], kind)))
    return make_term(source, layers)


def term_of_special(sp: SpecialCell) -> Term:
    chain = chain_of(sp.left, sp.mode) + chain_of(sp.right, sp.mode)
    return Term(chain, ())


def term_of(x: Union[Term, LawCell, SpecialCell, ComposedLaw]) -> Term:
    if isinstance(x, Term):
        return x
    if isinstance(x, ComposedLaw):
        return x.term
    if isinstance(x, LawCell):
        return term_of_law(x)
    if isinstance(x, SpecialCell):
        return term_of_special(x)
    raise TypeError(f"cannot interpret {x!r} as a two-cell term")


def law_gens_of(*terms: Term) -> frozenset[LawGen]:
    gens = set()
    for t in terms:
        for layer in t.layers:
            if isinstance(layer.gen, LawGen):
                gens.add(layer.gen)
    return frozenset(gens)


# ---------------------------------------------------------------------------
# Rewriting


def _splice(term: Term, chains: tuple[Chain, ...], t: int, count: int,
            window: tuple[Layer, ...]) -> Term | None:
    """Replace ``count`` layers at index t by ``window``; None if ill-typed."""
    layers = term.layers[:t] + window + term.layers[t + count :]
    new = Term(term.source, layers)
    try:
        new_chains = chains_of(new)
    except ChainError:
        return None
    # rule applications must preserve the overall boundary
    assert new_chains[-1] == chains[-1], "rewrite changed the term's target"
    return new


def _neighbors(term: Term, law_gens: frozenset[LawGen]) -> Iterator[tuple[Step, Term]]:
    chains = chains_of(term)
    layers = term.layers
    n = len(layers)
    law_by_ctx: dict[tuple[int, OpKind, int, OpKind], LawGen] = {}
    for lg in law_gens:
        law_by_ctx[(lg.moving, lg.kind.moving_op, lg.fixed, lg.kind.fixed_op)] = lg

    def law_for(mov_op: tuple[OpKind, int], fix_op: tuple[OpKind, int]) -> LawGen | None:
        return law_by_ctx.get((mov_op[1], mov_op[0], fix_op[1], fix_op[0]))

    def emit(step: Step, t: int, count: int, window: tuple[Layer, ...]):
        new = _splice(term, chains, t, count, window)
        if new is not None:
            return (step, new)
        return None

    out = []

    # --- exchange of adjacent disjoint layers
    for t in range(n - 1):
        l1, l2 = layers[t], layers[t + 1]
        p1, g1, p2, g2 = l1.pos, l1.gen, l2.pos, l2.gen
        if p2 >= p1 + len(g1.tgt):
            window = (Layer(p2 - len(g1.tgt) + len(g1.src), g2), Layer(p1, g1))
            r = emit(("exchange", t, "s"), t, 2, window)
            if r:
                out.append(r)
        elif p2 + len(g2.src) <= p1:
            window = (Layer(p2, g2), Layer(p1 + len(g2.tgt) - len(g2.src), g1))
            r = emit(("exchange", t, "s"), t, 2, window)
            if r:
                out.append(r)

    # --- pairwise structural and law equations, forward direction
    for t in range(n - 1):
        l1, l2 = layers[t], layers[t + 1]
        p1, g1, p2, g2 = l1.pos, l1.gen, l2.pos, l2.gen
        # comonad counit laws: comult then counit cancels
        if isinstance(g1, Comult) and isinstance(g2, Counit) and g1.atom == g2.atom:
            if p2 == p1:
                r = emit(("counit-left", t, "+", p1), t, 2, ())
                if r:
                    out.append(r)
            elif p2 == p1 + 1:
                r = emit(("counit-right", t, "+", p1), t, 2, ())
                if r:
                    out.append(r)
        # coassociativity
        if isinstance(g1, Comult) and isinstance(g2, Comult) and g1.atom == g2.atom:
            if p2 == p1:
                r = emit(("coassoc", t, "+"), t, 2, (l1, Layer(p1 + 1, g2)))
                if r:
                    out.append(r)
            elif p2 == p1 + 1:
                r = emit(("coassoc", t, "-"), t, 2, (l1, Layer(p1, g2)))
                if r:
                    out.append(r)
        # monad unit laws: unit then mult cancels
        if isinstance(g1, Unit) and isinstance(g2, Mult) and g1.atom == g2.atom:
            if p2 == p1:
                r = emit(("unit-left", t, "+", p1), t, 2, ())
                if r:
                    out.append(r)
            elif p1 == p2 + 1:
                r = emit(("unit-right", t, "+", p2), t, 2, ())
                if r:
                    out.append(r)
        # associativity
        if isinstance(g1, Mult) and isinstance(g2, Mult) and g1.atom == g2.atom:
            if p2 == p1:
                r = emit(("assoc", t, "+"), t, 2, (Layer(p1 + 1, g1), l2))
                if r:
                    out.append(r)
            elif p1 == p2 + 1:
                r = emit(("assoc", t, "-"), t, 2, (Layer(p2, g1), Layer(p2, g2)))
                if r:
                    out.append(r)
        # law vs the moving operator's structure
        if isinstance(g1, LawGen):
            if isinstance(g2, Counit) and g2.atom == g1.moving and p2 == p1 + 1:
                r = emit(("law-counit-mov", t, "+"), t, 2, (Layer(p1, g2),))
                if r:
                    out.append(r)
            if isinstance(g2, Comult) and g2.atom == g1.moving and p2 == p1 + 1:
                window = (Layer(p1, g2), Layer(p1 + 1, g1), Layer(p1, g1))
                r = emit(("law-comult-mov", t, "+"), t, 2, window)
                if r:
                    out.append(r)
            # law vs the fixed operator's structure
            if isinstance(g2, Counit) and g2.atom == g1.fixed and p2 == p1:
                r = emit(("law-counit-fix", t, "+"), t, 2, (Layer(p1 + 1, g2),))
                if r:
                    out.append(r)
            if isinstance(g2, Comult) and g2.atom == g1.fixed and p2 == p1:
                window = (Layer(p1 + 1, g2), Layer(p1, g1), Layer(p1 + 1, g1))
                r = emit(("law-comult-fix", t, "+"), t, 2, window)
                if r:
                    out.append(r)
        if isinstance(g2, LawGen):
            if isinstance(g1, Unit) and g1.atom == g2.moving and p1 == p2:
                r = emit(("law-unit-mov", t, "+"), t, 2, (Layer(p2 + 1, g1),))
                if r:
                    out.append(r)
            if isinstance(g1, Mult) and g1.atom == g2.moving and p1 == p2:
                window = (Layer(p2 + 1, g2), Layer(p2, g2), Layer(p2 + 1, g1))
                r = emit(("law-mult-mov", t, "+"), t, 2, window)
                if r:
                    out.append(r)
            if isinstance(g1, Unit) and g1.atom == g2.fixed and p1 == p2 + 1:
                r = emit(("law-unit-fix", t, "+"), t, 2, (Layer(p2, g1),))
                if r:
                    out.append(r)
            if isinstance(g1, Mult) and g1.atom == g2.fixed and p1 == p2 + 1:
                window = (Layer(p2, g2), Layer(p2 + 1, g2), Layer(p2, g1))
                r = emit(("law-mult-fix", t, "+"), t, 2, window)
                if r:
                    out.append(r)

    # --- three-layer law equations, backward direction
    for t in range(n - 2):
        l1, l2, l3 = layers[t], layers[t + 1], layers[t + 2]
        # [comult(s)@p, L@p+1, L@p] -> [L@p, comult(s)@p+1]
        if (
            isinstance(l1.gen, Comult)
            and isinstance(l2.gen, LawGen)
            and l3.gen == l2.gen
            and l2.gen.moving == l1.gen.atom
            and l2.pos == l1.pos + 1
            and l3.pos == l1.pos
        ):
            window = (Layer(l1.pos, l2.gen), Layer(l1.pos + 1, l1.gen))
            r = emit(("law-comult-mov", t, "-"), t, 3, window)
            if r:
                out.append(r)
        # [comult(u)@p+1, L@p, L@p+1] -> [L@p, comult(u)@p]
        if (
            isinstance(l1.gen, Comult)
            and isinstance(l2.gen, LawGen)
            and l3.gen == l2.gen
            and l2.gen.fixed == l1.gen.atom
            and l2.pos == l1.pos - 1
            and l3.pos == l1.pos
        ):
            window = (Layer(l2.pos, l2.gen), Layer(l2.pos, l1.gen))
            r = emit(("law-comult-fix", t, "-"), t, 3, window)
            if r:
                out.append(r)
        # [L@p+1, L@p, mult(s)@p+1] -> [mult(s)@p, L@p]
        if (
            isinstance(l1.gen, LawGen)
            and l2.gen == l1.gen
            and isinstance(l3.gen, Mult)
            and l3.gen.atom == l1.gen.moving
            and l2.pos == l1.pos - 1
            and l3.pos == l1.pos
        ):
            window = (Layer(l2.pos, l3.gen), Layer(l2.pos, l1.gen))
            r = emit(("law-mult-mov", t, "-"), t, 3, window)
            if r:
                out.append(r)
        # [L@p, L@p+1, mult(u)@p] -> [mult(u)@p+1, L@p]
        if (
            isinstance(l1.gen, LawGen)
            and l2.gen == l1.gen
            and isinstance(l3.gen, Mult)
            and l3.gen.atom == l1.gen.fixed
            and l2.pos == l1.pos + 1
            and l3.pos == l1.pos
        ):
            window = (Layer(l1.pos + 1, l3.gen), Layer(l1.pos, l1.gen))
            r = emit(("law-mult-fix", t, "-"), t, 3, window)
            if r:
                out.append(r)

    # --- single-layer backward expansions
    for t in range(n):
        l1 = layers[t]
        p, g = l1.pos, l1.gen
        chain = chains[t]
        if isinstance(g, Counit):
            # [counit(s)@p] -> [L@p, counit(s)@p+1]   (moving side)
            if p + 1 < len(chain):
                lg = law_for(chain[p], chain[p + 1])
                if lg is not None and lg.moving == g.atom:
                    window = (Layer(p, lg), Layer(p + 1, g))
                    r = emit(("law-counit-mov", t, "-"), t, 1, window)
                    if r:
                        out.append(r)
            # [counit(u)@p] -> [L@p-1, counit(u)@p-1]  (fixed side)
            if p >= 1:
                lg = law_for(chain[p - 1], chain[p])
                if lg is not None and lg.fixed == g.atom:
                    window = (Layer(p - 1, lg), Layer(p - 1, g))
                    r = emit(("law-counit-fix", t, "-"), t, 1, window)
                    if r:
                        out.append(r)
        if isinstance(g, Unit):
            # [unit(s)@p] -> [unit(s)@p-1, L@p-1]   (moving side)
            if p >= 1:
                fixed = chain[p - 1]
                lg = law_for((g.tgt[0][0], g.atom), fixed)
                if lg is not None and lg.moving == g.atom:
                    window = (Layer(p - 1, g), Layer(p - 1, lg))
                    r = emit(("law-unit-mov", t, "-"), t, 1, window)
                    if r:
                        out.append(r)
            # [unit(u)@p] -> [unit(u)@p+1, L@p]     (fixed side)
            if p < len(chain):
                moving = chain[p]
                lg = law_for(moving, (g.tgt[0][0], g.atom))
                if lg is not None and lg.fixed == g.atom:
                    window = (Layer(p + 1, g), Layer(p, lg))
                    r = emit(("law-unit-fix", t, "-"), t, 1, window)
                    if r:
                        out.append(r)

    # --- pure insertions of cancelling pairs at any gap
    for t in range(n + 1):
        chain = chains[t]
        for p, (op, a) in enumerate(chain):
            if op is OpKind.BOX:
                r = emit(("counit-left", t, "-", p), t, 0,
                         (Layer(p, Comult(a)), Layer(p, Counit(a))))
                if r:
                    out.append(r)
                r = emit(("counit-right", t, "-", p), t, 0,
                         (Layer(p, Comult(a)), Layer(p + 1, Counit(a))))
                if r:
                    out.append(r)
            else:
                r = emit(("unit-left", t, "-", p), t, 0,
                         (Layer(p, Unit(a)), Layer(p, Mult(a))))
                if r:
                    out.append(r)
                r = emit(("unit-right", t, "-", p), t, 0,
                         (Layer(p + 1, Unit(a)), Layer(p, Mult(a))))
                if r:
                    out.append(r)

    return iter(out)


@dataclass(frozen=True)
class CheckResult:
    equal: bool
    path: tuple[Step, ...] | None = None
    explored: int = 0
    reason: str | None = None
    law_gens: frozenset[LawGen] = field(default_factory=frozenset)

    def __bool__(self) -> bool:
        return self.equal


def _invert(step: Step) -> Step:
    rule, t, direction, *extra = step
    flip = {"+": "-", "-": "+", "s": "s"}[direction]
    return (rule, t, flip, *extra)


def apply_step(term: Term, step: Step, law_gens: frozenset[LawGen]) -> Term:
    for cand, new in _neighbors(term, law_gens):
        if cand == tuple(step):
            return new
    raise ChainError(f"step {step!r} does not apply to {term}")


def replay(term: Term, path: Iterable[Step], law_gens: frozenset[LawGen] = frozenset()) -> Term:
    cur = term
    for step in path:
        cur = apply_step(cur, step, law_gens)
    return cur


def check_equal(t1: Term, t2: Term, bound: int = 12,
                max_states: int = 200_000) -> CheckResult:
    """Bidirectional search for a rewrite path connecting two terms."""
    if t1.source != t2.source or target_of(t1) != target_of(t2):
        raise ChainError("terms do not share source and target chains")
    gens = law_gens_of(t1, t2)
    if t1 == t2:
        return CheckResult(True, (), 0, law_gens=gens)
    parents_f: dict[Term, tuple[Term, Step] | None] = {t1: None}
    parents_b: dict[Term, tuple[Term, Step] | None] = {t2: None}
    frontier_f, frontier_b = [t1], [t2]
    depth_f = depth_b = 0
    explored = 0

    def rebuild(meet: Term) -> tuple[Step, ...]:
        fwd: list[Step] = []
        cur = meet
        while parents_f[cur] is not None:
            prev, step = parents_f[cur]
            fwd.append(step)
            cur = prev
        fwd.reverse()
        bwd: list[Step] = []
        cur = meet
        while parents_b[cur] is not None:
            prev, step = parents_b[cur]
            bwd.append(step)
            cur = prev
        return tuple(fwd) + tuple(_invert(s) for s in bwd)

    while frontier_f and frontier_b and depth_f + depth_b < bound:
        if len(frontier_f) <= len(frontier_b):
            frontier, parents, other = frontier_f, parents_f, parents_b
            forward = True
        else:
            frontier, parents, other = frontier_b, parents_b, parents_f
            forward = False
        new_frontier: list[Term] = []
        for term in frontier:
            for step, nt in _neighbors(term, gens):
                if nt in parents:
                    continue
                parents[nt] = (term, step)
                explored += 1
                if nt in other:
                    return CheckResult(True, rebuild(nt), explored, law_gens=gens)
                new_frontier.append(nt)
                if explored > max_states:
                    return CheckResult(
                        False, None, explored, "state cap exhausted", gens
                    )
        if forward:
            frontier_f = new_frontier
            depth_f += 1
        else:
            frontier_b = new_frontier
            depth_b += 1
    return CheckResult(False, None, explored, "no path within bound", gens)


# ---------------------------------------------------------------------------
# Defining-diagram verification


@dataclass(frozen=True)
class DiagramCheck:
    name: str
    result: CheckResult


@dataclass(frozen=True)
class LawReport:
    kind: LawKind
    moving: Chain
    fixed: Chain
    diagrams: tuple[DiagramCheck, ...]

    @property
    def ok(self) -> bool:
        return all(d.result.equal for d in self.diagrams)


def _split_candidates(term: Term, kind: LawKind) -> list[int]:
    src, tgt = term.source, target_of(term)
    out = []
    for k in range(0, len(src) + 1):
        moving, fixed = src[:k], src[k:]
        if all(op is kind.moving_op for op, _ in moving) and all(
            op is kind.fixed_op for op, _ in fixed
        ):
            if tgt == fixed + moving:
                out.append(k)
    return out


def verify_law(
    t: Union[Term, LawCell, ComposedLaw, SpecialCell],
    kind: LawKind | None = None,
    bound: int = 12,
    split: int | None = None,
) -> LawReport:
    """Check the defining diagrams of a law kind for a candidate term.

    The term must have swap shape M_I M_J -> M_J M_I.  For every side that is
    a single operator the corresponding pair of structure diagrams (counit
    and comultiplication for a necessity axis, unit and multiplication for a
    possibility axis) is instantiated and both legs are compared with
    ``check_equal``.  An empty side is allowed (the unit squares); a side
    with two or more operators has no structure diagrams of its own.
    """
    if isinstance(t, ComposedLaw):
        if kind is None:
            kind = t.cell.kind
        if split is None:
            split = len(t.cell.left)
        t = t.term
    elif isinstance(t, LawCell):
        if kind is None:
            kind = t.kind
        if split is None:
            split = len(t.left)
        t = term_of_law(t)
    elif isinstance(t, SpecialCell):
        ops = {t.mode.op_for(a) for a in t.chain}
        if kind is None:
            if len(ops) != 1:
                raise CompositionError(
                    "cannot infer a law kind for a mixed-flavour special cell"
                )
            op = ops.pop()
            kind = LawKind.BOX_BOX if op is OpKind.BOX else LawKind.DIA_DIA
        if split is None:
            split = len(t.left)
        t = term_of_special(t)
    if kind is None:
        raise CompositionError("a law kind is required to verify a bare term")
    if split is None:
        candidates = _split_candidates(t, kind)
        if not candidates:
            raise CompositionError(
                "term does not have the swap shape M_I M_J -> M_J M_I "
                f"for kind {kind.value}"
            )
        split = candidates[0]
    src = t.source
    moving, fixed = src[:split], src[split:]
    if target_of(t) != fixed + moving:
        raise CompositionError("term target is not the swapped source")

    checks: list[DiagramCheck] = []

    def add(name: str, leg1: Term, leg2: Term) -> None:
        checks.append(DiagramCheck(name, check_equal(leg1, leg2, bound)))

    if len(moving) == 1:
        (op, s) = moving[0]
        if op is OpKind.BOX:
            leg1 = vcomp(t, make_term(fixed + moving, (Layer(len(fixed), Counit(s)),)))
            leg2 = make_term(src, (Layer(0, Counit(s)),))
            add("moving-counit", leg1, leg2)
            leg1 = vcomp(t, make_term(fixed + moving, (Layer(len(fixed), Comult(s)),)))
            leg2 = vcomp(
                vcomp(make_term(src, (Layer(0, Comult(s)),)), whisker(t, left=moving)),
                whisker(t, right=moving),
            )
            add("moving-comult", leg1, leg2)
        else:
            leg1 = vcomp(make_term(fixed, (Layer(0, Unit(s)),)), t)
            leg2 = make_term(fixed, (Layer(len(fixed), Unit(s)),))
            add("moving-unit", leg1, leg2)
            leg1 = vcomp(make_term(moving + src, (Layer(0, Mult(s)),)), t)
            leg2 = vcomp(
                vcomp(whisker(t, left=moving), whisker(t, right=moving)),
                make_term(fixed + moving + moving, (Layer(len(fixed), Mult(s)),)),
            )
            add("moving-mult", leg1, leg2)
    if len(fixed) == 1:
        (op, u) = fixed[0]
        if op is OpKind.BOX:
            leg1 = vcomp(t, make_term(fixed + moving, (Layer(0, Counit(u)),)))
            leg2 = make_term(src, (Layer(len(moving), Counit(u)),))
            add("fixed-counit", leg1, leg2)
            leg1 = vcomp(t, make_term(fixed + moving, (Layer(0, Comult(u)),)))
            leg2 = vcomp(
                vcomp(make_term(src, (Layer(len(moving), Comult(u)),)),
                      whisker(t, right=fixed)),
                whisker(t, left=fixed),
            )
            add("fixed-comult", leg1, leg2)
        else:
            leg1 = vcomp(make_term(moving, (Layer(len(moving), Unit(u)),)), t)
            leg2 = make_term(moving, (Layer(0, Unit(u)),))
            add("fixed-unit", leg1, leg2)
            leg1 = vcomp(make_term(src + fixed, (Layer(len(moving), Mult(u)),)), t)
            leg2 = vcomp(
                vcomp(whisker(t, right=fixed), whisker(t, left=fixed)),
                make_term(fixed + fixed + moving, (Layer(0, Mult(u)),)),
            )
            add("fixed-mult", leg1, leg2)
    if not checks:
        raise CompositionError(
            "no atomic side to verify: both chains are composite"
        )
    return LawReport(kind, moving, fixed, tuple(checks))

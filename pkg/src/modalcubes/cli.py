"""Batch command-line frontend.

Subcommands: normalize, compose, transpose, derive, verify, kripke, diff.
Exit codes: 0 on success, 1 on a domain error (diagnostic on stderr), 2 on
usage errors.  ``--json`` switches every command to its documented JSON
schema; text output is deterministic (sorted) for a given invocation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import axioms as ax_mod
from . import dlaw, kripke, paste
from .dlaw import LawKind
from .errors import EngineError
from .modes import Mode, mode_from_string
from .modlang import parse_axiom, parse_formula, parse_index, render
from .sym import act_word, parse_word


def _mode_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mode", required=True,
                   help="dcmd | sdcmd | dmnd | sdmnd | ent | sent")
    p.add_argument("--arity", type=int, required=True, help="number of axes")


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _kind(value: str | None) -> LawKind | None:
    if value is None:
        return None
    try:
        return LawKind(value)
    except ValueError:
        raise EngineError(
            f"unknown law kind {value!r}; expected box, dia, diabox or boxdia"
        ) from None


def cmd_normalize(args) -> int:
    text = args.text
    if "->" in text:
        obj = parse_axiom(text)
        kind = "axiom"
    elif any(tok in text for tok in ("box", "dia", "A")):
        obj = parse_formula(text)
        kind = "formula"
    else:
        obj = parse_index(text)
        kind = "index"
    out = render(obj)
    _emit(args, {"input": text, "kind": kind, "normalized": out}, out)
    return 0


def cmd_compose(args) -> int:
    mode = mode_from_string(args.mode, args.arity)
    kind = _kind(args.kind)
    d1 = dlaw.parse_law(args.first, mode, kind)
    d2 = dlaw.parse_law(args.second, mode, kind)
    out = dlaw.compose_dir(d1, d2, args.dir)
    text = dlaw.render_law(out)
    _emit(
        args,
        {
            "first": dlaw.render_law(d1),
            "second": dlaw.render_law(d2),
            "dir": args.dir,
            "result": text,
            "kind": out.kind.value,
            "axiom": render(dlaw.as_axiom(out)),
        },
        text,
    )
    return 0


def cmd_transpose(args) -> int:
    mode = mode_from_string(args.mode, args.arity)
    word = parse_word(args.word)
    cell = dlaw.parse_law(args.cell, mode, _kind(args.kind))
    out = act_word(word, cell)
    text = dlaw.render_law(out)
    _emit(
        args,
        {
            "word": args.word,
            "cell": dlaw.render_law(cell),
            "result": text,
            "kind": out.kind.value,
            "kind_changed": out.kind is not cell.kind,
            "axiom": render(dlaw.as_axiom(out)),
        },
        text,
    )
    return 0


def cmd_derive(args) -> int:
    mode = mode_from_string(args.mode, args.arity)
    derived = ax_mod.generate(mode, args.depth)
    if args.json:
        print(
            json.dumps(
                {
                    "mode": mode.kind.value,
                    "arity": mode.arity,
                    "depth": args.depth,
                    "axioms": [ax.to_json() for ax in derived],
                },
                indent=2,
            )
        )
        return 0
    print(f"# mode={mode.kind.value} arity={mode.arity} depth={args.depth} "
          f"axioms={len(derived)}")
    for ax in derived:
        geach = ax_mod.render_geach(ax.geach) if ax.geach else "-"
        print(f"{render(ax.sentence)}  [{ax.family.value}] {geach}")
    return 0


def cmd_verify(args) -> int:
    mode = mode_from_string(args.mode, args.arity)
    d1 = dlaw.parse_law(args.first, mode, _kind(args.kind))
    if args.second is None:
        target = d1
        label = dlaw.render_law(d1)
    elif args.compose == "v":
        target = dlaw.compose_v(d1, dlaw.parse_law(args.second, mode))
        label = dlaw.render_law(target.cell)
    else:
        target = dlaw.compose_h(d1, dlaw.parse_law(args.second, mode))
        label = dlaw.render_law(target.cell)
    report = paste.verify_law(target, bound=args.bound)
    data = {
        "cell": label,
        "kind": report.kind.value,
        "diagrams": [
            {
                "name": d.name,
                "equal": d.result.equal,
                "steps": None if d.result.path is None else len(d.result.path),
                "trace": None
                if d.result.path is None
                else [list(step) for step in d.result.path],
            }
            for d in report.diagrams
        ],
        "ok": report.ok,
    }
    lines = [f"cell {label} [{report.kind.value}]"]
    for d in report.diagrams:
        if d.result.equal:
            lines.append(f"  {d.name}: equal ({len(d.result.path)} steps)")
        else:
            lines.append(f"  {d.name}: NOT PROVEN ({d.result.reason})")
    _emit(args, data, "\n".join(lines))
    return 0 if report.ok else 1


def cmd_kripke(args) -> int:
    ax = parse_axiom(args.axiom)
    cm = kripke.countermodel_search(ax, args.max_worlds, args.relations)
    if args.json:
        print(
            json.dumps(
                {
                    "axiom": render(ax),
                    "max_worlds": args.max_worlds,
                    "countermodel": None if cm is None else cm.to_json(),
                },
                indent=2,
            )
        )
        return 0
    if cm is None:
        print(f"no countermodel within {args.max_worlds} worlds")
    else:
        rels = ", ".join(
            f"R{i}={sorted(rel)}" for i, rel in enumerate(cm.frame.relations)
        )
        print(
            f"countermodel: worlds={cm.frame.worlds} {rels} "
            f"valuation={sorted(cm.valuation)} world={cm.world}"
        )
    return 0


def cmd_diff(args) -> int:
    mode = mode_from_string(args.mode, args.arity)
    report = ax_mod.diff_against_reference(mode, args.depth)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
        return 0
    print(f"# mode={mode.kind.value} arity={mode.arity} depth={args.depth}")
    for t in report.templates:
        n = len(t.instances)
        matched = sum(1 for i in t.instances if i.matched)
        status = f"{matched}/{n} matched"
        if t.flagged:
            status += "  FLAGGED: " + t.flagged
        print(f"{t.family.value}: {status}")
        for inst in t.instances:
            mark = "ok" if inst.matched else "MISSING"
            print(f"    {inst.sentence}  [{mark}]")
    print(f"engine-only sentences: {len(report.engine_only)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modalcubes",
        description="derive and check interaction axioms of multimodal systems",
    )
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized subcommand")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normalize an index, formula or axiom")
    p.add_argument("text")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_normalize)

    p = sub.add_parser("compose", help="directed composition of two law cells")
    _mode_args(p)
    p.add_argument("--dir", type=int, required=True, help="composition direction")
    p.add_argument("--kind", help="law kind override (box|dia|diabox|boxdia)")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("transpose", help="apply a transposition word to a cell")
    _mode_args(p)
    p.add_argument("--kind", help="law kind override")
    p.add_argument("word", help="comma-separated generators, e.g. s1,s2,s1")
    p.add_argument("cell", help="law cell, e.g. d[2;(1;1)]")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_transpose)

    p = sub.add_parser("derive", help="enumerate derivable axioms")
    _mode_args(p)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_derive)

    p = sub.add_parser("verify", help="check the defining diagrams of a composite")
    _mode_args(p)
    p.add_argument("--compose", choices=["h", "v"], default="h")
    p.add_argument("--bound", type=int, default=12)
    p.add_argument("--kind", help="law kind override")
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("kripke", help="search for a finite countermodel")
    p.add_argument("--axiom", required=True)
    p.add_argument("--max-worlds", type=int, default=3)
    p.add_argument("--relations", type=int, default=None,
                   help="relation count (default: inferred from the axiom)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_kripke)

    p = sub.add_parser("diff", help="compare derived axioms against the built-in reference tables")
    _mode_args(p)
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_diff)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        return args.fn(args)
    except EngineError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``walled-brauer <command> --r R --s S ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Sequence

from .cells import (
    ModuleElement,
    ModuleVector,
    act_element,
    annihilator,
    module_dim,
    module_labels,
    parse_label,
    v_f,
    verify_theorem1,
)
from .coefficients import format_poly
from .diagrams import word_to_diagram
from .elements import AlgebraElement, format_element, parse_element
from .normal_form import enumerate_basis, genfun
from .rewriting import reduce
from .words import Context, WordError, format_word, parse_word

DEFAULT_CAP = 10


class UsageError(Exception):
    pass


def _safety_cap() -> int:
    raw = os.environ.get("WB_SAFETY_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"WB_SAFETY_CAP must be an integer, got {raw!r}") from exc


def _context(args: argparse.Namespace) -> Context:
    if args.r is None or args.s is None:
        raise UsageError("--r and --s are required")
    if args.r < 1 or args.s < 1:
        raise UsageError("--r and --s must be positive")
    cap = _safety_cap()
    if args.r + args.s > cap and not args.force:
        raise UsageError(f"r+s = {args.r + args.s} exceeds the safety cap {cap}; pass --force to override")
    return Context(args.r, args.s)


def _delta(args: argparse.Namespace) -> Fraction | None:
    if args.delta is None:
        return None
    try:
        return Fraction(args.delta)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--delta must be a rational number, got {args.delta!r}") from exc


def _emit(args: argparse.Namespace, text: str, data) -> None:
    if args.output == "structured":
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _element_data(a: AlgebraElement, delta: Fraction | None) -> list[dict]:
    out = []
    for w, c in a.sorted_terms():
        item = {"word": list(w), "coeff": format_poly(c)}
        if delta is not None:
            item["value"] = str(c.eval(delta))
        out.append(item)
    return out


def _element_text(a: AlgebraElement, delta: Fraction | None) -> str:
    if delta is None:
        return format_element(a)
    parts = [f"{c.eval(delta)}*{format_word(w)}" for w, c in a.sorted_terms() if c.eval(delta)]
    return " + ".join(parts) if parts else "0"


# ------------------------------------------------------------------ commands

def cmd_reduce(args: argparse.Namespace) -> int:
    ctx = _context(args)
    w = parse_word(args.word, ctx)
    k, nw = reduce(w, ctx)
    delta = _delta(args)
    word = format_word(nw)
    if delta is not None:
        text = f"{delta ** k} * {word}" if k else word
    else:
        text = word if k == 0 else f"d * {word}" if k == 1 else f"d^{k} * {word}"
    _emit(args, text, {"delta_exp": k, "word": list(nw), "text": text})
    return 0


def cmd_basis(args: argparse.Namespace) -> int:
    ctx = _context(args)
    if args.count:
        n = len(enumerate_basis(ctx))
        _emit(args, str(n), {"count": n})
    elif args.genfun:
        g = genfun(ctx)
        _emit(args, " ".join(map(str, g)), {"genfun": g})
    else:
        words = [nw for nw in enumerate_basis(ctx) if args.f is None or nw.f == args.f]
        lines = []
        for nw in words:
            if args.graded and (not lines or nw.f != prev):
                lines.append(f"f={nw.f}")
            prev = nw.f
            lines.append(str(nw))
        _emit(args, "\n".join(lines), {"basis": [list(nw.word) for nw in words]})
    return 0


def cmd_mul(args: argparse.Namespace) -> int:
    ctx = _context(args)
    a = parse_element(args.a, ctx)
    b = parse_element(args.b, ctx)
    prod = a * b
    delta = _delta(args)
    _emit(args, _element_text(prod, delta), {"product": _element_data(prod, delta)})
    return 0


def cmd_diagram(args: argparse.Namespace) -> int:
    ctx = _context(args)
    w = parse_word(args.word, ctx)
    k, d = word_to_diagram(w, ctx)
    head = f"loops={k}"
    _emit(args, head + "\n" + d.ascii(), {"loops": k, "diagram": d.to_dict()})
    return 0


def cmd_modules(args: argparse.Namespace) -> int:
    ctx = _context(args)
    labels = module_labels(ctx)
    rows = [(str(lab), module_dim(lab, ctx)) for lab in labels]
    _emit(args, "\n".join(f"{lab} dim={d}" for lab, d in rows),
          {"modules": [{"label": lab, "dim": d} for lab, d in rows]})
    return 0


def _label(args: argparse.Namespace, ctx: Context):
    try:
        label = parse_label(args.label)
        label.check(ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return label


def cmd_act(args: argparse.Namespace) -> int:
    ctx = _context(args)
    label = _label(args, ctx)
    a = parse_element(args.element, ctx)
    if args.vector:
        try:
            v = ModuleVector.from_dict(json.loads(args.vector))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad --vector: {exc}") from exc
    else:
        v = v_f(label, ctx)
    result = act_element(a, ModuleElement.vector(v), ctx)
    _emit(args, str(result), {"input": v.to_dict(), "result": result.to_dict()})
    return 0


def cmd_annihilator(args: argparse.Namespace) -> int:
    ctx = _context(args)
    label = _label(args, ctx)
    elems = annihilator(label, ctx, printed=args.printed)
    _emit(args, "\n".join(format_element(a) for a in elems),
          {"label": str(label), "count": len(elems), "elements": [format_element(a) for a in elems]})
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    ctx = _context(args)
    labels = [_label(args, ctx)] if args.label else module_labels(ctx)
    exact = True if args.exact else None
    reports = [verify_theorem1(lab, ctx, exact=exact) for lab in labels]
    _emit(args, "\n".join(rep.line() for rep in reports), {"reports": [rep.to_dict() for rep in reports]})
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_selfcheck(args: argparse.Namespace) -> int:
    from .selfcheck import run_selfcheck

    results = run_selfcheck(args.max)
    _emit(args, "\n".join(f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in results),
          {"results": [{"check": name, "passed": ok} for name, ok in results]})
    return 0 if all(ok for _, ok in results) else 1


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="number of strands left of the wall")
    common.add_argument("--s", type=int, help="number of strands right of the wall")
    common.add_argument("--output", choices=["text", "structured"], default="text")
    common.add_argument("--delta", help="evaluate delta at this rational (numeric spot checks)")
    common.add_argument("--force", action="store_true", help="ignore the r+s safety cap")

    parser = argparse.ArgumentParser(prog="walled-brauer", description="Walled Brauer algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="normal form of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("basis", parents=[common], help="list or count the normal-form basis")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--genfun", action="store_true")
    g.add_argument("--f", type=int, help="only words with f wall arcs")
    p.add_argument("--graded", action="store_true", help="prefix each grade with an f=<k> line")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_mul)

    p = sub.add_parser("diagram", parents=[common], help="walled diagram of a word")
    p.add_argument("word")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("modules", parents=[common], help="cell module labels and dimensions")
    p.set_defaults(func=cmd_modules)

    p = sub.add_parser("act", parents=[common], help="act with an element on a module vector")
    p.add_argument("element")
    p.add_argument("--label", required=True)
    p.add_argument("--vector", help="JSON module vector (default: v_f)")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("annihilator", parents=[common], help="dump the annihilator basis A_f")
    p.add_argument("--label", required=True)
    p.add_argument("--printed", action="store_true", help="literal families without corrections")
    p.set_defaults(func=cmd_annihilator)

    p = sub.add_parser("verify", parents=[common], help="check the basis theorem per label")
    p.add_argument("--label")
    p.add_argument("--exact", action="store_true", help="exact elimination at every size")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selfcheck", parents=[common], help="run the built-in suites")
    p.add_argument("--max", type=int, default=5, help="largest r+s to exercise")
    p.set_defaults(func=cmd_selfcheck)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, WordError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

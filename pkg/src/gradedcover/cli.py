"""Command-line interface.

Subcommands: char-table, decompose, act, lift, lift-atlas, check-cocycle.
Exit codes: 0 on success, 1 on a mathematical failure (invalid morphism,
singular lift, cocycle violation), 2 on usage, syntax, or file errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import GradedSignature, SuperSignature
from .covering import Atlas, check_cocycle, graded_copy_name, lift_atlas, lift_super
from .errors import ExprSyntaxError, GradedError
from .expressions import format_expression, normalize_var_name, parse_expression
from .groups import (
    FiniteAbelianGroup,
    ParityMap,
    character_table,
    parse_group_spec,
    parse_parity_spec,
)
from .morphisms import SuperMorphism


def _weight_suffix(name: str) -> tuple[str, tuple[int, ...]]:
    full = normalize_var_name(name)
    if "@" not in full:
        raise ValueError(f"graded variable {name!r} needs a weight suffix like x@(0)")
    base, suffix = full.split("@", 1)
    return full, tuple(int(p) for p in suffix[1:-1].split(","))


def _split_outside_parens(spec: str) -> list[str]:
    """Split on commas that are not inside a weight tuple."""
    parts, current, depth = [], [], 0
    for ch in spec:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts if p.strip()]


def parse_graded_signature(
    group: FiniteAbelianGroup, parity: ParityMap, even_spec: str, odd_spec: str
) -> GradedSignature:
    """Build a signature from comma-separated weighted names like ``x@0,x@1``."""

    def entries(spec: str):
        out = []
        for item in _split_outside_parens(spec):
            full, residues = _weight_suffix(item)
            out.append((full, group.character(residues)))
        return out

    return GradedSignature(group, parity, entries(even_spec), entries(odd_spec))


def _signature_from_json(obj: dict, group=None, parity=None) -> SuperSignature:
    even = [str(n) for n in obj.get("even", [])]
    odd = [str(n) for n in obj.get("odd", [])]
    weighted = any("@" in n for n in even + odd)
    if not weighted:
        return SuperSignature(even, odd)
    if group is None or parity is None:
        raise ValueError("weighted variable names need a group and a parity map")

    def entries(names):
        out = []
        for n in names:
            full, residues = _weight_suffix(n)
            out.append((full, group.character(residues)))
        return out

    return GradedSignature(group, parity, entries(even), entries(odd))


def load_atlas(data: dict):
    """Read the atlas JSON format; returns (atlas, group, parity), the
    latter two None when the file declares no grading data."""
    group = parity = None
    if "group" in data:
        group = parse_group_spec(str(data["group"]))
        parity = parse_parity_spec(group, str(data.get("parity", "0" * group.rank)))
    charts = {
        str(cid): _signature_from_json(spec, group, parity)
        for cid, spec in data.get("charts", {}).items()
    }
    transitions = {}
    for key, mapping in data.get("transitions", {}).items():
        if "->" not in key:
            raise ValueError(f"transition key {key!r} is not of the form 'src->dst'")
        src, dst = (part.strip() for part in key.split("->", 1))
        if src not in charts or dst not in charts:
            raise ValueError(f"transition {key!r} names an unknown chart")
        images = {
            normalize_var_name(var): parse_expression(expr, charts[src])
            for var, expr in mapping.items()
        }
        transitions[(src, dst)] = SuperMorphism(charts[src], charts[dst], images)
    return Atlas(charts=charts, transitions=transitions), group, parity


def dump_atlas(atlas: Atlas, group, parity) -> dict:
    data: dict = {}
    if group is not None:
        data["group"] = str(group)
        data["parity"] = "".join(str(b) for b in parity.bits)
    data["charts"] = {
        cid: {"even": list(sig.even), "odd": list(sig.odd)}
        for cid, sig in sorted(atlas.charts.items())
    }
    data["transitions"] = {
        f"{src}->{dst}": {
            name: format_expression(img) for name, img in sorted(m.images.items())
        }
        for (src, dst), m in sorted(atlas.transitions.items())
    }
    return data


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _read_expr(args) -> str:
    if args.expr is None or args.expr == "-":
        return sys.stdin.read()
    return args.expr


def _group_parity(args):
    group = parse_group_spec(args.group)
    parity = parse_parity_spec(group, args.parity) if args.parity else ParityMap.trivial(group)
    return group, parity


def cmd_char_table(args) -> int:
    group = parse_group_spec(args.group)
    table = character_table(group)
    elements = [str(g) for g in group.elements()]
    characters = [str(chi) for chi in group.characters()]
    cells = [[str(v) for v in row] for row in table]
    if args.json:
        payload = {
            "group": str(group),
            "elements": elements,
            "characters": characters,
            "table": cells,
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.output)
        return 0
    width = max(
        len(s) for row in cells + [elements, characters] for s in row
    )
    lines = [" " * (width + 2) + "  ".join(e.rjust(width) for e in elements)]
    for chi, row in zip(characters, cells):
        lines.append(chi.rjust(width + 2) + "  ".join(v.rjust(width) for v in row))
    _emit("\n".join(lines), args.output)
    return 0


def cmd_decompose(args) -> int:
    group, parity = _group_parity(args)
    sig = parse_graded_signature(group, parity, args.even or "", args.odd or "")
    f = parse_expression(_read_expr(args), sig)
    components = f.decompose()
    if args.json:
        payload = {
            "components": {str(chi): format_expression(c) for chi, c in components.items()}
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.output)
        return 0
    lines = [f"{chi}: {format_expression(c)}" for chi, c in components.items()]
    _emit("\n".join(lines) if lines else "0", args.output)
    return 0


def cmd_act(args) -> int:
    group, parity = _group_parity(args)
    sig = parse_graded_signature(group, parity, args.even or "", args.odd or "")
    g = group.element(tuple(int(p) for p in args.element.strip("() ").split(",")))
    f = parse_expression(_read_expr(args), sig)
    result = f.act(g)
    if args.json:
        _emit(json.dumps({"result": format_expression(result)}, indent=2), args.output)
    else:
        _emit(format_expression(result), args.output)
    return 0


def cmd_lift(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        data = json.load(fh)
    group = parse_group_spec(str(data["group"]))
    parity = parse_parity_spec(group, str(data["parity"]))
    source = _signature_from_json(data["source"])
    target = _signature_from_json(data["target"])
    images = {
        normalize_var_name(var): parse_expression(expr, source)
        for var, expr in data["map"].items()
    }
    psi = SuperMorphism(source, target, images)
    lifted = lift_super(psi, group, parity)
    ordered = [
        graded_copy_name(name, chi)
        for name in target.even + target.odd
        for chi in group.characters()
    ]
    items = [(n, lifted.images[n]) for n in ordered if n in lifted.images]
    if args.json:
        payload = {"images": {n: format_expression(img) for n, img in items}}
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.output)
        return 0
    _emit("\n".join(f"{n} = {format_expression(img)}" for n, img in items), args.output)
    return 0


def cmd_lift_atlas(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        data = json.load(fh)
    atlas, file_group, file_parity = load_atlas(data)
    group = parse_group_spec(args.group) if args.group else file_group
    if group is None:
        raise ValueError("no group given on the command line or in the atlas file")
    parity = (
        parse_parity_spec(group, args.parity) if args.parity else
        (file_parity if file_parity is not None and file_parity.group == group
         else ParityMap.trivial(group))
    )
    lifted = lift_atlas(atlas, group, parity)
    payload = dump_atlas(lifted, group, parity)
    if args.json:
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.output)
        return 0
    lines = []
    for (src, dst), morphism in sorted(lifted.transitions.items()):
        lines.append(f"[{src}->{dst}]")
        lines.extend(
            f"  {name} = {format_expression(img)}"
            for name, img in sorted(morphism.images.items())
        )
    _emit("\n".join(lines) if lines else "(no transitions)", args.output)
    return 0


def cmd_check_cocycle(args) -> int:
    with open(args.path, encoding="utf-8") as fh:
        data = json.load(fh)
    atlas, _, _ = load_atlas(data)
    report = check_cocycle(atlas)
    if args.json:
        payload = {
            "ok": report.ok,
            "note": report.note,
            "failures": [
                {
                    "kind": f.kind,
                    "charts": list(f.charts),
                    "detail": f.detail,
                    "residual": f.residual,
                }
                for f in report.failures
            ],
        }
        _emit(json.dumps(payload, indent=2, sort_keys=True), args.output)
    else:
        _emit(report.describe(), args.output)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gradedcover",
        description="Exact graded function algebras and coverings of superdomains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group_required=True):
        p.add_argument("--group", required=group_required, help="group spec, e.g. 2x2")
        p.add_argument("--parity", help="parity bits, one per factor, e.g. 11")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--output", help="write the result to this file")

    p = sub.add_parser("char-table", help="print the exact character table")
    common(p)
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("decompose", help="split a function into homogeneous parts")
    common(p)
    p.add_argument("--even", help="weighted commuting variables, e.g. x@0,x@1")
    p.add_argument("--odd", help="weighted anticommuting variables")
    p.add_argument("--expr", help="expression text ('-' or omitted: read stdin)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("act", help="apply a group element to a function")
    common(p)
    p.add_argument("--even", help="weighted commuting variables")
    p.add_argument("--odd", help="weighted anticommuting variables")
    p.add_argument("--element", required=True, help="group element, e.g. 1,0")
    p.add_argument("--expr", help="expression text ('-' or omitted: read stdin)")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("lift", help="lift a superdomain morphism to the coverings")
    p.add_argument("path", help="morphism JSON file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("lift-atlas", help="lift a supermanifold atlas")
    p.add_argument("path", help="atlas JSON file")
    common(p, group_required=False)
    p.set_defaults(func=cmd_lift_atlas)

    p = sub.add_parser("check-cocycle", help="verify atlas transition identities")
    p.add_argument("path", help="atlas JSON file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_check_cocycle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GradedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ExprSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

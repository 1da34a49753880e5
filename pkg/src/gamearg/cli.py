"""Command-line front end: ``gamearg {solve,ground,explain,stable,translate}``.

Exit status is 0 on success, 1 on bad input data and 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .af import af_to_game, game_to_af, grounded_labeling
from .export import export_dot, export_json
from .graph import (
    ArgumentationFramework,
    ParseError,
    UnknownNodeError,
    ValidationError,
    format_apx,
    format_edge_list,
    parse_apx,
    parse_edge_list,
)
from .provenance import explain_argument, provenance_subgraph
from .solver import solve
from .stable import DEFAULT_MAX_N, SizeLimitError, stable_extensions, stable_models, wfs_stable_report

COMMANDS = ("solve", "ground", "explain", "stable", "translate")


class UsageError(Exception):
    pass


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gamearg",
        description="Solve win-move games and ground argumentation frameworks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin")
        p.add_argument("--format", dest="input_format", choices=("edgelist", "apx"))
        p.add_argument("--mode", choices=("game", "af"))
        p.add_argument("--node", help="node to explain")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
        p.add_argument("--output", choices=("json", "dot"), default="json")
        p.add_argument("-o", "--out", default="-", help="output file, '-' for stdout")
    return parser


def _resolve(args):
    if args.input_format is None:
        if args.input.endswith(".apx") or (args.command == "ground" and args.input == "-"):
            args.input_format = "apx"
        else:
            args.input_format = "edgelist"
    if args.mode is None:
        args.mode = "af" if args.input_format == "apx" else "game"
    if args.input_format == "apx" and args.mode != "af":
        raise UsageError("apx input implies --mode af")
    if args.command == "explain" and not args.node:
        raise UsageError("explain requires --node")
    if args.command == "stable" and args.output != "json":
        raise UsageError("stable only writes json")
    if args.max_n < 0:
        raise UsageError("--max-n must be non-negative")
    return args


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args):
    """Return ``(game, af)`` for the input; exactly one is the native object."""
    text = _read(args.input)
    if args.input_format == "apx":
        af = parse_apx(text)
        return af_to_game(af), af
    g = parse_edge_list(text)
    if args.mode == "af":
        af = ArgumentationFramework(g.nodes, g.edges)
        return af_to_game(af), af
    return g, game_to_af(g)


def _render(obj, fmt):
    return export_dot(obj) if fmt == "dot" else export_json(obj)


def cmd_solve(args):
    game, _ = _load(args)
    return _render(solve(game), args.output)


def cmd_ground(args):
    _, af = _load(args)
    return _render(grounded_labeling(af), args.output)


def cmd_explain(args):
    game, af = _load(args)
    if args.mode == "af":
        sub = explain_argument(grounded_labeling(af), args.node)
    else:
        sub = provenance_subgraph(solve(game), args.node)
    return _render(sub, args.output)


def cmd_stable(args):
    game, af = _load(args)
    models = stable_models(game, args.max_n)
    report = wfs_stable_report(solve(game), models)
    doc = {
        "models": [{"lost": sorted(m.lost), "won": sorted(m.won)} for m in models],
        "report": report.as_dict(),
    }
    if args.mode == "af":
        doc["extensions"] = [sorted(s) for s in stable_extensions(af, args.max_n)]
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def cmd_translate(args):
    game, af = _load(args)
    if args.input_format == "apx":
        return format_edge_list(game)
    if args.mode == "af":
        # edge list already holds attacks
        return format_apx(af)
    return format_apx(game_to_af(game))


HANDLERS = {
    "solve": cmd_solve,
    "ground": cmd_ground,
    "explain": cmd_explain,
    "stable": cmd_stable,
    "translate": cmd_translate,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        _resolve(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        out = HANDLERS[args.command](args)
    except (ParseError, ValidationError, UnknownNodeError, SizeLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out == "-":
        sys.stdout.write(out)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

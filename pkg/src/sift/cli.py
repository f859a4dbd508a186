"""Command-line driver: parse, unfold, annotate, then report."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .align import DEFAULT_THRESHOLD, align
from .analysis import annotate, deepest_count, index_similarity, structural_index, terminal_count
from .errors import SiftError
from .ingest import TAB, graph_to_taxonomy, parse_edge_list, parse_indented
from .model import Taxonomy, WeightProfile
from .table import mappings_to_tsv, to_json, to_tsv

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # Bad flags are input errors (exit 1); 2 is reserved for internal failures.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _indent(value: str):
    if value == TAB:
        return TAB
    try:
        width = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'tab' or a positive integer") from None
    if width < 1:
        raise argparse.ArgumentTypeError("space indent must be at least 1")
    return width


def _roots(value: str) -> list[str]:
    return [r.strip() for r in value.split(",") if r.strip()]


def load(path: str, args) -> Taxonomy:
    """Read one input file and return its annotated taxonomy."""
    text = Path(path).read_text(encoding="utf-8-sig")
    if args.format == "edges":
        taxonomy, diagnostics = graph_to_taxonomy(parse_edge_list(text), args.roots)
        if args.roots:
            print(f"{path}: roots overridden: {', '.join(diagnostics.rootNames)}", file=sys.stderr)
        for line, message in diagnostics.warnings:
            where = f"{path}:{line}" if line else path
            print(f"{where}: warning: {message}", file=sys.stderr)
    else:
        if args.roots:
            raise UsageError("--roots only applies to --format edges")
        taxonomy = parse_indented(text, args.indent)
    return annotate(taxonomy)


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    t = load(args.input, args)
    _emit(to_json(t) if args.json else to_tsv(t, header=args.header), args.output)
    return EXIT_OK


def cmd_leaves(args) -> int:
    t = load(args.input, args)
    _emit(f"deepest: {deepest_count(t)}\nterminal: {terminal_count(t)}\n", args.output)
    return EXIT_OK


def cmd_index(args) -> int:
    _emit(f"{structural_index(load(args.input, args))}\n", args.output)
    return EXIT_OK


def cmd_compare(args) -> int:
    a = structural_index(load(args.input_a, args))
    b = structural_index(load(args.input_b, args))
    _emit(f"index_a: {a}\nindex_b: {b}\nsimilarity: {index_similarity(a, b):.4f}\n", args.output)
    return EXIT_OK


def cmd_align(args) -> int:
    if not 0.0 <= args.threshold <= 1.0:
        raise UsageError(f"threshold must lie in [0, 1], got {args.threshold}")
    try:
        weights = WeightProfile.parse(args.weights) if args.weights else WeightProfile()
    except ValueError as exc:
        raise UsageError(f"bad --weights: {exc}") from None
    t1 = load(args.input_a, args)
    t2 = load(args.input_b, args)
    _emit(mappings_to_tsv(align(t1, t2, weights, args.threshold), header=args.header), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("indented", "edges"), default="indented")
    common.add_argument("--indent", type=_indent, default=TAB, help="'tab' (default) or spaces per level")
    common.add_argument("--roots", type=_roots, default=None, help="comma-separated traversal roots (edges only)")
    common.add_argument("--output", default=None, help="write here instead of standard output")

    parser = _Parser(prog="sift", description="Structural analysis and alignment of taxonomies.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[common], help="annotated record table")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.add_argument("--header", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("leaves", parents=[common], help="deepest and terminal taxon counts")
    p.add_argument("input")
    p.set_defaults(func=cmd_leaves)

    p = sub.add_parser("index", parents=[common], help="structural index")
    p.add_argument("input")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("compare", parents=[common], help="structural index similarity of two inputs")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("align", parents=[common], help="map taxons of the first input onto the second")
    p.add_argument("input_a")
    p.add_argument("input_b")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--weights", default=None, help="six comma-separated weights: "
                   "depth,children,brothers,brothersLeft,sameLevel,name")
    p.add_argument("--header", action="store_true")
    p.set_defaults(func=cmd_align)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SiftError, UsageError, OSError, UnicodeDecodeError) as exc:
        print(f"sift: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # pragma: no cover - last resort
        print(f"sift: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

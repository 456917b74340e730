"""Command-line interface.

Exit status is 0 on success, 1 for a negative answer (no identification
match, collisions found, verification mismatch) and 2 for bad input or a
size guard.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Sequence

from pathseq.closed_forms import sequence_of
from pathseq.collision_search import (enumerate_labeled_graphs, find_collisions,
                                      read_graph6_stream, write_collision_report)
from pathseq.generators import (FAMILY_KINDS, BranchSequence, Complete, CompleteBipartite, Cycle,
                                FamilySpec, GeneralizedStarlike, Kite, Lollipop, Path, SpecError,
                                Star, Starlike, build, describe)
from pathseq.graph_core import (Graph, ParseError, UnsupportedSizeError, parse_edge_list,
                                parse_graph6, write_edge_list, write_graph6)
from pathseq.grids import family_grid
from pathseq.identify import SequenceError, identify
from pathseq.path_oracle import path_sequence_dfs, path_sequence_dp

KIND_ALIASES = {"bipartite": "complete-bipartite", "generalized-starlike": "genstar"}


class UsageError(ValueError):
    pass


def _kind(text: str) -> str:
    kind = KIND_ALIASES.get(text, text)
    if kind not in FAMILY_KINDS:
        raise argparse.ArgumentTypeError(
            f"unknown family {text!r}; choose from {', '.join(FAMILY_KINDS)}")
    return kind


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def spec_from_args(args: argparse.Namespace) -> FamilySpec:
    kind = args.family

    def need(name: str) -> int:
        value = getattr(args, name)
        if value is None:
            raise SpecError(f"--family {kind} requires --{name}")
        return value

    if kind == "complete":
        return Complete(need("n"))
    if kind == "complete-bipartite":
        return CompleteBipartite(need("n1"), need("n2"))
    if kind == "path":
        return Path(need("n"))
    if kind == "cycle":
        return Cycle(need("n"))
    if kind == "star":
        return Star(need("n"))
    if kind in ("starlike", "genstar"):
        if args.branches is None:
            raise SpecError(f"--family {kind} requires --branches L1,L2,...")
        branches = BranchSequence(tuple(args.branches))
        if kind == "starlike":
            return Starlike(branches)
        return GeneralizedStarlike(need("n1"), branches)
    if kind == "kite":
        return Kite(need("n1"), need("n2"))
    if kind == "lollipop":
        return Lollipop(need("n1"), need("n2"))
    raise SpecError(f"unknown family {kind!r}")


def _add_family_flags(p: argparse.ArgumentParser, required: bool) -> None:
    p.add_argument("--family", type=_kind, required=required, help=", ".join(FAMILY_KINDS))
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int)
    p.add_argument("--n2", type=int)
    p.add_argument("--branches", type=_int_list,
                   help="branch multiplicities L1,L2,... (L_i = number of branches of length i)")


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graphs(text: str, fmt: str) -> list[Graph]:
    if fmt == "auto":
        lines = [ln.strip() for ln in text.splitlines()
                 if ln.strip() and not ln.strip().startswith("#")]
        fmt = "edge-list" if lines and lines[0].split()[0].isdigit() else "graph6"
    if fmt == "edge-list":
        return [parse_edge_list(text)]
    return list(read_graph6_stream(text.splitlines()))


def cmd_gen(args: argparse.Namespace) -> int:
    g = build(spec_from_args(args))
    out = write_graph6(g) + "\n" if args.format == "graph6" else write_edge_list(g)
    sys.stdout.write(out)
    return 0


def cmd_seq(args: argparse.Namespace) -> int:
    if args.input is not None and args.family is not None:
        raise UsageError("use either -i/--input or --family, not both")
    if args.method == "formula":
        if args.family is None:
            raise UsageError("--method formula needs family flags (formulas take parameters)")
        sequences = [sequence_of(spec_from_args(args))]
    else:
        graphs = ([build(spec_from_args(args))] if args.family is not None
                  else _load_graphs(_read_text(args.input), args.input_format))
        oracle = path_sequence_dfs if args.method == "dfs" else path_sequence_dp
        sequences = [oracle(g) for g in graphs]
    for seq in sequences:
        print(",".join(map(str, seq)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    specs = family_grid(args.family, args.max, args.max_n)
    failures = 0
    for spec in specs:
        formula = sequence_of(spec)
        oracle = path_sequence_dp(build(spec))
        if formula != oracle:
            failures += 1
            print(f"FAIL {describe(spec)}: formula={','.join(map(str, formula))} "
                  f"oracle={','.join(map(str, oracle))}")
        elif args.verbose:
            print(f"ok   {describe(spec)}: {','.join(map(str, formula))}")
    print(f"{args.family}: {len(specs) - failures}/{len(specs)} grid points agree")
    return 0 if failures == 0 else 1


def cmd_identify(args: argparse.Namespace) -> int:
    try:
        seq = [int(tok) for tok in args.seq.replace(" ", "").split(",")]
    except ValueError:
        raise SequenceError(f"malformed sequence {args.seq!r}") from None
    result = identify(args.family, seq)
    if result.match is None:
        if len(result.survivors) > 1:
            print("ambiguous: " + "; ".join(describe(s) for s in result.survivors))
        else:
            print("no match")
        return 1
    print(describe(result.match))
    return 0


def cmd_collide(args: argparse.Namespace) -> int:
    if args.enumerate is not None and args.input is not None:
        raise UsageError("use either -i/--input or --enumerate, not both")
    if args.enumerate is not None:
        source = enumerate_labeled_graphs(args.enumerate)
    else:
        source = read_graph6_stream(_read_text(args.input).splitlines())
    records = find_collisions(source, connected_only=args.connected_only,
                              dedupe_isomorphic=not args.keep_isomorphic, jobs=args.jobs)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_collision_report(records, fh)
    else:
        write_collision_report(records, sys.stdout)
    return 1 if records else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pathseq",
                                     description="Path sequences of graphs: oracles, closed forms, "
                                                 "identification and collision search.")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for collide")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write one family member")
    _add_family_flags(p, required=True)
    p.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("seq", help="print the path sequence")
    _add_family_flags(p, required=False)
    p.add_argument("-i", "--input", help="graph6 stream or edge list (default: stdin)")
    p.add_argument("--input-format", choices=("auto", "graph6", "edge-list"), default="auto")
    p.add_argument("--method", choices=("dfs", "dp", "formula"), default="dp")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="compare closed forms against the DP oracle on a grid")
    p.add_argument("--family", type=_kind, required=True)
    p.add_argument("--max", type=int, help="upper bound on n (or on n1, n2)")
    p.add_argument("--max-n", type=int, help="vertex bound for the starlike part")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("identify", help="recover family parameters from a sequence")
    p.add_argument("--family", type=_kind, required=True)
    p.add_argument("--seq", required=True, help="comma-separated path sequence")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("collide", help="report path-sequence collisions")
    p.add_argument("-i", "--input", help="graph6 stream, one per line (default: stdin)")
    p.add_argument("--enumerate", type=int, metavar="N", help="all labeled graphs on N vertices")
    p.add_argument("--connected-only", action="store_true")
    p.add_argument("--keep-isomorphic", action="store_true",
                   help="report every member instead of one per isomorphism class")
    p.add_argument("-o", "--output", help="report file (default: stdout)")
    p.set_defaults(func=cmd_collide)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (SpecError, ParseError, SequenceError, UnsupportedSizeError, UsageError, OSError) as exc:
        print(f"pathseq {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

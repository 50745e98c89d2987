"""Command-line driver: build, reconstruct, roundtrip, check, gen.

Exit codes: 0 success, 2 usage, 3 tree parse, 4 graph schema,
5 reconstruction stage, 6 check failure, 7 unsupported degenerate input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .canonical import canonical_form
from .complex import BuildOptions, build_complex
from .graphio import FORMATS, GraphFormatError, export_graph, import_graph
from .oracle import SUITES, GenParams, gen_random_tree, make_corpus, reports_json, run_suites
from .reconstruct import INSUFFICIENT, ReconstructionError, has_k2_choice, reconstruct
from .tree import TreeParseError, core_tree, homeo_reduce, parse_tree

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_SCHEMA, EXIT_STAGE, EXIT_CHECK, EXIT_UNSUPPORTED = 0, 2, 3, 4, 5, 6, 7


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _read_tree(args):
    if args.tree is not None and args.file is not None:
        raise CliError(EXIT_USAGE, "give either an inline tree or --file, not both")
    if args.file is not None:
        text = Path(args.file).read_text()
    elif args.tree is not None:
        text = args.tree
    else:
        raise CliError(EXIT_USAGE, "no tree given")
    try:
        return parse_tree(text)
    except (TreeParseError, ValueError) as exc:
        raise CliError(EXIT_PARSE, f"cannot parse tree: {exc}") from None


def _options(args) -> BuildOptions:
    return BuildOptions(
        include_isolated=args.include_isolated,
        same_core_edges=args.same_core_edges,
        rule3_boundary=args.rule3,
        allow_empty_q=args.allow_empty_q,
    )


def _emit(data: bytes, out):
    if out:
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def cmd_build(args):
    tree = _read_tree(args)
    full = build_complex(tree, BuildOptions(True, args.same_core_edges, args.rule3, args.allow_empty_q))
    g = build_complex(tree, _options(args))
    isolated = sum(1 for d in full.degrees() if d == 0)
    _emit(export_graph(g, args.format), args.output)
    print(f"vertices={g.n} edges={g.n_edges} isolated={isolated}", file=sys.stderr)
    return EXIT_OK


def _load_graph(path, fmt):
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
        return import_graph(data, fmt)
    except GraphFormatError as exc:
        raise CliError(EXIT_SCHEMA, f"bad graph file: {exc}") from None
    except UnicodeDecodeError:
        raise CliError(EXIT_SCHEMA, "bad graph file: not UTF-8") from None


def cmd_reconstruct(args):
    g = _load_graph(args.graph, args.format)
    try:
        res = reconstruct(g, orientation=args.orientation)
    except ReconstructionError as exc:
        code = EXIT_UNSUPPORTED if INSUFFICIENT in str(exc) else EXIT_STAGE
        raise CliError(code, str(exc)) from None
    _emit((json.dumps(res.to_json(), indent=2) + "\n").encode(), args.output)
    return EXIT_OK


def cmd_roundtrip(args):
    tree = _read_tree(args)
    if len(tree.cores()) < 2:
        print(f"UNSUPPORTED {tree}: fewer than two cores, {INSUFFICIENT}")
        return EXIT_UNSUPPORTED
    target = canonical_form(homeo_reduce(tree))
    target_core = canonical_form(core_tree(tree).adjacency())
    g = build_complex(tree).unlabeled()
    ok = True
    for o in ((0, 1) if has_k2_choice(g) else (0,)):
        try:
            res = reconstruct(g, orientation=o)
        except ReconstructionError as exc:
            print(f"FAIL orientation={o}: {exc}")
            ok = False
            continue
        got = canonical_form(res.assembled)
        got_core = canonical_form(res.shape)
        good = got == target and got_core == target_core
        ok &= good
        degs = sorted(res.degrees.values(), reverse=True)
        print(f"{'PASS' if good else 'FAIL'} orientation={o} assembled={res.assembled} degrees={degs}")
        print(f"  core   expected {target_core} got {got_core}")
        print(f"  reduce expected {target} got {got}")
    return EXIT_OK if ok else EXIT_CHECK


def cmd_check(args):
    names = [n for n in SUITES if getattr(args, n)]
    if args.all or not names:
        names = list(SUITES)
    corpus = make_corpus(args.seed, args.trees, args.max_cores, args.max_degree)
    reports = run_suites(names, corpus)
    if args.json:
        print(reports_json(reports))
    else:
        for r in reports:
            print(r.summary())
            for line in r.notes:
                print("  " + line)
            for tree, detail in r.failures[:10]:
                print(f"  {tree}: {detail}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK


def cmd_gen(args):
    seed = args.seed
    for i in range(args.count):
        params = GenParams(seed + i, args.cores, args.max_degree, args.binary, args.subdivision_rate)
        print(gen_random_tree(params))
    return EXIT_OK


def _default_seed():
    try:
        return int(os.environ.get("K4T_SEED", "0"))
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="k4t", description="Interaction graphs of trees and their inversion.")
    sub = ap.add_subparsers(dest="command", required=True)

    def tree_args(p):
        p.add_argument("tree", nargs="?", help="tree text, e.g. '(((()())()))'")
        p.add_argument("--file", help="read the tree from a file")

    b = sub.add_parser("build", help="build the interaction graph of a tree")
    tree_args(b)
    b.add_argument("--format", choices=FORMATS, default="json")
    b.add_argument("--same-core-edges", choices=("none", "rule1"), default="none")
    b.add_argument("--rule3", choices=("extended", "paperStrict"), default="extended")
    b.add_argument("--allow-empty-q", action="store_true")
    b.add_argument("--include-isolated", action="store_true", help="keep degree-0 vertices")
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("reconstruct", help="recover a tree from a graph file")
    r.add_argument("graph", help="graph file, '-' for stdin")
    r.add_argument("--format", choices=("json", "edgelist"), default="json")
    r.add_argument("--orientation", type=int, choices=(0, 1), default=0,
                   help="which end of a final K2 residual is the leaf")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_reconstruct)

    t = sub.add_parser("roundtrip", help="build, reconstruct and compare")
    tree_args(t)
    t.set_defaults(func=cmd_roundtrip)

    c = sub.add_parser("check", help="run verification suites over a seeded corpus")
    c.add_argument("--all", action="store_true")
    for name in SUITES:
        c.add_argument(f"--{name}", action="store_true")
    c.add_argument("--seed", type=int, default=_default_seed())
    c.add_argument("--trees", type=int, default=200)
    c.add_argument("--max-cores", type=int, default=12)
    c.add_argument("--max-degree", type=int, default=6)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="print seeded random trees")
    g.add_argument("--seed", type=int, default=_default_seed())
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--cores", type=int, default=3)
    g.add_argument("--max-degree", type=int, default=6)
    g.add_argument("--binary", action="store_true")
    g.add_argument("--subdivision-rate", type=float, default=0.0)
    g.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

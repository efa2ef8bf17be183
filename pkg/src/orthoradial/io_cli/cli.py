"""Command line: ``orthoradial validate | draw | generate``.

Exit codes: 0 valid / success, 2 invalid (witness printed), 1 any error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from ..errors import NotLocallyConsistent, NotValid, OrthoRadialError
from ..pipeline import PipelineConfig, draw
from ..validity import ORACLE_LIMIT, is_valid, oracle_validity
from .formats import dumps_drawing, load_instance
from .generator import MODES, generate
from .svg import render

EXIT_OK, EXIT_ERROR, EXIT_INVALID = 0, 1, 2


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _print_witness(witness, rep, names) -> None:
    print(f"invalid: {witness.kind.value} essential cycle")
    for line in witness.describe(rep, names):
        print(line)


def cmd_validate(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    res = is_valid(inst.rep, jobs=args.jobs)
    if args.oracle_limit and inst.rep.graph.num_vertices <= args.oracle_limit:
        if oracle_validity(inst.rep, args.oracle_limit).valid != res.valid:
            print("error: validity search and brute-force oracle disagree", file=sys.stderr)
            return EXIT_ERROR
    if res.valid:
        print("valid")
        return EXIT_OK
    _print_witness(res.witness, inst.rep, inst.names)
    return EXIT_INVALID


def cmd_draw(args: argparse.Namespace) -> int:
    inst = load_instance(args.input)
    cfg = PipelineConfig(compact=args.compact, keep_augmentation=args.keep_augmentation, jobs=args.jobs)
    try:
        result = draw(inst.rep, cfg)
    except NotValid as exc:
        _print_witness(exc.witness, inst.rep, inst.names)
        return EXIT_INVALID
    _write(args.output, dumps_drawing(result.drawing, inst.names, keep_tags=args.keep_augmentation))
    if args.svg:
        svg_path = args.svg_output or (args.output.rsplit(".", 1)[0] + ".svg"
                                       if args.output and args.output != "-" else None)
        if svg_path is None:
            print("error: --svg needs --svg-output when the drawing goes to stdout", file=sys.stderr)
            return EXIT_ERROR
        _write(svg_path, render(result.drawing, args.svg))
    return EXIT_OK


def cmd_generate(args: argparse.Namespace) -> int:
    _write(args.output, generate(args.seed, args.n, args.mode, args.rings, args.spokes))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orthoradial", description="Ortho-radial representations: "
                                "validity testing and bend-free drawings.")
    sub = p.add_subparsers(dest="command", required=True)

    def search_flags(q: argparse.ArgumentParser) -> None:
        q.add_argument("--jobs", type=int, default=1, help="threads for the cycle search")
        q.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True,
                       help="report the witness of the smallest start dart (always the case)")

    v = sub.add_parser("validate", help="test validity; print a monotone cycle if invalid")
    v.add_argument("input")
    search_flags(v)
    v.add_argument("--oracle-limit", type=int, default=0, metavar="N",
                   help=f"also run the brute-force oracle on instances with <= N vertices "
                        f"(typical N: {ORACLE_LIMIT})")
    v.set_defaults(func=cmd_validate)

    d = sub.add_parser("draw", help="compute a bend-free drawing of a valid instance")
    d.add_argument("input")
    d.add_argument("-o", "--output", default=None, help="drawing file (default stdout)")
    d.add_argument("--svg", choices=("polar", "cylinder"), default=None)
    d.add_argument("--svg-output", default=None, help="SVG path (default: output path with .svg)")
    d.add_argument("--compact", action="store_true", help="minimum total flow, empty grid lines dropped")
    d.add_argument("--keep-augmentation", action="store_true",
                   help="emit the rectangular drawing with provenance of synthetic elements")
    search_flags(d)
    d.set_defaults(func=cmd_draw)

    g = sub.add_parser("generate", help="write a random instance")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--mode", choices=MODES, default="perturbed")
    g.add_argument("--rings", type=int, default=None, help="grid mode only")
    g.add_argument("--spokes", type=int, default=None, help="grid mode only")
    g.add_argument("-o", "--output", default=None)
    g.set_defaults(func=cmd_generate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotLocallyConsistent as exc:
        print("error: representation is not locally consistent", file=sys.stderr)
        for line in exc.report.lines():
            print(f"  {line}", file=sys.stderr)
        return EXIT_ERROR
    except (OrthoRadialError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

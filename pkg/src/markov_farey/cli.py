"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import closedform as cf
from . import exchange as ex
from . import farey as fy
from . import plot
from .errors import MarkovFareyError
from .verify import VerifyConfig, run_verify


@dataclass(frozen=True)
class OutputRecord:
    triple: tuple[str, str, str]
    word: tuple[str, ...]
    principal: ex.Matrix
    complementary: ex.Matrix
    g: ex.Matrix
    depth: int

    @classmethod
    def build(cls, T: fy.FareyTriple, word: Optional[Sequence[fy.ParityClass]] = None) -> "OutputRecord":
        if word is None:
            word = fy.path_from_initial(T)
        M = cf.c_matrix(T)
        return cls(
            tuple(str(q) for q in T),
            tuple(str(k) for k in word),
            M.principal,
            M.complementary,
            cf.g_matrix(T),
            len(word),
        )

    def to_json(self) -> dict:
        def mat(A):
            return [[str(x) for x in row] for row in A]

        return {
            "triple": list(self.triple),
            "word": list(self.word),
            "principal": mat(self.principal),
            "complementary": mat(self.complementary),
            "g": mat(self.g),
            "depth": self.depth,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "OutputRecord":
        def mat(A):
            return tuple(tuple(int(x) for x in row) for row in A)

        return cls(
            tuple(obj["triple"]),
            tuple(obj["word"]),
            mat(obj["principal"]),
            mat(obj["complementary"]),
            mat(obj["g"]),
            int(obj["depth"]),
        )

    @property
    def farey_triple(self) -> fy.FareyTriple:
        return fy.parse_triple(",".join(self.triple))


def _pretty_matrix(A: ex.Matrix) -> list[str]:
    width = max(len(str(x)) for row in A for x in row)
    return ["  " + " ".join(str(x).rjust(width) for x in row) for row in A]


def _render(record: OutputRecord, fmt: str, g_only: bool) -> str:
    if fmt == "json":
        obj = record.to_json()
        if g_only:
            obj = {k: obj[k] for k in ("triple", "word", "g", "depth")}
        else:
            obj["columns"] = ["0", "-1", "inf"]
        return json.dumps(obj)
    if fmt == "csv":
        lines = ["part,row,0,-1,inf"]
        parts = [("g", record.g)] if g_only else [
            ("principal", record.principal),
            ("complementary", record.complementary),
            ("g", record.g),
        ]
        for name, A in parts:
            for i, row in enumerate(A, 1):
                lines.append(",".join([name, str(i)] + [str(x) for x in row]))
        return "\n".join(lines)
    lines = [f"triple: {','.join(record.triple)}", f"word from root: ({','.join(record.word)})", "columns: 0, -1, inf"]
    if not g_only:
        lines += ["principal part:", *_pretty_matrix(record.principal)]
        lines += ["c-matrix (complementary part):", *_pretty_matrix(record.complementary)]
    lines += ["g-matrix:", *_pretty_matrix(record.g)]
    return "\n".join(lines)


def cmd_matrix(args: argparse.Namespace) -> int:
    if args.word is not None:
        if args.triple is not None:
            raise MarkovFareyError("give either a triple or --word, not both")
        T = fy.apply_word(fy.INITIAL_TRIPLE, fy.parse_word(args.word))
    elif args.triple is not None:
        T = fy.parse_triple(args.triple)
    else:
        raise MarkovFareyError("a triple or --word is required")
    record = OutputRecord.build(T)
    print(_render(record, args.format, args.g_only))
    if args.oracle:
        M = ex.matrix_by_path(T)
        g = ex.g_from_c(M.complementary)
        if (M.principal, M.complementary, g) != (record.principal, record.complementary, record.g):
            print(f"oracle mismatch for {T}: path mutation gives {M}, g={g}", file=sys.stderr)
            return 1
        print("oracle: ok", file=sys.stderr)
    return 0


def cmd_mutate(args: argparse.Namespace) -> int:
    T = fy.apply_word(fy.parse_triple(args.triple), fy.parse_word(args.word))
    print(T)
    return 0


def cmd_path(args: argparse.Namespace) -> int:
    print(fy.format_word(fy.path_to_initial(fy.parse_triple(args.triple))))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.depth < 0 or args.depth > fy.DEFAULT_MAX_DEPTH:
        raise MarkovFareyError(f"depth must be between 0 and {fy.DEFAULT_MAX_DEPTH}")
    if args.count_only:
        print(sum(1 for _ in fy.iter_tree(args.depth)))
        return 0
    out = sys.stdout
    for T, word in fy.iter_tree(args.depth):
        out.write(json.dumps(OutputRecord.build(T, word).to_json()) + "\n")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.depth < 0 or args.depth > fy.DEFAULT_MAX_DEPTH or args.symbolic_depth < 0:
        raise MarkovFareyError("bad depth")
    config = VerifyConfig(depth=args.depth, symbolic_depth=args.symbolic_depth)
    report = run_verify(config)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(report.render())
    return 0 if report.ok else 1


def cmd_plot(args: argparse.Namespace) -> int:
    if args.depth < 0 or args.depth > plot.MAX_PLOT_DEPTH:
        raise MarkovFareyError(f"plot depth must be between 0 and {plot.MAX_PLOT_DEPTH}")
    points = plot.collect_gvectors(args.depth)
    text = plot.to_csv(points) if args.format == "csv" else plot.to_svg(points)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return 0
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="markov-farey", description="Farey triples and the c/g-matrices of the Markov cluster algebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, g_only in (("matrix", False), ("gmatrix", True)):
        p = sub.add_parser(name, help="c-matrix and g-matrix of a triple" if not g_only else "g-matrix of a triple")
        p.add_argument("triple", nargs="?", help="e.g. '0/1,-1/1,inf'")
        p.add_argument("--word", help="mutation word applied to the root, e.g. '0,-1,inf'")
        p.add_argument("--oracle", action="store_true", help="recompute by path mutation and fail on mismatch")
        p.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
        if g_only:
            p.set_defaults(func=cmd_matrix, g_only=True)
        else:
            p.add_argument("--g-only", action="store_true")
            p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("mutate", help="apply a mutation word to a triple")
    p.add_argument("triple")
    p.add_argument("word", help="letters from {0,-1,inf}, comma separated")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("path", help="descent word from a triple to the root")
    p.add_argument("triple")
    p.set_defaults(func=cmd_path)

    p = sub.add_parser("enumerate", help="breadth-first JSON-lines dump of the exchange tree")
    p.add_argument("depth", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--depth", type=int, default=12)
    p.add_argument("--symbolic-depth", type=int, default=5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("plot-gvectors", help="g-vectors projected onto the plane x+y+z=1")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("svg", "csv"), default="svg")
    p.set_defaults(func=cmd_plot)
    return parser


_NEGATIVE_ARG = re.compile(r"^-(\d|inf)")


def _protect_negative_args(argv: Sequence[str]) -> list[str]:
    # Triples and words may start with '-' ("-2/1,-1/1,inf", "-1"); a leading
    # space keeps argparse from reading them as options. Parsers strip it.
    return [" " + a if _NEGATIVE_ARG.match(a) else a for a in argv]


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(_protect_negative_args(argv))
    try:
        return args.func(args)
    except MarkovFareyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

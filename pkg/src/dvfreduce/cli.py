"""Command-line front end.

Exit codes: 0 success, 1 property violation (bench rank mismatch), 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bench import format_bench, run_bench
from .cubical import betti, build_complex, format_pbm, load_pbm, synth_image
from .dvf import VectorField, format_pairs, induced_relation, is_adm_vector_field, parse_pairs
from .errors import BoundsError, FormatError, ParameterError, PivotError
from .gf2core import Gf2Matrix, format_matrix, parse_matrix, rank_dense
from .reduce import eliminate_pivots, format_reduced, rank_via_dvf
from .rsalg import rs_generate

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _read_matrix(path: str) -> Gf2Matrix:
    data = _read_bytes(path)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError("matrix file is not UTF-8", offset=exc.start) from None
    return parse_matrix(text)


def cmd_gen(args, out) -> int:
    M = _read_matrix(args.matrix)
    V, R = rs_generate(M)
    k = 1 if args.one_based else 0
    out.write("# field\n" + format_pairs(V, k))
    out.write("# edges\n" + format_pairs(sorted(R.edges), k))
    out.write("# closure\n" + format_pairs(sorted(R.closure), k))
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    M = _read_matrix(args.matrix)
    if args.field:
        V = VectorField(parse_pairs(_read_bytes(args.field).decode("utf-8")))
        in_range = all(0 <= a < M.nrows and 0 <= b < M.ncols for a, b in V)
        if not in_range or not is_adm_vector_field(M, V, induced_relation(M, V)):
            print("warning: vector field is not admissible; the critical matrix "
                  "keeps the rank but not the homological meaning", file=sys.stderr)
    else:
        V = rs_generate(M).field
    out.write(format_reduced(eliminate_pivots(M, V)))
    return EXIT_OK


def cmd_rank(args, out) -> int:
    M = _read_matrix(args.matrix)
    rank = rank_via_dvf(M) if args.method == "dvf" else rank_dense(M)
    out.write(f"{rank}\n")
    return EXIT_OK


def cmd_homology(args, out) -> int:
    img = load_pbm(_read_bytes(args.image))
    b0, b1 = betti(build_complex(img), use_dvf=args.method == "dvf")
    out.write(f"b0={b0} b1={b1}\ncomponents={b0}\n")
    return EXIT_OK


def cmd_complex(args, out) -> int:
    cx = build_complex(load_pbm(_read_bytes(args.image)))
    Path(args.d1).write_text(format_matrix(cx.d1))
    Path(args.d2).write_text(format_matrix(cx.d2))
    out.write(f"cells={len(cx.cells0)} {len(cx.cells1)} {len(cx.cells2)}\n")
    return EXIT_OK


def cmd_synth(args, out) -> int:
    out.write(format_pbm(synth_image(args.width, args.height, args.density, args.seed)))
    return EXIT_OK


def cmd_bench(args, out) -> int:
    records = run_bench(args.count, args.width, args.height, args.density, args.seed,
                        repeats=args.repeats)
    out.write(format_bench(records))
    return EXIT_OK if all(r.equal for r in records) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dvf",
        description="Admissible discrete vector fields and reduced ranks over GF(2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="build an admissible vector field with the row scan")
    p.add_argument("matrix", help="matrix file ('-' for stdin)")
    p.add_argument("--one-based", action="store_true", help="print 1-based indices")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="eliminate vector-field pivots")
    p.add_argument("matrix")
    p.add_argument("--field", help="vector-field file to use instead of the row scan")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("rank", help="GF(2) rank")
    p.add_argument("matrix")
    p.add_argument("--method", choices=("dvf", "dense"), default="dvf")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("homology", help="Betti numbers of a plain PBM image")
    p.add_argument("image")
    p.add_argument("--method", choices=("dvf", "dense"), default="dvf")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("complex", help="export the boundary matrices of a PBM image")
    p.add_argument("image")
    p.add_argument("--d1", required=True, help="output file for d1")
    p.add_argument("--d2", required=True, help="output file for d2")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("synth", help="write a seeded random PBM image")
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("bench", help="dense vs DVF rank on seeded random images")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--width", type=int, default=60)
    p.add_argument("--height", type=int, default=60)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--repeats", type=int, default=3, help="timing runs per path (median)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except (UsageError, FormatError, ParameterError, PivotError, BoundsError,
            UnicodeDecodeError) as exc:
        print(f"dvf {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 a checked property failed (path violation, refused
hypotheses, rejected perturbation), 2 bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import barcode as bc
from .bottleneck import bottleneck_distance
from .persistence import (
    InvalidComplex,
    PerturbationRejected,
    barcode_of_complex,
    format_complex,
    parse_complex,
    perturb_actions,
    require_valid_complex,
)
from .plotting import barcode_csv, barcode_svg
from .shift_space import BarcodePath, check_path, grid_oracle_shift_distance, parse_path, shift_distance
from .torus import apply_word, build_complex, intersection_number, parse_class
from .twist_word import (
    HypothesisRefused,
    WordSyntaxError,
    derive_obstruction,
    parse_and_reduce,
    parse_hypotheses,
    verify_certificate,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from None


def _load(path: str, parser):
    text = _read(path)
    try:
        return parser(text)
    except bc.FormatError as exc:
        where = f"{path}:{exc.line}" if exc.line is not None else path
        raise InputError(f"{where}: {exc.message}") from None


def _load_barcode(path: str) -> bc.Barcode:
    return _load(path, bc.parse_barcode)


def _load_complex(path: str):
    c = _load(path, parse_complex)
    try:
        return require_valid_complex(c)
    except InvalidComplex as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_persist(args) -> int:
    _emit(bc.format_barcode(barcode_of_complex(_load_complex(args.complex))), args.output)
    return EXIT_OK


def cmd_bottleneck(args) -> int:
    d = bottleneck_distance(_load_barcode(args.b1), _load_barcode(args.b2))
    print(bc.format_number(d))
    return EXIT_OK


def cmd_shiftdist(args) -> int:
    b1, b2 = _load_barcode(args.b1), _load_barcode(args.b2)
    print(bc.format_number(shift_distance(b1, b2)))
    if args.oracle is not None:
        print(f"oracle {bc.format_number(grid_oracle_shift_distance(b1, b2, args.oracle))}")
    return EXIT_OK


def cmd_sigma(args) -> int:
    b = _load_barcode(args.barcode)
    print(bc.sigma_inf(b))
    if args.by_degree and b.is_graded:
        for degree, n in sorted(bc.sigma_inf_by_degree(b).items()):
            print(f"degree {degree}: {n}")
    return EXIT_OK


def cmd_pathcheck(args) -> int:
    steps = _load(args.path, parse_path)
    violation = check_path(BarcodePath(steps, args.eps))
    if violation is None:
        print(f"ok ({len(steps)} barcodes)")
        return EXIT_OK
    print(violation)
    return EXIT_VIOLATION


def cmd_perturb(args) -> int:
    c = _load_complex(args.complex)
    try:
        out = perturb_actions(c, args.delta, args.seed)
    except PerturbationRejected as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    _emit(format_complex(out), args.output)
    return EXIT_OK


def cmd_wordcheck(args) -> int:
    hyp = _load(args.hf, parse_hypotheses)
    try:
        word = parse_and_reduce(args.word)
    except WordSyntaxError as exc:
        raise InputError(f"word: {exc}") from None
    try:
        cert = derive_obstruction(word, hyp)
    except HypothesisRefused as exc:
        print(f"refused: {exc}")
        return EXIT_VIOLATION
    sys.stdout.write(cert.to_text())
    print(verify_certificate(cert, word, hyp))
    return EXIT_OK


def cmd_torus(args) -> int:
    try:
        a, b = parse_class(args.u), parse_class(args.v)
        word = parse_and_reduce(args.word) if args.word else None
    except (ValueError, WordSyntaxError) as exc:
        raise InputError(str(exc)) from None
    pairs = [(a, b)]
    if word is not None:
        image = apply_word(word, a, b, b)
        print(f"image: ({word}) {b} = {image}")
        pairs = [(a, image), (b, image)]
    for u, v in pairs:
        n = intersection_number(u, v)
        print(f"sigma_inf({u}, {v}) = {n}")
        if n:
            sys.stdout.write(bc.format_barcode(barcode_of_complex(build_complex(u, v))))
    return EXIT_OK


def cmd_plot(args) -> int:
    b = _load_barcode(args.barcode)
    if args.output.endswith(".svg"):
        _emit(barcode_svg(b), args.output)
    elif args.output.endswith(".csv"):
        _emit(barcode_csv(b), args.output)
    else:
        raise InputError("plot output must end in .svg or .csv")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="barcodekit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("persist", help="barcode of a filtered complex")
    p.add_argument("complex")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_persist)

    p = sub.add_parser("bottleneck", help="bottleneck distance of two barcodes")
    p.add_argument("b1")
    p.add_argument("b2")
    p.set_defaults(func=cmd_bottleneck)

    p = sub.add_parser("shiftdist", help="distance between barcodes up to overall shift")
    p.add_argument("b1")
    p.add_argument("b2")
    p.add_argument("--oracle", type=float, metavar="RESOLUTION",
                   help="also print the grid-search reference value")
    p.set_defaults(func=cmd_shiftdist)

    p = sub.add_parser("sigma", help="number of semi-infinite bars")
    p.add_argument("barcode")
    p.add_argument("--by-degree", action="store_true")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("pathcheck", help="check a sampled barcode path")
    p.add_argument("path")
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_pathcheck)

    p = sub.add_parser("perturb", help="seeded perturbation of the action values")
    p.add_argument("complex")
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("wordcheck", help="obstruction certificate for a twist word")
    p.add_argument("word")
    p.add_argument("--hf", required=True, help="hypothesis file")
    p.set_defaults(func=cmd_wordcheck)

    p = sub.add_parser("torus", help="torus curve model")
    p.add_argument("u", help="class p/q (letter A twists about it)")
    p.add_argument("v", help="class r/s (letter B twists about it)")
    p.add_argument("--word")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("plot", help="barcode as SVG or CSV")
    p.add_argument("barcode")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_plot)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (bc.InvalidBarcode, bc.GradingMismatch, InvalidComplex, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())

"""Command-line front end.

Exit codes: 0 success, 2 usage or validation error, 3 I/O error.
Reports go to stdout as JSON; ``--verbose`` adds a readable summary on stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, construct, generators, jsonio
from .errors import ParseError, SubpackError
from .linalg import as_matrix
from .model import FieldTag, Packing, dumps_packing, loads_packing
from .tolerance import DEFAULT_ABSOLUTE, Tolerance

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

GENERATORS = ("hadamard-etf", "hadamard-complement", "onb-lines", "mub-c2", "random")


class CliError(Exception):
    def __init__(self, message, code=EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _read_text(path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}", EXIT_IO) from None


def _write_text(text: str, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}", EXIT_IO) from None


def _load(path, tol) -> Packing:
    try:
        return loads_packing(_read_text(path), tol)
    except ParseError as exc:
        raise CliError(f"{path}: {exc}") from None


def load_unitaries(text: str, tol) -> construct.UnitaryList:
    """Parse ``{"field": .., "size": r, "unitaries": [matrix, ...]}``.

    Each matrix is a list of r rows of r entries, entries as in packing files
    (``[re, im]`` or a plain number).
    """
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(d, dict) or not isinstance(d.get("unitaries"), list):
        raise ParseError("expected an object with a 'unitaries' list")
    mats = []
    for i, rows in enumerate(d["unitaries"]):
        try:
            mats.append(as_matrix([[_entry(x) for x in row] for row in rows]))
        except (TypeError, ValueError, SubpackError) as exc:
            raise ParseError(str(exc), f"unitaries[{i}]") from None
    us = construct.UnitaryList(mats, tol)
    if "size" in d and d["size"] != us.size:
        raise ParseError(f"declared size {d['size']} but matrices are {us.size}x{us.size}", "size")
    if FieldTag.parse(d.get("field", "C")) is FieldTag.REAL and not us.is_real(tol):
        raise ParseError("complex entries in a real unitary list", "field")
    return us


def _entry(x) -> complex:
    if isinstance(x, list) and len(x) == 2:
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return complex(float(x))
    raise ValueError("entry must be a number or [re, im]")


def dumps_unitaries(field, us) -> str:
    field = FieldTag.parse(field)
    return jsonio.dumps({
        "field": field.value,
        "size": us[0].shape[0],
        "unitaries": [[[[float(z.real), float(z.imag)] for z in row] for row in u] for u in us],
    }) + "\n"


def cmd_gen(args, tol) -> int:
    name = args.name
    if name == "hadamard-etf":
        p = generators.hadamard_etf()
    elif name == "hadamard-complement":
        p = generators.hadamard_complement_paper_bases()
    elif name == "onb-lines":
        p = generators.onb_lines(args.field, _need(args.k, "--k"))
    elif name == "mub-c2":
        p = generators.mub_c2()
    elif name == "random":
        p = generators.random_packing(
            args.field, _need(args.k, "--k"), _need(args.m, "--m"), _need(args.n, "--n"), args.seed
        )
    else:
        raise CliError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")
    _write_text(dumps_packing(p), args.output)
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise CliError(f"{flag} is required for this generator")
    return value


def cmd_check(args, tol) -> int:
    p = _load(args.input, tol)
    report = analysis.certify(p, tol)
    _write_text(jsonio.dumps(report.to_dict()) + "\n", None)
    if args.verbose:
        print(analysis.summary(report), file=sys.stderr)
    return EXIT_OK


def cmd_bounds(args, tol) -> int:
    k, m, n = args.k, args.m, args.n
    if min(k, m, n) < 1 or m > k:
        raise CliError(f"need positive k, m, n with m <= k; got k={k}, m={m}, n={n}")
    d = {
        "field": FieldTag.parse(args.field).value,
        "ambient_dim": k,
        "dim": m,
        "n": n,
        "gerzon": analysis.gerzon_bound(args.field, k),
        "simplex": analysis.simplex_bound(k, m, n) if n >= 2 else None,
        "orthoplex": analysis.orthoplex_bound(k, m),
        "regime": analysis.regime(args.field, k, n).value,
    }
    d["fractions"] = {
        key: analysis.snap_fraction(d[key], tol) for key in ("simplex", "orthoplex") if d[key] is not None
    }
    _write_text(jsonio.dumps(d) + "\n", None)
    return EXIT_OK


def cmd_tensor(args, tol) -> int:
    p = _load(args.input, tol)
    if args.unitaries is not None:
        try:
            us = load_unitaries(_read_text(args.unitaries), tol)
        except ParseError as exc:
            raise CliError(f"{args.unitaries}: {exc}") from None
    else:
        us = generators.random_unitaries(p.field, args.r, p.n, args.random_seed)
    out = construct.tensor_with_unitaries(p, us, tol)
    _write_text(dumps_packing(out), args.output)
    return EXIT_OK


def cmd_tensor2(args, tol) -> int:
    p = _load(args.input1, tol)
    q = _load(args.input2, tol)
    _write_text(dumps_packing(construct.tensor_packings(p, q, tol)), args.output)
    return EXIT_OK


def cmd_complement(args, tol) -> int:
    p = _load(args.input, tol)
    _write_text(dumps_packing(construct.complement(p, tol)), args.output)
    return EXIT_OK


def _field(value):
    try:
        return FieldTag.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _seed(value):
    s = int(value)
    if not 0 <= s <= generators.SEED_MAX:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return s


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help=f"absolute comparison tolerance (default {DEFAULT_ABSOLUTE:g})")
    common.add_argument("--verbose", "-v", action="store_true", default=argparse.SUPPRESS,
                        help="print a human-readable summary to stderr")

    parser = argparse.ArgumentParser(
        prog="subpack", parents=[common],
        description="Generate, transform and certify packings of subspaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="write a seed packing")
    g.add_argument("name", choices=GENERATORS)
    g.add_argument("--field", type=_field, default=FieldTag.REAL)
    g.add_argument("--k", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--seed", type=_seed, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", parents=[common], help="certify a packing file")
    c.add_argument("input")
    c.set_defaults(func=cmd_check)

    b = sub.add_parser("bounds", parents=[common], help="Gerzon, simplex and orthoplex bounds")
    b.add_argument("--field", type=_field, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--m", type=int, default=1)
    b.add_argument("--n", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    t = sub.add_parser("tensor", parents=[common], help="tensor each subspace with a unitary")
    t.add_argument("input")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--random-seed", type=_seed)
    src.add_argument("--unitaries")
    t.add_argument("--r", type=int, default=2, help="unitary size for --random-seed")
    t.add_argument("-o", "--output")
    t.set_defaults(func=cmd_tensor)

    t2 = sub.add_parser("tensor2", parents=[common], help="tensor two packings subspace by subspace")
    t2.add_argument("input1")
    t2.add_argument("input2")
    t2.add_argument("-o", "--output")
    t2.set_defaults(func=cmd_tensor2)

    co = sub.add_parser("complement", parents=[common], help="orthogonal complement of every subspace")
    co.add_argument("input")
    co.add_argument("-o", "--output")
    co.set_defaults(func=cmd_complement)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.verbose = getattr(args, "verbose", False)
    try:
        tol = Tolerance(getattr(args, "tol", DEFAULT_ABSOLUTE))
    except ValueError as exc:
        print(f"subpack: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, tol)
    except CliError as exc:
        print(f"subpack {args.command}: error: {exc}", file=sys.stderr)
        return exc.code
    except (SubpackError, ValueError) as exc:
        print(f"subpack {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

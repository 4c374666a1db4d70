"""Command-line interface.

Subcommands: extract, diagonal, kernel, annihilate, roots, gen.  Exit codes:
0 success, 1 verification failure, 2 input/hypothesis error.  Field specs
look like "Q", "F2", "F4", "F4:t^2+t+1" or "F3^2:t^2+1"; polynomial
arguments follow the exprparse grammar.  File outputs are written
atomically (temp file + rename).
"""

import argparse
import json
import os
import random
import sys
import tempfile
from dataclasses import dataclass

from .algebra.fields import GF, QQ
from .annihilator import frobenius_relation, verify_relation
from .automaton import export_dot, from_json, to_json
from .cartier import diagonal_automaton, rational_kernel
from .diagrat import DiagonalRep, diagonal_coeffs, furstenberg_rep
from .errors import AlgSeriesError, ParseError
from .exprparse import parse_poly, parse_unipoly
from .extract import FixedPointProblem, fixed_point_coefficients, fs_coefficients
from .roots import roots_automata

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


@dataclass
class CliConfig:
    """Validated command configuration shared by the subcommands."""

    field: object = None        # parsed field descriptor, if the command has one
    order: int = 256
    fmt: str = "text"
    dot_path: str = None
    json_path: str = None
    seed: int = 0

    @classmethod
    def from_args(cls, args, with_field=True):
        order = getattr(args, "order", 256)
        if order < 1:
            raise AlgSeriesError(f"order must be >= 1, got {order}")
        return cls(
            field=parse_field_spec(args.field) if with_field else None,
            order=order,
            fmt=getattr(args, "format", "text"),
            dot_path=getattr(args, "dot", None),
            json_path=getattr(args, "json", None),
            seed=getattr(args, "seed", 0),
        )


def parse_field_spec(spec):
    """Field descriptor from "Q", "F<q>", "F<p>^<k>" with optional ":modulus"."""
    if spec == "Q":
        return QQ
    if not spec.startswith("F"):
        raise AlgSeriesError(f"bad field spec {spec!r}; expected Q or F<q>[...]")
    body, _, modulus_text = spec[1:].partition(":")
    base, _, power = body.partition("^")
    try:
        q = int(base)
        k = int(power) if power else None
    except ValueError as exc:
        raise AlgSeriesError(f"bad field spec {spec!r}") from exc
    if k is not None:
        q = q ** k
    if modulus_text:
        p = GF(q).char
        modulus = parse_unipoly(modulus_text, GF(p), var="t")
        return GF(q, modulus=modulus.coeffs)
    return GF(q)


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".algseries-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit_series(values, field, fmt, start=0):
    if fmt == "json":
        print(json.dumps([field.to_literal(v) for v in values]))
    else:
        for n, v in enumerate(values, start=start):
            print(f"{n}\t{field.fmt(v)}")


def cmd_extract(args):
    cfg = CliConfig.from_args(args)
    field = cfg.field
    poly = parse_poly(args.poly, field)
    problem = FixedPointProblem(poly)
    series = fs_coefficients(problem, cfg.order)
    _emit_series(series.coeffs[1:], field, cfg.fmt, start=1)
    if args.check:
        oracle = fixed_point_coefficients(problem, cfg.order)
        if oracle != series:
            print("check: MISMATCH against fixed-point oracle", file=sys.stderr)
            return EXIT_VERIFY
        print("check: ok (matches fixed-point oracle)", file=sys.stderr)
    return EXIT_OK


def cmd_diagonal(args):
    cfg = CliConfig.from_args(args)
    field = cfg.field
    if args.from_poly:
        rep = furstenberg_rep(parse_poly(args.from_poly, field))
        print(f"num = {rep.num.to_text()}")
        print(f"den = {rep.den.to_text()}")
    else:
        if not args.num or not args.den:
            raise AlgSeriesError("need --num and --den, or --from-poly")
        rep = DiagonalRep(parse_poly(args.num, field),
                          parse_poly(args.den, field))
    series = diagonal_coeffs(rep, cfg.order)
    _emit_series(series.coeffs, field, cfg.fmt)
    return EXIT_OK


def cmd_kernel(args):
    cfg = CliConfig.from_args(args)
    num = parse_poly(args.num, cfg.field)
    den = parse_poly(args.den, cfg.field)
    kernel = rational_kernel(num, den)
    print(f"states: {kernel.n_states}")
    print(f"degree bound: {kernel.degree_bound}")
    automaton = diagonal_automaton(kernel) if args.diagonal else kernel.to_dfao()
    if cfg.dot_path:
        _atomic_write(cfg.dot_path, export_dot(automaton))
    if cfg.json_path:
        _atomic_write(cfg.json_path, to_json(automaton))
    return EXIT_OK


def cmd_annihilate(args):
    cfg = CliConfig.from_args(args, with_field=False)
    with open(args.automaton) as handle:
        automaton = from_json(handle.read())
    relation = frobenius_relation(automaton, check_order=cfg.order)
    print(relation.to_text())
    series = automaton.generate(cfg.order + relation.max_coeff_degree())
    if verify_relation(relation, series, check_order=cfg.order):
        print(f"verified at order {cfg.order}")
        return EXIT_OK
    print(f"verification FAILED at order {cfg.order}", file=sys.stderr)
    return EXIT_VERIFY


def cmd_roots(args):
    cfg = CliConfig.from_args(args)
    field = cfg.field
    poly = parse_poly(args.poly, field)
    outcome = roots_automata(poly, cfg.order, rng=random.Random(cfg.seed))
    print(f"relation: {outcome.relation.to_text()}")
    for a0 in outcome.skipped:
        print(f"warning: residue root {a0!r} is not simple; skipped")
    for idx, (branch, automaton) in enumerate(outcome.branches):
        coeffs = " ".join(field.fmt(c) for c in branch.series.coeffs[:32])
        print(f"branch {idx}: a0 = {branch.a0!r}, {automaton.n_states} states")
        print(f"  coefficients: {coeffs}")
        if cfg.dot_path:
            os.makedirs(cfg.dot_path, exist_ok=True)
            _atomic_write(os.path.join(cfg.dot_path, f"branch{idx}.dot"),
                          export_dot(automaton))
        if cfg.json_path:
            os.makedirs(cfg.json_path, exist_ok=True)
            _atomic_write(os.path.join(cfg.json_path, f"branch{idx}.json"),
                          to_json(automaton))
    if outcome.failures:
        print("verification FAILED for: "
              + ", ".join(repr(x) for x in outcome.failures), file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_gen(args):
    cfg = CliConfig.from_args(args, with_field=False)
    with open(args.automaton) as handle:
        automaton = from_json(handle.read())
    values = [automaton.run_raw(n) for n in range(cfg.order + 1)]
    print(" ".join(automaton.field.fmt(v) for v in values))
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="algseries",
        description="Exact computation with algebraic power series: "
                    "coefficient extraction, diagonals, kernels, automata.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, field=True):
        if field:
            p.add_argument("--field", required=True,
                           help='field spec: Q, F2, F4, F4:t^2+t+1, F3^2:t^2+1')
        p.add_argument("-n", "--order", type=int, default=256,
                       help="truncation order / sequence length (default 256)")

    p = sub.add_parser("extract", help="Flajolet-Soria coefficients of Y=P(X,Y)")
    add_common(p)
    p.add_argument("--poly", required=True, help="P(X,Y) with P(0,0)=P'_Y(0,0)=0")
    p.add_argument("--check", action="store_true",
                   help="cross-check against the fixed-point oracle")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("diagonal", help="diagonal coefficients of num/den")
    add_common(p)
    p.add_argument("--num", help="numerator polynomial")
    p.add_argument("--den", help="denominator polynomial (den(0,0) != 0)")
    p.add_argument("--from-poly", dest="from_poly",
                   help="build num/den from a root equation Q(X,Y)=0 instead")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_diagonal)

    p = sub.add_parser("kernel", help="Cartier kernel automaton of num/den")
    add_common(p)
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.add_argument("--dot", help="write DOT rendering to this file")
    p.add_argument("--json", help="write automaton JSON to this file")
    p.add_argument("--diagonal", action="store_true",
                   help="restrict to equal digit pairs (diagonal sequence)")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("annihilate",
                       help="Frobenius relation for an automaton's series")
    add_common(p, field=False)
    p.add_argument("--automaton", required=True, help="DFAO JSON file")
    p.set_defaults(func=cmd_annihilate)

    p = sub.add_parser("roots", help="series roots of P as automata")
    add_common(p)
    p.add_argument("--poly", required=True, help="P(X,Y) over a finite field")
    p.add_argument("--dot", help="directory for per-branch DOT files")
    p.add_argument("--json", help="directory for per-branch JSON files")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the randomized closure spot checks")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("gen", help="run an automaton on 0..N")
    add_common(p, field=False)
    p.add_argument("--automaton", required=True, help="DFAO JSON file")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AlgSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 solvable / success, 1 no solution, 2 input or usage error.
Exact quantities travel as ``"p/q"`` strings; analyzer output is floats.
"""
import argparse
import csv
import json
import math
import sys
from pathlib import Path

from ._rational import to_fraction
from .analyzer import (
    DEFAULT_DEPTH,
    DEFAULT_TOL,
    detect_divergence,
    example_bank,
    nontangential_coefficients,
    radial_coefficients,
    radial_grid,
    rational_handle,
)
from .errors import PickCFError
from .julia import augment_rational, reduce_rational
from .ratfun import RationalFunction, is_pick
from .solver import ProblemData, check, construct_solution, solve_laurent, verify_solution

EXIT_OK, EXIT_NO_SOLUTION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(path):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _emit(obj, out):
    out.write(json.dumps(obj, indent=2, sort_keys=True))
    out.write("\n")


def _problem(args):
    try:
        p = ProblemData.from_json(_load_json(args.problem))
        updates = {}
        if args.relaxed:
            updates["relaxed"] = True
        if args.laurent is not None:
            updates["a_minus1"] = to_fraction(args.laurent)
        if updates:
            p = ProblemData(**{**p.__dict__, **updates})
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"invalid problem: {exc}") from exc
    return p


def _function(path):
    try:
        return RationalFunction.from_json(_load_json(path))
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"invalid rational function: {exc}") from exc


def cmd_check(args, out):
    p = _problem(args)
    verdict = check(p)
    _emit({"problem": p.to_json(), "verdict": verdict.to_json()}, out)
    return EXIT_OK if verdict.solvable else EXIT_NO_SOLUTION


def cmd_solve(args, out):
    p = _problem(args)
    if p.a_minus1 is not None:
        verdict, f = solve_laurent(p)
    else:
        verdict = check(p)
        f = construct_solution(p) if verdict.solvable else None
    result = {"problem": p.to_json(), "verdict": verdict.to_json()}
    if f is None:
        _emit(result, out)
        return EXIT_NO_SOLUTION
    result.update(
        solution=f.to_json(),
        degree=f.degree(),
        pick_certificate=is_pick(f).to_json(),
        verification=verify_solution(f, p).to_json(),
    )
    _emit(result, out)
    return EXIT_OK


def cmd_reduce(args, out):
    g = reduce_rational(_function(args.function), to_fraction(args.node))
    _emit(g.to_json(), out)
    return EXIT_OK


def cmd_augment(args, out):
    f = augment_rational(
        _function(args.function), to_fraction(args.node), to_fraction(args.a0), to_fraction(args.a1)
    )
    _emit(f.to_json(), out)
    return EXIT_OK


def _handle(args):
    target = args.target
    if Path(target).is_file():
        return rational_handle(_function(target), label=target)
    params = {}
    if args.nu is not None:
        params["nu"] = args.nu
    if args.value is not None:
        params["value"] = float(args.value)
    return example_bank(target, **params)


def cmd_analyze(args, out):
    h = _handle(args)
    node = float(to_fraction(args.node)) if "/" in args.node else float(args.node)
    grid = radial_grid(args.grid_depth)
    result = {"handle": h.label}
    if args.divergence is not None:
        report = detect_divergence(h, node, args.divergence)
        result["divergence"] = {"order": args.divergence, **report.to_json()}
    else:
        if args.aperture is not None:
            est = nontangential_coefficients(h, node, args.order, args.aperture, r_grid=grid, tol=args.tol)
        else:
            est = radial_coefficients(h, node, args.order, y_grid=grid, tol=args.tol)
        result["expansion"] = est.to_json()
        if args.csv:
            with open(args.csv, "w", newline="") as fh:
                w = csv.writer(fh)
                w.writerow(["y", "k", "deriv_re", "deriv_im"])
                for k, vals in sorted(est.samples.items()):
                    for y, v in zip(grid, vals):
                        d = v * math.factorial(k)
                        w.writerow([repr(float(y)), k, repr(d.real), repr(d.imag)])
    _emit(result, out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pickcf",
        description="Boundary Carathéodory-Fejér interpolation in the Pick class.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def problem_cmd(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("problem", help="problem JSON file, or - for stdin")
        sp.add_argument("--relaxed", action="store_true", help="treat the top condition as f_n <= a^n")
        sp.add_argument("--laurent", metavar="A_MINUS1", help="prescribe the residue a^-1 at the node")
        return sp

    problem_cmd("check", "solvability verdict with certificate").set_defaults(func=cmd_check)
    problem_cmd("solve", "construct and verify a rational solution").set_defaults(func=cmd_solve)

    sp = sub.add_parser("reduce", help="Julia reduction of a rational function")
    sp.add_argument("function", help="rational-function JSON file, or - for stdin")
    sp.add_argument("--node", default="0")
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("augment", help="augmentation of a rational function")
    sp.add_argument("function")
    sp.add_argument("--node", default="0")
    sp.add_argument("--a0", required=True)
    sp.add_argument("--a1", required=True)
    sp.set_defaults(func=cmd_augment)

    sp = sub.add_parser("analyze", help="numerical pseudo-Taylor coefficients")
    sp.add_argument("target", help="bank id (ex_2_1, ex_2_2, ex_2_3, constant) or rational-function JSON file")
    sp.add_argument("--node", default="0")
    sp.add_argument("--order", type=int, default=3)
    sp.add_argument("--nu", type=int, help="parameter of ex_2_2 (default 5)")
    sp.add_argument("--value", help="value of the constant handle")
    sp.add_argument("--aperture", type=float, help="use Stolz-angle rays with aperture K >= 1")
    sp.add_argument("--divergence", type=int, metavar="K", help="run the divergence test at order K")
    sp.add_argument("--tol", type=float, default=DEFAULT_TOL, help="convergence tolerance (default %(default)g)")
    sp.add_argument("--grid-depth", type=int, default=DEFAULT_DEPTH,
                    help="grid y = 0.1 * 2^-j, j = 0..depth (default %(default)d)")
    sp.add_argument("--csv", help="write (y, f^(k)(x+iy)) samples to this CSV file")
    sp.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, PickCFError) as exc:
        print(f"pickcf: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: ``folint resolve|integrate|bound|check``.

Exit codes: 0 success (integral found, check passed), 1 certified
negative answer, 2 bad input or unmet precondition.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import floor
from typing import Any, Dict, List, Optional, Sequence

from . import __version__
from .candidates import SolutionSet, build_VS, compute_RFS, genus_degree_bound, theorem1_bound
from .errors import FolintError, GenusOne
from .fileformats import (FormatError, config_from_json, config_to_json, form_from_json, loads_json,
                          rational_to_json, solutions_from_json)
from .integrator import FirstIntegral, algorithm1, decide_dic1
from .poly import parse_poly
from .polyform import is_first_integral
from .resolution import DEFAULT_DEPTH_LIMIT, resolve_dicritical

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(FolintError):
    pass


def _read(path: str):
    try:
        if path == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(path, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return loads_json(data)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def _load_config(args, omega):
    if getattr(args, "config", None):
        return config_from_json(_read(args.config))
    return resolve_dicritical(omega, args.depth_limit)


def _load_solutions(args, omega, cfg) -> SolutionSet:
    if not getattr(args, "solutions", None):
        return SolutionSet()
    S = solutions_from_json(_read(args.solutions), cfg)
    bad = S.check_invariant(omega)
    if bad:
        raise UsageError(f"solution curve(s) {bad} are not invariant")
    return S


def _emit(args, text: str, report: Dict[str, Any]):
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(text)


def _integral_report(fi: FirstIntegral, omega) -> Dict[str, Any]:
    return {"result": "integral", "F": fi.F.to_list(), "G": fi.G.to_list(),
            "F_text": str(fi.F), "G_text": str(fi.G), "degree": fi.degree,
            "genus": fi.genus, "certificate": "PASS" if fi.certify(omega) else "FAIL"}


def cmd_resolve(args) -> int:
    omega = form_from_json(_read(args.form))
    cfg = resolve_dicritical(omega, args.depth_limit)
    doc = config_to_json(cfg)
    doc["degree"] = omega.degree
    print(json.dumps(doc, indent=None if args.compact else 2))
    return EXIT_OK


def cmd_integrate(args) -> int:
    omega = form_from_json(_read(args.form))
    if not args.dic1 and args.genus is None:
        raise UsageError("--genus is required unless --dic1 is given")
    if args.genus is not None and args.genus == 1:
        raise GenusOne("genus one is excluded")
    cfg = _load_config(args, omega)
    if args.dic1:
        fi = decide_dic1(omega, cfg)
    else:
        if cfg.dic >= 3 and not args.solutions:
            raise UsageError(f"dic = {cfg.dic}: --solutions with {cfg.dic - 2} curves is required")
        S = _load_solutions(args, omega, cfg)
        fi = algorithm1(omega, args.genus, cfg, S)
    if fi is None:
        _emit(args, "NO: no rational first integral" + ("" if args.dic1 else f" of genus {args.genus}"),
              {"result": "NO", "dic": cfg.dic, "points": cfg.n})
        return EXIT_NO
    rep = _integral_report(fi, omega)
    text = "\n".join([f"F = {fi.F}", f"G = {fi.G}", f"degree = {fi.degree}",
                      f"genus = {fi.genus if fi.genus is not None else 'unknown'}",
                      f"certificate: {rep['certificate']}"])
    _emit(args, text, rep)
    return EXIT_OK if rep["certificate"] == "PASS" else EXIT_ERROR


def cmd_bound(args) -> int:
    omega = form_from_json(_read(args.form))
    r = omega.degree
    if args.dic1:
        b: Optional[Fraction] = theorem1_bound(r)
    else:
        if args.max_genus == 1:
            raise GenusOne("genus one is excluded")
        cfg = _load_config(args, omega)
        S = _load_solutions(args, omega, cfg) if cfg.dic >= 3 else SolutionSet()
        if cfg.dic >= 3 and len(S) == 0:
            raise UsageError(f"dic = {cfg.dic}: --solutions with {cfg.dic - 2} curves is required")
        b = genus_degree_bound(compute_RFS(cfg, build_VS(cfg, r, S)), args.max_genus)
    if b is None:
        _emit(args, "bound: unbounded (no admissible candidate class)", {"bound": None, "floor": None})
        return EXIT_OK
    _emit(args, f"bound = {b} (floor {floor(b)})", {"bound": rational_to_json(b), "floor": floor(b)})
    return EXIT_OK


def cmd_check(args) -> int:
    omega = form_from_json(_read(args.form))
    try:
        F, G = (parse_poly(t) for t in args.pencil)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok = is_first_integral(omega, F, G)
    _emit(args, "PASS" if ok else "FAIL", {"result": "PASS" if ok else "FAIL"})
    return EXIT_OK if ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="folint", description="Rational first integrals of plane foliations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable report")
    common.add_argument("--depth-limit", type=int, default=DEFAULT_DEPTH_LIMIT, metavar="N",
                        help="maximum blow-up depth (default %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", parents=[common], help="print the dicritical configuration")
    p.add_argument("form")
    p.add_argument("--compact", action="store_true", help="single-line JSON")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("integrate", parents=[common], help="search for a rational first integral")
    p.add_argument("form")
    p.add_argument("--config", help="configuration file instead of native resolution")
    p.add_argument("--genus", type=int, help="genus of the integral (not 1)")
    p.add_argument("--solutions", help="invariant curves file (needed when dic >= 3)")
    p.add_argument("--dic1", action="store_true", help="decide the single-dicritical case")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("bound", parents=[common], help="bound the degree of a first integral")
    p.add_argument("form")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--max-genus", type=int, metavar="G")
    g.add_argument("--dic1", action="store_true")
    p.add_argument("--config")
    p.add_argument("--solutions")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("check", parents=[common], help="verify a pencil is a first integral")
    p.add_argument("form")
    p.add_argument("--pencil", nargs=2, required=True, metavar=("F", "G"))
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except FolintError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    except RecursionError:
        print("error: input too deeply nested", file=sys.stderr)
    except Exception as exc:  # never let a traceback escape to the user
        print(f"error: internal failure: {type(exc).__name__}: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

JSON reports go to stdout, human-readable summaries to stderr.  Exit codes:
0 = all verdicts pass, 1 = a mathematical verdict failed, 2 = input or
validation error, 3 = resource envelope exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .counting import CountReport, count_complex, count_complex_additive, enumeration_estimate
from .documents import complex_to_document, document_to_json, load_complex, read_document
from .ehrhart import ehrhart_polynomial, hstar_vector
from .errors import InputError, ResourceLimitError, ValidationError
from .geometry import Simplex
from .complexes import generate_complex
from .numtheory import dilation_plan
from .verify import (VERIFY_ENUMERATION_BUDGET, probe_dilations, run_fuzz,
                     run_verify)

EXIT_PASS = 0
EXIT_VERDICT_FAIL = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _note(message: str) -> None:
    print(message, file=sys.stderr)


def _load(path: str):
    doc = read_document(path)
    return doc, load_complex(doc)


def _document_simplex(doc, index: int) -> Simplex:
    if not 0 <= index < len(doc.maximal_simplices):
        raise InputError(
            f"--simplex {index} out of range; document has "
            f"{len(doc.maximal_simplices)} maximal simplices")
    face = sorted(doc.maximal_simplices[index])
    return Simplex(tuple(doc.vertices[i] for i in face))


def _cmd_count(args) -> int:
    doc, complex_ = _load(args.file)
    if complex_.faces and enumeration_estimate(complex_, args.dilate) > VERIFY_ENUMERATION_BUDGET:
        count = count_complex_additive(complex_, args.dilate, interiors="ehrhart")
        method = "additive"
    else:
        count = count_complex(complex_, args.dilate)
        method = "enumeration"
    report = CountReport(object_id=Path(args.file).stem, dilation=args.dilate,
                         count=count, method=method)
    _emit(report.as_dict())
    _note(f"{count} lattice points at dilation {args.dilate} ({method})")
    return EXIT_PASS


def _cmd_ehrhart(args) -> int:
    doc = read_document(args.file)
    s = _document_simplex(doc, args.simplex)
    poly = ehrhart_polynomial(s)
    payload = {"object_id": Path(args.file).stem, "simplex": args.simplex,
               "vertices": [list(v) for v in s.vertices],
               "intrinsic_dim": s.intrinsic_dim}
    payload.update(poly.as_dict())
    _emit(payload)
    _note(f"degree {poly.degree} polynomial, coefficients "
          + ", ".join(str(c) for c in poly.coefficients))
    return EXIT_PASS


def _cmd_hstar(args) -> int:
    doc = read_document(args.file)
    s = _document_simplex(doc, args.simplex)
    poly = ehrhart_polynomial(s)
    hstar = hstar_vector(poly)
    payload = {"object_id": Path(args.file).stem, "simplex": args.simplex,
               "vertices": [list(v) for v in s.vertices],
               "intrinsic_dim": s.intrinsic_dim,
               "coefficients": [str(c) for c in poly.coefficients],
               "hstar": list(hstar.entries)}
    _emit(payload)
    _note(f"h* = {list(hstar.entries)} (sum {sum(hstar.entries)})")
    return EXIT_PASS


def _cmd_tmin(args) -> int:
    plan = dilation_plan(args.dim, args.modulus)
    _emit(plan.as_dict())
    _note(f"dilation {plan.dilation} guarantees the congruence mod "
          f"{plan.modulus} in dimension {plan.dim}")
    return EXIT_PASS


def _cmd_verify(args) -> int:
    doc, complex_ = _load(args.file)
    report = run_verify(complex_, args.modulus, input_id=Path(args.file).stem)
    _emit(report.as_dict())
    sub_failures = sum(1 for r in report.subchecks if not r.passed)
    _note(f"count {report.count} ≡ {report.count_residue}, euler {report.euler} "
          f"≡ {report.euler_residue} (mod {report.modulus}) at dilation "
          f"{report.dilation}: {report.verdict}")
    if sub_failures:
        _note(f"{sub_failures} of {len(report.subchecks)} per-simplex sub-checks failed")
    return EXIT_PASS if report.all_passed else EXIT_VERDICT_FAIL


def _cmd_fuzz(args) -> int:
    summary = run_fuzz(args.dim, args.grid, args.modulus, args.trials, args.seed)
    _emit(summary.as_dict())
    _note(f"{summary.passes}/{summary.trials} trials passed at dilation "
          f"{summary.dilation} (mod {summary.modulus})")
    return EXIT_PASS if summary.passed else EXIT_VERDICT_FAIL


def _parse_keep(text: str) -> Fraction:
    try:
        keep = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--keep must be a fraction like 2/3, got {text!r}") from exc
    return keep


def _cmd_gen(args) -> int:
    complex_ = generate_complex(args.dim, args.grid, _parse_keep(args.keep), args.seed)
    doc = complex_to_document(complex_)
    sys.stdout.write(document_to_json(doc))
    _note(f"{len(doc.maximal_simplices)} maximal simplices on the "
          f"[0,{args.grid}]^{args.dim} grid (seed {args.seed}, keep {args.keep})")
    return EXIT_PASS


def _cmd_probe(args) -> int:
    doc, complex_ = _load(args.file)
    report = probe_dilations(complex_, args.modulus, args.tmax,
                             input_id=Path(args.file).stem)
    _emit(report.as_dict())
    good = [row.dilation for row in report.rows if row.congruent]
    _note(f"congruent dilations up to {args.tmax}: {good} "
          f"(planned dilation {report.planned_dilation})")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="simplat",
        description="Exact lattice-point counts and dilation congruence "
                    "checks on lattice simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count lattice points of the dilated complex")
    p.add_argument("file")
    p.add_argument("--dilate", type=int, required=True, metavar="T")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("ehrhart", help="counting polynomial of one maximal simplex")
    p.add_argument("file")
    p.add_argument("--simplex", type=int, required=True, metavar="I")
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser("hstar", help="h*-vector of one maximal simplex")
    p.add_argument("file")
    p.add_argument("--simplex", type=int, required=True, metavar="I")
    p.set_defaults(func=_cmd_hstar)

    p = sub.add_parser("tmin", help="dilation plan for a dimension and modulus")
    p.add_argument("--dim", type=int, required=True, metavar="D")
    p.add_argument("--modulus", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_tmin)

    p = sub.add_parser("verify", help="check count ≡ euler characteristic (mod N)")
    p.add_argument("file")
    p.add_argument("--modulus", type=int, required=True, metavar="N")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("fuzz", help="verify many generated complexes")
    p.add_argument("--dim", type=int, required=True, metavar="D")
    p.add_argument("--grid", type=int, required=True, metavar="G")
    p.add_argument("--modulus", type=int, required=True, metavar="N")
    p.add_argument("--trials", type=int, required=True, metavar="K")
    p.add_argument("--seed", type=int, required=True, metavar="S")
    p.set_defaults(func=_cmd_fuzz)

    p = sub.add_parser("gen", help="emit a generated complex document")
    p.add_argument("--dim", type=int, required=True, metavar="D")
    p.add_argument("--grid", type=int, required=True, metavar="G")
    p.add_argument("--keep", required=True, metavar="P/Q")
    p.add_argument("--seed", type=int, required=True, metavar="S")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("probe", help="tabulate the congruence for t = 1..T")
    p.add_argument("file")
    p.add_argument("--modulus", type=int, required=True, metavar="N")
    p.add_argument("--tmax", type=int, required=True, metavar="T")
    p.set_defaults(func=_cmd_probe)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValidationError) as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        _note(f"resource limit: {exc}")
        return EXIT_RESOURCE


if __name__ == "__main__":
    raise SystemExit(main())

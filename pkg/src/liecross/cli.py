"""Command line interface.

Every subcommand takes a workspace document and emits a deterministic report
stream: identical inputs and flags produce byte-identical output, whatever
the worker count.  Exit codes: 0 success/valid, 1 an axiom or connection
failed, 2 usage or document problems, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebras import (
    validate_action,
    validate_crossed_module,
    validate_lie_algebra,
)
from .errors import (
    BudgetExceededError,
    DocumentError,
    EndpointMismatchError,
    FieldMismatchError,
    FiniteFieldRequiredError,
    InvalidDerivationError,
    ShapeMismatchError,
)
from .documents import Workspace, parse_workspace
from .groupoid import (
    DEFAULT_BUDGET,
    HomGroupoid,
    build_hom_groupoid,
    enumerate_derivations,
    enumerate_morphisms,
    homotopy_classes,
)
from .homotopy import connects, homotopy_target, is_f0_derivation, shift_morphism
from .linalg import LinearMap
from .morphisms import CrossedMorphism, validate_crossed_morphism
from .validation import ValidationReport


def _matrix_json(m: LinearMap) -> list[list[str]]:
    return [[str(e) for e in row] for row in m.entries]


def _matrix_text(m: LinearMap) -> str:
    return str(m)


def _sizes_text(classes: list[list[int]]) -> str:
    return "[" + ",".join(str(len(c)) for c in sorted(classes, key=len)) + "]"


def _report_json(report: ValidationReport) -> dict:
    return {
        "subject": report.subject,
        "ok": report.ok,
        "checks": report.checks,
        "failures": [
            {"check": f.check, "indices": list(f.indices),
             "lhs": str(f.lhs), "rhs": str(f.rhs)}
            for f in report.failures],
    }


def _emit(args, out, text_lines: list[str], data: dict):
    if args.format == "structured":
        print(json.dumps(data, indent=2), file=out)
    else:
        for line in text_lines:
            print(line, file=out)


def _workspace_reports(ws: Workspace) -> list[ValidationReport]:
    reports = []
    for name, alg in ws.algebras.items():
        report = validate_lie_algebra(alg)
        report.subject = name
        reports.append(report)
    for name, xm in ws.crossed_modules.items():
        report = validate_action(xm.action)
        report.merge(validate_crossed_module(xm))
        report.subject = name
        reports.append(report)
    for name, f in ws.morphisms.items():
        reports.append(validate_crossed_morphism(f, subject=name))
    for name, cert in ws.derivations.items():
        report = is_f0_derivation(cert.d, cert.base)
        report.subject = name
        reports.append(report)
    return reports


def _cmd_validate(ws: Workspace, args, out) -> int:
    reports = _workspace_reports(ws)
    lines = [line for report in reports for line in report.lines()]
    ok = all(report.ok for report in reports)
    _emit(args, out, lines,
          {"command": "validate", "ok": ok,
           "reports": [_report_json(r) for r in reports]})
    return 0 if ok else 1


def _cmd_enumerate_morphisms(ws: Workspace, args, out) -> int:
    source = ws.require_module(args.source)
    target = ws.require_module(args.target)
    found = enumerate_morphisms(source, target,
                                budget=args.budget, workers=args.workers)
    lines = [f"morphisms={len(found)}"]
    lines += [f"morphism {i}: f1={_matrix_text(f.f1)} f0={_matrix_text(f.f0)}"
              for i, f in enumerate(found)]
    _emit(args, out, lines,
          {"command": "enumerate-morphisms", "count": len(found),
           "morphisms": [{"f1": _matrix_json(f.f1), "f0": _matrix_json(f.f0)}
                         for f in found]})
    return 0


def _cmd_enumerate_derivations(ws: Workspace, args, out) -> int:
    base = ws.require_morphism(args.base)
    found = enumerate_derivations(base, budget=args.budget, workers=args.workers)
    lines = [f"derivations={len(found)}"]
    lines += [f"derivation {i}: d={_matrix_text(h.d)}"
              for i, h in enumerate(found)]
    _emit(args, out, lines,
          {"command": "enumerate-derivations", "base": args.base,
           "count": len(found),
           "derivations": [{"d": _matrix_json(h.d)} for h in found]})
    return 0


def _groupoid_json(groupoid: HomGroupoid, classes: list[list[int]]) -> dict:
    return {
        "objects": [{"f1": _matrix_json(f.f1), "f0": _matrix_json(f.f0)}
                    for f in groupoid.objects],
        "arrows": [{"src": a.src, "dst": a.dst,
                    "d": _matrix_json(a.derivation.d)}
                   for a in groupoid.arrows],
        "classes": classes,
    }


def _cmd_groupoid(ws: Workspace, args, out) -> int:
    source = ws.require_module(args.hom[0])
    target = ws.require_module(args.hom[1])
    groupoid = build_hom_groupoid(source, target,
                                  budget=args.budget, workers=args.workers)
    classes = homotopy_classes(groupoid)
    lines = [f"objects={len(groupoid.objects)} arrows={len(groupoid.arrows)} "
             f"classes={len(classes)} sizes={_sizes_text(classes)}"]
    lines += [f"object {i}: f1={_matrix_text(f.f1)} f0={_matrix_text(f.f0)}"
              for i, f in enumerate(groupoid.objects)]
    lines += [f"arrow {t}: {a.src} -> {a.dst} d={_matrix_text(a.derivation.d)}"
              for t, a in enumerate(groupoid.arrows)]
    data = _groupoid_json(groupoid, classes)
    if args.emit:
        Path(args.emit).write_text(json.dumps(data, indent=2) + "\n")
        lines.append(f"emitted {args.emit}")
    _emit(args, out, lines, data)
    return 0


def _cmd_classes(ws: Workspace, args, out) -> int:
    source = ws.require_module(args.hom[0])
    target = ws.require_module(args.hom[1])
    groupoid = build_hom_groupoid(source, target,
                                  budget=args.budget, workers=args.workers)
    classes = homotopy_classes(groupoid)
    line = (f"objects={len(groupoid.objects)} classes={len(classes)} "
            f"sizes={_sizes_text(classes)}")
    _emit(args, out, [line],
          {"command": "classes", "objects": len(groupoid.objects),
           "classes": len(classes),
           "sizes": sorted(len(c) for c in classes)})
    return 0


def _cmd_check_homotopy(ws: Workspace, args, out) -> int:
    f = ws.require_morphism(args.from_)
    g = ws.require_morphism(args.to)
    cert = ws.require_derivation(args.via)
    shifted = shift_morphism(f, cert.d)
    equations_ok = shifted.f0 == g.f0 and shifted.f1 == g.f1
    law = is_f0_derivation(cert.d, f)
    # Endpoint agreement is a usage precondition, checked before reporting.
    ok = connects(cert.d, f, g)
    lines = []
    if equations_ok:
        lines.append(f"{args.via} homotopy_equations PASS")
    else:
        side = "g0" if shifted.f0 != g.f0 else "g1"
        lines.append(f"{args.via} homotopy_equations FAIL {side} differs "
                     "from the shifted morphism")
    law.subject = args.via
    lines += law.lines()
    _emit(args, out, lines,
          {"command": "check-homotopy", "from": args.from_, "to": args.to,
           "via": args.via, "connects": ok,
           "equations_ok": equations_ok, "law": _report_json(law)})
    return 0 if ok else 1


def _cmd_target(ws: Workspace, args, out) -> int:
    f = ws.require_morphism(args.from_)
    cert = ws.require_derivation(args.via)
    try:
        g = homotopy_target(f, cert.d)
    except InvalidDerivationError as exc:
        report = exc.report
        report.subject = args.via
        _emit(args, out, report.lines(),
              {"command": "target", "from": args.from_, "via": args.via,
               "ok": False, "law": _report_json(report)})
        return 1
    lines = [f"{args.via} derivation_law PASS",
             f"target: f1={_matrix_text(g.f1)} f0={_matrix_text(g.f0)}"]
    _emit(args, out, lines,
          {"command": "target", "from": args.from_, "via": args.via,
           "ok": True,
           "target": {"f1": _matrix_json(g.f1), "f0": _matrix_json(g.f0)}})
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecross",
        description="Validate, enumerate and compare crossed modules of "
                    "Lie algebras over exact fields.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("document", help="workspace document to load")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest candidate space a single scan may walk")
    common.add_argument("--workers", type=int, default=1,
                        help="worker threads for enumeration scans")
    common.add_argument("--format", choices=("text", "structured"),
                        default="text", help="report stream format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="check every axiom of every declared object")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("enumerate-morphisms", parents=[common],
                       help="list all morphisms between two crossed modules")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.set_defaults(handler=_cmd_enumerate_morphisms)

    p = sub.add_parser("enumerate-derivations", parents=[common],
                       help="list all derivations along a morphism")
    p.add_argument("--base", required=True)
    p.set_defaults(handler=_cmd_enumerate_derivations)

    p = sub.add_parser("groupoid", parents=[common],
                       help="build the full homotopy groupoid")
    p.add_argument("--hom", nargs=2, metavar=("SOURCE", "TARGET"),
                   required=True)
    p.add_argument("--emit", help="write the structured groupoid to a file")
    p.set_defaults(handler=_cmd_groupoid)

    p = sub.add_parser("classes", parents=[common],
                       help="count homotopy classes of morphisms")
    p.add_argument("--hom", nargs=2, metavar=("SOURCE", "TARGET"),
                   required=True)
    p.set_defaults(handler=_cmd_classes)

    p = sub.add_parser("check-homotopy", parents=[common],
                       help="test whether a derivation connects two morphisms")
    p.add_argument("--from", dest="from_", required=True, metavar="FROM")
    p.add_argument("--to", required=True)
    p.add_argument("--via", required=True)
    p.set_defaults(handler=_cmd_check_homotopy)

    p = sub.add_parser("target", parents=[common],
                       help="compute the morphism a derivation shifts onto")
    p.add_argument("--from", dest="from_", required=True, metavar="FROM")
    p.add_argument("--via", required=True)
    p.set_defaults(handler=_cmd_target)
    return parser


def run_command(argv: list[str], out=None) -> int:
    """Run one subcommand; returns the exit code instead of exiting."""
    out = out if out is not None else sys.stdout
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = Path(args.document).read_text()
    except OSError as exc:
        print(f"error: cannot read {args.document}: {exc}", file=out)
        return 2
    try:
        ws = parse_workspace(text)
        return args.handler(ws, args, out)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=out)
        return 3
    except (DocumentError, FiniteFieldRequiredError, EndpointMismatchError,
            ShapeMismatchError, FieldMismatchError) as exc:
        print(f"error: {exc}", file=out)
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

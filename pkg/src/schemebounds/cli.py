"""Command-line interface.

Exit status: 0 success, 1 validation failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from fractions import Fraction
from typing import Optional, Sequence

from . import builders, explicit
from .bounds import RelationSet, bounds_report, delsarte_lp, inertia_bound, ratio_bound, union_spectrum
from .exactmath import format_rational
from .schemefile import SchemeFileError, dumps, read_scheme, write_scheme
from .scheme import SchemeParameters, validate_parameters

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def render_bound(x: Fraction) -> str:
    """Exact value, with the integer floor appended when it is not integral."""
    if x.denominator == 1:
        return format_rational(x)
    return f"{format_rational(x)} (≤ {math.floor(x)})"


def _relations(text: str) -> RelationSet:
    try:
        return RelationSet(int(part) for part in text.split(","))
    except (TypeError, ValueError):
        raise UsageError(f"--relations expects comma-separated indices >= 1, got {text!r}") from None


def _family_parameter(args) -> builders.FamilyParameter:
    pname, _ = builders.FAMILIES[args.family]
    value = getattr(args, pname)
    others = [p for p, _ in builders.FAMILIES.values() if p != pname and getattr(args, p) is not None]
    if value is None:
        raise UsageError(f"family {args.family} requires --{pname}")
    if others:
        raise UsageError(f"family {args.family} does not take --{others[0]}")
    try:
        return builders.FamilyParameter(args.family, value)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(path: str) -> SchemeParameters:
    try:
        return read_scheme(path)
    except SchemeFileError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(out, machine: bool, rows: list[tuple[str, object]]) -> None:
    if machine:
        out.write(json.dumps(dict(rows)) + "\n")
        return
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        if isinstance(value, list):
            value = " ".join(map(str, value))
        out.write(f"{key:<{width}}  {value}\n")


def _report_failures(report, out) -> None:
    for check, detail in report.failures:
        out.write(f"FAIL {check}: {detail}\n")
    for check, detail in report.warnings:
        out.write(f"WARN {check}: {detail}\n")


def _require_valid(s: SchemeParameters, out) -> bool:
    report = validate_parameters(s)
    if not report.passed:
        _report_failures(report, out)
    return report.passed


def cmd_family(args, out) -> int:
    fp = _family_parameter(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        s = builders.build_family(fp)
    stderr = sys.stderr
    for w in caught:
        stderr.write(f"warning: {w.message}\n")
    report = validate_parameters(s)
    if not report.passed:
        _report_failures(report, out)
        return EXIT_INVALID
    text = dumps(s)
    summary = [
        ("scheme", s.name),
        ("order", str(s.n)),
        ("classes", s.d),
        ("valencies", [format_rational(x) for x in s.valencies]),
        ("multiplicities", [format_rational(x) for x in s.multiplicities]),
    ]
    if args.out:
        write_scheme(s, args.out)
        _emit(out, args.machine, summary + [("written", args.out)])
    else:
        out.write(text)
        _emit(stderr, False, summary)
    return EXIT_OK


def cmd_validate(args, out) -> int:
    s = _load(args.file)
    report = validate_parameters(s)
    if args.machine:
        _emit(out, True, [
            ("scheme", s.name),
            ("passed", report.passed),
            ("failures", [f"{c}: {d}" for c, d in report.failures]),
            ("warnings", [f"{c}: {d}" for c, d in report.warnings]),
        ])
    else:
        _report_failures(report, out)
        out.write(("PASS" if report.passed else "FAIL") + f" {s.name or args.file}\n")
    return EXIT_OK if report.passed else EXIT_INVALID


def _checked_relations(args, d: int) -> RelationSet:
    S = _relations(args.relations)
    try:
        S.check_against(d)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return S


def _spectrum_terms(spec) -> list[str]:
    return [f"{format_rational(lam)}^{m}" for lam, m in spec.pairs]


def cmd_bounds(args, out) -> int:
    s = _load(args.file)
    S = _checked_relations(args, s.d)
    if not _require_valid(s, out):
        return EXIT_INVALID
    r = bounds_report(s, S)
    if args.machine:
        rows = [
            ("scheme", r.scheme),
            ("relations", list(r.relations.members)),
            ("n", str(r.n)),
            ("lp_bound", format_rational(r.lp_bound)),
            ("lp_optimizer", [format_rational(x) for x in r.lp_optimizer.a]),
            ("inertia_bound", str(r.inertia)),
            ("ratio_bound", format_rational(r.ratio)),
            ("spectrum", [[format_rational(lam), str(m)] for lam, m in r.spectrum.pairs]),
        ]
    else:
        rows = [
            ("scheme", r.scheme),
            ("relations", str(r.relations)),
            ("n", r.n),
            ("lp bound", render_bound(r.lp_bound)),
            ("inertia bound", r.inertia),
            ("ratio bound", render_bound(r.ratio)),
            ("lp optimizer", [format_rational(x) for x in r.lp_optimizer.a]),
            ("spectrum", _spectrum_terms(r.spectrum)),
        ]
    _emit(out, args.machine, rows)
    return EXIT_OK


def cmd_lp(args, out) -> int:
    s = _load(args.file)
    S = _checked_relations(args, s.d)
    if not _require_valid(s, out):
        return EXIT_INVALID
    res = delsarte_lp(s, S)
    aQ = res.aQ(s)
    rows = [
        ("scheme", s.name),
        ("relations", list(S.members) if args.machine else str(S)),
        ("optimum", format_rational(res.value)),
        ("optimizer", [format_rational(x) for x in res.optimizer.a]),
        ("aQ", [format_rational(x) for x in aQ]),
        ("tight", [str(j) for j in res.tight_constraints(s)]),
        ("dual", [format_rational(y) for y in res.outcome.dual]),
        ("pivots", str(res.outcome.pivots)),
    ]
    if not args.machine:
        rows[2] = ("optimum", render_bound(res.value))
    _emit(out, args.machine, rows)
    return EXIT_OK


_EXPLICIT = {
    "hamming": ("d", lambda p: (explicit.hamming_matrices(p), builders.hamming(p))),
    "complete": ("n", lambda p: (explicit.complete_graph_matrices(p), builders.complete_graph(p))),
    "pentagon": (None, lambda p: (explicit.pentagon_matrices(), None)),
}


def cmd_alpha(args, out) -> int:
    if args.family not in _EXPLICIT:
        raise UsageError(
            f"no explicit realization of {args.family} is bundled; "
            f"alpha supports {', '.join(_EXPLICIT)}"
        )
    pname, make = _EXPLICIT[args.family]
    param = getattr(args, pname) if pname else None
    if pname and param is None:
        raise UsageError(f"{args.family} requires --{pname}")
    try:
        e, s = make(param)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    S = _checked_relations(args, e.d)
    alpha = explicit.brute_force_alpha(e, S)
    rows = [("fixture", e.name), ("relations", list(S.members) if args.machine else str(S)), ("alpha", str(alpha))]
    if s is None:
        rows.append(("bounds", "unavailable: eigenvalues are irrational, no rational parameters"))
    else:
        spec = union_spectrum(s, S)
        inertia = inertia_bound(spec)
        ratio = ratio_bound(spec)
        lp = delsarte_lp(s, S).value
        if args.machine:
            rows += [("inertia_bound", str(inertia)), ("ratio_bound", format_rational(ratio)),
                     ("lp_bound", format_rational(lp))]
        else:
            rows.append(("comparison", f"{alpha} ≤ inertia {inertia} / ratio {render_bound(ratio)} / lp {render_bound(lp)}"))
    _emit(out, args.machine, rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schemebounds",
        description="Exact independence-number bounds for association-scheme graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p):
        p.add_argument("--t", type=int, help="Cameron-Seidel parameter")
        p.add_argument("--q", type=int, help="GQ order parameter")
        p.add_argument("--d", type=int, help="Hamming word length")
        p.add_argument("--n", type=int, help="complete graph order")

    def machine(p):
        p.add_argument("--machine", action="store_true", help="emit one JSON object of exact rational strings")

    p = sub.add_parser("family", help="write the parameter file of a built-in family")
    p.add_argument("family", choices=sorted(builders.FAMILIES))
    params(p)
    p.add_argument("--out", metavar="PATH", help="output file (default: stdout)")
    machine(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("validate", help="check every scheme identity in a parameter file")
    p.add_argument("file")
    machine(p)
    p.set_defaults(func=cmd_validate)

    for name, func, text in (
        ("bounds", cmd_bounds, "LP, inertia and ratio bounds for a union of relations"),
        ("lp", cmd_lp, "Delsarte LP optimum with optimizer and dual certificate"),
    ):
        p = sub.add_parser(name, help=text)
        p.add_argument("file")
        p.add_argument("--relations", required=True, metavar="i[,j...]")
        machine(p)
        p.set_defaults(func=func)

    p = sub.add_parser("alpha", help="brute-force independence number of an explicit fixture")
    p.add_argument("family", choices=sorted(set(_EXPLICIT) | set(builders.FAMILIES)))
    params(p)
    p.add_argument("--relations", required=True, metavar="i[,j...]")
    machine(p)
    p.set_defaults(func=cmd_alpha)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line front end.

Exit status is 0 on success, 1 on a domain error (with a JSON error object
on stderr) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import featsel, formats, rough_core, solver, span, table1
from .errors import RoughSpanError, UndefinedAccuracy
from .fuzzy_rough import fuzzy_approximate, validate_relation

MEASURE_FLAGS = {
    "delta": "delta",
    "delta-prime": "delta_prime",
    "complete": "complete",
    "hybrid": "hybrid",
}


class CommandError(Exception):
    """A failure already described well enough to report as-is."""


def _ids(text: str | None) -> list[str]:
    if not text:
        return []
    return [t.strip() for t in text.split(",") if t.strip()]


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from None


def _table(args):
    return formats.parse_information_table(_read(args.table))


def _attrs(args, sys_):
    return list(sys_.attributes) if args.attrs is None else _ids(args.attrs)


def _weights(w1: float) -> dict:
    w = span.SpanWeights(w1)
    return {"w1": w.w1, "w2": w.w2}


def _sorted(s) -> list:
    return rough_core.sort_ids(s)


def cmd_approx(args) -> dict:
    sys_ = _table(args)
    p = _attrs(args, sys_)
    x = _ids(args.set)
    appr = rough_core.approximate(sys_, p, x)
    try:
        acc = rough_core.accuracy(sys_, p, x)
    except UndefinedAccuracy:
        acc = None
    return {
        "attrs": sorted(p),
        "set": _sorted(x),
        "lower": _sorted(appr.lower),
        "upper": _sorted(appr.upper),
        "boundary": _sorted(appr.boundary),
        "accuracy": acc,
        "roughness": None if acc is None else 1.0 - acc,
    }


def cmd_span(args) -> dict:
    sys_ = _table(args)
    p = _attrs(args, sys_)
    x = _ids(args.set)
    value = span.evaluate(
        MEASURE_FLAGS[args.measure], sys_, p, x, args.w1, include_full_set=args.include_full_set
    )
    return {
        "attrs": sorted(p),
        "set": _sorted(x),
        "measure": value.measure,
        "value": value.value,
        **_weights(args.w1),
    }


def cmd_spanning_set(args) -> dict:
    sys_ = _table(args)
    p = _attrs(args, sys_)
    config = solver.SolverConfig(
        measure=MEASURE_FLAGS[args.measure],
        weights=span.SpanWeights(args.w1),
        max_size=args.max_size,
        strategy=args.solver,
        include_full_set=args.include_full_set,
    )
    result = solver.solve(sys_, p, config, seed=_ids(args.seed), max_iters=args.max_iters)
    return {
        "attrs": sorted(p),
        "measure": config.measure,
        "strategy": result.strategy,
        "max_size": args.max_size,
        "subset": result.sorted_subset(),
        "value": result.span.value,
        "optimal": result.optimal,
        "tie_break": config.tie_break,
        **_weights(args.w1),
    }


def _fuzzy_pair(args):
    fset = formats.parse_fuzzy_set(_read(args.set))
    rel = granule = partition = None
    validation = None
    if args.relation:
        rel = formats.parse_fuzzy_relation(_read(args.relation))
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            report = validate_relation(rel, args.validate)
        validation = {
            "mode": report.mode,
            "valid": report.valid,
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "magnitude": v.magnitude}
                for v in report.violations
            ],
        }
    if args.granule:
        granule = formats.parse_fuzzy_set(_read(args.granule))
    if args.partition:
        partition = formats.parse_fuzzy_partition(_read(args.partition))
    pair = fuzzy_approximate(rel, fset, args.definition, partition=partition, granule=granule)
    return pair, validation


def _grades(f) -> dict:
    return {str(o): g for o, g in zip(f.universe, f.membership.tolist())}


def cmd_fuzzy_approx(args) -> dict:
    pair, validation = _fuzzy_pair(args)
    out = {"definition": args.definition, "lower": _grades(pair.lower), "upper": _grades(pair.upper)}
    if validation is not None:
        out["validation"] = validation
    return out


def cmd_fuzzy_span(args) -> dict:
    if args.lower or args.upper:
        if not (args.lower and args.upper):
            raise CommandError("--lower and --upper must be given together")
        lower = formats.parse_fuzzy_set(_read(args.lower))
        upper = formats.parse_fuzzy_set(_read(args.upper))
        out = {}
    else:
        if not args.set:
            raise CommandError("give --lower/--upper, or --set with --relation/--granule/--partition")
        pair, validation = _fuzzy_pair(args)
        lower, upper = pair
        out = {"definition": args.definition}
        if validation is not None:
            out["validation"] = validation
    value = span.fuzzy_span(lower, upper, args.w1)
    out.update(measure="fuzzy", value=value.value, **_weights(args.w1))
    return out


def cmd_select(args) -> dict:
    sys_ = _table(args)
    result = featsel.select_features(sys_, args.w1, max_features=args.max_features)
    return {
        "criterion": result.criterion,
        "selected": list(result.selected),
        "trace": [
            {"attribute": s.attribute, "criterion": s.criterion, "mean_accuracy": s.mean_accuracy}
            for s in result.trace
        ],
        "mean_accuracy": result.mean_accuracy,
        **_weights(args.w1),
    }


def cmd_repro_table1(args) -> dict:
    cells = table1.reproduce()
    return {
        "tolerance": table1.TOLERANCE,
        "cells": [
            {
                "w1": c.w1,
                "sentence": c.sentence,
                "published": c.published,
                "computed": c.computed,
                "expected": c.expected,
                "erratum": c.erratum,
                "pass": c.ok,
            }
            for c in cells
        ],
        "matched_published": sum(c.matches_published for c in cells),
        "total": len(cells),
        "pass": all(c.ok for c in cells),
    }


def _fmt(v):
    if isinstance(v, float):
        return f"{v:.4f}"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_fmt(x)}" for k, x in sorted(v.items())) + "}"
    return str(v)


def render_report(command: str, payload: dict) -> str:
    if command == "repro-table1":
        lines = [f"{'weights':<16}{'S1':>24}{'S2':>24}"]
        cells = payload["cells"]
        for a, b in zip(cells[::2], cells[1::2]):
            row = f"w1={a['w1']:.1f}, w2={1 - a['w1']:.1f}"
            for c in (a, b):
                tag = "PASS" if c["pass"] else "FAIL"
                if c["erratum"]:
                    tag += "*"
                row += f"   {c['computed']:.4f} ({c['published']:.4f}) {tag}"
            lines.append(row)
        lines.append(
            f"{payload['matched_published']}/{payload['total']} cells match the printed values; "
            "* marks an erratum cell checked against its recomputed value"
        )
        return "\n".join(lines)
    return "\n".join(f"{k}: {_fmt(v)}" for k, v in sorted(payload.items()))


COMMANDS = {
    "approx": cmd_approx,
    "span": cmd_span,
    "spanning-set": cmd_spanning_set,
    "fuzzy-approx": cmd_fuzzy_approx,
    "fuzzy-span": cmd_fuzzy_span,
    "select": cmd_select,
    "repro-table1": cmd_repro_table1,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "report"), default="json",
        help="json: full-precision machine output; report: 4-decimal text",
    )
    parser = argparse.ArgumentParser(prog="roughspan", description="Rough-set span measures.")
    sub = parser.add_subparsers(dest="command", required=True)

    def table_args(p, with_set=True):
        p.add_argument("--table", required=True, help="information table CSV")
        p.add_argument("--attrs", help="comma-separated attributes (default: all)")
        if with_set:
            p.add_argument("--set", required=True, help="comma-separated object ids")

    p = sub.add_parser("approx", parents=[common], help="lower/upper/boundary of a set")
    table_args(p)

    p = sub.add_parser("span", parents=[common], help="span of an object set")
    table_args(p)
    p.add_argument("--measure", choices=tuple(MEASURE_FLAGS), default="delta-prime")
    p.add_argument("--w1", type=float, default=0.5)
    p.add_argument("--include-full-set", action="store_true", help="complete span: add whole-set delta term")

    p = sub.add_parser("spanning-set", parents=[common], help="search for a spanning set")
    table_args(p, with_set=False)
    p.add_argument("--measure", choices=tuple(MEASURE_FLAGS), default="delta-prime")
    p.add_argument("--w1", type=float, default=0.5)
    p.add_argument("--solver", choices=solver.STRATEGIES, default="exhaustive")
    p.add_argument("--max-size", type=int)
    p.add_argument("--seed", help="comma-separated starting ids for --solver local")
    p.add_argument("--max-iters", type=int, default=1000)
    p.add_argument("--include-full-set", action="store_true")

    def fuzzy_args(p, set_required):
        p.add_argument("--set", required=set_required, help="fuzzy set CSV (id,grade)")
        p.add_argument("--relation", help="fuzzy relation CSV (definition I)")
        p.add_argument("--granule", help="granule fuzzy set CSV (definition II)")
        p.add_argument("--partition", help="fuzzy partition CSV (definition III)")
        p.add_argument("--def", dest="definition", choices=("I", "II", "III"), default="I")
        p.add_argument("--validate", choices=("strict", "warn", "off"), default="warn")

    p = sub.add_parser("fuzzy-approx", parents=[common], help="fuzzy-rough approximations")
    fuzzy_args(p, True)

    p = sub.add_parser("fuzzy-span", parents=[common], help="span of fuzzy approximations")
    p.add_argument("--lower", help="lower approximation CSV (id,grade)")
    p.add_argument("--upper", help="upper approximation CSV (id,grade)")
    p.add_argument("--w1", type=float, default=0.5)
    fuzzy_args(p, False)

    p = sub.add_parser("select", parents=[common], help="span-guided feature selection")
    p.add_argument("--table", required=True, help="decision table CSV with a #decision column")
    p.add_argument("--w1", type=float, default=0.8)
    p.add_argument("--max-features", type=int)

    sub.add_parser("repro-table1", parents=[common], help="reproduce the sentence span grid")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        payload = COMMANDS[args.command](args)
    except (RoughSpanError, CommandError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(err, sort_keys=True), file=stderr)
        return 1
    payload = {"command": args.command, **payload}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2), file=stdout)
    else:
        print(render_report(args.command, payload), file=stdout)
    if args.command == "repro-table1" and not payload["pass"]:
        return 1
    return 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()

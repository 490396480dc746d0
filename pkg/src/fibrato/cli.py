"""Command-line driver for the fibrato toolkit.

Subcommands:

* ``audit``    -- run the identity/inequality audit on an invariant record
* ``resolve``  -- resolve a plane double-point germ by even blow-ups
* ``example``  -- instantiate a named record family at a chosen genus
* ``tables``   -- print the three reference tables (markdown or CSV)
* ``hurwitz``  -- check a branch datum for compatibility and realizability
* ``datum``    -- validate a cover datum and compute its invariants
* ``search``   -- experimental sweep over binomial germ data at fixed genus

Every subcommand prints a human-readable report by default and a machine
document under ``--json``.  Numeric output is exact (``p/q``) with 3-decimal
renderings alongside.  Exit status: 0 on success/pass, 1 when a check or
audit fails, 2 on malformed input.  The environment variable
``FIBRATO_MAX_DEPTH`` overrides the resolution depth cap.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from fibrato import __version__
from fibrato import constructions, datum as datum_mod, fibration, germs, hurwitz
from fibrato.bounds import decimal3, render_csv, render_markdown, table
from fibrato.germs import (
    ConjugateDirections,
    DEFAULT_MAX_DEPTH,
    DepthOverflow,
    GermSyntaxError,
    RequiresAlgebraicExtension,
    ZeroPolynomial,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2

RECORD_SCHEMA_VERSION = 1


class InputError(Exception):
    """Malformed input (file, JSON, schema, or argument values)."""


# ---------------------------------------------------------------------------
# shared helpers

def _max_depth() -> int:
    raw = os.environ.get("FIBRATO_MAX_DEPTH")
    if raw is None:
        return DEFAULT_MAX_DEPTH
    try:
        value = int(raw)
    except ValueError:
        raise InputError(
            f"FIBRATO_MAX_DEPTH must be a positive integer, got {raw!r}")
    if value < 1:
        raise InputError(
            f"FIBRATO_MAX_DEPTH must be a positive integer, got {raw!r}")
    return value


def _exact(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _pretty(x) -> str:
    """Exact value, with a 3-decimal reading appended when it is not an
    integer: 30/7 -> "30/7 (~ 4.286)"."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{_exact(x)} (~ {decimal3(x)})"


def _load_json(path: str):
    """Read a JSON document from a file, or standard input when path is "-"."""
    if path == "-":
        name, text = "<stdin>", sys.stdin.read()
    else:
        name = path
        try:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror or exc}")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{name}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}")


def _check_schema_version(obj: dict, name: str) -> None:
    version = obj.get("schema_version", 1)
    if version != 1:
        raise InputError(
            f"field 'schema_version': unsupported {name} version {version!r}"
            " (expected 1)")


def _fraction_field(obj: dict, field: str) -> Fraction:
    if field not in obj:
        raise InputError(f"field {field!r} is missing")
    value = obj[field]
    if isinstance(value, bool):
        raise InputError(f"field {field!r} must be an integer or 'p/q' string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InputError(
                f"field {field!r}: cannot parse {value!r} as a rational")
    raise InputError(f"field {field!r} must be an integer or 'p/q' string")


def _int_field(obj: dict, field: str) -> int:
    value = _fraction_field(obj, field)
    if value.denominator != 1:
        raise InputError(f"field {field!r} must be an integer")
    return int(value)


def _record_from_json(obj):
    """Parse an invariant record document into the audit inputs.

    Returns (invariants, nodes, profiles); the latter two are optional in
    the document and None when absent.
    """
    if not isinstance(obj, dict):
        raise InputError("record document must be a JSON object")
    _check_schema_version(obj, "record")
    try:
        inv = fibration.FibrationInvariants(
            g=_int_field(obj, "g"),
            g_C=_int_field(obj, "g_C"),
            s=_int_field(obj, "s"),
            chi=_fraction_field(obj, "chi"),
            omega_sq=_fraction_field(obj, "omega_sq"),
            delta=_fraction_field(obj, "delta"),
            hyperelliptic=bool(obj.get("hyperelliptic", False)),
            semistable=bool(obj.get("semistable", True)),
        )
    except ValueError as exc:
        raise InputError(str(exc))

    nodes = None
    if obj.get("nodes") is not None:
        raw = obj["nodes"]
        if not isinstance(raw, list) or not all(
                isinstance(m, int) and not isinstance(m, bool) for m in raw):
            raise InputError("field 'nodes' must be a list of integers")
        try:
            nodes = fibration.StableModelNodes(tuple(raw))
        except ValueError as exc:
            raise InputError(f"field 'nodes': {exc}")

    profiles = None
    if obj.get("profiles") is not None:
        raw = obj["profiles"]
        if not isinstance(raw, list):
            raise InputError("field 'profiles' must be a list of objects")
        profiles = []
        for idx, entry in enumerate(raw):
            if not isinstance(entry, dict):
                raise InputError(f"field 'profiles[{idx}]' must be an object")
            try:
                counts = {int(k): int(v)
                          for k, v in entry.get("delta_counts", {}).items()}
                profiles.append(fibration.FiberNodeProfile(
                    g=_int_field(entry, "g"),
                    g_geo=_int_field(entry, "g_geo"),
                    l=_int_field(entry, "l"),
                    delta_counts=counts,
                ))
            except (ValueError, AttributeError) as exc:
                raise InputError(f"field 'profiles[{idx}]': {exc}")
    return inv, nodes, profiles


def _record_to_json(inv: fibration.FibrationInvariants) -> dict:
    """Serialize invariants in the shape ``audit`` accepts back."""
    return {
        "schema_version": RECORD_SCHEMA_VERSION,
        "g": inv.g,
        "g_C": inv.g_C,
        "s": inv.s,
        "chi": _exact(inv.chi),
        "omega_sq": _exact(inv.omega_sq),
        "delta": _exact(inv.delta),
        "hyperelliptic": inv.hyperelliptic,
        "semistable": inv.semistable,
    }


def _print_audit_report(report: fibration.AuditReport) -> None:
    for check in report.checks:
        line = f"  [{check.status:>7}] {check.check}"
        if check.lhs is not None and check.rhs is not None:
            op = "<" if check.strict else "vs"
            line += f"  ({_exact(check.lhs)} {op} {_exact(check.rhs)})"
        if check.note:
            line += f"  -- {check.note}"
        print(line)
    print(f"audit: {'pass' if report.passed else 'FAIL'}")


# ---------------------------------------------------------------------------
# audit

def _cmd_audit(args) -> int:
    obj = _load_json(args.record)
    inv, nodes, profiles = _record_from_json(obj)
    report = fibration.audit(inv, nodes=nodes, profiles=profiles)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(f"record: genus-{inv.g} fibration over a genus-{inv.g_C} base, "
              f"{inv.s} critical fibers")
        print(f"  chi = {_pretty(inv.chi)}, omega^2 = {_pretty(inv.omega_sq)}, "
              f"delta = {_pretty(inv.delta)}")
        _print_audit_report(report)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# resolve

def _direction_text(direction) -> str:
    if direction is None:
        return "origin"
    if direction == germs.INFINITY:
        return "infinity"
    if isinstance(direction, ConjugateDirections):
        return ("conjugate directions, min-poly coefficients "
                f"{list(direction.min_poly)}")
    return _exact(direction)


def _direction_json(direction):
    if direction is None:
        return None
    if direction == germs.INFINITY:
        return "infinity"
    if isinstance(direction, ConjugateDirections):
        return {"conjugate_min_poly": list(direction.min_poly)}
    return _exact(direction)


def _trace_point_json(point) -> dict:
    return {
        "depth": point.depth,
        "multiplicity": point.multiplicity,
        "k": point.k,
        "classification": point.classification,
        "direction": _direction_json(point.direction),
        "count": point.count,
        "children": [_trace_point_json(c) for c in point.children],
    }


def _print_trace_tree(point, indent: int = 0) -> None:
    head = ("  " * indent
            + f"- depth {point.depth}: multiplicity {point.multiplicity} "
            f"(k = {point.k}), {point.classification}")
    if point.count != 1:
        head += f", packet of {point.count}"
    head += f", direction {_direction_text(point.direction)}"
    print(head)
    for child in point.children:
        _print_trace_tree(child, indent + 1)


def _cmd_resolve(args) -> int:
    try:
        germ = germs.parse_germ(args.germ)
    except (GermSyntaxError, ZeroPolynomial) as exc:
        raise InputError(f"germ {args.germ!r}: {exc}")
    try:
        trace = germs.even_resolve(germ, max_depth=_max_depth())
    except RequiresAlgebraicExtension as exc:
        raise InputError(f"germ {args.germ!r}: {exc}")
    except DepthOverflow as exc:
        raise InputError(f"germ {args.germ!r}: {exc}")

    label = datum_mod._overall_label(trace)
    mults = trace.multiplicities()
    if args.json:
        print(json.dumps({
            "schema_version": 1,
            "germ": str(germ),
            "multiplicities": mults,
            "classification": label,
            "terminal_smooth": trace.terminal_smooth,
            "sum_k_km1": trace.sum_k_km1,
            "sum_km1_sq": trace.sum_km1_sq,
            "trace": _trace_point_json(trace.root) if trace.root else None,
        }, indent=2))
        return EXIT_OK

    print(f"germ: {germ}")
    print(f"infinitely-near multiplicities: {mults if mults else '(smooth)'}")
    print(f"classification: {label}")
    print(f"sum k(k-1) = {trace.sum_k_km1}, sum (k-1)^2 = {trace.sum_km1_sq}")
    print(f"terminal chart smooth: {'yes' if trace.terminal_smooth else 'no'}")
    if args.trace and trace.root is not None:
        print("trace:")
        _print_trace_tree(trace.root)
    return EXIT_OK


# ---------------------------------------------------------------------------
# example

def _invariants_block(report: datum_mod.DatumInvariantsReport) -> dict:
    inv = report.invariants
    return {
        "record": _record_to_json(inv),
        "slope": _exact(report.slope),
        "speed": _exact(report.speed),
        "sum_k_km1": report.sum_k_km1,
        "sum_km1_sq": report.sum_km1_sq,
    }


def _cmd_example(args) -> int:
    try:
        fam = constructions.family(args.family, args.genus)
    except constructions.DomainError as exc:
        raise InputError(str(exc))

    if args.emit_json:
        print(json.dumps(datum_mod.datum_to_json(fam.datum), indent=2))
        return EXIT_OK

    report = fam.report(max_depth=_max_depth())
    inv = report.invariants
    matches = (inv.chi == fam.expected_chi
               and inv.omega_sq == fam.expected_omega_sq
               and report.slope == fam.expected_slope
               and report.speed == fam.expected_speed)

    if args.json:
        print(json.dumps({
            "schema_version": 1,
            "family": fam.name,
            "genus": inv.g,
            "datum": datum_mod.datum_to_json(fam.datum),
            "computed": _invariants_block(report),
            "expected": {
                "chi": _exact(fam.expected_chi),
                "omega_sq": _exact(fam.expected_omega_sq),
                "slope": _exact(fam.expected_slope),
                "speed": _exact(fam.expected_speed),
            },
            "matches": matches,
            "semistable": {
                "passed": report.semistable.passed,
                "failures": list(report.semistable.failures),
            },
        }, indent=2))
    else:
        d = fam.datum
        print(f"family: {fam.name} (genus {inv.g})")
        print(f"base: genus {d.g_C}; branch bidegree e = {d.e}, n = {d.n}; "
              f"{d.s} critical fibers")
        print(f"chi = {_pretty(inv.chi)}")
        print(f"omega^2 = {_pretty(inv.omega_sq)}")
        print(f"delta = {_pretty(inv.delta)}")
        print(f"slope = {_pretty(report.slope)}")
        print(f"speed L = {_pretty(report.speed)}")
        print(f"semistable: {'yes' if report.semistable.passed else 'NO'}")
        print("closed-formula check: "
              + ("match" if matches else "MISMATCH against expected values"))
        if fam.notes:
            print(f"notes: {fam.notes}")
    ok = matches and report.semistable.passed
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# tables

def _table_json(t) -> dict:
    return {
        "table": t.which,
        "title": t.title,
        "genera": list(t.genera),
        "rows": [
            {
                "label": row.label,
                "cells": [{"exact": _exact(v), "decimal": d}
                          for (v, d) in row.cells],
            }
            for row in t.rows
        ],
    }


def _cmd_tables(args) -> int:
    which = [1, 2, 3] if args.which == "all" else [int(args.which)]
    tabs = [table(w) for w in which]
    if args.json:
        print(json.dumps({"schema_version": 1,
                          "tables": [_table_json(t) for t in tabs]}, indent=2))
        return EXIT_OK
    if args.format == "csv":
        chunks = [render_csv(t) for t in tabs]
        body = [chunks[0]]
        for chunk in chunks[1:]:
            body.append(chunk.split("\n", 1)[1])
        print("\n".join(body))
    else:
        print("\n\n".join(render_markdown(t) for t in tabs))
    return EXIT_OK


# ---------------------------------------------------------------------------
# hurwitz

def _cmd_hurwitz(args) -> int:
    obj = _load_json(args.datum)
    if not isinstance(obj, dict):
        raise InputError("branch datum document must be a JSON object")
    try:
        b = hurwitz.branch_datum_from_json(obj)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"branch datum: {exc}")

    failure = None
    solved = None
    try:
        solved = hurwitz.solve_source_genus(b.g_target, b.m, b.d, b.partitions)
    except (hurwitz.ParityViolation, hurwitz.NegativeGenus) as exc:
        failure = str(exc)

    if failure is None and b.g_source is not None and b.g_source != solved:
        failure = (f"declared source genus {b.g_source} disagrees with the "
                   f"solved value {solved}")

    realizability = None
    if failure is None:
        checked = hurwitz.BranchDatum(solved, b.g_target, b.m, b.d,
                                      b.partitions)
        realizability = hurwitz.is_realizable(checked)

    if args.json:
        print(json.dumps({
            "schema_version": 1,
            "datum": hurwitz.branch_datum_to_json(b),
            "compatible": failure is None,
            "failure": failure,
            "solved_source_genus": solved,
            "realizability": realizability,
        }, indent=2))
    else:
        parts = " ".join("(" + ",".join(str(p) for p in part) + ")"
                         for part in b.partitions)
        print(f"branch datum: degree-{b.d} cover of a genus-{b.g_target} "
              f"curve, {b.m} branch points")
        print(f"partitions: {parts}")
        if failure is not None:
            print(f"compatible: NO -- {failure}")
        else:
            origin = ("declared and solved"
                      if b.g_source is not None else "solved")
            print(f"source genus: {solved} ({origin})")
            print("compatible: yes")
            print(f"realizability: {realizability}")
    return EXIT_OK if failure is None else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# datum

def _print_datum_report(d, report, audit_report) -> None:
    print(f"datum: genus-{d.g} double cover over a genus-{d.g_C} base; "
          f"branch bidegree e = {d.e}, n = {d.n}; {d.s} critical fibers"
          + (f"; declared vertical (-1)-curves m = {d.declared_m}"
             if d.declared_m else ""))
    print("validation: ok")
    print("germ traces:")
    for s in report.traces:
        if s.germ is None:
            print(f"  {s.fiber_label}: declared negligible fiber")
            continue
        print(f"  {s.fiber_label}: {s.germ} -> multiplicities "
              f"{list(s.multiplicities)}, {s.classification}")
    print(f"sum k(k-1) = {report.sum_k_km1}, "
          f"sum (k-1)^2 = {report.sum_km1_sq}, "
          f"branch degree on a fiber = {report.r_dot_gamma}")
    inv = report.invariants
    print(f"chi = {_pretty(inv.chi)}")
    print(f"omega^2 = {_pretty(inv.omega_sq)}")
    print(f"delta = {_pretty(inv.delta)}")
    print(f"slope = {_pretty(report.slope)}")
    print(f"speed L = {_pretty(report.speed)}")
    if report.semistable.passed:
        print("semistable: yes")
    else:
        print("semistable: NO")
        for reason in report.semistable.failures:
            print(f"  - {reason}")
    _print_audit_report(audit_report)


def _cmd_datum(args) -> int:
    obj = _load_json(args.datum)
    if not isinstance(obj, dict):
        raise InputError("datum document must be a JSON object")
    try:
        d = datum_mod.datum_from_json(obj)
    except ValueError as exc:
        raise InputError(f"datum: {exc}")

    violations = datum_mod.validate(d)
    if violations:
        if args.json:
            print(json.dumps({
                "schema_version": 1,
                "datum": datum_mod.datum_to_json(d),
                "violations": violations,
            }, indent=2))
        else:
            print("validation: FAILED")
            for v in violations:
                print(f"  - {v}")
        return EXIT_CHECK_FAILED

    try:
        report = datum_mod.invariants(d, max_depth=_max_depth())
    except (RequiresAlgebraicExtension, DepthOverflow) as exc:
        raise InputError(f"datum: {exc}")
    except fibration.NonHyperbolicBase as exc:
        print(f"speed undefined: {exc}")
        return EXIT_CHECK_FAILED

    audit_report = fibration.audit(report.invariants)
    ok = report.semistable.passed and audit_report.passed

    if args.json:
        print(json.dumps({
            "schema_version": 1,
            "datum": datum_mod.datum_to_json(d),
            "violations": [],
            "invariants": _invariants_block(report),
            "traces": [
                {
                    "fiber": s.fiber_label,
                    "germ": None if s.germ is None else str(s.germ),
                    "multiplicities": list(s.multiplicities),
                    "classification": s.classification,
                }
                for s in report.traces
            ],
            "semistable": {
                "passed": report.semistable.passed,
                "failures": list(report.semistable.failures),
            },
            "audit": audit_report.to_json(),
        }, indent=2))
    else:
        _print_datum_report(d, report, audit_report)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


# ---------------------------------------------------------------------------
# search

_GRID_RE = re.compile(r"^(\d+)x(\d+)$")


def _parse_grid(spec: str) -> tuple[int, int]:
    match = _GRID_RE.match(spec)
    if not match:
        raise InputError(
            f"germ grid spec {spec!r} must look like 'AxB' (e.g. 6x6)")
    a_max, b_max = int(match.group(1)), int(match.group(2))
    if not (2 <= a_max <= 16 and 2 <= b_max <= 16):
        raise InputError("germ grid bounds must lie in 2..16")
    return a_max, b_max


def _cmd_search(args) -> int:
    if args.genus < 2:
        raise InputError("--genus must be at least 2")
    if not (2 <= args.max_n <= 64):
        raise InputError("--max-n must lie in 2..64")
    a_max, b_max = _parse_grid(args.germ_grid)
    depth = _max_depth()

    g = args.genus
    markers = tuple(
        datum_mod.CriticalFiber(f"marker_{i}", negligible_marker=True)
        for i in range(1, 4))
    candidates = []
    rejected = {"chi <= 0": 0, "not semistable": 0, "audit failure": 0,
                "unresolvable": 0}
    for n in range(2, args.max_n + 1):
        if n % 2:
            continue  # e = 0 forces even n
        for a in range(2, a_max + 1):
            for b in range(2, b_max + 1):
                text = f"y^{a} - z^{b}"
                d = datum_mod.GenusGDatum(
                    g=g, g_C=1, e=0, n=n,
                    critical_fibers=(
                        datum_mod.CriticalFiber("candidate", (text, text)),
                    ) + markers)
                try:
                    report = datum_mod.invariants(d, max_depth=depth)
                except (RequiresAlgebraicExtension, DepthOverflow):
                    rejected["unresolvable"] += 1
                    continue
                if report.invariants.chi <= 0:
                    rejected["chi <= 0"] += 1
                    continue
                if not report.semistable.passed:
                    rejected["not semistable"] += 1
                    continue
                if not fibration.audit(report.invariants).passed:
                    rejected["audit failure"] += 1
                    continue
                candidates.append((report.speed, n, text, report))

    candidates.sort(key=lambda item: (-item[0], item[1], item[2]))
    top = candidates[:10]
    record = constructions.best_known(g)

    if args.json:
        print(json.dumps({
            "schema_version": 1,
            "experimental": True,
            "genus": g,
            "grid": {"a_max": a_max, "b_max": b_max, "max_n": args.max_n},
            "best_known": {"value": _exact(record.value),
                           "witness": record.witness},
            "candidates": [
                {
                    "germ": text,
                    "n": n,
                    "speed": _exact(speed),
                    "slope": _exact(rep.slope),
                    "chi": _exact(rep.invariants.chi),
                    "semistable": True,
                }
                for (speed, n, text, rep) in top
            ],
            "rejected": rejected,
        }, indent=2))
    else:
        print("experimental search -- results carry no claim beyond the "
              "checks shown")
        print(f"genus {g}, base genus 1, even n <= {args.max_n}, "
              f"germs y^a - z^b with a <= {a_max}, b <= {b_max}")
        print(f"best known construction at genus {g}: "
              f"{_pretty(record.value)} ({record.witness})")
        if not top:
            print("no candidate passed every check")
        else:
            print("top candidates (semi-stable, audit clean):")
            for (speed, n, text, rep) in top:
                print(f"  speed {_pretty(speed)}  n = {n}  germ {text}  "
                      f"chi = {_pretty(rep.invariants.chi)}  "
                      f"slope = {_pretty(rep.slope)}")
        skipped = ", ".join(f"{k}: {v}" for k, v in rejected.items() if v)
        print(f"rejected candidates -- {skipped if skipped else 'none'}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibrato",
        description="Invariant bookkeeping for genus-g pencils: germ "
                    "resolution, record audits, reference tables, branch "
                    "data, and cover data.")
    parser.add_argument("--version", action="version",
                        version=f"fibrato {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="command",
                                required=True)

    p = sub.add_parser("audit",
                       help="run every applicable identity and inequality "
                            "check on an invariant record")
    p.add_argument("record", help="path to a record JSON file, or - for stdin")
    p.add_argument("--json", action="store_true",
                   help="emit the audit report as JSON")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("resolve",
                       help="resolve a plane germ by even blow-ups and "
                            "classify the cluster")
    p.add_argument("germ", help="germ expression, e.g. \"y^8 - z^4\"")
    p.add_argument("--trace", action="store_true",
                   help="print the full tree of infinitely-near points")
    p.add_argument("--json", action="store_true",
                   help="emit the resolution data as JSON")
    p.set_defaults(func=_cmd_resolve)

    p = sub.add_parser("example",
                       help="instantiate a record family at a chosen genus")
    p.add_argument("family", metavar="family",
                   help="one of: " + ", ".join(constructions.FAMILY_NAMES))
    p.add_argument("--genus", type=int, default=None,
                   help="fiber genus (required unless the family fixes it)")
    p.add_argument("--emit-json", action="store_true",
                   help="print only the family's cover datum as JSON "
                        "(pipe into 'fibrato datum -')")
    p.add_argument("--json", action="store_true",
                   help="emit the full report as JSON")
    p.set_defaults(func=_cmd_example)

    p = sub.add_parser("tables", help="print the three reference tables")
    p.add_argument("which", nargs="?", default="all",
                   choices=["1", "2", "3", "all"],
                   help="which table to print (default: all)")
    p.add_argument("--format", choices=["md", "csv"], default="md",
                   help="output format (default: md)")
    p.add_argument("--json", action="store_true",
                   help="emit the tables as JSON")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("hurwitz",
                       help="check a branch datum for compatibility and "
                            "realizability")
    p.add_argument("datum", help="path to a branch datum JSON file, or - "
                                 "for stdin")
    p.add_argument("--json", action="store_true",
                   help="emit the verdict as JSON")
    p.set_defaults(func=_cmd_hurwitz)

    p = sub.add_parser("datum",
                       help="validate a cover datum, compute its invariants "
                            "and run the semi-stability and audit checks")
    p.add_argument("datum", help="path to a cover datum JSON file, or - "
                                 "for stdin")
    p.add_argument("--json", action="store_true",
                   help="emit the full report as JSON")
    p.set_defaults(func=_cmd_datum)

    p = sub.add_parser("search",
                       help="experimental: sweep binomial germ data at a "
                            "fixed genus and rank the survivors by speed")
    p.add_argument("--genus", type=int, required=True, help="fiber genus")
    p.add_argument("--max-n", type=int, required=True,
                   help="largest branch bidegree n to try (even n only)")
    p.add_argument("--germ-grid", required=True, metavar="AxB",
                   help="try germs y^a - z^b for 2 <= a <= A, 2 <= b <= B")
    p.add_argument("--json", action="store_true",
                   help="emit the candidate list as JSON")
    p.set_defaults(func=_cmd_search)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())

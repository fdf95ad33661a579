"""Command-line front end.

Subcommands: analyze | classify | homology | combine | builtin | sweep.
Complexes are read from a file, from stdin (``-``), or by built-in name;
descriptors for ``combine`` are JSON files.  Exit codes: 0 success,
2 parse error, 3 unsupported hypothesis, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .classify import ScopeFlags, scope_flags
from .complexes import (
    DuplicateVertexError,
    EmptyComplexError,
    SimplicialComplex,
    connected_components,
    parse_complex,
)
from .exact_linalg import FieldSpec
from .fiber import FiberTraceReport, RingDescriptor, classify_sr, combine_many
from .homology import reduced_betti
from .library import builtin_complex, builtin_facet_text, builtin_names, is_builtin
from .sweep import run_sweep
from .verdicts import TraceClass, TriState, UnsupportedHypothesisError

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_INTERNAL = 4


class StrictModeError(UnsupportedHypothesisError):
    """--strict rejected an input outside the classification hypotheses."""


REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "srtrace report",
    "type": "object",
    "required": ["kind", "field"],
    "properties": {
        "kind": {"enum": ["analyze", "classify", "homology", "combine"]},
        "field": {"type": "string"},
        "input": {
            "type": "object",
            "required": ["vertices", "facets", "dim"],
            "properties": {
                "vertices": {"type": "integer", "minimum": 0},
                "facets": {"type": "integer", "minimum": 1},
                "dim": {"type": "integer", "minimum": -1},
                "labels": {"type": "array", "items": {"type": "string"}},
            },
        },
        "flags": {"type": "object"},
        "homology": {
            "type": "object",
            "patternProperties": {"^-?[0-9]+$": {"type": "integer", "minimum": 0}},
        },
        "trace": {
            "type": "object",
            "required": ["trace_class"],
            "properties": {"trace_class": {"type": "string"}},
        },
        "components": {"type": "array"},
        "fiber": {
            "type": "object",
            "required": ["overall_dim", "summands", "verdicts"],
            "properties": {
                "overall_dim": {"type": "integer"},
                "summands": {"type": "array"},
                "verdicts": {"type": "object"},
            },
        },
        "warnings": {"type": "array", "items": {"type": "string"}},
        "evidence": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "result", "rule"],
            },
        },
    },
}


def _parse_field(text: str) -> FieldSpec:
    if text in ("q", "Q"):
        return FieldSpec.rationals()
    if text.startswith("fp:"):
        return FieldSpec.prime(int(text[3:]))
    raise ValueError(f"field must be 'q' or 'fp:<prime>', got {text!r}")


def _load_complex(source: str) -> tuple[SimplicialComplex, list[str]]:
    captured: list[str] = []
    with warnings.catch_warnings(record=True) as log:
        warnings.simplefilter("always")
        if source == "-":
            delta = parse_complex(sys.stdin.read())
        elif is_builtin(source):
            delta = builtin_complex(source)
        else:
            delta = parse_complex(Path(source).read_text())
    captured.extend(str(w.message) for w in log)
    return delta, captured


def _tri(value: TriState) -> dict:
    out = {"value": value.state}
    if value.reason:
        out["reason"] = value.reason
    return out


def _flags_dict(f: ScopeFlags) -> dict:
    return {
        "normal": f.normal,
        "pure": f.pure,
        "connected": f.connected,
        "cm": f.cm,
        "cm_punctured": f.cm_punctured,
        "gorenstein": f.gorenstein,
        "gorenstein_punctured": f.gorenstein_punctured,
        "quasi_gorenstein": _tri(f.quasi_gorenstein),
        "pseudomanifold": f.pseudomanifold,
        "orientable": _tri(f.orientable),
        "homology_manifold": f.homology_manifold,
        "cone_points": list(f.cone_points),
    }


def _input_dict(delta: SimplicialComplex) -> dict:
    return {
        "vertices": delta.n_vertices,
        "facets": len(delta.facets),
        "dim": delta.dim,
        "labels": list(delta.labels),
    }


def _homology_dict(delta: SimplicialComplex, field: FieldSpec) -> dict:
    profile = reduced_betti(delta, field)
    return {str(i): v for i, v in sorted(profile.betti.items())}


def _fiber_dict(fiber: FiberTraceReport) -> dict:
    verdicts = {
        "equals_ring": _tri(fiber.verdicts.equals_ring),
        "equals_m": _tri(fiber.verdicts.equals_m),
        "m_primary": _tri(fiber.verdicts.m_primary),
    }
    if fiber.verdicts.contains_m_squared is not None:
        verdicts["contains_m_squared"] = _tri(fiber.verdicts.contains_m_squared)
    if fiber.verdicts.equals_m_squared is not None:
        verdicts["equals_m_squared"] = _tri(fiber.verdicts.equals_m_squared)
    return {
        "overall_dim": fiber.overall_dim,
        "summands": [
            {"name": s.name, "kind": s.kind.value}
            | ({"ideal": s.ideal.value} if s.ideal else {})
            for s in fiber.summands
        ],
        "verdicts": verdicts,
        "evidence": [e.as_dict() for e in fiber.evidence],
    }


def _print_report(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
        return
    print(_render_text(report))


def _render_text(report: dict) -> str:
    lines = []
    if "input" in report:
        i = report["input"]
        lines.append(
            f"input: {i['vertices']} vertices, {i['facets']} facets, dim {i['dim']}"
        )
    lines.append(f"field: {report['field']}")
    if "homology" in report:
        table = ", ".join(f"b~{i}={v}" for i, v in report["homology"].items())
        lines.append(f"reduced betti: {table}")
    if "flags" in report:
        parts = []
        for key, value in report["flags"].items():
            if isinstance(value, dict):
                parts.append(f"{key}={value['value']}")
            elif isinstance(value, list):
                if value:
                    parts.append(f"{key}={{{' '.join(value)}}}")
            else:
                parts.append(f"{key}={str(value).lower()}")
        lines.append("flags: " + ", ".join(parts))
    if "trace" in report:
        lines.append(f"trace class: {report['trace']['trace_class']}")
    if "components" in report:
        for comp in report["components"]:
            lines.append(
                f"  {comp['name']}: dim {comp['dim']}, trace {comp['trace']['trace_class']}"
            )
    if "fiber" in report:
        f = report["fiber"]
        lines.append(f"direct sum over {len(f['summands'])} summands:")
        for s in f["summands"]:
            ideal = f" [{s['ideal']}]" if "ideal" in s else ""
            lines.append(f"  {s['name']}: {s['kind']}{ideal}")
        for name, verdict in f["verdicts"].items():
            suffix = f" ({verdict['reason']})" if "reason" in verdict else ""
            lines.append(f"  {name}: {verdict['value']}{suffix}")
    for w in report.get("warnings", []):
        lines.append(f"warning: {w}")
    if "evidence" in report:
        lines.append("evidence:")
        for e in report["evidence"]:
            lines.append(f"  {e['check']} = {e['result']}  [{e['rule']}]")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    delta, warns = _load_complex(args.complex)
    field = _parse_field(args.field)
    out = {
        "kind": "analyze",
        "field": str(field),
        "input": _input_dict(delta),
        "homology": _homology_dict(delta, field),
        "warnings": warns,
    }
    components = connected_components(delta)
    if len(components) <= 1:
        out["flags"] = _flags_dict(scope_flags(delta, field))
    else:
        out["components"] = [
            {
                "name": f"component_{i}",
                "dim": comp.dim,
                "flags": _flags_dict(scope_flags(comp, field)),
            }
            for i, comp in enumerate(components, start=1)
        ]
    _print_report(out, args.json)
    return EXIT_OK


def cmd_classify(args) -> int:
    delta, warns = _load_complex(args.complex)
    field = _parse_field(args.field)
    result = classify_sr(delta, field, check_all_faces=args.all_faces)
    out = {
        "kind": "classify",
        "field": str(field),
        "input": _input_dict(delta),
        "warnings": warns,
    }
    if result.fiber is None:
        report = result.components[0].report
        if args.strict and report.trace_class is TraceClass.UNKNOWN:
            raise StrictModeError(
                "classification is unknown for this input; rerun without --strict "
                "to see the populated flags"
            )
        out["trace"] = {"trace_class": report.trace_class.value}
        out["flags"] = _flags_dict(report)
        out["evidence"] = [e.as_dict() for e in report.evidence]
    else:
        out["components"] = [
            {
                "name": c.name,
                "dim": c.complex.dim,
                "trace": {"trace_class": c.report.trace_class.value},
                "flags": _flags_dict(c.report),
            }
            for c in result.components
        ]
        out["fiber"] = _fiber_dict(result.fiber)
    _print_report(out, args.json)
    return EXIT_OK


def cmd_homology(args) -> int:
    delta, warns = _load_complex(args.complex)
    field = _parse_field(args.field)
    out = {
        "kind": "homology",
        "field": str(field),
        "input": _input_dict(delta),
        "homology": _homology_dict(delta, field),
        "warnings": warns,
    }
    _print_report(out, args.json)
    return EXIT_OK


def cmd_combine(args) -> int:
    descriptors = []
    for path in args.descriptors:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        descriptors.append(RingDescriptor.from_json(json.loads(text)))
    fiber = combine_many(descriptors)
    out = {
        "kind": "combine",
        "field": "symbolic",
        "fiber": _fiber_dict(fiber),
        "warnings": [],
    }
    _print_report(out, args.json)
    return EXIT_OK


def cmd_builtin(args) -> int:
    print(builtin_facet_text(args.name), end="")
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = run_sweep(args.max_vertices)
    print(f"complexes checked (up to relabeling): {report.complexes}")
    for verdict, count in sorted(report.verdicts.items()):
        print(f"  verdict {verdict}: {count}")
    print(f"unknown verdicts: {report.unknown_verdicts}")
    if report.problems:
        for p in report.problems:
            print(f"VIOLATION: {p}", file=sys.stderr)
        return EXIT_INTERNAL
    print("all properties hold")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srtrace",
        description="Classify the canonical trace of Stanley-Reisner rings "
        "from facet lists of simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_complex=True):
        if with_complex:
            p.add_argument(
                "complex",
                help="facet-list file, '-' for stdin, or a builtin name "
                f"({', '.join(builtin_names())})",
            )
        p.add_argument("--field", default="q", help="q (default) or fp:<prime>")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        p.add_argument(
            "--strict",
            action="store_true",
            help="fail (exit 3) instead of reporting unknown verdicts",
        )
        p.add_argument(
            "--all-faces",
            action="store_true",
            help="cross-validate the punctured-spectrum scan over all faces",
        )

    add_common(sub.add_parser("analyze", help="scope flags and homology profile"))
    add_common(sub.add_parser("classify", help="canonical trace classification"))
    add_common(sub.add_parser("homology", help="reduced betti numbers"))

    combine = sub.add_parser("combine", help="symbolic fiber-product trace")
    combine.add_argument("descriptors", nargs="+", help="ring descriptor JSON files")
    combine.add_argument("--json", action="store_true")

    builtin = sub.add_parser("builtin", help="print a builtin facet list")
    builtin.add_argument("name")

    swp = sub.add_parser("sweep", help="exhaustive small-complex property run")
    swp.add_argument("--max-vertices", type=int, default=4)

    return parser


_HANDLERS = {
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "homology": cmd_homology,
    "combine": cmd_combine,
    "builtin": cmd_builtin,
    "sweep": cmd_sweep,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except UnsupportedHypothesisError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except (
        EmptyComplexError,
        DuplicateVertexError,
        json.JSONDecodeError,
        OSError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Exception as exc:  # pragma: no cover
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())

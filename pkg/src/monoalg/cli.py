"""Command-line front end.

Subcommands: ``decompose``, ``props``, ``reg``, ``eg``, ``analyze``,
``sweep``.  Input is a JSON document ``{"name": ..., "generators": [[...]]}``
(a bare JSON list of rows is also accepted) or plain text with one
whitespace-separated integer row per line; ``#`` starts a comment.

Exit codes: 0 on success, 1 for usage or input errors, 2 when the input is
valid but outside the supported domain (non-simplicial cone, non-homogeneous
semigroup, redundant generators), reported in machine-readable form.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .decomposition import decompose, hilbert_verify
from .errors import (
    InputError,
    InputSyntaxError,
    InvalidCharacteristicError,
    MonoalgError,
    NonIntegerError,
    NonMinimalGeneratorsError,
    NotHomogeneousError,
    NotSimplicialError,
    PreconditionError,
    RaggedRowsError,
)
from .homology import analyze
from .properties import full_report
from .semigroup import AffineSemigroup, validate
from .serialize import (
    canonical_json,
    decomposition_text,
    decomposition_to_dict,
    properties_text,
    property_report_to_dict,
    regularity_report_to_dict,
    regularity_text,
    semigroup_to_dict,
)
from .sweep import SweepConfig, run_sweep


@dataclass(frozen=True)
class InputDocument:
    name: str | None
    generators: list[tuple[int, ...]]


def _int_entry(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise NonIntegerError(f"entry {value!r} is not an integer", field=field)
    return value


def _rows_from_json(rows, field: str) -> list[tuple[int, ...]]:
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputSyntaxError(f"{field} must be a list of integer rows",
                               field=field)
    parsed = [tuple(_int_entry(e, f"{field}[{i}][{j}]")
                    for j, e in enumerate(row))
              for i, row in enumerate(rows)]
    widths = {len(r) for r in parsed}
    if len(widths) > 1:
        bad = next(i for i, r in enumerate(parsed)
                   if len(r) != len(parsed[0]))
        raise RaggedRowsError("generator rows have different lengths",
                              field=f"{field}[{bad}]")
    return parsed


def parse_input(data: bytes | str) -> InputDocument:
    """Parse an input document, raising a positioned error on bad input."""
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputSyntaxError(f"input is not UTF-8: {exc}") from exc
    else:
        text = data
    stripped = text.strip()
    if not stripped:
        raise InputSyntaxError("input is empty")

    if stripped[0] in "{[":
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputSyntaxError(f"invalid JSON: {exc.msg}",
                                   line=exc.lineno) from exc
        if isinstance(doc, list):
            return InputDocument(None, _rows_from_json(doc, "$"))
        if not isinstance(doc, dict):
            raise InputSyntaxError("top-level JSON must be an object or a list")
        unknown = set(doc) - {"name", "generators"}
        if unknown:
            raise InputSyntaxError(
                f"unknown keys {sorted(unknown)}", field="$")
        name = doc.get("name")
        if name is not None and not isinstance(name, str):
            raise InputSyntaxError("name must be a string", field="name")
        if "generators" not in doc:
            raise InputSyntaxError("missing key 'generators'", field="$")
        return InputDocument(name, _rows_from_json(doc["generators"],
                                                   "generators"))

    rows = []
    width = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        entries = []
        for token in body.split():
            try:
                entries.append(int(token))
            except ValueError:
                raise NonIntegerError(f"token {token!r} is not an integer",
                                      line=lineno) from None
        if width is None:
            width = len(entries)
        elif len(entries) != width:
            raise RaggedRowsError(
                f"row has {len(entries)} entries, expected {width}",
                line=lineno)
        rows.append(tuple(entries))
    if not rows:
        raise InputSyntaxError("no generator rows found")
    return InputDocument(None, rows)


# ---------------------------------------------------------------------------
# command plumbing
# ---------------------------------------------------------------------------

class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); keep the contract
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="monoalg", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--input", help="input file (default: stdin)")
        p.add_argument("--json", action="store_true",
                       help="emit canonical JSON instead of text")
        p.add_argument("--char", type=int, default=0,
                       help="field characteristic (0 or a prime)")
        p.add_argument("--verbose", action="store_true",
                       help="include frame coordinates in the output")

    for name, text in [
            ("decompose", "decompose the semigroup ring over its frame ring"),
            ("props", "test seminormal, normal, CM, Buchsbaum, Gorenstein"),
            ("reg", "compute regularity, degree, codim, and depth"),
            ("eg", "check the regularity bound degree - codim"),
            ("analyze", "run decomposition, properties, and regularity")]:
        p = sub.add_parser(name, help=text)
        add_common(p)
        p.add_argument("--verify", action="store_true",
                       help="also run the independent degree-count check")
        p.add_argument("--tmax", type=int, default=8,
                       help="verification depth for --verify")

    p = sub.add_parser("sweep", help="seeded random bound-testing sweep")
    p.add_argument("--dim", type=int, default=3, help="ambient dimension")
    p.add_argument("--gens", type=int, default=5,
                   help="generators per instance, frame included")
    p.add_argument("--max-entry", type=int, default=4,
                   help="largest scaling degree")
    p.add_argument("--count", type=int, default=50,
                   help="number of instances")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--char", type=int, default=0,
                   help="field characteristic (0 or a prime)")
    p.add_argument("--json", action="store_true",
                   help="emit canonical JSON instead of text")
    return parser


def _read_semigroup(args) -> tuple[AffineSemigroup, InputDocument]:
    if args.input:
        data = Path(args.input).read_bytes()
    else:
        data = sys.stdin.buffer.read()
    doc = parse_input(data)
    return validate(doc.generators), doc


def _emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(canonical_json(doc))
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _header_lines(semigroup: AffineSemigroup, doc: InputDocument) -> list[str]:
    name = f" {doc.name!r}" if doc.name else ""
    return [
        f"semigroup{name}: {len(semigroup.generators)} generators in "
        f"N^{semigroup.ambient_dim}, rank {semigroup.rank}"
    ]


def _verify_section(args, semigroup, dec) -> dict:
    if not getattr(args, "verify", False):
        return {}
    ok = hilbert_verify(semigroup, dec, semigroup.degree_functional(),
                        args.tmax)
    return {"hilbert_verify": {"t_max": args.tmax, "ok": ok}}


def _cmd_decompose(args) -> int:
    semigroup, indoc = _read_semigroup(args)
    dec = decompose(semigroup)
    doc = semigroup_to_dict(semigroup)
    if indoc.name:
        doc["name"] = indoc.name
    doc["decomposition"] = decomposition_to_dict(dec, args.verbose)
    doc.update(_verify_section(args, semigroup, dec))
    lines = _header_lines(semigroup, indoc) + decomposition_text(dec,
                                                                 args.verbose)
    if "hilbert_verify" in doc:
        hv = doc["hilbert_verify"]
        lines.append(f"degree counts match up to t={hv['t_max']}: {hv['ok']}")
    _emit(args, doc, lines)
    return 0


def _cmd_props(args) -> int:
    semigroup, indoc = _read_semigroup(args)
    dec = decompose(semigroup)
    report = full_report(semigroup, dec)
    doc = semigroup_to_dict(semigroup)
    if indoc.name:
        doc["name"] = indoc.name
    doc["properties"] = property_report_to_dict(report)
    doc.update(_verify_section(args, semigroup, dec))
    _emit(args, doc, _header_lines(semigroup, indoc) + properties_text(report))
    return 0


def _cmd_reg(args) -> int:
    semigroup, indoc = _read_semigroup(args)
    dec = decompose(semigroup)
    report = analyze(semigroup, args.char, dec)
    doc = semigroup_to_dict(semigroup)
    if indoc.name:
        doc["name"] = indoc.name
    doc["regularity"] = regularity_report_to_dict(report)
    doc.update(_verify_section(args, semigroup, dec))
    _emit(args, doc, _header_lines(semigroup, indoc) + regularity_text(report))
    return 0


def _cmd_eg(args) -> int:
    semigroup, _ = _read_semigroup(args)
    dec = decompose(semigroup)
    report = analyze(semigroup, args.char, dec)
    doc = {"reg": report.regularity, "bound": report.eg_bound,
           "holds": report.eg_holds}
    doc.update(_verify_section(args, semigroup, dec))
    lines = [f"reg {report.regularity} <= degree - codim = "
             f"{report.eg_bound}: {'holds' if report.eg_holds else 'VIOLATED'}"]
    if "hilbert_verify" in doc:
        hv = doc["hilbert_verify"]
        lines.append(f"degree counts match up to t={hv['t_max']}: {hv['ok']}")
    _emit(args, doc, lines)
    return 0


def _cmd_analyze(args) -> int:
    semigroup, indoc = _read_semigroup(args)
    dec = decompose(semigroup)
    props = full_report(semigroup, dec)
    reg = analyze(semigroup, args.char, dec)
    doc = semigroup_to_dict(semigroup)
    if indoc.name:
        doc["name"] = indoc.name
    doc["decomposition"] = decomposition_to_dict(dec, args.verbose)
    doc["properties"] = property_report_to_dict(props)
    doc["regularity"] = regularity_report_to_dict(reg)
    doc.update(_verify_section(args, semigroup, dec))
    lines = (_header_lines(semigroup, indoc)
             + decomposition_text(dec, args.verbose)
             + properties_text(props)
             + regularity_text(reg))
    if "hilbert_verify" in doc:
        hv = doc["hilbert_verify"]
        lines.append(f"degree counts match up to t={hv['t_max']}: {hv['ok']}")
    _emit(args, doc, lines)
    return 0


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(ambient_dim=args.dim, num_generators=args.gens,
                      max_entry=args.max_entry, count=args.count,
                      seed=args.seed, char=args.char)
    try:
        summary = run_sweep(cfg)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.json:
        sys.stdout.write(canonical_json(summary))
    else:
        lines = [
            f"sweep: {summary['analyzed']} analyzed, "
            f"{summary['skipped']} skipped (seed {cfg.seed})",
            "properties: " + ", ".join(
                f"{k}={v}" for k, v in sorted(summary["properties"].items())),
            f"regularity: min {summary['regularity']['min']} "
            f"max {summary['regularity']['max']}",
            f"bound violations: {len(summary['eg_violations'])}",
        ]
        for v in summary["eg_violations"]:
            lines.append(f"  VIOLATION: {v['generators']} reg {v['regularity']}"
                         f" bound {v['eg_bound']}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


_HANDLERS = {
    "decompose": _cmd_decompose,
    "props": _cmd_props,
    "reg": _cmd_reg,
    "eg": _cmd_eg,
    "analyze": _cmd_analyze,
    "sweep": _cmd_sweep,
}

_REASONS = {
    NotSimplicialError: "not_simplicial",
    NotHomogeneousError: "not_homogeneous",
    NonMinimalGeneratorsError: "non_minimal_generators",
}


def _report_error(args, kind: str, exc: Exception) -> None:
    if args is not None and getattr(args, "json", False):
        sys.stdout.write(canonical_json(
            {"error": {"kind": kind, "message": str(exc)}}))
    sys.stderr.write(f"error: {exc}\n")


def main(argv=None) -> int:
    parser = _build_parser()
    args = None
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 1
    except InvalidCharacteristicError as exc:
        _report_error(args, "invalid_characteristic", exc)
        return 1
    except InputError as exc:
        _report_error(args, "input", exc)
        return 1
    except OSError as exc:
        _report_error(args, "io", exc)
        return 1
    except PreconditionError as exc:
        kind = _REASONS.get(type(exc), "precondition")
        _report_error(args, kind, exc)
        return 2
    except MonoalgError as exc:
        _report_error(args, "error", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end for the validate / generate / review / integrate pipeline.

Exit codes: 0 on success, 1 on validation or parse errors, 2 on usage errors
(including unreadable or malformed JSON input files).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .diagram import Diagram, ValidationReport, parse_diagram_json, validate_diagram
from .errors import (
    DiagramFormatError,
    FunctionalParseError,
    ReviewFormatError,
    UnknownCandidateIdError,
    UnsupportedConstructError,
)
from .functional import Ontology, PrefixEnvironment, parse_functional, render_functional
from .generate import generate
from .manchester import render_manchester
from .session import (
    ReviewList,
    apply_selection,
    diagram_entities,
    integrate,
    merge_existing,
    parse_review_json,
    serialize_review_json,
)

USAGE_ERROR = 2
CONTENT_ERROR = 1


class _CliFailure(Exception):
    def __init__(self, code: int, message: str):
        self.code = code
        self.message = message


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliFailure(USAGE_ERROR, f"cannot read {path}: {exc}") from exc


def _write_text(path: str, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _CliFailure(USAGE_ERROR, f"cannot write {path}: {exc}") from exc


def _load_diagram(path: str) -> Diagram:
    try:
        return parse_diagram_json(_read_text(path))
    except DiagramFormatError as exc:
        raise _CliFailure(USAGE_ERROR, f"{path}: {exc}") from exc


def _load_review(path: str) -> ReviewList:
    try:
        return parse_review_json(_read_text(path))
    except ReviewFormatError as exc:
        raise _CliFailure(USAGE_ERROR, f"{path}: {exc}") from exc


def _load_ontology(path: str) -> Ontology:
    try:
        return parse_functional(_read_text(path))
    except (FunctionalParseError, UnsupportedConstructError) as exc:
        raise _CliFailure(CONTENT_ERROR, f"{path}: {exc}") from exc


def _resolve_base_iri(args: argparse.Namespace) -> str | None:
    base = args.base_iri if getattr(args, "base_iri", None) else os.environ.get("OWLAX_BASE_IRI")
    if base is not None and not base.endswith(("#", "/")):
        raise _CliFailure(USAGE_ERROR, f"base IRI must end in '#' or '/': {base!r}")
    return base


def _print_report(report: ValidationReport) -> None:
    for finding in report.errors:
        print(f"ERROR {finding.code} {finding.element or '-'}: {finding.message}")
    for finding in report.warnings:
        print(f"WARNING {finding.code} {finding.element or '-'}: {finding.message}")


def _validated_diagram(path: str) -> Diagram:
    diagram = _load_diagram(path)
    report = validate_diagram(diagram)
    _print_report(report)
    if report.errors:
        raise _CliFailure(CONTENT_ERROR, "")
    return diagram


def cmd_validate(args: argparse.Namespace) -> int:
    diagram = _load_diagram(args.diagram)
    report = validate_diagram(diagram)
    _print_report(report)
    return 0 if report.ok else CONTENT_ERROR


def _base_ontology(args: argparse.Namespace) -> Ontology:
    base_iri = _resolve_base_iri(args)
    ontology = _load_ontology(args.ontology) if args.ontology else Ontology()
    if base_iri is not None:
        ontology = Ontology(
            prefixes=PrefixEnvironment(base_iri), axioms=ontology.axioms, declared=ontology.declared
        )
    return ontology


def cmd_candidates(args: argparse.Namespace) -> int:
    diagram = _validated_diagram(args.diagram)
    ontology = _base_ontology(args)
    review = merge_existing(generate(diagram), ontology)
    _write_text(args.output, serialize_review_json(review))
    existing = sum(1 for entry in review.entries if entry.candidate.status.value == "existing")
    print(f"{len(review.entries)} candidates ({existing} existing)")
    return 0


def cmd_integrate(args: argparse.Namespace) -> int:
    diagram = _validated_diagram(args.diagram)
    ontology = _base_ontology(args)
    review = merge_existing(generate(diagram), ontology)
    decisions = {entry.id: entry.accept for entry in _load_review(args.review).entries}
    try:
        review = apply_selection(review, decisions)
    except UnknownCandidateIdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CONTENT_ERROR
    result = integrate(review, ontology).declaring(diagram_entities(diagram))
    _write_text(args.output, render_functional(result))
    print(f"{len(result.axioms)} axioms written")
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    ontology = _load_ontology(args.ontology)
    if args.format == "manchester":
        for axiom in ontology.axioms:
            print(render_manchester(axiom))
    else:
        print(render_functional(ontology), end="")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(state_dir=args.state_dir, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="owlax",
        description="Validate class diagrams, generate candidate axioms, and integrate reviews.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", help="check a diagram against the legal configurations")
    validate.add_argument("-d", "--diagram", required=True, help="diagram JSON file")
    validate.set_defaults(handler=cmd_validate)

    candidates = sub.add_parser("candidates", help="generate a review file of candidate axioms")
    candidates.add_argument("-d", "--diagram", required=True, help="diagram JSON file")
    candidates.add_argument("--ontology", help="existing ontology (functional syntax)")
    candidates.add_argument("-o", "--output", required=True, help="review JSON output path")
    candidates.add_argument("--base-iri", help="base IRI (default via OWLAX_BASE_IRI)")
    candidates.set_defaults(handler=cmd_candidates)

    integrate_cmd = sub.add_parser("integrate", help="apply a review file and write the ontology")
    integrate_cmd.add_argument("-d", "--diagram", required=True, help="diagram JSON file")
    integrate_cmd.add_argument("-r", "--review", required=True, help="review JSON file")
    integrate_cmd.add_argument("--ontology", help="existing ontology (functional syntax)")
    integrate_cmd.add_argument("-o", "--output", required=True, help="ontology output path")
    integrate_cmd.add_argument("--base-iri", help="base IRI (default via OWLAX_BASE_IRI)")
    integrate_cmd.set_defaults(handler=cmd_integrate)

    render = sub.add_parser("render", help="print an ontology in a chosen syntax")
    render.add_argument("--ontology", required=True, help="ontology file (functional syntax)")
    render.add_argument("--format", required=True, choices=["manchester", "functional"])
    render.set_defaults(handler=cmd_render)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--static", help="directory of web UI assets served at /")
    serve.add_argument("--state-dir", help="directory for session snapshots")
    serve.set_defaults(handler=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except _CliFailure as failure:
        if failure.message:
            print(f"error: {failure.message}", file=sys.stderr)
        return failure.code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

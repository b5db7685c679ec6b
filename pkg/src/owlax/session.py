"""Review workflow: merge candidates with an existing ontology, apply human
decisions, and integrate accepted axioms.

The review list is the contract between the generator and the integrator: an
ordered sequence of candidates with accept flags. Entries lifted from the
ontology default to accepted (they are already there); freshly generated ones
require opt-in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Mapping, Sequence

from .axioms import Axiom, Entity, class_entity, data_property, named_individual, object_property
from .diagram import Diagram, entities_of
from .errors import ReviewFormatError, UnknownCandidateIdError
from .functional import Ontology, axiom_functional, parse_axiom
from .generate import CandidateAxiom, CandidateStatus, SchemaCode
from .manchester import render_manchester


@dataclass(frozen=True, slots=True)
class ReviewEntry:
    candidate: CandidateAxiom
    manchester: str
    accept: bool

    @property
    def id(self) -> str:
        return self.candidate.id


@dataclass(frozen=True)
class ReviewList:
    entries: tuple[ReviewEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        ids = [entry.id for entry in self.entries]
        if len(ids) != len(set(ids)):
            raise ValueError("review entries must have unique ids")

    def accepted_axioms(self) -> list[Axiom]:
        return [entry.candidate.axiom for entry in self.entries if entry.accept]


def merge_existing(candidates: Sequence[CandidateAxiom], ontology: Ontology) -> ReviewList:
    """Fold the ontology's axioms into the candidate list.

    Candidates already present in the ontology become Existing and default to
    accepted; ontology axioms matching no candidate are appended after the
    generated block, in canonical order, with ids ``ont#<index>``.
    """
    present = ontology.axiom_set()
    entries: list[ReviewEntry] = []
    for candidate in candidates:
        if candidate.axiom in present:
            existing = replace(candidate, status=CandidateStatus.EXISTING)
            entries.append(ReviewEntry(existing, render_manchester(existing.axiom), accept=True))
        else:
            entries.append(ReviewEntry(candidate, render_manchester(candidate.axiom), accept=False))

    covered = {candidate.axiom for candidate in candidates}
    leftovers = [axiom for axiom in ontology.axioms if axiom not in covered]
    for index, axiom in enumerate(leftovers):
        lifted = CandidateAxiom(
            id=f"ont#{index}",
            axiom=axiom,
            schema=None,
            provenance=None,
            status=CandidateStatus.EXISTING,
        )
        entries.append(ReviewEntry(lifted, render_manchester(axiom), accept=True))
    return ReviewList(tuple(entries))


def integrate(review: ReviewList, ontology: Ontology) -> Ontology:
    """Apply a review: add accepted axioms, drop unchecked Existing ones.

    Unchecked New entries are simply not added. The result is deduplicated and
    canonical; declared entities only ever grow.
    """
    dropped = {
        entry.candidate.axiom
        for entry in review.entries
        if entry.candidate.status is CandidateStatus.EXISTING and not entry.accept
    }
    kept = [axiom for axiom in ontology.axioms if axiom not in dropped]
    return ontology.with_axioms(kept + review.accepted_axioms())


def apply_selection(review: ReviewList, decisions: Mapping[str, bool]) -> ReviewList:
    """Overwrite accept flags for the listed candidate ids; others are unchanged."""
    known = {entry.id for entry in review.entries}
    unknown = sorted(set(decisions) - known)
    if unknown:
        raise UnknownCandidateIdError(unknown)
    return ReviewList(
        tuple(
            replace(entry, accept=bool(decisions[entry.id])) if entry.id in decisions else entry
            for entry in review.entries
        )
    )


def diagram_entities(diagram: Diagram) -> list[Entity]:
    """The diagram's named entities (datatypes excluded) for declaration purposes."""
    inventory = entities_of(diagram)
    return (
        [class_entity(name) for name in inventory.classes]
        + [object_property(name) for name in inventory.object_properties]
        + [data_property(name) for name in inventory.data_properties]
        + [named_individual(name) for name in inventory.individuals]
    )


@dataclass
class SessionState:
    """One editing session: the diagram, the active ontology, and the last review."""

    diagram: Diagram | None = None
    ontology: Ontology = Ontology()
    last_review: ReviewList | None = None


# --- review file format ------------------------------------------------------

_ENTRY_FIELDS = {"id", "axiom", "manchester", "schema", "status", "accept"}


def review_to_dict(review: ReviewList) -> dict:
    return {
        "entries": [
            {
                "id": entry.id,
                "axiom": axiom_functional(entry.candidate.axiom),
                "manchester": entry.manchester,
                "schema": entry.candidate.schema.value if entry.candidate.schema else None,
                "status": entry.candidate.status.value,
                "accept": entry.accept,
            }
            for entry in review.entries
        ]
    }


def _provenance_from_id(entry_id: str, schema: SchemaCode | None) -> str | tuple[str, str] | None:
    if schema is None:
        return None
    if schema is SchemaCode.DISJ:
        parts = entry_id.split("#")
        return (parts[1], parts[2]) if len(parts) == 3 else None
    return entry_id.rsplit("#", 1)[0]


def review_from_dict(obj: object) -> ReviewList:
    """Decode a review file; the functional-syntax axiom string is authoritative."""
    if not isinstance(obj, dict) or set(obj) != {"entries"} or not isinstance(obj["entries"], list):
        raise ReviewFormatError("review: expected an object with an 'entries' array")
    entries: list[ReviewEntry] = []
    for index, item in enumerate(obj["entries"]):
        context = f"review entry #{index}"
        if not isinstance(item, dict):
            raise ReviewFormatError(f"{context}: expected an object")
        unknown = set(item) - _ENTRY_FIELDS
        if unknown:
            raise ReviewFormatError(f"{context}: unknown field {sorted(unknown)[0]!r}")
        missing = _ENTRY_FIELDS - set(item)
        if missing:
            raise ReviewFormatError(f"{context}: missing field {sorted(missing)[0]!r}")
        if not isinstance(item["id"], str) or not item["id"]:
            raise ReviewFormatError(f"{context}: field 'id' must be a non-empty string")
        if not isinstance(item["accept"], bool):
            raise ReviewFormatError(f"{context}: field 'accept' must be a boolean")
        if not isinstance(item["manchester"], str):
            raise ReviewFormatError(f"{context}: field 'manchester' must be a string")
        if not isinstance(item["axiom"], str):
            raise ReviewFormatError(f"{context}: field 'axiom' must be a string")
        try:
            status = CandidateStatus(item["status"])
        except ValueError:
            raise ReviewFormatError(f"{context}: field 'status' must be 'new' or 'existing'") from None
        schema = None
        if item["schema"] is not None:
            try:
                schema = SchemaCode(item["schema"])
            except ValueError:
                raise ReviewFormatError(
                    f"{context}: field 'schema': unknown schema code {item['schema']!r}"
                ) from None
        try:
            axiom = parse_axiom(item["axiom"])
        except ValueError as exc:
            raise ReviewFormatError(f"{context}: field 'axiom': {exc}") from exc
        candidate = CandidateAxiom(
            id=item["id"],
            axiom=axiom,
            schema=schema,
            provenance=_provenance_from_id(item["id"], schema),
            status=status,
        )
        entries.append(ReviewEntry(candidate, item["manchester"], item["accept"]))
    try:
        return ReviewList(tuple(entries))
    except ValueError as exc:
        raise ReviewFormatError(f"review: {exc}") from exc


def parse_review_json(text: str | bytes) -> ReviewList:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ReviewFormatError(f"review: not valid JSON: {exc}") from exc
    return review_from_dict(obj)


def serialize_review_json(review: ReviewList) -> str:
    return json.dumps(review_to_dict(review), indent=2, ensure_ascii=False) + "\n"

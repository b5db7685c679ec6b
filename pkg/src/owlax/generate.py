"""Systematic candidate-axiom generation from a validated diagram.

Each edge is expanded through a fixed schema table (domain and range
restrictions in scoped and unscoped forms, existentials, and functionality
restrictions, with inverse variants where object properties allow them), and
every unordered pair of classes not linked by a subclass path yields a
disjointness candidate. Output order and ids are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .axioms import (
    Axiom,
    ClassAssertion,
    DataAllValuesFrom,
    DataMaxCardinality,
    DataOneOf,
    DataRange,
    DataSomeValuesFrom,
    DisjointClasses,
    Literal,
    NamedClass,
    NamedDatatype,
    ObjectAllValuesFrom,
    ObjectInverseOf,
    ObjectMaxCardinality,
    ObjectOneOf,
    ObjectSomeValuesFrom,
    SubClassOf,
    THING,
    TOP_DATATYPE,
    class_entity,
    data_property,
    datatype,
    named_individual,
    object_property,
)
from .diagram import Diagram, Edge, EdgeKind, Node, NodeKind, subclass_reachable, validate_diagram
from .errors import InvalidDiagramError


class SchemaCode(Enum):
    """Generating schema of a candidate; the closed set used in candidate ids."""

    DOM = "DOM"      # unscoped domain restriction
    SDOM = "SDOM"    # scoped domain restriction
    RAN = "RAN"      # unscoped range restriction
    SRAN = "SRAN"    # scoped range restriction
    EX = "EX"        # existential
    IEX = "IEX"      # inverse existential
    FUN = "FUN"      # functionality
    QFUN = "QFUN"    # qualified functionality
    IFUN = "IFUN"    # inverse functionality
    QIFUN = "QIFUN"  # qualified inverse functionality
    TYPE = "TYPE"    # class assertion
    SUBC = "SUBC"    # subclass axiom
    DISJ = "DISJ"    # class disjointness


class CandidateStatus(Enum):
    NEW = "new"
    EXISTING = "existing"


@dataclass(frozen=True, slots=True)
class CandidateAxiom:
    """A proposed axiom with a stable id and the diagram element it came from.

    ``schema`` and ``provenance`` are None for entries that were lifted from an
    existing ontology rather than generated from the diagram.
    """

    id: str
    axiom: Axiom
    schema: SchemaCode | None
    provenance: str | tuple[str, str] | None
    status: CandidateStatus = CandidateStatus.NEW


def _object_schemas(
    prop_name: str, subject: NamedClass, filler, inverse_filler
) -> list[tuple[SchemaCode, Axiom]]:
    """Schemas for an object-property edge; inverse rows only with a class filler."""
    prop = object_property(prop_name)
    rows = [
        (SchemaCode.DOM, SubClassOf(ObjectSomeValuesFrom(prop, THING), subject)),
        (SchemaCode.SDOM, SubClassOf(ObjectSomeValuesFrom(prop, filler), subject)),
        (SchemaCode.RAN, SubClassOf(THING, ObjectAllValuesFrom(prop, filler))),
        (SchemaCode.SRAN, SubClassOf(subject, ObjectAllValuesFrom(prop, filler))),
        (SchemaCode.EX, SubClassOf(subject, ObjectSomeValuesFrom(prop, filler))),
    ]
    inverse = ObjectInverseOf(prop)
    if inverse_filler is not None:
        rows.append((SchemaCode.IEX, SubClassOf(inverse_filler, ObjectSomeValuesFrom(inverse, subject))))
    rows += [
        (SchemaCode.FUN, SubClassOf(subject, ObjectMaxCardinality(1, prop, THING))),
        (SchemaCode.QFUN, SubClassOf(subject, ObjectMaxCardinality(1, prop, filler))),
    ]
    if inverse_filler is not None:
        rows += [
            (SchemaCode.IFUN, SubClassOf(inverse_filler, ObjectMaxCardinality(1, inverse, THING))),
            (SchemaCode.QIFUN, SubClassOf(inverse_filler, ObjectMaxCardinality(1, inverse, subject))),
        ]
    return rows


def _data_schemas(
    prop_name: str, subject: NamedClass, data_range: DataRange
) -> list[tuple[SchemaCode, Axiom]]:
    """Schemas for a data-property edge; data properties have no inverses."""
    prop = data_property(prop_name)
    return [
        (SchemaCode.DOM, SubClassOf(DataSomeValuesFrom(prop, TOP_DATATYPE), subject)),
        (SchemaCode.SDOM, SubClassOf(DataSomeValuesFrom(prop, data_range), subject)),
        (SchemaCode.RAN, SubClassOf(THING, DataAllValuesFrom(prop, data_range))),
        (SchemaCode.SRAN, SubClassOf(subject, DataAllValuesFrom(prop, data_range))),
        (SchemaCode.EX, SubClassOf(subject, DataSomeValuesFrom(prop, data_range))),
        (SchemaCode.FUN, SubClassOf(subject, DataMaxCardinality(1, prop, TOP_DATATYPE))),
        (SchemaCode.QFUN, SubClassOf(subject, DataMaxCardinality(1, prop, data_range))),
    ]


def edge_schema_instances(edge: Edge, nodes_by_id: dict[str, Node]) -> list[tuple[SchemaCode, Axiom]]:
    """All (schema, axiom) rows for one edge, in fixed schema order."""
    source = nodes_by_id[edge.source]
    target = nodes_by_id[edge.target]

    if edge.kind is EdgeKind.OBJECT_PROPERTY:
        subject = NamedClass(class_entity(source.label))
        if target.kind is NodeKind.CLASS:
            filler = NamedClass(class_entity(target.label))
            return _object_schemas(edge.property_label, subject, filler, inverse_filler=filler)
        nominal = ObjectOneOf(named_individual(target.label))
        return _object_schemas(edge.property_label, subject, nominal, inverse_filler=None)

    if edge.kind is EdgeKind.DATA_PROPERTY:
        subject = NamedClass(class_entity(source.label))
        if target.kind is NodeKind.DATATYPE:
            data_range: DataRange = NamedDatatype(datatype(target.label))
        else:
            data_range = DataOneOf(Literal(target.label, datatype(target.literal_datatype)))
        return _data_schemas(edge.property_label, subject, data_range)

    if edge.kind is EdgeKind.TYPE:
        assertion = ClassAssertion(
            NamedClass(class_entity(target.label)), named_individual(source.label)
        )
        return [(SchemaCode.TYPE, assertion)]

    # subclass edge
    sub = NamedClass(class_entity(source.label))
    sup = NamedClass(class_entity(target.label))
    return [(SchemaCode.SUBC, SubClassOf(sub, sup))]


def _eligible_disjoint_pairs(diagram: Diagram) -> list[tuple[str, str]]:
    """Unordered class-name pairs with no subclass path in either direction, sorted."""
    class_names = sorted({node.label for node in diagram.nodes if node.kind is NodeKind.CLASS})
    return [
        (first, second)
        for first, second in combinations(class_names, 2)
        if not subclass_reachable(diagram, first, second)
        and not subclass_reachable(diagram, second, first)
    ]


def generate(diagram: Diagram) -> list[CandidateAxiom]:
    """Candidate axioms for a valid diagram, deterministically ordered and deduplicated.

    Edge candidates come first, in diagram edge order with a fixed schema order
    inside each edge block, followed by disjointness candidates over
    lexicographically sorted class pairs. Structural duplicates (e.g. from
    parallel identical edges) keep only their first occurrence.
    """
    report = validate_diagram(diagram)
    if report.errors:
        raise InvalidDiagramError(report)

    nodes_by_id = {node.id: node for node in diagram.nodes}
    seen: set[Axiom] = set()
    candidates: list[CandidateAxiom] = []

    for edge in diagram.edges:
        for code, axiom in edge_schema_instances(edge, nodes_by_id):
            if axiom in seen:
                continue
            seen.add(axiom)
            candidates.append(
                CandidateAxiom(
                    id=f"{edge.id}#{code.value}",
                    axiom=axiom,
                    schema=code,
                    provenance=edge.id,
                )
            )

    for first, second in _eligible_disjoint_pairs(diagram):
        axiom = DisjointClasses(NamedClass(class_entity(first)), NamedClass(class_entity(second)))
        if axiom in seen:
            continue
        seen.add(axiom)
        candidates.append(
            CandidateAxiom(
                id=f"disj#{first}#{second}",
                axiom=axiom,
                schema=SchemaCode.DISJ,
                provenance=(first, second),
            )
        )

    return candidates


def candidate_count(diagram: Diagram) -> int:
    """Number of candidates generate() yields, via distinct-axiom accounting."""
    report = validate_diagram(diagram)
    if report.errors:
        raise InvalidDiagramError(report)

    nodes_by_id = {node.id: node for node in diagram.nodes}
    distinct: set[Axiom] = set()
    for edge in diagram.edges:
        distinct.update(axiom for _, axiom in edge_schema_instances(edge, nodes_by_id))
    for first, second in _eligible_disjoint_pairs(diagram):
        distinct.add(DisjointClasses(NamedClass(class_entity(first)), NamedClass(class_entity(second))))
    return len(distinct)

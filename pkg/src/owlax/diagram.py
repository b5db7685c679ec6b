"""Class-diagram data model, structural validation, and the canonical JSON format.

A diagram is nodes (class / datatype / individual / literal) plus labeled
directed edges (object property / data property / type / subclass). Validation
never raises; every finding lands in a report so callers can show all problems
at once.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass, field
from enum import Enum

from .axioms import is_datatype_name, is_identifier
from .errors import DiagramFormatError, UnknownClassError


class NodeKind(Enum):
    CLASS = "class"
    DATATYPE = "datatype"
    INDIVIDUAL = "individual"
    LITERAL = "literal"


class EdgeKind(Enum):
    OBJECT_PROPERTY = "objectProperty"
    DATA_PROPERTY = "dataProperty"
    TYPE = "type"
    SUBCLASS_OF = "subClassOf"


#: The node-edge-node configurations a diagram may use.
LEGAL_CONFIGURATIONS = frozenset(
    {
        (NodeKind.CLASS, EdgeKind.OBJECT_PROPERTY, NodeKind.CLASS),
        (NodeKind.CLASS, EdgeKind.OBJECT_PROPERTY, NodeKind.INDIVIDUAL),
        (NodeKind.CLASS, EdgeKind.DATA_PROPERTY, NodeKind.DATATYPE),
        (NodeKind.CLASS, EdgeKind.DATA_PROPERTY, NodeKind.LITERAL),
        (NodeKind.INDIVIDUAL, EdgeKind.TYPE, NodeKind.CLASS),
        (NodeKind.CLASS, EdgeKind.SUBCLASS_OF, NodeKind.CLASS),
    }
)

# Report codes.
EMPTY_DIAGRAM = "EMPTY_DIAGRAM"
ILLEGAL_CONFIGURATION = "ILLEGAL_CONFIGURATION"
BAD_NAME = "BAD_NAME"
DANGLING_EDGE = "DANGLING_EDGE"
DUPLICATE_ENTITY = "DUPLICATE_ENTITY"


@dataclass(frozen=True, slots=True)
class Node:
    """A diagram node. ``literal_datatype`` is present exactly on literal nodes."""

    id: str
    kind: NodeKind
    label: str
    literal_datatype: str | None = None
    position: tuple[float, float] | None = None

    def __post_init__(self):
        if self.kind is NodeKind.LITERAL:
            if self.literal_datatype is None:
                raise ValueError(f"literal node {self.id!r} requires a literal_datatype")
        elif self.literal_datatype is not None:
            raise ValueError(f"{self.kind.value} node {self.id!r} must not carry a literal_datatype")


@dataclass(frozen=True, slots=True)
class Edge:
    """A directed edge. ``property_label`` is present exactly on property edges."""

    id: str
    kind: EdgeKind
    source: str
    target: str
    property_label: str | None = None

    def __post_init__(self):
        if self.kind in (EdgeKind.OBJECT_PROPERTY, EdgeKind.DATA_PROPERTY):
            if self.property_label is None:
                raise ValueError(f"{self.kind.value} edge {self.id!r} requires a property label")
        elif self.property_label is not None:
            raise ValueError(f"{self.kind.value} edge {self.id!r} must not carry a property label")


@dataclass(frozen=True)
class Diagram:
    """An immutable diagram; node and edge ids must be unique."""

    nodes: tuple[Node, ...]
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple(self.edges))
        seen: set[str] = set()
        for node in self.nodes:
            if node.id in seen:
                raise ValueError(f"duplicate node id: {node.id!r}")
            seen.add(node.id)
        seen.clear()
        for edge in self.edges:
            if edge.id in seen:
                raise ValueError(f"duplicate edge id: {edge.id!r}")
            seen.add(edge.id)

    def node_by_id(self, node_id: str) -> Node | None:
        for node in self.nodes:
            if node.id == node_id:
                return node
        return None


@dataclass(frozen=True, slots=True)
class Finding:
    code: str
    element: str | None
    message: str


@dataclass(frozen=True, slots=True)
class ValidationReport:
    errors: tuple[Finding, ...] = ()
    warnings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_dict(self) -> dict:
        def group(findings):
            return [{"code": f.code, "element": f.element, "message": f.message} for f in findings]

        return {"errors": group(self.errors), "warnings": group(self.warnings)}


def validate_diagram(diagram: Diagram) -> ValidationReport:
    """Check structural legality; returns a report instead of raising.

    Errors: EMPTY_DIAGRAM, BAD_NAME, DANGLING_EDGE, and ILLEGAL_CONFIGURATION
    for any edge whose (source kind, edge kind, target kind) triple is not one
    of the six legal configurations. Warnings: DUPLICATE_ENTITY for nodes that
    share kind and label (they denote a single entity).
    """
    errors: list[Finding] = []
    warnings: list[Finding] = []

    if not diagram.nodes:
        errors.append(Finding(EMPTY_DIAGRAM, None, "diagram must contain at least one node"))

    by_identity: dict[tuple[NodeKind, str], list[Node]] = defaultdict(list)
    for node in diagram.nodes:
        by_identity[(node.kind, node.label)].append(node)
        if node.kind in (NodeKind.CLASS, NodeKind.INDIVIDUAL):
            if not is_identifier(node.label):
                errors.append(
                    Finding(BAD_NAME, node.id, f"label {node.label!r} is not a valid identifier")
                )
        elif node.kind is NodeKind.DATATYPE:
            if not is_datatype_name(node.label):
                errors.append(
                    Finding(BAD_NAME, node.id, f"label {node.label!r} is not a supported datatype")
                )
        else:  # literal
            if not node.label:
                errors.append(
                    Finding(BAD_NAME, node.id, "literal node requires a non-empty lexical form")
                )
            if not is_datatype_name(node.literal_datatype or ""):
                errors.append(
                    Finding(
                        BAD_NAME,
                        node.id,
                        f"literal datatype {node.literal_datatype!r} is not a supported datatype",
                    )
                )

    for node in diagram.nodes:
        if len(by_identity[(node.kind, node.label)]) > 1:
            warnings.append(
                Finding(
                    DUPLICATE_ENTITY,
                    node.id,
                    f"another {node.kind.value} node labeled {node.label!r} denotes the same entity",
                )
            )

    nodes_by_id = {node.id: node for node in diagram.nodes}
    for edge in diagram.edges:
        source = nodes_by_id.get(edge.source)
        target = nodes_by_id.get(edge.target)
        dangling = False
        for end, label in ((edge.source, "source"), (edge.target, "target")):
            if end not in nodes_by_id:
                errors.append(Finding(DANGLING_EDGE, edge.id, f"{label} node {end!r} does not exist"))
                dangling = True
        if not dangling and (source.kind, edge.kind, target.kind) not in LEGAL_CONFIGURATIONS:
            errors.append(
                Finding(
                    ILLEGAL_CONFIGURATION,
                    edge.id,
                    f"{edge.kind.value} edge cannot connect a {source.kind.value} node "
                    f"to a {target.kind.value} node",
                )
            )
        if edge.property_label is not None and not is_identifier(edge.property_label):
            errors.append(
                Finding(
                    BAD_NAME,
                    edge.id,
                    f"property label {edge.property_label!r} is not a valid identifier",
                )
            )

    return ValidationReport(tuple(errors), tuple(warnings))


def subclass_reachable(diagram: Diagram, from_label: str, to_label: str) -> bool:
    """True iff the labels are equal or a directed subclass-edge path connects them.

    Nodes sharing a label denote one class, so the walk runs over labels, and
    only subclass edges between class nodes are followed.
    """
    class_labels = {node.label for node in diagram.nodes if node.kind is NodeKind.CLASS}
    for label in (from_label, to_label):
        if label not in class_labels:
            raise UnknownClassError(f"{label!r} is not a class label in the diagram")
    if from_label == to_label:
        return True

    adjacency = subclass_adjacency(diagram)
    queue = deque([from_label])
    visited = {from_label}
    while queue:
        current = queue.popleft()
        for successor in adjacency[current]:
            if successor == to_label:
                return True
            if successor not in visited:
                visited.add(successor)
                queue.append(successor)
    return False


def subclass_adjacency(diagram: Diagram) -> dict[str, set[str]]:
    """Label-level successor map of the subclass edges between class nodes."""
    nodes_by_id = {node.id: node for node in diagram.nodes}
    adjacency: dict[str, set[str]] = defaultdict(set)
    for edge in diagram.edges:
        if edge.kind is not EdgeKind.SUBCLASS_OF:
            continue
        source = nodes_by_id.get(edge.source)
        target = nodes_by_id.get(edge.target)
        if source and target and source.kind is NodeKind.CLASS and target.kind is NodeKind.CLASS:
            adjacency[source.label].add(target.label)
    return adjacency


@dataclass(frozen=True, slots=True)
class EntityInventory:
    """De-duplicated, lexicographically sorted entity names used by a diagram."""

    classes: tuple[str, ...] = ()
    object_properties: tuple[str, ...] = ()
    data_properties: tuple[str, ...] = ()
    individuals: tuple[str, ...] = ()
    datatypes: tuple[str, ...] = ()


def entities_of(diagram: Diagram) -> EntityInventory:
    classes: set[str] = set()
    individuals: set[str] = set()
    datatypes: set[str] = set()
    object_properties: set[str] = set()
    data_properties: set[str] = set()
    for node in diagram.nodes:
        if node.kind is NodeKind.CLASS:
            classes.add(node.label)
        elif node.kind is NodeKind.INDIVIDUAL:
            individuals.add(node.label)
        elif node.kind is NodeKind.DATATYPE:
            datatypes.add(node.label)
        else:
            datatypes.add(node.literal_datatype or "")
    for edge in diagram.edges:
        if edge.kind is EdgeKind.OBJECT_PROPERTY:
            object_properties.add(edge.property_label or "")
        elif edge.kind is EdgeKind.DATA_PROPERTY:
            data_properties.add(edge.property_label or "")
    return EntityInventory(
        classes=tuple(sorted(classes)),
        object_properties=tuple(sorted(object_properties)),
        data_properties=tuple(sorted(data_properties)),
        individuals=tuple(sorted(individuals)),
        datatypes=tuple(sorted(datatypes)),
    )


# --- canonical JSON format -------------------------------------------------

_NODE_KINDS = {kind.value: kind for kind in NodeKind}
_EDGE_KINDS = {kind.value: kind for kind in EdgeKind}
_NODE_FIELDS = {"id", "kind", "label", "literalDatatype", "x", "y"}
_EDGE_FIELDS = {"id", "kind", "property", "source", "target"}


def _require_string(obj: dict, field_name: str, context: str) -> str:
    if field_name not in obj:
        raise DiagramFormatError(f"{context}: missing field {field_name!r}")
    value = obj[field_name]
    if not isinstance(value, str) or (field_name != "label" and not value):
        raise DiagramFormatError(f"{context}: field {field_name!r} must be a non-empty string")
    return value


def _node_from_dict(obj: object, index: int) -> Node:
    context = f"node #{index}"
    if not isinstance(obj, dict):
        raise DiagramFormatError(f"{context}: expected an object")
    unknown = set(obj) - _NODE_FIELDS
    if unknown:
        raise DiagramFormatError(f"{context}: unknown field {sorted(unknown)[0]!r}")
    node_id = _require_string(obj, "id", context)
    kind_value = _require_string(obj, "kind", context)
    kind = _NODE_KINDS.get(kind_value)
    if kind is None:
        raise DiagramFormatError(f"{context}: field 'kind': unknown node kind {kind_value!r}")
    label = _require_string(obj, "label", context)

    literal_datatype = None
    if kind is NodeKind.LITERAL:
        literal_datatype = _require_string(obj, "literalDatatype", context)
    elif "literalDatatype" in obj:
        raise DiagramFormatError(
            f"{context}: field 'literalDatatype' is only allowed on literal nodes"
        )

    position = None
    if ("x" in obj) != ("y" in obj):
        raise DiagramFormatError(f"{context}: fields 'x' and 'y' must be given together")
    if "x" in obj:
        x, y = obj["x"], obj["y"]
        for name, value in (("x", x), ("y", y)):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise DiagramFormatError(f"{context}: field {name!r} must be a number")
        position = (x, y)

    return Node(id=node_id, kind=kind, label=label, literal_datatype=literal_datatype, position=position)


def _edge_from_dict(obj: object, index: int) -> Edge:
    context = f"edge #{index}"
    if not isinstance(obj, dict):
        raise DiagramFormatError(f"{context}: expected an object")
    unknown = set(obj) - _EDGE_FIELDS
    if unknown:
        raise DiagramFormatError(f"{context}: unknown field {sorted(unknown)[0]!r}")
    edge_id = _require_string(obj, "id", context)
    kind_value = _require_string(obj, "kind", context)
    kind = _EDGE_KINDS.get(kind_value)
    if kind is None:
        raise DiagramFormatError(f"{context}: field 'kind': unknown edge kind {kind_value!r}")

    property_label = None
    if kind in (EdgeKind.OBJECT_PROPERTY, EdgeKind.DATA_PROPERTY):
        property_label = _require_string(obj, "property", context)
    elif "property" in obj:
        raise DiagramFormatError(f"{context}: field 'property' is not allowed on {kind_value} edges")

    source = _require_string(obj, "source", context)
    target = _require_string(obj, "target", context)
    return Edge(id=edge_id, kind=kind, source=source, target=target, property_label=property_label)


def diagram_from_dict(obj: object) -> Diagram:
    """Decode the canonical JSON object form; unknown fields are rejected."""
    if not isinstance(obj, dict):
        raise DiagramFormatError("diagram: expected a JSON object")
    unknown = set(obj) - {"nodes", "edges"}
    if unknown:
        raise DiagramFormatError(f"diagram: unknown field {sorted(unknown)[0]!r}")
    nodes_obj = obj.get("nodes", [])
    edges_obj = obj.get("edges", [])
    if not isinstance(nodes_obj, list):
        raise DiagramFormatError("diagram: field 'nodes' must be an array")
    if not isinstance(edges_obj, list):
        raise DiagramFormatError("diagram: field 'edges' must be an array")
    nodes = tuple(_node_from_dict(node, i) for i, node in enumerate(nodes_obj))
    edges = tuple(_edge_from_dict(edge, i) for i, edge in enumerate(edges_obj))
    try:
        return Diagram(nodes=nodes, edges=edges)
    except ValueError as exc:
        raise DiagramFormatError(f"diagram: {exc}") from exc


def diagram_to_dict(diagram: Diagram) -> dict:
    nodes = []
    for node in diagram.nodes:
        entry: dict = {"id": node.id, "kind": node.kind.value, "label": node.label}
        if node.literal_datatype is not None:
            entry["literalDatatype"] = node.literal_datatype
        if node.position is not None:
            entry["x"], entry["y"] = node.position
        nodes.append(entry)
    edges = []
    for edge in diagram.edges:
        entry = {"id": edge.id, "kind": edge.kind.value}
        if edge.property_label is not None:
            entry["property"] = edge.property_label
        entry["source"] = edge.source
        entry["target"] = edge.target
        edges.append(entry)
    return {"nodes": nodes, "edges": edges}


def parse_diagram_json(text: str | bytes) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramFormatError(f"diagram: not valid JSON: {exc}") from exc
    return diagram_from_dict(obj)


def serialize_diagram_json(diagram: Diagram) -> str:
    return json.dumps(diagram_to_dict(diagram), indent=2, ensure_ascii=False) + "\n"

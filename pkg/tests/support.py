"""Shared test helpers: an independent brute-force candidate enumerator and a
seeded random-diagram generator.

The enumerator re-derives the per-edge schema table with literal AST
constructions and computes subclass reachability by Floyd-Warshall closure, so
it shares no code path with the generator under test.
"""

from __future__ import annotations

import random
from itertools import combinations

from owlax.axioms import (
    Axiom,
    ClassAssertion,
    DataAllValuesFrom,
    DataMaxCardinality,
    DataOneOf,
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
from owlax.diagram import Diagram, Edge, EdgeKind, Node, NodeKind


def transitive_closure(diagram: Diagram) -> dict[str, set[str]]:
    """Reflexive-transitive closure of the subclass edges, over class labels."""
    labels = sorted({n.label for n in diagram.nodes if n.kind is NodeKind.CLASS})
    nodes = {n.id: n for n in diagram.nodes}
    reach = {label: {label} for label in labels}
    for edge in diagram.edges:
        if edge.kind is EdgeKind.SUBCLASS_OF:
            src, tgt = nodes.get(edge.source), nodes.get(edge.target)
            if src and tgt and src.kind is NodeKind.CLASS and tgt.kind is NodeKind.CLASS:
                reach[src.label].add(tgt.label)
    for middle in labels:
        for start in labels:
            if middle in reach[start]:
                reach[start] |= reach[middle]
    return reach


def oracle_axiom_set(diagram: Diagram) -> set[Axiom]:
    """Every axiom the schema table licenses, as a set (no ids, no order)."""
    nodes = {n.id: n for n in diagram.nodes}
    axioms: set[Axiom] = set()

    for edge in diagram.edges:
        src, tgt = nodes[edge.source], nodes[edge.target]
        if edge.kind is EdgeKind.OBJECT_PROPERTY:
            prop = object_property(edge.property_label)
            inv = ObjectInverseOf(prop)
            subject = NamedClass(class_entity(src.label))
            if tgt.kind is NodeKind.CLASS:
                filler = NamedClass(class_entity(tgt.label))
                axioms |= {
                    SubClassOf(ObjectSomeValuesFrom(prop, THING), subject),
                    SubClassOf(ObjectSomeValuesFrom(prop, filler), subject),
                    SubClassOf(THING, ObjectAllValuesFrom(prop, filler)),
                    SubClassOf(subject, ObjectAllValuesFrom(prop, filler)),
                    SubClassOf(subject, ObjectSomeValuesFrom(prop, filler)),
                    SubClassOf(filler, ObjectSomeValuesFrom(inv, subject)),
                    SubClassOf(subject, ObjectMaxCardinality(1, prop, THING)),
                    SubClassOf(subject, ObjectMaxCardinality(1, prop, filler)),
                    SubClassOf(filler, ObjectMaxCardinality(1, inv, THING)),
                    SubClassOf(filler, ObjectMaxCardinality(1, inv, subject)),
                }
            else:  # individual target: nominal filler, no inverse schemas
                filler = ObjectOneOf(named_individual(tgt.label))
                axioms |= {
                    SubClassOf(ObjectSomeValuesFrom(prop, THING), subject),
                    SubClassOf(ObjectSomeValuesFrom(prop, filler), subject),
                    SubClassOf(THING, ObjectAllValuesFrom(prop, filler)),
                    SubClassOf(subject, ObjectAllValuesFrom(prop, filler)),
                    SubClassOf(subject, ObjectSomeValuesFrom(prop, filler)),
                    SubClassOf(subject, ObjectMaxCardinality(1, prop, THING)),
                    SubClassOf(subject, ObjectMaxCardinality(1, prop, filler)),
                }
        elif edge.kind is EdgeKind.DATA_PROPERTY:
            prop = data_property(edge.property_label)
            subject = NamedClass(class_entity(src.label))
            if tgt.kind is NodeKind.DATATYPE:
                rng = NamedDatatype(datatype(tgt.label))
            else:
                rng = DataOneOf(Literal(tgt.label, datatype(tgt.literal_datatype)))
            axioms |= {
                SubClassOf(DataSomeValuesFrom(prop, TOP_DATATYPE), subject),
                SubClassOf(DataSomeValuesFrom(prop, rng), subject),
                SubClassOf(THING, DataAllValuesFrom(prop, rng)),
                SubClassOf(subject, DataAllValuesFrom(prop, rng)),
                SubClassOf(subject, DataSomeValuesFrom(prop, rng)),
                SubClassOf(subject, DataMaxCardinality(1, prop, TOP_DATATYPE)),
                SubClassOf(subject, DataMaxCardinality(1, prop, rng)),
            }
        elif edge.kind is EdgeKind.TYPE:
            axioms.add(
                ClassAssertion(NamedClass(class_entity(tgt.label)), named_individual(src.label))
            )
        else:
            axioms.add(
                SubClassOf(NamedClass(class_entity(src.label)), NamedClass(class_entity(tgt.label)))
            )

    reach = transitive_closure(diagram)
    for left, right in combinations(sorted(reach), 2):
        if right in reach[left] or left in reach[right]:
            continue
        axioms.add(DisjointClasses(NamedClass(class_entity(left)), NamedClass(class_entity(right))))
    return axioms


CLASS_POOL = ["Alpha", "Beta", "Gamma", "Delta", "Epsilon", "Zeta", "Eta", "Theta"]
OBJECT_PROPERTY_POOL = ["relates", "holds", "uses", "knows"]
DATA_PROPERTY_POOL = ["hasName", "hasCode", "hasRank"]
INDIVIDUAL_POOL = ["ada", "bob", "cleo", "dana"]
DATATYPE_POOL = ["string", "integer", "boolean", "dateTime"]
LEXICAL_POOL = ["red", "42", "true", "x y z"]


def random_valid_diagram(
    rng: random.Random, max_nodes: int = 8, max_edges: int = 12, max_classes: int | None = None
) -> Diagram:
    """A structurally valid diagram with only legal configurations.

    Duplicate (kind, label) nodes are allowed on purpose: they are legal and
    exercise the label-merging rules.
    """
    node_count = rng.randint(1, max_nodes)
    nodes: list[Node] = []
    class_pool = CLASS_POOL[:max_classes] if max_classes else CLASS_POOL
    for index in range(node_count):
        kind = rng.choice(
            [NodeKind.CLASS, NodeKind.CLASS, NodeKind.CLASS, NodeKind.DATATYPE,
             NodeKind.INDIVIDUAL, NodeKind.LITERAL]
        )
        if kind is NodeKind.CLASS:
            node = Node(f"n{index}", kind, rng.choice(class_pool))
        elif kind is NodeKind.DATATYPE:
            node = Node(f"n{index}", kind, rng.choice(DATATYPE_POOL))
        elif kind is NodeKind.INDIVIDUAL:
            node = Node(f"n{index}", kind, rng.choice(INDIVIDUAL_POOL))
        else:
            node = Node(
                f"n{index}", kind, rng.choice(LEXICAL_POOL),
                literal_datatype=rng.choice(DATATYPE_POOL),
            )
        nodes.append(node)

    by_kind: dict[NodeKind, list[Node]] = {kind: [] for kind in NodeKind}
    for node in nodes:
        by_kind[node.kind].append(node)

    templates = [
        (NodeKind.CLASS, EdgeKind.OBJECT_PROPERTY, NodeKind.CLASS),
        (NodeKind.CLASS, EdgeKind.OBJECT_PROPERTY, NodeKind.INDIVIDUAL),
        (NodeKind.CLASS, EdgeKind.DATA_PROPERTY, NodeKind.DATATYPE),
        (NodeKind.CLASS, EdgeKind.DATA_PROPERTY, NodeKind.LITERAL),
        (NodeKind.INDIVIDUAL, EdgeKind.TYPE, NodeKind.CLASS),
        (NodeKind.CLASS, EdgeKind.SUBCLASS_OF, NodeKind.CLASS),
    ]
    edges: list[Edge] = []
    for index in range(rng.randint(0, max_edges)):
        src_kind, edge_kind, tgt_kind = rng.choice(templates)
        if not by_kind[src_kind] or not by_kind[tgt_kind]:
            continue
        source = rng.choice(by_kind[src_kind])
        target = rng.choice(by_kind[tgt_kind])
        if edge_kind is EdgeKind.OBJECT_PROPERTY:
            label = rng.choice(OBJECT_PROPERTY_POOL)
        elif edge_kind is EdgeKind.DATA_PROPERTY:
            label = rng.choice(DATA_PROPERTY_POOL)
        else:
            label = None
        edges.append(Edge(f"e{index}", edge_kind, source.id, target.id, property_label=label))
    return Diagram(nodes=tuple(nodes), edges=tuple(edges))


def person_address_diagram() -> Diagram:
    return Diagram(
        nodes=(
            Node("n1", NodeKind.CLASS, "Person"),
            Node("n2", NodeKind.CLASS, "Address"),
        ),
        edges=(Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n2", property_label="hasAddress"),),
    )

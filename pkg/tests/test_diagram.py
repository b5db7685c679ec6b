"""Diagram model: validation codes, reachability, inventories, JSON format."""

import random

import pytest

from owlax.diagram import (
    BAD_NAME,
    DANGLING_EDGE,
    DUPLICATE_ENTITY,
    EMPTY_DIAGRAM,
    ILLEGAL_CONFIGURATION,
    Diagram,
    Edge,
    EdgeKind,
    Node,
    NodeKind,
    diagram_from_dict,
    diagram_to_dict,
    entities_of,
    parse_diagram_json,
    serialize_diagram_json,
    subclass_reachable,
    validate_diagram,
)
from owlax.errors import DiagramFormatError, UnknownClassError

from support import transitive_closure


def cls(node_id, label):
    return Node(node_id, NodeKind.CLASS, label)


def subclass_edge(edge_id, source, target):
    return Edge(edge_id, EdgeKind.SUBCLASS_OF, source, target)


class TestValidation:
    def test_empty_diagram(self):
        report = validate_diagram(Diagram(nodes=()))
        assert [f.code for f in report.errors] == [EMPTY_DIAGRAM]
        assert report.errors[0].message == "diagram must contain at least one node"

    def test_single_class_node_is_legal(self):
        report = validate_diagram(Diagram(nodes=(cls("n1", "Person"),)))
        assert report.errors == ()
        assert report.warnings == ()

    def test_individual_source_of_object_property_is_illegal(self):
        diagram = Diagram(
            nodes=(Node("n1", NodeKind.INDIVIDUAL, "mary"), cls("n2", "Person")),
            edges=(Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n2", property_label="knows"),),
        )
        report = validate_diagram(diagram)
        assert [(f.code, f.element) for f in report.errors] == [(ILLEGAL_CONFIGURATION, "e1")]

    def test_bad_class_label(self):
        report = validate_diagram(Diagram(nodes=(cls("n1", "9lives"),)))
        assert [f.code for f in report.errors] == [BAD_NAME]

    def test_bad_datatype_label(self):
        report = validate_diagram(Diagram(nodes=(Node("n1", NodeKind.DATATYPE, "varchar"),)))
        assert [f.code for f in report.errors] == [BAD_NAME]

    def test_bracketed_iri_datatype_is_legal(self):
        node = Node("n1", NodeKind.DATATYPE, "<http://example.org/types#temp>")
        assert validate_diagram(Diagram(nodes=(node,))).ok

    def test_empty_literal_label(self):
        node = Node("n1", NodeKind.LITERAL, "", literal_datatype="string")
        report = validate_diagram(Diagram(nodes=(node,)))
        assert [f.code for f in report.errors] == [BAD_NAME]

    def test_bad_literal_datatype(self):
        node = Node("n1", NodeKind.LITERAL, "abc", literal_datatype="varchar")
        report = validate_diagram(Diagram(nodes=(node,)))
        assert [f.code for f in report.errors] == [BAD_NAME]

    def test_bad_property_label(self):
        diagram = Diagram(
            nodes=(cls("n1", "A"), cls("n2", "B")),
            edges=(Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n2", property_label="has space"),),
        )
        report = validate_diagram(diagram)
        assert [(f.code, f.element) for f in report.errors] == [(BAD_NAME, "e1")]

    def test_dangling_edge(self):
        diagram = Diagram(
            nodes=(cls("n1", "A"),),
            edges=(Edge("e1", EdgeKind.SUBCLASS_OF, "n1", "ghost"),),
        )
        report = validate_diagram(diagram)
        assert [(f.code, f.element) for f in report.errors] == [(DANGLING_EDGE, "e1")]

    def test_duplicate_entity_warning(self):
        report = validate_diagram(Diagram(nodes=(cls("n1", "Person"), cls("n2", "Person"))))
        assert report.errors == ()
        assert sorted(f.element for f in report.warnings) == ["n1", "n2"]
        assert {f.code for f in report.warnings} == {DUPLICATE_ENTITY}

    def test_same_label_different_kind_is_not_duplicate(self):
        nodes = (cls("n1", "Person"), Node("n2", NodeKind.INDIVIDUAL, "Person"))
        assert validate_diagram(Diagram(nodes=nodes)).warnings == ()

    def test_self_loop_is_legal(self):
        diagram = Diagram(
            nodes=(cls("n1", "A"),),
            edges=(Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n1", property_label="relates"),),
        )
        assert validate_diagram(diagram).ok

    def test_order_insensitive(self):
        rng = random.Random(7)
        nodes = [
            cls("n1", "A"),
            cls("n2", "A"),
            Node("n3", NodeKind.DATATYPE, "varchar"),
            Node("n4", NodeKind.INDIVIDUAL, "mary"),
        ]
        edges = [
            Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n4", property_label="knows"),
            Edge("e2", EdgeKind.SUBCLASS_OF, "n1", "ghost"),
            Edge("e3", EdgeKind.TYPE, "n4", "n2"),
        ]
        baseline = validate_diagram(Diagram(nodes=tuple(nodes), edges=tuple(edges)))
        expected_errors = sorted((f.code, f.element, f.message) for f in baseline.errors)
        expected_warnings = sorted((f.code, f.element, f.message) for f in baseline.warnings)
        for _ in range(10):
            rng.shuffle(nodes)
            rng.shuffle(edges)
            report = validate_diagram(Diagram(nodes=tuple(nodes), edges=tuple(edges)))
            assert sorted((f.code, f.element, f.message) for f in report.errors) == expected_errors
            assert sorted((f.code, f.element, f.message) for f in report.warnings) == expected_warnings


class TestConstruction:
    def test_duplicate_node_id_rejected(self):
        with pytest.raises(ValueError, match="duplicate node id"):
            Diagram(nodes=(cls("n1", "A"), cls("n1", "B")))

    def test_duplicate_edge_id_rejected(self):
        with pytest.raises(ValueError, match="duplicate edge id"):
            Diagram(
                nodes=(cls("n1", "A"), cls("n2", "B")),
                edges=(subclass_edge("e1", "n1", "n2"), subclass_edge("e1", "n2", "n1")),
            )

    def test_literal_requires_datatype(self):
        with pytest.raises(ValueError):
            Node("n1", NodeKind.LITERAL, "abc")

    def test_non_literal_must_not_carry_datatype(self):
        with pytest.raises(ValueError):
            Node("n1", NodeKind.CLASS, "A", literal_datatype="string")

    def test_type_edge_must_not_carry_property(self):
        with pytest.raises(ValueError):
            Edge("e1", EdgeKind.TYPE, "n1", "n2", property_label="p")

    def test_property_edge_requires_label(self):
        with pytest.raises(ValueError):
            Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n2")


def chain_diagram():
    return Diagram(
        nodes=(cls("n1", "A"), cls("n2", "B"), cls("n3", "C")),
        edges=(subclass_edge("e1", "n1", "n2"), subclass_edge("e2", "n2", "n3")),
    )


class TestReachability:
    def test_transitive_chain(self):
        diagram = chain_diagram()
        # Oracle: reflexive-transitive closure of the subclass edge relation.
        closure = transitive_closure(diagram)
        assert "C" in closure["A"]
        assert subclass_reachable(diagram, "A", "C") is True
        assert subclass_reachable(diagram, "C", "A") is False

    def test_reflexive(self):
        diagram = Diagram(nodes=(cls("n1", "A"),))
        assert subclass_reachable(diagram, "A", "A") is True

    def test_siblings_not_reachable(self):
        diagram = Diagram(
            nodes=(cls("n1", "A"), cls("n2", "B"), cls("n3", "C")),
            edges=(subclass_edge("e1", "n2", "n1"), subclass_edge("e2", "n3", "n1")),
        )
        closure = transitive_closure(diagram)
        assert "C" not in closure["B"] and "B" not in closure["C"]
        assert subclass_reachable(diagram, "B", "C") is False
        assert subclass_reachable(diagram, "C", "B") is False

    def test_unknown_class(self):
        diagram = Diagram(nodes=(cls("n1", "A"),))
        with pytest.raises(UnknownClassError):
            subclass_reachable(diagram, "A", "Nope")

    def test_duplicate_label_nodes_merge(self):
        # Two "B" boxes: the path A -> B, B -> C exists only after merging.
        diagram = Diagram(
            nodes=(cls("n1", "A"), cls("n2", "B"), cls("n3", "B"), cls("n4", "C")),
            edges=(subclass_edge("e1", "n1", "n2"), subclass_edge("e2", "n3", "n4")),
        )
        assert subclass_reachable(diagram, "A", "C") is True

    def test_property_edges_are_ignored(self):
        rng = random.Random(13)
        base = chain_diagram()
        queries = [("A", "C"), ("C", "A"), ("B", "B"), ("A", "B"), ("B", "A")]
        expected = [subclass_reachable(base, x, y) for x, y in queries]
        nodes = list(base.nodes)
        edges = list(base.edges)
        for index in range(8):
            source, target = rng.choice(nodes), rng.choice(nodes)
            edges.append(
                Edge(f"p{index}", EdgeKind.OBJECT_PROPERTY, source.id, target.id, property_label="p")
            )
            noisy = Diagram(nodes=tuple(nodes), edges=tuple(edges))
            assert [subclass_reachable(noisy, x, y) for x, y in queries] == expected


class TestEntities:
    def test_direct_readout(self):
        diagram = Diagram(
            nodes=(cls("n1", "Person"), cls("n2", "Address")),
            edges=(Edge("e1", EdgeKind.OBJECT_PROPERTY, "n1", "n2", property_label="hasAddress"),),
        )
        inventory = entities_of(diagram)
        assert inventory.classes == ("Address", "Person")
        assert inventory.object_properties == ("hasAddress",)
        assert inventory.data_properties == ()

    def test_duplicate_nodes_merge(self):
        inventory = entities_of(Diagram(nodes=(cls("n1", "Person"), cls("n2", "Person"))))
        assert inventory.classes == ("Person",)

    def test_type_edge_readout(self):
        diagram = Diagram(
            nodes=(Node("n1", NodeKind.INDIVIDUAL, "mary"), cls("n2", "Person")),
            edges=(Edge("e1", EdgeKind.TYPE, "n1", "n2"),),
        )
        inventory = entities_of(diagram)
        assert inventory.classes == ("Person",)
        assert inventory.individuals == ("mary",)

    def test_literal_contributes_its_datatype(self):
        diagram = Diagram(
            nodes=(
                cls("n1", "Person"),
                Node("n2", NodeKind.LITERAL, "42", literal_datatype="integer"),
            ),
            edges=(Edge("e1", EdgeKind.DATA_PROPERTY, "n1", "n2", property_label="hasAge"),),
        )
        inventory = entities_of(diagram)
        assert inventory.datatypes == ("integer",)
        assert inventory.data_properties == ("hasAge",)


PERSON_ADDRESS_JSON = """
{
  "nodes": [
    {"id": "n1", "kind": "class", "label": "Person", "x": 80, "y": 120},
    {"id": "n2", "kind": "class", "label": "Address"}
  ],
  "edges": [
    {"id": "e1", "kind": "objectProperty", "property": "hasAddress", "source": "n1", "target": "n2"}
  ]
}
"""


class TestJsonFormat:
    def test_parse_and_roundtrip(self):
        diagram = parse_diagram_json(PERSON_ADDRESS_JSON)
        assert diagram.nodes[0].position == (80, 120)
        assert diagram.edges[0].property_label == "hasAddress"
        again = parse_diagram_json(serialize_diagram_json(diagram))
        assert again == diagram

    def test_unknown_node_kind_names_the_field(self):
        with pytest.raises(DiagramFormatError, match="'kind'.*enum"):
            diagram_from_dict({"nodes": [{"id": "n1", "kind": "enum", "label": "X"}], "edges": []})

    def test_unknown_field_rejected(self):
        with pytest.raises(DiagramFormatError, match="unknown field 'color'"):
            diagram_from_dict(
                {"nodes": [{"id": "n1", "kind": "class", "label": "X", "color": "red"}], "edges": []}
            )

    def test_top_level_unknown_field_rejected(self):
        with pytest.raises(DiagramFormatError, match="unknown field"):
            diagram_from_dict({"nodes": [], "edges": [], "zoom": 2})

    def test_literal_datatype_only_on_literals(self):
        with pytest.raises(DiagramFormatError, match="literalDatatype"):
            diagram_from_dict(
                {"nodes": [{"id": "n1", "kind": "class", "label": "X", "literalDatatype": "string"}],
                 "edges": []}
            )

    def test_property_forbidden_on_type_edges(self):
        with pytest.raises(DiagramFormatError, match="'property'"):
            diagram_from_dict(
                {
                    "nodes": [
                        {"id": "n1", "kind": "individual", "label": "m"},
                        {"id": "n2", "kind": "class", "label": "P"},
                    ],
                    "edges": [
                        {"id": "e1", "kind": "type", "property": "p", "source": "n1", "target": "n2"}
                    ],
                }
            )

    def test_position_must_be_paired(self):
        with pytest.raises(DiagramFormatError, match="'x' and 'y'"):
            diagram_from_dict({"nodes": [{"id": "n1", "kind": "class", "label": "X", "x": 3}],
                               "edges": []})

    def test_not_json(self):
        with pytest.raises(DiagramFormatError, match="not valid JSON"):
            parse_diagram_json("{nodes:")

    def test_nodes_must_be_array(self):
        with pytest.raises(DiagramFormatError, match="'nodes'"):
            diagram_from_dict({"nodes": 5})

    def test_duplicate_ids_rejected(self):
        with pytest.raises(DiagramFormatError, match="duplicate node id"):
            diagram_from_dict(
                {
                    "nodes": [
                        {"id": "n1", "kind": "class", "label": "A"},
                        {"id": "n1", "kind": "class", "label": "B"},
                    ],
                    "edges": [],
                }
            )

    def test_to_dict_omits_absent_optionals(self):
        diagram = parse_diagram_json(PERSON_ADDRESS_JSON)
        obj = diagram_to_dict(diagram)
        assert "literalDatatype" not in obj["nodes"][0]
        assert "x" not in obj["nodes"][1]
        assert "property" in obj["edges"][0]

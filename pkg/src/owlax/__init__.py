"""Turn informal class diagrams into reviewed OWL axioms.

The pipeline: validate a diagram against the six legal node-edge-node
configurations, generate candidate axioms for every relationship, let a human
accept or reject each candidate, and integrate the accepted ones into an
ontology with deterministic serialization.
"""

from .axioms import (
    Axiom,
    ClassAssertion,
    ClassExpression,
    DataAllValuesFrom,
    DataMaxCardinality,
    DataOneOf,
    DataRange,
    DataSomeValuesFrom,
    DisjointClasses,
    Entity,
    EntityKind,
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
    Thing,
    TopDatatype,
    structurally_equal,
)
from .diagram import (
    Diagram,
    Edge,
    EdgeKind,
    EntityInventory,
    Node,
    NodeKind,
    ValidationReport,
    entities_of,
    parse_diagram_json,
    serialize_diagram_json,
    subclass_reachable,
    validate_diagram,
)
from .errors import (
    DiagramFormatError,
    FunctionalParseError,
    InvalidDiagramError,
    OwlaxError,
    ReviewFormatError,
    UnknownCandidateIdError,
    UnknownClassError,
    UnsupportedConstructError,
)
from .functional import (
    Ontology,
    PrefixEnvironment,
    canonical_compare,
    entity_to_iri,
    parse_functional,
    render_functional,
)
from .generate import CandidateAxiom, CandidateStatus, SchemaCode, candidate_count, generate
from .manchester import render_manchester
from .session import (
    ReviewEntry,
    ReviewList,
    SessionState,
    apply_selection,
    integrate,
    merge_existing,
    parse_review_json,
    serialize_review_json,
)

__version__ = "0.1.0"

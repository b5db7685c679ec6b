"""AST for the OWL fragment the candidate generator emits.

Values are immutable; equality and hashing are structural, so axioms can be
deduplicated with plain sets. The fragment covers general class inclusions,
class disjointness, and class assertions over restrictions whose fillers are
named classes, nominals, datatypes, or the top class/data range.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")
BRACKETED_IRI_RE = re.compile(r"<[A-Za-z][A-Za-z0-9+.\-]*:[^<>\"{}|^`\\\s]*>")

# Datatype names accepted without an explicit IRI; all live in the xsd: namespace.
XSD_DATATYPE_NAMES = frozenset(
    {"string", "integer", "decimal", "float", "double", "boolean", "dateTime", "date", "anyURI"}
)


def is_identifier(name: str) -> bool:
    return IDENTIFIER_RE.fullmatch(name) is not None


def is_bracketed_iri(name: str) -> bool:
    return BRACKETED_IRI_RE.fullmatch(name) is not None


def is_datatype_name(name: str) -> bool:
    """True for a supported short datatype name or an absolute IRI in angle brackets."""
    return name in XSD_DATATYPE_NAMES or is_bracketed_iri(name)


class EntityKind(Enum):
    CLASS = "class"
    OBJECT_PROPERTY = "objectProperty"
    DATA_PROPERTY = "dataProperty"
    NAMED_INDIVIDUAL = "namedIndividual"
    DATATYPE = "datatype"


@dataclass(frozen=True, slots=True)
class Entity:
    """A named logical entity; the IRI is the base IRI plus the local name."""

    kind: EntityKind
    name: str

    def __post_init__(self):
        if self.kind is EntityKind.DATATYPE:
            if not (is_identifier(self.name) or is_bracketed_iri(self.name)):
                raise ValueError(f"invalid datatype name: {self.name!r}")
        elif not is_identifier(self.name):
            raise ValueError(f"invalid entity name: {self.name!r}")


def class_entity(name: str) -> Entity:
    return Entity(EntityKind.CLASS, name)


def object_property(name: str) -> Entity:
    return Entity(EntityKind.OBJECT_PROPERTY, name)


def data_property(name: str) -> Entity:
    return Entity(EntityKind.DATA_PROPERTY, name)


def named_individual(name: str) -> Entity:
    return Entity(EntityKind.NAMED_INDIVIDUAL, name)


def datatype(name: str) -> Entity:
    return Entity(EntityKind.DATATYPE, name)


class ClassExpression:
    """Marker base for class expressions."""

    __slots__ = ()


class DataRange:
    """Marker base for data ranges."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class NamedClass(ClassExpression):
    entity: Entity

    def __post_init__(self):
        if self.entity.kind is not EntityKind.CLASS:
            raise ValueError(f"expected a class entity, got {self.entity.kind.value}")


@dataclass(frozen=True, slots=True)
class Thing(ClassExpression):
    """The top class owl:Thing."""


@dataclass(frozen=True, slots=True)
class ObjectInverseOf:
    property: Entity

    def __post_init__(self):
        if self.property.kind is not EntityKind.OBJECT_PROPERTY:
            raise ValueError("inverse requires a named object property")


# Object property expressions are a named property or its inverse.
ObjectPropertyExpression = Entity | ObjectInverseOf


def _check_object_property(expr: ObjectPropertyExpression) -> None:
    if isinstance(expr, Entity) and expr.kind is not EntityKind.OBJECT_PROPERTY:
        raise ValueError(f"expected an object property, got {expr.kind.value}")


def _check_data_property(expr: Entity) -> None:
    if expr.kind is not EntityKind.DATA_PROPERTY:
        raise ValueError(f"expected a data property, got {expr.kind.value}")


@dataclass(frozen=True, slots=True)
class ObjectSomeValuesFrom(ClassExpression):
    property: ObjectPropertyExpression
    filler: ClassExpression

    def __post_init__(self):
        _check_object_property(self.property)


@dataclass(frozen=True, slots=True)
class ObjectAllValuesFrom(ClassExpression):
    property: ObjectPropertyExpression
    filler: ClassExpression

    def __post_init__(self):
        _check_object_property(self.property)


@dataclass(frozen=True, slots=True)
class ObjectMaxCardinality(ClassExpression):
    cardinality: int
    property: ObjectPropertyExpression
    filler: ClassExpression

    def __post_init__(self):
        if self.cardinality < 0:
            raise ValueError("cardinality must be non-negative")
        _check_object_property(self.property)


@dataclass(frozen=True, slots=True)
class ObjectOneOf(ClassExpression):
    """A nominal: the class containing exactly one named individual."""

    individual: Entity

    def __post_init__(self):
        if self.individual.kind is not EntityKind.NAMED_INDIVIDUAL:
            raise ValueError("nominal requires a named individual")


@dataclass(frozen=True, slots=True)
class Literal:
    """A typed literal; an empty lexical form is legal."""

    lexical: str
    datatype: Entity

    def __post_init__(self):
        if self.datatype.kind is not EntityKind.DATATYPE:
            raise ValueError("literal requires a datatype entity")


@dataclass(frozen=True, slots=True)
class NamedDatatype(DataRange):
    entity: Entity

    def __post_init__(self):
        if self.entity.kind is not EntityKind.DATATYPE:
            raise ValueError(f"expected a datatype entity, got {self.entity.kind.value}")


@dataclass(frozen=True, slots=True)
class TopDatatype(DataRange):
    """The universal data range rdfs:Literal."""


@dataclass(frozen=True, slots=True)
class DataOneOf(DataRange):
    """A data nominal: the range containing exactly one literal."""

    literal: Literal


@dataclass(frozen=True, slots=True)
class DataSomeValuesFrom(ClassExpression):
    property: Entity
    range: DataRange

    def __post_init__(self):
        _check_data_property(self.property)


@dataclass(frozen=True, slots=True)
class DataAllValuesFrom(ClassExpression):
    property: Entity
    range: DataRange

    def __post_init__(self):
        _check_data_property(self.property)


@dataclass(frozen=True, slots=True)
class DataMaxCardinality(ClassExpression):
    cardinality: int
    property: Entity
    range: DataRange

    def __post_init__(self):
        if self.cardinality < 0:
            raise ValueError("cardinality must be non-negative")
        _check_data_property(self.property)


THING = Thing()
TOP_DATATYPE = TopDatatype()


class Axiom:
    """Marker base for axioms."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class SubClassOf(Axiom):
    sub: ClassExpression
    sup: ClassExpression


@dataclass(frozen=True, slots=True)
class DisjointClasses(Axiom):
    """An unordered pair of named classes, held in a canonical field order.

    Construction normalizes the pair so the later name (by code point order)
    comes first; renderers therefore always show e.g. ``Person DisjointWith
    Address``.
    """

    first: NamedClass
    second: NamedClass

    def __post_init__(self):
        if self.first.entity.name < self.second.entity.name:
            swapped_first, swapped_second = self.second, self.first
            object.__setattr__(self, "first", swapped_first)
            object.__setattr__(self, "second", swapped_second)


@dataclass(frozen=True, slots=True)
class ClassAssertion(Axiom):
    class_expression: NamedClass
    individual: Entity

    def __post_init__(self):
        if self.individual.kind is not EntityKind.NAMED_INDIVIDUAL:
            raise ValueError("class assertion requires a named individual")


_AXIOM_KIND_RANK = {SubClassOf: 0, DisjointClasses: 1, ClassAssertion: 2}


def axiom_kind_rank(axiom: Axiom) -> int:
    """Rank used as the primary key of the canonical axiom order."""
    return _AXIOM_KIND_RANK[type(axiom)]


def structurally_equal(left: Axiom, right: Axiom) -> bool:
    """Structural identity after pair canonicalization; no reasoning is applied."""
    return left == right


def axiom_entities(axiom: Axiom) -> frozenset[Entity]:
    """Every named entity mentioned anywhere in the axiom."""
    found: set[Entity] = set()

    def walk_property(expr: ObjectPropertyExpression) -> None:
        found.add(expr.property if isinstance(expr, ObjectInverseOf) else expr)

    def walk_range(dr: DataRange) -> None:
        if isinstance(dr, NamedDatatype):
            found.add(dr.entity)
        elif isinstance(dr, DataOneOf):
            found.add(dr.literal.datatype)

    def walk(ce: ClassExpression) -> None:
        if isinstance(ce, NamedClass):
            found.add(ce.entity)
        elif isinstance(ce, (ObjectSomeValuesFrom, ObjectAllValuesFrom)):
            walk_property(ce.property)
            walk(ce.filler)
        elif isinstance(ce, ObjectMaxCardinality):
            walk_property(ce.property)
            walk(ce.filler)
        elif isinstance(ce, ObjectOneOf):
            found.add(ce.individual)
        elif isinstance(ce, (DataSomeValuesFrom, DataAllValuesFrom)):
            found.add(ce.property)
            walk_range(ce.range)
        elif isinstance(ce, DataMaxCardinality):
            found.add(ce.property)
            walk_range(ce.range)

    if isinstance(axiom, SubClassOf):
        walk(axiom.sub)
        walk(axiom.sup)
    elif isinstance(axiom, DisjointClasses):
        walk(axiom.first)
        walk(axiom.second)
    elif isinstance(axiom, ClassAssertion):
        walk(axiom.class_expression)
        found.add(axiom.individual)
    return frozenset(found)

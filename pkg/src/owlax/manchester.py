"""Manchester-syntax rendering of axioms for human review.

Display only; there is no Manchester parser. The grammar is fixed and
parenthesis-free except for ``inverse (R)``, which keeps every rendered
candidate readable as a single line in a review dialog.
"""

from __future__ import annotations

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
    ObjectPropertyExpression,
    ObjectSomeValuesFrom,
    SubClassOf,
    Thing,
    TopDatatype,
    is_bracketed_iri,
)
from .errors import UnsupportedConstructError
from .functional import PrefixEnvironment


def _property_text(expr: ObjectPropertyExpression) -> str:
    if isinstance(expr, ObjectInverseOf):
        return f"inverse ({expr.property.name})"
    return expr.name


def _datatype_text(entity: Entity) -> str:
    return entity.name if is_bracketed_iri(entity.name) else f"xsd:{entity.name}"


def _literal_text(literal: Literal) -> str:
    escaped = literal.lexical.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"^^{_datatype_text(literal.datatype)}'


def _filler_text(filler: ClassExpression) -> str:
    # Fillers must stay atomic so the line needs no grouping parentheses.
    if isinstance(filler, NamedClass):
        return filler.entity.name
    if isinstance(filler, Thing):
        return "owl:Thing"
    if isinstance(filler, ObjectOneOf):
        return f"{{{filler.individual.name}}}"
    raise UnsupportedConstructError(f"nested {type(filler).__name__} filler")


def _range_text(data_range: DataRange) -> str:
    if isinstance(data_range, NamedDatatype):
        return _datatype_text(data_range.entity)
    if isinstance(data_range, TopDatatype):
        return "rdfs:Literal"
    if isinstance(data_range, DataOneOf):
        return f"{{{_literal_text(data_range.literal)}}}"
    raise UnsupportedConstructError(type(data_range).__name__)


def _expression_text(expression: ClassExpression) -> str:
    if isinstance(expression, NamedClass):
        return expression.entity.name
    if isinstance(expression, Thing):
        return "owl:Thing"
    if isinstance(expression, ObjectSomeValuesFrom):
        if isinstance(expression.filler, ObjectOneOf):
            return f"{_property_text(expression.property)} value {expression.filler.individual.name}"
        return f"{_property_text(expression.property)} some {_filler_text(expression.filler)}"
    if isinstance(expression, ObjectAllValuesFrom):
        return f"{_property_text(expression.property)} only {_filler_text(expression.filler)}"
    if isinstance(expression, ObjectMaxCardinality):
        return (
            f"{_property_text(expression.property)} max {expression.cardinality} "
            f"{_filler_text(expression.filler)}"
        )
    if isinstance(expression, ObjectOneOf):
        return f"{{{expression.individual.name}}}"
    if isinstance(expression, DataSomeValuesFrom):
        if isinstance(expression.range, DataOneOf):
            return f"{expression.property.name} value {_literal_text(expression.range.literal)}"
        return f"{expression.property.name} some {_range_text(expression.range)}"
    if isinstance(expression, DataAllValuesFrom):
        return f"{expression.property.name} only {_range_text(expression.range)}"
    if isinstance(expression, DataMaxCardinality):
        return (
            f"{expression.property.name} max {expression.cardinality} "
            f"{_range_text(expression.range)}"
        )
    raise UnsupportedConstructError(type(expression).__name__)


def render_manchester(axiom: Axiom, env: PrefixEnvironment | None = None) -> str:
    """Single-line Manchester form of an axiom.

    Raises :class:`UnsupportedConstructError` for expressions outside the
    fragment (e.g. a restriction nested inside another restriction).
    """
    del env  # names are rendered locally; reserved for prefix-aware display
    if isinstance(axiom, SubClassOf):
        return f"{_expression_text(axiom.sub)} SubClassOf {_expression_text(axiom.sup)}"
    if isinstance(axiom, DisjointClasses):
        return f"{axiom.first.entity.name} DisjointWith {axiom.second.entity.name}"
    if isinstance(axiom, ClassAssertion):
        return f"{axiom.individual.name} Type {axiom.class_expression.entity.name}"
    raise UnsupportedConstructError(type(axiom).__name__)

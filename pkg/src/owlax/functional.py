"""Functional-style ontology documents: canonical rendering and a strict parser.

The on-disk format is a small OWL 2 functional-syntax subset: prefix
declarations for owl/rdfs/xsd plus a default namespace, entity declarations,
and the axiom constructors the generator can emit. Rendering is
byte-deterministic; axioms are ordered by kind rank and then by their rendered
form, so two structurally equal ontologies always serialize identically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

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
    THING,
    TOP_DATATYPE,
    Thing,
    TopDatatype,
    axiom_entities,
    axiom_kind_rank,
    class_entity,
    data_property,
    datatype,
    is_bracketed_iri,
    named_individual,
    object_property,
)
from .errors import FunctionalParseError, UnsupportedConstructError

OWL_NS = "http://www.w3.org/2002/07/owl#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
DEFAULT_BASE_IRI = "http://example.org/onto#"

_STANDARD_PREFIXES = {"owl": OWL_NS, "rdfs": RDFS_NS, "xsd": XSD_NS}


@dataclass(frozen=True, slots=True)
class PrefixEnvironment:
    """Base IRI for default-namespace names plus the fixed owl/rdfs/xsd bindings."""

    base_iri: str = DEFAULT_BASE_IRI

    def __post_init__(self):
        if not self.base_iri.endswith(("#", "/")):
            raise ValueError(f"base IRI must end in '#' or '/': {self.base_iri!r}")


def entity_to_iri(entity: Entity | Thing | TopDatatype, env: PrefixEnvironment | None = None) -> str:
    """Full IRI of an entity (or of the top class / top data range)."""
    if isinstance(entity, Thing):
        return OWL_NS + "Thing"
    if isinstance(entity, TopDatatype):
        return RDFS_NS + "Literal"
    if entity.kind is EntityKind.DATATYPE:
        if is_bracketed_iri(entity.name):
            return entity.name[1:-1]
        return XSD_NS + entity.name
    env = env if env is not None else PrefixEnvironment()
    return env.base_iri + entity.name


# --- rendering ---------------------------------------------------------------


def _entity_ref(entity: Entity) -> str:
    if entity.kind is EntityKind.DATATYPE:
        return entity.name if is_bracketed_iri(entity.name) else f"xsd:{entity.name}"
    return f":{entity.name}"


def _literal_ref(literal: Literal) -> str:
    escaped = literal.lexical.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"^^{_entity_ref(literal.datatype)}'


def _property_ref(expr: ObjectPropertyExpression) -> str:
    if isinstance(expr, ObjectInverseOf):
        return f"ObjectInverseOf({_entity_ref(expr.property)})"
    return _entity_ref(expr)


def _data_range_ref(data_range: DataRange) -> str:
    if isinstance(data_range, NamedDatatype):
        return _entity_ref(data_range.entity)
    if isinstance(data_range, TopDatatype):
        return "rdfs:Literal"
    if isinstance(data_range, DataOneOf):
        return f"DataOneOf({_literal_ref(data_range.literal)})"
    raise UnsupportedConstructError(type(data_range).__name__)


def class_expression_functional(expression: ClassExpression) -> str:
    if isinstance(expression, NamedClass):
        return _entity_ref(expression.entity)
    if isinstance(expression, Thing):
        return "owl:Thing"
    if isinstance(expression, ObjectSomeValuesFrom):
        return (
            f"ObjectSomeValuesFrom({_property_ref(expression.property)} "
            f"{class_expression_functional(expression.filler)})"
        )
    if isinstance(expression, ObjectAllValuesFrom):
        return (
            f"ObjectAllValuesFrom({_property_ref(expression.property)} "
            f"{class_expression_functional(expression.filler)})"
        )
    if isinstance(expression, ObjectMaxCardinality):
        return (
            f"ObjectMaxCardinality({expression.cardinality} {_property_ref(expression.property)} "
            f"{class_expression_functional(expression.filler)})"
        )
    if isinstance(expression, ObjectOneOf):
        return f"ObjectOneOf({_entity_ref(expression.individual)})"
    if isinstance(expression, DataSomeValuesFrom):
        return (
            f"DataSomeValuesFrom({_entity_ref(expression.property)} "
            f"{_data_range_ref(expression.range)})"
        )
    if isinstance(expression, DataAllValuesFrom):
        return (
            f"DataAllValuesFrom({_entity_ref(expression.property)} "
            f"{_data_range_ref(expression.range)})"
        )
    if isinstance(expression, DataMaxCardinality):
        return (
            f"DataMaxCardinality({expression.cardinality} {_entity_ref(expression.property)} "
            f"{_data_range_ref(expression.range)})"
        )
    raise UnsupportedConstructError(type(expression).__name__)


def axiom_functional(axiom: Axiom) -> str:
    """One-line functional-syntax form of a single axiom."""
    if isinstance(axiom, SubClassOf):
        return (
            f"SubClassOf({class_expression_functional(axiom.sub)} "
            f"{class_expression_functional(axiom.sup)})"
        )
    if isinstance(axiom, DisjointClasses):
        return (
            f"DisjointClasses({_entity_ref(axiom.first.entity)} "
            f"{_entity_ref(axiom.second.entity)})"
        )
    if isinstance(axiom, ClassAssertion):
        return (
            f"ClassAssertion({_entity_ref(axiom.class_expression.entity)} "
            f"{_entity_ref(axiom.individual)})"
        )
    raise UnsupportedConstructError(type(axiom).__name__)


def axiom_sort_key(axiom: Axiom) -> tuple[int, str]:
    return (axiom_kind_rank(axiom), axiom_functional(axiom))


def canonical_compare(left: Axiom, right: Axiom) -> int:
    """Total order over axioms: -1, 0, or 1."""
    left_key, right_key = axiom_sort_key(left), axiom_sort_key(right)
    if left_key < right_key:
        return -1
    if left_key > right_key:
        return 1
    return 0


_DECLARATION_GROUPS = (
    (EntityKind.CLASS, "Class"),
    (EntityKind.OBJECT_PROPERTY, "ObjectProperty"),
    (EntityKind.DATA_PROPERTY, "DataProperty"),
    (EntityKind.NAMED_INDIVIDUAL, "NamedIndividual"),
)


@dataclass(frozen=True)
class Ontology:
    """A de-duplicated axiom set in canonical order plus its declared entities.

    Construction normalizes: axioms are deduplicated and sorted, and the
    declared set always contains every entity mentioned by an axiom. Datatypes
    are never part of the declared set (xsd datatypes are built in).
    """

    prefixes: PrefixEnvironment = PrefixEnvironment()
    axioms: tuple[Axiom, ...] = ()
    declared: frozenset[Entity] = field(default_factory=frozenset)

    def __post_init__(self):
        unique = sorted(set(self.axioms), key=axiom_sort_key)
        mentioned = {entity for axiom in unique for entity in axiom_entities(axiom)}
        declared = frozenset(
            entity
            for entity in set(self.declared) | mentioned
            if entity.kind is not EntityKind.DATATYPE
        )
        object.__setattr__(self, "axioms", tuple(unique))
        object.__setattr__(self, "declared", declared)

    def axiom_set(self) -> frozenset[Axiom]:
        return frozenset(self.axioms)

    def with_axioms(self, axioms) -> "Ontology":
        """New ontology with the given axiom collection; declarations are kept."""
        return Ontology(prefixes=self.prefixes, axioms=tuple(axioms), declared=self.declared)

    def declaring(self, entities) -> "Ontology":
        """New ontology with extra declared entities."""
        return Ontology(
            prefixes=self.prefixes, axioms=self.axioms, declared=self.declared | frozenset(entities)
        )


def render_functional(ontology: Ontology) -> str:
    """Byte-deterministic functional-syntax document (UTF-8, LF endings)."""
    lines = [
        f"Prefix(owl:=<{OWL_NS}>)",
        f"Prefix(rdfs:=<{RDFS_NS}>)",
        f"Prefix(xsd:=<{XSD_NS}>)",
        f"Prefix(:=<{ontology.prefixes.base_iri}>)",
        "Ontology(",
    ]
    for kind, constructor in _DECLARATION_GROUPS:
        names = sorted(entity.name for entity in ontology.declared if entity.kind is kind)
        lines.extend(f"Declaration({constructor}(:{name}))" for name in names)
    lines.extend(axiom_functional(axiom) for axiom in ontology.axioms)
    lines.append(")")
    return "\n".join(lines) + "\n"


# --- tokenizer ---------------------------------------------------------------

_PNAME_RE = re.compile(r"(?:[A-Za-z_][A-Za-z0-9_.\-]*)?:(?:[A-Za-z_][A-Za-z0-9_.\-]*)?")
_WORD_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")
_INT_RE = re.compile(r"[0-9]+")


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # lparen rparen equals iri pname word string int carets eof
    value: object
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, column = 1, 1
    pos, length = 0, len(text)

    def error(message: str) -> FunctionalParseError:
        return FunctionalParseError(message, line, column)

    while pos < length:
        char = text[pos]
        if char == "\n":
            line += 1
            column = 1
            pos += 1
            continue
        if char in " \t\r":
            pos += 1
            column += 1
            continue
        if char == "#":
            while pos < length and text[pos] != "\n":
                pos += 1
            continue
        if char == "(":
            tokens.append(_Token("lparen", "(", line, column))
            pos += 1
            column += 1
            continue
        if char == ")":
            tokens.append(_Token("rparen", ")", line, column))
            pos += 1
            column += 1
            continue
        if char == "=":
            tokens.append(_Token("equals", "=", line, column))
            pos += 1
            column += 1
            continue
        if char == "<":
            end = text.find(">", pos + 1)
            if end == -1 or "\n" in text[pos:end]:
                raise error("unterminated IRI")
            iri = text[pos + 1 : end]
            if not iri or any(c in iri for c in ' <"{}|^`\\'):
                raise error(f"invalid IRI: <{iri}>")
            tokens.append(_Token("iri", iri, line, column))
            column += end - pos + 1
            pos = end + 1
            continue
        if char == '"':
            start_line, start_column = line, column
            pos += 1
            column += 1
            chunks: list[str] = []
            while True:
                if pos >= length or text[pos] == "\n":
                    raise FunctionalParseError("unterminated string literal", start_line, start_column)
                current = text[pos]
                if current == "\\":
                    if pos + 1 >= length or text[pos + 1] not in ('"', "\\"):
                        raise error("invalid escape sequence (only \\\" and \\\\ are allowed)")
                    chunks.append(text[pos + 1])
                    pos += 2
                    column += 2
                    continue
                if current == '"':
                    pos += 1
                    column += 1
                    break
                chunks.append(current)
                pos += 1
                column += 1
            tokens.append(_Token("string", "".join(chunks), start_line, start_column))
            continue
        if char == "^":
            if text[pos : pos + 2] != "^^":
                raise error("expected '^^'")
            tokens.append(_Token("carets", "^^", line, column))
            pos += 2
            column += 2
            continue
        match = _PNAME_RE.match(text, pos)
        if match:
            prefix, _, local = match.group(0).partition(":")
            tokens.append(_Token("pname", (prefix, local), line, column))
            column += match.end() - pos
            pos = match.end()
            continue
        match = _WORD_RE.match(text, pos)
        if match:
            tokens.append(_Token("word", match.group(0), line, column))
            column += match.end() - pos
            pos = match.end()
            continue
        match = _INT_RE.match(text, pos)
        if match:
            tokens.append(_Token("int", int(match.group(0)), line, column))
            column += match.end() - pos
            pos = match.end()
            continue
        raise error(f"unexpected character {char!r}")
    tokens.append(_Token("eof", None, line, column))
    return tokens


# OWL 2 functional-syntax constructs we recognize but do not support; hitting
# one is reported as out-of-fragment rather than a syntax error.
_KNOWN_UNSUPPORTED = frozenset(
    {
        "EquivalentClasses", "DisjointUnion", "SubObjectPropertyOf", "EquivalentObjectProperties",
        "DisjointObjectProperties", "InverseObjectProperties", "ObjectPropertyDomain",
        "ObjectPropertyRange", "FunctionalObjectProperty", "InverseFunctionalObjectProperty",
        "ReflexiveObjectProperty", "IrreflexiveObjectProperty", "SymmetricObjectProperty",
        "AsymmetricObjectProperty", "TransitiveObjectProperty", "SubDataPropertyOf",
        "EquivalentDataProperties", "DisjointDataProperties", "DataPropertyDomain",
        "DataPropertyRange", "FunctionalDataProperty", "DatatypeDefinition", "HasKey",
        "SameIndividual", "DifferentIndividuals", "ObjectPropertyAssertion",
        "NegativeObjectPropertyAssertion", "DataPropertyAssertion",
        "NegativeDataPropertyAssertion", "AnnotationAssertion", "SubAnnotationPropertyOf",
        "AnnotationPropertyDomain", "AnnotationPropertyRange", "Annotation", "Import",
        "ObjectIntersectionOf", "ObjectUnionOf", "ObjectComplementOf", "ObjectHasValue",
        "ObjectHasSelf", "ObjectMinCardinality", "ObjectExactCardinality",
        "DataIntersectionOf", "DataUnionOf", "DataComplementOf", "DatatypeRestriction",
        "DataHasValue", "DataMinCardinality", "DataExactCardinality",
    }
)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def error(self, message: str, token: _Token | None = None) -> FunctionalParseError:
        token = token if token is not None else self.peek()
        return FunctionalParseError(message, token.line, token.column)

    def expect(self, kind: str, what: str) -> _Token:
        token = self.peek()
        if token.kind != kind:
            raise self.error(f"expected {what}")
        return self.advance()

    # -- references ----------------------------------------------------------

    def _default_name(self, what: str) -> tuple[str, _Token]:
        token = self.expect("pname", what)
        prefix, local = token.value
        if prefix != "" or not local:
            raise self.error(f"expected {what}", token)
        return local, token

    def _wrap_entity(self, factory, name: str, token: _Token) -> Entity:
        try:
            return factory(name)
        except ValueError as exc:
            raise self.error(str(exc), token) from exc

    def class_expression(self) -> ClassExpression:
        token = self.peek()
        if token.kind == "pname":
            prefix, local = token.value
            self.advance()
            if prefix == "" and local:
                return NamedClass(self._wrap_entity(class_entity, local, token))
            if (prefix, local) == ("owl", "Thing"):
                return THING
            if prefix == "owl":
                raise UnsupportedConstructError(f"owl:{local}", token.line)
            raise self.error("expected a class expression", token)
        if token.kind == "word":
            return self._compound_class_expression(token)
        raise self.error("expected a class expression", token)

    def _compound_class_expression(self, head: _Token) -> ClassExpression:
        name = head.value
        self.advance()
        if name in ("ObjectSomeValuesFrom", "ObjectAllValuesFrom"):
            self.expect("lparen", "'('")
            prop = self.object_property_expression()
            filler = self.class_expression()
            self.expect("rparen", "')' (object restrictions take a property and one filler)")
            builder = ObjectSomeValuesFrom if name == "ObjectSomeValuesFrom" else ObjectAllValuesFrom
            return builder(prop, filler)
        if name == "ObjectMaxCardinality":
            self.expect("lparen", "'('")
            cardinality = self.expect("int", "a non-negative integer")
            prop = self.object_property_expression()
            filler = THING if self.peek().kind == "rparen" else self.class_expression()
            self.expect("rparen", "')' (cardinality restrictions take at most one filler)")
            return ObjectMaxCardinality(cardinality.value, prop, filler)
        if name == "ObjectOneOf":
            self.expect("lparen", "'('")
            individual_name, token = self._default_name("an individual name")
            if self.peek().kind != "rparen":
                raise UnsupportedConstructError("ObjectOneOf with multiple individuals", head.line)
            self.advance()
            return ObjectOneOf(self._wrap_entity(named_individual, individual_name, token))
        if name in ("DataSomeValuesFrom", "DataAllValuesFrom"):
            self.expect("lparen", "'('")
            prop_name, prop_token = self._default_name("a data property name")
            data_range = self.data_range()
            self.expect("rparen", "')' (data restrictions take a property and one range)")
            builder = DataSomeValuesFrom if name == "DataSomeValuesFrom" else DataAllValuesFrom
            return builder(self._wrap_entity(data_property, prop_name, prop_token), data_range)
        if name == "DataMaxCardinality":
            self.expect("lparen", "'('")
            cardinality = self.expect("int", "a non-negative integer")
            prop_name, prop_token = self._default_name("a data property name")
            data_range = TOP_DATATYPE if self.peek().kind == "rparen" else self.data_range()
            self.expect("rparen", "')' (cardinality restrictions take at most one range)")
            return DataMaxCardinality(
                cardinality.value, self._wrap_entity(data_property, prop_name, prop_token), data_range
            )
        if name in _KNOWN_UNSUPPORTED:
            raise UnsupportedConstructError(name, head.line)
        raise self.error(f"unknown construct {name!r}", head)

    def object_property_expression(self) -> ObjectPropertyExpression:
        token = self.peek()
        if token.kind == "pname":
            name, name_token = self._default_name("an object property name")
            return self._wrap_entity(object_property, name, name_token)
        if token.kind == "word" and token.value == "ObjectInverseOf":
            self.advance()
            self.expect("lparen", "'('")
            name, name_token = self._default_name("an object property name")
            self.expect("rparen", "')'")
            return ObjectInverseOf(self._wrap_entity(object_property, name, name_token))
        raise self.error("expected an object property expression", token)

    def data_range(self) -> DataRange:
        token = self.peek()
        if token.kind == "pname":
            prefix, local = token.value
            self.advance()
            if prefix == "xsd" and local:
                return NamedDatatype(self._wrap_entity(datatype, local, token))
            if (prefix, local) == ("rdfs", "Literal"):
                return TOP_DATATYPE
            if prefix == "" and local:
                raise UnsupportedConstructError(f"datatype :{local}", token.line)
            raise self.error("expected a data range", token)
        if token.kind == "iri":
            self.advance()
            return NamedDatatype(self._wrap_entity(datatype, f"<{token.value}>", token))
        if token.kind == "word" and token.value == "DataOneOf":
            head = self.advance()
            self.expect("lparen", "'('")
            literal = self.literal()
            if self.peek().kind != "rparen":
                raise UnsupportedConstructError("DataOneOf with multiple literals", head.line)
            self.advance()
            return DataOneOf(literal)
        if token.kind == "word" and token.value in _KNOWN_UNSUPPORTED:
            raise UnsupportedConstructError(token.value, token.line)
        raise self.error("expected a data range", token)

    def literal(self) -> Literal:
        token = self.expect("string", "a string literal")
        if self.peek().kind != "carets":
            raise self.error("literal requires an explicit '^^' datatype")
        self.advance()
        range_token = self.peek()
        if range_token.kind == "pname":
            prefix, local = range_token.value
            self.advance()
            if prefix == "xsd" and local:
                return Literal(token.value, self._wrap_entity(datatype, local, range_token))
            raise self.error("expected an xsd datatype or IRI", range_token)
        if range_token.kind == "iri":
            self.advance()
            return Literal(
                token.value, self._wrap_entity(datatype, f"<{range_token.value}>", range_token)
            )
        raise self.error("expected an xsd datatype or IRI", range_token)

    # -- axioms and declarations ----------------------------------------------

    def axiom(self) -> Axiom:
        head = self.expect("word", "an axiom constructor")
        name = head.value
        if name == "SubClassOf":
            self.expect("lparen", "'('")
            sub = self.class_expression()
            sup = self.class_expression()
            self.expect("rparen", "')' (SubClassOf takes exactly two class expressions)")
            return SubClassOf(sub, sup)
        if name == "DisjointClasses":
            self.expect("lparen", "'('")
            operands = [self.class_expression(), self.class_expression()]
            if self.peek().kind != "rparen":
                raise UnsupportedConstructError("DisjointClasses with more than two classes", head.line)
            self.advance()
            named = []
            for operand in operands:
                if not isinstance(operand, NamedClass):
                    raise UnsupportedConstructError(
                        "DisjointClasses over complex class expressions", head.line
                    )
                named.append(operand)
            return DisjointClasses(named[0], named[1])
        if name == "ClassAssertion":
            self.expect("lparen", "'('")
            expression = self.class_expression()
            if not isinstance(expression, NamedClass):
                raise UnsupportedConstructError(
                    "ClassAssertion over a complex class expression", head.line
                )
            individual_name, token = self._default_name("an individual name")
            self.expect("rparen", "')' (ClassAssertion takes a class and one individual)")
            return ClassAssertion(expression, self._wrap_entity(named_individual, individual_name, token))
        if name in _KNOWN_UNSUPPORTED:
            raise UnsupportedConstructError(name, head.line)
        raise self.error(f"unknown construct {name!r}", head)

    def declaration(self) -> Entity | None:
        self.expect("lparen", "'('")
        head = self.expect("word", "an entity constructor")
        name = head.value
        factories = {
            "Class": class_entity,
            "ObjectProperty": object_property,
            "DataProperty": data_property,
            "NamedIndividual": named_individual,
        }
        if name in factories:
            self.expect("lparen", "'('")
            local, token = self._default_name(f"a {name} name")
            self.expect("rparen", "')'")
            self.expect("rparen", "')'")
            return self._wrap_entity(factories[name], local, token)
        if name == "Datatype":
            # Built-in and IRI datatypes need no declaration; accept and drop.
            self.expect("lparen", "'('")
            self.data_range()
            self.expect("rparen", "')'")
            self.expect("rparen", "')'")
            return None
        if name == "AnnotationProperty" or name in _KNOWN_UNSUPPORTED:
            raise UnsupportedConstructError(f"Declaration({name})", head.line)
        raise self.error(f"unknown entity constructor {name!r}", head)


def _parse_prefixes(parser: _Parser) -> PrefixEnvironment:
    base_iri: str | None = None
    while parser.peek().kind == "word" and parser.peek().value == "Prefix":
        parser.advance()
        parser.expect("lparen", "'('")
        name_token = parser.expect("pname", "a prefix name")
        prefix, local = name_token.value
        if local:
            raise parser.error("prefix declarations bind a bare prefix", name_token)
        parser.expect("equals", "'='")
        iri_token = parser.expect("iri", "an IRI")
        parser.expect("rparen", "')'")
        if prefix == "":
            base_iri = iri_token.value
            if not base_iri.endswith(("#", "/")):
                raise parser.error("default namespace must end in '#' or '/'", iri_token)
        elif prefix in _STANDARD_PREFIXES:
            if iri_token.value != _STANDARD_PREFIXES[prefix]:
                raise parser.error(
                    f"prefix {prefix}: must bind to <{_STANDARD_PREFIXES[prefix]}>", iri_token
                )
        else:
            raise parser.error(f"unsupported prefix {prefix!r}", name_token)
    return PrefixEnvironment(base_iri) if base_iri is not None else PrefixEnvironment()


def parse_functional(text: str) -> Ontology:
    """Parse a functional-syntax document; inverse of :func:`render_functional`.

    Whitespace is free-form and ``#`` starts a line comment. Anything outside
    the fragment raises, so no input is ever silently dropped or rewritten.
    """
    parser = _Parser(_tokenize(text))
    prefixes = _parse_prefixes(parser)
    head = parser.expect("word", "'Ontology'")
    if head.value != "Ontology":
        raise parser.error("expected 'Ontology'", head)
    parser.expect("lparen", "'('")

    axioms: list[Axiom] = []
    declared: list[Entity] = []
    while parser.peek().kind != "rparen":
        token = parser.peek()
        if token.kind != "word":
            raise parser.error("expected an axiom or declaration", token)
        if token.value == "Declaration":
            parser.advance()
            entity = parser.declaration()
            if entity is not None:
                declared.append(entity)
        else:
            axioms.append(parser.axiom())
    parser.advance()
    if parser.peek().kind != "eof":
        raise parser.error("unexpected content after the ontology closes")
    return Ontology(prefixes=prefixes, axioms=tuple(axioms), declared=frozenset(declared))


def parse_axiom(text: str) -> Axiom:
    """Parse a single axiom given in functional syntax (used by review files)."""
    parser = _Parser(_tokenize(text))
    axiom = parser.axiom()
    if parser.peek().kind != "eof":
        raise parser.error("unexpected content after the axiom")
    return axiom

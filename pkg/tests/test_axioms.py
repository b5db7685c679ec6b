"""Axiom AST: structural equality, hashing, canonical pair form, total order."""

import random

import pytest

from owlax.axioms import (
    ClassAssertion,
    DataOneOf,
    DataSomeValuesFrom,
    DisjointClasses,
    Entity,
    EntityKind,
    Literal,
    NamedClass,
    ObjectInverseOf,
    ObjectMaxCardinality,
    ObjectOneOf,
    ObjectSomeValuesFrom,
    SubClassOf,
    THING,
    TOP_DATATYPE,
    axiom_entities,
    class_entity,
    data_property,
    datatype,
    named_individual,
    object_property,
    structurally_equal,
)
from owlax.functional import axiom_sort_key, canonical_compare

PERSON = NamedClass(class_entity("Person"))
ADDRESS = NamedClass(class_entity("Address"))
HAS_ADDRESS = object_property("hasAddress")
MARY = named_individual("mary")


class TestStructuralEquality:
    def test_disjoint_pair_is_unordered(self):
        left = DisjointClasses(ADDRESS, PERSON)
        right = DisjointClasses(PERSON, ADDRESS)
        assert structurally_equal(left, right)
        assert hash(left) == hash(right)

    def test_disjoint_canonical_field_order(self):
        axiom = DisjointClasses(ADDRESS, PERSON)
        assert axiom.first == PERSON
        assert axiom.second == ADDRESS

    def test_distinct_fillers_differ(self):
        unscoped = SubClassOf(ObjectSomeValuesFrom(HAS_ADDRESS, THING), PERSON)
        scoped = SubClassOf(ObjectSomeValuesFrom(HAS_ADDRESS, ADDRESS), PERSON)
        assert not structurally_equal(unscoped, scoped)

    def test_identical_assertions_equal(self):
        assert structurally_equal(ClassAssertion(PERSON, MARY), ClassAssertion(PERSON, MARY))

    def test_no_reasoning_over_inverses(self):
        direct = SubClassOf(PERSON, ObjectSomeValuesFrom(HAS_ADDRESS, ADDRESS))
        inverted = SubClassOf(
            ADDRESS, ObjectSomeValuesFrom(ObjectInverseOf(HAS_ADDRESS), PERSON)
        )
        assert not structurally_equal(direct, inverted)


class TestConstructorChecks:
    def test_named_class_requires_class_entity(self):
        with pytest.raises(ValueError):
            NamedClass(object_property("p"))

    def test_negative_cardinality_rejected(self):
        with pytest.raises(ValueError):
            ObjectMaxCardinality(-1, HAS_ADDRESS, THING)

    def test_bad_entity_name_rejected(self):
        with pytest.raises(ValueError):
            Entity(EntityKind.CLASS, "no spaces")

    def test_bracketed_iri_only_for_datatypes(self):
        assert Entity(EntityKind.DATATYPE, "<http://a.example/dt>")
        with pytest.raises(ValueError):
            Entity(EntityKind.CLASS, "<http://a.example/C>")

    def test_empty_literal_is_legal(self):
        assert Literal("", datatype("string")).lexical == ""

    def test_nominal_requires_individual(self):
        with pytest.raises(ValueError):
            ObjectOneOf(class_entity("Person"))


def random_axiom(rng: random.Random):
    classes = [NamedClass(class_entity(name)) for name in ("Alpha", "Beta", "Gamma")]
    props = [object_property(name) for name in ("p", "q")]
    data_props = [data_property(name) for name in ("d", "e")]
    literal = Literal(rng.choice(["a", "b", ""]), datatype(rng.choice(["string", "integer"])))
    fillers = classes + [THING, ObjectOneOf(named_individual(rng.choice(["ada", "bob"])))]
    ranges = [TOP_DATATYPE, DataOneOf(literal)]
    kind = rng.randrange(3)
    if kind == 0:
        prop = rng.choice(props)
        if rng.random() < 0.3:
            prop = ObjectInverseOf(prop)
        restriction = rng.choice(
            [
                ObjectSomeValuesFrom(prop, rng.choice(fillers)),
                ObjectMaxCardinality(1, prop, rng.choice(fillers)),
                DataSomeValuesFrom(rng.choice(data_props), rng.choice(ranges)),
            ]
        )
        sides = [rng.choice(classes), restriction]
        rng.shuffle(sides)
        return SubClassOf(sides[0], sides[1])
    if kind == 1:
        return DisjointClasses(rng.choice(classes), rng.choice(classes))
    return ClassAssertion(rng.choice(classes), named_individual(rng.choice(["ada", "bob"])))


class TestCanonicalCompare:
    def test_reflexive_equal(self):
        axiom = SubClassOf(PERSON, ADDRESS)
        assert canonical_compare(axiom, axiom) == 0

    def test_kind_rank(self):
        sub = SubClassOf(PERSON, ADDRESS)
        disjoint = DisjointClasses(PERSON, ADDRESS)
        assertion = ClassAssertion(PERSON, MARY)
        assert canonical_compare(sub, disjoint) == -1
        assert canonical_compare(disjoint, assertion) == -1
        assert canonical_compare(assertion, sub) == 1

    def test_sort_is_permutation_invariant(self):
        rng = random.Random(101)
        axioms = [random_axiom(rng) for _ in range(40)]
        baseline = sorted(axioms, key=axiom_sort_key)
        for _ in range(20):
            shuffled = axioms[:]
            rng.shuffle(shuffled)
            assert sorted(shuffled, key=axiom_sort_key) == baseline

    def test_total_antisymmetric_transitive(self):
        rng = random.Random(202)
        axioms = [random_axiom(rng) for _ in range(25)]
        for left in axioms:
            for right in axioms:
                forward = canonical_compare(left, right)
                backward = canonical_compare(right, left)
                assert forward == -backward
                if forward == 0:
                    assert structurally_equal(left, right) or axiom_sort_key(left) == axiom_sort_key(right)
        for first in axioms[:10]:
            for second in axioms[:10]:
                for third in axioms[:10]:
                    if canonical_compare(first, second) <= 0 and canonical_compare(second, third) <= 0:
                        assert canonical_compare(first, third) <= 0


class TestEntityWalk:
    def test_axiom_entities_collects_everything(self):
        axiom = SubClassOf(
            ADDRESS, ObjectSomeValuesFrom(ObjectInverseOf(HAS_ADDRESS), PERSON)
        )
        names = {entity.name for entity in axiom_entities(axiom)}
        assert names == {"Address", "hasAddress", "Person"}

    def test_literal_datatype_counts_as_entity(self):
        axiom = SubClassOf(
            PERSON, DataSomeValuesFrom(data_property("hasAge"), DataOneOf(Literal("3", datatype("integer"))))
        )
        kinds = {entity.kind for entity in axiom_entities(axiom)}
        assert EntityKind.DATATYPE in kinds
        assert EntityKind.DATA_PROPERTY in kinds

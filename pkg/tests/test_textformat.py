import json

import pytest
from hypothesis import given, strategies as st

from unaryp.complexity import prime_power_family
from unaryp.model import GeneralPSystem, UnaryPSystem, as_general, as_unary
from unaryp.textformat import ParseError, load, parse, parse_json, serialize, to_json


def diag_messages(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    return info.value.diagnostics


def test_parse_unary():
    doc = parse("alphabet: a\naxiom: a^2\nhom: a->a^6\nhom: a->a^4\n")
    assert doc.is_unary
    assert as_unary(doc.system) == UnaryPSystem(2, (6, 4))
    assert doc.positions["axiom"] == (2, 1)
    assert doc.positions[("hom", 2)] == (4, 1)


def test_parse_two_letters_with_omitted_identities():
    doc = parse("alphabet: a b\naxiom: a^1 b^1\nhom: a->a^2\nhom: b->b^3\n")
    assert doc.system.hom_vectors() == ((2, 1), (1, 3))
    assert doc.system.axiom_vector() == (1, 1)


def test_parse_comments_blank_lines_crlf():
    text = "# header\r\n\r\nalphabet: a   # one letter\r\naxiom: a a\r\nhom: a->a^3, \r\n"
    assert as_unary(parse(text).system) == UnaryPSystem(2, (3,))


def test_parse_empty_hom_is_identity():
    doc = parse("alphabet: a\naxiom: a\nhom:\nhom: a->a\n")
    assert as_unary(doc.system) == UnaryPSystem(1, (1, 1))


def test_parse_multiple_rules_per_line():
    doc = parse("alphabet: x y\naxiom: x y^2\nhom: x->x^2, y->y^5\nhom: y -> y ^ 2\n")
    assert doc.system.hom_vectors() == ((2, 5), (1, 2))


def test_empty_axiom_diagnostic():
    messages = [d.message for d in diag_messages("axiom: a^0")]
    assert "empty axiom" in messages
    diags = diag_messages("alphabet: a\naxiom: a^0\n")
    assert [(d.message, d.line) for d in diags] == [("empty axiom", 2)]


@pytest.mark.parametrize(
    "text, message, line, column",
    [
        ("alphabet: a\naxiom: a\nfoo: bar\n", "unknown directive 'foo'", 3, 1),
        ("alphabet: a\naxiom: a\nhom: a->a^2, a->a^3\n", "duplicate rule for 'a'", 3, 14),
        ("alphabet: a\naxiom: a\nhom: a->a^0\n", "erasing rule forbidden: exponent 0 for 'a'", 3, 6),
        ("alphabet: a\naxiom: a b\n", "symbol 'b' not in alphabet", 2, 10),
        ("alphabet: a\naxiom: a\nhom: b->b^2\n", "symbol 'b' not in alphabet", 3, 6),
        ("alphabet: a b\naxiom: a\nhom: a->b^2\n", "rule must map 'a' to a power of itself, got 'b'", 3, 6),
        ("alphabet: a a\naxiom: a\n", "duplicate symbol 'a' in alphabet", 1, 13),
        ("alphabet: a\naxiom: a\nhom: a=>a\n", "malformed rule, expected 'x->x^k'", 3, 5),
    ],
)
def test_diagnostics(text, message, line, column):
    diags = diag_messages(text)
    assert any((d.message, d.line, d.column) == (message, line, column) for d in diags), diags


def test_missing_directives():
    messages = [d.message for d in diag_messages("hom: a->a^2\n")]
    assert "missing alphabet directive" in messages
    assert "missing axiom directive" in messages


def test_serialize_examples():
    assert serialize(UnaryPSystem(2, (6, 1))) == "alphabet: a\naxiom: a^2\nhom: a->a^6\nhom:\n"
    assert serialize(prime_power_family(2)) == (
        "alphabet: a1 a2\naxiom: a1 a2\nhom: a1->a1^2\nhom: a2->a2^3\n"
    )


unary = st.builds(UnaryPSystem, st.integers(1, 50), st.lists(st.integers(1, 50), max_size=5).map(tuple))
general = st.integers(1, 3).flatmap(
    lambda k: st.builds(
        GeneralPSystem,
        st.just(tuple(f"s{i}" for i in range(k))),
        st.lists(st.integers(0, 4), min_size=k, max_size=k)
        .filter(lambda v: sum(v) > 0)
        .map(lambda v: {f"s{i}": c for i, c in enumerate(v)}),
        st.lists(
            st.lists(st.integers(1, 5), min_size=k, max_size=k).map(
                lambda v: {f"s{i}": c for i, c in enumerate(v)}
            ),
            max_size=4,
        ),
    )
)


@given(st.one_of(unary.map(as_general), general))
def test_round_trip(sys_):
    assert parse(serialize(sys_)).system == sys_
    assert parse_json(to_json(sys_)).system == sys_
    assert load(to_json(sys_)).system == sys_


def test_json_mirror_keys():
    data = json.loads(to_json(prime_power_family(2)))
    assert data == {
        "alphabet": ["a1", "a2"],
        "axiom": {"a1": 1, "a2": 1},
        "homomorphisms": [{"a1": 2, "a2": 1}, {"a1": 1, "a2": 3}],
    }


@pytest.mark.parametrize(
    "text",
    [
        '{"alphabet": ["a"], "axiom": {"a": 0}, "homomorphisms": []}',
        '{"alphabet": ["a"], "axiom": {"a": 1}, "homomorphisms": [{"a": 0}]}',
        '{"alphabet": ["a"], "axiom": {"b": 1}}',
        '{"alphabet": "a", "axiom": {"a": 1}}',
        '{"alphabet": ["a"], "axiom": {"a": 1}, "extra": 1}',
        "{not json",
    ],
)
def test_json_errors(text):
    with pytest.raises(ParseError):
        parse_json(text)

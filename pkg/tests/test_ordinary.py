import json
from fractions import Fraction

import pytest

from bottsam import (
    BSWord,
    CohClass,
    Gallery,
    OrdinaryClass,
    RootSystem,
    WordMismatch,
    evaluate_at_origin,
    multiply,
    ordinary_multiply,
    parse_polynomial,
    relations,
)

A2 = RootSystem.from_label("A2")


def word121():
    return BSWord(A2, (1, 2, 1))


def g(text):
    return Gallery.from_string(text)


def x(word, text):
    return OrdinaryClass.basis(word, g(text))


def test_relations_text():
    rels = relations(word121())
    assert [str(r) for r in rels] == [
        "x1^2 = 0",
        "x2^2 - x1*x2 = 0",
        "x3^2 + 2*x1*x3 - x2*x3 = 0",
    ]
    a1_word = BSWord(RootSystem.from_label("A1"), (1,))
    assert [str(r) for r in relations(a1_word)] == ["x1^2 = 0"]


def test_relation_records():
    rels = relations(word121())
    assert rels[0].terms == ()
    assert rels[1].terms == ((1, -1),)
    assert rels[2].terms == ((1, 2), (2, -1))


def test_square_of_first_generator_vanishes():
    word = word121()
    assert ordinary_multiply(x(word, "100"), x(word, "100")).is_zero


def test_square_of_last_generator():
    word = word121()
    out = ordinary_multiply(x(word, "001"), x(word, "001"))
    assert out == OrdinaryClass(word, {g("101"): Fraction(-2), g("011"): Fraction(1)})
    assert str(out) == "-2*x_{101} + x_{011}"


def test_two_step_rewriting():
    # x2*x3 times x3 needs two rewrites before it is square-free
    word = word121()
    out = ordinary_multiply(x(word, "011"), x(word, "001"))
    assert out == OrdinaryClass(word, {g("111"): Fraction(-1)})


def test_disjoint_monomials_multiply_directly():
    word = word121()
    assert ordinary_multiply(x(word, "100"), x(word, "001")) == x(word, "101")
    assert ordinary_multiply(x(word, "000"), x(word, "010")) == x(word, "010")


def test_word_mismatch():
    with pytest.raises(WordMismatch):
        ordinary_multiply(x(word121(), "100"), x(BSWord(A2, (1, 2)), "10"))


def test_evaluate_at_origin_drops_positive_degree():
    word = word121()
    c = CohClass(
        word,
        {
            g("100"): parse_polynomial("a1", 2),
            g("110"): parse_polynomial("2", 2),
        },
    )
    assert evaluate_at_origin(c) == OrdinaryClass(word, {g("110"): Fraction(2)})
    assert evaluate_at_origin(CohClass.zero(word)).is_zero
    assert evaluate_at_origin(CohClass.basis(word, g("101"))) == x(word, "101")


def test_origin_evaluation_is_a_ring_map():
    word = word121()
    gals = word.galleries()
    for e1 in gals:
        for e2 in gals:
            lhs = evaluate_at_origin(
                multiply(CohClass.basis(word, e1), CohClass.basis(word, e2))
            )
            rhs = ordinary_multiply(
                OrdinaryClass.basis(word, e1), OrdinaryClass.basis(word, e2)
            )
            assert lhs == rhs, (str(e1), str(e2))


def test_str_constant_and_signs():
    word = word121()
    c = OrdinaryClass(word, {g("000"): Fraction(-1, 2), g("100"): Fraction(1)})
    assert str(c) == "-1/2 + x_{100}"
    assert str(OrdinaryClass.zero(word)) == "0"


def test_json_roundtrip():
    word = word121()
    c = OrdinaryClass(word, {g("101"): Fraction(-2), g("011"): Fraction(1, 3)})
    doc = c.to_json_dict()
    assert doc == {"word": [1, 2, 1], "coords": {"101": -2, "011": "1/3"}}
    back = OrdinaryClass.from_json_dict(A2, json.loads(json.dumps(doc)))
    assert back == c

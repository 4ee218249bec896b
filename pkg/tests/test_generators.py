"""Named generators, standard sets, and word text."""

import pytest

from cycleiso import (
    DomainError,
    ParseError,
    PartialPerm,
    classify,
    generator,
    identity,
    identity_off,
    parse_word,
    standard_generators,
    word_text,
)


def test_single_generators_by_definition():
    assert str(generator(5, "g")) == "n=5;1>2,2>3,3>4,4>5,5>1"
    assert str(generator(5, "h")) == "n=5;1>5,2>4,3>3,4>2,5>1"
    assert str(generator(5, "x")) == "n=5;1>2,2>3,3>4,4>5"
    assert generator(5, "y") == generator(5, "x").inverse()
    assert generator(5, "e3") == identity_off(5, 3)
    assert str(generator(5, "x1")) == "n=5;1>1,2>5"
    assert str(generator(5, "x2")) == "n=5;1>1,3>4"
    assert generator(5, "y2") == generator(5, "x2").inverse()
    assert str(generator(7, "x3")) == "n=7;1>1,4>5"


def test_generator_name_validation():
    with pytest.raises(ParseError):
        generator(5, "z")
    with pytest.raises(ParseError):
        generator(5, "e01")
    with pytest.raises(ParseError):
        generator(5, "")
    # straddle indices stop at (n-1)//2
    with pytest.raises(DomainError):
        generator(5, "x3")
    with pytest.raises(DomainError):
        generator(4, "y2")


def test_standard_set_sizes():
    for n in range(3, 12):
        m = (n - 1) // 2
        assert len(standard_generators("odi", n)) == n + 2 * m
        assert len(standard_generators("mdi", n)) == 2 + (n + 1) // 2 - 1 + 2 * m
        assert len(standard_generators("opdi", n)) == 2 + m
        assert len(standard_generators("di", n)) == 3


def test_standard_set_name_layout():
    odi = standard_generators("odi", 5)
    assert odi.names == ("x", "y", "e2", "e3", "e4", "x1", "x2", "y1", "y2")
    mdi = standard_generators("mdi", 5)
    assert mdi.names == ("h", "x", "e2", "e3", "x1", "x2", "y1", "y2")
    opdi = standard_generators("opdi", 5)
    assert opdi.names == ("g", "e5", "x1", "x2")
    assert standard_generators("di", 5).names == ("g", "h", "e5")


def test_standard_generators_are_members():
    for n in (3, 4, 5, 6, 7):
        for kind, flag in (("odi", "in_odi"), ("mdi", "in_mdi"), ("opdi", "in_opdi")):
            for name, p in standard_generators(kind, n):
                assert getattr(classify(p), flag), (kind, n, name)


def test_generator_set_lookup_and_iteration():
    gens = standard_generators("opdi", 5)
    assert gens.element("g") == generator(5, "g")
    with pytest.raises(ParseError):
        gens.element("x")  # valid name, but not in this set
    assert dict(gens)["e5"] == identity_off(5, 5)


def test_word_evaluation():
    odi = standard_generators("odi", 5)
    assert odi.evaluate(()) == identity(5)
    assert odi.evaluate(("y", "x")) == identity_off(5, 1)
    assert odi.evaluate(("x", "y")) == identity_off(5, 5)
    # left to right: x then y undoes the shift where defined
    assert odi.evaluate(["x"] * 5) == PartialPerm.parse("n=5;")


def test_word_text_round_trip():
    assert word_text(()) == "ε"
    assert word_text(("y", "x1", "x", "x")) == "y x1 x x"
    assert parse_word("y x1 x x") == ("y", "x1", "x", "x")
    assert parse_word("ε") == ()
    assert parse_word("") == ()
    assert parse_word("  g  e5 ") == ("g", "e5")
    for word in ((), ("h",), ("e2", "e2"), ("x", "y", "x12")):
        assert parse_word(word_text(word)) == word


def test_word_parsing_rejects_junk():
    with pytest.raises(ParseError):
        parse_word("x q")
    with pytest.raises(ParseError):
        parse_word("x^2")


def test_standard_generators_validation():
    with pytest.raises(DomainError):
        standard_generators("odi", 2)
    with pytest.raises(DomainError):
        standard_generators("nope", 5)

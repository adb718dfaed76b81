from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iomalg.congruence import quotient
from iomalg.fixtures import B2, E5, TRIVIAL, relabel
from iomalg.formats import ParseError, parse_alg, parse_state, serialize_alg

ROOT = Path(__file__).resolve().parent.parent


def test_shipped_e5_file_parses_to_e5():
    assert parse_alg((ROOT / "alg" / "e5.alg").read_text()) == E5
    assert parse_alg((ROOT / "alg" / "b2.alg").read_text()) == B2


@pytest.mark.parametrize("alg", [E5, B2, TRIVIAL], ids=["E5", "B2", "trivial"])
def test_round_trip_fixtures(alg):
    assert parse_alg(serialize_alg(alg)) == alg


def test_round_trip_census(census5):
    for alg in census5:
        assert parse_alg(serialize_alg(alg)) == alg


def test_round_trip_quotient_names():
    q = quotient(E5, [4]).algebra
    assert parse_alg(serialize_alg(q)) == q
    q = quotient(E5, range(5)).algebra
    assert parse_alg(serialize_alg(q)) == q


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(5)))
def test_round_trip_relabelled(order):
    alg = relabel(E5, list(order))
    assert parse_alg(serialize_alg(alg)) == alg


def test_comments_blank_lines_and_optional_zero():
    text = """
    # header comment
    elements: p q   # trailing comment
    one: q

    arrow:
      q q
      p q  # p -> q = q
    """
    alg = parse_alg(text)
    assert alg.names == ("p", "q") and alg.zero is None
    assert alg.arrow == ((1, 1), (0, 1))


def _error(text):
    with pytest.raises(ParseError) as info:
        parse_alg(text)
    return info.value


def test_missing_one_header():
    e = _error("elements: 0 1\nzero: 0\narrow:\n1 1\n0 1\n")
    assert "one:" in e.message
    assert (e.line, e.column) == (2, 1)


def test_unknown_name_in_row_has_position():
    e = _error("elements: 0 1\none: 1\narrow:\n1 1\n0 x\n")
    assert "'x'" in e.message
    assert (e.line, e.column) == (5, 3)


@pytest.mark.parametrize(
    "text, fragment, line",
    [
        ("", "elements:", 1),
        ("elements: 0 1\none: 1\narrow:\n1 1\n", "expected 2 arrow rows", 5),
        ("elements: 0 1\none: 1\narrow:\n1 1 1\n0 1\n", "3 entries", 4),
        ("elements: 0 1\none: 1\narrow:\n1 1\n0 1\n0 1\n", "unexpected content", 6),
        ("elements: 0 0\none: 0\narrow:\n0 0\n0 0\n", "duplicate element", 1),
        ("elements: 0 1\none: 2\narrow:\n1 1\n0 1\n", "unknown element '2'", 2),
        ("elements: 0 1\none: 1 0\narrow:\n1 1\n0 1\n", "exactly one", 2),
        ("elements: 0 1\none: 1\nzero: 1\narrow:\n1 1\n0 1\n", "zero", 4),
        ("colour: red\n", "unknown header", 1),
        ("elements: 0 1\narrow:\n", "missing header 'one:'", 2),
        ("elements: 0 1\none: 1\narrow: 1 1\n0 1\n", "line after 'arrow:'", 3),
        ("one: 1\nelements: 0 1\n", "missing header 'elements:'", 1),
        ("elements: 0 1\none: 1\none: 1\n", "duplicate header", 3),
        ("1 1\n", "expected header", 1),
    ],
)
def test_parse_errors(text, fragment, line):
    e = _error(text)
    assert fragment in e.message
    assert e.line == line
    assert e.column >= 1


def test_parse_state_examples():
    assert parse_state("0=0, 1=1", B2) == {0: 0, 1: 1}
    s = parse_state("0=0, a=1/2, b=1/2, c=1, 1=1", E5)
    assert s[1] == Fraction(1, 2) and s[3] == 1
    assert all(isinstance(v, Fraction) for v in s.values())


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("0=0, 1=2", "outside [0,1]"),
        ("0=0", "no value"),
        ("0=0, 0=1, 1=1", "duplicate"),
        ("0=0.5, 1=1", "malformed rational"),
        ("0=1/0, 1=1", "zero denominator"),
        ("0=0, z=1, 1=1", "unknown element"),
        ("0=0,,1=1", "empty assignment"),
        ("0==0, 1=1", "name=value"),
        ("0=-1/2, 1=1", "outside [0,1]"),
    ],
)
def test_parse_state_errors(text, fragment):
    with pytest.raises(ParseError, match=fragment.replace("[", r"\[").replace("]", r"\]")):
        parse_state(text, B2)

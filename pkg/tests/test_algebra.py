from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iomalg import (
    AlgebraError,
    FiniteAlgebra,
    InvolutionError,
    build_derived,
    odot_power,
    validate,
)
from iomalg.fixtures import B2, E5, TRIVIAL, relabel

Z, A, B, C, ONE = range(5)

# Hand-evaluated from the E5 arrow table.
E5_STAR = (ONE, B, A, C, Z)
E5_ODOT = (
    (Z, Z, Z, Z, Z),
    (Z, A, Z, Z, A),
    (Z, Z, Z, Z, B),
    (Z, Z, Z, Z, C),
    (Z, A, B, C, ONE),
)
E5_SQCUP = (
    (Z, A, B, C, ONE),
    (A, A, ONE, C, ONE),
    (B, A, B, C, ONE),
    (C, A, B, C, ONE),
    (ONE, ONE, ONE, ONE, ONE),
)


def test_e5_derived_tables_match_hand_values():
    t = E5.derived
    assert t.star == E5_STAR
    assert t.odot == E5_ODOT
    assert t.sqcup == E5_SQCUP


def test_e5_meet_values():
    t = E5.derived
    assert t.cap(B, A) == Z
    assert t.cap(A, B) == B
    assert E5.imp(B, t.cap(B, A)) == A
    assert E5.imp(B, A) == ONE


def test_b2_is_boolean_implication():
    t = B2.derived
    assert t.star == (1, 0)
    assert t.odot == ((0, 0), (0, 1))
    assert t.oplus == ((0, 1), (1, 1))


def test_trivial_algebra():
    assert TRIVIAL.n == 1
    assert TRIVIAL.is_involutive
    assert TRIVIAL.derived.star == (0,)


def test_powers():
    assert odot_power(E5, C, 1) == C
    assert odot_power(E5, C, 2) == Z
    assert odot_power(E5, A, 7) == A
    assert E5.derived.power_cycle(A) == (A,)
    assert E5.derived.power_cycle(C) == (C, Z)
    with pytest.raises(ValueError):
        odot_power(E5, A, 0)


@pytest.mark.parametrize(
    "names, rows, one, zero, fragment",
    [
        ([], [], 0, None, "element count"),
        (["a", "a"], [[0, 0], [0, 0]], 0, None, "duplicate"),
        (["a b"], [[0]], 0, None, "invalid element name"),
        (["x#"], [[0]], 0, None, "invalid element name"),
        (["0", "1"], [[1, 1]], 1, 0, "rows"),
        (["0", "1"], [[1, 1], [0]], 1, 0, "entries"),
        (["0", "1"], [[1, 2], [0, 1]], 1, 0, "out of range"),
        (["0", "1"], [[1, 1], [0, 1]], 1, 1, "zero"),
    ],
)
def test_validation_errors(names, rows, one, zero, fragment):
    with pytest.raises(AlgebraError, match=fragment):
        FiniteAlgebra(tuple(names), tuple(tuple(r) for r in rows), one, zero)


def test_validate_resolves_names_and_rejects_unknown():
    assert validate(["0", "1"], [["1", "1"], ["0", "1"]], "1", "0") == B2
    with pytest.raises(AlgebraError, match="unknown element"):
        validate(["0", "1"], [["1", "q"], ["0", "1"]], "1", "0")


def test_missing_zero_and_broken_involution():
    no_zero = FiniteAlgebra(("0", "1"), ((1, 1), (0, 1)), 1)
    with pytest.raises(InvolutionError):
        build_derived(no_zero)
    # x -> 0 = 0 for x in {a, 1}: a** = 1 != a
    bad = validate(["0", "a", "1"], [["1", "1", "1"], ["0", "1", "1"], ["0", "a", "1"]], "1", "0")
    assert not bad.is_involutive
    with pytest.raises(InvolutionError) as info:
        bad.derived
    assert info.value.witness == 1


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(5)))
def test_relabelling_commutes_with_derived_tables(order):
    other = relabel(E5, list(order))
    pos = {old: new for new, old in enumerate(order)}
    t, u = E5.derived, other.derived
    for x in E5.elements:
        assert u.star[pos[x]] == pos[t.star[x]]
        for y in E5.elements:
            assert u.odot[pos[x]][pos[y]] == pos[t.odot[x][y]]
            assert u.sqcap[pos[x]][pos[y]] == pos[t.sqcap[x][y]]
            assert u.leqQ[pos[x]][pos[y]] == t.leqQ[x][y]


def test_derived_identities_on_census(small_census):
    for alg in small_census:
        t = alg.derived
        for x in alg.elements:
            assert t.star[t.star[x]] == x
            for y in alg.elements:
                # round trip through the product form
                assert t.star[t.odot[x][t.star[y]]] == alg.arrow[x][y]
                assert t.oplus[x][y] == t.star[t.odot[t.star[x]][t.star[y]]]
                assert t.leq[x][y] == (alg.arrow[x][y] == alg.one)

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iomalg import FiniteAlgebra
from iomalg.classify import classify
from iomalg.fixtures import B2, E5, TRIVIAL, relabel
from iomalg.search import (
    ModelSpec,
    SearchError,
    canonicalize,
    enumerate_models,
    find_models,
    from_canonical,
    star_choices,
)


def _is_involutive_be(n, t, one, zero) -> bool:
    rng = range(n)
    if any(t[x][x] != one or t[x][one] != one or t[one][x] != x or t[zero][x] != one for x in rng):
        return False
    if any(t[t[x][zero]][zero] != x for x in rng):
        return False
    return all(t[x][t[y][z]] == t[y][t[x][z]] for x in rng for y in rng for z in rng)


def _brute_force_classes(n: int, free_only: bool) -> set:
    """Canonical forms of every involutive BE table with 0 = index 0, 1 = index n-1."""
    one, zero = n - 1, 0
    if free_only:
        # cells not fixed by x->x = 1, x->1 = 1, 1->x = x, 0->x = 1
        cells = [(x, y) for x in range(1, n - 1) for y in range(n - 1) if y != x]
    else:
        cells = [(x, y) for x in range(n) for y in range(n)]
    forms = set()
    for values in itertools.product(range(n), repeat=len(cells)):
        t = [[None] * n for _ in range(n)]
        if free_only:
            for x in range(n):
                t[x][x] = t[x][one] = t[zero][x] = one
                t[one][x] = x
        for (x, y), v in zip(cells, values):
            t[x][y] = v
        if not _is_involutive_be(n, t, one, zero):
            continue
        alg = FiniteAlgebra(tuple(str(i) for i in range(n)), tuple(map(tuple, t)), one, zero)
        forms.add(canonicalize(alg))
    return forms


@pytest.mark.parametrize("n, free_only", [(1, False), (2, False), (3, False), (4, True)])
def test_enumeration_matches_brute_force(n, free_only):
    expected = _brute_force_classes(n, free_only)
    got = [canonicalize(a) for a in enumerate_models(n)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_census_counts():
    # frozen from the run cross-checked above (n <= 4) and the n = 5 search
    assert [len(list(enumerate_models(n))) for n in range(1, 6)] == [1, 1, 1, 5, 14]


def test_size_two_is_b2():
    (only,) = enumerate_models(2)
    assert canonicalize(only) == canonicalize(B2)


def test_e5_class_found_at_size_five():
    forms = {canonicalize(a) for a in enumerate_models(5)}
    assert canonicalize(E5) in forms


def test_iom_cut_does_not_change_iom_models():
    for n in range(1, 6):
        full = {canonicalize(a) for a in enumerate_models(n) if classify(a).is_iom}
        cut = {canonicalize(a) for a in enumerate_models(n, iom_cut=True)}
        assert full == cut


def test_streaming_equals_exhaustive():
    for n in range(1, 6):
        a = sorted(canonicalize(x) for x in enumerate_models(n, exhaustive=False))
        b = [canonicalize(x) for x in enumerate_models(n)]
        assert a == b


def test_workers_do_not_change_output():
    one = [canonicalize(a) for a in enumerate_models(5, workers=1)]
    two = [canonicalize(a) for a in enumerate_models(5, workers=2)]
    assert one == two


def test_emitted_models_are_involutive_be(census5):
    for alg in census5:
        assert classify(alg).is_involutive_be


def test_canonical_examples():
    assert from_canonical(canonicalize(B2)) == B2
    assert canonicalize(TRIVIAL).table == (0,)
    swapped = relabel(E5, [0, 2, 1, 3, 4])
    assert canonicalize(swapped) == canonicalize(E5)


def _isomorphic(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    if a.n != b.n:
        return False
    for perm in itertools.permutations(range(a.n)):
        if perm[a.one] != b.one or (a.zero is not None and perm[a.zero] != b.zero):
            continue
        if all(perm[a.arrow[x][y]] == b.arrow[perm[x]][perm[y]] for x in a.elements for y in a.elements):
            return True
    return False


def test_canonical_form_decides_isomorphism(census5):
    algs = [a for a in census5 if a.n >= 4]
    for a, b in itertools.combinations(algs, 2):
        assert (canonicalize(a) == canonicalize(b)) == _isomorphic(a, b)


@settings(max_examples=40, deadline=None)
@given(st.permutations(range(5)))
def test_canonical_form_invariant_under_relabelling(order):
    other = relabel(E5, list(order))
    form = canonicalize(other)
    assert form == canonicalize(E5)
    assert canonicalize(from_canonical(form)) == form


def test_star_choices():
    assert star_choices(1) == [(0,)]
    assert star_choices(2) == [(1, 0)]
    # involutions on three middle elements: identity, three swaps
    assert len(star_choices(5)) == 4


def test_find_models_examples():
    res = find_models(ModelSpec(5, frozenset({"iom"}), frozenset({"qw"})))
    assert res.models
    assert canonicalize(E5) in {canonicalize(m) for m in res.models}
    assert not find_models(ModelSpec(2, frozenset({"iom"}), frozenset({"qw"}))).models
    prel = find_models(ModelSpec(5, frozenset({"iom", "prel"}), frozenset({"qw"})))
    assert prel.models
    assert res.discrepancies == []


def test_find_models_limit_and_census():
    res = find_models(ModelSpec(5, limit=2))
    assert len(res.models) == 2
    assert res.census["enumerated"] == 14
    assert res.census["matched"] == 14
    assert res.census["iom"] == 6 and res.census["qw"] == 5 and res.census["prel"] == 11
    assert res.census["iom_cut"] == 0


def test_smallest_iom_not_qw_is_size_four():
    sizes = [n for n in range(1, 6) if find_models(ModelSpec(n, frozenset({"iom"}), frozenset({"qw"}))).models]
    assert sizes[0] == 4


def test_spec_errors():
    with pytest.raises(SearchError):
        ModelSpec(0)
    with pytest.raises(SearchError):
        ModelSpec(3, frozenset({"qw"}), frozenset({"qw"}))
    with pytest.raises(SearchError):
        find_models(ModelSpec(3, frozenset({"sparkly"})))
    with pytest.raises(SearchError):
        list(enumerate_models(6))
    with pytest.raises(SearchError):
        canonicalize(FiniteAlgebra(tuple(str(i) for i in range(9)), tuple((8,) * 9 for _ in range(9)), 8))

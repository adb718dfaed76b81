from __future__ import annotations

import itertools

import pytest

from iomalg import ConsistencyError
from iomalg.classify import classify
from iomalg.congruence import (
    CongruenceError,
    Partition,
    check_commutativity_transfer,
    congruence_from_ds,
    ds_from_congruence,
    is_congruence,
    quotient,
    quotient_by_partition,
    related,
    relation_matrix,
)
from iomalg.filters import ElementSubset, enumerate_subfamilies, is_commutative_ds
from iomalg.fixtures import B2, E5
from iomalg.search import canonicalize

Z, A, B, C, ONE = range(5)
X5 = list(range(5))


def test_related_examples():
    for x, y in itertools.product(range(5), repeat=2):
        assert related(E5, [ONE], x, y) == (x == y)
        assert related(E5, X5, x, y)
    assert not related(B2, [1], 0, 1)
    with pytest.raises(CongruenceError):
        related(E5, [A, ONE], A, ONE)


def test_congruence_from_ds_examples():
    assert congruence_from_ds(E5, [ONE]).count == 5
    assert congruence_from_ds(E5, X5).count == 1
    assert congruence_from_ds(B2, [1]).blocks() == ((0,), (1,))


def test_is_congruence_examples():
    assert is_congruence(E5, [[x] for x in range(5)])
    v = is_congruence(E5, [[Z, A], [B], [C], [ONE]])
    assert not v
    x, y, u, w = v.witness
    assert (x, y, u, w) == (Z, A, Z, Z)
    assert E5.arrow[Z][Z] == ONE and E5.arrow[A][Z] == B  # 1 and b are in different classes
    assert is_congruence(B2, [[0, 1]])


def test_ds_from_congruence_examples():
    assert ds_from_congruence(E5, [[x] for x in range(5)]).members == (ONE,)
    assert ds_from_congruence(E5, [X5]).members == tuple(X5)
    assert ds_from_congruence(B2, [[0], [1]]).members == (1,)
    with pytest.raises(CongruenceError):
        ds_from_congruence(E5, [[Z, A], [B], [C], [ONE]])


def test_quotient_examples():
    q = quotient(E5, [ONE])
    assert canonicalize(q.algebra) == canonicalize(E5)
    assert q.algebra.names == ("{0}", "{a}", "{b}", "{c}", "{1}")
    assert q.is_iom and not q.unsupported
    trivial = quotient(E5, X5)
    assert trivial.algebra.n == 1
    assert trivial.algebra.names == ("{0,a,b,c,1}",)
    assert quotient(B2, [1]).algebra.arrow == B2.arrow


def test_transfer_examples():
    assert check_commutativity_transfer(E5, X5) == (True, True)
    assert check_commutativity_transfer(E5, [ONE]) == (False, False)
    assert check_commutativity_transfer(B2, [1]) == (True, True)


def test_partition_type():
    p = Partition.from_blocks(4, [[2, 0], [1], [3]])
    assert p.classes == (0, 1, 0, 2)
    assert p.count == 3
    assert p.blocks() == ((0, 2), (1,), (3,))
    with pytest.raises(CongruenceError):
        Partition((1, 0))
    with pytest.raises(CongruenceError):
        Partition.from_blocks(3, [[0, 1]])
    with pytest.raises(CongruenceError):
        Partition.from_blocks(2, [[0, 1], [1]])


def test_quotient_rejects_non_congruence():
    with pytest.raises(ConsistencyError):
        quotient_by_partition(E5, Partition.from_blocks(5, [[Z, A], [B], [C], [ONE]]))


# -- invariants over every DS of the n <= 4 census plus E5 ---------------------


def _iom_ds_pairs(algs):
    for alg in algs:
        if classify(alg).is_iom:
            for f in enumerate_subfamilies(alg, "ds"):
                yield alg, f


def test_relation_is_equivalence_and_compatible(small_census):
    for alg, f in _iom_ds_pairs(small_census):
        rel = relation_matrix(alg, f)
        rng = alg.elements
        assert all(rel[x][x] for x in rng)
        assert all(rel[x][y] == rel[y][x] for x in rng for y in rng)
        assert all(
            rel[x][z] for x in rng for y in rng for z in rng if rel[x][y] and rel[y][z]
        )
        t = alg.derived
        for x, y in itertools.product(rng, repeat=2):
            if not rel[x][y]:
                continue
            assert rel[t.star[x]][t.star[y]]
            for u, v in itertools.product(rng, repeat=2):
                if rel[u][v]:
                    for table in (t.arrow, t.odot, t.sqcup, t.sqcap):
                        assert rel[table[x][u]][table[y][v]]


def test_class_of_one_round_trip(census5):
    for alg, f in _iom_ds_pairs(census5):
        p = congruence_from_ds(alg, f)
        assert is_congruence(alg, p)
        assert ds_from_congruence(alg, p) == f


def test_quotient_projection_is_homomorphism(census5):
    for alg, f in _iom_ds_pairs(census5):
        q = quotient(alg, f)
        qa, proj = q.algebra, q.projection
        assert q.is_iom
        assert qa.one == proj[alg.one] == q.one_class
        for x, y in itertools.product(alg.elements, repeat=2):
            assert proj[alg.arrow[x][y]] == qa.arrow[proj[x]][proj[y]]


def test_transfer_agrees_everywhere(census5):
    for alg, f in _iom_ds_pairs(census5):
        left, right = check_commutativity_transfer(alg, f)
        assert left == right == is_commutative_ds(alg, f).holds


def test_every_congruence_comes_from_a_ds(small_census):
    # brute force over all partitions of small algebras
    def partitions(items):
        if not items:
            yield []
            return
        head, rest = items[0], items[1:]
        for p in partitions(rest):
            for k in range(len(p)):
                yield p[:k] + [[head] + p[k]] + p[k + 1 :]
            yield [[head]] + p

    for alg in small_census:
        if not classify(alg).is_iom:
            continue
        for blocks in partitions(list(alg.elements)):
            p = Partition.from_blocks(alg.n, blocks)
            if is_congruence(alg, p):
                f = ds_from_congruence(alg, p)
                assert congruence_from_ds(alg, f).n == alg.n


def test_mere_filter_relation_under_flag():
    # {a,1} is a filter of E5 but not a DS; the relation is still computed
    rel = relation_matrix(E5, [A, ONE], allow_filter=True)
    assert rel[A][ONE]
    # a ~ 1 and c ~ c, yet a (.) c = 0 and 1 (.) c = c are unrelated
    assert not rel[E5.derived.odot[A][C]][E5.derived.odot[ONE][C]]
    with pytest.raises(ConsistencyError, match="compatibility"):
        congruence_from_ds(E5, [A, ONE], allow_filter=True)
    with pytest.raises(CongruenceError):
        congruence_from_ds(E5, [C, ONE], allow_filter=True)


def test_mere_filter_can_fail_compatibility(census5):
    # the relation of a filter that is not a DS need not be a congruence
    failures = 0
    for alg in census5:
        for f in enumerate_subfamilies(alg, "filter"):
            try:
                congruence_from_ds(alg, f, allow_filter=True)
            except ConsistencyError:
                failures += 1
    assert failures > 0


def test_unsupported_regime_flagged():
    from iomalg.search import enumerate_models

    non_iom = [a for a in enumerate_models(5) if not classify(a).is_iom]
    assert non_iom
    flagged = 0
    for alg in non_iom:
        for f in enumerate_subfamilies(alg, "ds"):
            try:
                q = quotient(alg, f)
            except ConsistencyError:
                continue
            assert q.unsupported
            flagged += 1
    assert flagged > 0

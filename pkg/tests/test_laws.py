from __future__ import annotations

import pytest

from iomalg.classify import classify
from iomalg.fixtures import B2, E5
from iomalg.laws import (
    SUITES,
    Law,
    check_law,
    find_counterexample,
    get_law,
    law_registry,
    run_suite,
    suite_laws,
)


def test_registry_shape():
    laws = law_registry()
    assert len(laws) == 87
    ids = [law.law_id for law in laws]
    assert len(set(ids)) == len(ids)
    assert ids == sorted(ids, key=lambda i: get_law(i).sort_key)
    assert {law.applies_to for law in laws} <= {"be", "bounded", "involutive", "iom", "qw"}


def test_suites_partition_registry():
    seen = []
    for name in ("involutive-be", "qw", "iom"):
        seen += [law.law_id for law in suite_laws(name)]
    assert sorted(seen) == sorted(law.law_id for law in suite_laws("all"))
    assert set(SUITES) == {"involutive-be", "qw", "iom"}
    assert len(suite_laws("all")) == 87
    with pytest.raises(KeyError):
        suite_laws("bogus")


@pytest.mark.parametrize("alg", [E5, B2], ids=["E5", "B2"])
def test_involutive_be_suite_passes(alg):
    rep = run_suite(alg, "involutive-be")
    assert rep.failed == 0
    assert rep.not_applicable == 0
    assert rep.passed == 26


def test_iom_suite_passes_on_e5():
    rep = run_suite(E5, "iom")
    assert (rep.passed, rep.failed, rep.not_applicable) == (32, 0, 0)


def test_qw_suite_on_e5_is_not_applicable():
    rep = run_suite(E5, "qw")
    assert rep.passed == 0 and rep.failed == 0
    assert rep.not_applicable == 29
    assert {r.missing_class for r in rep.reports} == {"QW"}


def test_qw_suite_passes_on_b2():
    rep = run_suite(B2, "qw")
    assert (rep.passed, rep.failed) == (29, 0)


def test_every_applicable_law_holds_on_census5(census5):
    for alg in census5:
        rep = run_suite(alg, "all")
        assert rep.failures == [], (alg, rep.failures)


def test_qw_laws_fail_somewhere_on_e5():
    # QW-only laws are genuinely stronger: at least one has a counterexample on E5
    broken = [law for law in suite_laws("qw") if find_counterexample(E5, law) is not None]
    assert broken


def test_counterexample_for_false_law():
    bogus = Law("X.1", "involutive", "x (.) y = x", lambda o, x, y: o.prod(x, y) == x)
    w = find_counterexample(E5, bogus)
    assert w == (1, 0)  # a (.) 0 = 0 != a
    rep = check_law(E5, bogus, classify(E5))
    assert rep.status == "fail" and rep.witness == (1, 0)


def test_conditional_law_vacuous_pairs_ignored():
    law = Law(
        "X.2",
        "involutive",
        "x <= y implies x (.) y* = 0",
        lambda o, x, y: o.prod(x, o.st(y)) == o.zero,
        hypothesis=lambda o, x, y: o.le(x, y),
    )
    assert law.kind == "conditional"
    assert law.arity == 2
    assert find_counterexample(E5, law) is None


def test_not_applicable_names_class():
    law = get_law("P2.4.1")
    rep = check_law(E5, law)
    assert rep.status == "not-applicable"
    assert rep.missing_class == "QW"

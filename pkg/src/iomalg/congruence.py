"""Congruences induced by deductive systems and the quotients they define."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .algebra import ConsistencyError, FiniteAlgebra
from .filters import (
    ElementSubset,
    SubsetLike,
    Verdict,
    _filter_definition,
    _is_iom,
    as_subset,
    enumerate_subfamilies,
    is_commutative_ds,
    is_ds,
)


class CongruenceError(ValueError):
    """A precondition (DS argument, partition shape, congruence) is not met."""


@dataclass(frozen=True)
class Partition:
    """Class index per element, numbered densely by first occurrence."""

    classes: tuple[int, ...]

    def __post_init__(self):
        seen = -1
        for c in self.classes:
            if c > seen + 1 or c < 0:
                raise CongruenceError("class indices must be dense and numbered by first occurrence")
            seen = max(seen, c)

    @classmethod
    def from_labels(cls, labels: Sequence) -> "Partition":
        """Renumber arbitrary hashable labels into the dense form."""
        ids: dict = {}
        return cls(tuple(ids.setdefault(lab, len(ids)) for lab in labels))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        label = [None] * n
        for k, block in enumerate(blocks):
            for x in block:
                if not 0 <= x < n:
                    raise CongruenceError(f"element index {x} out of range")
                if label[x] is not None:
                    raise CongruenceError(f"element {x} occurs in two blocks")
                label[x] = k
        if None in label:
            raise CongruenceError(f"element {label.index(None)} is in no block")
        return cls.from_labels(label)

    @property
    def n(self) -> int:
        return len(self.classes)

    @property
    def count(self) -> int:
        return max(self.classes, default=-1) + 1

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.count)]
        for x, c in enumerate(self.classes):
            out[c].append(x)
        return tuple(tuple(b) for b in out)

    def same(self, x: int, y: int) -> bool:
        return self.classes[x] == self.classes[y]


def _require_ds(alg: FiniteAlgebra, f: SubsetLike, allow_filter: bool) -> ElementSubset:
    f = as_subset(alg, f)
    if allow_filter:
        v = _filter_definition(alg, f)
        if not v:
            raise CongruenceError(f"not a filter ({v.reason} fails at {v.witness})")
        return f
    v = is_ds(alg, f)
    if not v:
        raise CongruenceError(f"not a deductive system ({v.reason} fails at {v.witness})")
    return f


def _related_a(alg, f: ElementSubset, x: int, y: int) -> bool:
    lq, a = alg.derived.leqQ, alg.arrow
    return any(
        lq[x][g] and lq[y][g] and a[g][x] in f and a[g][y] in f for g in alg.elements
    )


def _related_b(alg, f: ElementSubset, x: int, y: int) -> bool:
    lq, a = alg.derived.leqQ, alg.arrow
    return any(
        lq[x][f1] and lq[y][f2] and a[f1][x] == a[f2][y] for f1 in f for f2 in f
    )


def _related_c(alg, f: ElementSubset, x: int, y: int) -> bool:
    lq, a = alg.derived.leqQ, alg.arrow
    return any(lq[x][a[f2][y]] for f2 in f) and any(lq[y][a[f1][x]] for f1 in f)


def related(
    alg: FiniteAlgebra, f: SubsetLike, x: int, y: int, allow_filter: bool = False
) -> bool:
    """x and y lie below a common g whose arrows into x and y both land in F.

    For a deductive system the two alternative characterisations are evaluated
    too and must agree.  ``allow_filter`` accepts a mere filter and skips that
    check.
    """
    f = _require_ds(alg, f, allow_filter)
    return _related(alg, f, x, y, check=not allow_filter)


def _related(alg, f: ElementSubset, x: int, y: int, check: bool) -> bool:
    r = _related_a(alg, f, x, y)
    if check:
        if _related_b(alg, f, x, y) != r:
            raise ConsistencyError("relation: definition vs equal-arrow characterisation", (x, y))
        if _related_c(alg, f, x, y) != r:
            raise ConsistencyError("relation: definition vs bound characterisation", (x, y))
    return r


def relation_matrix(
    alg: FiniteAlgebra, f: SubsetLike, allow_filter: bool = False
) -> tuple[tuple[bool, ...], ...]:
    f = _require_ds(alg, f, allow_filter)
    rng = alg.elements
    return tuple(tuple(_related(alg, f, x, y, not allow_filter) for y in rng) for x in rng)


def _equivalence_failure(rel) -> Optional[tuple[str, tuple[int, ...]]]:
    n = len(rel)
    for x in range(n):
        if not rel[x][x]:
            return "reflexivity", (x,)
    for x in range(n):
        for y in range(n):
            if rel[x][y] and not rel[y][x]:
                return "symmetry", (x, y)
    for x in range(n):
        for y in range(n):
            if not rel[x][y]:
                continue
            for z in range(n):
                if rel[y][z] and not rel[x][z]:
                    return "transitivity", (x, y, z)
    return None


def _binary_failure(table, same, n) -> Optional[tuple[int, int, int, int]]:
    """First (x, y, u, v) with x~y, u~v but table[x][u] !~ table[y][v]."""
    for x in range(n):
        for y in range(n):
            if not same(x, y):
                continue
            for u in range(n):
                for v in range(n):
                    if same(u, v) and not same(table[x][u], table[y][v]):
                        return (x, y, u, v)
    return None


def _compatibility_failures(alg: FiniteAlgebra, same) -> Optional[tuple[str, tuple[int, ...]]]:
    n = alg.n
    t = alg.derived
    for x in range(n):
        for y in range(n):
            if same(x, y) and not same(t.star[x], t.star[y]):
                return "compatibility with *", (x, y)
    for name, table in (
        ("compatibility with (.)", t.odot),
        ("compatibility with ->", t.arrow),
        ("compatibility with ⊔", t.sqcup),
        ("compatibility with ⊓", t.sqcap),
    ):
        w = _binary_failure(table, same, n)
        if w:
            return name, w
    return None


def congruence_from_ds(
    alg: FiniteAlgebra, f: SubsetLike, allow_filter: bool = False
) -> Partition:
    """Partition of the universe into classes of the relation induced by F.

    Equivalence and compatibility with *, (.), ->, ⊔ and ⊓ are verified before
    returning; a failure raises ConsistencyError naming the property.
    """
    f = _require_ds(alg, f, allow_filter)
    alg.derived  # involutive, or InvolutionError
    rel = relation_matrix(alg, f, allow_filter)
    fail = _equivalence_failure(rel)
    if fail:
        raise ConsistencyError(f"equivalence: {fail[0]}", fail[1])
    # first related element is a canonical label for each class
    part = Partition.from_labels([row.index(True) for row in rel])
    fail = _compatibility_failures(alg, part.same)
    if fail:
        raise ConsistencyError(fail[0], fail[1])
    return part


def _as_partition(alg: FiniteAlgebra, p) -> Partition:
    if not isinstance(p, Partition):
        p = Partition.from_blocks(alg.n, p)
    if p.n != alg.n:
        raise CongruenceError(f"partition covers {p.n} elements, algebra has {alg.n}")
    return p


def is_congruence(alg: FiniteAlgebra, p) -> Verdict:
    """Compatibility with -> over all quadruples; witness is the first failing (x, y, u, v)."""
    p = _as_partition(alg, p)
    w = _binary_failure(alg.arrow, p.same, alg.n)
    return Verdict(False, w, "->") if w else Verdict(True)


def ds_from_congruence(alg: FiniteAlgebra, p) -> ElementSubset:
    """The class of 1, checked to be a deductive system."""
    p = _as_partition(alg, p)
    v = is_congruence(alg, p)
    if not v:
        raise CongruenceError(f"not a congruence (fails at {v.witness})")
    cls = p.classes[alg.one]
    f = ElementSubset.of(alg.n, (x for x in alg.elements if p.classes[x] == cls))
    if alg.is_involutive and not is_ds(alg, f):
        raise ConsistencyError("class of 1 under a congruence is a deductive system", f.members)
    return f


@dataclass(frozen=True)
class QuotientResult:
    algebra: FiniteAlgebra
    partition: Partition
    projection: tuple[int, ...]
    one_class: int
    zero_class: Optional[int]
    representatives: tuple[int, ...]
    is_iom: bool
    unsupported: bool  # source algebra not IOM


def class_name(alg: FiniteAlgebra, block: Iterable[int]) -> str:
    return "{" + ",".join(alg.names[x] for x in sorted(block)) + "}"


def quotient_by_partition(alg: FiniteAlgebra, p: Partition) -> QuotientResult:
    """Quotient table via least-index representatives; representative independence verified."""
    from .classify import classify

    blocks = p.blocks()
    reps = tuple(b[0] for b in blocks)
    proj = p.classes
    a = alg.arrow
    rows = tuple(tuple(proj[a[r][s]] for s in reps) for r in reps)
    for x in alg.elements:
        for y in alg.elements:
            if proj[a[x][y]] != rows[proj[x]][proj[y]]:
                raise ConsistencyError("quotient arrow depends on representatives", (x, y))
    names = tuple(class_name(alg, b) for b in blocks)
    zero = None if alg.zero is None else proj[alg.zero]
    q = FiniteAlgebra(names, rows, proj[alg.one], zero)
    source_iom = _is_iom(alg)
    q_iom = classify(q).is_iom if q.is_involutive else False
    if source_iom and not q_iom:
        raise ConsistencyError("quotient of an IOM algebra is IOM", ())
    return QuotientResult(
        algebra=q,
        partition=p,
        projection=proj,
        one_class=proj[alg.one],
        zero_class=zero,
        representatives=reps,
        is_iom=q_iom,
        unsupported=not source_iom,
    )


def quotient(alg: FiniteAlgebra, f: SubsetLike) -> QuotientResult:
    """X/F for a deductive system F."""
    return quotient_by_partition(alg, congruence_from_ds(alg, f))


def check_commutativity_transfer(alg: FiniteAlgebra, f: SubsetLike) -> tuple[bool, bool]:
    """(F commutative in X, every DS of X/F commutative); the two must agree on IOM input."""
    f = _require_ds(alg, f, False)
    left = is_commutative_ds(alg, f).holds
    q = quotient(alg, f).algebra
    right = all(is_commutative_ds(q, d).holds for d in enumerate_subfamilies(q, "ds"))
    if left != right and _is_iom(alg):
        raise ConsistencyError("F commutative <=> every DS of X/F commutative", f.members)
    return left, right

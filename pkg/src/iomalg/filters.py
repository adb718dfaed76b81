"""Filters and deductive systems of involutive BE algebras, plus Bosbach states."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .algebra import ConsistencyError, FiniteAlgebra

MAX_ENUMERATION = 24
MAX_SCAN = 10


class FilterError(ValueError):
    """Precondition on a subset (filter, DS) not met, or capacity exceeded."""


@dataclass(frozen=True, order=True)
class ElementSubset:
    """A subset of the universe as a bitmask over element indices."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise FilterError(f"mask {self.mask:#x} has bits outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "ElementSubset":
        mask = 0
        for x in members:
            if not 0 <= x < n:
                raise FilterError(f"element index {x} out of range")
            mask |= 1 << x
        return cls(mask, n)

    @classmethod
    def full(cls, n: int) -> "ElementSubset":
        return cls((1 << n) - 1, n)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __iter__(self):
        return (x for x in range(self.n) if self.mask >> x & 1)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def names(self, alg: FiniteAlgebra) -> tuple[str, ...]:
        return tuple(alg.names[x] for x in self)

    def sort_key(self) -> tuple[int, int]:
        return (len(self), self.mask)


SubsetLike = Union[ElementSubset, Iterable[int]]


def as_subset(alg: FiniteAlgebra, s: SubsetLike) -> ElementSubset:
    if isinstance(s, ElementSubset):
        if s.n != alg.n:
            raise FilterError("subset belongs to an algebra of another size")
        return s
    return ElementSubset.of(alg.n, s)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate check; ``reason`` names the failed condition."""

    holds: bool
    witness: Optional[tuple[int, ...]] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds


_OK = Verdict(True)


def _first_pair(alg, xs, ys, bad) -> Optional[tuple[int, int]]:
    for x in xs:
        for y in ys:
            if bad(x, y):
                return (x, y)
    return None


def _f1(alg, s: ElementSubset) -> Optional[tuple[int, int]]:
    od = alg.derived.odot
    return _first_pair(alg, s, s, lambda x, y: od[x][y] not in s)


def _fail(pair, reason) -> Verdict:
    return Verdict(False, pair, reason)


def _filter_definition(alg: FiniteAlgebra, s: ElementSubset) -> Verdict:
    if not s.mask:
        return Verdict(False, (), "empty")
    w = _f1(alg, s)
    if w:
        return _fail(w, "F1")
    lq = alg.derived.leqQ
    w = _first_pair(alg, s, alg.elements, lambda x, y: lq[x][y] and y not in s)
    return _fail(w, "F2") if w else _OK


def _filter_by_f3(alg: FiniteAlgebra, s: ElementSubset) -> bool:
    if not s.mask or _f1(alg, s):
        return False
    a = alg.arrow
    return not _first_pair(alg, s, alg.elements, lambda x, y: a[y][x] not in s)


def is_filter(alg: FiniteAlgebra, s: SubsetLike) -> Verdict:
    """Nonempty, closed under (.) and upward closed under <=Q.

    On IOM algebras the (F1)+(F3) characterisation is evaluated as well and
    must agree.
    """
    s = as_subset(alg, s)
    verdict = _filter_definition(alg, s)
    if _is_iom(alg) and _filter_by_f3(alg, s) != verdict.holds:
        raise ConsistencyError("filter <=> (F1)+(F3)", s.members)
    return verdict


def _ds_definition(alg: FiniteAlgebra, s: ElementSubset) -> Verdict:
    if alg.one not in s:
        return Verdict(False, (alg.one,), "DS1")
    a = alg.arrow
    w = _first_pair(alg, s, alg.elements, lambda x, y: a[x][y] in s and y not in s)
    return _fail(w, "DS2") if w else _OK


def _ds_by_f4(alg: FiniteAlgebra, s: ElementSubset) -> bool:
    if not s.mask or _f1(alg, s):
        return False
    le = alg.derived.leq
    return not _first_pair(alg, s, alg.elements, lambda x, y: le[x][y] and y not in s)


def _ds_by_f5(alg: FiniteAlgebra, s: ElementSubset) -> bool:
    if not s.mask or _f1(alg, s):
        return False
    cup = alg.derived.sqcup
    return not _first_pair(alg, s, alg.elements, lambda x, y: cup[x][y] not in s)


def is_ds(alg: FiniteAlgebra, s: SubsetLike) -> Verdict:
    """1 in S and closed under modus ponens; on IOM algebras cross-checked
    against the (F1)+(F4) and (F1)+(F5) characterisations."""
    s = as_subset(alg, s)
    verdict = _ds_definition(alg, s)
    if _is_iom(alg):
        if _ds_by_f4(alg, s) != verdict.holds:
            raise ConsistencyError("DS <=> (F1)+(F4)", s.members)
        if _ds_by_f5(alg, s) != verdict.holds:
            raise ConsistencyError("DS <=> (F1)+(F5)", s.members)
    return verdict


@functools.lru_cache(maxsize=4096)
def _is_iom(alg: FiniteAlgebra) -> bool:
    from .classify import classify

    return classify(alg).is_iom


# -- closures and enumeration -------------------------------------------------


def filter_closure(alg: FiniteAlgebra, mask: int) -> int:
    """Least set containing ``mask`` closed under (F1) and (F2); 0 stays 0."""
    if not mask:
        return 0
    t = alg.derived
    od, up = t.odot, _up_masks(alg)
    rng = alg.elements
    changed = True
    while changed:
        changed = False
        members = [x for x in rng if mask >> x & 1]
        new = mask
        for x in members:
            new |= up[x]
            for y in members:
                new |= 1 << od[x][y]
        if new != mask:
            mask, changed = new, True
    return mask


def ds_closure(alg: FiniteAlgebra, mask: int) -> int:
    """Least deductive system containing ``mask``."""
    a = alg.arrow
    mask |= 1 << alg.one
    rng = alg.elements
    changed = True
    while changed:
        changed = False
        for x in rng:
            if not mask >> x & 1:
                continue
            for y in rng:
                if mask >> a[x][y] & 1 and not mask >> y & 1:
                    mask |= 1 << y
                    changed = True
    return mask


@functools.lru_cache(maxsize=4096)
def _up_masks(alg: FiniteAlgebra) -> tuple[int, ...]:
    lq = alg.derived.leqQ
    return tuple(
        sum(1 << y for y in alg.elements if lq[x][y]) for x in alg.elements
    )


def _next_closures(n: int, closure) -> list[int]:
    """All closed sets of a closure operator on n points (Ganter's NextClosure)."""
    out = []
    current = closure(0)
    out.append(current)
    full = (1 << n) - 1
    while current != full:
        for i in reversed(range(n)):
            bit = 1 << i
            if current & bit:
                continue
            low = bit - 1
            candidate = closure((current & low) | bit)
            if candidate & low == current & low:
                current = candidate
                break
        else:  # pragma: no cover - unreachable for a closure operator
            break
        out.append(current)
    return out


def enumerate_subfamilies(alg: FiniteAlgebra, kind: str = "filter") -> list[ElementSubset]:
    """All filters (kind='filter') or deductive systems (kind='ds'), sorted by size then mask."""
    if alg.n > MAX_ENUMERATION:
        raise FilterError(f"enumeration limited to n <= {MAX_ENUMERATION}, got {alg.n}")
    if kind == "filter":
        closed = _next_closures(alg.n, lambda m: filter_closure(alg, m))
    elif kind == "ds":
        closed = _next_closures(alg.n, lambda m: ds_closure(alg, m))
    else:
        raise ValueError(f"kind must be 'filter' or 'ds', got {kind!r}")
    subsets = [ElementSubset(m, alg.n) for m in closed if m]
    return sorted(subsets, key=ElementSubset.sort_key)


@functools.lru_cache(maxsize=1024)
def _filters_by_scan(alg: FiniteAlgebra) -> tuple[int, ...]:
    return tuple(
        m for m in range(1, 1 << alg.n) if _filter_definition(alg, ElementSubset(m, alg.n)).holds
    )


# -- generated filters --------------------------------------------------------


def _products(alg: FiniteAlgebra, gens: Sequence[int]) -> set[int]:
    """All products y1 (.) ... (.) yk of generators (k >= 1), via per-generator powers."""
    t = alg.derived
    prods: set[int] = set()
    for g in gens:
        powers = set(t.power_cycle(g))
        prods = prods | powers | {t.odot[p][q] for p in prods for q in powers}
    return prods


def _up_q(alg: FiniteAlgebra, xs: Iterable[int]) -> int:
    up = _up_masks(alg)
    mask = 0
    for x in xs:
        mask |= up[x]
    return mask


def generated_filter(
    alg: FiniteAlgebra,
    generators: Optional[SubsetLike] = None,
    base: Optional[SubsetLike] = None,
    adjoin: Optional[int] = None,
    cross_check: bool = True,
) -> ElementSubset:
    """Smallest filter containing the generators, or [F u {x}] for base=F, adjoin=x."""
    if base is not None:
        if adjoin is None:
            raise FilterError("base filter given without an element to adjoin")
        base = as_subset(alg, base)
        if not _filter_definition(alg, base).holds:
            raise FilterError("base is not a filter")
        gens = ElementSubset(base.mask | 1 << adjoin, alg.n)
    else:
        if generators is None:
            raise FilterError("no generators given")
        gens = as_subset(alg, generators)
    if not gens.mask:
        raise FilterError("generator set is empty")
    result = filter_closure(alg, gens.mask)

    if cross_check and _is_iom(alg):
        formula = _up_q(alg, _products(alg, gens.members))
        if formula != result:
            raise ConsistencyError("generated filter = up-set of generator products", gens.members)
        if base is not None:
            t = alg.derived
            fx = _up_q(alg, {t.odot[f][p] for f in base for p in t.power_cycle(adjoin)})
            if fx != result:
                raise ConsistencyError("F(x) = up-set of f (.) x^n", (*base.members, adjoin))
        if alg.n <= MAX_SCAN:
            meet = (1 << alg.n) - 1
            for m in _filters_by_scan(alg):
                if m & gens.mask == gens.mask:
                    meet &= m
            if meet != result:
                raise ConsistencyError("generated filter = intersection of filters", gens.members)
    return ElementSubset(result, alg.n)


# -- classification of filters ------------------------------------------------


@dataclass(frozen=True)
class FilterClassification:
    is_filter: bool
    is_ds: bool
    is_proper: bool
    is_maximal: bool
    is_strongly_maximal: bool
    is_commutative: bool
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)


def _maximal_by_products(alg: FiniteAlgebra, f: ElementSubset) -> bool:
    """Proper, and every x outside F has f (.) x^n = 0 for some f in F, n >= 1."""
    if f.is_full():
        return False
    t = alg.derived
    z = alg.zero
    for x in alg.elements:
        if x in f:
            continue
        if not any(t.odot[g][p] == z for g in f for p in t.power_cycle(x)):
            return False
    return True


def _strongly_maximal(alg: FiniteAlgebra, f: ElementSubset) -> Optional[tuple[int, ...]]:
    """None if strongly maximal, else a witness ((), for F = X)."""
    if f.is_full():
        return ()
    t = alg.derived
    for x in alg.elements:
        if x not in f and not any(t.star[p] in f for p in t.power_cycle(x)):
            return (x,)
    return None


def _cf_witness(alg: FiniteAlgebra, f: ElementSubset) -> Optional[tuple[int, int]]:
    a, cup = alg.arrow, alg.derived.sqcup
    return _first_pair(
        alg, alg.elements, alg.elements, lambda x, y: a[y][x] in f and a[cup[x][y]][x] not in f
    )


def _maximal_by_definition(alg: FiniteAlgebra, f: ElementSubset) -> Optional[tuple[int, ...]]:
    """None if maximal, else the members of a proper filter strictly above F (() if F = X)."""
    if f.is_full():
        return ()
    if alg.n <= MAX_ENUMERATION:
        for g in enumerate_subfamilies(alg, "filter"):
            if g.mask != f.mask and g.mask & f.mask == f.mask and not g.is_full():
                return g.members
        return None
    full = (1 << alg.n) - 1
    for x in alg.elements:
        if x not in f:
            g = filter_closure(alg, f.mask | 1 << x)
            if g != full:
                return ElementSubset(g, alg.n).members
    return None


def classify_filter(alg: FiniteAlgebra, f: SubsetLike) -> FilterClassification:
    f = as_subset(alg, f)
    fv = is_filter(alg, f)
    if not fv:
        raise FilterError(f"not a filter ({fv.reason} fails at {fv.witness})")
    witnesses: dict[str, tuple[int, ...]] = {}
    dv = is_ds(alg, f)
    if not dv:
        witnesses["is_ds"] = dv.witness
    proper = not f.is_full()
    if not proper:
        witnesses["is_proper"] = ()
    w = _maximal_by_definition(alg, f)
    maximal = w is None
    if w is not None:
        witnesses["is_maximal"] = w
    if _is_iom(alg) and _maximal_by_products(alg, f) != maximal:
        raise ConsistencyError("maximal <=> f (.) x^n = 0 characterisation", f.members)
    w = _strongly_maximal(alg, f)
    if w is not None:
        witnesses["is_strongly_maximal"] = w
    w_cf = _cf_witness(alg, f)
    if w_cf is not None:
        witnesses["is_commutative"] = w_cf
    return FilterClassification(
        is_filter=True,
        is_ds=dv.holds,
        is_proper=proper,
        is_maximal=maximal,
        is_strongly_maximal=w is None,
        is_commutative=w_cf is None,
        witnesses=witnesses,
    )


def _commutative_by_triples(alg: FiniteAlgebra, f: ElementSubset) -> bool:
    if alg.one not in f:
        return False
    a, cup = alg.arrow, alg.derived.sqcup
    rng = alg.elements
    for x in rng:
        for y in rng:
            target_in = a[cup[x][y]][x] in f
            if target_in:
                continue
            yx = a[y][x]
            if any(a[z][yx] in f for z in f):
                return False
    return True


def is_commutative_ds(alg: FiniteAlgebra, f: SubsetLike) -> Verdict:
    """(CF): y->x in F implies (x⊔y)->x in F, for a deductive system F."""
    f = as_subset(alg, f)
    dv = is_ds(alg, f)
    if not dv:
        raise FilterError(f"not a deductive system ({dv.reason} fails at {dv.witness})")
    w = _cf_witness(alg, f)
    if _is_iom(alg) and _commutative_by_triples(alg, f) != (w is None):
        raise ConsistencyError("commutative DS <=> triple characterisation", f.members)
    return _OK if w is None else Verdict(False, w, "CF")


# -- Bosbach states -----------------------------------------------------------


@dataclass(frozen=True)
class BosbachResult:
    accepted: bool
    failure: str = ""  # "range", "bs1" or "bs2"
    witness: Optional[tuple[int, ...]] = None
    kernel: Optional[ElementSubset] = None
    kernel_is_commutative_ds: Optional[bool] = None


def _state_values(alg: FiniteAlgebra, s) -> list[Fraction]:
    if isinstance(s, Mapping):
        missing = [x for x in alg.elements if x not in s]
        if missing:
            raise FilterError(f"state misses element {alg.names[missing[0]]!r}")
        values = [s[x] for x in alg.elements]
    else:
        values = list(s)
        if len(values) != alg.n:
            raise FilterError(f"state has {len(values)} values, expected {alg.n}")
    out = []
    for v in values:
        if isinstance(v, float):
            raise TypeError("state values must be exact rationals, not floats")
        out.append(Fraction(v))
    return out


def bs2_failures(alg: FiniteAlgebra, s) -> list[tuple[int, int]]:
    """Every ordered pair violating s(x) + s(x->y) = s(y) + s(y->x)."""
    v = _state_values(alg, s)
    a = alg.arrow
    return [
        (x, y)
        for x in alg.elements
        for y in alg.elements
        if v[x] + v[a[x][y]] != v[y] + v[a[y][x]]
    ]


def verify_bosbach(alg: FiniteAlgebra, s) -> BosbachResult:
    """Check a [0,1]-valued state; the bs2 witness is the first pair (x, y) with y < x."""
    v = _state_values(alg, s)
    for x in alg.elements:
        if not 0 <= v[x] <= 1:
            return BosbachResult(False, "range", (x,))
    if alg.zero is None:
        raise FilterError("Bosbach states need a zero")
    if v[alg.zero] != 0:
        return BosbachResult(False, "bs1", (alg.zero,))
    if v[alg.one] != 1:
        return BosbachResult(False, "bs1", (alg.one,))
    a = alg.arrow
    # bs2 is symmetric in (x, y) and trivial on the diagonal
    for x in alg.elements:
        for y in range(x):
            if v[x] + v[a[x][y]] != v[y] + v[a[y][x]]:
                return BosbachResult(False, "bs2", (x, y))
    kernel = ElementSubset.of(alg.n, (x for x in alg.elements if v[x] == 1))
    commutative = None
    if alg.is_involutive:
        commutative = is_ds(alg, kernel).holds and _cf_witness(alg, kernel) is None
        if _is_iom(alg) and not commutative:
            raise ConsistencyError("kernel of a Bosbach state is a commutative DS", kernel.members)
    return BosbachResult(True, kernel=kernel, kernel_is_commutative_ds=commutative)

"""Isomorphism-reduced enumeration of small bounded involutive BE algebras."""

from __future__ import annotations

import itertools
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .algebra import FiniteAlgebra
from .classify import ClassificationReport, classify

MAX_CANONICAL = 8
MAX_EXHAUSTIVE = 5

UNKNOWN = -1


class SearchError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Lexicographically least relabelled table.

    Zero is moved to index 0 and one to index n-1 (a single element is both);
    the remaining elements are permuted freely.
    """

    n: int
    has_zero: bool
    table: tuple[int, ...]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(self.table[i * n : (i + 1) * n] for i in range(n))


def standard_names(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("1",)
    middle = list(string.ascii_lowercase) + [f"e{i}" for i in range(26, 64)]
    return ("0", *middle[: n - 2], "1")


def canonicalize(alg: FiniteAlgebra) -> CanonicalForm:
    n = alg.n
    if n > MAX_CANONICAL:
        raise SearchError(f"canonical form limited to n <= {MAX_CANONICAL}, got {n}")
    fixed = {alg.one: n - 1}
    if alg.zero is not None:
        fixed[alg.zero] = 0
    free_old = [i for i in alg.elements if i not in fixed]
    free_new = [i for i in range(n) if i not in fixed.values()]
    best = None
    for perm in itertools.permutations(free_new):
        p = [0] * n
        for old, new in fixed.items():
            p[old] = new
        for old, new in zip(free_old, perm):
            p[old] = new
        inv = [0] * n
        for old in range(n):
            inv[p[old]] = old
        table = tuple(p[alg.arrow[inv[i]][inv[j]]] for i in range(n) for j in range(n))
        if best is None or table < best:
            best = table
    return CanonicalForm(n, alg.zero is not None, best)


def from_canonical(form: CanonicalForm) -> FiniteAlgebra:
    n = form.n
    return FiniteAlgebra(standard_names(n), form.rows(), n - 1, 0 if form.has_zero else None)


# -- backtracking over arrow tables -------------------------------------------


def _involutions(items: list[int]) -> Iterator[dict[int, int]]:
    """All involutive permutations of ``items`` (as dicts)."""
    if not items:
        yield {}
        return
    first, rest = items[0], items[1:]
    for sub in _involutions(rest):
        yield {first: first, **sub}
    for k, partner in enumerate(rest):
        others = rest[:k] + rest[k + 1 :]
        for sub in _involutions(others):
            yield {first: partner, partner: first, **sub}


def star_choices(n: int) -> list[tuple[int, ...]]:
    """Candidate x -> 0 columns: involutions swapping 0 and 1 (= n-1)."""
    if n == 1:
        return [(0,)]
    out = []
    for inv in _involutions(list(range(1, n - 1))):
        star = [0] * n
        star[0], star[n - 1] = n - 1, 0
        for k, v in inv.items():
            star[k] = v
        out.append(tuple(star))
    return out


class _Table:
    def __init__(self, n: int, star: tuple[int, ...]):
        self.n = n
        self.star = star
        one = n - 1
        t = [[UNKNOWN] * n for _ in range(n)]
        for x in range(n):
            t[x][x] = one
            t[x][one] = one
            t[one][x] = x
            t[0][x] = one
            t[x][0] = star[x]
        if n == 1:
            t[0][0] = 0
        self.t = t
        self.free = [
            (x, y) for x in range(n) for y in range(n) if t[x][y] == UNKNOWN
        ]

    def get(self, x: int, y: int) -> int:
        if x == UNKNOWN or y == UNKNOWN:
            return UNKNOWN
        return self.t[x][y]

    def be4_ok(self) -> bool:
        g, rng = self.get, range(self.n)
        for x in rng:
            for y in rng:
                for z in rng:
                    left = g(x, g(y, z))
                    if left == UNKNOWN:
                        continue
                    right = g(y, g(x, z))
                    if right != UNKNOWN and left != right:
                        return False
        return True

    def iom_ok(self) -> bool:
        """x ⊓ (y -> x) = x wherever the partial table determines it."""
        g, s, rng = self.get, self.star, range(self.n)
        for x in rng:
            for y in rng:
                u = g(y, x)
                if u == UNKNOWN:
                    continue
                w = g(g(s[x], s[u]), s[u])
                if w != UNKNOWN and s[w] != x:
                    return False
        return True


def _search_subtree(n: int, star: tuple[int, ...], iom_cut: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    tab = _Table(n, star)
    t = tab.t
    free = tab.free

    def assign(pos: int):
        while pos < len(free) and t[free[pos][0]][free[pos][1]] != UNKNOWN:
            pos += 1
        if pos == len(free):
            yield tuple(tuple(row) for row in t)
            return
        x, y = free[pos]
        # x -> y = y* -> x* holds in every involutive BE algebra
        px, py = star[y], star[x]
        for v in range(n):
            t[x][y] = v
            paired = t[px][py] == UNKNOWN
            if paired:
                t[px][py] = v
            elif t[px][py] != v:
                t[x][y] = UNKNOWN
                continue
            if tab.be4_ok() and (not iom_cut or tab.iom_ok()):
                yield from assign(pos + 1)
            if paired:
                t[px][py] = UNKNOWN
            t[x][y] = UNKNOWN

    yield from assign(0)


def _subtree_forms(args) -> list[CanonicalForm]:
    n, star, iom_cut = args
    forms = set()
    for rows in _search_subtree(n, star, iom_cut):
        alg = FiniteAlgebra(standard_names(n), rows, n - 1, 0)
        forms.add(canonicalize(alg))
    return sorted(forms)


def enumerate_models(
    n: int,
    iom_cut: bool = False,
    exhaustive: bool = True,
    workers: int = 1,
) -> Iterator[FiniteAlgebra]:
    """Bounded involutive BE algebras of size n, one per isomorphism class.

    Exhaustive mode yields in canonical-form order.  Non-exhaustive mode
    streams in search order and may be cut short by the caller.
    """
    if n < 1:
        raise SearchError("size must be at least 1")
    if exhaustive and n > MAX_EXHAUSTIVE:
        raise SearchError(f"exhaustive enumeration limited to n <= {MAX_EXHAUSTIVE}, got {n}")
    if n > MAX_CANONICAL:
        raise SearchError(f"search limited to n <= {MAX_CANONICAL}, got {n}")
    tasks = [(n, star, iom_cut) for star in star_choices(n)]
    if exhaustive:
        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_subtree_forms, tasks))
        else:
            parts = [_subtree_forms(t) for t in tasks]
        for form in sorted(set().union(*parts)):
            yield from_canonical(form)
        return
    seen = set()
    for _, star, cut in tasks:
        for rows in _search_subtree(n, star, cut):
            form = canonicalize(FiniteAlgebra(standard_names(n), rows, n - 1, 0))
            if form not in seen:
                seen.add(form)
                yield from_canonical(form)


@dataclass(frozen=True)
class ModelSpec:
    size: int
    require: frozenset[str] = frozenset()
    forbid: frozenset[str] = frozenset()
    limit: Optional[int] = None
    exhaustive: bool = True

    def __post_init__(self):
        object.__setattr__(self, "require", frozenset(f.lower() for f in self.require))
        object.__setattr__(self, "forbid", frozenset(f.lower() for f in self.forbid))
        if self.size < 1:
            raise SearchError("size must be at least 1")
        if self.require & self.forbid:
            raise SearchError(f"flags both required and forbidden: {sorted(self.require & self.forbid)}")
        if self.limit is not None and self.limit < 0:
            raise SearchError("limit must be non-negative")


@dataclass
class SearchResult:
    models: list[FiniteAlgebra]
    reports: list[ClassificationReport]
    census: dict[str, int] = field(default_factory=dict)
    discrepancies: list[tuple[int, str]] = field(default_factory=list)


CENSUS_FLAGS = ("iom", "qw", "om", "prel", "iom2", "qw1", "qw2")


def find_models(spec: ModelSpec, iom_cut: bool = True, workers: int = 1) -> SearchResult:
    """Models of the given size satisfying every required flag and no forbidden one.

    The early IOM cut only applies when 'iom' is required; census counts are
    then taken over the IOM models only.
    """
    for flag in spec.require | spec.forbid:
        classify_flag_check(flag)
    cut = iom_cut and "iom" in spec.require
    census = {"enumerated": 0, **{f: 0 for f in CENSUS_FLAGS}, "matched": 0}
    models, reports, discrepancies = [], [], []
    stream = enumerate_models(spec.size, iom_cut=cut, exhaustive=spec.exhaustive, workers=workers)
    for alg in stream:
        rep = classify(alg)
        census["enumerated"] += 1
        for f in CENSUS_FLAGS:
            census[f] += rep.has(f)
        for d in rep.discrepancies:
            discrepancies.append((census["enumerated"] - 1, d))
        if all(rep.has(f) for f in spec.require) and not any(rep.has(f) for f in spec.forbid):
            census["matched"] += 1
            if spec.limit is None or len(models) < spec.limit:
                models.append(alg)
                reports.append(rep)
            elif not spec.exhaustive:
                break
    census["iom_cut"] = int(cut)
    return SearchResult(models, reports, census, discrepancies)


_KNOWN_FLAGS = None


def classify_flag_check(flag: str) -> None:
    """Raise SearchError for flags that classify() cannot answer."""
    global _KNOWN_FLAGS
    if _KNOWN_FLAGS is None:
        from .fixtures import B2

        rep = classify(B2)
        _KNOWN_FLAGS = {k[3:] for k in rep.labels} | {k.lower() for k in rep.results}
    if flag.lower() not in _KNOWN_FLAGS:
        raise SearchError(f"unknown class flag {flag!r}; known: {', '.join(sorted(_KNOWN_FLAGS))}")

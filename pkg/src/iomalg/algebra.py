"""Finite algebras (X, ->, 1[, 0]) given by an operation table, and their derived operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence, Union

MAX_ELEMENTS = 64

Table = tuple[tuple[int, ...], ...]


class AlgebraError(ValueError):
    """Structurally invalid algebra data."""


class InvolutionError(AlgebraError):
    """The algebra has no zero, or x** != x for some x."""

    def __init__(self, message: str, witness: Optional[int] = None):
        super().__init__(message)
        self.witness = witness


class ConsistencyError(RuntimeError):
    """Two routes that must agree on a finite algebra did not.

    ``source`` names the statement that was violated, ``witness`` holds the
    offending element indices.
    """

    def __init__(self, source: str, witness: tuple = (), message: str = ""):
        self.source = source
        self.witness = tuple(witness)
        super().__init__(message or f"{source} violated at {self.witness}")


def _valid_name(name: str) -> bool:
    return bool(name) and not any(ch.isspace() for ch in name) and "#" not in name


@dataclass(frozen=True)
class FiniteAlgebra:
    """An n-element algebra with arrow[x][y] = x -> y.

    Elements are the indices 0..n-1 in declaration order; ``names`` only
    matter for input and output.
    """

    names: tuple[str, ...]
    arrow: Table
    one: int
    zero: Optional[int] = None

    def __post_init__(self):
        n = len(self.names)
        if not 1 <= n <= MAX_ELEMENTS:
            raise AlgebraError(f"element count {n} outside 1..{MAX_ELEMENTS}")
        for name in self.names:
            if not isinstance(name, str) or not _valid_name(name):
                raise AlgebraError(f"invalid element name {name!r}")
        if len(set(self.names)) != n:
            dup = next(nm for nm in self.names if self.names.count(nm) > 1)
            raise AlgebraError(f"duplicate element name {dup!r}")
        if len(self.arrow) != n:
            raise AlgebraError(f"table has {len(self.arrow)} rows, expected {n}")
        for i, row in enumerate(self.arrow):
            if len(row) != n:
                raise AlgebraError(f"row {self.names[i]!r} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise AlgebraError(
                        f"entry {self.names[i]}->{self.names[j]} = {v!r} out of range"
                    )
        if not isinstance(self.one, int) or not 0 <= self.one < n:
            raise AlgebraError(f"one = {self.one!r} out of range")
        if self.zero is not None:
            if not isinstance(self.zero, int) or not 0 <= self.zero < n:
                raise AlgebraError(f"zero = {self.zero!r} out of range")
            if self.zero == self.one and n > 1:
                raise AlgebraError("zero and one coincide in a non-degenerate algebra")

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def elements(self) -> range:
        return range(len(self.names))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise AlgebraError(f"unknown element {name!r}") from None

    def imp(self, x: int, y: int) -> int:
        return self.arrow[x][y]

    @property
    def has_zero(self) -> bool:
        return self.zero is not None

    @cached_property
    def derived(self) -> "DerivedTables":
        return build_derived(self)

    @cached_property
    def involution_witness(self) -> Optional[int]:
        """First x with x** != x, or None. Requires a zero."""
        if self.zero is None:
            raise InvolutionError("algebra has no zero")
        a, z = self.arrow, self.zero
        for x in self.elements:
            if a[a[x][z]][z] != x:
                return x
        return None

    @property
    def is_involutive(self) -> bool:
        return self.zero is not None and self.involution_witness is None

    def render(self, xs: Sequence[int]) -> str:
        return ", ".join(self.names[x] for x in xs)


def validate(
    names: Sequence[str],
    rows: Sequence[Sequence[Union[int, str]]],
    one: Union[int, str],
    zero: Union[int, str, None] = None,
) -> FiniteAlgebra:
    """Build a FiniteAlgebra from names and rows given as names or indices."""
    names = tuple(names)
    lookup = {nm: i for i, nm in enumerate(names)}

    def resolve(v, what):
        if isinstance(v, str):
            if v not in lookup:
                raise AlgebraError(f"unknown element {v!r} in {what}")
            return lookup[v]
        return v

    if one is None:
        raise AlgebraError("missing designated one")
    table = tuple(
        tuple(resolve(v, f"row {i}") for v in row) for i, row in enumerate(rows)
    )
    return FiniteAlgebra(
        names,
        table,
        resolve(one, "one"),
        None if zero is None else resolve(zero, "zero"),
    )


@dataclass(frozen=True)
class DerivedTables:
    """Derived operations of an involutive algebra, all as total tables.

    star[x] = x -> 0
    sqcap[x][y] = ((x* -> y*) -> y*)*
    sqcup[x][y] = (x -> y) -> y
    odot[x][y] = (x -> y*)*
    oplus[x][y] = (x* (.) y*)*
    leq[x][y]  iff x -> y = 1
    leqQ[x][y] iff x = x sqcap y
    """

    arrow: Table
    one: int
    zero: int
    star: tuple[int, ...]
    sqcap: Table
    sqcup: Table
    odot: Table
    oplus: Table
    leq: tuple[tuple[bool, ...], ...]
    leqQ: tuple[tuple[bool, ...], ...] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.star)

    # Short accessors used when writing identities.
    def imp(self, x: int, y: int) -> int:
        return self.arrow[x][y]

    def st(self, x: int) -> int:
        return self.star[x]

    def cap(self, x: int, y: int) -> int:
        return self.sqcap[x][y]

    def cup(self, x: int, y: int) -> int:
        return self.sqcup[x][y]

    def prod(self, x: int, y: int) -> int:
        return self.odot[x][y]

    def sum(self, x: int, y: int) -> int:
        return self.oplus[x][y]

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def le_q(self, x: int, y: int) -> bool:
        return self.leqQ[x][y]

    def power(self, x: int, k: int) -> int:
        return odot_power(self, x, k)

    def power_cycle(self, x: int) -> tuple[int, ...]:
        """x, x^2, ... up to (excluding) the first repeated value."""
        seen: list[int] = []
        p = x
        while p not in seen:
            seen.append(p)
            p = self.odot[p][x]
        return tuple(seen)


def build_derived(alg: FiniteAlgebra) -> DerivedTables:
    if alg.zero is None:
        raise InvolutionError("derived operations need a zero")
    bad = alg.involution_witness
    if bad is not None:
        raise InvolutionError(
            f"not involutive: {alg.names[bad]}** != {alg.names[bad]}", witness=bad
        )
    a, z, one = alg.arrow, alg.zero, alg.one
    rng = alg.elements
    star = tuple(a[x][z] for x in rng)
    sqcup = tuple(tuple(a[a[x][y]][y] for y in rng) for x in rng)
    sqcap = tuple(
        tuple(star[a[a[star[x]][star[y]]][star[y]]] for y in rng) for x in rng
    )
    odot = tuple(tuple(star[a[x][star[y]]] for y in rng) for x in rng)
    oplus = tuple(tuple(star[odot[star[x]][star[y]]] for y in rng) for x in rng)
    leq = tuple(tuple(a[x][y] == one for y in rng) for x in rng)
    leqQ = tuple(tuple(sqcap[x][y] == x for y in rng) for x in rng)
    for x in rng:
        for y in rng:
            if star[odot[x][star[y]]] != a[x][y]:
                raise ConsistencyError("psi-phi round trip", (x, y))
    return DerivedTables(a, one, z, star, sqcap, sqcup, odot, oplus, leq, leqQ)


def odot_power(tables: Union[DerivedTables, FiniteAlgebra], x: int, k: int) -> int:
    """x^1 = x, x^(k+1) = x^k (.) x."""
    if isinstance(tables, FiniteAlgebra):
        tables = tables.derived
    if k < 1:
        raise ValueError(f"power exponent must be >= 1, got {k}")
    p = x
    for _ in range(k - 1):
        p = tables.odot[p][x]
    return p

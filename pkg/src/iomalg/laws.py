"""Registry of universally quantified laws, evaluated exhaustively on finite algebras.

Law identifiers are fixed labels of the form ``<L|P><group>.<item>`` such as
``L2.1.5`` or ``P3.6.9``; the group selects a suite.  Items with two parts
are one law whose conclusion is the conjunction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import FiniteAlgebra
from .classify import ClassificationReport, classify

# Class hierarchy; each law names the weakest class it is stated for.
CLASS_LABELS = {
    "be": "is_be",
    "bounded": "is_bounded_be",
    "involutive": "is_involutive_be",
    "iom": "is_iom",
    "qw": "is_qw",
}
CLASS_NAMES = {
    "be": "BE",
    "bounded": "bounded BE",
    "involutive": "involutive BE",
    "iom": "IOM",
    "qw": "QW",
}


@dataclass(frozen=True)
class Law:
    law_id: str
    applies_to: str
    statement: str
    conclusion: Callable[..., bool]
    hypothesis: Optional[Callable[..., bool]] = None

    @property
    def arity(self) -> int:
        return self.conclusion.__code__.co_argcount - 1

    @property
    def kind(self) -> str:
        return "identity" if self.hypothesis is None else "conditional"

    @property
    def sort_key(self) -> tuple[int, ...]:
        return tuple(int(p) for p in self.law_id[1:].split("."))

    def holds_at(self, ops, xs) -> bool:
        if self.hypothesis is not None and not self.hypothesis(ops, *xs):
            return True
        return bool(self.conclusion(ops, *xs))


@dataclass(frozen=True)
class LawReport:
    law_id: str
    status: str  # "pass", "fail" or "not-applicable"
    witness: Optional[tuple[int, ...]] = None
    missing_class: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class SuiteReport:
    suite: str
    reports: list[LawReport] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(1 for r in self.reports if r.status == status)

    @property
    def passed(self) -> int:
        return self.count("pass")

    @property
    def failed(self) -> int:
        return self.count("fail")

    @property
    def not_applicable(self) -> int:
        return self.count("not-applicable")

    @property
    def failures(self) -> list[LawReport]:
        return [r for r in self.reports if r.status == "fail"]


class _BasicOps:
    """Arrow, star and <= for algebras without the full derived tables."""

    def __init__(self, alg: FiniteAlgebra):
        self.arrow = alg.arrow
        self.one = alg.one
        self.zero = alg.zero

    def imp(self, x, y):
        return self.arrow[x][y]

    def st(self, x):
        return self.arrow[x][self.zero]

    def le(self, x, y):
        return self.arrow[x][y] == self.one


def ops_for(alg: FiniteAlgebra):
    return alg.derived if alg.is_involutive else _BasicOps(alg)


_REGISTRY: list[Law] = []


def _law(law_id, applies_to, statement, conclusion, hypothesis=None):
    _REGISTRY.append(Law(law_id, applies_to, statement, conclusion, hypothesis))


# -- BE, bounded and involutive BE algebras ---------------------------------

_law("L2.1.1", "be", "x->(y->x) = 1", lambda o, x, y: o.imp(x, o.imp(y, x)) == o.one)
_law("L2.1.2", "be", "x <= (x->y)->y", lambda o, x, y: o.le(x, o.imp(o.imp(x, y), y)))
_law("L2.1.3", "bounded", "x->y* = y->x*", lambda o, x, y: o.imp(x, o.st(y)) == o.imp(y, o.st(x)))
_law("L2.1.4", "bounded", "x <= x**", lambda o, x: o.le(x, o.st(o.st(x))))
_law("L2.1.5", "involutive", "x*->y = y*->x", lambda o, x, y: o.imp(o.st(x), y) == o.imp(o.st(y), x))
_law("L2.1.6", "involutive", "x*->y* = y->x", lambda o, x, y: o.imp(o.st(x), o.st(y)) == o.imp(y, x))
_law(
    "L2.1.7",
    "involutive",
    "(x->y)*->z = x->(y*->z)",
    lambda o, x, y, z: o.imp(o.st(o.imp(x, y)), z) == o.imp(x, o.imp(o.st(y), z)),
)
_law(
    "L2.1.8",
    "involutive",
    "x->(y->z) = (x->y*)*->z",
    lambda o, x, y, z: o.imp(x, o.imp(y, z)) == o.imp(o.st(o.imp(x, o.st(y))), z),
)
_law(
    "L2.1.9",
    "involutive",
    "(x*->y)*->(x*->y) = (x*->x)*->(y*->y)",
    lambda o, x, y: o.imp(o.st(o.imp(o.st(x), y)), o.imp(o.st(x), y))
    == o.imp(o.st(o.imp(o.st(x), x)), o.imp(o.st(y), y)),
)

_law(
    "P2.2.1",
    "involutive",
    "x <=Q y implies x = y⊓x and y = x⊔y",
    lambda o, x, y: x == o.cap(y, x) and y == o.cup(x, y),
    lambda o, x, y: o.le_q(x, y),
)
_law(
    "P2.2.2",
    "involutive",
    "<=Q is reflexive and antisymmetric",
    lambda o, x, y: o.le_q(x, x) and (x == y or not (o.le_q(x, y) and o.le_q(y, x))),
)
_law(
    "P2.2.3",
    "involutive",
    "x⊓y = (x*⊔y*)* and x⊔y = (x*⊓y*)*",
    lambda o, x, y: o.cap(x, y) == o.st(o.cup(o.st(x), o.st(y)))
    and o.cup(x, y) == o.st(o.cap(o.st(x), o.st(y))),
)
_law(
    "P2.2.4",
    "involutive",
    "x <=Q y implies x <= y",
    lambda o, x, y: o.le(x, y),
    lambda o, x, y: o.le_q(x, y),
)
_law("P2.2.5", "involutive", "0 <=Q x <=Q 1", lambda o, x: o.le_q(o.zero, x) and o.le_q(x, o.one))
_law(
    "P2.2.6",
    "involutive",
    "0⊓x = x⊓0 = 0 and 1⊓x = x⊓1 = x",
    lambda o, x: o.cap(o.zero, x) == o.zero == o.cap(x, o.zero)
    and o.cap(o.one, x) == x == o.cap(x, o.one),
)
_law(
    "P2.2.7",
    "involutive",
    "(x⊓y)->z = (y->x)->(y->z)",
    lambda o, x, y, z: o.imp(o.cap(x, y), z) == o.imp(o.imp(y, x), o.imp(y, z)),
)
_law(
    "P2.2.8",
    "involutive",
    "z->(x⊔y) = (x->y)->(z->y)",
    lambda o, x, y, z: o.imp(z, o.cup(x, y)) == o.imp(o.imp(x, y), o.imp(z, y)),
)
_law(
    "P2.2.9",
    "involutive",
    "x⊓y <= x, y <= x⊔y",
    lambda o, x, y: o.le(o.cap(x, y), x)
    and o.le(o.cap(x, y), y)
    and o.le(x, o.cup(x, y))
    and o.le(y, o.cup(x, y)),
)
_law(
    "P2.2.10",
    "involutive",
    "x⊓(y⊓x) = y⊓x and x⊓(x⊓y) = x⊓y",
    lambda o, x, y: o.cap(x, o.cap(y, x)) == o.cap(y, x) and o.cap(x, o.cap(x, y)) == o.cap(x, y),
)

_law(
    "P2.3.1",
    "involutive",
    "x, y <=Q z and z->x = z->y imply x = y",
    lambda o, x, y, z: x == y,
    lambda o, x, y, z: o.le_q(x, z) and o.le_q(y, z) and o.imp(z, x) == o.imp(z, y),
)
_law(
    "P2.3.2",
    "involutive",
    "(x->(y->z))->x* = ((y->z)⊓x)*",
    lambda o, x, y, z: o.imp(o.imp(x, o.imp(y, z)), o.st(x)) == o.st(o.cap(o.imp(y, z), x)),
)
_law(
    "P2.3.3",
    "involutive",
    "x->((y->x*)*⊔z) = y⊔(x->z)",
    lambda o, x, y, z: o.imp(x, o.cup(o.st(o.imp(y, o.st(x))), z)) == o.cup(y, o.imp(x, z)),
)
_law(
    "P2.3.4",
    "involutive",
    "((y->x)⊓z)->x = y⊔(z->x)",
    lambda o, x, y, z: o.imp(o.cap(o.imp(y, x), z), x) == o.cup(y, o.imp(z, x)),
)
_law(
    "P2.3.5",
    "involutive",
    "x <=Q y implies (y->x)⊙y = x",
    lambda o, x, y: o.prod(o.imp(y, x), y) == x,
    lambda o, x, y: o.le_q(x, y),
)
_law(
    "P2.3.6",
    "involutive",
    "x->(z⊙y*) = ((z->y)⊙x)*",
    lambda o, x, y, z: o.imp(x, o.prod(z, o.st(y))) == o.st(o.prod(o.imp(z, y), x)),
)
_law(
    "P2.3.7",
    "involutive",
    "(x⊔y)⊓y = y and (x⊓y)⊔y = y",
    lambda o, x, y: o.cap(o.cup(x, y), y) == y and o.cup(o.cap(x, y), y) == y,
)

# -- quantum-Wajsberg algebras ------------------------------------------------

_law(
    "P2.4.1",
    "qw",
    "x->(y⊓x) = x->y and (x->y)->(y⊓x) = x",
    lambda o, x, y: o.imp(x, o.cap(y, x)) == o.imp(x, y) and o.imp(o.imp(x, y), o.cap(y, x)) == x,
)
_law(
    "P2.4.2",
    "qw",
    "x <=Q x*->y and x <=Q y->x",
    lambda o, x, y: o.le_q(x, o.imp(o.st(x), y)) and o.le_q(x, o.imp(y, x)),
)
_law(
    "P2.4.3",
    "qw",
    "x->y = 0 iff x = 1 and y = 0",
    lambda o, x, y: (o.imp(x, y) == o.zero) == (x == o.one and y == o.zero),
)
_law("P2.4.4", "qw", "(x->y)*⊓x = (x->y)*", lambda o, x, y: o.cap(o.st(o.imp(x, y)), x) == o.st(o.imp(x, y)))
_law(
    "P2.4.5",
    "qw",
    "(x⊓y)⊓y = x⊓y and (x⊔y)⊔y = x⊔y",
    lambda o, x, y: o.cap(o.cap(x, y), y) == o.cap(x, y) and o.cup(o.cup(x, y), y) == o.cup(x, y),
)
_law(
    "P2.4.6",
    "qw",
    "x⊔(y⊓x) = x and x⊓(y⊔x) = x",
    lambda o, x, y: o.cup(x, o.cap(y, x)) == x and o.cap(x, o.cup(y, x)) == x,
)
_law(
    "P2.4.7",
    "qw",
    "x⊓y <=Q y <=Q x⊔y",
    lambda o, x, y: o.le_q(o.cap(x, y), y) and o.le_q(y, o.cup(x, y)),
)
_law(
    "P2.4.8",
    "qw",
    "(x⊔y)->x = (y⊔x)->x = y->x",
    lambda o, x, y: o.imp(o.cup(x, y), x) == o.imp(o.cup(y, x), x) == o.imp(y, x),
)
_law(
    "P2.4.9",
    "qw",
    "(x⊔y)->y = (y⊔x)->y = x->y",
    lambda o, x, y: o.imp(o.cup(x, y), y) == o.imp(o.cup(y, x), y) == o.imp(x, y),
)
_law("P2.4.10", "qw", "x <= y iff y⊓x = x", lambda o, x, y: o.le(x, y) == (o.cap(y, x) == x))

_law(
    "P2.5.1",
    "qw",
    "x <=Q y implies y = y⊔x",
    lambda o, x, y: y == o.cup(y, x),
    lambda o, x, y: o.le_q(x, y),
)
_law(
    "P2.5.2",
    "qw",
    "x <=Q y implies y* <=Q x*",
    lambda o, x, y: o.le_q(o.st(y), o.st(x)),
    lambda o, x, y: o.le_q(x, y),
)
_law(
    "P2.5.3",
    "qw",
    "x <=Q y implies y->z <=Q x->z and z->x <=Q z->y",
    lambda o, x, y, z: o.le_q(o.imp(y, z), o.imp(x, z)) and o.le_q(o.imp(z, x), o.imp(z, y)),
    lambda o, x, y, z: o.le_q(x, y),
)
_law(
    "P2.5.4",
    "qw",
    "x <=Q y implies x⊓z <=Q y⊓z and x⊔z <=Q y⊔z",
    lambda o, x, y, z: o.le_q(o.cap(x, z), o.cap(y, z)) and o.le_q(o.cup(x, z), o.cup(y, z)),
    lambda o, x, y, z: o.le_q(x, y),
)

_law(
    "P2.6.1",
    "qw",
    "(x⊓y)⊓(y⊓z) = (x⊓y)⊓z",
    lambda o, x, y, z: o.cap(o.cap(x, y), o.cap(y, z)) == o.cap(o.cap(x, y), z),
)
_law(
    "P2.6.2",
    "qw",
    "<=Q is transitive",
    lambda o, x, y, z: o.le_q(x, z),
    lambda o, x, y, z: o.le_q(x, y) and o.le_q(y, z),
)
_law("P2.6.3", "qw", "x⊔y <=Q x*->y", lambda o, x, y: o.le_q(o.cup(x, y), o.imp(o.st(x), y)))
_law(
    "P2.6.4",
    "qw",
    "(x*->y)*->(x->y*)* = x*->y",
    lambda o, x, y: o.imp(o.st(o.imp(o.st(x), y)), o.st(o.imp(x, o.st(y)))) == o.imp(o.st(x), y),
)
_law(
    "P2.6.5",
    "qw",
    "(x->y)*->(y->x)* = x->y",
    lambda o, x, y: o.imp(o.st(o.imp(x, y)), o.st(o.imp(y, x))) == o.imp(x, y),
)
_law("P2.6.6", "qw", "(y->x)->(x->y) = x->y", lambda o, x, y: o.imp(o.imp(y, x), o.imp(x, y)) == o.imp(x, y))
_law("P2.6.7", "qw", "(x->y)⊔(y->x) = 1", lambda o, x, y: o.cup(o.imp(x, y), o.imp(y, x)) == o.one)
_law(
    "P2.6.8",
    "qw",
    "(z⊓x)->(y⊓x) = (z⊓x)->y",
    lambda o, x, y, z: o.imp(o.cap(z, x), o.cap(y, x)) == o.imp(o.cap(z, x), y),
)

_law(
    "P2.7.1",
    "qw",
    "x->(y->z) = (x⊙y)->z",
    lambda o, x, y, z: o.imp(x, o.imp(y, z)) == o.imp(o.prod(x, y), z),
)
_law(
    "P2.7.2",
    "qw",
    "x <=Q y->z implies x⊙y <= z",
    lambda o, x, y, z: o.le(o.prod(x, y), z),
    lambda o, x, y, z: o.le_q(x, o.imp(y, z)),
)
_law(
    "P2.7.3",
    "qw",
    "x⊙y <= z implies x <= y->z",
    lambda o, x, y, z: o.le(x, o.imp(y, z)),
    lambda o, x, y, z: o.le(o.prod(x, y), z),
)
_law("P2.7.4", "qw", "(x->y)⊙x <= y", lambda o, x, y: o.le(o.prod(o.imp(x, y), x), y))
_law(
    "P2.7.5",
    "qw",
    "x <=Q y implies x⊙z <=Q y⊙z",
    lambda o, x, y, z: o.le_q(o.prod(x, z), o.prod(y, z)),
    lambda o, x, y, z: o.le_q(x, y),
)
_law(
    "P2.7.6",
    "qw",
    "x <=Q y implies (y->x)⊙y = x",
    lambda o, x, y: o.prod(o.imp(y, x), y) == x,
    lambda o, x, y: o.le_q(x, y),
)
_law(
    "P2.7.7",
    "qw",
    "x->(z⊙y*) = ((z->y)⊙x)*",
    lambda o, x, y, z: o.imp(x, o.prod(z, o.st(y))) == o.st(o.prod(o.imp(z, y), x)),
)

# -- implicative-orthomodular algebras ----------------------------------------

_law(
    "P3.5.1",
    "iom",
    "x⊓(y⊔x) = x and x⊔(y⊓x) = x",
    lambda o, x, y: o.cap(x, o.cup(y, x)) == x and o.cup(x, o.cap(y, x)) == x,
)
_law(
    "P3.5.2",
    "iom",
    "x <=Q y implies y⊔x = y and y* <=Q x*",
    lambda o, x, y: o.cup(y, x) == y and o.le_q(o.st(y), o.st(x)),
    lambda o, x, y: o.le_q(x, y),
)
_law(
    "P3.5.3",
    "iom",
    "x <=Q y implies y->z <=Q x->z and z->x <=Q z->y",
    lambda o, x, y, z: o.le_q(o.imp(y, z), o.imp(x, z)) and o.le_q(o.imp(z, x), o.imp(z, y)),
    lambda o, x, y, z: o.le_q(x, y),
)
_law(
    "P3.5.4",
    "iom",
    "x <=Q y implies x⊓z <=Q y⊓z and x⊔z <=Q y⊔z",
    lambda o, x, y, z: o.le_q(o.cap(x, z), o.cap(y, z)) and o.le_q(o.cup(x, z), o.cup(y, z)),
    lambda o, x, y, z: o.le_q(x, y),
)
_law(
    "P3.5.5",
    "iom",
    "x <=Q y implies (z->y)⊔(z->x) = z->y",
    lambda o, x, y, z: o.cup(o.imp(z, y), o.imp(z, x)) == o.imp(z, y),
    lambda o, x, y, z: o.le_q(x, y),
)

_law("P3.6.1", "iom", "(x->y)⊔y = x->y", lambda o, x, y: o.cup(o.imp(x, y), y) == o.imp(x, y))
_law("P3.6.2", "iom", "(x->y)->(y⊓x) = x", lambda o, x, y: o.imp(o.imp(x, y), o.cap(y, x)) == x)
_law("P3.6.3", "iom", "x->(y⊓x) = x->y", lambda o, x, y: o.imp(x, o.cap(y, x)) == o.imp(x, y))
_law(
    "P3.6.4",
    "iom",
    "(x⊔y)->(x->y)* = y*",
    lambda o, x, y: o.imp(o.cup(x, y), o.st(o.imp(x, y))) == o.st(y),
)
_law(
    "P3.6.5",
    "iom",
    "x⊓((y->x)⊓(z->x)) = x",
    lambda o, x, y, z: o.cap(x, o.cap(o.imp(y, x), o.imp(z, x))) == x,
)
_law("P3.6.6", "iom", "x <= y iff y⊓x = x", lambda o, x, y: o.le(x, y) == (o.cap(y, x) == x))
_law(
    "P3.6.7",
    "iom",
    "x <=Q y and y <= x imply x = y",
    lambda o, x, y: x == y,
    lambda o, x, y: o.le_q(x, y) and o.le(y, x),
)
_law(
    "P3.6.8",
    "iom",
    "x⊓y <=Q y <=Q x⊔y",
    lambda o, x, y: o.le_q(o.cap(x, y), y) and o.le_q(y, o.cup(x, y)),
)
_law("P3.6.9", "iom", "(x⊔y)->y = x->y", lambda o, x, y: o.imp(o.cup(x, y), y) == o.imp(x, y))
_law(
    "P3.6.10",
    "iom",
    "x⊓y, y⊓x <=Q x->y",
    lambda o, x, y: o.le_q(o.cap(x, y), o.imp(x, y)) and o.le_q(o.cap(y, x), o.imp(x, y)),
)

_law("P3.8.1", "iom", "(x⊓y)⊓y = x⊓y", lambda o, x, y: o.cap(o.cap(x, y), y) == o.cap(x, y))
_law("P3.8.2", "iom", "x⊔(y⊓x) = x", lambda o, x, y: o.cup(x, o.cap(y, x)) == x)
_law("P3.8.3", "iom", "x⊓(y⊔x) = x", lambda o, x, y: o.cap(x, o.cup(y, x)) == x)
_law(
    "P3.8.4",
    "iom",
    "x⊓y <=Q y <=Q x⊔y",
    lambda o, x, y: o.le_q(o.cap(x, y), y) and o.le_q(y, o.cup(x, y)),
)
_law(
    "P3.8.5",
    "iom",
    "(x⊓y)⊓(y⊓z) = (x⊓y)⊓z",
    lambda o, x, y, z: o.cap(o.cap(x, y), o.cap(y, z)) == o.cap(o.cap(x, y), z),
)
_law(
    "P3.8.6",
    "iom",
    "(x⊔y)⊔(y⊔z) = (x⊔y)⊔z",
    lambda o, x, y, z: o.cup(o.cup(x, y), o.cup(y, z)) == o.cup(o.cup(x, y), z),
)
_law(
    "P3.8.7",
    "iom",
    "<=Q is transitive",
    lambda o, x, y, z: o.le_q(x, z),
    lambda o, x, y, z: o.le_q(x, y) and o.le_q(y, z),
)
_law(
    "P3.8.8",
    "iom",
    "(x->y)⊔(x->(z⊓y)) = x->y",
    lambda o, x, y, z: o.cup(o.imp(x, y), o.imp(x, o.cap(z, y))) == o.imp(x, y),
)
_law(
    "P3.8.9",
    "iom",
    "(x->y)⊔((z->x)->y) = x->y",
    lambda o, x, y, z: o.cup(o.imp(x, y), o.imp(o.imp(z, x), y)) == o.imp(x, y),
)

_law(
    "P3.10.1",
    "iom",
    "(z⊓x)->(y⊓x) = (z⊓x)->y",
    lambda o, x, y, z: o.imp(o.cap(z, x), o.cap(y, x)) == o.imp(o.cap(z, x), y),
)
_law("P3.10.2", "iom", "(x->y)*⊓x = (x->y)*", lambda o, x, y: o.cap(o.st(o.imp(x, y)), x) == o.st(o.imp(x, y)))
_law("P3.10.3", "iom", "(x⊓y)⊓y = x⊓y", lambda o, x, y: o.cap(o.cap(x, y), y) == o.cap(x, y))
_law(
    "P3.10.4",
    "iom",
    "x->(y->z) = (x⊙y)->z",
    lambda o, x, y, z: o.imp(x, o.imp(y, z)) == o.imp(o.prod(x, y), z),
)
_law(
    "P3.10.5",
    "iom",
    "x <=Q y->z implies x⊙y <= z",
    lambda o, x, y, z: o.le(o.prod(x, y), z),
    lambda o, x, y, z: o.le_q(x, o.imp(y, z)),
)
_law(
    "P3.10.6",
    "iom",
    "x⊙y <= z implies x <= y->z",
    lambda o, x, y, z: o.le(x, o.imp(y, z)),
    lambda o, x, y, z: o.le(o.prod(x, y), z),
)
_law("P3.10.7", "iom", "(x->y)⊙x <= y", lambda o, x, y: o.le(o.prod(o.imp(x, y), x), y))
_law(
    "P3.10.8",
    "iom",
    "x <=Q y implies x⊙z <=Q y⊙z",
    lambda o, x, y, z: o.le_q(o.prod(x, z), o.prod(y, z)),
    lambda o, x, y, z: o.le_q(x, y),
)

_REGISTRY.sort(key=lambda law: law.sort_key)
_BY_ID = {law.law_id: law for law in _REGISTRY}

SUITES: dict[str, tuple[str, ...]] = {
    "involutive-be": ("L2.1", "P2.2", "P2.3"),
    "qw": ("P2.4", "P2.5", "P2.6", "P2.7"),
    "iom": ("P3.5", "P3.6", "P3.8", "P3.10"),
}


def law_registry() -> list[Law]:
    return list(_REGISTRY)


def get_law(law_id: str) -> Law:
    try:
        return _BY_ID[law_id]
    except KeyError:
        raise KeyError(f"unknown law {law_id!r}") from None


def suite_laws(suite: str) -> list[Law]:
    if suite == "all":
        return law_registry()
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(['all', *SUITES])}")
    groups = SUITES[suite]
    return [law for law in _REGISTRY if law.law_id.rsplit(".", 1)[0] in groups]


def find_counterexample(alg: FiniteAlgebra, law: Law, ops=None) -> Optional[tuple[int, ...]]:
    """First tuple (lexicographic) on which ``law`` fails, or None."""
    ops = ops if ops is not None else ops_for(alg)
    for xs in itertools.product(alg.elements, repeat=law.arity):
        if not law.holds_at(ops, xs):
            return xs
    return None


def check_law(
    alg: FiniteAlgebra, law: Law, report: Optional[ClassificationReport] = None
) -> LawReport:
    report = report if report is not None else classify(alg)
    if not report.labels[CLASS_LABELS[law.applies_to]]:
        return LawReport(law.law_id, "not-applicable", missing_class=CLASS_NAMES[law.applies_to])
    witness = find_counterexample(alg, law)
    if witness is None:
        return LawReport(law.law_id, "pass")
    return LawReport(law.law_id, "fail", witness)


def run_suite(alg: FiniteAlgebra, suite: str = "all") -> SuiteReport:
    laws = suite_laws(suite)
    report = classify(alg)
    ops = ops_for(alg)
    out = SuiteReport(suite)
    for law in laws:
        if not report.labels[CLASS_LABELS[law.applies_to]]:
            out.reports.append(
                LawReport(law.law_id, "not-applicable", missing_class=CLASS_NAMES[law.applies_to])
            )
            continue
        witness = find_counterexample(alg, law, ops)
        out.reports.append(
            LawReport(law.law_id, "pass") if witness is None else LawReport(law.law_id, "fail", witness)
        )
    return out

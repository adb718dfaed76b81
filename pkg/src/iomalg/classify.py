"""Axiom checks and class membership (BE, involutive BE, IOM, QW, OM)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional

from .algebra import ConsistencyError, FiniteAlgebra, InvolutionError


@dataclass(frozen=True)
class AxiomResult:
    """Verdict for one axiom. ``holds`` is None when the axiom was not evaluated."""

    axiom_id: str
    holds: Optional[bool]
    witness: Optional[tuple[int, ...]] = None
    detail: str = ""
    reason: str = ""

    def __post_init__(self):
        if (self.witness is not None) != (self.holds is False):
            raise ValueError("witness must be present exactly when the axiom fails")


@dataclass(frozen=True)
class Axiom:
    axiom_id: str
    formula: str
    arity: int
    lhs: Callable
    rhs: Callable
    needs: str  # "arrow", "zero" or "derived"


@dataclass(frozen=True)
class ProductForm:
    """The (odot, *, 1) signature of an involutive algebra."""

    odot: tuple[tuple[int, ...], ...]
    star: tuple[int, ...]
    one: int

    @property
    def zero(self) -> int:
        return self.star[self.one]

    @property
    def n(self) -> int:
        return len(self.star)

    def prod(self, x: int, y: int) -> int:
        return self.odot[x][y]

    def st(self, x: int) -> int:
        return self.star[x]

    def sum(self, x: int, y: int) -> int:
        s = self.star
        return s[self.odot[s[x]][s[y]]]


class _Plain:
    """Evaluation context for axioms that only need the arrow (and zero)."""

    def __init__(self, alg: FiniteAlgebra):
        self.arrow = alg.arrow
        self.one = alg.one
        self.zero = alg.zero

    def imp(self, x, y):
        return self.arrow[x][y]

    def st(self, x):
        return self.arrow[x][self.zero]


def _ax(axiom_id, formula, arity, lhs, rhs, needs="derived"):
    return Axiom(axiom_id, formula, arity, lhs, rhs, needs)


AXIOMS: dict[str, Axiom] = {
    a.axiom_id: a
    for a in [
        _ax("BE1", "x->x = 1", 1, lambda o, x: o.imp(x, x), lambda o, x: o.one, "arrow"),
        _ax("BE2", "x->1 = 1", 1, lambda o, x: o.imp(x, o.one), lambda o, x: o.one, "arrow"),
        _ax("BE3", "1->x = x", 1, lambda o, x: o.imp(o.one, x), lambda o, x: x, "arrow"),
        _ax(
            "BE4",
            "x->(y->z) = y->(x->z)",
            3,
            lambda o, x, y, z: o.imp(x, o.imp(y, z)),
            lambda o, x, y, z: o.imp(y, o.imp(x, z)),
            "arrow",
        ),
        _ax("bounded", "0->x = 1", 1, lambda o, x: o.imp(o.zero, x), lambda o, x: o.one, "zero"),
        _ax("involutive", "x** = x", 1, lambda o, x: o.st(o.st(x)), lambda o, x: x, "zero"),
        _ax(
            "IOM",
            "x⊓(y->x) = x",
            2,
            lambda o, x, y: o.cap(x, o.imp(y, x)),
            lambda o, x, y: x,
        ),
        _ax(
            "IOM'",
            "x⊓(x*->y) = x",
            2,
            lambda o, x, y: o.cap(x, o.imp(o.st(x), y)),
            lambda o, x, y: x,
        ),
        _ax(
            "QW",
            "x->((x⊓y)⊓(z⊓x)) = (x->y)⊓(x->z)",
            3,
            lambda o, x, y, z: o.imp(x, o.cap(o.cap(x, y), o.cap(z, x))),
            lambda o, x, y, z: o.cap(o.imp(x, y), o.imp(x, z)),
        ),
        _ax(
            "QW1",
            "x->(x⊓y) = x->y",
            2,
            lambda o, x, y: o.imp(x, o.cap(x, y)),
            lambda o, x, y: o.imp(x, y),
        ),
        _ax(
            "QW2",
            "x->(y⊓(z⊓x)) = (x->y)⊓(x->z)",
            3,
            lambda o, x, y, z: o.imp(x, o.cap(y, o.cap(z, x))),
            lambda o, x, y, z: o.cap(o.imp(x, y), o.imp(x, z)),
        ),
        _ax(
            "IOM2",
            "(x⊓y)->(y⊓x) = 1",
            2,
            lambda o, x, y: o.imp(o.cap(x, y), o.cap(y, x)),
            lambda o, x, y: o.one,
        ),
        _ax(
            "IOM2'",
            "(x⊔y)->(y⊔x) = 1",
            2,
            lambda o, x, y: o.imp(o.cup(x, y), o.cup(y, x)),
            lambda o, x, y: o.one,
        ),
        _ax(
            "Prel",
            "(x->y)⊔(y->x) = 1",
            2,
            lambda o, x, y: o.cup(o.imp(x, y), o.imp(y, x)),
            lambda o, x, y: o.one,
        ),
    ]
}

OM_AXIOMS: dict[str, Axiom] = {
    a.axiom_id: a
    for a in [
        _ax(
            "PU",
            "1⊙x = x = x⊙1",
            1,
            lambda p, x: (p.prod(p.one, x), p.prod(x, p.one)),
            lambda p, x: (x, x),
            "product",
        ),
        _ax("Pcomm", "x⊙y = y⊙x", 2, lambda p, x, y: p.prod(x, y), lambda p, x, y: p.prod(y, x), "product"),
        _ax(
            "Pass",
            "x⊙(y⊙z) = (x⊙y)⊙z",
            3,
            lambda p, x, y, z: p.prod(x, p.prod(y, z)),
            lambda p, x, y, z: p.prod(p.prod(x, y), z),
            "product",
        ),
        _ax("m-L", "x⊙0 = 0", 1, lambda p, x: p.prod(x, p.zero), lambda p, x: p.zero, "product"),
        _ax("m-Re", "x⊙x* = 0", 1, lambda p, x: p.prod(x, p.st(x)), lambda p, x: p.zero, "product"),
        _ax(
            "Pom",
            "(x⊙y)⊕((x⊙y)*⊙x) = x",
            2,
            lambda p, x, y: p.sum(p.prod(x, y), p.prod(p.st(p.prod(x, y)), x)),
            lambda p, x, y: x,
            "product",
        ),
    ]
}

STRUCTURAL = ("BE1", "BE2", "BE3", "BE4", "bounded", "involutive")
DERIVED_AXIOMS = ("IOM", "IOM'", "QW", "QW1", "QW2", "IOM2", "IOM2'", "Prel")


def _evaluate(axiom: Axiom, ctx, n: int, names=None) -> AxiomResult:
    for xs in itertools.product(range(n), repeat=axiom.arity):
        left, right = axiom.lhs(ctx, *xs), axiom.rhs(ctx, *xs)
        if left != right:
            detail = ""
            if names is not None:
                show = lambda v: (
                    "(" + ", ".join(names[i] for i in v) + ")" if isinstance(v, tuple) else names[v]
                )
                detail = f"{axiom.formula}: {show(left)} != {show(right)}"
            return AxiomResult(axiom.axiom_id, False, tuple(xs), detail)
    return AxiomResult(axiom.axiom_id, True)


def check_axiom(alg: FiniteAlgebra, axiom_id: str) -> AxiomResult:
    """Exhaustively evaluate one axiom; the witness is the first failing tuple."""
    if axiom_id in OM_AXIOMS:
        return check_om(to_product_form(alg), names=alg.names)[axiom_id]
    if axiom_id not in AXIOMS:
        raise KeyError(f"unknown axiom {axiom_id!r}")
    axiom = AXIOMS[axiom_id]
    if axiom.needs == "arrow":
        ctx = _Plain(alg)
    elif axiom.needs == "zero":
        if alg.zero is None:
            raise InvolutionError(f"axiom {axiom_id} needs a zero")
        ctx = _Plain(alg)
    else:
        ctx = alg.derived
    return _evaluate(axiom, ctx, alg.n, alg.names)


def to_product_form(alg: FiniteAlgebra) -> ProductForm:
    """The m-BE view (odot, *, 1); raises InvolutionError when not involutive."""
    t = alg.derived
    pf = ProductForm(t.odot, t.star, t.one)
    for x in alg.elements:
        for y in alg.elements:
            if pf.st(pf.prod(x, pf.st(y))) != alg.arrow[x][y]:
                raise ConsistencyError("product-form round trip", (x, y))
    return pf


def arrow_from_product(pf: ProductForm) -> tuple[tuple[int, ...], ...]:
    """Recover x -> y = (x (.) y*)*."""
    rng = range(pf.n)
    return tuple(tuple(pf.st(pf.prod(x, pf.st(y))) for y in rng) for x in rng)


def check_om(pf: ProductForm, names=None) -> dict[str, AxiomResult]:
    return {aid: _evaluate(ax, pf, pf.n, names) for aid, ax in OM_AXIOMS.items()}


# Equivalences proved for involutive BE algebras; each is checked on every classified algebra.
CROSS_CHECKS: tuple[tuple[str, Callable[[dict[str, bool]], bool]], ...] = (
    ("IOM<=>IOM'", lambda h: h["IOM"] == h["IOM'"]),
    ("IOM<=>QW2", lambda h: h["IOM"] == h["QW2"]),
    ("IOM&IOM2<=>QW", lambda h: (h["IOM"] and h["IOM2"]) == h["QW"]),
    ("IOM2<=>IOM2'", lambda h: h["IOM2"] == h["IOM2'"]),
    ("QW=>IOM", lambda h: (not h["QW"]) or h["IOM"]),
    ("IOM<=>Pom", lambda h: h["IOM"] == h["Pom"]),
    ("QW<=>QW1&QW2", lambda h: h["QW"] == (h["QW1"] and h["QW2"])),
)


@dataclass
class ClassificationReport:
    results: dict[str, AxiomResult]
    labels: dict[str, bool]
    discrepancies: list[str] = field(default_factory=list)

    def __getitem__(self, axiom_id: str) -> AxiomResult:
        return self.results[axiom_id]

    @property
    def is_be(self) -> bool:
        return self.labels["is_be"]

    @property
    def is_involutive_be(self) -> bool:
        return self.labels["is_involutive_be"]

    @property
    def is_iom(self) -> bool:
        return self.labels["is_iom"]

    @property
    def is_qw(self) -> bool:
        return self.labels["is_qw"]

    @property
    def is_om(self) -> bool:
        return self.labels["is_om"]

    def has(self, flag: str) -> bool:
        """Class flag lookup used by model search (e.g. 'iom', 'qw', 'prel')."""
        key = flag.lower()
        if f"is_{key}" in self.labels:
            return self.labels[f"is_{key}"]
        for aid, res in self.results.items():
            if aid.lower() == key:
                return bool(res.holds)
        raise KeyError(f"unknown class flag {flag!r}")

    def qw_failure(self) -> Optional[AxiomResult]:
        """The failing component of QW1 & QW2 that explains why the algebra is not QW."""
        for aid in ("QW1", "QW2"):
            res = self.results.get(aid)
            if res is not None and res.holds is False:
                return res
        res = self.results.get("QW")
        return res if res is not None and res.holds is False else None


CLASS_FLAGS = ("be", "bounded_be", "involutive_be", "iom", "qw", "om", "prel")


def classify(alg: FiniteAlgebra) -> ClassificationReport:
    results: dict[str, AxiomResult] = {}
    for aid in ("BE1", "BE2", "BE3", "BE4"):
        results[aid] = check_axiom(alg, aid)
    if alg.zero is None:
        for aid in ("bounded", "involutive"):
            results[aid] = AxiomResult(aid, None, reason="no zero declared")
    else:
        for aid in ("bounded", "involutive"):
            results[aid] = check_axiom(alg, aid)

    involutive = results["involutive"].holds is True
    if involutive:
        for aid in DERIVED_AXIOMS:
            results[aid] = check_axiom(alg, aid)
        results.update(check_om(to_product_form(alg), names=alg.names))
    else:
        reason = "no zero declared" if alg.zero is None else "involution fails"
        for aid in DERIVED_AXIOMS + tuple(OM_AXIOMS):
            results[aid] = AxiomResult(aid, None, reason=reason)

    ok = lambda *ids: all(results[i].holds is True for i in ids)
    labels = {}
    labels["is_be"] = ok("BE1", "BE2", "BE3", "BE4")
    labels["is_bounded_be"] = labels["is_be"] and ok("bounded")
    labels["is_involutive_be"] = labels["is_bounded_be"] and ok("involutive")
    ibe = labels["is_involutive_be"]
    labels["is_iom"] = ibe and ok("IOM")
    labels["is_qw"] = ibe and ok("QW")
    labels["is_om"] = ibe and ok(*OM_AXIOMS)
    labels["is_prel"] = ibe and ok("Prel")

    discrepancies = []
    if ibe:
        holds = {aid: bool(r.holds) for aid, r in results.items()}
        discrepancies = [name for name, check in CROSS_CHECKS if not check(holds)]
    return ClassificationReport(results, labels, discrepancies)

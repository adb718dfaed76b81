"""Command-line front end.

Every subcommand builds a :class:`Report`; ``--json`` prints it as a JSON
document with the keys ``command``, ``algebra``, ``results``, ``witnesses``
and ``census``, otherwise a plain-text rendering of the same data is printed.

Exit codes: 0 success, 1 a check failed (witness printed), 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Sequence

from .algebra import AlgebraError, ConsistencyError, FiniteAlgebra, InvolutionError
from .classify import AXIOMS, CROSS_CHECKS, OM_AXIOMS, classify
from .congruence import (
    CongruenceError,
    check_commutativity_transfer,
    class_name,
    congruence_from_ds,
    quotient,
)
from .filters import (
    ElementSubset,
    FilterError,
    classify_filter,
    enumerate_subfamilies,
    generated_filter,
    is_ds,
    is_filter,
    verify_bosbach,
)
from .formats import ParseError, parse_alg, parse_state, serialize_alg
from .laws import SUITES, run_suite
from .search import MAX_CANONICAL, MAX_EXHAUSTIVE, ModelSpec, SearchError, find_models

EXIT_OK, EXIT_CHECK, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    """A precondition checked on the input algebra failed (exit 1)."""


@dataclass
class Report:
    command: dict[str, Any]
    algebra: Optional[dict[str, Any]] = None
    results: list[dict[str, Any]] = field(default_factory=list)
    witnesses: list[dict[str, Any]] = field(default_factory=list)
    census: Optional[dict[str, int]] = None
    lines: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def to_json(self) -> str:
        doc = {
            "command": self.command,
            "algebra": self.algebra,
            "results": self.results,
            "witnesses": self.witnesses,
            "census": self.census,
        }
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        return "\n".join(self.lines) + "\n"

    def say(self, line: str = "") -> None:
        self.lines.append(line)

    def witness(self, check: str, values: dict[str, str], detail: str = "") -> None:
        self.witnesses.append({"check": check, "values": values, "detail": detail})

    def fail(self) -> None:
        self.exit_code = EXIT_CHECK


# -- rendering helpers --------------------------------------------------------

VARIABLES = "xyz"


def _bind(alg: FiniteAlgebra, xs: Sequence[int], variables: str = VARIABLES) -> dict[str, str]:
    return {v: alg.names[x] for v, x in zip(variables, xs)}


def _show_binding(values: dict[str, str]) -> str:
    return ", ".join(f"{k}={v}" for k, v in values.items())


def _instantiate(formula: str, values: dict[str, str]) -> str:
    """Replace single-letter variables in a formula by element names."""
    return re.sub(r"(?<![A-Za-z])[xyz](?![A-Za-z])", lambda m: values.get(m.group(), m.group()), formula)


def _evaluated(formula: str, values: dict[str, str], detail: str) -> str:
    """'b->(b⊓a) = a, b->a = 1' from formula, binding and 'L != R' detail."""
    sides = formula.split(" = ")
    m = re.search(r": (.*) != (.*)$", detail)
    if len(sides) != 2 or not m:
        return detail
    lhs, rhs = (_instantiate(s, values) for s in sides)
    if rhs == m.group(2):  # constant right-hand side
        return f"{lhs} = {m.group(1)} != {rhs}"
    return f"{lhs} = {m.group(1)}, {rhs} = {m.group(2)}"


def _set_name(alg: FiniteAlgebra, members: Sequence[int]) -> str:
    return class_name(alg, members)


def _subset_text(alg: FiniteAlgebra, s: ElementSubset) -> str:
    text = _set_name(alg, s.members)
    return text + " = X" if s.is_full() and alg.n > 1 else text


def _split_names(text: str) -> list[str]:
    """Comma separated element names; brace-joined class names stay whole."""
    return [t.strip() for t in re.findall(r"\{[^}]*\}|[^,]+", text) if t.strip()]


def _resolve(alg: FiniteAlgebra, text: str, flag: str) -> list[int]:
    out = []
    for name in _split_names(text):
        if name not in alg.names:
            raise UsageError(f"{flag}: unknown element {name!r}; known: {' '.join(alg.names)}")
        out.append(alg.index(name))
    if not out:
        raise UsageError(f"{flag}: no element names given")
    return out


def _algebra_doc(alg: FiniteAlgebra, source: Optional[str]) -> dict[str, Any]:
    return {
        "source": source,
        "elements": list(alg.names),
        "one": alg.names[alg.one],
        "zero": None if alg.zero is None else alg.names[alg.zero],
    }


def _load(report: Report, path: str) -> FiniteAlgebra:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        alg = parse_alg(text)
    except ParseError as exc:
        raise UsageError(f"{path}: {exc}") from None
    report.algebra = _algebra_doc(alg, path)
    report.say(f"algebra {path}: {alg.n} elements ({' '.join(alg.names)}), one={alg.names[alg.one]}"
               + ("" if alg.zero is None else f", zero={alg.names[alg.zero]}"))
    return alg


def _yes(flag: Optional[bool]) -> str:
    return {True: "yes", False: "no", None: "n/a"}[flag]


# -- subcommands --------------------------------------------------------------


def cmd_classify(args, report: Report) -> None:
    alg = _load(report, args.file)
    rep = classify(alg)
    formulas = {**{k: a.formula for k, a in AXIOMS.items()}, **{k: a.formula for k, a in OM_AXIOMS.items()}}
    for label, value in rep.labels.items():
        report.results.append({"check": label, "holds": value})
    for aid, res in rep.results.items():
        entry = {"check": aid, "holds": res.holds}
        if res.reason:
            entry["reason"] = res.reason
        report.results.append(entry)
    qw = rep.qw_failure() if rep.is_involutive_be else None

    report.say(f"BE algebra: {_yes(rep.is_be)}")
    report.say(f"bounded BE: {_yes(rep.labels['is_bounded_be'])}")
    report.say(f"involutive BE: {_yes(rep.is_involutive_be)}")
    if not rep.is_involutive_be:
        reason = rep.results["IOM"].reason
        report.say(f"derived axioms not evaluated: {reason}")
    else:
        report.say(f"IOM: {_yes(rep.is_iom)}")
        if qw is None:
            report.say("QW: yes")
        else:
            values = _bind(alg, qw.witness)
            text = _evaluated(formulas[qw.axiom_id], values, qw.detail)
            report.say(f"QW: no (witness {_show_binding(values)}: {qw.axiom_id} fails, {text})")
            report.witness("QW", values, f"{qw.axiom_id}: {text}")
        report.say(f"OM (product form, incl. Pom): {_yes(rep.is_om)}")
        report.say(f"Prel: {_yes(rep.labels['is_prel'])}")
    report.say("axioms:")
    for aid, res in rep.results.items():
        if res.holds is None:
            report.say(f"  {aid:<10} not evaluated ({res.reason})")
        elif res.holds:
            report.say(f"  {aid:<10} holds")
        else:
            values = _bind(alg, res.witness)
            text = _evaluated(formulas[aid], values, res.detail)
            report.say(f"  {aid:<10} fails at {_show_binding(values)}: {text}")
            report.witness(aid, values, text)
    if rep.is_involutive_be:
        names = [name for name, _ in CROSS_CHECKS]
        if rep.discrepancies:
            report.fail()
            for d in rep.discrepancies:
                report.say(f"DISCREPANCY: {d}")
                report.witness("cross-check", {}, d)
        else:
            report.say(f"cross-checks ({len(names)}): all agree")
        report.results.append({"check": "cross-checks", "holds": not rep.discrepancies})


def cmd_laws(args, report: Report) -> None:
    alg = _load(report, args.file)
    suite = run_suite(alg, args.suite)
    for r in suite.reports:
        entry = {"law": r.law_id, "status": r.status}
        if r.missing_class:
            entry["missing_class"] = r.missing_class
        report.results.append(entry)
        if r.status == "pass":
            report.say(f"  {r.law_id:<9} pass")
        elif r.status == "not-applicable":
            report.say(f"  {r.law_id:<9} not-applicable (algebra is not {r.missing_class})")
        else:
            values = _bind(alg, r.witness, "xyzuvw")
            report.say(f"  {r.law_id:<9} FAIL at {_show_binding(values)}")
            report.witness(r.law_id, values)
    report.say(
        f"suite {args.suite}: {suite.passed} pass, {suite.failed} fail, "
        f"{suite.not_applicable} not-applicable"
    )
    if suite.failed:
        report.fail()


_FILTER_FLAGS = ("is_filter", "is_ds", "is_proper", "is_maximal", "is_strongly_maximal", "is_commutative")


def _classification_witness(alg, key: str, w: tuple[int, ...]) -> dict[str, str]:
    if key == "is_maximal":
        return {"filter": _set_name(alg, w)} if w else {}
    return _bind(alg, w)


def cmd_filters(args, report: Report) -> None:
    alg = _load(report, args.file)
    family = enumerate_subfamilies(alg, args.kind)
    label = "filters" if args.kind == "filter" else "deductive systems"
    report.say(f"{label} ({len(family)}):")
    for s in family:
        entry: dict[str, Any] = {"subset": list(s.names(alg))}
        line = f"  {_subset_text(alg, s)}"
        if args.classify:
            c = classify_filter(alg, s)
            entry["classification"] = {k: getattr(c, k) for k in _FILTER_FLAGS}
            flags = [k[3:].replace("_", " ") for k in _FILTER_FLAGS[1:] if getattr(c, k)]
            line += ": " + (", ".join(flags) if flags else "no further properties")
            for key, w in c.witnesses.items():
                values = _classification_witness(alg, key, w)
                report.witness(f"{_set_name(alg, s.members)} {key}", values)
                line += f"\n      not {key[3:].replace('_', ' ')}" + (f" (witness {_show_binding(values)})" if values else "")
        report.results.append(entry)
        report.say(line)


def cmd_generate(args, report: Report) -> None:
    alg = _load(report, args.file)
    if args.adjoin is not None:
        base = _resolve(alg, args.base, "--base") if args.base else [alg.one]
        x = _resolve(alg, args.adjoin, "--adjoin")
        if len(x) != 1:
            raise UsageError("--adjoin takes one element")
        if not is_filter(alg, base):
            raise CheckFailed(f"--base {_set_name(alg, base)} is not a filter")
        g = generated_filter(alg, base=base, adjoin=x[0])
        what = f"[{_set_name(alg, base)} ∪ {{{alg.names[x[0]]}}}]"
    else:
        if args.elements is None:
            raise UsageError("generate needs --elements or --adjoin")
        gens = _resolve(alg, args.elements, "--elements")
        g = generated_filter(alg, gens)
        what = f"[{', '.join(alg.names[x] for x in gens)}]"
    report.results.append({"generated": list(g.names(alg))})
    report.say(f"{what} = {_subset_text(alg, g)}")


def _ds_arg(alg: FiniteAlgebra, args, report: Report, allow_filter: bool = False) -> ElementSubset:
    members = _resolve(alg, args.ds, "--ds")
    s = ElementSubset.of(alg.n, members)
    v = is_ds(alg, s)
    if not v and not allow_filter:
        values = _bind(alg, v.witness) if v.reason != "DS1" else {"missing": alg.names[alg.one]}
        report.witness("ds", values, v.reason)
        raise CheckFailed(
            f"{_set_name(alg, members)} is not a deductive system ({v.reason} fails"
            + (f" at {_show_binding(values)})" if values else ")")
        )
    return s


def cmd_congruence(args, report: Report) -> None:
    alg = _load(report, args.file)
    f = _ds_arg(alg, args, report, args.allow_filter)
    p = congruence_from_ds(alg, f, allow_filter=args.allow_filter)
    blocks = [list(alg.names[x] for x in b) for b in p.blocks()]
    report.results.append({"classes": blocks, "count": p.count, "is_congruence": True})
    report.say(f"congruence induced by {_set_name(alg, f.members)}: {p.count} class{'es' if p.count != 1 else ''}")
    for b in p.blocks():
        report.say(f"  {_set_name(alg, b)}")
    report.say("equivalence and compatibility with *, (.), ->, ⊔, ⊓ verified")


def cmd_quotient(args, report: Report) -> None:
    alg = _load(report, args.file)
    f = _ds_arg(alg, args, report)
    q = quotient(alg, f)
    qa = q.algebra
    report.results.append(
        {
            "elements": list(qa.names),
            "one": qa.names[qa.one],
            "zero": None if qa.zero is None else qa.names[qa.zero],
            "arrow": [[qa.names[v] for v in row] for row in qa.arrow],
            "projection": {alg.names[x]: qa.names[c] for x, c in enumerate(q.projection)},
            "is_iom": q.is_iom,
            "unsupported_source": q.unsupported,
        }
    )
    report.say(f"quotient by {_set_name(alg, f.members)}: {qa.n} class{'es' if qa.n != 1 else ''}, IOM: {_yes(q.is_iom)}")
    if q.unsupported:
        report.say("note: source algebra is not IOM; quotient built because it is well defined")
    report.say(serialize_alg(qa).rstrip())
    if args.output:
        try:
            Path(args.output).write_text(serialize_alg(qa), encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc.strerror or exc}") from None
        report.say(f"written to {args.output}")


def cmd_transfer(args, report: Report) -> None:
    alg = _load(report, args.file)
    f = _ds_arg(alg, args, report)
    left, right = check_commutativity_transfer(alg, f)
    report.results.append(
        {"commutative": left, "quotient_all_commutative": right, "agree": left == right}
    )
    name = _set_name(alg, f.members)
    report.say(f"{name} commutative: {_yes(left)}")
    report.say(f"every DS of X/{name} commutative: {_yes(right)}")
    if left != right:
        report.say("DISAGREEMENT")
        report.witness("transfer", {"ds": name})
        report.fail()
    else:
        report.say("agree")


def cmd_state(args, report: Report) -> None:
    alg = _load(report, args.file)
    try:
        values = parse_state(args.values, alg)
    except ParseError as exc:
        raise UsageError(f"--values: {exc}") from None
    res = verify_bosbach(alg, values)
    entry: dict[str, Any] = {"accepted": res.accepted, "failure": res.failure or None}
    if res.accepted:
        entry["kernel"] = list(res.kernel.names(alg))
        entry["kernel_is_commutative_ds"] = res.kernel_is_commutative_ds
        report.say(f"Bosbach state: accepted; Ker(s) = {_subset_text(alg, res.kernel)}")
        if res.kernel_is_commutative_ds is not None:
            report.say(f"kernel is a commutative DS: {_yes(res.kernel_is_commutative_ds)}")
    else:
        report.fail()
        if res.failure == "bs2":
            x, y = res.witness
            a = alg.arrow
            v = lambda e: str(values[e])
            detail = (
                f"s({alg.names[x]})+s({alg.names[x]}->{alg.names[y]}) = {v(x)}+{v(a[x][y])}"
                f" != {v(y)}+{v(a[y][x])} = s({alg.names[y]})+s({alg.names[y]}->{alg.names[x]})"
            )
            binding = _bind(alg, (x, y))
        else:
            (x,) = res.witness
            detail = f"s({alg.names[x]}) = {values[x]}"
            binding = _bind(alg, (x,))
        report.witness(res.failure, binding, detail)
        report.say(f"rejected: {res.failure} fails at {_show_binding(binding)}: {detail}")
    report.results.append(entry)


def _flags(text: Optional[str]) -> frozenset[str]:
    return frozenset(t.strip() for t in (text or "").split(",") if t.strip())


def cmd_search(args, report: Report) -> None:
    if args.size > MAX_CANONICAL:
        raise UsageError(f"--size limited to {MAX_CANONICAL}")
    exhaustive = args.size <= MAX_EXHAUSTIVE if args.exhaustive is None else args.exhaustive
    try:
        spec = ModelSpec(args.size, _flags(args.require), _flags(args.forbid), args.limit, exhaustive)
        result = find_models(spec, workers=args.workers)
    except SearchError as exc:
        raise UsageError(str(exc)) from None
    report.census = dict(result.census)
    report.say(
        f"search size {args.size} ({'exhaustive' if exhaustive else 'streaming'}): "
        f"{result.census['matched']} matching of {result.census['enumerated']} enumerated"
    )
    for k, (alg, rep) in enumerate(zip(result.models, result.reports)):
        classes = sorted(f for f in ("iom", "qw", "om", "prel") if rep.has(f))
        report.results.append(
            {
                "elements": list(alg.names),
                "one": alg.names[alg.one],
                "zero": None if alg.zero is None else alg.names[alg.zero],
                "arrow": [[alg.names[v] for v in row] for row in alg.arrow],
                "classes": classes,
            }
        )
        report.say(f"# model {k + 1}: {', '.join(classes) or 'no listed class'}")
        report.say(serialize_alg(alg).rstrip())
    if result.discrepancies:
        report.fail()
        for idx, d in result.discrepancies:
            report.say(f"DISCREPANCY in model #{idx}: {d}")
            report.witness("cross-check", {"model": str(idx)}, d)


# -- argument parsing ---------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="iomalg", description="Finite IOM/QW algebra toolkit.")
    p.add_argument("--json", action="store_true", help="structured output")
    p.add_argument("--seedless", action="store_true", help="accepted for compatibility; runs are always deterministic")
    sub = p.add_subparsers(dest="cmd", required=True)

    def with_file(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("file", help=".alg file")
        return sp

    with_file("classify", "check axioms and class membership").set_defaults(func=cmd_classify)
    sp = with_file("laws", "run a law suite")
    sp.add_argument("--suite", default="all", choices=sorted(SUITES) + ["all"])
    sp.set_defaults(func=cmd_laws)
    sp = with_file("filters", "enumerate filters or deductive systems")
    sp.add_argument("--kind", default="filter", choices=("filter", "ds"))
    sp.add_argument("--classify", action="store_true", help="classify each member")
    sp.set_defaults(func=cmd_filters)
    sp = with_file("generate", "filter generated by elements")
    sp.add_argument("--elements", help="comma separated generators")
    sp.add_argument("--base", help="base filter for --adjoin (default {1})")
    sp.add_argument("--adjoin", help="element adjoined to --base")
    sp.set_defaults(func=cmd_generate)
    sp = with_file("congruence", "classes of the congruence induced by a DS")
    sp.add_argument("--ds", required=True)
    sp.add_argument("--allow-filter", action="store_true", help="accept a filter that is not a DS")
    sp.set_defaults(func=cmd_congruence)
    sp = with_file("quotient", "quotient algebra by a DS")
    sp.add_argument("--ds", required=True)
    sp.add_argument("-o", "--output", help="write the quotient as .alg")
    sp.set_defaults(func=cmd_quotient)
    sp = with_file("transfer", "commutativity of a DS versus its quotient")
    sp.add_argument("--ds", required=True)
    sp.set_defaults(func=cmd_transfer)
    sp = with_file("state", "verify a Bosbach state")
    sp.add_argument("--values", required=True, help='e.g. "0=0, a=1/2, 1=1"')
    sp.set_defaults(func=cmd_state)
    sp = sub.add_parser("search", help="find models by class flags")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--require", help="comma separated flags, e.g. iom,prel")
    sp.add_argument("--forbid", help="comma separated flags, e.g. qw")
    sp.add_argument("--limit", type=int)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=None)
    mode.add_argument("--stream", dest="exhaustive", action="store_false")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_search)
    return p


def run_command(argv: Sequence[str]) -> tuple[Report, int, bool]:
    """Run one invocation; returns the report, exit code and whether --json was given."""
    argv = list(argv)
    as_json = "--json" in argv
    echo = [a for a in argv if a != "--json"]
    parser = build_parser()
    report = Report(command={"argv": echo, "name": None})
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        report.exit_code = code
        return report, code, as_json
    report.command["name"] = args.cmd
    try:
        args.func(args, report)
    except UsageError as exc:
        _error(report, str(exc), EXIT_USAGE)
    except (CheckFailed, FilterError, CongruenceError, InvolutionError) as exc:
        _error(report, str(exc), EXIT_CHECK)
    except ConsistencyError as exc:
        values = {}
        if report.algebra is not None:
            names = report.algebra["elements"]
            values = {f"e{k}": names[x] for k, x in enumerate(exc.witness) if isinstance(x, int)}
        report.witness(exc.source, values, str(exc))
        _error(report, f"consistency check failed: {exc.source} (at {', '.join(values.values())})", EXIT_CHECK)
    except AlgebraError as exc:
        _error(report, str(exc), EXIT_USAGE)
    return report, report.exit_code, as_json


def _error(report: Report, message: str, code: int) -> None:
    report.results.append({"error": message})
    report.say(f"error: {message}")
    report.exit_code = code


def main(argv: Optional[Sequence[str]] = None) -> int:
    report, code, as_json = run_command(sys.argv[1:] if argv is None else argv)
    if report.command.get("name") is None and not report.lines:
        return code  # argparse already printed usage/help
    out = report.to_json() if as_json else report.to_text()
    (sys.stdout if code != EXIT_USAGE or as_json else sys.stderr).write(out)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

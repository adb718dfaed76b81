"""The ``.alg`` table format and the ``name=p/q`` state grammar."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from .algebra import AlgebraError, FiniteAlgebra


class ParseError(ValueError):
    """Malformed input; ``line`` and ``column`` are 1-based (0 when unknown)."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else ""
        super().__init__(where + message)


HEADERS = ("elements", "one", "zero", "arrow")


def _tokens(text: str, offset: int) -> list[tuple[str, int]]:
    """Whitespace separated tokens with 1-based columns."""
    return [(m.group(), m.start() + offset + 1) for m in re.finditer(r"\S+", text)]


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_alg(text: str) -> FiniteAlgebra:
    """Parse a table file: headers ``elements:``, ``one:``, optional ``zero:``, then ``arrow:`` and n rows."""
    lines = [(i + 1, _strip_comment(raw)) for i, raw in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln.strip()]
    pos = 0
    values: dict[str, tuple[int, list[tuple[str, int]]]] = {}
    expected = ["elements", "one", "zero", "arrow"]
    while pos < len(lines) and "arrow" not in values:
        no, ln = lines[pos]
        m = re.match(r"\s*([A-Za-z_]+)\s*:", ln)
        if not m:
            col = len(ln) - len(ln.lstrip()) + 1
            missing = next(h for h in expected if h not in values and h != "zero")
            raise ParseError(f"expected header '{missing}:'", no, col)
        key = m.group(1)
        col = m.start(1) + 1
        if key not in HEADERS:
            raise ParseError(f"unknown header '{key}:'", no, col)
        if key in values:
            raise ParseError(f"duplicate header '{key}:'", no, col)
        order = HEADERS.index(key)
        for earlier in HEADERS[:order]:
            if earlier not in values and earlier != "zero":
                raise ParseError(f"missing header '{earlier}:' before '{key}:'", no, col)
        for later in HEADERS[order + 1 :]:
            if later in values:
                raise ParseError(f"header '{key}:' must come before '{later}:'", no, col)
        values[key] = (no, _tokens(ln[m.end() :], m.end()))
        pos += 1
    if "arrow" not in values:
        no = lines[-1][0] if lines else 1
        for h in ("elements", "one", "arrow"):
            if h not in values:
                raise ParseError(f"missing header '{h}:'", no, 1)

    e_line, e_toks = values["elements"]
    if not e_toks:
        raise ParseError("'elements:' lists no elements", e_line, 1)
    names = [t for t, _ in e_toks]
    index: dict[str, int] = {}
    for name, col in e_toks:
        if name in index:
            raise ParseError(f"duplicate element name {name!r}", e_line, col)
        index[name] = len(index)

    def single(key: str) -> Optional[int]:
        if key not in values:
            return None
        no, toks = values[key]
        if len(toks) != 1:
            raise ParseError(f"'{key}:' takes exactly one element name", no, toks[1][1] if toks else 1)
        name, col = toks[0]
        if name not in index:
            raise ParseError(f"unknown element {name!r} in '{key}:'", no, col)
        return index[name]

    one = single("one")
    zero = single("zero")
    a_line, a_toks = values["arrow"]
    if a_toks:
        raise ParseError("arrow rows start on the line after 'arrow:'", a_line, a_toks[0][1])

    n = len(names)
    rows = []
    for k in range(n):
        if pos >= len(lines):
            last = lines[-1][0]
            raise ParseError(f"expected {n} arrow rows, found {k}", last + 1, 1)
        no, ln = lines[pos]
        toks = _tokens(ln, 0)
        if len(toks) != n:
            col = toks[n][1] if len(toks) > n else len(ln.rstrip()) + 1
            raise ParseError(f"arrow row has {len(toks)} entries, expected {n}", no, col)
        row = []
        for name, col in toks:
            if name not in index:
                raise ParseError(f"unknown element {name!r} in arrow row", no, col)
            row.append(index[name])
        rows.append(tuple(row))
        pos += 1
    if pos < len(lines):
        no, ln = lines[pos]
        raise ParseError("unexpected content after the arrow table", no, len(ln) - len(ln.lstrip()) + 1)
    try:
        return FiniteAlgebra(tuple(names), tuple(rows), one, zero)
    except AlgebraError as exc:
        raise ParseError(str(exc), a_line, 1) from exc


def serialize_alg(alg: FiniteAlgebra) -> str:
    width = max(len(s) for s in alg.names)
    cell = lambda x: alg.names[x].ljust(width)
    out = [f"elements: {' '.join(alg.names)}", f"one: {alg.names[alg.one]}"]
    if alg.zero is not None:
        out.append(f"zero: {alg.names[alg.zero]}")
    out.append("arrow:")
    for row in alg.arrow:
        out.append("  " + " ".join(cell(v) for v in row).rstrip())
    return "\n".join(out) + "\n"


_RATIONAL = re.compile(r"[+-]?\d+(?:/\d+)?")


def parse_state(text: str, alg: FiniteAlgebra) -> dict[int, Fraction]:
    """``name=p/q`` or ``name=k`` assignments, comma separated, one per element."""
    out: dict[int, Fraction] = {}
    col = 1
    for part in text.split(","):
        start = col + len(part) - len(part.lstrip())
        col += len(part) + 1
        item = part.strip()
        if not item:
            raise ParseError("empty assignment", 1, start)
        if item.count("=") != 1:
            raise ParseError(f"expected name=value, got {item!r}", 1, start)
        name, value = (s.strip() for s in item.split("="))
        if name not in alg.names:
            raise ParseError(f"unknown element {name!r}", 1, start)
        x = alg.index(name)
        if x in out:
            raise ParseError(f"duplicate assignment for {name!r}", 1, start)
        vcol = start + item.index("=") + 1
        if not _RATIONAL.fullmatch(value):
            raise ParseError(f"malformed rational {value!r}", 1, vcol)
        try:
            q = Fraction(value)
        except ZeroDivisionError:
            raise ParseError(f"zero denominator in {value!r}", 1, vcol) from None
        if not 0 <= q <= 1:
            raise ParseError(f"value {value} for {name!r} outside [0,1]", 1, vcol)
        out[x] = q
    missing = [alg.names[x] for x in alg.elements if x not in out]
    if missing:
        raise ParseError(f"no value for element(s) {', '.join(missing)}", 1, len(text) + 1)
    return out

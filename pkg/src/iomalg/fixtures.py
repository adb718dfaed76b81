"""Built-in algebras used throughout the test-suite and the CLI."""

from __future__ import annotations

from .algebra import FiniteAlgebra, validate

# Five-element IOM algebra that is not QW.
E5: FiniteAlgebra = validate(
    ["0", "a", "b", "c", "1"],
    [
        ["1", "1", "1", "1", "1"],
        ["b", "1", "b", "1", "1"],
        ["a", "1", "1", "1", "1"],
        ["c", "1", "1", "1", "1"],
        ["0", "a", "b", "c", "1"],
    ],
    one="1",
    zero="0",
)

# Classical two-element implication.
B2: FiniteAlgebra = validate(
    ["0", "1"],
    [
        ["1", "1"],
        ["0", "1"],
    ],
    one="1",
    zero="0",
)

# Degenerate one-element algebra (0 = 1).
TRIVIAL: FiniteAlgebra = validate(["1"], [["1"]], one="1", zero="1")


def relabel(alg: FiniteAlgebra, order: list[int]) -> FiniteAlgebra:
    """Re-declare the elements of ``alg`` in the given order (an isomorphic copy)."""
    pos = {old: new for new, old in enumerate(order)}
    names = [alg.names[i] for i in order]
    rows = [[pos[alg.arrow[i][j]] for j in order] for i in order]
    return FiniteAlgebra(
        tuple(names),
        tuple(tuple(r) for r in rows),
        pos[alg.one],
        None if alg.zero is None else pos[alg.zero],
    )

"""The 1-11 adjacency rule: decoding words to graphs and checking representations.

Two distinct vertices x, y are adjacent in the graph a word represents
exactly when the word restricted to {x, y} contains at most one factor
``xx`` or ``yy`` (occurrences counted with overlap).  A representation
must contain every vertex at least once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .graphs import Graph, from_edges
from .words import Word

__all__ = [
    "pair_square_count",
    "adjacent_in_word",
    "decode",
    "verify",
    "explain",
    "PairMismatch",
    "Verification",
]


def pair_square_count(letters: Sequence[str], x: str, y: str) -> int:
    """count(xx) + count(yy) in the {x, y}-restriction of ``letters``."""
    last = None
    count = 0
    for t in letters:
        if t == x or t == y:
            if t == last:
                count += 1
            last = t
    return count


def adjacent_in_word(w: Word, x: str, y: str) -> bool:
    if x == y:
        raise PreconditionError(f"adjacency needs two distinct vertices, got {x!r} twice")
    for v in (x, y):
        if v not in w.letters:
            raise PreconditionError(f"vertex {v!r} does not occur in the word")
    return pair_square_count(w.letters, x, y) <= 1


def _check_letters(w: Word, vertices: Sequence[str]) -> None:
    known = set(vertices)
    for i, t in enumerate(w.letters):
        if t not in known:
            raise InputError(f"letter {t!r} at index {i} is not a vertex")


def decode(w: Word, vertices: Iterable[str] | None = None) -> Graph:
    """The graph on ``vertices`` that ``w`` 1-11-represents.

    ``vertices`` defaults to the word's alphabet and fixes the vertex order
    of the result.
    """
    vertices = tuple(w.alphabet if vertices is None else vertices)
    _check_letters(w, vertices)
    present = set(w.letters)
    for v in vertices:
        if v not in present:
            raise InputError(f"vertex {v!r} does not occur in the word")
    edges = [
        (x, y)
        for i, x in enumerate(vertices)
        for y in vertices[i + 1 :]
        if pair_square_count(w.letters, x, y) <= 1
    ]
    return from_edges(vertices, edges)


@dataclass(frozen=True)
class PairMismatch:
    x: str
    y: str
    squares: int
    expected_adjacent: bool

    def describe(self) -> str:
        forced = "non-adjacency" if self.expected_adjacent else "adjacency"
        return f"pair ({self.x},{self.y}): {self.squares} squares, {forced} forced"


@dataclass(frozen=True)
class Verification:
    """Outcome of checking a word against a graph.

    ``reason`` is ``None`` on success, otherwise one of ``"foreign-letter"``,
    ``"uncovered-vertex"``, ``"pair-mismatch"``.
    """

    ok: bool
    reason: str | None = None
    detail: str = ""
    mismatches: tuple[PairMismatch, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok


def explain(g: Graph, w: Word) -> Verification:
    known = set(g.vertices)
    for i, t in enumerate(w.letters):
        if t not in known:
            return Verification(False, "foreign-letter", f"letter {t!r} at index {i} is not a vertex")
    present = set(w.letters)
    for v in g.vertices:
        if v not in present:
            return Verification(False, "uncovered-vertex", f"vertex {v!r} does not occur in the word")
    mismatches = []
    for x, y in g.pairs():
        squares = pair_square_count(w.letters, x, y)
        expected = g.has_edge(x, y)
        if (squares <= 1) != expected:
            mismatches.append(PairMismatch(x, y, squares, expected))
    if mismatches:
        return Verification(
            False, "pair-mismatch", "; ".join(m.describe() for m in mismatches), tuple(mismatches)
        )
    return Verification(True)


def verify(g: Graph, w: Word) -> bool:
    """True iff ``w`` covers every vertex of ``g`` and decodes to exactly ``g``."""
    return explain(g, w).ok

"""Finite automata recognizing the 1-11-representations of a graph.

For each vertex pair {a, b} a small DFA recognizes the words whose
{a, b}-restriction contains both letters and at most one factor ``aa`` or
``bb``.  A graph's representations are the intersection of these pair
languages (edges), their complements (non-edges), and the language of
words that mention every vertex.  Intersecting further with the
concatenations of permutations gives the permutational representations.

Products are explored lazily: tuple states are built on demand and a cap
on explored states turns blow-ups into :class:`ResourceError`.
"""

from __future__ import annotations

import json
from collections import deque
from itertools import product as iproduct
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import InputError, ResourceError
from .graphs import Graph
from .semantics import pair_square_count
from .words import Word

__all__ = [
    "DEFAULT_STATE_CAP",
    "Dfa",
    "LazyProduct",
    "pair_adjacent_dfa",
    "in_pair_language",
    "complement",
    "coverage_dfa",
    "perm_concat_dfa",
    "graph_language",
    "permutational_language",
    "member",
    "shortest_accepted",
    "is_empty",
    "enumerate_accepted",
    "materialize",
    "minimize",
    "export_dot",
    "export_json",
    "read_json",
    "figure1_dfa",
    "figure1_disagreements",
]

DEFAULT_STATE_CAP = 5_000_000

State = Hashable


class Dfa:
    """A complete DFA.  ``delta`` maps ``(state, letter)`` to a state."""

    def __init__(
        self,
        states: Iterable[State],
        alphabet: Iterable[str],
        start: State,
        accepting: Iterable[State],
        delta: Mapping[tuple[State, str], State],
    ):
        self.states = tuple(states)
        self.alphabet = tuple(alphabet)
        self.start = start
        self.accepting = frozenset(accepting)
        known = set(self.states)
        if len(known) != len(self.states):
            raise InputError("duplicate states")
        if start not in known:
            raise InputError(f"start state {start!r} is not a state")
        if not self.accepting <= known:
            raise InputError(f"accepting states {set(self.accepting - known)} are not states")
        table: dict[State, dict[str, State]] = {}
        for q in self.states:
            row = {}
            for a in self.alphabet:
                try:
                    target = delta[(q, a)]
                except KeyError:
                    raise InputError(f"transition function is not total: missing ({q!r}, {a!r})") from None
                if target not in known:
                    raise InputError(f"transition ({q!r}, {a!r}) leads to unknown state {target!r}")
                row[a] = target
            table[q] = row
        self._table = table
        self.cap = max(len(self.states), 1)

    @property
    def delta(self) -> dict[tuple[State, str], State]:
        return {(q, a): t for q, row in self._table.items() for a, t in row.items()}

    def step(self, q: State, a: str) -> State:
        return self._table[q][a]

    def is_accepting(self, q: State) -> bool:
        return q in self.accepting

    def accepts(self, word: Iterable[str]) -> bool:
        q = self.start
        for a in word:
            q = self._table[q][a]
        return q in self.accepting

    def __len__(self) -> int:
        return len(self.states)

    def __repr__(self) -> str:
        return f"<Dfa {len(self.states)} states over {' '.join(self.alphabet)}>"


class LazyProduct:
    """Intersection of DFAs over a shared alphabet, explored on demand.

    Each component carries a polarity: a negated component contributes its
    complement.  A tuple state accepts iff every component accepts under its
    polarity.
    """

    def __init__(
        self,
        components: Sequence[tuple[Dfa, bool]],
        alphabet: Sequence[str] | None = None,
        cap: int = DEFAULT_STATE_CAP,
        names: Sequence[str] | None = None,
    ):
        if not components:
            raise InputError("a product needs at least one component")
        if cap < 1:
            raise InputError(f"state cap must be positive, got {cap}")
        self.components = tuple((d, bool(neg)) for d, neg in components)
        self.alphabet = tuple(components[0][0].alphabet if alphabet is None else alphabet)
        for d, _ in self.components:
            if set(d.alphabet) != set(self.alphabet):
                raise InputError("product components must share one alphabet")
        self.cap = cap
        self.names = tuple(names) if names is not None else tuple(f"c{i}" for i in range(len(components)))
        self.start = tuple(d.start for d, _ in self.components)
        self._tables = [d._table for d, _ in self.components]
        self._accepting = [(d.accepting, neg) for d, neg in self.components]

    def step(self, state: tuple, a: str) -> tuple:
        return tuple(t[q][a] for t, q in zip(self._tables, state))

    def is_accepting(self, state: tuple) -> bool:
        return all((q in acc) != neg for (acc, neg), q in zip(self._accepting, state))

    def accepts(self, word: Iterable[str]) -> bool:
        return member(self, word)

    def with_cap(self, cap: int) -> "LazyProduct":
        return LazyProduct(self.components, self.alphabet, cap, self.names)

    def __repr__(self) -> str:
        return f"<LazyProduct of {len(self.components)} automata, cap {self.cap}>"


# -- component automata ------------------------------------------------------

def in_pair_language(letters: Sequence[str], a: str, b: str) -> bool:
    """Direct membership test for the pair language of {a, b}."""
    present = set(letters)
    return a in present and b in present and pair_square_count(letters, a, b) <= 1


def _check_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    alphabet = tuple(alphabet)
    if len(set(alphabet)) != len(alphabet):
        raise InputError(f"duplicate letters in alphabet {alphabet}")
    return alphabet


def pair_adjacent_dfa(a: str, b: str, alphabet: Iterable[str]) -> Dfa:
    """DFA for the words whose {a, b}-restriction contains both letters and
    at most one of the factors ``aa``, ``bb``.

    States are ``(last, seen_a, seen_b, squares)`` plus the sink ``"dead"``
    reached on a second square.  Other letters loop.
    """
    alphabet = _check_alphabet(alphabet)
    if a == b:
        raise InputError(f"pair automaton needs two distinct letters, got {a!r} twice")
    for x in (a, b):
        if x not in alphabet:
            raise InputError(f"letter {x!r} is not in the alphabet")

    def move(q, x):
        if q == "dead" or (x != a and x != b):
            return q
        last, seen_a, seen_b, squares = q
        if x == last:
            squares += 1
            if squares > 1:
                return "dead"
        return (x, seen_a or x == a, seen_b or x == b, squares)

    start = (None, False, False, 0)
    states, delta = _close(start, alphabet, move)
    accepting = [q for q in states if q != "dead" and q[1] and q[2]]
    return Dfa(states, alphabet, start, accepting, delta)


def _close(start, alphabet, move):
    """Reachable states of ``move`` from ``start`` in BFS order, with the transition table."""
    seen = {start}
    order = [start]
    delta = {}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for x in alphabet:
            t = move(q, x)
            delta[(q, x)] = t
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order, delta


def complement(d: Dfa) -> Dfa:
    return Dfa(d.states, d.alphabet, d.start, [q for q in d.states if q not in d.accepting], d.delta)


def coverage_dfa(alphabet: Iterable[str]) -> Dfa:
    """Words in which every letter of the alphabet occurs.  States are the seen subsets."""
    alphabet = _check_alphabet(alphabet)
    rank = {x: i for i, x in enumerate(alphabet)}

    def move(q, x):
        if x in q:
            return q
        return tuple(sorted(q + (x,), key=rank.__getitem__))

    states, delta = _close((), alphabet, move)
    # unreachable subsets never occur: every subset is reachable from the empty set
    return Dfa(states, alphabet, (), [alphabet], delta)


def perm_concat_dfa(alphabet: Iterable[str]) -> Dfa:
    """Nonempty concatenations of permutations of the alphabet.

    A state is the set of letters seen in the current block together with a
    flag recording that at least one block was completed; repeating a letter
    inside a block goes to ``"dead"``.
    """
    alphabet = _check_alphabet(alphabet)
    if not alphabet:
        raise InputError("empty alphabet")
    rank = {x: i for i, x in enumerate(alphabet)}
    full = len(alphabet)

    def move(q, x):
        if q == "dead":
            return q
        current, done = q
        if x in current:
            return "dead"
        current = tuple(sorted(current + (x,), key=rank.__getitem__))
        if len(current) == full:
            return ((), True)
        return (current, done)

    start = ((), False)
    states, delta = _close(start, alphabet, move)
    return Dfa(states, alphabet, start, [((), True)], delta)


def graph_language(g: Graph, coverage: bool = True, cap: int = DEFAULT_STATE_CAP) -> LazyProduct:
    """All words that 1-11-represent ``g``.

    ``coverage=False`` drops the requirement that every vertex occurs; it
    exists for comparison only, since without it words missing an isolated
    vertex slip through.
    """
    alphabet = g.vertices
    components: list[tuple[Dfa, bool]] = []
    names = []
    for x, y in g.pairs():
        adjacent = g.has_edge(x, y)
        components.append((pair_adjacent_dfa(x, y, alphabet), not adjacent))
        names.append(f"{'adj' if adjacent else 'nonadj'}({x},{y})")
    if coverage or not components:
        components.append((coverage_dfa(alphabet), False))
        names.append("coverage")
    return LazyProduct(components, alphabet, cap, names)


def permutational_language(g: Graph, coverage: bool = True, cap: int = DEFAULT_STATE_CAP) -> LazyProduct:
    base = graph_language(g, coverage, cap)
    return LazyProduct(
        base.components + ((perm_concat_dfa(g.vertices), False),),
        base.alphabet,
        cap,
        base.names + ("permutations",),
    )


# -- queries -----------------------------------------------------------------

def _letters(automaton, w) -> tuple[str, ...]:
    letters = tuple(w)
    known = set(automaton.alphabet)
    for i, t in enumerate(letters):
        if t not in known:
            raise InputError(f"letter {t!r} at index {i} is not in the automaton's alphabet")
    return letters


def member(automaton, w: Word | Sequence[str]) -> bool:
    q = automaton.start
    for a in _letters(automaton, w):
        q = automaton.step(q, a)
    return automaton.is_accepting(q)


def _cap_of(automaton, cap):
    return cap if cap is not None else getattr(automaton, "cap", DEFAULT_STATE_CAP)


def _explore(automaton, cap, max_depth=None):
    """BFS over reachable states.

    Returns the discovery order, parent pointers ``state -> (prev, letter)``
    and the explored transitions.  Stops expanding at ``max_depth``.
    """
    start = automaton.start
    parent = {start: None}
    depth = {start: 0}
    order = [start]
    edges: dict = {}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        if max_depth is not None and depth[q] >= max_depth:
            continue
        row = {}
        for a in automaton.alphabet:
            t = automaton.step(q, a)
            row[a] = t
            if t not in parent:
                if len(parent) >= cap:
                    raise ResourceError("explored-state cap exceeded", cap, len(queue) + 1)
                parent[t] = (q, a)
                depth[t] = depth[q] + 1
                order.append(t)
                queue.append(t)
        edges[q] = row
    return order, parent, edges


def _path(parent, q) -> list[str]:
    letters = []
    while parent[q] is not None:
        q, a = parent[q]
        letters.append(a)
    return letters[::-1]


def shortest_accepted(automaton, cap: int | None = None) -> Word | None:
    """A lexicographically least shortest accepted word, or ``None`` if the language is empty.

    BFS visits letters in alphabet order, so the first accepting state
    discovered carries the least witness of minimal length.
    """
    cap = _cap_of(automaton, cap)
    start = automaton.start
    if automaton.is_accepting(start):
        return Word((), automaton.alphabet)
    parent = {start: None}
    queue = deque([start])
    while queue:
        q = queue.popleft()
        for a in automaton.alphabet:
            t = automaton.step(q, a)
            if t in parent:
                continue
            if len(parent) >= cap:
                raise ResourceError("explored-state cap exceeded", cap, len(queue) + 1)
            parent[t] = (q, a)
            if automaton.is_accepting(t):
                return Word(_path(parent, t), automaton.alphabet)
            queue.append(t)
    return None


def is_empty(automaton, cap: int | None = None) -> bool:
    return shortest_accepted(automaton, cap) is None


def enumerate_accepted(automaton, max_len: int, cap: int | None = None) -> list[Word]:
    """Every accepted word of length at most ``max_len``, shortest first, then lexicographic."""
    if max_len < 0:
        raise InputError("max_len must be nonnegative")
    cap = _cap_of(automaton, cap)
    order, _, edges = _explore(automaton, cap, max_depth=max_len)
    # distance to acceptance over the explored part; only ever underestimates reach
    reverse: dict = {}
    for q, row in edges.items():
        for t in row.values():
            reverse.setdefault(t, []).append(q)
    dist = {q: 0 for q in order if automaton.is_accepting(q)}
    queue = deque(dist)
    while queue:
        t = queue.popleft()
        for q in reverse.get(t, ()):
            if q not in dist:
                dist[q] = dist[t] + 1
                queue.append(q)

    alphabet = automaton.alphabet
    found: list[Word] = []

    def walk(q, prefix, remaining):
        if remaining == 0:
            if automaton.is_accepting(q):
                found.append(Word(prefix, alphabet))
            return
        row = edges[q]
        for a in alphabet:
            t = row[a]
            if dist.get(t, remaining) <= remaining - 1:
                prefix.append(a)
                walk(t, prefix, remaining - 1)
                prefix.pop()

    for length in range(max_len + 1):
        if dist.get(automaton.start, length + 1) <= length:
            walk(automaton.start, [], length)
    return found


def materialize(automaton, cap: int | None = None) -> Dfa:
    """Explicit DFA of the reachable part, states numbered in BFS discovery order."""
    cap = _cap_of(automaton, cap)
    order, _, edges = _explore(automaton, cap)
    index = {q: i for i, q in enumerate(order)}
    delta = {(index[q], a): index[t] for q, row in edges.items() for a, t in row.items()}
    accepting = [index[q] for q in order if automaton.is_accepting(q)]
    return Dfa(range(len(order)), automaton.alphabet, 0, accepting, delta)


def _bfs_numbering(d: Dfa) -> list[State]:
    order, _ = _close(d.start, d.alphabet, d.step)
    seen = set(order)
    return order + [q for q in d.states if q not in seen]


def minimize(d: Dfa) -> Dfa:
    """Minimal DFA by Moore partition refinement on the reachable part.

    States of the result are integers in BFS order from the start, so two
    equivalent automata minimize to identical objects.
    """
    reachable, _ = _close(d.start, d.alphabet, d.step)
    block = {q: int(q in d.accepting) for q in reachable}
    count = len(set(block.values()))
    while True:
        signatures: dict = {}
        refined = {}
        for q in reachable:
            sig = (block[q],) + tuple(block[d.step(q, a)] for a in d.alphabet)
            refined[q] = signatures.setdefault(sig, len(signatures))
        block = refined
        if len(signatures) == count:
            break
        count = len(signatures)

    def move(b, a):
        return block[d.step(representative[b], a)]

    representative = {}
    for q in reachable:
        representative.setdefault(block[q], q)
    order, delta = _close(block[d.start], d.alphabet, move)
    index = {b: i for i, b in enumerate(order)}
    return Dfa(
        range(len(order)),
        d.alphabet,
        0,
        [index[b] for b in order if representative[b] in d.accepting],
        {(index[b], a): index[t] for (b, a), t in delta.items()},
    )


# -- export ------------------------------------------------------------------

def _as_dfa(automaton, cap=None) -> Dfa:
    return automaton if isinstance(automaton, Dfa) else materialize(automaton, cap)


def export_json(automaton, cap: int | None = None) -> str:
    d = _as_dfa(automaton, cap)
    order = _bfs_numbering(d)
    index = {q: i for i, q in enumerate(order)}
    data = {
        "states": list(range(len(order))),
        "alphabet": list(d.alphabet),
        "start": index[d.start],
        "accepting": sorted(index[q] for q in d.accepting),
        "transitions": [[index[q], a, index[d.step(q, a)]] for q in order for a in d.alphabet],
    }
    return json.dumps(data, indent=None, separators=(", ", ": "))


def read_json(text: str) -> Dfa:
    try:
        data = json.loads(text)
        delta = {(int(s), str(a)): int(t) for s, a, t in data["transitions"]}
        return Dfa(
            [int(s) for s in data["states"]],
            [str(a) for a in data["alphabet"]],
            int(data["start"]),
            [int(s) for s in data["accepting"]],
            delta,
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed DFA JSON: {exc}") from exc


def _dot_id(text: str) -> str:
    return json.dumps(text)


def export_dot(automaton, cap: int | None = None, name: str = "dfa") -> str:
    d = _as_dfa(automaton, cap)
    order = _bfs_numbering(d)
    index = {q: i for i, q in enumerate(order)}
    lines = [f"digraph {_dot_id(name)} {{", "  rankdir=LR;", "  __start [shape=point];"]
    for q in order:
        peripheries = 2 if q in d.accepting else 1
        lines.append(f"  {index[q]} [shape=circle, peripheries={peripheries}];")
    lines.append(f"  __start -> {index[d.start]};")
    for q in order:
        grouped: dict[int, list[str]] = {}
        for a in d.alphabet:
            grouped.setdefault(index[d.step(q, a)], []).append(a)
        for t, letters in grouped.items():
            lines.append(f"  {index[q]} -> {t} [label={_dot_id(','.join(letters))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- the six-state automaton as drawn -----------------------------------------

def figure1_dfa(a: str = "a", b: str = "b", alphabet: Iterable[str] = ("a", "b", "c")) -> Dfa:
    """The six-state automaton q0..q5 with accepting set {q2, q4}, transcribed as drawn.

    Kept for diagnostics only; it does not recognize the pair language.
    """
    alphabet = _check_alphabet(alphabet)
    on_a = {"q0": "q1", "q1": "q2", "q2": "q5", "q3": "q1", "q4": "q2", "q5": "q5"}
    on_b = {"q0": "q3", "q1": "q3", "q2": "q4", "q3": "q4", "q4": "q5", "q5": "q5"}
    states = ["q0", "q1", "q2", "q3", "q4", "q5"]
    delta = {}
    for q in states:
        for x in alphabet:
            delta[(q, x)] = on_a[q] if x == a else on_b[q] if x == b else q
    return Dfa(states, alphabet, "q0", ["q2", "q4"], delta)


def figure1_disagreements(
    a: str = "a", b: str = "b", alphabet: Iterable[str] = ("a", "b", "c"), max_len: int = 4
) -> list[tuple[Word, bool, bool]]:
    """Words up to ``max_len`` where the drawn automaton and the pair language differ.

    Each entry is ``(word, drawn_automaton_accepts, definition_accepts)``.
    """
    alphabet = _check_alphabet(alphabet)
    drawn = figure1_dfa(a, b, alphabet)
    out = []
    for length in range(max_len + 1):
        for letters in iproduct(alphabet, repeat=length):
            got = drawn.accepts(letters)
            want = in_pair_language(letters, a, b)
            if got != want:
                out.append((Word(letters, alphabet), got, want))
    return out

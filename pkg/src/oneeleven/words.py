"""Words over a vertex alphabet: restriction, factor counting, repetitions.

Letters are arbitrary nonempty tokens, so a word is a sequence of tokens
rather than a string of characters.  Two text encodings exist: the
canonical one separates tokens by whitespace, the compact one reads every
non-blank character as its own token.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InputError

__all__ = [
    "Word",
    "Repetition",
    "restrict",
    "count_factor",
    "find_repetitions",
    "is_square_free",
    "is_cube_free",
    "parse_word",
    "format_word",
]


def _check_token(token: str) -> str:
    if not isinstance(token, str) or not token or any(c.isspace() for c in token):
        raise InputError(f"invalid letter {token!r}: letters are nonempty tokens without whitespace")
    return token


@dataclass(frozen=True, eq=False)
class Word:
    """An immutable word with an explicit ordered alphabet.

    When ``alphabet`` is omitted it is taken to be the distinct letters in
    order of first occurrence.  Equality and hashing only look at the
    letters.
    """

    letters: tuple[str, ...]
    alphabet: tuple[str, ...] = ()

    def __init__(self, letters: Iterable[str], alphabet: Iterable[str] | None = None):
        letters = tuple(_check_token(str(t)) for t in letters)
        if alphabet is None:
            alphabet = tuple(dict.fromkeys(letters))
        else:
            alphabet = tuple(_check_token(str(t)) for t in alphabet)
            if len(set(alphabet)) != len(alphabet):
                raise InputError(f"duplicate letters in alphabet {alphabet}")
            known = set(alphabet)
            for i, t in enumerate(letters):
                if t not in known:
                    raise InputError(f"letter {t!r} at index {i} is not in the alphabet")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "alphabet", alphabet)

    @classmethod
    def parse(cls, text: str, alphabet: Iterable[str] | None = None, compact: bool = False) -> "Word":
        return parse_word(text, alphabet, compact=compact)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[str]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index], self.alphabet)
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        alphabet = tuple(dict.fromkeys(self.alphabet + other.alphabet))
        return Word(self.letters + other.letters, alphabet)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def __str__(self) -> str:
        return format_word(self)

    def is_compactable(self) -> bool:
        return all(len(t) == 1 for t in self.alphabet)


@dataclass(frozen=True, order=True)
class Repetition:
    """A square (degree 2) or cube (degree 3) located in a word."""

    start: int
    period: int
    degree: int = 2

    @property
    def end(self) -> int:
        return self.start + self.degree * self.period

    def blocks(self, word: Word) -> list[tuple[str, ...]]:
        return [
            word.letters[self.start + k * self.period : self.start + (k + 1) * self.period]
            for k in range(self.degree)
        ]

    def holds_in(self, word: Word) -> bool:
        if self.period < 1 or self.start < 0 or self.end > len(word):
            return False
        first, *rest = self.blocks(word)
        return all(b == first for b in rest)


def parse_word(text: str, alphabet: Iterable[str] | None = None, compact: bool = False) -> Word:
    """Read a word from text.

    In compact mode whitespace is ignored and every remaining character is
    a letter; otherwise tokens are separated by whitespace.
    """
    if compact:
        tokens = [c for c in text if not c.isspace()]
    else:
        tokens = text.split()
    return Word(tokens, alphabet)


def format_word(w: Word, compact: bool | None = None) -> str:
    """Serialize ``w``; ``compact=None`` picks compact form when every letter is one character."""
    if compact is None:
        compact = w.is_compactable() and all(len(t) == 1 for t in w.letters)
    if compact:
        if any(len(t) != 1 for t in w.letters):
            raise InputError("compact form needs single-character letters")
        return "".join(w.letters)
    return " ".join(w.letters)


def restrict(w: Word, keep: Iterable[str]) -> Word:
    keep = tuple(dict.fromkeys(keep))
    known = set(w.alphabet)
    for x in keep:
        if x not in known:
            raise InputError(f"vertex {x!r} is not in the alphabet {w.alphabet}")
    wanted = set(keep)
    alphabet = tuple(x for x in w.alphabet if x in wanted)
    return Word((t for t in w.letters if t in wanted), alphabet)


def count_factor(w: Word | Sequence[str], f: Word | Sequence[str]) -> int:
    """Number of (possibly overlapping) occurrences of ``f`` in ``w``."""
    hay = tuple(w)
    needle = tuple(f)
    if not needle:
        raise InputError("factor must be nonempty")
    m = len(needle)
    return sum(1 for i in range(len(hay) - m + 1) if hay[i : i + m] == needle)


def find_repetitions(w: Word | Sequence[str], degree: int = 2) -> list[Repetition]:
    """All (start, period) pairs where ``degree`` equal blocks follow each other.

    The scan is the direct quadratic one; words here are short.
    """
    if degree not in (2, 3):
        raise InputError(f"degree must be 2 or 3, got {degree}")
    letters = tuple(w)
    n = len(letters)
    found = []
    for start in range(n):
        for period in range(1, (n - start) // degree + 1):
            first = letters[start : start + period]
            if all(
                letters[start + k * period : start + (k + 1) * period] == first
                for k in range(1, degree)
            ):
                found.append(Repetition(start, period, degree))
    return found


def _has_repetition(letters: Sequence[str], degree: int) -> bool:
    n = len(letters)
    for start in range(n):
        for period in range(1, (n - start) // degree + 1):
            first = letters[start : start + period]
            if all(
                letters[start + k * period : start + (k + 1) * period] == first
                for k in range(1, degree)
            ):
                return True
    return False


def is_square_free(w: Word | Sequence[str]) -> bool:
    return not _has_repetition(tuple(w), 2)


def is_cube_free(w: Word | Sequence[str]) -> bool:
    return not _has_repetition(tuple(w), 3)

"""Words made of permutation blocks, and cube removal inside them.

In a concatenation of permutations of an n-letter alphabet every cube
``XXX`` has ``|X|`` divisible by n, and deleting the middle copy of ``X``
leaves a concatenation of permutations representing the same graph.
Deleting one of two equal adjacent blocks is likewise harmless.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError, InvariantViolation, NotPermutationalError
from .words import Repetition, Word, find_repetitions

__all__ = [
    "PermWord",
    "split_blocks",
    "from_blocks",
    "lemma1_violations",
    "remove_duplicate_block",
    "remove_middle_of_cube",
    "iter_cube_removals",
    "cube_free_normalize",
]


@dataclass(frozen=True)
class PermWord:
    word: Word
    blocks: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.word.alphabet)

    @property
    def alphabet(self) -> tuple[str, ...]:
        return self.word.alphabet

    def block(self, i: int) -> tuple[str, ...]:
        lo, hi = self.blocks[i]
        return self.word.letters[lo:hi]

    def block_words(self) -> list[tuple[str, ...]]:
        return [self.block(i) for i in range(len(self.blocks))]

    def __len__(self) -> int:
        return len(self.blocks)

    def format(self, compact: bool | None = None, sep: str = " ") -> str:
        """Blocks rendered one after another, separated by ``sep``."""
        from .words import format_word

        return sep.join(format_word(Word(b, self.alphabet), compact) for b in self.block_words())


def split_blocks(w: Word, vertices: Iterable[str] | None = None) -> PermWord:
    """Cut ``w`` at multiples of n and check that every piece is a permutation."""
    vertices = tuple(w.alphabet if vertices is None else vertices)
    n = len(vertices)
    if n == 0:
        raise InputError("empty alphabet")
    word = Word(w.letters, vertices)
    if len(word) == 0:
        raise NotPermutationalError("empty word is not a concatenation of permutations", None)
    if len(word) % n:
        raise NotPermutationalError(
            f"length {len(word)} is not a multiple of {n}", len(word) // n
        )
    full = set(vertices)
    blocks = []
    for b, lo in enumerate(range(0, len(word), n)):
        piece = word.letters[lo : lo + n]
        if set(piece) != full:
            raise NotPermutationalError(
                f"block {b} ({' '.join(piece)}) is not a permutation of the alphabet", b
            )
        blocks.append((lo, lo + n))
    return PermWord(word, tuple(blocks))


def from_blocks(blocks: Iterable[Iterable[str]], vertices: Iterable[str]) -> PermWord:
    letters = [t for b in blocks for t in b]
    return split_blocks(Word(letters, tuple(vertices)))


def lemma1_violations(pw: PermWord) -> list[Repetition]:
    """Cubes whose period is not a multiple of n.  Always empty in a correct world."""
    n = pw.n
    return [r for r in find_repetitions(pw.word, 3) if r.period % n]


def remove_duplicate_block(pw: PermWord, i: int) -> PermWord:
    """Drop block ``i`` when block ``i + 1`` is identical to it."""
    if not 0 <= i < len(pw.blocks) - 1:
        raise InputError(f"block index {i} has no successor in a word of {len(pw.blocks)} blocks")
    if pw.block(i) != pw.block(i + 1):
        raise InputError(f"blocks {i} and {i + 1} differ")
    lo, hi = pw.blocks[i]
    letters = pw.word.letters[:lo] + pw.word.letters[hi:]
    return split_blocks(Word(letters, pw.alphabet))


def remove_middle_of_cube(pw: PermWord, rep: Repetition) -> PermWord:
    if rep.degree != 3 or not rep.holds_in(pw.word):
        raise InputError(f"{rep} is not a cube of the word")
    if rep.period % pw.n:
        raise InvariantViolation(
            f"cube at {rep.start} has period {rep.period}, not a multiple of {pw.n}"
        )
    letters = pw.word.letters
    cut = letters[: rep.start + rep.period] + letters[rep.start + 2 * rep.period :]
    try:
        return split_blocks(Word(cut, pw.alphabet))
    except NotPermutationalError as exc:
        raise InvariantViolation(f"blocks failed to restitch after removing {rep}: {exc}") from exc


def iter_cube_removals(pw: PermWord) -> Iterator[tuple[Repetition, PermWord]]:
    """Yield (cube, word after removal) until no cube is left.

    Always removes the leftmost cube, shortest period first, and rescans
    after each step.
    """
    while True:
        cubes = find_repetitions(pw.word, 3)
        if not cubes:
            return
        rep = cubes[0]
        pw = remove_middle_of_cube(pw, rep)
        yield rep, pw


def cube_free_normalize(pw: PermWord) -> PermWord:
    for _, pw in iter_cube_removals(pw):
        pass
    return pw

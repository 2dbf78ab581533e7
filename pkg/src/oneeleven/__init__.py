"""1-11-representations of graphs: decoding, repetition removal, search, and automata."""

from .errors import (
    InputError,
    InvariantViolation,
    NotPermutationalError,
    OneElevenError,
    PreconditionError,
    ResourceError,
    SearchBoundExceeded,
)
from .graphs import Graph, complete, disjoint_union, empty_graph, from_edges, k3_plus_isolated, parse_graph
from .permutational import PermWord, cube_free_normalize, split_blocks
from .semantics import adjacent_in_word, decode, explain, verify
from .words import Repetition, Word, count_factor, find_repetitions, is_cube_free, is_square_free, restrict

__version__ = "0.1.0"

__all__ = [
    "InputError",
    "InvariantViolation",
    "NotPermutationalError",
    "OneElevenError",
    "PreconditionError",
    "ResourceError",
    "SearchBoundExceeded",
    "Graph",
    "complete",
    "disjoint_union",
    "empty_graph",
    "from_edges",
    "k3_plus_isolated",
    "parse_graph",
    "PermWord",
    "cube_free_normalize",
    "split_blocks",
    "adjacent_in_word",
    "decode",
    "explain",
    "verify",
    "Repetition",
    "Word",
    "count_factor",
    "find_repetitions",
    "is_cube_free",
    "is_square_free",
    "restrict",
]

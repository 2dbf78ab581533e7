"""Command-line interface.

Exit codes: 0 success / true, 1 verification false, 2 input error,
3 resource cap or search bound exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import automata, permutational, search, semantics
from .errors import InputError, ResourceError, SearchBoundExceeded
from .graphs import Graph, load_graph
from .words import find_repetitions, format_word, parse_word

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3
CAP_ENV = "ONEELEVEN_STATE_CAP"


def _default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None:
        return automata.DEFAULT_STATE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise InputError(f"{CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InputError(f"{CAP_ENV} must be positive")
    return cap


def _read_source(arg: str) -> list[str]:
    """Words from '-' (stdin), a file, or the argument itself; one word per nonblank line."""
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    else:
        return [arg]
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise InputError("no word given")
    return lines


def _read_graph(path: str) -> Graph:
    if path == "-":
        return load_graph(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return load_graph(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read graph file {path!r}: {exc.strerror}") from exc


def _compact_for(alphabet: Sequence[str], tokens: bool) -> bool:
    return not tokens and all(len(t) == 1 for t in alphabet)


def cmd_decode(args) -> int:
    alphabet = tuple(args.alphabet)
    compact = _compact_for(alphabet, args.tokens)
    out = []
    for text in _read_source(args.word):
        w = parse_word(text, alphabet, compact=compact)
        out.append(semantics.decode(w, alphabet).to_text())
    sys.stdout.write("\n".join(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    compact = _compact_for(g.vertices, args.tokens)
    status = EXIT_OK
    sources = _read_source(args.word)
    for text in sources:
        w = parse_word(text, compact=compact)
        result = semantics.explain(g, w)
        if result.reason == "foreign-letter":
            raise InputError(result.detail)
        prefix = f"{text.strip()}: " if len(sources) > 1 else ""
        print(prefix + ("true" if result.ok else "false"))
        if not result.ok:
            status = EXIT_FALSE
            if result.mismatches:
                for m in result.mismatches:
                    print("  " + m.describe())
            else:
                print("  " + result.detail)
    return status


def cmd_repnum(args) -> int:
    g = _read_graph(args.graph)
    if args.permutational:
        k, pw = search.perm_rep_number(g, max_blocks=args.max or 6)
        print(k)
        print("witness:", format_word(pw.word))
        print("blocks:", pw.format())
    else:
        k, w = search.rep_number(g, max_len=args.max)
        print(k)
        print("witness:", format_word(w))
    return EXIT_OK


def cmd_cubefree(args) -> int:
    alphabet = tuple(args.alphabet)
    compact = _compact_for(alphabet, args.tokens)
    w = parse_word(args.word, alphabet, compact=compact)
    pw = permutational.split_blocks(w, alphabet)
    steps = list(permutational.iter_cube_removals(pw))
    result = steps[-1][1] if steps else pw
    print(format_word(result.word, compact))
    print(f"removals: {len(steps)}")
    for rep, after in steps:
        print(f"  removed middle copy at start={rep.start} period={rep.period} -> {format_word(after.word, compact)}")
    return EXIT_OK


def cmd_dfa(args) -> int:
    if args.figure1:
        letters = tuple(args.letters)
        if len(letters) < 2:
            raise InputError("--letters needs at least two letters")
        diffs = automata.figure1_disagreements(letters[0], letters[1], letters, args.max_len)
        print(f"drawn automaton disagrees with the pair language on {len(diffs)} words up to length {args.max_len}")
        for w, drawn, definition in diffs:
            shown = format_word(w) or "(empty)"
            print(f"  {shown}: drawn={'accept' if drawn else 'reject'} definition={'accept' if definition else 'reject'}")
        return EXIT_OK
    if args.graph is None:
        raise InputError("dfa needs a graph file (or --figure1)")
    g = _read_graph(args.graph)
    cap = args.cap if args.cap is not None else _default_cap()
    build = automata.permutational_language if args.permutational else automata.graph_language
    lang = build(g, coverage=not args.no_coverage, cap=cap)
    d = automata.materialize(lang, cap)
    if args.minimize:
        d = automata.minimize(d)
    if args.emit == "dot":
        sys.stdout.write(automata.export_dot(d))
    else:
        sys.stdout.write(automata.export_json(d) + "\n")
    return EXIT_OK


def cmd_detect(args) -> int:
    compact = not args.tokens and not any(c.isspace() for c in args.word.strip())
    w = parse_word(args.word, compact=compact)
    reps = find_repetitions(w, 3 if args.cubes else 2)
    if not reps:
        print("none")
    for r in reps:
        print(f"({r.start},{r.period})")
    return EXIT_OK


def cmd_audit(args) -> int:
    report = search.audit_paper_theorems(extended=args.extended, seed=args.seed, samples=args.samples)
    print(search.report_json(report))
    return EXIT_OK if report["all_passed"] else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="oneeleven", description="1-11-representations of graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", help="print the graph a word represents")
    p.add_argument("word", help="word, file of words, or - for stdin")
    p.add_argument("--alphabet", nargs="+", required=True)
    p.add_argument("--tokens", action="store_true", help="whitespace-separated letters")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("verify", help="check that a word represents a graph")
    p.add_argument("graph")
    p.add_argument("word", help="word, file of words, or - for stdin")
    p.add_argument("--tokens", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("repnum", help="representation number with a witness")
    p.add_argument("graph")
    p.add_argument("--permutational", action="store_true")
    p.add_argument("--max", type=int, help="largest length (or block count) to try")
    p.set_defaults(func=cmd_repnum)

    p = sub.add_parser("cubefree", help="remove cubes from a permutational word")
    p.add_argument("word")
    p.add_argument("--alphabet", nargs="+", required=True)
    p.add_argument("--tokens", action="store_true")
    p.set_defaults(func=cmd_cubefree)

    p = sub.add_parser("dfa", help="export the automaton of a graph's representations")
    p.add_argument("graph", nargs="?")
    p.add_argument("--permutational", action="store_true")
    p.add_argument("--minimize", action="store_true")
    p.add_argument("--emit", choices=("dot", "json"), default="dot")
    p.add_argument("--cap", type=int)
    p.add_argument("--no-coverage", action="store_true", help="do not require every vertex to occur")
    p.add_argument("--figure1", action="store_true", help="compare the drawn six-state automaton with the pair language")
    p.add_argument("--letters", nargs="+", default=["a", "b", "c"])
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(func=cmd_dfa)

    p = sub.add_parser("detect", help="list squares or cubes")
    p.add_argument("word")
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument("--squares", action="store_true")
    kind.add_argument("--cubes", action="store_true")
    p.add_argument("--tokens", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("audit", help="exhaustively check the counterexample and cube-removal claims")
    p.add_argument("--extended", action="store_true", help="add random samples for n = 4, 5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10_000)
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ResourceError, SearchBoundExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())

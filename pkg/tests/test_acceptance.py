"""Acceptance criteria.  Each test is one criterion; a per-criterion
PASS/FAIL line is printed in the terminal summary."""

import random
import time
from itertools import permutations, product

import pytest

from oneeleven.automata import (
    figure1_disagreements,
    graph_language,
    member,
    pair_adjacent_dfa,
    permutational_language,
    shortest_accepted,
)
from oneeleven.cli import main
from oneeleven.errors import NotPermutationalError
from oneeleven.graphs import all_labeled_graphs, k3_plus_isolated
from oneeleven.permutational import (
    cube_free_normalize,
    from_blocks,
    lemma1_violations,
    remove_middle_of_cube,
    split_blocks,
)
from oneeleven.search import enumerate_representations, iter_perm_words, perm_rep_number, rep_number
from oneeleven.semantics import decode, verify
from oneeleven.words import Word, find_repetitions, is_cube_free, is_square_free

from oracles import brute_repetitions, is_perm_concat, represents, words_upto

GSTAR = k3_plus_isolated()
V4 = list(GSTAR.vertices)


def timed(fn):
    t0 = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - t0


@pytest.mark.criterion(1, "R(G*) = 6 via repnum and via the automaton's shortest word (< 5 s)")
def test_c1_min_length(tmp_path, capsys):
    path = tmp_path / "gstar.txt"
    path.write_text(GSTAR.to_text())

    def both():
        code = main(["repnum", str(path)])
        out = capsys.readouterr().out
        return code, out, shortest_accepted(graph_language(GSTAR))

    (code, out, shortest), elapsed = timed(both)
    assert code == 0
    assert out.splitlines()[0] == "6"
    assert len(shortest) == 6
    assert rep_number(GSTAR)[0] == 6
    assert elapsed < 5


@pytest.mark.criterion(2, "all 24 length-6 representations of G* contain vvv; none cube-free (< 5 s)")
def test_c2_minimal_words_contain_cube():
    words, elapsed = timed(lambda: enumerate_representations(GSTAR, 6))
    assert elapsed < 5
    assert len(words) == 24
    for w in words:
        assert "vvv" in "".join(w)
        assert not is_cube_free(w)
    # independent: unpruned scan of all 4^6 words with the definitional oracle
    brute = [x for x in words_upto(V4, 6, min_len=6) if represents(list(x), V4, GSTAR.edges)]
    assert sorted(brute) == sorted(tuple(w) for w in words)
    # and nothing shorter
    assert not any(represents(list(x), V4, GSTAR.edges) for x in words_upto(V4, 5))


@pytest.mark.criterion(3, "R_pi(G*) = 3: no 2-block rep, >= 1 3-block rep, every 3-block rep has a square (< 30 s)")
def test_c3_perm_number_and_squares():
    def run():
        perms = list(permutations(V4))
        assert len(perms) == 24
        two = [b for b in product(perms, repeat=2) if verify(GSTAR, Word(sum(b, ()), V4))]
        three = [b for b in product(perms, repeat=3) if verify(GSTAR, Word(sum(b, ()), V4))]
        return two, three

    (two, three), elapsed = timed(run)
    assert elapsed < 30
    assert two == []
    assert three
    for blocks in three:
        letters = sum(blocks, ())
        assert not is_square_free(letters)
        assert brute_repetitions(list(letters), 2)
    k, pw = perm_rep_number(GSTAR)
    assert k == 3 and verify(GSTAR, pw.word)
    # the 11-letter word is not a concatenation of permutations and does not represent G*
    printed = Word("123v123v123", V4)
    with pytest.raises(NotPermutationalError):
        split_blocks(printed, V4)
    assert not verify(GSTAR, printed)


@pytest.mark.criterion(4, "cubes in permutational words have period divisible by n: n=3 exhaustive, 10,000 samples n=4 (< 30 s)")
def test_c4_cube_periods():
    def run():
        exhaustive = 0
        for pw in iter_perm_words(("1", "2", "3"), 4):
            exhaustive += 1
            assert lemma1_violations(pw) == []
            assert all(p % 3 == 0 for _, p in brute_repetitions(list(pw.word), 3))
        rng = random.Random(20261016)
        vertices = ["1", "2", "3", "4"]
        for _ in range(10_000):
            blocks = [rng.sample(vertices, 4) for _ in range(rng.randint(1, 5))]
            assert lemma1_violations(from_blocks(blocks, vertices)) == []
        return exhaustive

    exhaustive, elapsed = timed(run)
    assert exhaustive == 6 + 36 + 216 + 1296
    assert elapsed < 30


@pytest.mark.criterion(5, "middle-copy removal preserves decode; normalization is cube-free and decode-invariant (n=3)")
def test_c5_cube_removal():
    cubes = 0
    for pw in iter_perm_words(("1", "2", "3"), 4):
        graph = decode(pw.word)
        for rep in find_repetitions(pw.word, 3):
            cubes += 1
            out = remove_middle_of_cube(pw, rep)
            assert is_perm_concat(list(out.word), ["1", "2", "3"])
            assert decode(out.word, pw.alphabet) == graph
            assert represents(list(out.word), ["1", "2", "3"], graph.edges)
        normal = cube_free_normalize(pw)
        assert is_cube_free(normal.word)
        assert brute_repetitions(list(normal.word), 3) == []
        assert decode(normal.word, pw.alphabet) == graph
    assert cubes > 0


@pytest.mark.criterion(6, "member(graph_language) = verify and member(permutational_language) = perm and verify on 8 graphs x 1,092 words (< 60 s)")
def test_c6_regularity_oracle():
    vertices = ["1", "2", "3"]

    def run():
        words = list(words_upto(vertices, 6, min_len=1))
        assert len(words) == 1092
        graphs = all_labeled_graphs(vertices)
        assert len(graphs) == 8
        for g in graphs:
            L = graph_language(g)
            P = permutational_language(g)
            for letters in words:
                w = Word(letters, vertices)
                ok = verify(g, w)
                assert ok == represents(list(letters), vertices, g.edges)
                assert member(L, w) == ok
                assert member(P, w) == (ok and is_perm_concat(list(letters), vertices))

    _, elapsed = timed(run)
    assert elapsed < 60


@pytest.mark.criterion(7, "pair automaton matches the restricted-word predicate; the drawn automaton's disagreement set is nonempty")
def test_c7_pair_automaton(capsys):
    alphabet = ("a", "b", "c")
    d = pair_adjacent_dfa("a", "b", alphabet)
    for letters in words_upto(alphabet, 6):
        r = [t for t in letters if t in "ab"]
        squares = sum(1 for x, y in zip(r, r[1:]) if x == y)
        expected = "a" in r and "b" in r and squares <= 1
        assert member(d, letters) == expected
    diffs = figure1_disagreements(max_len=6)
    assert diffs
    assert ("abab", False, True) in {("".join(w), got, want) for w, got, want in diffs}
    assert main(["dfa", "--figure1"]) == 0
    assert "abab: drawn=reject definition=accept" in capsys.readouterr().out


@pytest.mark.criterion(8, "rep_number = shortest accepted length for every labeled graph on <= 3 vertices")
def test_c8_search_automaton_agreement():
    graphs = [g for vs in (["1"], ["1", "2"], ["1", "2", "3"]) for g in all_labeled_graphs(vs)]
    assert len(graphs) == 11
    for g in graphs:
        k, _ = rep_number(g)
        assert len(shortest_accepted(graph_language(g))) == k

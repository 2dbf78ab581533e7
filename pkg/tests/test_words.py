import pytest
from hypothesis import given, strategies as st

from oneeleven.errors import InputError
from oneeleven.words import (
    Repetition,
    Word,
    count_factor,
    find_repetitions,
    format_word,
    is_cube_free,
    is_square_free,
    parse_word,
    restrict,
)

from oracles import brute_repetitions, naive_count, words_upto


def W(text, alphabet=None):
    return parse_word(text, alphabet, compact=True)


words_ab = st.lists(st.sampled_from("ab"), max_size=12).map(lambda xs: Word(xs, "ab"))
words_abc = st.lists(st.sampled_from("abc"), max_size=14).map(lambda xs: Word(xs, "abc"))


class TestWord:
    def test_letters_must_be_in_alphabet(self):
        with pytest.raises(InputError):
            Word(["a", "z"], ["a", "b"])

    def test_default_alphabet_is_first_occurrence_order(self):
        assert Word("vv12").alphabet == ("v", "1", "2")

    def test_equality_ignores_alphabet(self):
        assert Word("ab", "abc") == Word("ab", "ab")
        assert Word("ab") != Word("ba")

    def test_multichar_tokens(self):
        w = parse_word("x1 x2 x1")
        assert len(w) == 3 and w[0] == "x1"
        assert format_word(w) == "x1 x2 x1"
        with pytest.raises(InputError):
            format_word(w, compact=True)

    @pytest.mark.parametrize("text", ["123vvv", "", "abcacb"])
    def test_compact_round_trip(self, text):
        assert format_word(W(text), compact=True) == text

    @given(st.lists(st.sampled_from(["a", "bb", "c1", "v"]), max_size=10))
    def test_token_round_trip(self, tokens):
        w = Word(tokens)
        assert parse_word(format_word(w, compact=False)) == w

    def test_empty_or_spaced_tokens_rejected(self):
        with pytest.raises(InputError):
            Word(["a b"])
        with pytest.raises(InputError):
            Word([""])


class TestRestrict:
    @pytest.mark.parametrize(
        "word, keep, expected",
        [("123vvv", "1v", "1vvv"), ("abab", "ab", "abab"), ("12vvv3", "2v", "2vvv")],
    )
    def test_examples(self, word, keep, expected):
        r = restrict(W(word), keep)
        assert r == W(expected)
        assert set(r.alphabet) == set(keep)

    def test_unknown_vertex(self):
        with pytest.raises(InputError):
            restrict(W("abab"), "az")

    @given(words_abc, st.sets(st.sampled_from("abc")))
    def test_idempotent(self, w, keep):
        once = restrict(w, keep)
        assert restrict(once, keep) == once


class TestCountFactor:
    @pytest.mark.parametrize("word, f, expected", [("vvv", "vv", 2), ("abab", "aa", 0), ("aaaa", "aa", 3)])
    def test_examples(self, word, f, expected):
        assert count_factor(W(word), W(f)) == expected

    def test_empty_factor(self):
        with pytest.raises(InputError):
            count_factor(W("ab"), ())

    @given(words_abc, st.sampled_from("abc"))
    def test_overlap_law(self, w, x):
        # restricted to one letter the word is a single run, so it holds (run length - 1) squares
        only_x = restrict(w, [x])
        expected = max(0, len(only_x) - 1)
        assert count_factor(only_x, (x, x)) == expected
        assert naive_count(list(only_x.letters), [x, x]) == expected


class TestRepetitions:
    def test_block_square(self):
        assert Repetition(0, 4, 2) in find_repetitions(W("123v123v123"), 2)

    def test_vvv_cube(self):
        assert find_repetitions(W("vvv"), 3) == [Repetition(0, 1, 3)]

    def test_abcacb_square_free(self):
        assert brute_repetitions(list("abcacb"), 2) == []
        assert find_repetitions(W("abcacb"), 2) == []
        assert is_square_free(W("abcacb"))

    def test_predicates(self):
        assert not is_cube_free(W("123vvv"))
        assert is_square_free(W("ab"))
        # oracle: contains squares but no cube
        assert brute_repetitions(list("aabbaabb"), 3) == []
        assert brute_repetitions(list("aabbaabb"), 2)
        assert is_cube_free(W("aabbaabb"))
        assert not is_square_free(W("aabbaabb"))

    def test_bad_degree(self):
        with pytest.raises(InputError):
            find_repetitions(W("aa"), 4)

    @pytest.mark.parametrize("degree", [2, 3])
    def test_exhaustive_against_oracle(self, degree):
        for letters in words_upto("ab", 10):
            got = [(r.start, r.period) for r in find_repetitions(letters, degree)]
            assert got == brute_repetitions(letters, degree), letters

    @given(words_abc, st.sampled_from([2, 3]))
    def test_soundness(self, w, degree):
        reps = find_repetitions(w, degree)
        assert reps == sorted(reps)
        for r in reps:
            assert r.holds_in(w)
            assert r.end <= len(w)
        assert is_square_free(w) == (not find_repetitions(w, 2))
        assert is_cube_free(w) == (not find_repetitions(w, 3))

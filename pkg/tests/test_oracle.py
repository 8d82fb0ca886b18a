from __future__ import annotations

import random

import pytest
from hypothesis import given

from tanglekh.fuzz import random_closed_word
from tanglekh.invariant import closure, evaluate_closed
from tanglekh.laurent import LaurentPoly
from tanglekh.matchings import enumerate_matchings
from tanglekh.oracle import (
    HasCrossings,
    TooManyCrossings,
    circle_count_bruteforce,
    jones_at_one,
    kauffman_bracket,
)
from tanglekh.rewrite import Irreducible
from tanglekh.words import TangleWord, circle, identity, oplus, over, parse_word, trace_connectivity

from conftest import closed_words

LOOP = LaurentPoly({2: -1, -2: -1}, var="A")


class TestCircleCounter:
    def test_examples(self):
        assert circle_count_bruteforce(parse_word("0: cap1 . cup1")) == 1
        assert circle_count_bruteforce(parse_word("0: cap1 . cap2 . cup2 . cup1")) == 2
        assert circle_count_bruteforce(parse_word("0: cap1 . cap3 . cup2 . cup1")) == 1
        assert circle_count_bruteforce(parse_word("0:")) == 0

    @given(closed_words(max_len=14, crossings=False))
    def test_agrees_with_connectivity(self, w):
        assert circle_count_bruteforce(w) == trace_connectivity(w).closed_components

    def test_rejects_crossings(self):
        with pytest.raises(HasCrossings):
            circle_count_bruteforce(parse_word("0: cap1 . s1 . cup1"))

    def test_rejects_open(self):
        with pytest.raises(ValueError):
            circle_count_bruteforce(identity(1))


class TestBracket:
    def test_unknot(self):
        assert kauffman_bracket(parse_word("0: cap1 . cup1")) == LOOP
        assert jones_at_one(parse_word("0: cap1 . cup1")) == 2

    def test_empty(self):
        assert kauffman_bracket(parse_word("0:")) == LaurentPoly({0: 1}, var="A")

    @pytest.mark.parametrize("k", range(1, 6))
    def test_unlinks(self, k):
        w = parse_word("0:")
        for _ in range(k):
            w = oplus(w, circle())
        assert jones_at_one(w) == 2 ** k

    @pytest.mark.parametrize("text", ["0: cap1 . s1 . cup1", "0: cap1 . s1' . cup1"])
    def test_kinks(self, text):
        w = parse_word(text)
        assert jones_at_one(w) == 2
        # an R1 kink scales the bracket by -A^{+-3}
        b = kauffman_bracket(w)
        assert b in (LaurentPoly({3: -1}, var="A") * LOOP, LaurentPoly({-3: -1}, var="A") * LOOP)

    def test_hopf_and_trefoil(self):
        assert jones_at_one(parse_word("0: cap1 . cap3 . s2 . s2 . cup3 . cup1")) == 4
        assert jones_at_one(parse_word("0: cap1 . cap3 . s2 . s2 . s2 . cup3 . cup1")) == 2

    def test_too_many(self):
        gens = (parse_word("0: cap1 . cap3").gens + (over(2),) * 14 + parse_word("4: cup3 . cup1").gens)
        with pytest.raises(TooManyCrossings):
            kauffman_bracket(TangleWord(0, gens))

    def test_matching_closures(self):
        for a in enumerate_matchings(3):
            for b in enumerate_matchings(3):
                w = closure(a, identity(3), b)
                assert jones_at_one(w) == 2 ** circle_count_bruteforce(w)


def test_jones_matches_rank_on_reducible_words():
    rng = random.Random(5)
    checked = 0
    while checked < 100:
        w = random_closed_word(rng, max_len=14, max_crossings=3)
        try:
            rank = evaluate_closed(w, budget=20_000).total_rank
        except Irreducible:
            continue
        assert jones_at_one(w) == rank
        checked += 1

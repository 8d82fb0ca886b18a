from __future__ import annotations

import json
import random

import pytest
from hypothesis import given

from tanglekh.fuzz import random_closed_word
from tanglekh.graded import UNIT, V, poincare, tensor, tensor_power
from tanglekh.invariant import (
    IRREDUCIBLE,
    PairClass,
    classify_pairs,
    closure,
    evaluate_closed,
    hn,
    kh_sigma_ranks,
    kh_symp,
    kunneth_check,
    sigma_word,
    tables_differ,
    unlink_value,
)
from tanglekh.laurent import LaurentPoly
from tanglekh.matchings import Matching, ResourceLimit, enumerate_matchings, glue_circles
from tanglekh.oracle import circle_count_bruteforce
from tanglekh.rewrite import Irreducible, reduce_word
from tanglekh.words import ArityMismatch, circle, identity, oplus, parse_word

from conftest import closed_words

M12_34 = Matching(((1, 2), (3, 4)))
M14_23 = Matching(((1, 4), (2, 3)))
Q = LaurentPoly({1: 1, -1: 1}, var="q")


class TestEvaluate:
    def test_circle(self):
        assert evaluate_closed(parse_word("0: cap1 . cup1")) == V

    @pytest.mark.parametrize("k", range(0, 6))
    def test_disjoint_circles(self, k):
        w = parse_word("0:")
        for _ in range(k):
            w = oplus(w, circle())
        assert evaluate_closed(w) == tensor_power(V, k)

    @pytest.mark.parametrize("text", ["0: cap1 . s1 . cup1", "0: cap1 . s1' . cup1"])
    def test_kinks(self, text):
        assert evaluate_closed(parse_word(text)) == V

    def test_zigzag_unknot(self):
        assert evaluate_closed(parse_word("0: cap1 . cap1 . cup2 . cup1")) == V

    def test_nested(self):
        assert evaluate_closed(parse_word("0: cap1 . cap2 . cup2 . cup1")) == tensor(V, V)

    def test_open_rejected(self):
        with pytest.raises(ArityMismatch):
            evaluate_closed(identity(1))

    def test_linked_irreducible(self):
        with pytest.raises(Irreducible):
            evaluate_closed(parse_word("0: cap1 . cap3 . s2 . s2 . cup3 . cup1"))

    def test_random_order_same_value(self):
        w = parse_word("0: cap1 . cap2 . s1 . cap1 . cup2 . s3' . cup2 . cup1")
        for s in range(5):
            assert evaluate_closed(w, rng=random.Random(s)) == evaluate_closed(w)

    @given(closed_words(max_len=12, crossings=False))
    def test_flat_is_unlink(self, w):
        value = evaluate_closed(w)
        assert value == unlink_value(circle_count_bruteforce(w))
        assert value.ranks == {-d: r for d, r in value}

    @given(closed_words(max_len=8), closed_words(max_len=8))
    def test_disjoint_union_is_tensor(self, a, b):
        try:
            va, vb = evaluate_closed(a, budget=5000), evaluate_closed(b, budget=5000)
        except Irreducible:
            return
        assert evaluate_closed(oplus(a, b), budget=20_000) == tensor(va, vb)

    def test_reducible_words_are_unlinks(self):
        # every word the rewriter can empty is an unlink, so its value is V^k
        rng = random.Random(11)
        seen = 0
        while seen < 200:
            w = random_closed_word(rng, max_len=16, max_crossings=3)
            try:
                t = reduce_word(w, budget=20_000)
            except Irreducible:
                continue
            seen += 1
            assert evaluate_closed(w, budget=20_000) == unlink_value(t.circles_extracted)


class TestTables:
    def test_id1(self):
        t = kh_symp(identity(1))
        assert list(t.entries.values()) == [V]
        assert t.total.total_rank == 2

    def test_empty(self):
        t = kh_symp(parse_word("0:"))
        assert list(t.entries.values()) == [UNIT]

    def test_id2(self):
        t = kh_symp(identity(2))
        assert [v.total_rank for v in t.entries.values()] == [4, 2, 2, 4]
        assert t.total.total_rank == 12

    def test_keys_canonical(self):
        t = kh_symp(parse_word("4: cup1"))
        assert list(t.entries) == [(c, cp) for c in enumerate_matchings(2) for cp in enumerate_matchings(1)]

    def test_irreducible_reported(self):
        t = kh_symp(parse_word("4: s2 . s2"))
        assert t.irreducible
        assert all(t.entries[k] is IRREDUCIBLE for k in t.irreducible)
        assert "irreducible" in json.dumps(t.to_json())

    def test_bound(self):
        with pytest.raises(ResourceLimit):
            kh_symp(identity(3), max_n=2)

    def test_json_deterministic(self):
        a = json.dumps(kh_symp(identity(2)).to_json(), sort_keys=True)
        b = json.dumps(kh_symp(identity(2)).to_json(), sort_keys=True)
        assert a == b

    def test_closure_is_closed(self):
        w = parse_word("4: s1 . cup3")
        for c in enumerate_matchings(2):
            for cp in enumerate_matchings(1):
                assert closure(c, w, cp).is_closed


class TestHn:
    @pytest.mark.parametrize("n, total", [(1, 2), (2, 12), (3, 104)])
    def test_totals(self, n, total):
        # totals frozen from the brute-force circle counter
        assert hn(n).total.total_rank == total

    def test_n3_matches_counter(self):
        table = hn(3)
        expected = sum(2 ** circle_count_bruteforce(closure(c, identity(3), cp))
                       for c in enumerate_matchings(3) for cp in enumerate_matchings(3))
        assert table.total.total_rank == expected == 104

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_entries_are_unlinks(self, n):
        for (c, cp), v in hn(n).entries.items():
            assert v == unlink_value(glue_circles(c, cp))

    def test_unlink_values(self):
        assert unlink_value(0) == UNIT
        assert unlink_value(1).ranks == {-1: 1, 1: 1}
        assert poincare(unlink_value(3)) == Q ** 3
        with pytest.raises(ValueError):
            unlink_value(-1)


class TestSigma:
    def test_single_pair(self):
        for sign in (1, -1):
            ranks = kh_sigma_ranks(1, 1, sign)
            assert list(ranks.values()) == [2]

    def test_kink_on_one_arc(self):
        # the crossing twists one of two closed arcs: two circles remain
        ranks = kh_sigma_ranks(1, 2)
        assert ranks[(M12_34, M12_34)] == 4
        assert evaluate_closed(closure(M12_34, sigma_word(1, 2), M12_34)).total_rank == 4

    def test_classes_m2(self):
        classes = classify_pairs(2, 2)
        assert classes[(M14_23, M14_23)] is PairClass.BOTH_PRIME
        assert classes[(M12_34, M14_23)] is PairClass.MIXED_PRIME
        assert classes[(M12_34, M12_34)] is PairClass.PP2
        at1 = classify_pairs(2, 1)
        assert at1[(M12_34, M12_34)] is PairClass.BOTH_PRIME
        assert at1[(M14_23, M14_23)] is PairClass.PP2

    def test_pp1_exists(self):
        assert PairClass.PP1 in set(classify_pairs(3, 2).values())

    def test_sum_matches_evaluator(self):
        table = kh_symp(sigma_word(2, 2))
        assert not table.irreducible
        assert sum(kh_sigma_ranks(2, 2).values()) == table.total.total_rank

    def test_bad_args(self):
        with pytest.raises(ValueError):
            kh_sigma_ranks(4, 2)
        with pytest.raises(ValueError):
            kh_sigma_ranks(1, 2, sign=0)


class TestKunneth:
    def test_id1(self):
        r = kunneth_check(identity(1))
        assert r.passed
        assert poincare(r.with_circle) == Q ** 2

    def test_empty(self):
        r = kunneth_check(parse_word("0:"))
        assert r.passed and r.with_circle == V

    def test_id2(self):
        r = kunneth_check(identity(2))
        assert r.passed and r.with_circle.total_rank == 24


def test_tables_differ():
    assert not tables_differ(parse_word("2: s1 . s1'"), identity(1))
    assert not tables_differ(parse_word("4: s1 . s3"), parse_word("4: s3 . s1"))

"""
An independent check with the Kauffman bracket
==============================================

The unreduced Jones polynomial at q = 1 must equal the total rank of the
graded value on every word the rewriter can evaluate.
"""

import random

from tanglekh import evaluate_closed, jones_at_one, kauffman_bracket, parse_word, render_word
from tanglekh.fuzz import random_closed_word
from tanglekh.rewrite import Irreducible

for text in ("0: cap1 . cup1", "0: cap1 . s1 . cup1",
             "0: cap1 . cap3 . s2 . s2 . cup3 . cup1",
             "0: cap1 . cap3 . s2 . s2 . s2 . cup3 . cup1"):
    w = parse_word(text)
    print(f"{text:<44} bracket {str(kauffman_bracket(w)):<28} jones(1) = {jones_at_one(w)}")

rng = random.Random(1)
agree = 0
for _ in range(30):
    w = random_closed_word(rng, max_len=14, max_crossings=2)
    try:
        rank = evaluate_closed(w).total_rank
    except Irreducible:
        print("skipped (irreducible):", render_word(w))
        continue
    agree += jones_at_one(w) == rank
print(agree, "words agree")

"""
Rewriting a word down to nothing
================================

Closed words that the relations can empty are evaluated by counting the
circles removed and summing the grading deltas of the steps taken.
"""

import random

from tanglekh import evaluate_closed, parse_word, poincare, reduce_word, render_word
from tanglekh.rewrite import apply_rule

word = parse_word("0: cap1 . cap3 . s2 . cap1 . s4' . cup3 . cup3 . cup1")
trace = reduce_word(word)

# replay the trace one step at a time
current = word
print("start", render_word(current))
for step in trace.steps:
    current = apply_rule(current, step)
    print(f"{step.rule.label:<16} at {step.position}  delta {step.delta:+d}   {render_word(current)}")
print("circles", trace.circles_extracted, "ledger", trace.ledger_total)
print("value", poincare(evaluate_closed(word)))

# a different order of moves gives the same circles and ledger
for seed in range(3):
    t = reduce_word(word, rng=random.Random(seed))
    print(f"seed {seed}: {len(t.steps)} steps, circles {t.circles_extracted}, ledger {t.ledger_total}")

# linked components are out of reach of the relations
try:
    reduce_word(parse_word("0: cap1 . cap3 . s2 . s2 . cup3 . cup1"))
except Exception as exc:
    print(type(exc).__name__, exc)

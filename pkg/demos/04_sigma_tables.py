"""
A single crossing on 2m strands
===============================

The rank of each table entry is predicted by how the crossing meets the glued
circles of the two matchings.
"""

from tanglekh import classify_pairs, kh_sigma_ranks, kh_symp, kunneth_check, parse_word, sigma_word

m, i = 2, 2
classes = classify_pairs(m, i)
predicted = kh_sigma_ranks(i, m)
table = kh_symp(sigma_word(i, m))
for key, value in table.entries.items():
    a, b = key
    print(f"{a} x {b}: {classes[key].value:<10} predicted {predicted[key]}  computed {value.total_rank}")

# a circle beside a tangle multiplies every entry by one more factor
for text in ("2:", "0: cap1", "2: cap2"):
    r = kunneth_check(parse_word(text))
    print(f"{text!r}: beside a circle {r.with_circle}, tensored {r.tensored}, ok {r.passed}")

"""
Crossingless matchings and the identity tables
==============================================

The invariant of an (m, n) tangle is a table indexed by pairs of crossingless
matchings.  For the identity on 2n points every entry is an unlink.
"""

from tanglekh import enumerate_matchings, glue_circles, hn, poincare, render_word, to_word

# the counts follow the Catalan numbers
print([len(enumerate_matchings(n)) for n in range(1, 8)])

# each matching is drawn as a word of caps
for m in enumerate_matchings(3):
    print(m, "  ", render_word(to_word(m)))

# gluing two matchings makes circles
mats = enumerate_matchings(2)
for a in mats:
    print([glue_circles(a, b) for b in mats])

# the tables: entry ranks are 2^(circles), totals grow quickly
for n in range(1, 5):
    table = hn(n)
    print(f"n = {n}: {len(table.entries)} entries, total rank {table.total.total_rank}")
    print("   Poincare polynomial", poincare(table.total))

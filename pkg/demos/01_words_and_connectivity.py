"""
Tangle words and their strands
==============================

A word is read bottom to top.  ``cap i`` opens two endpoints, ``cup i``
closes two, ``s i`` and ``s i'`` are the two crossings.
"""

from tanglekh import circle, oplus, parse_word, render_word, trace_connectivity, transpose, writhe

# the smallest closed word: one circle
w = parse_word("0: cap1 . cup1")
print(render_word(w), "arities", w.arities)
print("closed components:", trace_connectivity(w).closed_components)

# a zig-zag straightens out, so this is still a single circle
zz = parse_word("0: cap1 . cap1 . cup2 . cup1")
print(render_word(zz), "->", trace_connectivity(zz).closed_components, "circle")

# nested caps give two circles
print("nested:", trace_connectivity(parse_word("0: cap1 . cap2 . cup2 . cup1")).closed_components)

# the two kinks have opposite writhe
for text in ("0: cap1 . s1 . cup1", "0: cap1 . s1' . cup1"):
    print(f"writhe of {text!r}: {writhe(parse_word(text))}")

# transpose flips the picture upside down and swaps the crossing type
t = parse_word("2: cap1 . s2")
print(render_word(t), "transposed:", render_word(transpose(t)))

# juxtaposition puts a circle beside any tangle
print(render_word(oplus(t, circle())))

# syntax errors carry a character position
try:
    parse_word("0: cap1 . cup2")
except ValueError as exc:
    print("rejected:", exc)

"""
The free band is finite
=======================

Enumerate the free band on two and three letters and compare Green-Rees keys
with naive square deletion, which is not a normal form.
"""

from aiband import band_key, enumerate_band, max_min_length, reduce_squares
from aiband.band import format_word, is_square_free

for letters in ("a", "ab", "abx"):
    table = enumerate_band(letters)
    print(f"{letters!r}: {len(table)} elements, longest shortest word {max_min_length(table)}")

# the six elements on two letters
print(sorted(format_word(w) for w in enumerate_band("ab").classes.values()))

# Two square-free words can still be equal in the free band.
u, v = tuple("abxab"), tuple("abxbaxab")
print(format_word(u), is_square_free(u), "|", format_word(v), is_square_free(v))
print("reduce_squares leaves both alone:", reduce_squares(u) == u, reduce_squares(v) == v)
print("same element:", band_key(u) is band_key(v))

# Longest minimal words over {a, b, x}
table = enumerate_band("abx")
longest = [format_word(w) for w in table.classes.values() if len(w) == max_min_length(table)]
print(len(longest), "words of maximal length, e.g.", longest[:4])

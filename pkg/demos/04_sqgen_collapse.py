"""
sqGen and why the chain collapses
=================================

Build the sqGen family, measure square-freeness of its words, and show that
finitely many band elements force equal members and small instances.
"""

from aiband import chain_census, find_collision, refute_theorem3, sq_gen, sq_gen_word
from aiband.band import format_word
from aiband.refute import recheck_collision
from aiband.sqgen import squarefree_report

for n in range(1, 6):
    print(n, sq_gen(n))

print("all square-free up to n=64:", all(squarefree_report(n)["square_free"] for n in range(1, 65)))

rep = find_collision(200)
print(f"sqGen({rep.i}) and sqGen({rep.j}) are equal modulo AI "
      f"(word lengths {rep.word_lengths}); shortest word {format_word(rep.min_representative)}")
print(recheck_collision(rep))

census = chain_census(200)
print(f"{census.distinct} distinct elements among sqGen(2..200); none new after n={census.saturation}")

cx = refute_theorem3(64)
print(f"k={cx.k}: {cx.g1} with x -> sqGen({cx.k}) equals {cx.g3}, "
      f"size {cx.sizes[0]} < {cx.sizes[1]}")
print(format_word(sq_gen_word(cx.k)))

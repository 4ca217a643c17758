"""
Terms and idempotent flat normal forms
======================================

Parse a few terms over an associative-idempotent symbol ``h``, flatten and
normalize them, and decide equivalence modulo AI.
"""

from aiband import ai_equiv_terms, ai_flat_normalize, apply_subst, parse_term, term_size
from aiband.terms import Var

# Variables carry a ``?`` sigil; AI symbols are declared when parsing.
t = parse_term("h(h(a,b),b,a,b,h(a,b))", ai=["h"])
print("term:       ", t, " size", term_size(t))
print("normalized: ", ai_flat_normalize(t))

# Merging uses full AI-equivalence of neighbours, not syntactic equality.
print(ai_flat_normalize(parse_term("h(h(a,b),h(a,b,a,b))", ai=["h"])))

# Substitution is applied as given; normalization is a separate step.
g = parse_term("h(?x,b,a,b,?x)", ai=["h"])
inst = apply_subst(g, {Var("x"): parse_term("h(a,b)", ai=["h"])})
print(inst, "->", ai_flat_normalize(inst))
print("equivalent to h(a,b)?", ai_equiv_terms(inst, parse_term("h(a,b)", ai=["h"])))

# Free symbols are congruent: idempotency below g still applies.
print(ai_equiv_terms(parse_term("g(h(a,a))", ai=["h"]), parse_term("g(a)", ai=["h"])))

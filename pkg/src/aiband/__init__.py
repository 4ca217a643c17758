"""Associative-idempotent term algebra: normal forms, the free-band word
problem, generalization on the word fragment, and the sqGen family."""

from .band import (BandKey, ai_equiv_words, band_key, format_word, is_square_free,
                   reduce_squares)
from .freeband import BandTable, enumerate_band, max_min_length, shortest_representative
from .generalize import (AB_PROBLEM, GenProblem, UnsupportedFragmentError, generalizes_pair,
                         is_simple_word, more_general, strictly_more_general, verify_corollary1,
                         verify_lemma1, verify_lemma2)
from .refute import (CollisionReport, Theorem3Counterexample, chain_census, find_collision,
                     refute_theorem3)
from .sqgen import at_index, sq_gen, sq_gen_word, tail_from, ternary_square_free_prefix
from .terms import (App, MalformedTermError, Signature, Substitution, Term, TermSyntaxError, Var,
                    ai_equiv_terms, ai_flat_normalize, apply_subst, letters_of, parse_term,
                    term_size)

__version__ = "0.1.0"

"""Counterexamples to the size lower bound on instances of sqGen terms.

The free band on {a, b, x} is finite, so the sqGen family can contain only
finitely many AI classes.  Two searches make that concrete: a collision
between two sqGen words, and an instance ``g1{x -> sqGen(k)}`` whose shortest
equivalent term is smaller than ``sqGen(k)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .band import BandKey, Word, band_key
from .freeband import BandTable, enumerate_band, max_min_length
from .generalize import is_simple_word, more_general, strictly_more_general
from .sqgen import A, B, H, X, sq_gen, sq_gen_word
from .terms import (App, Substitution, Term, ai_equiv_terms, apply_subst,
                    letters_of, term_size, word_to_term)

LETTERS = ("a", "b", "x")
ALPHABET = {"a": A, "b": B, "x": X}

# g1 shapes tried by refute_theorem3, in order
G1_CATALOG = (
    App(H, (X, X), ai=True),
    App(H, (X, A, X), ai=True),
    App(H, (X, B, X), ai=True),
    App(H, (X, A, B, X), ai=True),
)


def abx_table() -> BandTable:
    return enumerate_band(LETTERS)


def word_term(word: Word) -> Term:
    return word_to_term(word, ALPHABET, H)


@dataclass(frozen=True)
class CollisionReport:
    i: int
    j: int
    shared_key: BandKey
    word_lengths: tuple[int, int]
    min_representative: Word


@dataclass(frozen=True)
class Theorem3Counterexample:
    k: int
    g1: Term
    g2: Term
    sigma: Substitution
    g3: Term
    sizes: tuple[int, int]
    g3_simple: Term | None

    @property
    def violated(self) -> bool:
        return self.sizes[0] < self.sizes[1]


def find_collision(limit: int) -> CollisionReport | None:
    """First pair i < j <= limit whose sqGen words are AI-equivalent.

    Scans n = 2..limit and reports the first key seen twice, so j is minimal
    and i is the earlier index sharing that key.
    """
    if limit < 2:
        raise ValueError("limit must be >= 2")
    seen: dict[BandKey, int] = {}
    for n in range(2, limit + 1):
        w = sq_gen_word(n)
        key = band_key(w)
        if key in seen:
            i = seen[key]
            return CollisionReport(i, n, key, (len(sq_gen_word(i)), len(w)),
                                   abx_table().min_word(key))
        seen[key] = n
    return None


def recheck_collision(report: CollisionReport) -> dict:
    """Re-verify a collision by key equality and by Cayley-graph class membership."""
    table = abx_table()
    wi, wj = sq_gen_word(report.i), sq_gen_word(report.j)
    gi, gj = sq_gen(report.i), sq_gen(report.j)
    return {
        "band_key_equal": band_key(wi) is band_key(wj) is report.shared_key,
        "table_class_equal": table.key_of(wi) is table.key_of(wj) is report.shared_key,
        "terms_equivalent": ai_equiv_terms(gi, gj),
        # the pair is supposed to be strictly ordered; mutual generality refutes that
        "strict_forward": strictly_more_general(gi, gj),
        "strict_backward": strictly_more_general(gj, gi),
        "mutual": more_general(gi, gj)[0] and more_general(gj, gi)[0],
    }


def shortest_simple_representative(word: Word, table: BandTable, var: str = "x") -> Word | None:
    """Shortest word in the class of ``word`` shaped like a simple word over ``var``."""
    key = table.key_of(word)
    best = table.min_word(key)
    if best == (var,) or (best[0] == var and best[-1] == var):
        return best
    # the first and last letters are class invariants, so nothing else can qualify
    return None


def refute_theorem3(k_max: int, catalog=G1_CATALOG) -> Theorem3Counterexample | None:
    """Search k = 2..k_max for g1σ, σ = {x -> sqGen(k)}, smaller than sqGen(k).

    Only k whose sqGen word is longer than the longest minimal word of the
    band plus two are tried; below that no violation is forced.
    """
    if k_max < 2:
        raise ValueError("k_max must be >= 2")
    table = abx_table()
    bound = max_min_length(table) + 2
    for k in range(2, k_max + 1):
        word = sq_gen_word(k)
        if len(word) <= bound:
            continue
        g2 = sq_gen(k)
        sigma = Substitution({X: g2})
        for g1 in catalog:
            inst = apply_subst(g1, sigma)
            inst_word, _ = letters_of(inst, H)
            g3_word = table.min_word(table.key_of(inst_word))
            g3 = word_term(g3_word)
            simple = shortest_simple_representative(inst_word, table)
            found = Theorem3Counterexample(
                k, g1, g2, sigma, g3, (term_size(g3), term_size(g2)),
                word_term(simple) if simple is not None else None)
            if found.violated:
                return found
    return None


@dataclass(frozen=True)
class CensusReport:
    limit: int
    distinct: int
    growth: tuple[tuple[int, int], ...]
    saturation: int


def chain_census(limit: int) -> CensusReport:
    """Distinct AI classes among sqGen(2..limit) and where the count stops growing."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    seen: set[BandKey] = set()
    growth = []
    saturation = 2
    for n in range(2, limit + 1):
        key = band_key(sq_gen_word(n))
        if key not in seen:
            seen.add(key)
            saturation = n
        growth.append((n, len(seen)))
    return CensusReport(limit, len(seen), tuple(growth), saturation)


def is_w_member(t: Term) -> bool:
    return is_simple_word(t, X, (A, B))

"""Generality order modulo AI on the word fragment, and the exhaustive verifiers.

A word-fragment term is a variable, a constant, or one flat AI application
whose arguments are variables and constants.  Matching ``r`` onto ``t`` binds
each variable of ``r`` to an element of the free band over the letters of
``t``: equal words have equal letter content, so no other binding can work.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .freeband import enumerate_band
from .terms import (App, Substitution, Term, Var, ai_equiv_terms, apply_subst,
                    const, letters_of, word_to_term)


class UnsupportedFragmentError(ValueError):
    pass


@dataclass(frozen=True)
class GenProblem:
    left: Term
    right: Term


AB_PROBLEM = GenProblem(App("h", (const("a"), const("b")), ai=True),
                        App("h", (const("b"), const("a")), ai=True))


@dataclass
class Report:
    """Outcome of an exhaustive check: counts plus any counterexamples."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures


def _is_atom(t: Term) -> bool:
    return isinstance(t, Var) or t.is_constant


def fragment(t: Term) -> tuple[str | None, tuple[Term, ...]]:
    """Split a word-fragment term into ``(ai_head, atoms)``; head is None for an atom."""
    if _is_atom(t):
        return None, (t,)
    if t.ai and all(_is_atom(a) for a in t.args):
        return t.head, t.args
    raise UnsupportedFragmentError(f"{t} is outside the word fragment")


def more_general(r: Term, t: Term) -> tuple[bool, Substitution | None]:
    """Decide whether ``r`` generalizes ``t``: is there σ with rσ ≈_AI t?

    Returns ``(True, σ)`` for the first witness in a fixed order (variables
    by name, band elements shortest-then-lexicographic), else ``(False, None)``.
    Variables of ``t`` are opaque letters.
    """
    r_head, r_atoms = fragment(r)
    t_head, _ = fragment(t)
    if r_head and t_head and r_head != t_head:
        raise UnsupportedFragmentError(f"{r} and {t} use different AI symbols")
    if isinstance(r, Var):
        return True, Substitution({r: t})
    if r_head is None:
        return (True, Substitution()) if ai_equiv_terms(r, t) else (False, None)

    head = r_head
    t_word, alphabet = letters_of(t, head)
    names = {term: name for name, term in alphabet.items()}
    table = enumerate_band(alphabet)
    target = table.key_of(t_word)
    first, last = t_word[0], t_word[-1]

    # each item of r: either a fixed band element or a variable slot
    r_vars = sorted({a for a in r_atoms if isinstance(a, Var)}, key=lambda v: v.name)
    items = []
    for a in r_atoms:
        if isinstance(a, Var):
            items.append(a)
        elif a in names:
            items.append(table.key_of((names[a],)))
        else:
            return False, None
    if not isinstance(items[0], Var) and table.min_word(items[0])[0] != first:
        return False, None
    if not isinstance(items[-1], Var) and table.min_word(items[-1])[-1] != last:
        return False, None

    choices = []
    for v in r_vars:
        opts = list(table)
        if items[0] == v:
            opts = [k for k in opts if table.min_word(k)[0] == first]
        if items[-1] == v:
            opts = [k for k in opts if table.min_word(k)[-1] == last]
        choices.append(opts)

    for combo in itertools.product(*choices):
        binding = dict(zip(r_vars, combo))
        value = None
        for it in items:
            k = binding[it] if isinstance(it, Var) else it
            value = k if value is None else table.multiply(value, k)
        if value is target:
            return True, Substitution(
                {v: word_to_term(table.min_word(k), alphabet, head) for v, k in binding.items()})
    return False, None


def generalizes_pair(r: Term, problem: GenProblem = AB_PROBLEM) -> bool:
    return more_general(r, problem.left)[0] and more_general(r, problem.right)[0]


def strictly_more_general(r: Term, s: Term) -> bool:
    return more_general(r, s)[0] and not more_general(s, r)[0]


def is_simple_word(t: Term, x: Var, constants) -> bool:
    """Membership in the (x, C)-simple words; the bare variable ``x`` counts."""
    if t == x:
        return True
    if not (isinstance(t, App) and t.ai) or len(t.args) < 2:
        return False
    args = t.args
    if args[0] != x or args[-1] != x:
        return False
    allowed = {x, *constants}
    if any(a not in allowed for a in args):
        return False
    return all(p != q for p, q in zip(args, args[1:]))


def simple_word_candidates(x: Var, constants, max_interior: int):
    """Yield ``h(x, s1..sn, x)`` for every interior sequence with n <= max_interior.

    Interiors are not reduced, so ``h(x,x)`` and ``h(x,a,a,x)`` are included.
    """
    letters = [x, *constants]
    for n in range(max_interior + 1):
        for interior in itertools.product(letters, repeat=n):
            yield App("h", (x, *interior, x), ai=True)


def verify_lemma1(max_interior: int, constants=("a", "b")) -> Report:
    """Every simple word maps onto s by x ↦ s, for s in {h(a,b), h(b,a)}."""
    if max_interior < 0:
        raise ValueError("max_interior must be >= 0")
    x = Var("x")
    consts = [const(c) for c in constants]
    targets = [AB_PROBLEM.left, AB_PROBLEM.right]
    report = Report("lemma1")
    candidates = [x, *simple_word_candidates(x, consts, max_interior)]
    for t in candidates:
        for s in targets:
            report.checked += 1
            if not ai_equiv_terms(apply_subst(t, {x: s}), s):
                report.failures.append((str(t), str(s)))
    report.details = {
        "candidates": len(candidates),
        "normal_form_members": sum(is_simple_word(t, x, consts) for t in candidates),
        "max_interior": max_interior,
    }
    return report


def fragment_terms(max_size: int, constants=("a", "b"), head: str = "h"):
    """Word-fragment terms of size <= max_size, variables named canonically.

    Variables ``x1, x2, ...`` are introduced in order of first occurrence, so
    each term is listed once up to renaming.
    """
    consts = [const(c) for c in constants]

    def words(n):
        def go(prefix, nvars):
            if len(prefix) == n:
                yield tuple(prefix)
                return
            for c in consts:
                yield from go(prefix + [c], nvars)
            for i in range(1, nvars + 2):
                yield from go(prefix + [Var(f"x{i}")], max(nvars, i))
        return go([], 0)

    for w in words(1):
        yield w[0]
    for n in range(2, max_size):
        for w in words(n):
            yield App(head, w, ai=True)


def verify_lemma2(max_size: int) -> Report:
    """No h(c, t') or h(t', c) with c in {a, b} generalizes h(a,b) and h(b,a)."""
    if max_size < 3:
        raise ValueError("max_size must be >= 3")
    report = Report("lemma2")
    fixed = [const("a"), const("b")]
    for t2 in fragment_terms(max_size):
        inner = t2.args if isinstance(t2, App) and t2.ai else (t2,)
        for c in fixed:
            for args in ((c, *inner), (*inner, c)):
                t = App("h", args, ai=True)
                report.checked += 1
                if generalizes_pair(t):
                    report.failures.append(str(t))
    report.details = {"max_size": max_size}
    return report


def verify_corollary1(n_max: int, n_min: int = 2) -> Report:
    """sqGen(n) generalizes h(a,b) and h(b,a), with witnesses re-validated."""
    from .sqgen import sq_gen

    report = Report("corollary1")
    for n in range(n_min, n_max + 1):
        g = sq_gen(n)
        for target in (AB_PROBLEM.left, AB_PROBLEM.right):
            report.checked += 1
            ok, sigma = more_general(g, target)
            if not ok or not ai_equiv_terms(apply_subst(g, sigma), target):
                report.failures.append((n, str(target)))
            else:
                report.details.setdefault("witnesses", []).append((n, str(target), str(sigma)))
    return report

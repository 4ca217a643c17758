"""The square-free generalization family sqGen(n) and a ternary square-free word."""

from __future__ import annotations

from .band import Word, find_square
from .terms import App, Term, Var, const

H = "h"
X = Var("x")
A = const("a")
B = const("b")

_EXTENSIONS = {
    A: (A, B, A, X),
    B: (B, A, B, X),
}


def _check_flat(t: Term) -> tuple:
    if not (isinstance(t, App) and t.ai):
        raise ValueError(f"{t} is not a flat AI application")
    return t.args


def at_index(t: Term, i: int) -> Term:
    """``t|_i``: the i-th argument (1-based) of a flat AI application."""
    args = _check_flat(t)
    if not 1 <= i <= len(args):
        raise IndexError(f"index {i} out of range 1..{len(args)}")
    return args[i - 1]


def tail_from(t: Term, j: int) -> Term:
    """``t||_j = f(t_j,...,t_n)``, or the bare ``t_n`` when j = n."""
    args = _check_flat(t)
    n = len(args)
    if not 1 <= j <= n:
        raise IndexError(f"index {j} out of range 1..{n}")
    if j == n:
        return args[-1]
    return App(t.head, args[j - 1:], ai=True)


def sq_gen_state(n: int) -> Term:
    """The growing term ``g`` after the loop of sqGen(n), before the final tail."""
    if n < 1:
        raise ValueError(f"sq_gen needs n >= 1, got {n}")
    g = [A, B, A, X]
    for i in range(1, n):
        # g|_{i+1} is g[i], g|_i is g[i - 1]; the branches are exclusive
        cur, prev = g[i], g[i - 1]
        if cur in _EXTENSIONS:
            g.extend(_EXTENSIONS[cur])
        if cur == X and prev == A:
            g.extend((B, X, A, X))
        if cur == X and prev == B:
            g.extend((A, X, B, X))
    return App(H, tuple(g), ai=True)


def sq_gen(n: int) -> Term:
    """sqGen(n); ``sq_gen(2)`` is ``h(?x,b,a,b,?x)``."""
    return tail_from(sq_gen_state(n), 4)


def sq_gen_word(n: int) -> Word:
    """Letters of sqGen(n) over ``('a', 'b', 'x')``."""
    t = sq_gen(n)
    args = t.args if isinstance(t, App) else (t,)
    return tuple(a.name if isinstance(a, Var) else a.head for a in args)


def squarefree_report(n: int) -> dict:
    """Measured square-freeness of the letter word of sqGen(n)."""
    w = sq_gen_word(n)
    hit = find_square(w)
    rec = {"n": n, "length": len(w), "square_free": hit is None}
    if hit is not None:
        i, half = hit
        rec["square_at"] = i
        rec["square_half"] = half
    return rec


def thue_morse(k: int) -> list[int]:
    return [bin(i).count("1") & 1 for i in range(k)]


def ternary_square_free_prefix(k: int, letters: str = "abc") -> Word:
    """First ``k`` letters of the ternary square-free word derived from Thue-Morse.

    Each letter counts the ones between consecutive zeros of the Thue-Morse
    word (always 0, 1 or 2); ``letters`` names the counts 2, 1, 0 in that order,
    so the default starts ``abcacb``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out: list[str] = []
    size = 4 * k + 8
    tm = thue_morse(size)
    while True:
        zeros = [i for i, bit in enumerate(tm) if bit == 0]
        if len(zeros) > k:
            break
        size *= 2
        tm = thue_morse(size)
    for p, q in zip(zeros, zeros[1:k + 1]):
        out.append(letters[2 - (q - p - 1)])
    return tuple(out)

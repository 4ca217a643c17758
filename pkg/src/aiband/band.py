"""Word problem for free bands (idempotent semigroups).

Words are plain tuples of hashable letters.  Two words are equal in the free
band iff their Green-Rees keys coincide; :func:`band_key` computes those keys
and interns them so that key comparison is an identity check.
"""

from __future__ import annotations

import threading
from collections.abc import Hashable, Iterable, Sequence

Letter = Hashable
Word = tuple


class BandKey:
    """Interned Green-Rees descriptor of a free-band element.

    Build through :func:`band_key` only; equal elements share one instance.
    """

    __slots__ = ("content", "letter", "prefix_letter", "prefix", "suffix_letter",
                 "suffix", "__weakref__")

    content: frozenset
    letter: Letter | None
    prefix_letter: Letter | None
    prefix: BandKey | None
    suffix_letter: Letter | None
    suffix: BandKey | None

    def __repr__(self):
        if self.letter is not None or len(self.content) == 1:
            return f"BandKey({self.letter!r})"
        return (f"BandKey({self.prefix!r}·{self.prefix_letter!r} | "
                f"{self.suffix_letter!r}·{self.suffix!r})")

    def __reduce__(self):
        if len(self.content) == 1:
            return (_intern_letter, (self.letter,))
        return (_intern_node, (self.prefix_letter, self.prefix,
                               self.suffix_letter, self.suffix))


_table: dict = {}
_lock = threading.Lock()


def _intern(ident, build):
    key = _table.get(ident)
    if key is not None:
        return key
    with _lock:
        key = _table.get(ident)
        if key is None:
            key = build()
            _table[ident] = key
    return key


def _intern_letter(letter):
    def build():
        key = BandKey()
        key.content = frozenset((letter,))
        key.letter = letter
        key.prefix_letter = key.prefix = key.suffix_letter = key.suffix = None
        return key
    return _intern(("letter", letter), build)


def _intern_node(prefix_letter, prefix, suffix_letter, suffix):
    # children are interned, so their ids identify them
    def build():
        key = BandKey()
        key.content = prefix.content | {prefix_letter}
        key.letter = None
        key.prefix_letter = prefix_letter
        key.prefix = prefix
        key.suffix_letter = suffix_letter
        key.suffix = suffix
        return key
    return _intern(("node", prefix_letter, id(prefix), suffix_letter, id(suffix)), build)


def band_key(word: Sequence[Letter]) -> BandKey:
    """Green-Rees key of a nonempty word.

    For content of size one the key is the letter.  Otherwise the key records
    the letter whose first occurrence comes last together with the key of the
    prefix before it, and symmetrically for the reversed word.
    """
    w = tuple(word)
    if not w:
        raise ValueError("band_key of the empty word")
    memo: dict[tuple[int, int], BandKey] = {}

    def rec(i: int, j: int) -> BandKey:
        got = memo.get((i, j))
        if got is not None:
            return got
        seen: set = set()
        last_new = i
        for p in range(i, j):
            if w[p] not in seen:
                seen.add(w[p])
                last_new = p
        if len(seen) == 1:
            key = _intern_letter(w[i])
        else:
            seen.clear()
            first_new = j - 1
            for p in range(j - 1, i - 1, -1):
                if w[p] not in seen:
                    seen.add(w[p])
                    first_new = p
            key = _intern_node(w[last_new], rec(i, last_new),
                               w[first_new], rec(first_new + 1, j))
        memo[(i, j)] = key
        return key

    return rec(0, len(w))


def ai_equiv_words(u: Sequence[Letter], v: Sequence[Letter]) -> bool:
    """True iff ``u`` and ``v`` are equal in the free band."""
    if set(u) != set(v):
        return False
    return band_key(u) is band_key(v)


def find_square(w: Sequence[Letter]) -> tuple[int, int] | None:
    """Locate a square factor ``vv``, shortest ``v`` first, then leftmost.

    Returns ``(start, half_length)`` or None when ``w`` is square-free.
    """
    n = len(w)
    for half in range(1, n // 2 + 1):
        for i in range(n - 2 * half + 1):
            if all(w[i + k] == w[i + half + k] for k in range(half)):
                return i, half
    return None


def is_square_free(w: Sequence[Letter]) -> bool:
    return find_square(w) is None


def reduce_squares(w: Sequence[Letter]) -> Word:
    """Delete square factors ``vv -> v`` until none remain.

    The result is equivalent to ``w`` but is NOT a normal form: equivalent
    words can reduce to different square-free words.  Use :func:`band_key` to
    decide equivalence.
    """
    w = tuple(w)
    while (hit := find_square(w)) is not None:
        i, half = hit
        w = w[:i + half] + w[i + 2 * half:]
    return w


def content(w: Iterable[Letter]) -> frozenset:
    return frozenset(w)


def format_word(w: Sequence[Letter]) -> str:
    """Render a word; letters are joined with ``·`` unless all are one character."""
    names = [str(c) for c in w]
    if all(len(s) == 1 for s in names):
        return "".join(names)
    return "·".join(names)

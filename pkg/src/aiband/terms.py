"""Terms over a signature with associative-idempotent (AI) symbols.

Concrete syntax: ``?x`` is a variable, ``a`` a constant, ``f(t1,...,tn)`` an
application.  AI symbols are not marked in the text; pass their names to
:func:`parse_term`.  An AI application may carry any number n >= 2 of
arguments, read as a flattened right-nested binary application.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache

from .band import band_key


class MalformedTermError(ValueError):
    pass


class TermSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Var:
    name: str

    def __str__(self):
        return "?" + self.name


@dataclass(frozen=True)
class App:
    head: str
    args: tuple = ()
    ai: bool = False

    def __post_init__(self):
        if not isinstance(self.args, tuple):
            object.__setattr__(self, "args", tuple(self.args))
        if self.ai and len(self.args) < 2:
            raise MalformedTermError(f"AI application {self.head} needs at least 2 arguments")

    def __str__(self):
        if not self.args:
            return self.head
        return f"{self.head}({','.join(map(str, self.args))})"

    @property
    def is_constant(self):
        return not self.args and not self.ai


Term = Var | App


def const(name: str) -> App:
    return App(name)


def ai_app(head: str, *args: Term) -> App:
    """Flat AI application ``head(args...)``; nested ``head`` arguments are spliced."""
    return App(head, tuple(_splice(head, args)), ai=True)


def _splice(head, args):
    for a in args:
        if isinstance(a, App) and a.ai and a.head == head:
            yield from a.args
        else:
            yield a


class Signature:
    """Symbol table: name -> (arity, is_ai).

    AI symbols are declared with arity 2; their applications may be written
    flat with any number of arguments >= 2.
    """

    def __init__(self, entries: Mapping[str, tuple[int, bool]] | None = None):
        self._entries: dict[str, tuple[int, bool]] = {}
        for name, (arity, is_ai) in (entries or {}).items():
            self.declare(name, arity, is_ai)

    def declare(self, name: str, arity: int, ai: bool = False) -> None:
        if not name:
            raise MalformedTermError("empty symbol name")
        if ai and arity != 2:
            raise MalformedTermError(f"AI symbol {name} must have arity 2")
        if arity < 0:
            raise MalformedTermError(f"negative arity for {name}")
        old = self._entries.get(name)
        if old is not None and old != (arity, ai):
            raise MalformedTermError(f"conflicting declarations for {name}: {old} vs {(arity, ai)}")
        self._entries[name] = (arity, ai)

    @classmethod
    def infer(cls, *terms: Term, ai: Iterable[str] = ()) -> Signature:
        """Signature whose free-symbol arities are read off the given terms."""
        sig = cls({name: (2, True) for name in ai})
        for t in terms:
            for sub in subterms(t):
                if isinstance(sub, App) and not sub.ai:
                    sig.declare(sub.head, len(sub.args))
        return sig

    def __contains__(self, name):
        return name in self._entries

    def arity(self, name: str) -> int:
        return self._entries[name][0]

    def is_ai(self, name: str) -> bool:
        return name in self._entries and self._entries[name][1]

    @property
    def ai_symbols(self) -> frozenset[str]:
        return frozenset(n for n, (_, ai) in self._entries.items() if ai)

    def check(self, t: Term) -> None:
        """Raise :class:`MalformedTermError` unless ``t`` is well-formed here."""
        for sub in subterms(t):
            if isinstance(sub, Var):
                if sub.name in self._entries:
                    raise MalformedTermError(f"variable {sub} clashes with a symbol name")
                continue
            if sub.head not in self._entries:
                raise MalformedTermError(f"undeclared symbol {sub.head}")
            arity, is_ai = self._entries[sub.head]
            if is_ai != sub.ai:
                raise MalformedTermError(f"{sub.head} used with the wrong AI flag")
            if not is_ai and len(sub.args) != arity:
                raise MalformedTermError(
                    f"{sub.head} expects {arity} arguments, got {len(sub.args)}")

    def __repr__(self):
        return f"Signature({self._entries!r})"


def subterms(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        s = stack.pop()
        yield s
        if isinstance(s, App):
            stack.extend(reversed(s.args))


def variables(t: Term) -> list[Var]:
    """Variables of ``t`` in order of first occurrence."""
    return list(dict.fromkeys(s for s in subterms(t) if isinstance(s, Var)))


def term_size(t: Term) -> int:
    """|x| = 1 and |f(t1..tn)| = 1 + sum |ti|, on the term as given."""
    if isinstance(t, Var):
        return 1
    return 1 + sum(term_size(a) for a in t.args)


class Substitution(Mapping):
    """Finite map from variables to terms; identity bindings are dropped."""

    def __init__(self, bindings: Mapping[Var, Term] | Iterable[tuple[Var, Term]] = ()):
        items = bindings.items() if isinstance(bindings, Mapping) else bindings
        self._map = {}
        for v, t in items:
            if not isinstance(v, Var):
                raise TypeError(f"substitution key must be a variable, got {v!r}")
            if t != v:
                self._map[v] = t

    def __getitem__(self, v):
        return self._map[v]

    def __iter__(self):
        return iter(sorted(self._map, key=lambda v: v.name))

    def __len__(self):
        return len(self._map)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._map == dict(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __str__(self):
        return "{" + ", ".join(f"{v} -> {self._map[v]}" for v in self) + "}"

    def __repr__(self):
        return f"Substitution({self})"


def apply_subst(t: Term, sigma: Mapping[Var, Term], sig: Signature | None = None) -> Term:
    """Simultaneous homomorphic replacement; the result is not normalized.

    With ``sig`` given, binding images are checked for well-formedness first.
    """
    if sig is not None:
        for image in sigma.values():
            sig.check(image)
    if not sigma:
        return t

    def go(s):
        if isinstance(s, Var):
            return sigma.get(s, s)
        if not s.args:
            return s
        return App(s.head, tuple(go(a) for a in s.args), s.ai)

    return go(t)


def flatten(t: Term) -> Term:
    """Splice nested same-symbol AI applications (associativity only)."""
    if isinstance(t, Var) or not t.args:
        return t
    args = tuple(flatten(a) for a in t.args)
    if t.ai:
        args = tuple(_splice(t.head, args))
    return App(t.head, args, t.ai)


def ai_flat_normalize(t: Term) -> Term:
    """Idempotent flat normal form.

    Bottom-up: adjacent AI-equivalent arguments are merged (the leftmost is
    kept), nested applications of the same AI symbol are flattened, adjacent
    equivalent arguments are merged again, and a one-argument AI application
    collapses to its argument.  Only ADJACENT
    arguments are required to differ; ``h(a,b,a)`` is already normal.
    """
    return _normalize(t)[0]


def class_key(t: Term):
    """Hashable key with ``class_key(s) == class_key(t)`` iff s and t are AI-equivalent."""
    return _normalize(t)[1]


def ai_equiv_terms(s: Term, t: Term) -> bool:
    return class_key(s) == class_key(t)


@lru_cache(maxsize=1 << 16)
def _normalize(t: Term):
    if isinstance(t, Var):
        return t, ("var", t.name)
    if not t.args:
        return t, ("app", t.head, ())
    if not t.ai:
        pairs = [_normalize(a) for a in t.args]
        return (App(t.head, tuple(p[0] for p in pairs)),
                ("app", t.head, tuple(p[1] for p in pairs)))

    # merge whole equivalent arguments first, so h(h(a,b),h(a,b,a,b)) -> h(a,b)
    parts: list[tuple[Term, object]] = []
    for p in _merge_adjacent([_normalize(a) for a in t.args]):
        na = p[0]
        if isinstance(na, App) and na.ai and na.head == t.head:
            parts.extend(_normalize(b) for b in na.args)
        else:
            parts.append(p)
    merged = _merge_adjacent(parts)
    if len(merged) == 1:
        return merged[0]
    return (App(t.head, tuple(p[0] for p in merged), ai=True),
            ("ai", t.head, band_key(tuple(p[1] for p in merged))))


def _merge_adjacent(pairs):
    out = [pairs[0]]
    for p in pairs[1:]:
        if p[1] != out[-1][1]:
            out.append(p)
    return out


def letter_name(t: Term, clash: bool = False) -> str:
    if isinstance(t, Var):
        return str(t) if clash else t.name
    return str(t)


def letters_of(t: Term, head: str) -> tuple[tuple[str, ...], dict[str, Term]]:
    """View ``t`` as a word over the AI symbol ``head``.

    Returns ``(word, alphabet)`` where each argument of the normalized
    ``head``-application becomes one letter and ``alphabet`` maps letter names
    back to the argument subterms.  A term not headed by ``head`` is a
    one-letter word.  Variables use their bare name as letter unless a
    constant of the same name occurs, in which case they keep the ``?``.
    """
    n = ai_flat_normalize(t)
    args = n.args if isinstance(n, App) and n.ai and n.head == head else (n,)
    consts = {a.head for a in args if isinstance(a, App) and a.is_constant}
    alphabet: dict[str, Term] = {}
    word = []
    for a in args:
        name = letter_name(a, clash=isinstance(a, Var) and a.name in consts)
        alphabet.setdefault(name, a)
        word.append(name)
    return tuple(word), alphabet


def word_to_term(word, alphabet: Mapping[str, Term], head: str) -> Term:
    """Inverse of :func:`letters_of`: one letter is the bare subterm."""
    atoms = [alphabet[c] for c in word]
    if not atoms:
        raise ValueError("empty word has no term")
    if len(atoms) == 1:
        return atoms[0]
    return App(head, tuple(atoms), ai=True)


_TOKEN = re.compile(r"\s*(?:(\?)?([A-Za-z0-9_]+)|([(),]))")


def parse_term(text: str, ai: Iterable[str] = ()) -> Term:
    """Parse concrete syntax; symbols named in ``ai`` build AI applications.

    Nesting is preserved; see :func:`flatten` and :func:`ai_flat_normalize`.

    >>> str(parse_term("h(?x,h(a,b))", ai=["h"]))
    'h(?x,h(a,b))'
    """
    ai = frozenset(ai)
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise TermSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        tokens.append(m.groups())
        pos = m.end()
    it = 0

    def peek():
        return tokens[it] if it < len(tokens) else None

    def term():
        nonlocal it
        tok = peek()
        if tok is None or tok[1] is None:
            raise TermSyntaxError(f"expected a term in {text!r}")
        it += 1
        sigil, name, _ = tok
        if sigil:
            return Var(name)
        nxt = peek()
        if nxt is None or nxt[2] != "(":
            if name in ai:
                raise TermSyntaxError(f"AI symbol {name} used as a constant")
            return App(name)
        it += 1
        args = [term()]
        while (nxt := peek()) is not None and nxt[2] == ",":
            it += 1
            args.append(term())
        if peek() is None or peek()[2] != ")":
            raise TermSyntaxError(f"missing ')' in {text!r}")
        it += 1
        if name in ai:
            if len(args) < 2:
                raise TermSyntaxError(f"AI symbol {name} needs at least 2 arguments")
            return App(name, tuple(args), ai=True)
        return App(name, tuple(args))

    result = term()
    if it != len(tokens):
        raise TermSyntaxError(f"trailing input in {text!r}")
    return result

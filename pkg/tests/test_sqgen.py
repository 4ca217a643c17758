import pytest

from aiband.band import is_square_free
from aiband.generalize import is_simple_word
from aiband.sqgen import (A, B, X, at_index, sq_gen, sq_gen_state, sq_gen_word,
                          squarefree_report, tail_from, ternary_square_free_prefix)
from aiband.terms import App, parse_term, term_size


def p(text):
    return parse_term(text, ai=["h"])


GOLDEN = {
    1: "?x",
    2: "h(?x,b,a,b,?x)",
    3: "h(?x,b,a,b,?x,a,b,a,?x)",
    4: "h(?x,b,a,b,?x,a,b,a,?x,b,?x,a,?x)",
}


@pytest.mark.parametrize("n", sorted(GOLDEN))
def test_golden(n):
    assert sq_gen(n) == p(GOLDEN[n])
    assert str(sq_gen(n)) == GOLDEN[n]


def test_at_index():
    g = p("h(a,b,a,?x)")
    assert at_index(g, 2) == B
    assert at_index(g, 4) == X
    assert at_index(sq_gen_state(2), 5) == B
    with pytest.raises(IndexError):
        at_index(g, 5)
    with pytest.raises(IndexError):
        at_index(g, 0)
    with pytest.raises(ValueError):
        at_index(X, 1)


def test_tail_from():
    assert tail_from(p("h(a,b,a,?x)"), 4) == X
    assert tail_from(p("h(a,b,a,?x,b,a,b,?x)"), 4) == p("h(?x,b,a,b,?x)")
    assert tail_from(p("h(a,b)"), 1) == p("h(a,b)")
    with pytest.raises(IndexError):
        tail_from(p("h(a,b)"), 3)


def test_state_prefix_invariant():
    for n in range(1, 30):
        assert sq_gen_state(n).args[:4] == (A, B, A, X)


def test_precondition():
    with pytest.raises(ValueError):
        sq_gen(0)


def test_sizes():
    assert term_size(sq_gen(2)) == 6
    assert term_size(sq_gen(4)) == 14


def test_adjacent_distinct_and_simple():
    for n in range(1, 65):
        w = sq_gen_word(n)
        assert all(u != v for u, v in zip(w, w[1:]))
        if n >= 2:
            assert is_simple_word(sq_gen(n), X, (A, B))


def test_prefix_chain():
    for n in range(2, 64):
        w, nxt = sq_gen_word(n), sq_gen_word(n + 1)
        assert nxt[:len(w)] == w, n


def test_squarefree_measurement():
    # measured, not assumed: every word up to n = 64 happens to be square-free
    reports = [squarefree_report(n) for n in range(1, 65)]
    assert all(r["square_free"] for r in reports)
    assert reports[3] == {"n": 4, "length": 13, "square_free": True}


def test_ternary_prefix():
    assert ternary_square_free_prefix(0) == ()
    assert ternary_square_free_prefix(6) == tuple("abcacb")
    assert is_square_free(ternary_square_free_prefix(3))
    assert is_square_free(ternary_square_free_prefix(64))
    assert "".join(ternary_square_free_prefix(12)) == "abcacbabcbac"


def test_ternary_prefix_long():
    assert is_square_free(ternary_square_free_prefix(4096))


def test_ternary_prefix_consistent():
    long = ternary_square_free_prefix(500)
    assert ternary_square_free_prefix(137) == long[:137]
    assert set(long) == {"a", "b", "c"}

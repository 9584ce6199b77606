import pytest

from ordgram.errors import BudgetExceeded, LeftRecursionDetected, PrefixViolation, ShapeViolation
from ordgram.grammar import lex_enumerate, parse_grammar
from ordgram.normalize import (FiniteLanguage, NormalizeConfig, check_normal_form, check_shape,
                               eliminate_chains, left_corner_substitute, remove_unusable,
                               to_normal_form)
from ordgram.ordinal import nat

from .conftest import GOLDEN, corpus_path


def G(text):
    return parse_grammar(text)


def enum(g, n=12):
    return lex_enumerate(g, [(g.start,)], n)


def test_already_normal_is_unchanged():
    g = G("order: b < a\nstart: X\nX -> a X | b\n")
    assert to_normal_form(g) == g


def test_finite_early_result():
    nf = to_normal_form(G("order: b < a\nstart: S\nS -> X b\nX -> a | a a\n"))
    assert isinstance(nf, FiniteLanguage)
    assert nf.words == ("ab", "aab")
    assert nf.order_type == nat(2)


def test_empty_language():
    nf = to_normal_form(G("order: a\nstart: S\nS -> a S\n"))
    assert nf == FiniteLanguage(())
    assert nf.order_type == nat(0)


def test_epsilon_only():
    nf = to_normal_form(G("order: a\nstart: S\nS -> _eps\n"))
    assert nf.words == ("",) and nf.order_type == nat(1)


def test_left_recursion():
    with pytest.raises(LeftRecursionDetected):
        to_normal_form(G("order: b < a\nstart: X\nX -> X a | b\n"))


def test_indirect_left_recursion():
    with pytest.raises(LeftRecursionDetected, match="=>"):
        to_normal_form(G("order: b < a\nstart: X\nX -> Y a | b\nY -> X b | a\n"))


def test_nullable_infinite_rejected():
    with pytest.raises(PrefixViolation):
        to_normal_form(G("order: b < a\nstart: X\nX -> a X | _eps\n"))


def test_chain_rules():
    g = G("order: b < a\nstart: S\nS -> X\nX -> Y\nY -> a Y | b\n")
    h = eliminate_chains(g)
    assert ("a", "Y") in h.productions["S"] and ("b",) in h.productions["S"]
    assert enum(h) == enum(g)


def test_left_corner():
    g = G("order: b < a\nstart: S\nS -> X b\nX -> a X | b\n")
    h = left_corner_substitute(g, 100)
    assert set(h.productions["S"]) == {("a", "X", "b"), ("b", "b")}


def test_remove_unusable():
    g = G("order: b < a\nstart: S\nS -> a S | b | a U\nU -> a U\nV -> b\n")
    h = remove_unusable(g)
    assert h.nonterminals == ("S",)
    assert h.productions["S"] == (("a", "S"), ("b",))


def test_eliminates_nonrecursive():
    g = G("order: b < a\nstart: S\nS -> a T\nT -> b X | a X\nX -> a X | b\n")
    nf = to_normal_form(g)
    assert nf.nonterminals == ("S", "X")
    assert set(nf.productions["S"]) == {("a", "b", "X"), ("a", "a", "X")}


def test_budget():
    g = G("order: b < a\nstart: S\nS -> A A A A\nA -> a X | b X\nX -> a X | b\n")
    with pytest.raises(BudgetExceeded):
        to_normal_form(g, NormalizeConfig(substitution_budget=3))


class TestShape:
    def test_pass(self):
        assert check_shape(G("order: a < b < c\nstart: X\nX -> a X b | c\n")) == []

    def test_two_component_symbols(self):
        found = check_shape(G("order: a < b\nstart: X\nX -> a X X | b\n"))
        assert len(found) == 1 and found[0].body == ("a", "X", "X")

    def test_nonterminal_before_component_symbol(self):
        g = G("order: a < b < c\nstart: X\nX -> a Y X b | c\nY -> a Y | c\n")
        found = check_shape(g)
        assert [f.body for f in found] == [("a", "Y", "X", "b")]

    def test_raises_from_pipeline(self):
        with pytest.raises(ShapeViolation):
            to_normal_form(G("order: a < b\nstart: X\nX -> a X X | b\n"))


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_corpus_preserved_and_normal(corpus, name):
    g = corpus[name]
    nf = to_normal_form(g)
    if isinstance(nf, FiniteLanguage):
        assert list(nf.words) == enum(g)
        return
    assert enum(nf) == enum(g)
    assert check_normal_form(nf) == []
    # idempotent
    assert to_normal_form(nf) == nf


def test_prefix_violation_corpus_normalizes():
    # the defect is only caught later, by the periodicity check
    g = parse_grammar(open(corpus_path("prefix_violation.cfg")).read())
    nf = to_normal_form(g)
    assert check_normal_form(nf) == []

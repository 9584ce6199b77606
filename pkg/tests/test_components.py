from itertools import product

import networkx as nx
import pytest

from ordgram.components import component_edges, compute_components
from ordgram.errors import NotAnOrdinalGrammar
from ordgram.grammar import bounded_languages, parse_grammar
from ordgram.normalize import FiniteLanguage, to_normal_form
from ordgram.words import UPWord, is_strictly_below

from .conftest import GOLDEN


def G(text):
    return parse_grammar(text)


def test_single_recursive():
    t = compute_components(G("order: b < a\nstart: X\nX -> a X | b\n"))
    assert t.recursive["X"]
    assert {t.component[s] for s in "Xab"} == {0, 1, 2}
    assert t.u["X"] == "a"


def test_nonrecursive_start():
    t = compute_components(G("order: b < a < c\nstart: S\nS -> a X | b\nX -> a X | c\n"))
    assert not t.recursive["S"] and t.recursive["X"]
    assert t.strictly_below("X", "S") and not t.preceq("S", "X")
    assert t.height["X"] < t.height["S"]


def test_mutual_recursion():
    t = compute_components(G("order: a < b < c < d < e\nstart: X\n"
                             "X -> a Y b | c\nY -> a X d | e\n"))
    assert t.equiv("X", "Y") and t.recursive["X"] and t.recursive["Y"]
    assert t.u["X"] == "a" and t.u["Y"] == "a"


def test_u_examples():
    t = compute_components(G("order: a < b < c < d\nstart: X\nX -> a b X c | d\n"))
    assert t.u["X"] == "ab"
    t = compute_components(G("order: a < b < c < d < e\nstart: X\n"
                             "X -> a Y c | d\nY -> a X b | e\n"))
    assert t.u["X"] == "a"


def test_incompatible_cycles_rejected():
    # cycles labelled a and b through the same nonterminal
    with pytest.raises(NotAnOrdinalGrammar):
        compute_components(G("order: a < b < c\nstart: X\nX -> a X | b X | c\n"))


def test_heights_terminals_zero():
    t = compute_components(G("order: b < a\nstart: S\nS -> a X\nX -> a X | b\n"))
    assert t.height["a"] == t.height["b"] == 0
    assert t.height["X"] == 1 and t.height["S"] == 2


def _normal_forms(corpus):
    for name in sorted(GOLDEN):
        nf = to_normal_form(corpus[name])
        if not isinstance(nf, FiniteLanguage):
            yield name, nf


def test_enumerated_words_below_u(corpus):
    for name, nf in _normal_forms(corpus):
        t = compute_components(nf)
        langs = bounded_languages(nf, nf.nonterminals, 12)
        for x in nf.nonterminals:
            if t.recursive[x]:
                bound = UPWord.make("", t.u[x])
                assert all(is_strictly_below(w, bound, nf.alphabet) for w in langs[x]), (name, x)


def test_cycle_labels_are_powers_of_u(corpus):
    for name, nf in _normal_forms(corpus):
        t = compute_components(nf)
        for cid in set(t.component.values()):
            edges = list(component_edges(nf, t, cid))
            if not edges:
                continue
            labels = {}
            for a, w, b in edges:
                labels.setdefault((a, b), set()).add(w)
            graph = nx.DiGraph(list(labels))
            for cycle in nx.simple_cycles(graph):
                steps = list(zip(cycle, cycle[1:] + cycle[:1]))
                for choice in product(*(sorted(labels[s]) for s in steps)):
                    word = "".join(choice)
                    x = cycle[0]
                    u = t.u[x]
                    assert len(word) % len(u) == 0 and word == u * (len(word) // len(u)), \
                        (name, cycle, word)


def test_preorder_matches_components(corpus):
    for name, nf in _normal_forms(corpus):
        t = compute_components(nf)
        syms = list(nf.nonterminals) + list(nf.alphabet)
        for x in syms:
            for y in syms:
                assert (t.preceq(x, y) and t.preceq(y, x)) == (t.component[x] == t.component[y])
                if t.strictly_below(y, x):
                    assert t.height[y] < t.height[x]

import json

import pytest

from ordgram.grammar import parse_grammar
from ordgram.oracle import report_lines, validate

from .conftest import GOLDEN


def G(text):
    return parse_grammar(text)


def test_clean():
    r = validate(G("order: b < a\nstart: X\nX -> a X | b\n"), 6)
    assert r.clean and r.word_count is None
    assert report_lines(r) == ["no violations up to length 6"]


def test_prefix_violation():
    r = validate(G("order: a\nstart: X\nX -> a X | a\n"), 6)
    prefix = [f for f in r.findings if f.kind == "prefix"]
    assert prefix and prefix[0].detail == "a <_p aa"


def test_descending_chain():
    r = validate(G("order: a < b\nstart: X\nX -> a X | b\n"), 6)
    chains = [f for f in r.findings if f.kind == "descending-chain"]
    assert chains
    assert chains[0].detail.endswith("< aab < ab < b")
    assert chains[0].detail.startswith("... <")


def test_finite_count():
    r = validate(G("order: b < a\nstart: S\nS -> X b\nX -> a | b a\n"), 6)
    assert r.clean and r.word_count == 2
    # L(X) = {a, aa} is not prefix-free even though L(S) is
    r = validate(G("order: b < a\nstart: S\nS -> X b\nX -> a | a a\n"), 6)
    assert r.word_count == 2 and [f.symbol for f in r.findings] == ["X"]


def test_records_are_json():
    r = validate(G("order: a\nstart: X\nX -> a X | a\n"), 4)
    for f in r.findings:
        assert json.loads(json.dumps(f.record()))["kind"] == f.kind


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_corpus_clean(corpus, name):
    assert validate(corpus[name], 8).clean


def test_broken_variants(corpus):
    # swapping the letter order of the omega grammar breaks well-ordering
    text = corpus["omega.cfg"].text().replace("order: b < a", "order: a < b")
    assert "descending-chain" in validate(G(text), 8).kinds()
    # an extra production that is a prefix of existing words
    text = corpus["omega.cfg"].text().replace("X -> a X | b", "X -> a X | b | a")
    assert "prefix" in validate(G(text), 8).kinds()
    text = corpus["w2a.cfg"].text().replace("order: b < a", "order: a < b")
    assert "descending-chain" in validate(G(text), 8).kinds()

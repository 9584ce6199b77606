from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordgram.words import (Alphabet, UPWord, finite_prefix, is_proper_prefix, is_strictly_below,
                           lex_cmp, primitive_root, sort_words)

AB = Alphabet("ab")


def test_lex_cmp_examples():
    abc = Alphabet("abc")
    assert lex_cmp(UPWord.finite("ab"), UPWord.make("ab", "c"), abc) == -1
    assert lex_cmp(UPWord.finite("b"), UPWord.make("", "a"), AB) == 1
    assert lex_cmp(UPWord.make("", "a"), UPWord.make("aa", "a"), AB) == 0


def test_primitive_root_examples():
    assert primitive_root("abab") == "ab"
    assert primitive_root("aab") == "aab"
    assert primitive_root("aaaaaa") == "a"


def test_finite_prefix_examples():
    assert finite_prefix(UPWord.make("ab", "c"), 4) == "abcc"
    assert finite_prefix(UPWord.finite("ab"), 5) == "ab"
    assert finite_prefix(UPWord.finite(""), 3) == ""


def test_render():
    assert str(UPWord.make("ab", "c")) == "ab(c)^w"
    assert str(UPWord.make("", "c")) == "(c)^w"
    assert str(UPWord.finite("ab")) == "ab"


def test_canonical_form_is_structural():
    assert UPWord.make("aba", "ba") == UPWord.make("", "ab")
    assert UPWord.make("x", "yxyx") == UPWord.make("", "xy")
    assert UPWord.make("ab", "abab") == UPWord.make("", "ab")


@pytest.mark.parametrize("n", range(1, 13))
def test_primitive_root_exhaustive(n):
    for letters in product("ab", repeat=n):
        w = "".join(letters)
        r = primitive_root(w)
        assert len(w) % len(r) == 0 and r * (len(w) // len(r)) == w
        # no shorter root works
        for k in range(1, len(r)):
            if len(w) % k == 0:
                assert w[:k] * (len(w) // k) != w


def test_alphabet_order():
    al = Alphabet(["b", "a", "c"])
    assert al.rank("b") < al.rank("a") < al.rank("c")
    assert al.successor("a") == "c" and al.successor("c") is None
    assert al.max_letter == "c"
    assert sort_words(["a", "ba", "b", ""], al) == ["", "b", "ba", "a"]
    with pytest.raises(ValueError):
        Alphabet("aa")


words = st.text(alphabet="ab", max_size=5)
upwords = st.builds(UPWord.make, words, st.text(alphabet="ab", min_size=1, max_size=3)) | \
    words.map(UPWord.finite)


def expand(x: UPWord, n: int) -> str:
    return finite_prefix(x, n)


@settings(max_examples=300, deadline=None)
@given(upwords, upwords)
def test_lex_cmp_antisymmetric(x, y):
    c = lex_cmp(x, y, AB)
    assert lex_cmp(y, x, AB) == -c
    assert (c == 0) == (x == y)


@settings(max_examples=300, deadline=None)
@given(upwords, upwords)
def test_lex_cmp_agrees_with_long_prefixes(x, y):
    # compare long finite approximations; infinite words never end
    n = 40
    xs, ys = expand(x, n), expand(y, n)
    if xs == ys:
        assert lex_cmp(x, y, AB) == 0
        return
    k = next((i for i, (p, q) in enumerate(zip(xs, ys)) if p != q), None)
    if k is None:
        expected = -1 if len(xs) < len(ys) else 1
    else:
        expected = -1 if xs[k] < ys[k] else 1
    assert lex_cmp(x, y, AB) == expected


@settings(max_examples=200, deadline=None)
@given(upwords, upwords, upwords)
def test_lex_cmp_transitive(x, y, z):
    if lex_cmp(x, y, AB) <= 0 and lex_cmp(y, z, AB) <= 0:
        assert lex_cmp(x, z, AB) <= 0


@settings(max_examples=200, deadline=None)
@given(upwords, st.integers(0, 20), st.integers(0, 20))
def test_finite_prefix_monotone(x, m, n):
    m, n = sorted((m, n))
    assert finite_prefix(x, n).startswith(finite_prefix(x, m))


@settings(max_examples=200, deadline=None)
@given(words, upwords)
def test_strictly_below_is_lex_below_without_prefix(w, x):
    is_prefix = finite_prefix(x, len(w)) == w
    expected = lex_cmp(UPWord.finite(w), x, AB) < 0 and not is_prefix
    assert is_strictly_below(w, x, AB) == expected


def test_proper_prefix():
    assert is_proper_prefix("a", "ab")
    assert not is_proper_prefix("ab", "ab")
    assert is_proper_prefix("", "a")

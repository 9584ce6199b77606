"""Finite and ultimately periodic words over an explicitly ordered alphabet."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class Alphabet:
    """Letters in strictly increasing order."""

    __slots__ = ("letters", "_rank")

    def __init__(self, letters: Iterable[str]):
        letters = tuple(letters)
        if not letters:
            raise ValueError("alphabet must be nonempty")
        rank = {}
        for i, c in enumerate(letters):
            if len(c) != 1:
                raise ValueError(f"letters are single characters, got {c!r}")
            if c in rank:
                raise ValueError(f"duplicate letter {c!r}")
            rank[c] = i
        self.letters = letters
        self._rank = rank

    def __contains__(self, c):
        return c in self._rank

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({' < '.join(self.letters)})"

    def rank(self, c: str) -> int:
        return self._rank[c]

    def key(self, word: str) -> tuple:
        """Sort key realising the lexicographic order on finite words."""
        return tuple(self._rank[c] for c in word)

    def successor(self, c: str) -> Optional[str]:
        i = self._rank[c] + 1
        return self.letters[i] if i < len(self.letters) else None

    @property
    def max_letter(self) -> str:
        return self.letters[-1]


def primitive_root(w: str) -> str:
    """Shortest ``p`` with ``w == p * k``; uses the KMP failure function."""
    if not w:
        raise ValueError("primitive root of the empty word is undefined")
    n = len(w)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        while k and w[i] != w[k]:
            k = fail[k - 1]
        if w[i] == w[k]:
            k += 1
        fail[i] = k
    period = n - fail[-1]
    return w[:period] if n % period == 0 else w


@dataclass(frozen=True)
class UPWord:
    """``prefix . period^omega``; an empty period denotes the finite word ``prefix``.

    Build through :meth:`make` to get the canonical representative, which
    makes ``==`` coincide with equality of the denoted words.
    """

    prefix: str
    period: str = ""

    @classmethod
    def make(cls, prefix: str, period: str = "") -> "UPWord":
        if not period:
            return cls(prefix, "")
        period = primitive_root(period)
        while prefix and prefix[-1] == period[-1]:
            prefix = prefix[:-1]
            period = period[-1] + period[:-1]
        return cls(prefix, period)

    @classmethod
    def finite(cls, w: str) -> "UPWord":
        return cls(w, "")

    @property
    def is_finite(self) -> bool:
        return not self.period

    def letter(self, i: int) -> Optional[str]:
        if i < len(self.prefix):
            return self.prefix[i]
        if not self.period:
            return None
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def prepend(self, w: str) -> "UPWord":
        return UPWord.make(w + self.prefix, self.period)

    def __str__(self):
        if not self.period:
            return self.prefix
        return f"{self.prefix}({self.period})^w"


def lex_cmp(x: UPWord, y: UPWord, alphabet: Alphabet) -> int:
    """Lexicographic comparison (-1/0/1); a proper prefix is smaller."""
    bound = len(x.prefix) + len(y.prefix) + max(1, len(x.period)) * max(1, len(y.period))
    for i in range(bound + 1):
        a, b = x.letter(i), y.letter(i)
        if a is None or b is None:
            if a is None and b is None:
                return 0
            return -1 if a is None else 1
        if a != b:
            return -1 if alphabet.rank(a) < alphabet.rank(b) else 1
    # both infinite and agreeing beyond every possible difference position
    return 0


def finite_prefix(x: UPWord, n: int) -> str:
    if n <= len(x.prefix) or not x.period:
        return x.prefix[:n]
    rest = n - len(x.prefix)
    reps = rest // len(x.period) + 1
    return x.prefix + (x.period * reps)[:rest]


def is_strictly_below(w: str, x: UPWord, alphabet: Alphabet) -> bool:
    """``w <_s x``: the first difference has the smaller letter in ``w``."""
    for i, c in enumerate(w):
        d = x.letter(i)
        if d is None:
            return False
        if c != d:
            return alphabet.rank(c) < alphabet.rank(d)
    return False


def sort_words(words: Iterable[str], alphabet: Alphabet) -> list:
    return sorted(set(words), key=alphabet.key)


def is_proper_prefix(u: Sequence, v: Sequence) -> bool:
    return len(u) < len(v) and v[:len(u)] == u

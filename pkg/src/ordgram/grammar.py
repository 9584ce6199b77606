"""Grammar data model, the text format, and the classical CFG decision procedures."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import BudgetExceeded, GrammarError, ParseError
from .words import Alphabet

Form = Tuple[str, ...]

EPS_TOKEN = "_eps"
NONTERMINAL_RE = re.compile(r"[A-Z][A-Za-z0-9_']*\Z")
TERMINAL_RE = re.compile(r"[a-z]\Z")

DEFAULT_ENUM_BUDGET = 2_000_000


@dataclass(frozen=True, eq=True)
class Grammar:
    """A context-free grammar with an ordered terminal alphabet.

    ``productions`` maps every nonterminal (dict order is the display order)
    to its tuple of alternatives. Use :func:`make_grammar` rather than the
    raw constructor: it deduplicates alternatives and validates symbols.
    """

    alphabet: Alphabet
    productions: Mapping[str, Tuple[Form, ...]] = field(hash=False)
    start: str

    @property
    def nonterminals(self) -> Tuple[str, ...]:
        return tuple(self.productions)

    def is_nonterminal(self, sym: str) -> bool:
        return sym in self.productions

    def is_terminal(self, sym: str) -> bool:
        return sym in self.alphabet

    def alternatives(self, x: str) -> Tuple[Form, ...]:
        return self.productions[x]

    def rules(self):
        for x, bodies in self.productions.items():
            for body in bodies:
                yield x, body

    @property
    def size(self) -> int:
        return sum(1 + len(b) for _, b in self.rules())

    def with_start(self, x: str) -> "Grammar":
        if x not in self.productions:
            raise GrammarError(f"unknown nonterminal {x!r}")
        return Grammar(self.alphabet, self.productions, x)

    def text(self) -> str:
        return format_grammar(self)

    def __str__(self):
        return self.text()


def make_grammar(alphabet: Alphabet, productions: Mapping[str, Iterable[Sequence[str]]],
                 start: str) -> Grammar:
    prods: Dict[str, Tuple[Form, ...]] = {}
    if start not in productions:
        prods[start] = ()
    for x, bodies in productions.items():
        seen = dict.fromkeys(tuple(b) for b in bodies)
        prods[x] = tuple(seen)
    # start first, remaining order as given
    ordered = {start: prods[start]}
    ordered.update((k, v) for k, v in prods.items() if k != start)
    for x, bodies in ordered.items():
        if x in alphabet:
            raise GrammarError(f"{x!r} is both a terminal and a nonterminal")
        for body in bodies:
            for sym in body:
                if sym not in alphabet and sym not in ordered:
                    raise GrammarError(f"undeclared symbol {sym!r} in a production of {x}")
    return Grammar(alphabet, ordered, start)


# --- text format ----------------------------------------------------------------


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def parse_grammar(text: str) -> Grammar:
    order: Optional[List[str]] = None
    start: Optional[str] = None
    raw: Dict[str, List[Tuple[int, List[str]]]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = _strip_comment(line).strip()
        if not line:
            continue
        if line.startswith("order:"):
            if order is not None:
                raise ParseError("duplicate order: header", line=lineno)
            letters = [tok.strip() for tok in line[len("order:"):].split("<")]
            for tok in letters:
                if not TERMINAL_RE.match(tok):
                    raise ParseError(f"bad terminal {tok!r} in order: header", line=lineno)
            if len(set(letters)) != len(letters):
                raise ParseError("duplicate letter in order: header", line=lineno)
            order = letters
        elif line.startswith("start:"):
            if start is not None:
                raise ParseError("duplicate start: header", line=lineno)
            start = line[len("start:"):].strip()
            if not NONTERMINAL_RE.match(start):
                raise ParseError(f"bad start symbol {start!r}", line=lineno)
        else:
            head, arrow, rhs = line.partition("->")
            head = head.strip()
            if not arrow:
                raise ParseError("expected 'NT -> body'", line=lineno)
            if not NONTERMINAL_RE.match(head):
                raise ParseError(f"bad nonterminal {head!r}", line=lineno)
            for alt in rhs.split("|"):
                toks = alt.split()
                if not toks:
                    raise ParseError("empty alternative (write _eps)", line=lineno)
                if EPS_TOKEN in toks:
                    if len(toks) != 1:
                        raise ParseError("_eps must stand alone", line=lineno)
                    toks = []
                raw.setdefault(head, []).append((lineno, toks))
    if order is None:
        raise ParseError("missing order: header")
    if start is None:
        raise ParseError("missing start: header")
    alphabet = Alphabet(order)
    declared = set(raw) | {start}
    for head, alts in raw.items():
        for lineno, toks in alts:
            for tok in toks:
                if NONTERMINAL_RE.match(tok):
                    if tok not in declared:
                        raise GrammarError(f"line {lineno}: undeclared nonterminal {tok!r}")
                elif TERMINAL_RE.match(tok):
                    if tok not in alphabet:
                        raise GrammarError(f"line {lineno}: undeclared terminal {tok!r}")
                else:
                    raise ParseError(f"bad symbol {tok!r}", line=lineno)
    prods = {h: [tuple(t) for _, t in alts] for h, alts in raw.items()}
    return make_grammar(alphabet, prods, start)


def load_grammar(path) -> Grammar:
    with open(path, encoding="utf-8") as fh:
        return parse_grammar(fh.read())


def format_body(body: Form) -> str:
    return " ".join(body) if body else EPS_TOKEN


def format_grammar(g: Grammar) -> str:
    lines = ["order: " + " < ".join(g.alphabet.letters), f"start: {g.start}"]
    for x, bodies in g.productions.items():
        if bodies:
            lines.append(f"{x} -> " + " | ".join(format_body(b) for b in bodies))
    return "\n".join(lines) + "\n"


# --- decision procedures ----------------------------------------------------------


def productive(g: Grammar) -> Set[str]:
    prod: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for x, body in g.rules():
            if x not in prod and all(g.is_terminal(s) or s in prod for s in body):
                prod.add(x)
                changed = True
    return prod


def reachable(g: Grammar, roots: Iterable[str]) -> Set[str]:
    seen = {r for r in roots if g.is_nonterminal(r)}
    stack = list(seen)
    while stack:
        x = stack.pop()
        for body in g.productions[x]:
            for s in body:
                if g.is_nonterminal(s) and s not in seen:
                    seen.add(s)
                    stack.append(s)
    return seen


def nullable(g: Grammar) -> Set[str]:
    null: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for x, body in g.rules():
            if x not in null and all(s in null for s in body):
                null.add(x)
                changed = True
    return null


def is_empty(g: Grammar, forms: Iterable[Form]) -> bool:
    """True iff no form in ``forms`` derives a terminal word."""
    prod = productive(g)
    return not any(all(g.is_terminal(s) or s in prod for s in f) for f in forms)


def _useful_rules(g: Grammar, prod: Set[str]):
    for x, body in g.rules():
        if x in prod and all(g.is_terminal(s) or s in prod for s in body):
            yield x, body


def _nonempty_word(g: Grammar, rules) -> Set[str]:
    # nonterminals deriving at least one nonempty word
    out: Set[str] = set()
    changed = True
    while changed:
        changed = False
        for x, body in rules:
            if x not in out and any(g.is_terminal(s) or s in out for s in body):
                out.add(x)
                changed = True
    return out


def is_finite(g: Grammar, x: str) -> bool:
    rules = _trimmed_rules(g, x)
    if not rules:
        return True
    grows = _nonempty_word(g, rules)
    weights: Dict[Tuple[str, str], int] = {}
    for a, body in rules:
        for i, s in enumerate(body):
            if g.is_nonterminal(s):
                rest = body[:i] + body[i + 1:]
                w = int(any(g.is_terminal(t) or t in grows for t in rest))
                weights[(a, s)] = max(weights.get((a, s), 0), w)
    graph = nx.DiGraph()
    graph.add_node(x)
    graph.add_edges_from(weights)
    comp = {}
    for i, scc in enumerate(nx.strongly_connected_components(graph)):
        for n in scc:
            comp[n] = i
    return not any(w and comp[a] == comp[b] for (a, b), w in weights.items())


def finite_words(g: Grammar, x: str) -> Set[str]:
    """All words of ``L(x)``; only valid when ``L(x)`` is finite."""
    if not is_finite(g, x):
        raise GrammarError(f"L({x}) is infinite")
    rules = _trimmed_rules(g, x)
    words: Dict[str, Set[str]] = {a: set() for a, _ in rules}
    changed = True
    while changed:
        changed = False
        for a, body in rules:
            for w in _concat_all(g, body, words):
                if w not in words[a]:
                    words[a].add(w)
                    changed = True
    return words.get(x, set())


def _trimmed_rules(g: Grammar, x: str):
    """Useful rules whose head is reachable from ``x`` through useful rules."""
    prod = productive(g)
    if x not in prod:
        return []
    by_head: Dict[str, list] = {}
    for a, body in _useful_rules(g, prod):
        by_head.setdefault(a, []).append(body)
    seen = {x}
    stack = [x]
    while stack:
        a = stack.pop()
        for body in by_head.get(a, ()):
            for s in body:
                if g.is_nonterminal(s) and s not in seen:
                    seen.add(s)
                    stack.append(s)
    return [(a, b) for a in seen for b in by_head.get(a, ())]


def _concat_all(g: Grammar, body: Form, words: Mapping[str, Set[str]], max_len=None):
    parts: Set[str] = {""}
    for s in body:
        choices = {s} if g.is_terminal(s) else words.get(s, ())
        parts = {p + c for p in parts for c in choices
                 if max_len is None or len(p) + len(c) <= max_len}
        if not parts:
            break
    return parts


def bounded_languages(g: Grammar, roots: Iterable[str], max_len: int,
                      budget: int = DEFAULT_ENUM_BUDGET) -> Dict[str, Set[str]]:
    """Words of length <= max_len for every nonterminal reachable from ``roots``."""
    live = reachable(g, roots)
    words: Dict[str, Set[str]] = {a: set() for a in live}
    total = 0
    changed = True
    while changed:
        changed = False
        for a in live:
            for body in g.productions[a]:
                for w in _concat_all(g, body, words, max_len):
                    if w not in words[a]:
                        words[a].add(w)
                        total += 1
                        changed = True
                        if total > budget:
                            raise BudgetExceeded(
                                f"enumeration exceeded {budget} words (max_len={max_len})")
    return words


def lex_enumerate(g: Grammar, forms: Iterable[Form], max_len: int,
                  budget: int = DEFAULT_ENUM_BUDGET) -> List[str]:
    """Words of length <= max_len derivable from any form, in lexicographic order."""
    forms = [tuple(f) for f in forms]
    roots = {s for f in forms for s in f if g.is_nonterminal(s)}
    words = bounded_languages(g, roots, max_len, budget)
    out: Set[str] = set()
    for f in forms:
        out |= _concat_all(g, f, words, max_len)
    return sorted(out, key=g.alphabet.key)


def expand_words(g: Grammar, body: Form, finite: Mapping[str, Sequence[str]]) -> List[Form]:
    """Replace each symbol with a finite language by each of its words."""
    choices = []
    for s in body:
        if s in finite:
            choices.append([tuple(w) for w in finite[s]])
        else:
            choices.append([(s,)])
    return [tuple(sym for piece in combo for sym in piece) for combo in cartesian(*choices)]

"""Rewrite an ordinal grammar into the solver's normal form.

Normal form: every nonterminal is usable and has an infinite language, every
body starts with a terminal, and every nonterminal except possibly the start
symbol is recursive. Grammars with a finite language short-circuit into a
:class:`FiniteLanguage`.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple, Union

import networkx as nx

from .components import compute_components, component_split
from .errors import BudgetExceeded, LeftRecursionDetected, PrefixViolation, ShapeViolation
from .grammar import (Form, Grammar, expand_words, finite_words, is_finite, make_grammar,
                      nullable, productive, reachable)
from .ordinal import Ordinal, nat

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteLanguage:
    """Early result: ``L(G)`` is finite; ``words`` is sorted lexicographically."""

    words: Tuple[str, ...]

    @property
    def order_type(self) -> Ordinal:
        return nat(len(self.words))


@dataclass
class NormalizeConfig:
    substitution_budget: int = 200_000


@dataclass(frozen=True)
class Finding:
    head: str
    body: Form
    reason: str

    def __str__(self):
        return f"{self.head} -> {' '.join(self.body) or '_eps'}: {self.reason}"


def _rebuild(g: Grammar, prods: Dict[str, List[Form]]) -> Grammar:
    return make_grammar(g.alphabet, prods, g.start)


def remove_unusable(g: Grammar) -> Grammar:
    prod = productive(g)
    kept = {x: [b for b in bodies if all(g.is_terminal(s) or s in prod for s in b)]
            for x, bodies in g.productions.items() if x in prod or x == g.start}
    g1 = _rebuild(g, kept)
    live = reachable(g1, [g.start])
    return _rebuild(g, {x: list(b) for x, b in g1.productions.items() if x in live})


def substitute_finite(g: Grammar) -> Union[Grammar, FiniteLanguage]:
    finite = {x: sorted(finite_words(g, x), key=g.alphabet.key)
              for x in g.nonterminals if is_finite(g, x)}
    if g.start in finite:
        return FiniteLanguage(tuple(finite[g.start]))
    prods = {}
    for x, bodies in g.productions.items():
        if x in finite:
            continue
        prods[x] = [nb for b in bodies for nb in expand_words(g, b, finite)]
    return _rebuild(g, prods)


def eliminate_chains(g: Grammar) -> Grammar:
    unit = nx.DiGraph()
    unit.add_nodes_from(g.nonterminals)
    for x, body in g.rules():
        if len(body) == 1 and g.is_nonterminal(body[0]):
            unit.add_edge(x, body[0])
    prods = {}
    for x in g.nonterminals:
        closure = [x] + [y for y in g.nonterminals if y != x and nx.has_path(unit, x, y)]
        prods[x] = [b for y in closure for b in g.productions[y]
                    if not (len(b) == 1 and g.is_nonterminal(b[0]))]
    return _rebuild(g, prods)


def left_corner_substitute(g: Grammar, budget: int) -> Grammar:
    corner = nx.DiGraph()
    corner.add_nodes_from(g.nonterminals)
    for x, body in g.rules():
        if body and g.is_nonterminal(body[0]):
            corner.add_edge(x, body[0])
    try:
        cycle = nx.find_cycle(corner)
    except nx.NetworkXNoCycle:
        cycle = None
    if cycle:
        path = " => ".join([e[0] for e in cycle] + [cycle[0][0]])
        raise LeftRecursionDetected(f"left recursion {path}")
    new: Dict[str, List[Form]] = {}
    count = 0
    for x in reversed(list(nx.topological_sort(corner))):
        out = []
        for body in g.productions[x]:
            if body and g.is_nonterminal(body[0]):
                out.extend(b + body[1:] for b in new[body[0]])
            else:
                out.append(body)
        count += len(out)
        if count > budget:
            raise BudgetExceeded(f"left-corner substitution exceeded {budget} productions")
        new[x] = out
    return _rebuild(g, {x: new[x] for x in g.nonterminals})


def eliminate_nonrecursive(g: Grammar, budget: int) -> Grammar:
    table = compute_components(g, with_u=False)
    victims = [x for x in g.nonterminals if x != g.start and not table.recursive[x]]
    victims.sort(key=lambda x: (table.height[x], g.nonterminals.index(x)))
    prods = {x: list(b) for x, b in g.productions.items()}
    for v in victims:
        alts = prods.pop(v)
        subst = {v: alts}
        total = 0
        for x in prods:
            prods[x] = [nb for b in prods[x] for nb in expand_words(g, b, subst)]
            total += len(prods[x])
        if total > budget:
            raise BudgetExceeded(f"nonterminal elimination exceeded {budget} productions")
    return _rebuild(g, prods)


def check_shape(g: Grammar) -> List[Finding]:
    """Productions violating the escaping/single-component-symbol shape."""
    table = compute_components(g, with_u=False)
    out = []
    for x, body in g.rules():
        try:
            component_split(g, table, body, x)
        except ShapeViolation as exc:
            reason = str(exc).rsplit(": ", 1)[-1]
            out.append(Finding(x, body, reason))
    return out


def check_normal_form(g: Grammar) -> List[Finding]:
    """All normal-form conditions, as a list of violations (empty means pass)."""
    out = []
    table = compute_components(g, with_u=False)
    prod = productive(g)
    live = reachable(g, [g.start])
    for x in g.nonterminals:
        if x not in prod or x not in live:
            out.append(Finding(x, (), "unusable nonterminal"))
        elif is_finite(g, x):
            out.append(Finding(x, (), "finite language"))
        if x != g.start and not table.recursive[x]:
            out.append(Finding(x, (), "nonrecursive nonterminal other than the start symbol"))
    for x, body in g.rules():
        if not body or not g.is_terminal(body[0]):
            out.append(Finding(x, body, "body does not start with a terminal"))
    return out + check_shape(g)


def to_normal_form(g: Grammar, config: NormalizeConfig = None) -> Union[Grammar, FiniteLanguage]:
    config = config or NormalizeConfig()
    g = remove_unusable(g)
    if not g.productions[g.start]:
        return FiniteLanguage(())
    g = substitute_finite(g)
    if isinstance(g, FiniteLanguage):
        return g
    null = nullable(g)
    if null:
        x = sorted(null)[0]
        raise PrefixViolation(f"L({x}) is infinite and contains the empty word")
    g = eliminate_chains(g)
    g = left_corner_substitute(g, config.substitution_budget)
    g = eliminate_nonrecursive(g, config.substitution_budget)
    g = remove_unusable(g)
    bad = check_shape(g)
    if bad:
        raise ShapeViolation("; ".join(str(f) for f in bad))
    log.debug("normal form:\n%s", g.text())
    return g

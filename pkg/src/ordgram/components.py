"""Derivation preorder, components, recursiveness and the periodic words ``u_X``."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from .errors import NotAnOrdinalGrammar, ShapeViolation
from .grammar import Form, Grammar
from .words import UPWord, primitive_root


@dataclass(frozen=True)
class ComponentTable:
    component: Dict[str, int]
    members: Dict[int, Tuple[str, ...]]
    recursive: Dict[str, bool]
    height: Dict[str, int]
    below: Dict[str, FrozenSet[str]]
    u: Dict[str, str]

    def preceq(self, y: str, x: str) -> bool:
        """``y`` occurs in some sentential form derived from ``x``."""
        return y in self.below[x]

    def equiv(self, x: str, y: str) -> bool:
        return self.component[x] == self.component[y]

    def strictly_below(self, y: str, x: str) -> bool:
        return self.preceq(y, x) and not self.equiv(x, y)

    def components_by_height(self) -> List[int]:
        return sorted(self.members, key=lambda c: (self.height[self.members[c][0]], c))


def symbol_graph(g: Grammar) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(g.alphabet.letters)
    graph.add_nodes_from(g.nonterminals)
    for x, body in g.rules():
        for s in body:
            graph.add_edge(x, s)
    return graph


def compute_components(g: Grammar, with_u: bool = True) -> ComponentTable:
    graph = symbol_graph(g)
    cond = nx.condensation(graph)
    mapping = cond.graph["mapping"]
    # stable ids: order components by first member in display order
    order = list(g.nonterminals) + list(g.alphabet.letters)
    first_seen: Dict[int, int] = {}
    for i, s in enumerate(order):
        first_seen.setdefault(mapping[s], i)
    renum = {c: i for i, c in enumerate(sorted(first_seen, key=first_seen.get))}
    component = {s: renum[mapping[s]] for s in order}
    members: Dict[int, Tuple[str, ...]] = {}
    for s in order:
        members.setdefault(component[s], ())
        members[component[s]] += (s,)

    recursive = {}
    for x in g.nonterminals:
        recursive[x] = len(members[component[x]]) > 1 or graph.has_edge(x, x)

    comp_height: Dict[int, int] = {}
    for c in reversed(list(nx.topological_sort(cond))):
        succ = [comp_height[d] for d in cond.successors(c)]
        is_terminal = any(g.is_terminal(s) for s in cond.nodes[c]["members"])
        comp_height[c] = 0 if is_terminal else 1 + max(succ, default=0)
    height = {s: comp_height[mapping[s]] for s in order}

    below = {s: frozenset(nx.descendants(graph, s) | {s}) for s in order}
    table = ComponentTable(component, members, recursive, height, below, {})
    if with_u:
        for x in g.nonterminals:
            if recursive[x]:
                table.u[x] = compute_u(g, table, x)
        verify_periodicity(g, table)
    return table


def component_split(g: Grammar, table: ComponentTable, body: Form,
                    head: str) -> Optional[Tuple[str, str, Form]]:
    """Split a component production body into (terminal prefix, component symbol, tail).

    Returns None for escaping productions; raises ShapeViolation when the body
    does not have the single-component-symbol shape.
    """
    idx = [i for i, s in enumerate(body) if g.is_nonterminal(s) and table.equiv(s, head)]
    if not idx:
        return None
    if len(idx) > 1:
        raise ShapeViolation(f"{head} -> {' '.join(body)}: several component symbols")
    i = idx[0]
    prefix = body[:i]
    if not all(g.is_terminal(s) for s in prefix):
        raise ShapeViolation(f"{head} -> {' '.join(body)}: nonterminal before the component symbol")
    return "".join(prefix), body[i], body[i + 1:]


def component_edges(g: Grammar, table: ComponentTable, cid: int):
    for x in table.members[cid]:
        if not g.is_nonterminal(x):
            continue
        for body in g.productions[x]:
            split = component_split(g, table, body, x)
            if split is not None:
                w, y, _ = split
                yield x, w, y


def compute_u(g: Grammar, table: ComponentTable, x: str) -> str:
    """Primitive root of the label of a shortest cycle through ``x``."""
    if not table.recursive.get(x):
        raise ValueError(f"{x} is not recursive")
    adj: Dict[str, List[Tuple[str, str]]] = {}
    for a, w, b in component_edges(g, table, table.component[x]):
        adj.setdefault(a, []).append((w, b))
    # BFS on edge count; the first edge back to x closes a shortest cycle
    parent: Dict[str, Tuple[str, str]] = {}
    queue = deque([x])
    seen = {x}
    while queue:
        a = queue.popleft()
        for w, b in adj.get(a, ()):
            if b == x:
                label = [w]
                node = a
                while node != x:
                    prev, lab = parent[node]
                    label.append(lab)
                    node = prev
                word = "".join(reversed(label))
                if not word:
                    raise NotAnOrdinalGrammar(f"{x} has a pumping derivation with empty prefix")
                return primitive_root(word)
            if b not in seen:
                seen.add(b)
                parent[b] = (a, w)
                queue.append(b)
    raise ValueError(f"no cycle through {x}")


def verify_periodicity(g: Grammar, table: ComponentTable) -> None:
    """Every component edge ``X -> w Y ...`` must satisfy ``u_X^w == w u_Y^w``.

    This is equivalent to every cycle label through ``X`` being a power of
    ``u_X``.
    """
    for cid, mem in table.members.items():
        if not (g.is_nonterminal(mem[0]) and table.recursive[mem[0]]):
            continue
        for a, w, b in component_edges(g, table, cid):
            lhs = UPWord.make("", table.u[a])
            rhs = UPWord.make(w, table.u[b])
            if lhs != rhs:
                raise NotAnOrdinalGrammar(
                    f"pumping words of {a} are not powers of one primitive word "
                    f"({a} -> {w} {b} ...: {lhs} != {rhs})")

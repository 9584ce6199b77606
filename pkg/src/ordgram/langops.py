"""Suprema, quotient/restriction operators on sentential forms, and GSM images.

All form-set operations take and return frozensets of symbol tuples whose
members start with a terminal or are empty.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from .components import ComponentTable
from .errors import GrammarError
from .grammar import Form, Grammar, finite_words, is_empty, is_finite, make_grammar, productive
from .words import Alphabet, UPWord, lex_cmp

FormSet = FrozenSet[Form]


@dataclass(frozen=True)
class SupInfo:
    value: UPWord
    attained: bool

    def __str__(self):
        return f"{self.value} ({'attained' if self.attained else 'not attained'})"


def sup(g: Grammar, table: ComponentTable, form: Iterable[str]) -> SupInfo:
    form = tuple(form)
    prefix = ""
    for i, s in enumerate(form):
        if g.is_terminal(s):
            prefix += s
            continue
        head = sup_symbol(g, table, s)
        if not head.attained:
            return SupInfo(head.value.prepend(prefix), False)
        prefix += head.value.prefix
    return SupInfo(UPWord.finite(prefix), True)


def sup_symbol(g: Grammar, table: ComponentTable, x: str) -> SupInfo:
    if g.is_terminal(x):
        return SupInfo(UPWord.finite(x), True)
    if x not in productive(g):
        raise GrammarError(f"{x} is unproductive")
    if table.recursive[x]:
        return SupInfo(UPWord.make("", table.u[x]), False)
    best: Optional[SupInfo] = None
    for body in g.productions[x]:
        cand = sup(g, table, body)
        if best is None:
            best = cand
            continue
        c = lex_cmp(cand.value, best.value, g.alphabet)
        if c > 0 or (c == 0 and cand.attained):
            best = cand
    return best


def max_sup(infos: Iterable[SupInfo], alphabet: Alphabet) -> UPWord:
    best = None
    for info in infos:
        if best is None or lex_cmp(info.value, best, alphabet) > 0:
            best = info.value
    return best


# --- quotients ----------------------------------------------------------------


def expand_leading(g: Grammar, form: Form) -> FormSet:
    """Rewrite leading nonterminals until every form starts with a terminal."""
    out = set()
    stack = [tuple(form)]
    seen = set()
    while stack:
        f = stack.pop()
        if f in seen:
            continue
        seen.add(f)
        if f and g.is_nonterminal(f[0]):
            stack.extend(b + f[1:] for b in g.productions[f[0]])
        else:
            out.add(f)
    return frozenset(out)


def _letter_quot(g: Grammar, form: Form, b: str) -> FormSet:
    if not form or form[0] != b:
        return frozenset()
    rest = form[1:]
    if not rest or g.is_terminal(rest[0]):
        return frozenset([rest])
    return frozenset(f for d in g.productions[rest[0]] for f in expand_leading(g, d + rest[1:]))


def _less_letter(g: Grammar, form: Form, b: str) -> FormSet:
    if not form:
        return frozenset([form])
    if g.alphabet.rank(form[0]) < g.alphabet.rank(b):
        return frozenset([form])
    return frozenset()


def _geq_letter(g: Grammar, form: Form, b: str) -> FormSet:
    if not form or g.alphabet.rank(form[0]) < g.alphabet.rank(b):
        return frozenset()
    return frozenset([form])


def quot_less(g: Grammar, form: Form, w: str) -> FormSet:
    """Forms generating ``{x in L(form) : x < w}``."""
    out = set()
    for f in expand_leading(g, form):
        out |= _quot_less(g, f, w)
    return frozenset(out)


def _quot_less(g: Grammar, form: Form, w: str) -> FormSet:
    if not w:
        return frozenset()
    b, rest = w[0], w[1:]
    out = set(_less_letter(g, form, b))
    if rest:
        for gam in _letter_quot(g, form, b):
            out.update((b,) + f for f in _quot_less(g, gam, rest))
    return frozenset(out)


def quot_geq(g: Grammar, form: Form, w: str) -> FormSet:
    """Forms generating ``{x in L(form) : x >= w}``."""
    out = set()
    for f in expand_leading(g, form):
        out |= _quot_geq(g, f, w)
    return frozenset(out)


def _quot_geq(g: Grammar, form: Form, w: str) -> FormSet:
    if not w:
        return frozenset([form])
    b, rest = w[0], w[1:]
    out = set()
    for gam in _letter_quot(g, form, b):
        out.update((b,) + f for f in _quot_geq(g, gam, rest))
    c = g.alphabet.successor(b)
    if c is not None:
        out |= _geq_letter(g, form, c)
    return frozenset(out)


def left_quot(g: Grammar, form: Form, u: str) -> FormSet:
    """Forms generating ``u^{-1} L(form)``."""
    current = expand_leading(g, form)
    for b in u:
        current = frozenset(f for c in current for f in _letter_quot(g, c, b))
    return current


def quot_less_set(g, forms, w) -> FormSet:
    return frozenset(f for a in forms for f in quot_less(g, a, w))


def quot_geq_set(g, forms, w) -> FormSet:
    return frozenset(f for a in forms for f in quot_geq(g, a, w))


def left_quot_set(g, forms, u) -> FormSet:
    return frozenset(f for a in forms for f in left_quot(g, a, u))


# --- generalized sequential machines ---------------------------------------------


@dataclass(frozen=True)
class GSM:
    """Deterministic sequential transducer; missing transitions reject."""

    n_states: int
    initial: int
    finals: FrozenSet[int]
    delta: Dict[Tuple[int, str], Tuple[int, str]]


def gsm_image(g: Grammar, forms: Iterable[Form], gsm: GSM,
              out_alphabet: Alphabet = None) -> Tuple[Grammar, str]:
    """Grammar for the image of ``L(forms)`` under ``gsm``, via (state, NT, state) triples."""
    Q = range(gsm.n_states)
    if out_alphabet is None:
        out_alphabet = Alphabet(sorted({c for _, out in gsm.delta.values() for c in out}) or ["#"])

    def name(p, x, q):
        return f"{x}@{p}>{q}"

    def runs(body: Form, p: int):
        # yields (end state, image body)
        stack = [(0, p, ())]
        while stack:
            i, st, acc = stack.pop()
            if i == len(body):
                yield st, acc
                continue
            s = body[i]
            if g.is_terminal(s):
                step = gsm.delta.get((st, s))
                if step is not None:
                    stack.append((i + 1, step[0], acc + tuple(step[1])))
            else:
                for q in Q:
                    stack.append((i + 1, q, acc + (name(st, s, q),)))

    prods: Dict[str, List[Form]] = {}
    start = "^start"
    prods[start] = []
    for x in g.nonterminals:
        for p in Q:
            for q in Q:
                prods.setdefault(name(p, x, q), [])
    for x, body in g.rules():
        for p in Q:
            for q, img in runs(body, p):
                prods[name(p, x, q)].append(img)
    for f in forms:
        for q, img in runs(tuple(f), gsm.initial):
            if q in gsm.finals:
                prods[start].append(img)
    return make_grammar(out_alphabet, prods, start), start


def _copy_counter(alphabet: Alphabet, u: str, v: str) -> GSM:
    # states: 0..|u|-1 read u, |u|..|u|+|v|-1 inside a copy of v, last = done
    nu, nv = len(u), len(v)
    done = nu + nv
    delta = {}
    for c in alphabet:
        delta[(done, c)] = (done, "")
        for i in range(nu):
            if c == u[i]:
                delta[(i, c)] = (i + 1, "#") if i + 1 == nu else (i + 1, "")
            else:
                delta[(i, c)] = (done, "")
        for j in range(nv):
            if c == v[j]:
                delta[(nu + j, c)] = (nu, "#") if j + 1 == nv else (nu + j + 1, "")
            else:
                delta[(nu + j, c)] = (done, "")
    return GSM(done + 1, 0, frozenset(range(done + 1)), delta)


def avoidance_threshold(g: Grammar, u: str, v: str, form: Form) -> Optional[int]:
    """Least ``N`` with ``u v^N Sigma* & L(form)`` empty, or None if there is none."""
    if not v:
        raise ValueError("v must be nonempty")
    img, start = gsm_image(g, [tuple(form)], _copy_counter(g.alphabet, u, v))
    if not is_finite(img, start):
        return None
    marks = finite_words(img, start)
    if not marks:
        return 0
    m = max(len(x) for x in marks)
    # with u nonempty one mark records "starts with u"
    return m if u else m + 1


def eventually_avoids(g: Grammar, u: str, v: str, form: Form) -> bool:
    return avoidance_threshold(g, u, v, form) is not None


def _periodic_tracker(alphabet: Alphabet, u: str) -> Tuple[Dict, int, int]:
    # states 0..|u|-1 track the position in u^w; LOW/HIGH record the first difference
    n = len(u)
    low, high = n, n + 1
    delta = {}
    for c in alphabet:
        delta[(low, c)] = (low, c)
        delta[(high, c)] = (high, c)
        for i in range(n):
            if c == u[i]:
                delta[(i, c)] = ((i + 1) % n, c)
            elif alphabet.rank(c) < alphabet.rank(u[i]):
                delta[(i, c)] = (low, c)
            else:
                delta[(i, c)] = (high, c)
    return delta, low, high


def words_not_below(g: Grammar, x: str, u: str) -> Tuple[Optional[str], Optional[str]]:
    """Shortest witnesses in ``L(x)`` that are a prefix of / above ``u^omega``.

    Both None means every word of ``L(x)`` is strictly below ``u^omega``.
    """
    delta, low, high = _periodic_tracker(g.alphabet, u)
    found = []
    for finals in (frozenset(range(len(u))), frozenset([high])):
        gsm = GSM(len(u) + 2, 0, finals, delta)
        img, start = gsm_image(g, [(x,)], gsm, g.alphabet)
        found.append(shortest_word(img, start))
    return found[0], found[1]


def shortest_word(g: Grammar, x: str) -> Optional[str]:
    best: Dict[str, str] = {}
    changed = True
    while changed:
        changed = False
        for a, body in g.rules():
            parts = []
            for s in body:
                if g.is_terminal(s):
                    parts.append(s)
                elif s in best:
                    parts.append(best[s])
                else:
                    break
            else:
                w = "".join(parts)
                old = best.get(a)
                if old is None or (len(w), g.alphabet.key(w)) < (len(old), g.alphabet.key(old)):
                    best[a] = w
                    changed = True
    return best.get(x)


def forms_empty(g: Grammar, forms: Iterable[Form]) -> bool:
    return is_empty(g, forms)

"""Order types of ordinal grammars in Cantor normal form."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Union

from .components import ComponentTable, component_split, compute_components
from .errors import BoundViolation, BudgetExceeded, NotWellOrdered, PrefixViolation
from .grammar import Form, Grammar
from .langops import (avoidance_threshold, left_quot_set, expand_leading, quot_geq_set,
                      quot_less_set, sup, words_not_below)
from .normalize import FiniteLanguage, NormalizeConfig, to_normal_form
from .ordinal import (ONE, OMEGA, ZERO, Ordinal, add, below_omega_omega_omega, cmp, degree,
                      is_omega_power, mul, omega_pow, pow_omega)
from .words import finite_prefix, lex_cmp

log = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    step_budget: int = 100_000
    depth_cap: int = 500
    prefix_cap_factor: int = 10
    substitution_budget: int = 200_000
    check_periodicity: bool = True


@dataclass
class ComponentSolution:
    members: tuple
    o_alpha: Ordinal
    o_beta: Ordinal
    case: int
    value: Ordinal
    # independent split on degrees (delta against gamma * omega); must give the same value
    degree_case: str = ""
    degree_value: Optional[Ordinal] = None

    @property
    def gamma(self) -> Ordinal:
        return degree(self.o_alpha)

    @property
    def delta(self) -> Ordinal:
        return degree(self.o_beta)


@dataclass
class OrderTypeTable:
    types: Dict[str, Ordinal] = field(default_factory=dict)
    components: Dict[int, ComponentSolution] = field(default_factory=dict)

    def __getitem__(self, sym: str) -> Ordinal:
        return self.types[sym]

    @classmethod
    def for_grammar(cls, g: Grammar) -> "OrderTypeTable":
        return cls({c: ONE for c in g.alphabet})


def order_type_of_form(table: OrderTypeTable, form: Iterable[str]) -> Ordinal:
    """``o(X1...Xn) = o(Xn) x ... x o(X1)``; terminals have type 1."""
    acc = ONE
    for s in form:
        acc = mul(table.types[s], acc)
    return acc


def _escaping_and_component(g: Grammar, comps: ComponentTable, cid: int):
    alphas: List[Form] = []
    betas: List[tuple] = []
    for x in comps.members[cid]:
        for body in g.productions[x]:
            split = component_split(g, comps, body, x)
            if split is None:
                betas.append((x, body))
            else:
                alphas.append(split[2])
    return alphas, betas


def solve_recursive_component(g: Grammar, comps: ComponentTable, table: OrderTypeTable,
                              cid: int) -> Ordinal:
    members = comps.members[cid]
    alphas, betas = _escaping_and_component(g, comps, cid)
    if not betas:
        raise BudgetExceeded(f"component {members} has no escaping production")
    o_alpha = max(order_type_of_form(table, a) for a in alphas)
    beta_types = [(x, b, order_type_of_form(table, b)) for x, b in betas]
    o_beta = max(t for _, _, t in beta_types)
    delta = degree(o_beta)

    avoided_cache: Optional[bool] = None

    def some_top_beta_avoided() -> bool:
        nonlocal avoided_cache
        if avoided_cache is None:
            avoided_cache = any(
                avoidance_threshold(g, "", comps.u[x], b) is not None
                for x, b, t in beta_types if cmp(degree(t), delta) == 0)
        return avoided_cache

    power = pow_omega(o_alpha)
    if cmp(o_beta, power) < 0:
        case, value = 1, power
    elif is_omega_power(o_beta) and not some_top_beta_avoided():
        case, value = 2, o_beta
    else:
        case, value = 3, mul(o_beta, OMEGA)

    # degree route
    gamma = degree(o_alpha)
    if cmp(delta, mul(gamma, OMEGA)) < 0:
        degree_case, degree_value = "1", power
    elif some_top_beta_avoided():
        degree_case, degree_value = "2.1", mul(o_beta, OMEGA)
    elif o_beta == omega_pow(delta):
        degree_case, degree_value = "2.2a", o_beta
    else:
        degree_case, degree_value = "2.2b", mul(o_beta, OMEGA)

    table.components[cid] = ComponentSolution(members, o_alpha, o_beta, case, value,
                                              degree_case, degree_value)
    for x in members:
        table.types[x] = value
    log.debug("component %s: o_alpha=%s o_beta=%s case %d -> %s",
              members, o_alpha, o_beta, case, value)
    return value


class _Budget:
    def __init__(self, steps: int):
        self.left = steps

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("algorithm A step budget exhausted")


def _find_cut(g: Grammar, right1, w, cap: int) -> str:
    """Shortest prefix ``w'`` of ``w`` with every ``L(right1)`` already below it."""
    n = 0
    while True:
        wp = finite_prefix(w, n)
        if not quot_geq_set(g, right1, wp):
            return wp
        if w.is_finite and n >= len(w.prefix):
            break
        n += 1
        if n > cap:
            break
    raise BudgetExceeded(f"no separating prefix of {w} found within length {cap}")


def algorithm_A(g: Grammar, comps: ComponentTable, table: OrderTypeTable,
                forms: Iterable[Form], config: SolverConfig = None,
                _budget: _Budget = None, _depth: int = 0) -> Ordinal:
    """Order type of the union of ``L(form)`` over ``forms``."""
    config = config or SolverConfig()
    budget = _budget or _Budget(config.step_budget)
    if _depth > config.depth_cap:
        raise BudgetExceeded(f"algorithm A recursion deeper than {config.depth_cap}")
    right = frozenset(f for form in forms for f in expand_leading(g, tuple(form)))
    if not right:
        return ZERO
    left = set()
    u: tuple = ()
    alpha = g.alphabet
    while True:
        budget.tick()
        sups = {f: sup(g, comps, f) for f in right}
        w = None
        for info in sups.values():
            if w is None or lex_cmp(info.value, w, alpha) > 0:
                w = info.value
        right1 = [f for f in right if lex_cmp(sups[f].value, w, alpha) < 0]
        right2 = [f for f in right if lex_cmp(sups[f].value, w, alpha) == 0]
        o = max(order_type_of_form(table, f) for f in right2)
        if is_omega_power(o):
            cap = config.prefix_cap_factor * (len(w.prefix) + len(w.period) + g.size)
            wp = _find_cut(g, right1, w, cap)
            lower = set(right1) | quot_less_set(g, right2, wp)
            return add(add(algorithm_A(g, comps, table, left, config, budget, _depth + 1),
                           algorithm_A(g, comps, table, lower, config, budget, _depth + 1)),
                       omega_pow(degree(o)))
        a = max((f[0] for f in right if f), key=alpha.rank)
        left |= {u + f for f in right if not f or f[0] != a}
        right = left_quot_set(g, [f for f in right if f and f[0] == a], a)
        u = u + (a,)
        right = frozenset(f for r in right for f in expand_leading(g, r))


@dataclass
class Solution:
    order_type: Ordinal
    normal_form: Optional[Grammar] = None
    finite: Optional[FiniteLanguage] = None
    components: Optional[ComponentTable] = None
    table: Optional[OrderTypeTable] = None


def check_periodicity(g: Grammar, comps: ComponentTable) -> None:
    """Every word of a recursive ``L(X)`` must be strictly below ``u_X^omega``."""
    for x in g.nonterminals:
        if not comps.recursive[x]:
            continue
        pre, above = words_not_below(g, x, comps.u[x])
        if pre is not None:
            raise PrefixViolation(
                f"{pre} in L({x}) is a prefix of ({comps.u[x]})^w; L({x}) is not prefix-free "
                f"or not well-ordered")
        if above is not None:
            raise NotWellOrdered(
                f"{above} in L({x}) lies above ({comps.u[x]})^w, so pumping {x} yields "
                f"an infinite descending chain")


def solve_components(g: Grammar, comps: ComponentTable) -> OrderTypeTable:
    table = OrderTypeTable.for_grammar(g)
    for cid in comps.components_by_height():
        head = comps.members[cid][0]
        if g.is_terminal(head):
            continue
        if comps.recursive[head]:
            solve_recursive_component(g, comps, table, cid)
    return table


def solve(g: Grammar, config: SolverConfig = None) -> Solution:
    config = config or SolverConfig()
    nf = to_normal_form(g, NormalizeConfig(config.substitution_budget))
    if isinstance(nf, FiniteLanguage):
        return Solution(nf.order_type, finite=nf)
    comps = compute_components(nf)
    if config.check_periodicity:
        check_periodicity(nf, comps)
    table = solve_components(nf, comps)
    s = nf.start
    if comps.recursive[s]:
        result = table.types[s]
    else:
        result = algorithm_A(nf, comps, table, nf.productions[s], config)
        table.types[s] = result
    if not below_omega_omega_omega(result):
        raise BoundViolation(f"order type {result} is not below w^(w^w)")
    return Solution(result, nf, None, comps, table)


def order_type_of_grammar(g: Grammar, config: SolverConfig = None) -> Ordinal:
    return solve(g, config).order_type


def isomorphic(g1: Grammar, g2: Grammar, config: SolverConfig = None) -> bool:
    return cmp(order_type_of_grammar(g1, config), order_type_of_grammar(g2, config)) == 0

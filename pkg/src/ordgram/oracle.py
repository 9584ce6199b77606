"""Bounded evidence for the ordinal-grammar hypothesis, plus enumeration cross-checks.

Nothing here is a decision procedure: a clean report only says that no
counterexample exists among words up to ``max_len``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Callable, List, Optional

from .components import compute_components
from .errors import NotAnOrdinalGrammar
from .grammar import Grammar, bounded_languages, finite_words, is_finite, lex_enumerate
from .normalize import FiniteLanguage, to_normal_form
from .ordinal import Ordinal, cmp
from .words import UPWord, is_proper_prefix, is_strictly_below, lex_cmp


@dataclass(frozen=True)
class ValidationFinding:
    kind: str
    symbol: str
    detail: str
    words: tuple = ()

    def record(self) -> dict:
        d = asdict(self)
        d["words"] = list(self.words)
        return d

    def __str__(self):
        return f"[{self.kind}] {self.symbol}: {self.detail}"


@dataclass
class ValidationReport:
    max_len: int
    findings: List[ValidationFinding] = field(default_factory=list)
    word_count: Optional[int] = None

    @property
    def clean(self) -> bool:
        return not self.findings

    def kinds(self) -> set:
        return {f.kind for f in self.findings}


def _copies(w: str, u: str) -> int:
    k = 0
    while w.startswith(u * (k + 1)):
        k += 1
    return k


def validate(g: Grammar, max_len: int, budget: int = 2_000_000) -> ValidationReport:
    report = ValidationReport(max_len)
    alpha = g.alphabet
    langs = bounded_languages(g, g.nonterminals, max_len, budget)
    for x in g.nonterminals:
        words = sorted(langs.get(x, ()), key=alpha.key)
        # in lexicographic order a word's extensions directly follow it
        for u, v in zip(words, words[1:]):
            if is_proper_prefix(u, v):
                report.findings.append(ValidationFinding(
                    "prefix", x, f"{u or 'eps'} <_p {v}", (u, v)))
                break

    try:
        nf = to_normal_form(g)
        if not isinstance(nf, FiniteLanguage):
            comps = compute_components(nf)
        else:
            comps = None
    except NotAnOrdinalGrammar as exc:
        report.findings.append(ValidationFinding("normalization", g.start,
                                                 f"{type(exc).__name__}: {exc}"))
        nf = comps = None

    if comps is not None:
        nf_langs = bounded_languages(nf, nf.nonterminals, max_len, budget)
        for x in nf.nonterminals:
            if not comps.recursive[x]:
                continue
            u = comps.u[x]
            bound = UPWord.make("", u)
            offenders = [w for w in sorted(nf_langs[x], key=alpha.key)
                         if not is_strictly_below(w, bound, alpha)]
            if offenders:
                w = offenders[0]
                report.findings.append(ValidationFinding(
                    "not-below-u", x, f"{w} is not strictly below ({u})^w", (w,)))
            above = [w for w in nf_langs[x]
                     if lex_cmp(UPWord.finite(w), bound, alpha) > 0]
            chain = _descending_chain(above, u, alpha)
            if len(chain) >= 3:
                shown = " < ".join(reversed(chain))
                report.findings.append(ValidationFinding(
                    "descending-chain", x, f"... < {shown}", tuple(chain)))

    if is_finite(g, g.start):
        report.word_count = len(finite_words(g, g.start))
    return report


def _descending_chain(words, u, alpha) -> List[str]:
    best = {}
    for w in words:
        k = _copies(w, u)
        if k not in best or alpha.key(w) > alpha.key(best[k]):
            best[k] = w
    chain = []
    for k in sorted(best):
        w = best[k]
        if chain and not alpha.key(w) < alpha.key(chain[-1]):
            break
        chain.append(w)
    return chain


def rank_check(g: Grammar, claimed: Ordinal, rank: Callable[[str], Ordinal],
               max_len: int) -> bool:
    """Ranks strictly increase along the enumeration and stay below ``claimed``."""
    words = lex_enumerate(g, [(g.start,)], max_len)
    ranks = [rank(w) for w in words]
    if any(cmp(r, claimed) >= 0 for r in ranks):
        return False
    return all(cmp(a, b) < 0 for a, b in zip(ranks, ranks[1:]))


def report_lines(report: ValidationReport) -> List[str]:
    lines = [str(f) for f in report.findings]
    if report.word_count is not None:
        lines.append(f"finite language: {report.word_count} words")
    if report.clean:
        lines.append(f"no violations up to length {report.max_len}")
    return lines

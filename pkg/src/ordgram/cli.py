"""Command-line front end: ``ordgram SUBCOMMAND ...``.

Results go to stdout, diagnostics to stderr. Exit codes: 0 success, 1 for a
negative answer (``iso``: not isomorphic, ``validate``: findings), 2 on any
diagnostic error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from .components import compute_components
from .errors import GrammarError, OrdgramError
from .grammar import EPS_TOKEN, Grammar, format_grammar, load_grammar
from .langops import SupInfo, sup_symbol
from .normalize import FiniteLanguage, to_normal_form
from .oracle import report_lines, validate
from .ordinal import to_text
from .solver import SolverConfig, solve
from .words import UPWord

log = logging.getLogger("ordgram")


def _config(args) -> SolverConfig:
    return SolverConfig(step_budget=args.step_budget, depth_cap=args.depth_cap)


def _finite_grammar_text(g: Grammar, fin: FiniteLanguage) -> str:
    lines = ["order: " + " < ".join(g.alphabet.letters), f"start: {g.start}"]
    if fin.words:
        bodies = [" ".join(w) if w else EPS_TOKEN for w in fin.words]
        lines.append(f"{g.start} -> " + " | ".join(bodies))
    return "\n".join(lines) + "\n"


def cmd_order_type(args):
    sol = solve(load_grammar(args.file), _config(args))
    text = to_text(sol.order_type)
    return {"file": args.file, "order_type": text}, text, 0


def cmd_normalize(args):
    g = load_grammar(args.file)
    nf = to_normal_form(g)
    if isinstance(nf, FiniteLanguage):
        text = _finite_grammar_text(g, nf)
    else:
        text = format_grammar(nf)
    return {"file": args.file, "grammar": text}, text.rstrip("\n"), 0


def cmd_analyze(args):
    g = load_grammar(args.file)
    cfg = _config(args)
    sol = solve(g, cfg)
    out = {"file": args.file, "order_type": to_text(sol.order_type),
           "components": [], "nonterminals": {}}
    lines = [f"order type: {to_text(sol.order_type)}"]
    if sol.finite is not None:
        lines.append(f"finite language with {len(sol.finite.words)} words")
    else:
        comps, table = sol.components, sol.table
        lines.append("components (normal form):")
        for cid in comps.components_by_height():
            head = comps.members[cid][0]
            if sol.normal_form.is_terminal(head):
                continue
            rec = comps.recursive[head]
            rec_info = {"id": cid, "members": list(comps.members[cid]), "recursive": rec,
                        "height": comps.height[head],
                        "u": comps.u.get(head) if rec else None,
                        "order_type": to_text(table.types[head]) if head in table.types else None}
            cs = table.components.get(cid)
            if cs is not None:
                rec_info.update(case=cs.case, o_alpha=to_text(cs.o_alpha),
                                o_beta=to_text(cs.o_beta))
            out["components"].append(rec_info)
            desc = f"  [{cid}] {' '.join(comps.members[cid])}  height={rec_info['height']}"
            desc += f"  recursive u={rec_info['u']}" if rec else "  nonrecursive"
            if rec_info["order_type"]:
                desc += f"  o={rec_info['order_type']}"
            if cs is not None:
                desc += (f"  (case {cs.case}: o_alpha={to_text(cs.o_alpha)}, "
                         f"o_beta={to_text(cs.o_beta)})")
            lines.append(desc)
    lines.append("nonterminals:")
    for x in g.nonterminals:
        try:
            ot = to_text(solve(g.with_start(x), cfg).order_type)
        except OrdgramError as exc:
            ot = f"error: {type(exc).__name__}: {exc}"
        out["nonterminals"][x] = ot
        lines.append(f"  {x}: {ot}")
    return out, "\n".join(lines), 0


def sup_of(g: Grammar, symbol: str) -> SupInfo:
    if g.is_terminal(symbol):
        return SupInfo(UPWord.finite(symbol), True)
    if not g.is_nonterminal(symbol):
        raise GrammarError(f"unknown symbol {symbol!r}")
    g = g.with_start(symbol)
    nf = to_normal_form(g)
    if isinstance(nf, FiniteLanguage):
        if not nf.words:
            raise GrammarError(f"L({symbol}) is empty")
        return SupInfo(UPWord.finite(max(nf.words, key=g.alphabet.key)), True)
    return sup_symbol(nf, compute_components(nf), symbol)


def cmd_sup(args):
    info = sup_of(load_grammar(args.file), args.symbol)
    return ({"file": args.file, "symbol": args.symbol, "sup": str(info.value),
             "attained": info.attained}, str(info), 0)


def cmd_iso(args):
    cfg = _config(args)
    a = solve(load_grammar(args.file1), cfg).order_type
    b = solve(load_grammar(args.file2), cfg).order_type
    same = a == b
    text = "isomorphic" if same else "not isomorphic"
    return ({"isomorphic": same, "order_types": [to_text(a), to_text(b)]}, text,
            0 if same else 1)


def cmd_validate(args):
    report = validate(load_grammar(args.file), args.max_len)
    if args.json:
        # one record per finding
        records = [f.record() for f in report.findings]
        records.append({"kind": "summary", "clean": report.clean,
                        "word_count": report.word_count, "max_len": report.max_len})
        return None, "\n".join(json.dumps(r) for r in records), 0 if report.clean else 1
    return None, "\n".join(report_lines(report)), 0 if report.clean else 1


def _common() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--step-budget", type=int, default=argparse.SUPPRESS,
                        help="algorithm A iteration budget")
    common.add_argument("--depth-cap", type=int, default=argparse.SUPPRESS,
                        help="algorithm A recursion cap")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress log output")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="print a machine-readable record")
    return common


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ordgram", parents=[_common()],
                                description="Order types of ordinal grammars.")
    p.set_defaults(step_budget=SolverConfig.step_budget, depth_cap=SolverConfig.depth_cap,
                   quiet=False, json=False)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("order-type", parents=[_common()], help="print the order type in CNF")
    s.add_argument("file")
    s.set_defaults(func=cmd_order_type)

    s = sub.add_parser("normalize", parents=[_common()], help="print the normalized grammar")
    s.add_argument("file")
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("analyze", parents=[_common()],
                       help="components, u_X and per-nonterminal order types")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("sup", parents=[_common()], help="supremum of L(SYMBOL)")
    s.add_argument("file")
    s.add_argument("symbol")
    s.set_defaults(func=cmd_sup)

    s = sub.add_parser("iso", parents=[_common()], help="decide isomorphism of two grammars")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("validate", parents=[_common()],
                       help="bounded check of prefix-freeness and well-order evidence")
    s.add_argument("file")
    s.add_argument("--max-len", type=int, default=8)
    s.set_defaults(func=cmd_validate)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        record, text, code = args.func(args)
    except (OrdgramError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.json and record is not None:
        print(json.dumps(record))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

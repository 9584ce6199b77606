"""Solve every grammar in a corpus directory and tabulate results and timings."""
import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from ordgram import OrdgramError, SolverConfig, load_grammar, solve, to_text


@dataclass
class RunConfig:
    corpus: str = str(Path(__file__).resolve().parent.parent / "corpus")
    pattern: str = "*.cfg"
    step_budget: int = 100_000
    depth_cap: int = 500
    as_json: bool = False


def run(cfg: RunConfig):
    solver = SolverConfig(step_budget=cfg.step_budget, depth_cap=cfg.depth_cap)
    rows = []
    for path in sorted(Path(cfg.corpus).glob(cfg.pattern)):
        t = time.perf_counter()
        row = {"file": path.name}
        try:
            sol = solve(load_grammar(path), solver)
            row["order_type"] = to_text(sol.order_type)
            if sol.table is not None:
                row["cases"] = {"/".join(c.members): c.case
                                for c in sol.table.components.values()}
        except OrdgramError as exc:
            row["error"] = f"{type(exc).__name__}: {exc}"
        row["seconds"] = round(time.perf_counter() - t, 4)
        rows.append(row)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__)
    defaults = RunConfig()
    p.add_argument("--corpus", default=defaults.corpus)
    p.add_argument("--pattern", default=defaults.pattern)
    p.add_argument("--step-budget", type=int, default=defaults.step_budget)
    p.add_argument("--depth-cap", type=int, default=defaults.depth_cap)
    p.add_argument("--json", dest="as_json", action="store_true")
    cfg = RunConfig(**vars(p.parse_args()))
    rows = run(cfg)
    if cfg.as_json:
        print(json.dumps({"config": asdict(cfg), "results": rows}, indent=2))
        return
    for r in rows:
        result = r.get("order_type") or r["error"]
        print(f"{r['file']:24} {result:40} {r['seconds']:.3f}s")


if __name__ == "__main__":
    main()

"""Random sweep of the ordinal identities the solver relies on.

Prints one line per identity with the number of failures.
"""
import argparse
import random
import time
from dataclasses import dataclass

from ordgram.ordinal import Ordinal, add, cmp, degree, mul, nat


@dataclass
class SweepConfig:
    samples: int = 10_000
    depth: int = 2
    max_coeff: int = 9
    max_terms: int = 3
    seed: int = 0


def random_ordinal(rng, cfg: SweepConfig, depth: int) -> Ordinal:
    if depth == 0:
        return nat(rng.randint(0, 3))
    exps = {random_ordinal(rng, cfg, depth - 1) for _ in range(rng.randint(0, cfg.max_terms))}
    return Ordinal([(e, rng.randint(1, cfg.max_coeff)) for e in sorted(exps, reverse=True)])


IDENTITIES = {
    "add associative": lambda a, b, c: add(add(a, b), c) == add(a, add(b, c)),
    "mul associative": lambda a, b, c: mul(mul(a, b), c) == mul(a, mul(b, c)),
    "left distributive": lambda a, b, c: mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
    "deg of sum": lambda a, b, c: not (a and b) or degree(add(a, b)) == max(degree(a), degree(b)),
    "deg of product": lambda a, b, c: not (a and b)
    or degree(mul(a, b)) == add(degree(a), degree(b)),
    "absorption": lambda a, b, c: not (a and b and len(b.terms) == 1
                                      and cmp(degree(a), degree(b)) < 0) or add(a, b) == b,
}


def sweep(cfg: SweepConfig):
    rng = random.Random(cfg.seed)
    failures = dict.fromkeys(IDENTITIES, 0)
    for _ in range(cfg.samples):
        a, b, c = (random_ordinal(rng, cfg, cfg.depth) for _ in range(3))
        for name, check in IDENTITIES.items():
            failures[name] += not check(a, b, c)
    return failures


def main():
    p = argparse.ArgumentParser(description=__doc__)
    d = SweepConfig()
    for field in ("samples", "depth", "max_coeff", "max_terms", "seed"):
        p.add_argument("--" + field.replace("_", "-"), type=int, default=getattr(d, field))
    cfg = SweepConfig(**vars(p.parse_args()))
    t = time.perf_counter()
    failures = sweep(cfg)
    for name, n in failures.items():
        print(f"{name:18} failures={n}")
    print(f"{cfg.samples} triples in {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()

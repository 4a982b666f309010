"""Exact anti-Ramsey numbers of small patterns, next to the closed forms where one applies.

The closed forms are only claimed for large n, so disagreements at small n
are reported rather than treated as errors.
"""
import argparse
import time
from dataclasses import dataclass

from antiramsey.formulas import ar_turan_clique
from antiramsey.graph import complete, cycle, matching, path, star
from antiramsey.oracle import ar_exact

PATTERNS = {
    "K3": (complete(3), lambda n: n - 1),
    "K4": (complete(4), lambda n: ar_turan_clique(n, 2)),
    "P4": (path(4), None),
    "C4": (cycle(4), None),
    "S4": (star(4), None),
    "M4": (matching(4), None),
}


@dataclass
class Config:
    max_n: int = 6
    budget: int = 5_000_000


def main(cfg: Config):
    print(f"{'pattern':<8}{'n':>3}{'AR':>6}{'bounds':>10}{'formula':>9}{'nodes':>10}{'secs':>7}")
    for name, (g, formula) in PATTERNS.items():
        for n in range(g.n, cfg.max_n + 1):
            t = time.perf_counter()
            res = ar_exact(n, [g], cfg.budget)
            f = formula(n) if formula else "-"
            val = res.value if res.value is not None else "?"
            print(f"{name:<8}{n:>3}{val:>6}{f'{res.lower}..{res.upper}':>10}{f:>9}{res.nodes:>10}"
                  f"{time.perf_counter() - t:>7.2f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--budget", type=int, default=5_000_000)
    a = ap.parse_args()
    main(Config(a.max_n, a.budget))

"""Largest number of extra colours for a few families, at the default order and p more."""
import argparse
from dataclasses import dataclass

from antiramsey.constructions import max_extra_colors
from antiramsey.graph import add_edges, complete, copies, parts_of, petersen, turan, turan_part_sizes


def turan_with_matching(n: int, p: int, edges: int):
    part = parts_of(turan_part_sizes(n, p))[0]
    return add_edges(turan(n, p), [(part[2 * i], part[2 * i + 1]) for i in range(edges)])


@dataclass
class Config:
    n: int | None = None


CASES = [
    ("Petersen", 2, 3, lambda: [petersen()]),
    ("2K3", 2, 2, lambda: [copies(2, complete(3))]),
    ("T(8,2) + M4 in a class", 2, 2, lambda: [turan_with_matching(8, 2, 2)]),
    ("T(12,3) + M4 in a class", 3, 2, lambda: [turan_with_matching(12, 3, 2)]),
]


def main(cfg: Config):
    for name, p, k, family in CASES:
        res = max_extra_colors(p, k, family(), cfg.n)
        print(f"{name:<26} p={p} k={k}  q={res.q} at n={res.n}  q={res.q_next} at n={res.n_next}"
              f"  stable={res.stable}  partitions={res.partitions_checked}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=None)
    main(Config(ap.parse_args().n))

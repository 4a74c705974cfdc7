"""Seeded lemma suites across the desk-scale towers, one line per suite and tower."""

import argparse
from dataclasses import dataclass

from qsteiner import designcheck as dc
from qsteiner.gf import build_tower
from qsteiner.steiner import ConstructionParams


@dataclass
class SuiteConfig:
    towers: tuple = ((2, 1, 1, 6), (2, 1, 2, 24), (3, 1, 1, 12), (2, 2, 1, 6))  # (p, e, t, M)
    trials: int = 100
    seed: int = 0


SUITES = {
    "scalar": dc.verify_scalar_lemma,
    "intersection": dc.verify_intersection_lemma,
    "moore": dc.verify_moore_invariance,
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = SuiteConfig(trials=args.trials, seed=args.seed)
    for p, e, t, M in cfg.towers:
        P = ConstructionParams(build_tower(p, e, M), t)
        for name, fn in SUITES.items():
            rep = fn(P, cfg.trials, cfg.seed)
            print(f"q={p**e:<2} t={t} M={M:<3} {name:<13} {rep.status} "
                  f"checked={rep.checked} failures={len(rep.failures)} {rep.elapsed:.2f}s")


if __name__ == "__main__":
    main()

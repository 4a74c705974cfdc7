"""Exhaustive Steiner-property sweep over small (q, t, m), printed as a table."""

import argparse
import time
from dataclasses import dataclass

from qsteiner.designcheck import gaussian_binomial, verify_steiner
from qsteiner.gf import build_tower
from qsteiner.steiner import ConstructionParams, recommended_ambient


@dataclass
class SweepConfig:
    cases: tuple = ((2, 1, 2), (2, 1, 3), (2, 1, 4), (3, 1, 2), (3, 1, 3), (2, 2, 3))
    trials: int = 100
    seed: int = 0
    jobs: int = 1


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for q, t, m in cfg.cases:
        M = recommended_ambient(q, t, m)
        P = ConstructionParams(build_tower(q, 1, M), t)
        start = time.perf_counter()
        rep = verify_steiner(P, P.tower.one, m, trials=cfg.trials, seed=cfg.seed, jobs=cfg.jobs)
        rows.append({"q": q, "t": t, "m": m, "M": M, "t-spaces": gaussian_binomial(m, t, q),
                     "covered": rep.checked, "status": rep.status,
                     "seconds": round(time.perf_counter() - start, 2)})
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rows = run(SweepConfig(seed=args.seed, jobs=args.jobs))
    keys = list(rows[0])
    print(" ".join(f"{k:>9}" for k in keys))
    for r in rows:
        print(" ".join(f"{r[k]!s:>9}" for k in keys))


if __name__ == "__main__":
    main()

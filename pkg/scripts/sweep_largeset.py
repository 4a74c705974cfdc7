"""Classify every (t+1)-space of F_{q^m} and tabulate the class sizes."""

import argparse
from collections import Counter
from dataclasses import dataclass

from qsteiner.designcheck import enumerate_subspaces, gaussian_binomial, verify_largeset
from qsteiner.gf import build_tower
from qsteiner.steiner import ConstructionParams, classify, recommended_ambient


@dataclass
class LargeSetConfig:
    q: int = 2
    t: int = 1
    m: int = 3
    jobs: int = 1


def run(cfg: LargeSetConfig):
    M = recommended_ambient(cfg.q, cfg.t, cfg.m)
    P = ConstructionParams(build_tower(cfg.q, 1, M), cfg.t)
    sizes = Counter(classify(P, W).label
                    for W in enumerate_subspaces(P.tower, cfg.m, cfg.t + 1))
    return M, sizes, verify_largeset(P, cfg.m, jobs=cfg.jobs)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=2)
    ap.add_argument("--t", type=int, default=1)
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    cfg = LargeSetConfig(**vars(ap.parse_args()))
    M, sizes, rep = run(cfg)
    total = gaussian_binomial(cfg.m, cfg.t + 1, cfg.q)
    print(f"q={cfg.q} t={cfg.t} m={cfg.m} ambient M={M}: {total} spaces in {len(sizes)} classes")
    for size, n in sorted(Counter(sizes.values()).items()):
        print(f"  {n} classes with {size} block(s)")
    print(f"verify largeset: {rep.status} ({rep.checked} checked, {len(rep.failures)} failures)")


if __name__ == "__main__":
    main()

"""Wall time of the exact mad solver as n grows, with the fitted exponent."""

from __future__ import annotations

import argparse
import json
import random
import statistics
import time
from dataclasses import asdict, dataclass

import numpy as np

from antidim.corpus import random_connected
from antidim.graph import all_pairs_distances
from antidim.solvers import solve_mad


@dataclass(frozen=True)
class Config:
    sizes: tuple[int, ...] = (25, 50, 75, 100, 150)
    instances: int = 5
    k: int = 2
    threads: int = 1
    seed: int = 0


def run(cfg: Config) -> dict:
    rows = []
    for n in cfg.sizes:
        times = []
        for i in range(cfg.instances):
            d = all_pairs_distances(random_connected(n, random.Random(cfg.seed * 10**6 + n * 100 + i)))
            start = time.perf_counter()
            solve_mad(d, cfg.k, threads=cfg.threads)
            times.append(time.perf_counter() - start)
        rows.append({"n": n, "median_s": statistics.median(times), "max_s": max(times)})
    slope = np.polyfit(np.log(cfg.sizes), np.log([r["median_s"] for r in rows]), 1)[0]
    return {"config": asdict(cfg), "rows": rows, "fitted_exponent": round(float(slope), 2)}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=list(Config.sizes))
    ap.add_argument("--instances", type=int, default=Config.instances)
    ap.add_argument("--k", type=int, default=Config.k)
    ap.add_argument("--threads", type=int, default=Config.threads)
    args = ap.parse_args()
    cfg = Config(tuple(args.sizes), args.instances, args.k, args.threads)
    print(json.dumps(run(cfg), indent=2))


if __name__ == "__main__":
    main()

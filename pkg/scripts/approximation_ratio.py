"""Greedy set-cover heuristic for eqmad with k = 1 against the exhaustive
optimum, on the atlas plus random graphs."""

from __future__ import annotations

import argparse
import json
import math
from collections import Counter
from dataclasses import asdict, dataclass

from antidim.corpus import connected_atlas, random_corpus
from antidim.eqmad import solve_eqmad1, solve_eqmad1_greedy
from antidim.graph import all_pairs_distances
from antidim.oracle import brute_force


@dataclass(frozen=True)
class Config:
    atlas_max_n: int = 6
    random_graphs: int = 300
    n_min: int = 7
    n_max: int = 11
    seed: int = 1


def run(cfg: Config) -> dict:
    graphs = connected_atlas(cfg.atlas_max_n) + random_corpus(
        cfg.random_graphs, (cfg.n_min, cfg.n_max), seed=cfg.seed
    )
    ratios, methods, gap = [], Counter(), 0
    for g in graphs:
        d = all_pairs_distances(g)
        opt = brute_force(d, "eqmad", 1).ell
        greedy = solve_eqmad1_greedy(d).ell
        best = solve_eqmad1(g, d)
        ratios.append(greedy / opt)
        methods[best.method] += 1
        gap += best.ell > opt
        assert greedy <= (1 + math.log(d.n - 1)) * opt
    return {
        "config": asdict(cfg),
        "graphs": len(graphs),
        "worst_greedy_ratio": max(ratios),
        "greedy_not_optimal": sum(r > 1 for r in ratios),
        "dispatcher_not_optimal": gap,
        "dispatcher_methods": dict(methods),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--random-graphs", type=int, default=Config.random_graphs)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(random_graphs=args.random_graphs, n_max=args.n_max, seed=args.seed)
    print(json.dumps(run(cfg), indent=2))


if __name__ == "__main__":
    main()

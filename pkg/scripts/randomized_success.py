"""Success rate of the randomized mad solver against the exact one, split by
whether the optimal attacker set has at least k nodes."""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from antidim.corpus import connected_atlas, random_corpus
from antidim.graph import all_pairs_distances
from antidim.solvers import solve_adim_max, solve_mad, solve_mad_randomized


@dataclass(frozen=True)
class Config:
    graphs: int = 50
    seeds: int = 100
    corpus_seed: int = 2024


def run(cfg: Config) -> dict:
    corpus = connected_atlas(6) + random_corpus(200, (7, 8), seed=cfg.corpus_seed)
    picks = sorted({round(i * (len(corpus) - 1) / (cfg.graphs - 1)) for i in range(cfg.graphs)})
    tally = {"opt_ge_k": [0, 0], "opt_lt_k": [0, 0]}
    worst = []
    for idx in picks:
        d = all_pairs_distances(corpus[idx])
        for k in range(1, solve_adim_max(d).k_achieved + 1):
            opt = solve_mad(d, k).ell
            hits = sum(solve_mad_randomized(d, k, s).ell == opt for s in range(cfg.seeds))
            bucket = tally["opt_ge_k" if opt >= k else "opt_lt_k"]
            bucket[0] += hits
            bucket[1] += cfg.seeds
            worst.append((hits, idx, k, opt))
    worst.sort()
    return {
        "config": asdict(cfg),
        "rates": {key: hits / total for key, (hits, total) in tally.items() if total},
        "pooled": sum(h for h, _ in tally.values()) / sum(t for _, t in tally.values()),
        "worst_pairs": [dict(zip(("hits", "graph", "k", "opt_ell"), w)) for w in worst[:10]],
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--graphs", type=int, default=Config.graphs)
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    args = ap.parse_args()
    print(json.dumps(run(Config(args.graphs, args.seeds)), indent=2))


if __name__ == "__main__":
    main()

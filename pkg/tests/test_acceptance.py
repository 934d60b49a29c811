"""Acceptance criteria 1-7, one test each, at the stated tolerances.

Every test prints a single ``PASS``/``FAIL`` line (also collected into the
terminal summary) before asserting.
"""

import math
import random
import statistics
import time
from functools import lru_cache

import pytest

from antidim.corpus import random_connected
from antidim.eqmad import eqmad1_c4free, eqmad1_degree_one, solve_eqmad1, solve_eqmad1_greedy
from antidim.graph import all_pairs_distances, has_four_cycle
from antidim.hardness import build_hard_instance, cover_to_witness, planted_x3c
from antidim.oracle import OracleTable
from antidim.partition import build_partition, refine_with_nodes
from antidim.solvers import INFEASIBLE, solve_adim_max, solve_mad, solve_mad_randomized

from conftest import ACCEPTANCE_LINES


def report(number, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


@lru_cache(maxsize=None)
def _oracle(g):
    return OracleTable(all_pairs_distances(g))


def test_criterion_1_exact_solvers_match_oracle(corpus):
    start = time.perf_counter()
    failures, checks = [], 0
    for i, g in enumerate(corpus):
        d = all_pairs_distances(g)
        table = _oracle(g)
        if solve_adim_max(d).k_achieved != table.max_mu:
            failures.append((i, "adim"))
        for k in range(1, d.n):
            checks += 1
            if solve_mad(d, k).ell != table.ell("mad-geq", k):
                failures.append((i, k))
    elapsed = time.perf_counter() - start
    report(
        1,
        not failures and elapsed < 120,
        f"{len(corpus)} graphs, {checks} (graph, k) pairs, {len(failures)} mismatches, {elapsed:.1f} s",
    )


def test_criterion_2_greedy_log_ratio(corpus):
    failures, worst, worst_at = [], 0.0, None
    for i, g in enumerate(corpus):
        d = all_pairs_distances(g)
        opt = _oracle(g).ell("eqmad", 1)
        sol = solve_eqmad1_greedy(d)
        ratio = sol.ell / opt
        if ratio > worst:
            worst, worst_at = ratio, i
        if build_partition(d, sol.witness).mu != 1 or sol.ell > (1 + math.log(d.n - 1)) * opt:
            failures.append(i)
    report(
        2,
        not failures,
        f"{len(corpus)} graphs, {len(failures)} bound violations, worst ratio {worst:.3f} (graph {worst_at})",
    )


def test_criterion_3_shortcuts(corpus):
    failures, leafy, c4free = [], 0, 0
    for i, g in enumerate(corpus):
        d = all_pairs_distances(g)
        checks = []
        if any(len(a) == 1 for a in g.adjacency):
            leafy += 1
            checks += [(eqmad1_degree_one(g, d), 1), (solve_eqmad1(g, d), 1)]
        if not has_four_cycle(g) and d.diameter >= 2:
            c4free += 1
            checks += [(eqmad1_c4free(g, d), 2), (solve_eqmad1(g, d), 2)]
        for sol, bound in checks:
            if sol is None or sol.ell > bound or build_partition(d, sol.witness).mu != 1:
                failures.append(i)
    report(
        3,
        not failures,
        f"{leafy} graphs with a degree-1 node, {c4free} C4-free with diameter >= 2, {len(failures)} failures",
    )


SEEDS = range(100)


@pytest.fixture(scope="module")
def randomized_runs(corpus):
    """Per (graph, k): (optimal ell, hits, valid runs), over 50 evenly spaced corpus graphs."""
    picks = sorted({round(i * (len(corpus) - 1) / 49) for i in range(50)})
    rows = []
    for idx in picks:
        g = corpus[idx]
        d = all_pairs_distances(g)
        table = _oracle(g)
        for k in range(1, table.max_mu + 1):
            opt = solve_mad(d, k).ell
            hits = valid = 0
            for seed in SEEDS:
                sol = solve_mad_randomized(d, k, seed)
                hits += sol.ell == opt
                if sol.ell == INFEASIBLE:
                    valid += 1
                else:
                    valid += build_partition(d, sol.witness).mu >= k and sol.ell >= opt
            rows.append((idx, k, opt, hits, valid))
    return picks, rows


def test_criterion_4_randomized_success_rate(randomized_runs):
    picks, rows = randomized_runs
    runs = len(rows) * len(SEEDS)
    pooled = sum(r[3] for r in rows) / runs
    valid = sum(r[4] for r in rows) / runs
    below = [(i, k) for i, k, _, hits, _ in rows if hits < 0.95 * len(SEEDS)]
    worst = min(rows, key=lambda r: r[3])
    report(
        4,
        not below and valid == 1.0,
        f"{len(picks)} graphs, {len(rows)} feasible (graph, k) pairs, {runs} runs: "
        f"optimal in {pooled:.1%} pooled, {len(below)} pairs below 95% "
        f"(worst graph {worst[0]} k={worst[1]}: {worst[3]}/100), valid in {valid:.1%}",
    )


def test_randomized_rate_when_optimum_reaches_k(randomized_runs):
    # The per-guess hit probability k/n only holds when the optimal attacker
    # set has at least k nodes; below that the failures above concentrate.
    _, rows = randomized_runs
    big = [r for r in rows if r[2] >= r[1]]
    assert big
    assert all(r[3] >= 0.95 * len(SEEDS) for r in big)
    assert all(r[4] == len(SEEDS) for r in rows)


def _triple(rng):
    g = random_connected(rng.randint(3, 32), rng, p=rng.uniform(0.0, 0.4))
    order = list(range(g.n))
    rng.shuffle(order)
    i = rng.randint(1, g.n - 2)
    j = rng.randint(i + 1, g.n - 1)
    return g, all_pairs_distances(g), sorted(order[:i]), sorted(order[:j])


def _cut_instance(rng):
    """(d, p1, V2) with V2 strictly cutting a smallest class of the V1 partition."""
    while True:
        g = random_connected(rng.randint(3, 32), rng, p=rng.uniform(0.0, 0.6))
        d = all_pairs_distances(g)
        v1 = rng.sample(range(g.n), rng.randint(1, g.n - 2))
        p1 = build_partition(d, v1)
        small = [c for c in p1.smallest_classes() if len(c) >= 2]
        if not small:
            continue
        target = rng.choice(small)
        cut = rng.sample(target, rng.randint(1, len(target) - 1))
        rest = [v for v in range(g.n) if v not in p1.anchor_set and v not in target]
        extra = rng.sample(rest, rng.randint(0, len(rest)))
        return d, p1, set(v1) | set(cut) | set(extra)


def test_criterion_5_structural_propositions():
    rng = random.Random(555)
    bad = {"prop1": 0, "cor1": 0, "prop2": 0, "refine": 0}
    for _ in range(1000):
        g, d, v1, v2 = _triple(rng)
        p1, p2 = build_partition(d, v1), build_partition(d, v2)
        outside = [v for v in range(g.n) if v not in p2.anchor_set]
        if any(
            p1.class_of[a] != p1.class_of[b] and p2.class_of[a] == p2.class_of[b]
            for a in outside
            for b in outside
        ):
            bad["prop1"] += 1
    for _ in range(1000):
        g, d, v1, v2 = _triple(rng)
        p1, p2 = build_partition(d, v1), build_partition(d, v2)
        if any(len({p1.class_of[v] for v in c}) != 1 for c in p2.classes):
            bad["cor1"] += 1
    for _ in range(1000):
        d, p1, v2 = _cut_instance(rng)
        if build_partition(d, v2).mu >= p1.mu:
            bad["prop2"] += 1
    for _ in range(1000):
        g, d, v1, v2 = _triple(rng)
        new = sorted(set(v2) - set(v1))
        if refine_with_nodes(build_partition(d, v1), d, new) != build_partition(d, v2):
            bad["refine"] += 1
    report(
        5,
        not any(bad.values()),
        "1000 triples each, counterexamples " + ", ".join(f"{k}={v}" for k, v in bad.items()),
    )


def test_criterion_6_hardness_generator():
    rng = random.Random(66)
    start = time.perf_counter()
    failures, built = [], 0
    for i in range(10):
        system, cover = planted_x3c(2 + i % 3, rng)
        for k in (1, 2, 3):
            inst = build_hard_instance(system, k)
            g, n1 = inst.graph, inst.n1
            d = all_pairs_distances(g)
            built += 1
            ok = (
                g.n == n1 * (2 * k + 2 * n1 // 3) + k
                and d.diameter == 2
                and all(len(g.adjacency[u]) == g.n - 1 for u in inst.clique_nodes())
                and build_partition(d, cover_to_witness(inst, cover)).mu == k
            )
            if not ok:
                failures.append((i, k))
    elapsed = time.perf_counter() - start
    report(
        6,
        not failures and elapsed < 60,
        f"{built} instances, {len(failures)} failures, {elapsed:.1f} s",
    )


def _time_mad(n, seed, k=2):
    d = all_pairs_distances(random_connected(n, random.Random(seed)))
    start = time.perf_counter()
    solve_mad(d, k)
    return time.perf_counter() - start


@pytest.mark.slow
def test_criterion_7_performance():
    t150 = _time_mad(150, 7150)
    t50 = statistics.median(_time_mad(50, 5000 + s) for s in range(5))
    t100 = statistics.median(_time_mad(100, 10000 + s) for s in range(5))
    ratio = t100 / t50
    report(
        7,
        t150 < 60 and ratio <= 24,
        f"n=150 in {t150:.2f} s, median n=50 {t50 * 1000:.0f} ms, n=100 {t100 * 1000:.0f} ms, ratio {ratio:.1f}",
    )

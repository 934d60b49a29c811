"""Exact and randomized solvers for the max-k and min-attacker (mu >= k) problems.

Both solvers guess one node of an optimal attacker set and grow ``V'`` from it
by repeatedly absorbing every minimum-size class of the current partition.
The deterministic versions try every node; the randomized versions draw
``ceil(2 n ln n / k)`` guesses uniformly at random.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .graph import DistanceMatrix
from .partition import EquivalencePartition, build_partition, refine_with_nodes

INFEASIBLE = math.inf

ADIM_MAX = "adim-max"
MAD_GEQ = "mad-geq"
EQMAD = "eqmad"
PROBLEMS = (ADIM_MAX, MAD_GEQ, EQMAD)


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class Solution:
    problem: str
    k_requested: int | None
    k_achieved: int | None
    ell: int | float
    witness: tuple[int, ...]
    method: str

    @property
    def feasible(self) -> bool:
        return self.ell != INFEASIBLE

    @classmethod
    def infeasible(cls, problem: str, k: int | None, method: str) -> Solution:
        return cls(problem, k, None, INFEASIBLE, (), method)

    @classmethod
    def from_witness(
        cls, problem: str, k: int | None, witness, mu: int, method: str
    ) -> Solution:
        witness = tuple(sorted(int(v) for v in witness))
        return cls(problem, k, int(mu), len(witness), witness, method)


def check_k(d: DistanceMatrix, k: int) -> None:
    """Reject non-positive k. k >= n is allowed: no V' leaves k nodes, so it is infeasible."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")


def _min_class_members(p: EquivalencePartition) -> np.ndarray:
    labels = p.labels
    mask = labels >= 0
    small = np.zeros(labels.shape, dtype=bool)
    small[mask] = p.sizes[labels[mask]] == p.mu
    return np.flatnonzero(small)


def growth_chain(d: DistanceMatrix, seed_node: int) -> Iterator[EquivalencePartition]:
    """Partitions for V' = {seed}, then V' plus all minimum classes, and so on.

    Stops before V' would become all of V; yields at most n partitions.
    """
    p = build_partition(d, [seed_node])
    while True:
        yield p
        grow = _min_class_members(p)
        if len(p.anchors) + grow.size >= d.n:
            return
        p = refine_with_nodes(p, d, grow.tolist())


def _guess_mad(d: DistanceMatrix, seed_node: int, k: int, incumbent: float):
    # Stop at the first V' with mu >= k that beats the incumbent; V' with
    # mu >= k that does not beat it keeps growing, as in the original loop.
    for p in growth_chain(d, seed_node):
        if p.mu >= k and len(p.anchors) < incumbent:
            return p
    return None


def _guess_adim(d: DistanceMatrix, seed_node: int, incumbent: int):
    best = None
    for p in growth_chain(d, seed_node):
        if p.mu > incumbent:
            incumbent, best = p.mu, p
    return best


def _map(fn, items, threads: int):
    if threads <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _mad_over_guesses(d: DistanceMatrix, k: int, guesses, threads: int):
    if threads <= 1:
        best = None
        for g in guesses:
            p = _guess_mad(d, g, k, len(best.anchors) if best else INFEASIBLE)
            if p is not None:
                best = p
        return best
    # Independent guesses return the first feasible set of their chain; the
    # sequential loop reduces to min by (size, position in guess order).
    found = _map(lambda g: _guess_mad(d, g, k, INFEASIBLE), guesses, threads)
    cands = [(len(p.anchors), i, p) for i, p in enumerate(found) if p is not None]
    return min(cands, key=lambda t: t[:2])[2] if cands else None


def _adim_over_guesses(d: DistanceMatrix, guesses, threads: int):
    if threads <= 1:
        best = None
        for g in guesses:
            p = _guess_adim(d, g, best.mu if best else 0)
            if p is not None:
                best = p
        return best
    found = _map(lambda g: _guess_adim(d, g, 0), guesses, threads)
    cands = [(-p.mu, i, p) for i, p in enumerate(found) if p is not None]
    return min(cands, key=lambda t: t[:2])[2]


def solve_mad(d: DistanceMatrix, k: int, threads: int = 1) -> Solution:
    """Minimum attacker set with measure at least ``k``; exact, O(n^4)."""
    check_k(d, k)
    best = _mad_over_guesses(d, k, range(d.n), threads) if k < d.n else None
    if best is None:
        return Solution.infeasible(MAD_GEQ, k, "algorithm-I")
    return Solution.from_witness(MAD_GEQ, k, best.anchors, best.mu, "algorithm-I")


def solve_adim_max(d: DistanceMatrix, threads: int = 1) -> Solution:
    """Attacker set maximising the measure over all proper nonempty subsets."""
    if d.n < 2:
        raise ParameterError("need at least 2 nodes")
    best = _adim_over_guesses(d, range(d.n), threads)
    return Solution.from_witness(ADIM_MAX, None, best.anchors, best.mu, "algorithm-II")


def randomized_iterations(n: int, k: int) -> int:
    return math.ceil(2 * n * math.log(n) / k)


def random_guesses(n: int, k: int, seed: int) -> list[int]:
    """Guessed seed nodes, a pure function of (seed, n, k) via numpy's PCG64."""
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.integers(0, n, size=randomized_iterations(n, k)).tolist()


def _distinct(guesses):
    # A guess's outcome depends only on the node; repeats cannot improve on
    # the incumbent set by the first occurrence.
    return list(dict.fromkeys(guesses))


def solve_mad_randomized(d: DistanceMatrix, k: int, seed: int, threads: int = 1) -> Solution:
    check_k(d, k)
    guesses = _distinct(random_guesses(d.n, k, seed))
    best = _mad_over_guesses(d, k, guesses, threads) if k < d.n else None
    if best is None:
        return Solution.infeasible(MAD_GEQ, k, "algorithm-III")
    return Solution.from_witness(MAD_GEQ, k, best.anchors, best.mu, "algorithm-III")


def solve_adim_max_randomized(d: DistanceMatrix, seed: int, threads: int = 1) -> Solution:
    if d.n < 2:
        raise ParameterError("need at least 2 nodes")
    guesses = _distinct(random_guesses(d.n, 1, seed))
    best = _adim_over_guesses(d, guesses, threads)
    return Solution.from_witness(ADIM_MAX, None, best.anchors, best.mu, "algorithm-IV")

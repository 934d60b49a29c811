"""Exhaustive ground truth for all three problems on small graphs."""

from __future__ import annotations

from itertools import combinations

from .graph import DistanceMatrix
from .partition import build_partition
from .solvers import ADIM_MAX, MAD_GEQ, PROBLEMS, ParameterError, Solution, check_k

N_MAX = 12


class OracleSizeError(ValueError):
    pass


def proper_subsets(n: int):
    """Every nonempty proper subset of range(n), by size then lexicographic."""
    for size in range(1, n):
        yield from combinations(range(n), size)


def all_measures(d: DistanceMatrix) -> list[tuple[tuple[int, ...], int]]:
    return [(s, build_partition(d, s).mu) for s in proper_subsets(d.n)]


def brute_force(
    d: DistanceMatrix, problem: str, k: int | None = None, n_max: int = N_MAX
) -> Solution:
    if problem not in PROBLEMS:
        raise ParameterError(f"unknown problem {problem!r}")
    if d.n > n_max:
        raise OracleSizeError(f"oracle limited to n <= {n_max}, graph has n = {d.n}")
    if d.n < 2:
        raise ParameterError("need at least 2 nodes")
    if problem == ADIM_MAX:
        best = None
        for s in proper_subsets(d.n):
            mu = build_partition(d, s).mu
            if best is None or mu > best[1]:
                best = (s, mu)
        return Solution.from_witness(ADIM_MAX, None, best[0], best[1], "brute-force")

    if k is None:
        raise ParameterError(f"problem {problem} requires k")
    check_k(d, k)
    accept = (lambda mu: mu >= k) if problem == MAD_GEQ else (lambda mu: mu == k)
    for s in proper_subsets(d.n):
        mu = build_partition(d, s).mu
        if accept(mu):
            return Solution.from_witness(problem, k, s, mu, "brute-force")
    return Solution.infeasible(problem, k, "brute-force")


class OracleTable:
    """All subset measures of one graph, computed once and queried per k."""

    def __init__(self, d: DistanceMatrix, n_max: int = N_MAX):
        if d.n > n_max:
            raise OracleSizeError(f"oracle limited to n <= {n_max}, graph has n = {d.n}")
        self.n = d.n
        self.entries = all_measures(d)

    @property
    def max_mu(self) -> int:
        return max(mu for _, mu in self.entries)

    def ell(self, problem: str, k: int) -> int | float:
        accept = (lambda mu: mu >= k) if problem == MAD_GEQ else (lambda mu: mu == k)
        for s, mu in self.entries:
            if accept(mu):
                return len(s)
        return float("inf")


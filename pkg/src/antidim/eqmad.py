"""Solvers for the exact-measure problem (mu(V') == k).

General k is NP-hard, so only special cases are covered here:

* k = 1: a greedy set-cover approximation within 1 + ln(n - 1), plus exact
  shortcuts for graphs with a degree-1 node and for graphs without a 4-cycle;
* k = n - c for small constant c: exhaustive search over subsets of size <= c.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import DistanceMatrix, Graph, degree_one_node, has_four_cycle
from .partition import build_partition
from .solvers import EQMAD, ParameterError, Solution, check_k

C_MAX = 3


class UncoverableError(ValueError):
    """The sets of a cover instance do not cover its universe."""


@dataclass(frozen=True)
class CoverInstance:
    """Set-cover instance for one guessed singleton class ``{guess}``.

    Element ``a_j`` and set ``S_j`` exist for every node ``j != guess``
    (``nodes[t]`` names the t-th of each). ``S_j`` holds ``a_j`` and every
    ``a_l`` whose distance to ``j`` differs from the guess's distance to ``j``.
    """

    guess: int
    nodes: tuple[int, ...]
    matrix: np.ndarray  # matrix[t, u]: element nodes[u] in set nodes[t]

    @property
    def universe(self) -> tuple[int, ...]:
        return self.nodes

    @property
    def sets(self) -> list[frozenset[int]]:
        return [
            frozenset(self.nodes[u] for u in np.flatnonzero(row)) for row in self.matrix
        ]


def cover_instance(d: DistanceMatrix, guess: int) -> CoverInstance:
    dist = d.dist
    separates = dist != dist[:, [guess]]  # [j, l]: d(l, j) != d(guess, j)
    np.fill_diagonal(separates, True)
    keep = np.array([v for v in range(d.n) if v != guess], dtype=np.intp)
    return CoverInstance(guess, tuple(keep.tolist()), separates[np.ix_(keep, keep)])


def greedy_cover_matrix(matrix: np.ndarray) -> list[int]:
    """Greedy cover on a boolean (sets x elements) incidence matrix.

    Picks the set covering most uncovered elements, ties to the lowest index.
    """
    matrix = np.asarray(matrix, dtype=bool)
    uncovered = np.ones(matrix.shape[1], dtype=bool)
    if not matrix.any(axis=0).all():
        raise UncoverableError("union of sets does not cover the universe")
    counts = matrix.astype(np.int32)
    chosen = []
    while uncovered.any():
        gains = counts @ uncovered
        best = int(np.argmax(gains))
        chosen.append(best)
        uncovered &= ~matrix[best]
    return chosen


def greedy_set_cover(universe: Sequence, sets: Sequence[set]) -> list[int]:
    """Indices of a greedy cover of ``universe`` by ``sets``."""
    elements = list(universe)
    pos = {e: i for i, e in enumerate(elements)}
    matrix = np.zeros((len(sets), len(elements)), dtype=bool)
    for t, s in enumerate(sets):
        for e in s:
            if e in pos:
                matrix[t, pos[e]] = True
    return greedy_cover_matrix(matrix)


def _validated(d: DistanceMatrix, witness, k: int, method: str) -> Solution:
    mu = build_partition(d, witness).mu
    if mu != k:
        raise AssertionError(f"{method} produced mu={mu}, expected {k}")
    return Solution.from_witness(EQMAD, k, witness, mu, method)


def solve_eqmad1_greedy(d: DistanceMatrix) -> Solution:
    """(1 + ln(n-1))-approximate minimum attacker set with measure exactly 1."""
    if d.n < 2:
        raise ParameterError("need at least 2 nodes")
    best = None
    for guess in range(d.n):
        inst = cover_instance(d, guess)
        try:
            picked = greedy_cover_matrix(inst.matrix)
        except UncoverableError:
            continue
        if best is None or len(picked) < len(best):
            best = [inst.nodes[t] for t in picked]
    return _validated(d, best, 1, "algorithm-V")


def eqmad1_degree_one(g: Graph, d: DistanceMatrix) -> Solution | None:
    v = degree_one_node(g)
    if v is None:
        return None
    return _validated(d, [v], 1, "degree-one")


def eqmad1_c4free(g: Graph, d: DistanceMatrix) -> Solution | None:
    """Pair of nodes at distance 2 whose common neighbour becomes a singleton class."""
    if has_four_cycle(g) or d.diameter < 2:
        return None
    i, j = map(int, np.argwhere(np.triu(d.dist == 2))[0])
    return _validated(d, [i, j], 1, "c4-free")


def singleton_anchor(d: DistanceMatrix) -> Solution | None:
    """Lowest-index single node whose partition has a singleton class, if any."""
    for v in range(d.n):
        if build_partition(d, [v]).mu == 1:
            return _validated(d, [v], 1, "singleton-scan")
    return None


def solve_eqmad1(g: Graph, d: DistanceMatrix) -> Solution:
    if d.n < 2:
        raise ParameterError("need at least 2 nodes")
    sol = eqmad1_degree_one(g, d) or singleton_anchor(d)
    if sol is not None:
        return sol
    # No single anchor works, so a pair is optimal whenever one exists.
    sol = eqmad1_c4free(g, d)
    if sol is not None:
        return sol
    return solve_eqmad1_greedy(d)


def solve_eqmad_large_k(d: DistanceMatrix, k: int, c_max: int = C_MAX) -> Solution:
    """Exact answer for k = n - c, 1 <= c <= c_max, by enumerating |V'| <= c.

    Fewer than k nodes remain once |V'| > c, so no larger set can qualify.
    """
    check_k(d, k)
    c = d.n - k
    if not 1 <= c <= c_max:
        raise ParameterError(f"n - k = {c} outside exhaustive range 1..{c_max}")
    for size in range(1, c + 1):
        for s in combinations(range(d.n), size):
            mu = build_partition(d, s).mu
            if mu == k:
                return Solution.from_witness(EQMAD, k, s, mu, "exhaustive")
    return Solution.infeasible(EQMAD, k, "exhaustive")

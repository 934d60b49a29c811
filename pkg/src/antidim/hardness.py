"""Diameter-2 hard instances built from exact-cover-by-3-sets systems.

Every element node and set node of the set system is cloned
``2k + 2*n1/3`` times (``n1`` = elements + sets). On top of the clones:

* ``k`` clique nodes ``u<i>``, adjacent to every other node;
* all element clones form one clique;
* set clones are pairwise non-adjacent;
* a set clone of ``S_j`` touches an element clone of ``a_i`` iff ``a_i`` is
  *not* in ``S_j``.

A cover ``C`` maps to the attacker set made of the first clone of each chosen
set; its partition then has the clique nodes as the unique class of size k.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import comb
from typing import TextIO

from .graph import Graph


class SetSystemError(ValueError):
    pass


@dataclass(frozen=True)
class SetSystem:
    universe_size: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        for j, s in enumerate(self.sets):
            if not s:
                raise SetSystemError(f"set {j} is empty")
            bad = [e for e in s if not 0 <= e < self.universe_size]
            if bad:
                raise SetSystemError(f"set {j} has elements outside 0..{self.universe_size - 1}: {bad}")

    def occurrences(self) -> list[int]:
        occ = [0] * self.universe_size
        for s in self.sets:
            for e in s:
                occ[e] += 1
        return occ

    def x3c_violations(self) -> list[str]:
        problems = [f"set {j} has {len(s)} elements" for j, s in enumerate(self.sets) if len(s) != 3]
        problems += [
            f"element {e} occurs in {c} sets" for e, c in enumerate(self.occurrences()) if c != 3
        ]
        return problems

    @property
    def x3c_valid(self) -> bool:
        return not self.x3c_violations()

    def is_cover(self, chosen) -> bool:
        covered = set()
        for j in chosen:
            covered |= self.sets[j]
        return len(covered) == self.universe_size


def parse_set_system(stream: TextIO | str) -> SetSystem:
    text = stream if isinstance(stream, str) else stream.read()
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise SetSystemError("first line must be 'universe_size set_count'")
    try:
        universe_size, set_count = map(int, lines[0])
        sets = tuple(frozenset(map(int, ln)) for ln in lines[1:])
    except ValueError as exc:
        raise SetSystemError(f"non-integer token: {exc}") from None
    if len(sets) != set_count:
        raise SetSystemError(f"header announces {set_count} sets, found {len(sets)}")
    return SetSystem(universe_size, sets)


def format_set_system(sys: SetSystem) -> str:
    lines = [f"{sys.universe_size} {len(sys.sets)}"]
    lines += [" ".join(map(str, sorted(s))) for s in sys.sets]
    return "\n".join(lines) + "\n"


def planted_x3c(q: int, rng: random.Random) -> tuple[SetSystem, list[int]]:
    """Random X3C system on 3q elements whose first q sets form an exact cover.

    The 3q sets are three random partitions of the universe into triples, all
    triples distinct.
    """
    universe = list(range(3 * q))
    while True:
        triples = []
        for _ in range(3):
            rng.shuffle(universe)
            triples += [frozenset(universe[i : i + 3]) for i in range(0, 3 * q, 3)]
        if len(set(triples)) == len(triples):
            return SetSystem(3 * q, tuple(triples)), list(range(q))


@dataclass(frozen=True)
class HardInstance:
    graph: Graph
    k: int
    clone_count: int
    n1: int
    system: SetSystem
    category: dict[int, tuple] = field(repr=False)
    metadata: dict = field(default_factory=dict, repr=False)

    def clique_nodes(self) -> list[int]:
        return [v for v, c in self.category.items() if c[0] == "clique"]

    def node(self, kind: str, i: int, copy: int = 0) -> int:
        return self.graph.index[_label(kind, i, copy)]


def _label(kind: str, i: int, copy: int = 0) -> str:
    return {"clique": f"u{i}", "element": f"a{i}_{copy}", "set": f"s{i}_{copy}"}[kind]


def build_hard_instance(sys: SetSystem, k: int) -> HardInstance:
    if k < 1:
        raise SetSystemError(f"k must be positive, got {k}")
    problems = sys.x3c_violations()
    if problems:
        raise SetSystemError("not an X3C instance: " + "; ".join(problems))
    if sys.universe_size % 3:
        raise SetSystemError("universe size must be a multiple of 3")
    u = sys.universe_size
    n1 = 2 * u
    clones = 2 * k + 2 * n1 // 3

    labels, category = [], {}
    for kind, count, copies in (("clique", k, 1), ("element", u, clones), ("set", len(sys.sets), clones)):
        for i in range(count):
            for c in range(copies):
                category[len(labels)] = ("clique", i) if kind == "clique" else (kind, i, c)
                labels.append(_label(kind, i, c))
    n = len(labels)
    clique = range(k)
    elem = range(k, k + u * clones)
    set_base = k + u * clones

    edges = [(a, b) for a in clique for b in range(a + 1, n)]
    edges += [(a, b) for a in elem for b in range(a + 1, elem.stop)]
    for j, s in enumerate(sys.sets):
        set_nodes = range(set_base + j * clones, set_base + (j + 1) * clones)
        for i in range(u):
            if i in s:
                continue
            el_nodes = range(k + i * clones, k + (i + 1) * clones)
            edges += [(a, b) for a in el_nodes for b in set_nodes]

    nbrs = [[] for _ in range(n)]
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    graph = Graph(tuple(labels), tuple(tuple(sorted(x)) for x in nbrs))

    element_clones = u * clones
    non_members = sum(u - len(s) for s in sys.sets)
    metadata = {
        "universe_size": u,
        "set_count": len(sys.sets),
        "n1": n1,
        "k": k,
        "clone_count": clones,
        "n": n,
        "m": graph.m,
        "node_count_formula": n1 * clones + k,
        "edges": {
            "clique": comb(k, 2),
            "partition_fixing": k * (n - k),
            "element_clone": comb(element_clones, 2),
            "element_clone_stated": comb(clones, 2),
            "non_member": non_members * clones**2,
            "non_member_stated": 3 * n1 * clones**2 // 2,
        },
    }
    return HardInstance(graph, k, clones, n1, sys, category, metadata)


def cover_to_witness(inst: HardInstance, cover) -> list[int]:
    """Attacker set made of the first clone of every chosen set node."""
    cover = sorted(set(cover))
    bad = [j for j in cover if not 0 <= j < len(inst.system.sets)]
    if bad:
        raise SetSystemError(f"unknown set indices {bad}")
    if not inst.system.is_cover(cover):
        raise SetSystemError("chosen sets do not cover the universe")
    return sorted(inst.node("set", j, 0) for j in cover)

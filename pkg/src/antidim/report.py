"""Solver reports: JSON (de)serialisation, schema, and plain-text rendering."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .graph import DistanceMatrix, Graph
from .partition import build_partition
from .solvers import INFEASIBLE, Solution

INFINITY = "infinity"


@dataclass(frozen=True)
class GraphStats:
    n: int
    m: int
    diameter: int


@dataclass(frozen=True)
class Report:
    problem: str
    k_requested: int | None
    k_achieved: int | None
    ell: int | str
    witness: list[str]
    method: str
    wall_time_ms: float
    graph: GraphStats
    classes: list[list[str]] | None = None

    @classmethod
    def from_solution(
        cls,
        sol: Solution,
        g: Graph,
        d: DistanceMatrix,
        wall_time_ms: float,
        show_partition: bool = False,
    ) -> Report:
        classes = None
        if show_partition and sol.feasible:
            classes = partition_labels(g, d, sol.witness)
        return cls(
            problem=sol.problem,
            k_requested=sol.k_requested,
            k_achieved=sol.k_achieved,
            ell=INFINITY if sol.ell == INFEASIBLE else int(sol.ell),
            witness=sorted(g.labels[v] for v in sol.witness),
            method=sol.method,
            wall_time_ms=round(wall_time_ms, 3),
            graph=GraphStats(g.n, g.m, d.diameter),
            classes=classes,
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        if out["classes"] is None:
            del out["classes"]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> Report:
        data = dict(data)
        data["graph"] = GraphStats(**data["graph"])
        data.setdefault("classes", None)
        return cls(**data)

    def render(self) -> str:
        k = f" (k = {self.k_requested})" if self.k_requested is not None else ""
        ell = "∞ (no such attacker set exists)" if self.ell == INFINITY else str(self.ell)
        lines = [
            f"problem:    {self.problem}{k}",
            f"graph:      n={self.graph.n} m={self.graph.m} diameter={self.graph.diameter}",
            f"ell:        {ell}",
        ]
        if self.ell != INFINITY:
            lines += [
                f"k achieved: {self.k_achieved}",
                f"witness:    {' '.join(self.witness)}",
            ]
        lines.append(f"method:     {self.method} ({self.wall_time_ms:.1f} ms)")
        if self.classes is not None:
            lines.append("classes:")
            lines += [f"  [{len(c)}] {' '.join(c)}" for c in self.classes]
        return "\n".join(lines)


def partition_labels(g: Graph, d: DistanceMatrix, witness) -> list[list[str]]:
    """Classes as sorted label lists, ordered by size then smallest label."""
    p = build_partition(d, witness)
    classes = [sorted(g.labels[v] for v in c) for c in p.classes]
    return sorted(classes, key=lambda c: (len(c), c[0]))


def stats_dict(g: Graph, d: DistanceMatrix, degree_one: list[int], four_cycle: bool) -> dict:
    return {
        "n": g.n,
        "m": g.m,
        "diameter": d.diameter,
        "degree_one_nodes": [g.labels[v] for v in degree_one],
        "has_four_cycle": four_cycle,
    }


_INT_OR_NULL = {"type": ["integer", "null"], "minimum": 1}

SOLUTION_SCHEMA = {
    "type": "object",
    "required": [
        "problem", "k_requested", "k_achieved", "ell", "witness", "method", "wall_time_ms", "graph",
    ],
    "additionalProperties": False,
    "properties": {
        "problem": {"enum": ["adim-max", "mad-geq", "eqmad"]},
        "k_requested": _INT_OR_NULL,
        "k_achieved": _INT_OR_NULL,
        "ell": {"oneOf": [{"type": "integer", "minimum": 1}, {"const": INFINITY}]},
        "witness": {"type": "array", "items": {"type": "string"}, "uniqueItems": True},
        "method": {"type": "string"},
        "wall_time_ms": {"type": "number", "minimum": 0},
        "graph": {
            "type": "object",
            "required": ["n", "m", "diameter"],
            "additionalProperties": False,
            "properties": {
                "n": {"type": "integer", "minimum": 1},
                "m": {"type": "integer", "minimum": 0},
                "diameter": {"type": "integer", "minimum": 0},
            },
        },
        "classes": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        },
    },
}

STATS_SCHEMA = {
    "type": "object",
    "required": ["n", "m", "diameter", "degree_one_nodes", "has_four_cycle"],
    "additionalProperties": False,
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "m": {"type": "integer", "minimum": 0},
        "diameter": {"type": "integer", "minimum": 0},
        "degree_one_nodes": {"type": "array", "items": {"type": "string"}},
        "has_four_cycle": {"type": "boolean"},
    },
}

HARD_INSTANCE_SCHEMA = {
    "type": "object",
    "required": ["universe_size", "set_count", "n1", "k", "clone_count", "n", "m", "diameter", "edges", "out"],
    "properties": {
        "universe_size": {"type": "integer"},
        "set_count": {"type": "integer"},
        "n1": {"type": "integer"},
        "k": {"type": "integer", "minimum": 1},
        "clone_count": {"type": "integer"},
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "diameter": {"type": "integer"},
        "node_count_formula": {"type": "integer"},
        "edges": {"type": "object", "additionalProperties": {"type": "integer"}},
        "out": {"type": "string"},
        "cover": {"type": "array", "items": {"type": "integer"}},
        "witness": {"type": "array", "items": {"type": "string"}},
        "witness_mu": {"type": "integer"},
    },
}

SCHEMAS = {
    "adim": SOLUTION_SCHEMA,
    "mad": SOLUTION_SCHEMA,
    "eqmad": SOLUTION_SCHEMA,
    "brute": SOLUTION_SCHEMA,
    "stats": STATS_SCHEMA,
    "gen-hard": HARD_INSTANCE_SCHEMA,
}

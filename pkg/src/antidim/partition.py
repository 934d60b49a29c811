"""Metric representations and the equal-representation partition of V minus an anchor set.

Nodes outside the anchor set are grouped by their vector of distances to the
anchors. Two routes produce the same partition:

* :func:`build_partition` hashes full representation vectors (the reference);
* :func:`refine_with_nodes` splits an existing partition one new anchor at a
  time with a counting sort on ``(class, distance)`` keys, O(n) per anchor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .graph import DistanceMatrix


class AnchorSetError(ValueError):
    """Anchor set violates the 0 < |V'| < n requirement or overlaps a query."""


@dataclass(frozen=True, eq=False)
class EquivalencePartition:
    """Classes of V minus ``anchors`` under equal metric representation.

    ``labels[v]`` is the class index of ``v`` or -1 for anchors. Class indices
    are canonical: classes are numbered by their smallest member.
    """

    anchors: tuple[int, ...]
    labels: np.ndarray

    def __post_init__(self):
        self.labels.setflags(write=False)

    @property
    def n(self) -> int:
        return self.labels.shape[0]

    @property
    def anchor_set(self) -> frozenset[int]:
        return frozenset(self.anchors)

    @cached_property
    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels[self.labels >= 0])

    @cached_property
    def classes(self) -> tuple[tuple[int, ...], ...]:
        buckets: list[list[int]] = [[] for _ in range(len(self.sizes))]
        for v, c in enumerate(self.labels.tolist()):
            if c >= 0:
                buckets[c].append(v)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def class_of(self) -> dict[int, int]:
        return {v: int(c) for v, c in enumerate(self.labels) if c >= 0}

    @property
    def mu(self) -> int:
        return int(self.sizes.min())

    def smallest_classes(self) -> list[tuple[int, ...]]:
        """All classes whose size equals ``mu``."""
        mu = self.mu
        return [c for c, s in zip(self.classes, self.sizes) if s == mu]

    def __eq__(self, other):
        if not isinstance(other, EquivalencePartition):
            return NotImplemented
        return self.anchors == other.anchors and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash((self.anchors, self.labels.tobytes()))

    def __repr__(self):
        return f"EquivalencePartition(anchors={self.anchors}, classes={self.classes}, mu={self.mu})"


def _check_anchors(n: int, anchors: Iterable[int]) -> tuple[int, ...]:
    anchors = tuple(sorted(set(int(a) for a in anchors)))
    if not anchors:
        raise AnchorSetError("anchor set is empty")
    if len(anchors) >= n:
        raise AnchorSetError("anchor set must be a proper subset of V")
    if anchors[0] < 0 or anchors[-1] >= n:
        raise AnchorSetError(f"anchor index out of range 0..{n - 1}")
    return anchors


def _canonical(labels: np.ndarray) -> np.ndarray:
    """Renumber class ids by first occurrence; -1 entries stay -1."""
    mask = labels >= 0
    raw = labels[mask]
    out = np.full(labels.shape, -1, dtype=np.int32)
    if raw.size == 0:
        return out
    _, first, inv = np.unique(raw, return_index=True, return_inverse=True)
    rank = np.empty(first.size, dtype=np.int32)
    rank[np.argsort(first)] = np.arange(first.size, dtype=np.int32)
    out[mask] = rank[inv]
    return out


def metric_representation(d: DistanceMatrix, v: int, anchors: Iterable[int]) -> tuple[int, ...]:
    anchors = sorted(set(anchors))
    if v in anchors:
        raise AnchorSetError(f"node {v} is itself an anchor")
    if not anchors:
        raise AnchorSetError("anchor set is empty")
    row = d.dist[v]
    return tuple(int(row[a]) for a in anchors)


def build_partition(d: DistanceMatrix, anchors: Iterable[int]) -> EquivalencePartition:
    anchors = _check_anchors(d.n, anchors)
    cols = d.dist[:, anchors].tolist()
    anchor_set = set(anchors)
    key_to_class: dict[tuple[int, ...], int] = {}
    labels = np.full(d.n, -1, dtype=np.int32)
    for v in range(d.n):
        if v in anchor_set:
            continue
        labels[v] = key_to_class.setdefault(tuple(cols[v]), len(key_to_class))
    return EquivalencePartition(anchors, labels)


def split_by_anchor(labels: np.ndarray, row: np.ndarray, anchor: int) -> np.ndarray:
    """One bucket-sort refinement step on a raw label array.

    ``anchor`` leaves its class, then every class is split by the members'
    distance ``row`` to it. Returned ids are compact but not canonical.
    """
    n = labels.shape[0]
    labels = labels.copy()
    labels[anchor] = -1
    mask = labels >= 0
    if not mask.any():
        return labels
    key = labels[mask].astype(np.int64) * n + row[mask]
    occupied = np.zeros(int(labels.max()) * n + n, dtype=np.int32)
    occupied[key] = 1
    new_id = np.cumsum(occupied, dtype=np.int32) - 1
    labels[mask] = new_id[key]
    return labels


def refine_with_nodes(
    p: EquivalencePartition, d: DistanceMatrix, new_anchors: Iterable[int]
) -> EquivalencePartition:
    new = sorted(set(int(a) for a in new_anchors))
    if not new:
        return p
    for a in new:
        if a in p.anchor_set:
            raise AnchorSetError(f"node {a} is already an anchor")
    anchors = _check_anchors(d.n, p.anchors + tuple(new))
    labels = p.labels
    for a in new:
        labels = split_by_anchor(labels, d.dist[a], a)
    return EquivalencePartition(anchors, _canonical(labels))


def measure(p: EquivalencePartition) -> int:
    return p.mu

"""Sequential reference labelers and partition comparison.

Two independent oracles, union-find and breadth-first search, both producing
min-canonical labels (each vertex labelled by the smallest id in its
component). They are kept simple on purpose.
"""
from __future__ import annotations

from collections import deque

import numpy as np

from adaptcc.labels import ComponentLabeling


class DisjointSet:
    """Union-find with path compression and union by rank."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1


def oracle_cc(graph) -> ComponentLabeling:
    ds = DisjointSet(graph.n)
    for u, v in graph.edges.tolist():
        ds.union(u, v)
    # ascending scan: the first vertex seen in each set is its minimum
    smallest = {}
    label = [0] * graph.n
    for v in range(graph.n):
        label[v] = smallest.setdefault(ds.find(v), v)
    return ComponentLabeling(np.array(label, dtype=np.int64), canonical=True)


def bfs_cc(graph) -> ComponentLabeling:
    adjacency = [[] for _ in range(graph.n)]
    for u, v in graph.edges.tolist():
        adjacency[u].append(v)
        adjacency[v].append(u)
    label = [-1] * graph.n
    for source in range(graph.n):
        if label[source] != -1:
            continue
        label[source] = source
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in adjacency[u]:
                if label[w] == -1:
                    label[w] = source
                    queue.append(w)
    return ComponentLabeling(np.array(label, dtype=np.int64), canonical=True)


def _as_array(labels) -> np.ndarray:
    if isinstance(labels, ComponentLabeling):
        return labels.label
    return np.asarray(labels, dtype=np.int64)


def first_disagreement(a, b) -> tuple[int, int] | None:
    """A vertex pair grouped together by one labeling and split by the other, or None.

    Runs in O(n + max label): each labeling must map onto the other as a
    function, in both directions.
    """
    a, b = _as_array(a), _as_array(b)
    if a.shape != b.shape:
        raise ValueError(f"labelings differ in length ({a.size} vs {b.size})")
    if a.size == 0:
        return None
    if a.min() < 0 or b.min() < 0:
        raise ValueError("labels must be non-negative")
    index = np.arange(a.size, dtype=np.int64)
    for x, y in ((a, b), (b, a)):
        # first vertex of every x-class; y must agree with it across the class
        first = np.full(int(x.max()) + 1, x.size, dtype=np.int64)
        np.minimum.at(first, x, index)
        bad = np.flatnonzero(y[first[x]] != y)
        if bad.size:
            v = int(bad[0])
            return int(first[x[v]]), v
    return None


def partitions_equal(a, b) -> bool:
    return first_disagreement(a, b) is None


def component_histogram(labels) -> dict[int, int]:
    values, counts = np.unique(_as_array(labels), return_counts=True)
    return dict(zip(values.tolist(), counts.tolist()))

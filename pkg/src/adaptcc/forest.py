"""The parent forest workspace and its four per-element kernels.

``parent[v]`` never exceeds ``v``: hooks only ever write the lower of two ids
into the higher slot, and jumps replace a parent by one of its ancestors. Roots
are therefore the minimum of their trees.
"""
from __future__ import annotations

from dataclasses import dataclass, fields

import numpy as np

from adaptcc import backend


@dataclass
class KernelCounters:
    hook_traversal_steps: int = 0
    cas_failures: int = 0
    jump_steps: int = 0

    def __iadd__(self, other: "KernelCounters"):
        for f in fields(self):
            setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))
        return self

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(eq=False)
class ParentForest:
    parent: np.ndarray

    @property
    def n(self) -> int:
        return int(self.parent.shape[0])

    def dump(self) -> str:
        """One line of ``n`` integers, for fixtures and debugging."""
        return " ".join(map(str, self.parent.tolist()))

    @classmethod
    def from_list(cls, values) -> "ParentForest":
        parent = np.array(values, dtype=np.int64).reshape(-1)
        if parent.size and (parent.min() < 0 or parent.max() >= parent.size):
            raise ValueError("parent entries must be vertex ids")
        return cls(parent)


def init_forest(n: int) -> ParentForest:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    return ParentForest(np.arange(n, dtype=np.int64))


def _arr(forest):
    return forest.parent if isinstance(forest, ParentForest) else np.asarray(forest)


def hook(u: int, v: int, forest: ParentForest, kernels=None) -> None:
    """Non-atomic hook: ``parent[max(pu, pv)] = min(pu, pv)`` with pu, pv the current parents.

    A plain store, so concurrent hooks can overwrite one another. The baseline
    driver repeats hook rounds until none writes, which retries lost updates.
    """
    (kernels or backend.kernels).hook(forest.parent, u, v)


def jump(v: int, forest: ParentForest, kernels=None) -> bool:
    """Replace ``parent[v]`` by its grandparent. True if the value changed."""
    return bool((kernels or backend.kernels).jump(forest.parent, v))


def atomic_hook(u: int, v: int, forest: ParentForest,
                counters: KernelCounters | None = None, kernels=None) -> None:
    """Link the trees of ``u`` and ``v``, acquiring a root with compare-and-swap.

    Each iteration reloads both parents and takes H (higher) and L (lower). A
    CAS on ``parent[H]`` expecting ``H`` succeeds only when H is a root and
    hooks it under L. Otherwise the search restarts from the value the CAS
    observed and L. The loop stops when the two parents coincide.
    """
    steps, fails = (kernels or backend.kernels).atomic_hook(forest.parent, u, v)
    if counters is not None:
        counters.hook_traversal_steps += steps
        counters.cas_failures += fails


def multi_jump(v: int, forest: ParentForest,
               counters: KernelCounters | None = None, kernels=None) -> None:
    """Jump ``v`` repeatedly until its parent is a root, writing after every hop."""
    writes = (kernels or backend.kernels).multi_jump(forest.parent, v)
    if counters is not None:
        counters.jump_steps += writes


def is_star(forest) -> bool:
    """True iff every parent is a root. Only meaningful on a quiescent forest."""
    p = _arr(forest)
    return bool(np.array_equal(p[p], p))


def bound_holds(forest) -> bool:
    """``parent[v] <= v`` for all v."""
    p = _arr(forest)
    return bool((p <= np.arange(p.size)).all())

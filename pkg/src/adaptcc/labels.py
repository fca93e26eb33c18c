"""Component labelings read out of a converged parent forest."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NotStarError(ValueError):
    """The forest still has a vertex whose parent is not a root."""


@dataclass(eq=False)
class ComponentLabeling:
    label: np.ndarray
    canonical: bool = False

    def __len__(self):
        return int(self.label.shape[0])

    def tolist(self) -> list[int]:
        return self.label.tolist()


def extract_labels(forest, validate: bool = True) -> ComponentLabeling:
    """Copy a star-shaped forest out as labels.

    Roots are component minima, so the result is canonical. ``validate``
    costs O(n) and should only be turned off by timed benchmark runs.
    """
    parent = getattr(forest, "parent", forest)
    parent = np.asarray(parent, dtype=np.int64)
    if validate:
        not_star = np.flatnonzero(parent[parent] != parent)
        if not_star.size:
            v = int(not_star[0])
            raise NotStarError(
                f"forest is not a star: vertex {v} -> {int(parent[v])} -> {int(parent[parent[v]])}"
            )
    return ComponentLabeling(parent.copy(), canonical=True)


def count_components(labels: ComponentLabeling) -> int:
    label = labels.label
    return int(np.count_nonzero(label == np.arange(label.size)))

"""Random bipartite instance generation (deterministic under seed)."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bigraph import BipartiteInstance


@dataclass(frozen=True)
class GenSpec:
    n_u: int
    n_v: int
    edge_prob: float
    colors: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.n_u < 1 or self.n_v < 1:
            raise ValueError("layer sizes must be at least 1")
        if not 0.0 <= self.edge_prob <= 1.0:
            raise ValueError("edge_prob must lie in [0, 1]")
        if self.colors < 1:
            raise ValueError("colors must be at least 1")


def random_instance(spec: GenSpec) -> BipartiteInstance:
    """Bipartite Erdős–Rényi draw: every (u, v, color) triple is included
    independently with probability edge_prob, scanned in (u, v, color) order
    so a seed pins the instance exactly."""
    rng = random.Random(spec.seed)
    edges, colors = [], []
    for u in range(spec.n_u):
        for v in range(spec.n_v):
            for color in range(spec.colors):
                if rng.random() < spec.edge_prob:
                    edges.append((u, v))
                    colors.append(color)
    return BipartiteInstance(spec.n_u, spec.n_v, tuple(edges), tuple(colors),
                             spec.colors)

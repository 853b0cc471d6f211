"""Pairwise crossing-count matrix and the separability sum.

For free-layer vertices v, w the matrix entry c[v][w] counts edge pairs
(a, v), (b, w) with a after b on the fixed layer — i.e. the crossings the
pair (v, w) contributes whenever v is placed before w. For colored
instances only same-color edge pairs are counted, which folds the colored
objective into the same machinery. Total crossings of an ordering are then
sum of c[v][w] over all pairs v before w.

The key structural fact used by every solver: for disjoint subsets V1, V2
the cross-term gamma(V1, V2) = sum_{v in V1, w in V2} c[v][w] is the same
for every ordering placing all of V1 before all of V2, so optimal orderings
decompose over subset splits.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bigraph import BipartiteInstance
from .bits import mask_members


@dataclass(frozen=True)
class CrossingMatrix:
    """n_v x n_v matrix of pairwise crossing contributions (read-only)."""

    n_v: int
    counts: np.ndarray

    def __post_init__(self):
        self.counts.setflags(write=False)


def build_crossing_matrix(inst: BipartiteInstance) -> CrossingMatrix:
    """Count, for each ordered pair (v, w), the crossings of v-before-w.

    c[v][w] = #{((a,v), (b,w)) same-colored edge pairs with a > b}. Built
    per color class as A @ P.T where A is the V x U incidence matrix and
    P[w, a] = #neighbours of w strictly left of a; the diagonal is zeroed
    (a vertex never crosses itself).
    """
    n_v, n_u = inst.n_v, inst.n_u
    c = np.zeros((n_v, n_v), dtype=np.int64)
    if n_v == 0 or n_u == 0 or not inst.edges:
        return CrossingMatrix(n_v, c)
    for color in range(inst.n_colors):
        a = np.zeros((n_v, n_u), dtype=np.int64)
        touched = False
        for (u, v), col in zip(inst.edges, inst.colors):
            if col == color:
                a[v, u] = 1
                touched = True
        if not touched:
            continue
        left = np.zeros_like(a)
        left[:, 1:] = np.cumsum(a, axis=1)[:, :-1]
        c += a @ left.T
    np.fill_diagonal(c, 0)
    return CrossingMatrix(n_v, c)


def gamma(cm: CrossingMatrix, v1_mask: int, v2_mask: int) -> int:
    """Cross-term sum_{v in V1, w in V2} c[v][w] for disjoint subsets.

    Equals cr(E(V1) u E(V2)) - cr(E(V1)) - cr(E(V2)) under any full ordering
    that places V1 entirely before V2.
    """
    if v1_mask & v2_mask:
        raise ValueError("subsets overlap")
    full = (1 << cm.n_v) - 1
    if v1_mask & ~full or v2_mask & ~full:
        raise ValueError("subset out of range")
    if v1_mask == 0 or v2_mask == 0:
        return 0
    rows = mask_members(v1_mask)
    cols = mask_members(v2_mask)
    return int(cm.counts[np.ix_(rows, cols)].sum())


def ordering_cost(cm: CrossingMatrix, ordering) -> int:
    """Crossings of a full ordering via the matrix: sum over v-before-w pairs."""
    total = 0
    counts = cm.counts
    for i, v in enumerate(ordering):
        for w in ordering[i + 1:]:
            total += int(counts[v, w])
    return total

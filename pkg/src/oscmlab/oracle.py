"""Brute-force ground truth for the exact solvers.

Everything here counts crossings straight from the definition (edge-pair
order inversion), never through the pairwise matrix, so oracle results and
solver results reach the optimum through disjoint routes. Enumeration is
lexicographic and the reported optimum is the lexicographically least
ordering among minimizers.

The permutation scan is vectorized with numpy (chunked to bound memory);
the scalar definition in bigraph.count_crossings is the reference the
vectorized path is tested against.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

import numpy as np

from .bigraph import BipartiteInstance, Solution
from .errors import SizeLimitError

_CHUNK_ROWS = 1 << 14


@dataclass(frozen=True)
class OracleLimit:
    """Hard enumeration bounds; beyond them the oracle refuses to run."""

    max_nv: int = 10
    max_nu_tlcm: int = 6


@lru_cache(maxsize=4)
def _perm_tables(n: int):
    """All permutations of range(n) (lexicographic) and their position tables."""
    if n == 0:
        perms = np.zeros((1, 0), dtype=np.int8)
        return perms, perms
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    pos = np.argsort(perms, axis=1).astype(np.int8)
    return perms, pos


def _pair_arrays(edges, colors, upos, same_color_only):
    """Edge pairs that can ever cross, as (v1, v2, u1-left-of-u2) arrays."""
    v1s, v2s, flips = [], [], []
    for i in range(len(edges)):
        u1, v1 = edges[i]
        for j in range(i + 1, len(edges)):
            u2, v2 = edges[j]
            if u1 == u2 or v1 == v2:
                continue
            if same_color_only and colors[i] != colors[j]:
                continue
            v1s.append(v1)
            v2s.append(v2)
            flips.append(upos[u1] < upos[u2])
    return (
        np.array(v1s, dtype=np.intp),
        np.array(v2s, dtype=np.intp),
        np.array(flips, dtype=bool),
    )


def _scan_orderings(inst, upos, same_color_only):
    """Crossing count of every ordering of V, in lexicographic order."""
    perms, pos = _perm_tables(inst.n_v)
    v1s, v2s, flips = _pair_arrays(inst.edges, inst.colors, upos, same_color_only)
    counts = np.zeros(len(perms), dtype=np.int64)
    if len(v1s) == 0:
        return perms, counts
    for start in range(0, len(perms), _CHUNK_ROWS):
        block = pos[start:start + _CHUNK_ROWS]
        crossed = (block[:, v1s] < block[:, v2s]) != flips[np.newaxis, :]
        counts[start:start + _CHUNK_ROWS] = crossed.sum(axis=1)
    return perms, counts


def _best_ordering(inst, upos=None, same_color_only=False):
    if upos is None:
        upos = list(range(inst.n_u))
    perms, counts = _scan_orderings(inst, upos, same_color_only)
    best = int(np.argmin(counts)) if len(counts) else 0
    ordering = tuple(int(v) for v in perms[best])
    return Solution(ordering, int(counts[best]) if len(counts) else 0)


def solve_bruteforce(inst: BipartiteInstance, limit: OracleLimit = None) -> Solution:
    """Minimum crossings over all n_v! orderings, ignoring colors.

    Ties go to the lexicographically least ordering. Refuses n_v beyond
    limit.max_nv (default 10).
    """
    limit = limit or OracleLimit()
    if inst.n_v > limit.max_nv:
        raise SizeLimitError(f"n_v={inst.n_v} exceeds oracle limit {limit.max_nv}")
    return _best_ordering(inst)


def solve_osscm_bruteforce(inst: BipartiteInstance, limit: OracleLimit = None) -> Solution:
    """Like solve_bruteforce, but only same-color crossings count."""
    limit = limit or OracleLimit()
    if inst.n_v > limit.max_nv:
        raise SizeLimitError(f"n_v={inst.n_v} exceeds oracle limit {limit.max_nv}")
    return _best_ordering(inst, same_color_only=True)


def solve_tlcm_bruteforce(inst: BipartiteInstance, limit: OracleLimit = None):
    """Minimum crossings over all n_u! * n_v! layer-order pairs.

    Returns (u_ordering, Solution); ties go to the lexicographically least
    (u_ordering, v_ordering) pair. Colors are ignored.
    """
    limit = limit or OracleLimit()
    if inst.n_u > limit.max_nu_tlcm:
        raise SizeLimitError(
            f"n_u={inst.n_u} exceeds two-layer oracle limit {limit.max_nu_tlcm}"
        )
    if inst.n_v > limit.max_nv:
        raise SizeLimitError(f"n_v={inst.n_v} exceeds oracle limit {limit.max_nv}")
    best = None
    for u_perm in itertools.permutations(range(inst.n_u)):
        upos = [0] * inst.n_u
        for i, u in enumerate(u_perm):
            upos[u] = i
        sol = _best_ordering(inst, upos=upos)
        if best is None or sol.crossings < best[1].crossings:
            best = (u_perm, sol)
    if best is None:  # n_u == 0
        best = ((), _best_ordering(inst))
    return best[0], best[1]


def orderings_scanned(n_v: int) -> int:
    """How many orderings a brute-force run over n_v vertices evaluates."""
    return factorial(n_v)

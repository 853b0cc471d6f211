"""Exact minimum crossings by dynamic programming over vertex subsets.

OPT(S) for a subset S of the free layer is the minimum crossing count of a
drawing of S alone (plus, implicitly, the fixed layer). Peeling the last
vertex gives

    OPT(S) = min_{w in S}  OPT(S \\ {w}) + sum_{v in S \\ {w}} c[v][w]

with OPT of singletons 0. The table is a dense array indexed by bitmask, so
time and space are both exponential in n_v: 2^n_v entries, and exactly
n_v * 2^(n_v - 1) - n_v recurrence evaluations (every (S, w) pair with
|S| >= 2).

Evaluation is vectorized one subset-size layer at a time (all subsets of
equal size are independent, so a layer barrier is the natural concurrency
shape). Ties pick the smallest last-vertex index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bigraph import BipartiteInstance, Solution
from .errors import SizeLimitError
from .ledger import CostLedger
from .matrix import build_crossing_matrix

# Above this the mask-indexed column-sum table alone tops a gigabyte.
_PRACTICAL_MAX_NV = 23

_INF = np.iinfo(np.int64).max // 2


@dataclass
class DpTable:
    """Dense subset table: optimum value and chosen last vertex per mask."""

    n_v: int
    opt: np.ndarray
    choice: np.ndarray

    @property
    def entry_count(self) -> int:
        return len(self.opt)

    def opt_of(self, mask: int) -> int:
        if not 0 <= mask < len(self.opt):
            raise KeyError(f"subset mask {mask} outside table for n_v={self.n_v}")
        return int(self.opt[mask])

    def order_of(self, mask: int) -> tuple:
        """Optimal ordering of the subset, rebuilt from last-vertex choices."""
        if not 0 <= mask < len(self.opt):
            raise KeyError(f"subset mask {mask} outside table for n_v={self.n_v}")
        out = []
        m = mask
        while m.bit_count() > 1:
            w = int(self.choice[m])
            out.append(w)
            m ^= 1 << w
        if m:
            out.append(m.bit_length() - 1)
        out.reverse()
        return tuple(out)


def opt_of_subset(table: DpTable, mask: int) -> int:
    return table.opt_of(mask)


def dp_recurrence_count(n_v: int) -> int:
    """Closed form for recurrence evaluations: sum of |S| over |S| >= 2."""
    if n_v <= 1:
        return 0
    return n_v * 2 ** (n_v - 1) - n_v


def dp_table_entries(n_v: int) -> int:
    """Dense table size: one entry per subset of the free layer."""
    return 2 ** n_v


def _popcounts(n_masks: int) -> np.ndarray:
    return np.bitwise_count(np.arange(n_masks, dtype=np.uint32)).astype(np.uint8)


def solve_dp(inst: BipartiteInstance, keep_table: bool = False):
    """Solve one instance exactly; returns (Solution, CostLedger).

    With keep_table=True returns (Solution, CostLedger, DpTable) so callers
    can query per-subset optima.
    """
    n = inst.n_v
    if n > 64:
        raise SizeLimitError(f"subset solvers support n_v <= 64, got {n}")
    if n > _PRACTICAL_MAX_NV:
        raise SizeLimitError(
            f"n_v={n}: dense table would exceed practical memory "
            f"(limit {_PRACTICAL_MAX_NV})"
        )
    ledger = CostLedger(algo="dp", meta={"n_v": n})
    cm = build_crossing_matrix(inst)
    c = cm.counts

    size = 1 << n
    opt = np.zeros(size, dtype=np.int64)
    choice = np.full(size, -1, dtype=np.int8)

    if n >= 2:
        csum_dtype = np.int64 if int(c.sum()) * max(n, 1) >= 2 ** 31 else np.int32
        colsum = np.zeros((size, n), dtype=csum_dtype)
        for v in range(n):
            view = colsum.reshape(1 << (n - 1 - v), 2, 1 << v, n)
            view[:, 1] += c[v].astype(csum_dtype)

        pops = _popcounts(size)
        by_size = np.argsort(pops, kind="stable").astype(np.int64)
        layer_starts = np.searchsorted(pops[by_size], np.arange(n + 2))
        for s in range(2, n + 1):
            masks = by_size[layer_starts[s]:layer_starts[s + 1]]
            best = np.full(len(masks), _INF, dtype=np.int64)
            pick = np.full(len(masks), -1, dtype=np.int8)
            for w in range(n):
                idx = np.nonzero((masks >> w) & 1)[0]
                if idx.size == 0:
                    continue
                sub = masks[idx] ^ (1 << w)
                cand = opt[sub] + colsum[sub, w]
                improved = cand < best[idx]
                hit = idx[improved]
                best[hit] = cand[improved]
                pick[hit] = w
                ledger.recurrence_evals += int(idx.size)
                ledger.gamma_evals += int(idx.size)
            opt[masks] = best
            choice[masks] = pick

    table = DpTable(n, opt, choice)
    full = size - 1
    solution = Solution(table.order_of(full), table.opt_of(full))
    if keep_table:
        return solution, ledger, table
    return solution, ledger

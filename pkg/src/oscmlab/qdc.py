"""Quantum divide-and-conquer solver, simulated in polynomial space.

Each internal node delegates its min over balanced splits (|W| =
ceil(|S|/2), W preceding the complement) to the minimum-finding subroutine
in qmf; both children recurse. The oracle charge composes per node as

    Q(k) = 0                                        if k <= base_size
    Q(k) = L(k) * (Q(floor(k/2)) + Q(ceil(k/2)) + 1) otherwise,
    L(k) = ceil(c * sqrt(C(k, ceil(k/2))))

— every charged query at a node carries one full evaluation of each child —
and qdc_cost_model computes the same quantity in closed form so solver
ledgers can be checked against it exactly. Recursion nodes are counted with
the same convention as the classical divide-and-conquer solver (every
evaluation call is one node), so `nodes` matches dc_node_count on full runs.

The winning splits are re-derived in an uncounted second pass into a
SplitTrace: node (0, 0) is the root, and node (i, j) splits into
(i + 1, 2 j) (the W side, which precedes) and (i + 1, 2 j + 1). Leaves keep
their enumerated internal ordering, since split bits alone cannot recover
it once base cases hold more than one vertex. extract_ordering walks the
trace pre-order and validates balance and completeness along the way.

In cost-model mode (the default) the value pass is exact and the extracted
ordering's cost is asserted equal to the value-pass minimum. In
state-vector mode oracle charges reflect the sampled search rounds while
the reported ordering still comes from the deterministic trace pass.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import ceil, comb, sqrt

import numpy as np

from .bigraph import BipartiteInstance, Solution
from .bits import mask_members, iter_splits
from .dc import SpaceMeter, base_case_order, base_case_value, gamma_masks
from .errors import NodeBudgetExceeded, SizeLimitError
from .ledger import CostLedger
from .matrix import build_crossing_matrix, ordering_cost
from .qmf import QmfConfig, qmf


@dataclass(frozen=True)
class QdcConfig:
    base_size: int = 2
    count_only: bool = False
    node_budget: int = None
    qmf_cfg: QmfConfig = field(default_factory=QmfConfig)

    def __post_init__(self):
        if self.base_size < 1:
            raise ValueError("base_size must be at least 1")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive when set")


@dataclass(frozen=True)
class SplitTrace:
    """Winning-split tree: maps (depth, index) keys to subset contents."""

    n_v: int
    base_size: int
    nodes: dict          # (i, j) -> sorted tuple of subset members
    sizes: dict          # (i, j) -> subset size
    leaves: dict         # (i, j) -> optimal internal ordering of that leaf


def qdc_cost_model(n_v: int, cfg: QdcConfig = None) -> int:
    """Closed-form oracle-call total the solver ledger must match exactly."""
    cfg = cfg or QdcConfig()
    return _charge(n_v, cfg.base_size, cfg.qmf_cfg.call_constant)


@lru_cache(maxsize=None)
def _charge(k: int, base_size: int, call_constant: float) -> int:
    if k <= base_size:
        return 0
    half = ceil(k / 2)
    calls = max(1, ceil(call_constant * sqrt(comb(k, half))))
    return calls * (_charge(k - half, base_size, call_constant)
                    + _charge(half, base_size, call_constant) + 1)


def extract_ordering(trace: SplitTrace, n_v: int = None) -> tuple:
    """Pre-order leaf concatenation; validates the trace is a split tree."""
    if n_v is not None and n_v != trace.n_v:
        raise ValueError(f"trace covers {trace.n_v} vertices, expected {n_v}")
    if (0, 0) not in trace.nodes:
        raise ValueError("trace has no root node")

    def walk(key):
        members = trace.nodes[key]
        if key in trace.leaves:
            leaf = trace.leaves[key]
            if tuple(sorted(leaf)) != tuple(members):
                raise ValueError(f"leaf {key} ordering does not match its members")
            return list(leaf)
        i, j = key
        left, right = (i + 1, 2 * j), (i + 1, 2 * j + 1)
        if left not in trace.nodes or right not in trace.nodes:
            raise ValueError(f"internal node {key} is missing a child")
        if trace.sizes[left] != ceil(trace.sizes[key] / 2):
            raise ValueError(f"unbalanced split at {key}")
        merged = tuple(sorted(trace.nodes[left] + trace.nodes[right]))
        if merged != tuple(members):
            raise ValueError(f"children of {key} do not partition it")
        return walk(left) + walk(right)

    ordering = walk((0, 0))
    if sorted(ordering) != list(range(trace.n_v)):
        raise ValueError("trace leaves do not cover every vertex exactly once")
    return tuple(ordering)


def trace_json_dict(trace: SplitTrace) -> dict:
    """JSON-ready view of a trace ('i,j' keys, plain lists)."""
    return {
        "n_v": trace.n_v,
        "base_size": trace.base_size,
        "nodes": {f"{i},{j}": list(m) for (i, j), m in sorted(trace.nodes.items())},
        "sizes": {f"{i},{j}": s for (i, j), s in sorted(trace.sizes.items())},
        "leaves": {f"{i},{j}": list(o) for (i, j), o in sorted(trace.leaves.items())},
    }


def _run(inst: BipartiteInstance, cfg: QdcConfig, want_trace: bool):
    n = inst.n_v
    if n > 64:
        raise SizeLimitError(f"subset solvers support n_v <= 64, got {n}")
    ledger = CostLedger(algo="qdc",
                        meta={"n_v": n, "base_size": cfg.base_size,
                              "qmf_mode": cfg.qmf_cfg.mode})
    meter = SpaceMeter()
    cm = build_crossing_matrix(inst)
    c = cm.counts
    full = (1 << n) - 1
    rng = np.random.default_rng(cfg.qmf_cfg.seed) if cfg.qmf_cfg.mode == "state_vector" else None

    def evaluate(mask):
        # Counted value pass; returns (min crossings, oracle charge).
        s = mask.bit_count()
        frame = SpaceMeter.frame_bytes(s)
        meter.enter(frame)
        try:
            ledger.nodes += 1
            if cfg.node_budget is not None and ledger.nodes > cfg.node_budget:
                raise NodeBudgetExceeded(ledger, meter.peak, meter.max_depth)
            if s <= cfg.base_size:
                return base_case_value(c, mask_members(mask)), 0
            k = ceil(s / 2)
            splits = list(iter_splits(mask, k))
            child_charge = {}

            def value_fn(i):
                wmask = splits[i]
                rest = mask ^ wmask
                v1, q1 = evaluate(wmask)
                v2, q2 = evaluate(rest)
                child_charge[k] = q1
                child_charge[s - k] = q2
                return v1 + v2 + gamma_masks(c, wmask, rest)

            res = qmf(len(splits), value_fn, cfg.qmf_cfg, rng)
            charge = res.oracle_calls * (child_charge[s - k] + child_charge[k] + 1)
            return res.min_value, charge
        finally:
            meter.exit(frame)

    def value_u(mask):
        # Uncounted exact value, for the trace pass.
        s = mask.bit_count()
        frame = SpaceMeter.frame_bytes(s)
        meter.enter(frame)
        try:
            if s <= cfg.base_size:
                return base_case_value(c, mask_members(mask))
            best = None
            for wmask in iter_splits(mask, ceil(s / 2)):
                val = value_u(wmask) + value_u(mask ^ wmask) \
                    + gamma_masks(c, wmask, mask ^ wmask)
                if best is None or val < best:
                    best = val
            return best
        finally:
            meter.exit(frame)

    def build_trace(key, mask, nodes, sizes, leaves):
        s = mask.bit_count()
        members = tuple(mask_members(mask))
        nodes[key] = members
        sizes[key] = s
        meter.hold(SpaceMeter.trace_bytes(s))
        if s <= cfg.base_size:
            leaves[key] = base_case_order(c, members)
            return
        best, best_w = None, None
        for wmask in iter_splits(mask, ceil(s / 2)):
            val = value_u(wmask) + value_u(mask ^ wmask) \
                + gamma_masks(c, wmask, mask ^ wmask)
            if best is None or val < best:
                best, best_w = val, wmask
        i, j = key
        build_trace((i + 1, 2 * j), best_w, nodes, sizes, leaves)
        build_trace((i + 1, 2 * j + 1), mask ^ best_w, nodes, sizes, leaves)

    if n == 0:
        ledger.meta["peak_state_bytes"] = 0
        ledger.meta["max_depth"] = 0
        trace = SplitTrace(0, cfg.base_size, {(0, 0): ()}, {(0, 0): 0}, {(0, 0): ()})
        return Solution((), 0), ledger, (trace if want_trace else None)

    total, charge = evaluate(full)
    ledger.oracle_calls = charge

    trace = None
    ordering = None
    if want_trace or not cfg.count_only:
        nodes, sizes, leaves = {}, {}, {}
        build_trace((0, 0), full, nodes, sizes, leaves)
        trace = SplitTrace(n, cfg.base_size, nodes, sizes, leaves)
        ordering = extract_ordering(trace)
        cost = ordering_cost(cm, ordering)
        if cfg.qmf_cfg.mode == "cost_model" and cost != total:
            raise AssertionError("trace ordering cost disagrees with value pass")
        total = cost
    ledger.meta["peak_state_bytes"] = meter.peak
    ledger.meta["max_depth"] = meter.max_depth
    return Solution(ordering, total), ledger, trace


def solve_qdc(inst: BipartiteInstance, cfg: QdcConfig = None):
    """Solve one instance; returns (Solution, CostLedger)."""
    cfg = cfg or QdcConfig()
    sol, ledger, _ = _run(inst, cfg, want_trace=False)
    return sol, ledger


def solve_qdc_with_trace(inst: BipartiteInstance, cfg: QdcConfig = None):
    """Solve and keep the winning-split trace; returns (Solution, CostLedger, SplitTrace)."""
    cfg = cfg or QdcConfig()
    if cfg.count_only:
        raise ValueError("a trace requires reconstruction; unset count_only")
    sol, ledger, trace = _run(inst, cfg, want_trace=True)
    return sol, ledger, trace

"""Cost ledgers: deterministic operation counts attached to solver runs.

Counters only ever increase during a run. Wall-clock time is never recorded
here; ledgers exist so that cost claims can be checked exactly against
closed-form models.
"""

from dataclasses import dataclass, field


@dataclass
class CostLedger:
    algo: str
    recurrence_evals: int = 0
    gamma_evals: int = 0
    oracle_calls: int = 0
    table_reads: int = 0
    nodes: int = 0
    meta: dict = field(default_factory=dict)

    def json_dict(self) -> dict:
        """Emit the fixed per-algorithm JSON schema."""
        if self.algo == "dp":
            return {
                "algo": "dp",
                "n_v": self.meta.get("n_v"),
                "recurrence_evals": self.recurrence_evals,
                "gamma_evals": self.gamma_evals,
            }
        if self.algo == "dc":
            return {"algo": "dc", "nodes": self.nodes, "gamma_evals": self.gamma_evals}
        if self.algo == "qdp":
            return {
                "algo": "qdp",
                "alpha": self.meta.get("alpha"),
                "classical_evals": self.recurrence_evals,
                "oracle_calls": self.oracle_calls,
                "table_reads": self.table_reads,
            }
        if self.algo == "qdc":
            return {"algo": "qdc", "oracle_calls": self.oracle_calls, "nodes": self.nodes}
        if self.algo == "tlcm":
            return {
                "algo": "tlcm",
                "enumerated_side": self.meta.get("enumerated_side"),
                "inner": self.meta.get("inner"),
                "classical_evals": self.recurrence_evals,
                "oracle_calls": self.oracle_calls,
            }
        out = {"algo": self.algo}
        for key, val in (
            ("recurrence_evals", self.recurrence_evals),
            ("gamma_evals", self.gamma_evals),
            ("oracle_calls", self.oracle_calls),
            ("table_reads", self.table_reads),
            ("nodes", self.nodes),
        ):
            if val:
                out[key] = val
        out.update(self.meta)
        return out

"""Command-line front end: solve, gen, bench, analyze.

Exit codes: 0 ok, 2 parse/usage error, 3 size limit, 4 verification
mismatch. The OSCM_SEED environment variable overrides the default seed
wherever --seed is not given explicitly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from time import perf_counter

from .analysis import (balanced_alpha, binary_entropy, fit_exponent_base,
                       fpt_crossover_k, fpt_crossover_k_tight)
from .bigraph import count_two_level_crossings, format_instance, load_instance
from .dc import DcConfig, dc_node_count, solve_dc
from .dp import dp_recurrence_count, dp_table_entries, solve_dp
from .errors import InstanceParseError, NodeBudgetExceeded, SizeLimitError
from .extensions import TlcmConfig, solve_osscm, solve_tlcm
from .generate import GenSpec, random_instance
from .ledger import CostLedger
from .oracle import (orderings_scanned, solve_bruteforce, solve_osscm_bruteforce,
                     solve_tlcm_bruteforce)
from .qdc import QdcConfig, qdc_cost_model, solve_qdc, solve_qdc_with_trace, trace_json_dict
from .qdp import QdpConfig, qdp_cost_model, solve_qdp
from .qmf import QmfConfig

_WALL_CAPS = {"dp": 18, "dc": 11, "qdp": 14, "qdc": 11}


def _resolve_seed(flag_value):
    """Explicit --seed wins; otherwise OSCM_SEED; otherwise 0."""
    if flag_value is not None:
        return flag_value
    env = os.environ.get("OSCM_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"OSCM_SEED must be an integer, got {env!r}")


def _fmt_ordering(ordering):
    if ordering is None:
        return "(none)"
    if not ordering:
        return "(empty)"
    return " ".join(str(v) for v in ordering)


def _solver_configs(args, seed):
    qmf_cfg = QmfConfig(mode=args.qmf_mode, call_constant=args.call_constant,
                        seed=seed)
    return {
        "dc": DcConfig(base_size=args.base_size, count_only=args.count_only,
                       node_budget=args.node_budget),
        "qdp": QdpConfig(alpha=args.alpha, qmf_cfg=qmf_cfg),
        "qdc": QdcConfig(base_size=args.base_size, count_only=args.count_only,
                         node_budget=args.node_budget, qmf_cfg=qmf_cfg),
    }


def _verify_line(reported, brute_crossings):
    if reported == brute_crossings:
        print("verify: ok")
        return 0
    print(f"verify: MISMATCH (solver {reported}, bruteforce {brute_crossings})")
    return 4


def cmd_solve(args) -> int:
    inst = load_instance(args.input)
    seed = _resolve_seed(args.seed)

    if args.objective == "tlcm":
        if args.trace_out:
            print("error: --trace-out applies to the one-sided qdc solver only",
                  file=sys.stderr)
            return 2
        if args.algo == "bruteforce":
            u_ord, sol = solve_tlcm_bruteforce(inst)
            ledger = CostLedger(algo="bruteforce",
                                meta={"orderings_scanned":
                                      orderings_scanned(inst.n_u) *
                                      orderings_scanned(inst.n_v)})
        elif args.algo in ("dp", "qdp"):
            qmf_cfg = QmfConfig(call_constant=args.call_constant, seed=seed)
            cfg = TlcmConfig(inner_algo=args.algo, qmf_cfg=qmf_cfg,
                             qdp=QdpConfig(alpha=args.alpha, qmf_cfg=qmf_cfg))
            u_ord, sol, ledger = solve_tlcm(inst, cfg)
        else:
            print("error: the two-layer objective supports dp, qdp, or bruteforce",
                  file=sys.stderr)
            return 2
        print(f"crossings: {sol.crossings}")
        print(f"u-ordering: {_fmt_ordering(u_ord)}")
        print(f"ordering: {_fmt_ordering(sol.ordering)}")
        print(f"ledger: {json.dumps(ledger.json_dict())}")
        if args.verify:
            try:
                bu, bsol = solve_tlcm_bruteforce(inst)
            except SizeLimitError:
                print("verify: skipped (beyond oracle limits)")
                return 0
            recount = count_two_level_crossings(inst, u_ord, sol.ordering)
            if recount != sol.crossings:
                print(f"verify: MISMATCH (reported {sol.crossings}, recount {recount})")
                return 4
            return _verify_line(sol.crossings, bsol.crossings)
        return 0

    work = inst
    if args.objective == "oscm" and inst.n_colors > 1:
        work = inst.uncolored()  # ValueError (exit 2) when colors share an edge

    cfgs = _solver_configs(args, seed)
    if args.trace_out and args.algo != "qdc":
        print("error: --trace-out requires --algo qdc", file=sys.stderr)
        return 2

    trace = None
    if args.algo == "qdc" and args.trace_out:
        sol, ledger, trace = solve_qdc_with_trace(work, cfgs["qdc"])
    else:
        sol, ledger = solve_osscm(work, args.algo, cfgs.get(args.algo))
    ledger.meta["objective"] = args.objective

    print(f"crossings: {sol.crossings}")
    print(f"ordering: {_fmt_ordering(sol.ordering)}")
    print(f"ledger: {json.dumps(ledger.json_dict())}")
    if trace is not None:
        Path(args.trace_out).write_text(json.dumps(trace_json_dict(trace), indent=2))
        print(f"trace: {args.trace_out}")

    if args.verify:
        brute_fn = solve_bruteforce if args.objective == "oscm" else solve_osscm_bruteforce
        try:
            brute = brute_fn(work)
        except SizeLimitError:
            print("verify: skipped (beyond oracle limits)")
            return 0
        return _verify_line(sol.crossings, brute.crossings)
    return 0


def cmd_gen(args) -> int:
    seed = _resolve_seed(args.seed)
    spec = GenSpec(args.n_u, args.n_v, args.edge_prob, args.colors, seed)
    text = format_instance(random_instance(spec))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _bench_rows(args, seed):
    rows = []
    qmf_cfg = QmfConfig(call_constant=args.call_constant, seed=seed)
    qdp_cfg = QdpConfig(alpha=args.alpha, qmf_cfg=qmf_cfg)
    qdc_cfg = QdcConfig(base_size=args.base_size, count_only=True, qmf_cfg=qmf_cfg)
    dc_cfg = DcConfig(base_size=args.base_size, count_only=True)
    for n in range(args.n_min, args.n_max + 1):
        if args.algo == "dp":
            classical, oracle = dp_recurrence_count(n), 0
        elif args.algo == "dc":
            classical, oracle = dc_node_count(n, args.base_size), 0
        elif args.algo == "qdp":
            classical, oracle = qdp_cost_model(n, qdp_cfg)
        else:
            classical, oracle = 0, qdc_cost_model(n, qdc_cfg)

        wall = 0.0
        if n <= _WALL_CAPS[args.algo]:
            inst = random_instance(GenSpec(5, n, 0.4, 1, seed + n))
            start = perf_counter()
            if args.algo == "dp":
                solve_dp(inst)
            elif args.algo == "dc":
                solve_dc(inst, dc_cfg)
            elif args.algo == "qdp":
                solve_qdp(inst, qdp_cfg)
            else:
                solve_qdc(inst, qdc_cfg)
            wall = (perf_counter() - start) * 1000.0
        rows.append((args.algo, n, classical, oracle, wall))
    rows.sort(key=lambda r: (r[0], r[1]))
    return rows


def cmd_bench(args) -> int:
    if args.n_min < 1 or args.n_min > args.n_max:
        raise ValueError("need 1 <= n-min <= n-max")
    if args.n_max > 64:
        raise SizeLimitError("bench range exceeds the n_v <= 64 solver limit")
    seed = _resolve_seed(args.seed)
    lines = ["algo,n,classical_cost,oracle_calls,wall_ms"]
    for algo, n, classical, oracle, wall in _bench_rows(args, seed):
        lines.append(f"{algo},{n},{classical},{oracle},{wall:.3f}")
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _analyze_curves(call_constant):
    qdp_cfg = QdpConfig(qmf_cfg=QmfConfig(call_constant=call_constant))
    qdc_cfg = QdcConfig(qmf_cfg=QmfConfig(call_constant=call_constant))
    return [
        ("dp_table_entries", "dp table entries (space curve)", range(12, 25),
         dp_table_entries),
        ("dp_recurrences", "dp recurrence evals (time counter)", range(12, 25),
         dp_recurrence_count),
        ("dc_nodes", "dc recursion nodes, base_size=2", range(8, 21),
         lambda n: dc_node_count(n, 2)),
        ("qdp_total", "qdp classical+oracle total", range(16, 41),
         lambda n: sum(qdp_cost_model(n, qdp_cfg))),
        ("qdc_oracle", "qdc oracle calls, base_size=2", range(8, 33),
         lambda n: qdc_cost_model(n, qdc_cfg)),
    ]


def cmd_analyze(args) -> int:
    alpha_star = balanced_alpha()
    base = 2.0 ** binary_entropy((1.0 - alpha_star) / 4.0)
    print(f"balanced alpha (bisection root): {alpha_star:.12f}")
    print(f"hybrid growth base 2^H((1-a)/4): {base:.6f}")
    print(f"entropy H(alpha*):               {binary_entropy(alpha_star):.6f}")
    print(f"fpt crossover thresholds (c={args.call_constant:g}):")
    print("      n        loose k        tight k")
    for n in args.fpt_n:
        loose = fpt_crossover_k(n, args.call_constant)
        tight = fpt_crossover_k_tight(n, args.call_constant)
        print(f"  {n:5d}  {loose:13d}  {tight:13d}")
    print("growth fits (least-squares base of b^n):")
    curves = _analyze_curves(args.call_constant)
    csv_lines = ["curve,n,cost"]
    for name, label, ns, fn in curves:
        costs = [fn(n) for n in ns]
        fit = fit_exponent_base(list(ns), costs)
        print(f"  {label}, n {ns.start}..{ns.stop - 1}: {fit:.6f}")
        csv_lines.extend(f"{name},{n},{cost}" for n, cost in zip(ns, costs))
    if args.csv:
        Path(args.csv).write_text("\n".join(csv_lines) + "\n")
        print(f"csv: {args.csv}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscmlab",
        description="Exact one-sided crossing minimization lab with "
                    "cost-ledgered classical and simulated quantum solvers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve one instance file")
    p_solve.add_argument("--input", required=True, help="instance file path")
    p_solve.add_argument("--algo", default="dp",
                         choices=["bruteforce", "dp", "dc", "qdp", "qdc"])
    p_solve.add_argument("--objective", default="oscm",
                         choices=["oscm", "osscm", "tlcm"])
    p_solve.add_argument("--verify", action="store_true",
                         help="cross-check against brute force when feasible")
    p_solve.add_argument("--trace-out", help="write the qdc split trace as JSON")
    p_solve.add_argument("--alpha", type=float, default=0.055362)
    p_solve.add_argument("--base-size", type=int, default=2)
    p_solve.add_argument("--count-only", action="store_true")
    p_solve.add_argument("--node-budget", type=int, default=None)
    p_solve.add_argument("--call-constant", type=float, default=1.0)
    p_solve.add_argument("--qmf-mode", default="cost_model",
                         choices=["cost_model", "state_vector"])
    p_solve.add_argument("--seed", type=int, default=None)
    p_solve.set_defaults(func=cmd_solve)

    p_gen = sub.add_parser("gen", help="generate a random instance")
    p_gen.add_argument("--n-u", type=int, required=True)
    p_gen.add_argument("--n-v", type=int, required=True)
    p_gen.add_argument("--edge-prob", type=float, default=0.5)
    p_gen.add_argument("--colors", type=int, default=1)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--out", help="output path (default stdout)")
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="emit cost/wall CSV for one solver")
    p_bench.add_argument("--algo", required=True, choices=["dp", "dc", "qdp", "qdc"])
    p_bench.add_argument("--n-min", type=int, default=4)
    p_bench.add_argument("--n-max", type=int, default=16)
    p_bench.add_argument("--alpha", type=float, default=0.055362)
    p_bench.add_argument("--base-size", type=int, default=2)
    p_bench.add_argument("--call-constant", type=float, default=1.0)
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--out", help="output path (default stdout)")
    p_bench.set_defaults(func=cmd_bench)

    p_an = sub.add_parser("analyze", help="report complexity constants and fits")
    p_an.add_argument("--call-constant", type=float, default=1.0)
    p_an.add_argument("--fpt-n", type=int, nargs="*", default=[10, 20, 50, 100])
    p_an.add_argument("--csv", help="also write the fitted (n, cost) curves")
    p_an.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NodeBudgetExceeded as exc:
        print(f"error: node budget exceeded after {exc.ledger.nodes} nodes "
              f"(peak state {exc.peak_state_bytes} bytes, depth {exc.max_depth})",
              file=sys.stderr)
        return 3
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

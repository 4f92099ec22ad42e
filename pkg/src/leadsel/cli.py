"""Command-line interface.

Commands: centrality, select, pairs, verify, simulate, generate. Reports are
JSON (default) or RFC-4180 CSV; numbers are serialised losslessly (shortest
round-trip repr). The payload of a report is byte-identical across runs for
identical inputs and seed; timing lives outside the payload.

Exit codes: 0 success, 2 input error, 3 evaluation budget exceeded,
4 identity violation, 5 stability violation.

LEADSEL_THREADS caps internal parallelism (default: available cores).
"""

import argparse
import csv
import io
import json
import sys
import time

from . import __version__
from .centrality import centrality_report
from .graphs import (
    Gain,
    GraphError,
    LeaderSet,
    NOISE_FREE,
    Graph,
    complete,
    cycle,
    erdos_renyi,
    is_canonical_cycle,
    is_canonical_path,
    parse_edge_list,
    path,
    serialize_edge_list,
)
from .kernels import SpectralError, compute_kernels, oracle_error_gain, oracle_error_noise_free
from .selection import (
    BudgetError,
    closed_form_cycle,
    closed_form_cycle_two,
    closed_form_path_two,
    exhaustive_select,
    greedy_select,
    pairwise_sweep,
    worker_count,
)
from .simulate import SimConfig, StabilityError, simulate
from .verify import DEFAULT_K_VALUES, verify_graph, verify_random_suite, verify_small_suite

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_IDENTITY = 4
EXIT_STABILITY = 5

SCHEMA_VERSION = "1"


def _load_graph(path_arg) -> Graph:
    try:
        with open(path_arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path_arg}: {exc}") from exc
    return parse_edge_list(text)


def _mode_from(args):
    if args.mode == "gain":
        if args.k is None:
            raise GraphError("--mode gain requires --k")
        return Gain(args.k)
    return NOISE_FREE


def _shift(node, base):
    return int(node) + base


def _emit(args, command, parameters, graph, payload, csv_rows, started):
    """Assemble the report and write it in the requested format."""
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        for row in csv_rows:
            writer.writerow(row)
        text = buf.getvalue()
    else:
        report = {
            "schema_version": SCHEMA_VERSION,
            "tool": "leadsel",
            "tool_version": __version__,
            "command": command,
            "parameters": parameters,
            "graph": None if graph is None else {"n": graph.n, "edge_count": graph.edge_count},
            "payload": payload,
            "timing_seconds": time.perf_counter() - started,
        }
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_centrality(args, started):
    g = _load_graph(args.graph)
    kernels = compute_kernels(g)
    rep = centrality_report(kernels, args.sigma)
    base = args.index_base
    nodes = [
        {
            "node": _shift(i, base),
            "info_centrality": float(rep.info_centrality[i]),
            "lplus_diag": float(kernels.lplus[i, i]),
            "certainty_inverse": float(rep.certainty_inverse[i]),
        }
        for i in range(g.n)
    ]
    payload = {"kirchhoff_index": kernels.kirchhoff, "nodes": nodes}
    if args.full:
        payload["resistance"] = rep.resistance.tolist()
        payload["biharmonic"] = rep.biharmonic.tolist()
    csv_rows = [["node", "info_centrality", "lplus_diag", "certainty_inverse"]]
    csv_rows += [
        [n["node"], repr(n["info_centrality"]), repr(n["lplus_diag"]), repr(n["certainty_inverse"])]
        for n in nodes
    ]
    params = {"graph": args.graph, "sigma": args.sigma, "full": args.full, "index_base": base}
    _emit(args, "centrality", params, g, payload, csv_rows, started)
    return EXIT_OK


def _closed_form(args, g, mode):
    if args.topology is None:
        raise GraphError("--method closed-form requires --topology {cycle,path}")
    if args.topology == "cycle":
        if not is_canonical_cycle(g):
            raise GraphError("graph is not the canonical unit-weight cycle 0-1-...-0")
        if args.m == 2:
            return closed_form_cycle_two(g.n, mode, sigma=args.sigma)
        if not isinstance(mode, type(NOISE_FREE)):
            raise GraphError("cycle closed form for m != 2 is defined for noise-free leaders")
        return closed_form_cycle(g.n, args.m, sigma=args.sigma)
    if not is_canonical_path(g):
        raise GraphError("graph is not the canonical unit-weight path 0-1-...-(n-1)")
    if args.m != 2 or not isinstance(mode, type(NOISE_FREE)):
        raise GraphError("path closed form is defined for m = 2 noise-free leaders")
    return closed_form_path_two(g.n, sigma=args.sigma)


def _cmd_select(args, started):
    g = _load_graph(args.graph)
    mode = _mode_from(args)
    if args.method == "exhaustive":
        result = exhaustive_select(
            g, args.m, mode, sigma=args.sigma, budget=args.budget, threads=worker_count(args.threads)
        )
    elif args.method == "greedy":
        result = greedy_select(g, args.m, mode, sigma=args.sigma)
    else:
        result = _closed_form(args, g, mode)
    base = args.index_base
    sets = [[_shift(v, base) for v in s] for s in result.optimal_sets]
    payload = {
        "method": result.method,
        "m": result.m,
        "mode": args.mode,
        "k": args.k,
        "optimal_sets": sets,
        "rho": result.objective.rho,
        "total_error": result.objective.total_error,
        "evaluated_count": result.evaluated_count,
        "notes": list(result.notes),
    }
    csv_rows = [["optimal_set", "rho", "total_error"]]
    csv_rows += [
        [" ".join(str(v) for v in s), repr(result.objective.rho), repr(result.objective.total_error)]
        for s in sets
    ]
    params = {
        "graph": args.graph,
        "m": args.m,
        "mode": args.mode,
        "k": args.k,
        "method": args.method,
        "topology": args.topology,
        "sigma": args.sigma,
        "budget": args.budget,
        "index_base": base,
    }
    _emit(args, "select", params, g, payload, csv_rows, started)
    return EXIT_OK


def _read_pair_list(path_arg):
    pairs = []
    with open(path_arg, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            tokens = line.split()
            if len(tokens) != 2:
                raise GraphError(f"pair list line {lineno}: expected 'u v'")
            try:
                pairs.append((int(tokens[0]), int(tokens[1])))
            except ValueError:
                raise GraphError(f"pair list line {lineno}: node ids must be integers") from None
    if not pairs:
        raise GraphError("pair list is empty")
    return pairs


def _cmd_pairs(args, started):
    g = _load_graph(args.graph)
    pairs = _read_pair_list(args.pair_list) if args.pair_list else None
    sweep = pairwise_sweep(g, pairs, budget=args.budget)
    counts, edges = sweep.histogram(args.bins)
    base = args.index_base
    rows = [
        {"i": _shift(i, base), "j": _shift(j, base), "rho": float(r)}
        for (i, j), r in zip(sweep.pairs, sweep.rho)
    ]
    payload = {
        "pairs": rows,
        "histogram": {"counts": counts.tolist(), "bin_edges": edges.tolist()},
        "max_rho": float(sweep.rho.max()),
        "argmax_pairs": [[_shift(i, base), _shift(j, base)] for i, j in sweep.argmax_pairs()],
    }
    csv_rows = [["i", "j", "rho"]] + [[r["i"], r["j"], repr(r["rho"])] for r in rows]
    params = {
        "graph": args.graph,
        "bins": args.bins,
        "pair_list": args.pair_list,
        "budget": args.budget,
        "index_base": base,
    }
    _emit(args, "pairs", params, g, payload, csv_rows, started)
    return EXIT_OK


def _cmd_verify(args, started):
    k_values = tuple(float(t) for t in args.k_values.split(",")) if args.k_values else DEFAULT_K_VALUES
    if args.graph:
        g = _load_graph(args.graph)
        report = verify_graph(g, label=args.graph, m_max=args.m_max, tol=args.tol, k_values=k_values)
        graph = g
    elif args.suite == "small":
        report = verify_small_suite(tol=args.tol, k_values=k_values)
        graph = None
    elif args.suite == "random":
        report = verify_random_suite(
            count=args.count, n_max=args.n_max, seed=args.seed, tol=args.tol, k_values=k_values
        )
        graph = None
    else:
        raise GraphError("verify needs a graph file or --suite {small,random}")
    payload = {
        "checks": report.checks,
        "max_rel_dev_noise_free": report.max_rel_dev_noise_free,
        "max_rel_dev_gain": report.max_rel_dev_gain,
        "tolerance": report.tolerance,
        "violations": [
            {"graph": v.graph_label, "set": list(v.members), "k": v.k, "rel_dev": v.rel_dev}
            for v in report.violations
        ],
    }
    csv_rows = [["checks", "max_rel_dev_noise_free", "max_rel_dev_gain", "violations"]]
    csv_rows += [
        [report.checks, repr(report.max_rel_dev_noise_free), repr(report.max_rel_dev_gain), len(report.violations)]
    ]
    params = {
        "graph": args.graph,
        "suite": args.suite,
        "count": args.count,
        "n_max": args.n_max,
        "seed": args.seed,
        "tol": args.tol,
        "m_max": args.m_max,
        "k_values": list(k_values),
    }
    _emit(args, "verify", params, graph, payload, csv_rows, started)
    if report.violations:
        first = report.violations[0]
        print(
            f"identity violation: graph={first.graph_label} set={first.members} "
            f"k={first.k} rel_dev={first.rel_dev:.3e}",
            file=sys.stderr,
        )
        return EXIT_IDENTITY
    return EXIT_OK


def _cmd_simulate(args, started):
    g = _load_graph(args.graph)
    try:
        members = tuple(int(t) for t in args.leaders.split(","))
    except ValueError:
        raise GraphError(f"--leaders must be comma-separated node ids, got {args.leaders!r}") from None
    mode = _mode_from(args)
    leaders = LeaderSet(members, mode)
    cfg = SimConfig(
        dt=args.dt, steps=args.steps, burn_in=args.burn_in, sigma=args.sigma, seed=args.seed, mu=args.mu
    )
    result = simulate(g, leaders, cfg)
    if isinstance(mode, Gain):
        analytic_nodes = oracle_error_gain(g, leaders, args.sigma).per_node_variance
    else:
        analytic_nodes = oracle_error_noise_free(g, leaders, args.sigma).per_node_variance
    base = args.index_base
    nodes = [
        {
            "node": _shift(i, base),
            "empirical_variance": float(result.empirical_variance[i]),
            "analytic_variance": float(analytic_nodes[i]),
        }
        for i in range(g.n)
    ]
    gap = abs(result.empirical_total_error - result.analytic_total_error) / result.analytic_total_error
    payload = {
        "empirical_total_error": result.empirical_total_error,
        "analytic_total_error": result.analytic_total_error,
        "relative_gap": gap,
        "sample_count": result.sample_count,
        "seed": result.seed_used,
        "nodes": nodes,
    }
    csv_rows = [["node", "empirical_variance", "analytic_variance"]]
    csv_rows += [
        [n["node"], repr(n["empirical_variance"]), repr(n["analytic_variance"])] for n in nodes
    ]
    params = {
        "graph": args.graph,
        "leaders": args.leaders,
        "mode": args.mode,
        "k": args.k,
        "sigma": args.sigma,
        "dt": args.dt,
        "steps": args.steps,
        "burn_in": args.burn_in,
        "seed": args.seed,
        "mu": args.mu,
        "index_base": base,
    }
    _emit(args, "simulate", params, g, payload, csv_rows, started)
    return EXIT_OK


def _cmd_generate(args, started):
    if args.kind == "cycle":
        g = cycle(args.n)
    elif args.kind == "path":
        g = path(args.n)
    elif args.kind == "complete":
        g = complete(args.n)
    else:
        if args.p is None:
            raise GraphError("erdos-renyi requires --p")
        g = erdos_renyi(args.n, args.p, args.seed)
    text = serialize_edge_list(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_common(sub, graph_required=True):
    if graph_required:
        sub.add_argument("graph", help="edge-list file")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--out", default=None, help="write the report to a file instead of stdout")
    sub.add_argument("--index-base", type=int, choices=(0, 1), default=0,
                     help="node-id base used in output (input files are always 0-indexed)")
    sub.add_argument("--sigma", type=float, default=1.0, help="noise intensity (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leadsel",
        description="Joint centrality and optimal leader selection for noisy tracking networks",
    )
    parser.add_argument("--version", action="version", version=f"leadsel {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("centrality", help="per-node centrality measures")
    _add_common(p)
    p.add_argument("--full", action="store_true", help="include resistance and biharmonic matrices")
    p.set_defaults(func=_cmd_centrality)

    p = subs.add_parser("select", help="optimal leader selection")
    _add_common(p)
    p.add_argument("--m", type=int, required=True, help="number of leaders")
    p.add_argument("--mode", choices=("noise-free", "gain"), default="noise-free")
    p.add_argument("--k", type=float, default=None, help="leader gain (gain mode)")
    p.add_argument("--method", choices=("exhaustive", "greedy", "closed-form"), default="exhaustive")
    p.add_argument("--topology", choices=("cycle", "path"), default=None,
                   help="asserted topology for --method closed-form")
    p.add_argument("--budget", type=int, default=10_000_000, help="max subsets to evaluate")
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: LEADSEL_THREADS or all cores)")
    p.set_defaults(func=_cmd_select)

    p = subs.add_parser("pairs", help="two-leader joint centrality for every pair")
    _add_common(p)
    p.add_argument("--bins", type=int, default=10, help="histogram bin count")
    p.add_argument("--pair-list", default=None, help="file of 'u v' lines restricting the sweep")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.set_defaults(func=_cmd_pairs)

    p = subs.add_parser("verify", help="check rho-implied errors against the trace oracles")
    p.add_argument("graph", nargs="?", default=None, help="edge-list file")
    p.add_argument("--suite", choices=("small", "random"), default=None)
    p.add_argument("--count", type=int, default=20, help="random-suite graph count")
    p.add_argument("--n-max", type=int, default=10, help="random-suite max node count")
    p.add_argument("--seed", type=int, default=1, help="random-suite seed")
    p.add_argument("--tol", type=float, default=1e-8, help="relative tolerance")
    p.add_argument("--m-max", type=int, default=3, help="largest leader-set size checked")
    p.add_argument("--k-values", default=None, help="comma-separated gains (default 0.1,1,10,100)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.add_argument("--index-base", type=int, choices=(0, 1), default=0)
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("simulate", help="Euler-Maruyama check of the analytic error")
    _add_common(p)
    p.add_argument("--leaders", required=True, help="comma-separated leader node ids")
    p.add_argument("--mode", choices=("noise-free", "gain"), default="noise-free")
    p.add_argument("--k", type=float, default=None)
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--steps", type=int, default=2_000_000)
    p.add_argument("--burn-in", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mu", type=float, default=0.0, help="external signal value")
    p.set_defaults(func=_cmd_simulate)

    p = subs.add_parser("generate", help="emit a canonical graph as an edge-list file")
    p.add_argument("kind", choices=("cycle", "path", "complete", "erdos-renyi"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None, help="edge probability (erdos-renyi)")
    p.add_argument("--seed", type=int, default=0, help="seed (erdos-renyi)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_generate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        return args.func(args, started)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except StabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STABILITY
    except (GraphError, SpectralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

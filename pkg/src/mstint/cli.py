"""Command-line surface.

Every instance-taking command reads the instance from a file path argument
or from standard input when the path is `-`.  Exit codes: 0 ok,
1 guarantee violation, 2 input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from .budget import InfeasibleError, budget_approximate, budget_approximate_fast
from .bench import render_tsv, run_bench
from .eps import NoFiniteCutError, eps_increase
from .generators import gen_bad_example, gen_random
from .graph import Graph, ParseError, parse_instance_full, serialize_instance
from .mst import DisconnectedGraphError, mst
from .oracle import (
    InfeasibleOracleError,
    OracleSizeError,
    oracle_budget,
    oracle_eps,
    oracle_profit,
)
from .profit import profit_approximate
from .protection import (
    CandidateInvariantError,
    ProtectionInstance,
    UncoverableCutError,
    protect,
)
from .quantities import (
    QuantityParseError,
    format_quantity,
    parse_quantity,
)
from .relaxation import build_cut_sequence, certify
from .solution import InterdictionSolution, solution_record

EXIT_OK = 0
EXIT_GUARANTEE = 1
EXIT_INPUT = 2


class InputError(Exception):
    """Anything wrong with arguments, files, or instance contents."""


def _read_instance(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
    try:
        return parse_instance_full(text)
    except ParseError as exc:
        raise InputError(str(exc)) from exc


def _parse_amount(token: str, what: str) -> int:
    try:
        value = parse_quantity(token)
    except QuantityParseError as exc:
        raise InputError(f"bad {what}: {exc}") from exc
    if value <= 0:
        raise InputError(f"{what} must be positive")
    return value


def _emit_solution(sol: InterdictionSolution, as_json: bool) -> None:
    record = solution_record(sol)
    if as_json:
        print(json.dumps(record, sort_keys=True))
        return
    print("edges:", " ".join(map(str, record["edges"])) or "(none)")
    print("cost:", record["cost"])
    print("profit:", record["profit"])
    for cut in record["cuts"]:
        print(
            "cut: side",
            ",".join(map(str, cut["side_vertices"])),
            "threshold",
            cut["threshold"],
            "edges",
            ",".join(map(str, cut["edge_indices"])) or "(none)",
        )


def _cmd_mst(args) -> int:
    g, _ = _read_instance(args.instance)
    forest = mst(g)
    record = {
        "weight": str(forest.weight),
        "edges": sorted(forest.edges),
    }
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        print("weight:", record["weight"])
        print("edges:", " ".join(map(str, record["edges"])) or "(none)")
    return EXIT_OK


def _cmd_eps(args) -> int:
    g, _ = _read_instance(args.instance)
    _emit_solution(eps_increase(g), args.json)
    return EXIT_OK


def _cmd_budget(args) -> int:
    g, _ = _read_instance(args.instance)
    delta = _parse_amount(args.delta, "delta")
    solver = budget_approximate_fast if args.fast else budget_approximate
    _emit_solution(solver(g, delta), args.json)
    return EXIT_OK


def _cmd_profit(args) -> int:
    g, _ = _read_instance(args.instance)
    budget = _parse_amount(args.budget, "budget")
    _emit_solution(profit_approximate(g, budget), args.json)
    return EXIT_OK


def _cmd_protect(args) -> int:
    g, candidates = _read_instance(args.instance)
    if not candidates:
        raise InputError("instance has no protect section")
    try:
        inst = ProtectionInstance(g, candidates)
    except CandidateInvariantError as exc:
        raise InputError(str(exc)) from exc
    before = eps_increase(g).cost
    chosen, listing = protect(inst)
    after = eps_increase(inst.augmented(chosen)).cost
    record = {
        "chosen_candidates": sorted(chosen),
        "build_cost": format_quantity(
            sum(candidates[i].build_cost for i in chosen)
        ),
        "eps_cost_before": format_quantity(before),
        "eps_cost_after": format_quantity(after),
        "listing_complete": listing.complete,
        "n_cuts": len(listing.cuts),
    }
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for key in sorted(record):
            print(f"{key}:", record[key])
    if listing.complete and not after > before:
        print("guarantee violated: protection did not raise the cost", file=sys.stderr)
        return EXIT_GUARANTEE
    return EXIT_OK


def _parse_edge_list(token: str, g: Graph) -> frozenset[int]:
    try:
        indices = frozenset(int(part) for part in token.split(",") if part)
    except ValueError as exc:
        raise InputError(f"bad edge list: {token!r}") from exc
    for i in indices:
        if not 0 <= i < g.n_edges:
            raise InputError(f"edge index out of range: {i}")
    return indices


def _cmd_certify(args) -> int:
    g, _ = _read_instance(args.instance)
    removed = _parse_edge_list(args.edges, g)
    cert = build_cut_sequence(g, removed)
    report = certify(g, removed, cert)
    record = dict(report)
    record["cost_sum"] = format_quantity(cert.cost_sum)
    record["profit"] = str(cert.profit_value)
    record["n_cuts"] = len(cert.cuts)
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for key in sorted(record):
            print(f"{key}:", record[key])
    return EXIT_OK if report["ok"] else EXIT_GUARANTEE


def _cmd_oracle_eps(args) -> int:
    g, _ = _read_instance(args.instance)
    _emit_solution(oracle_eps(g), args.json)
    return EXIT_OK


def _cmd_oracle_budget(args) -> int:
    g, _ = _read_instance(args.instance)
    delta = _parse_amount(args.delta, "delta")
    _emit_solution(oracle_budget(g, delta), args.json)
    return EXIT_OK


def _cmd_oracle_profit(args) -> int:
    g, _ = _read_instance(args.instance)
    budget = _parse_amount(args.budget, "budget")
    _emit_solution(oracle_profit(g, budget, finite_only=args.finite_only), args.json)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.family == "random":
        g = gen_random(args.seed, args.n, args.m, args.max_weight, args.max_cost)
        sys.stdout.write(serialize_instance(g))
    else:
        g, budget = gen_bad_example(args.heavy_weight, args.removals, args.components)
        sys.stdout.write(f"# recommended budget: {format_quantity(budget)}\n")
        sys.stdout.write(serialize_instance(g))
    return EXIT_OK


def _cmd_bench(args) -> int:
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"bad config: {exc}") from exc
    try:
        rows, ok = run_bench(config, jobs=args.jobs)
    except (ValueError, KeyError) as exc:
        raise InputError(f"bad config: {exc}") from exc
    sys.stdout.write(render_tsv(rows))
    return EXIT_OK if ok else EXIT_GUARANTEE


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mstint", description="MST interdiction toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_cmd(name: str, func, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("instance", help="instance file path, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    instance_cmd("mst", _cmd_mst, "minimum spanning tree of the instance")
    instance_cmd("eps-increase", _cmd_eps, "exact minimum-cost strict MST increase")
    p = instance_cmd("budget", _cmd_budget, "approximate min-cost increase by delta")
    p.add_argument("--delta", required=True, help="required MST weight increase")
    p.add_argument("--fast", action="store_true", help="reuse cuts computed on G")
    p = instance_cmd("profit", _cmd_profit, "approximate max increase within budget")
    p.add_argument("--budget", required=True, help="hard removal budget")
    instance_cmd("protect", _cmd_protect, "greedy cover of the optimal cuts")
    p = instance_cmd("certify", _cmd_certify, "certify the cut sequence for a solution")
    p.add_argument("--edges", required=True, help="comma-separated removed edge indices")
    instance_cmd("oracle-eps", _cmd_oracle_eps, "brute-force minimum strict increase")
    p = instance_cmd("oracle-budget", _cmd_oracle_budget, "brute-force budget optimum")
    p.add_argument("--delta", required=True)
    p = instance_cmd("oracle-profit", _cmd_oracle_profit, "brute-force profit optimum")
    p.add_argument("--budget", required=True)
    p.add_argument("--finite-only", action="store_true", help="ignore disconnecting sets")

    p = sub.add_parser("gen", help="write a generated instance to stdout")
    gen_sub = p.add_subparsers(dest="family", required=True)
    pr = gen_sub.add_parser("random")
    pr.add_argument("--seed", type=int, required=True)
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--m", type=int, required=True)
    pr.add_argument("--max-weight", type=int, default=100)
    pr.add_argument("--max-cost", type=int, default=100)
    pr.set_defaults(func=_cmd_gen)
    pb = gen_sub.add_parser("bad")
    pb.add_argument("--heavy-weight", type=int, default=100)
    pb.add_argument("--removals", type=int, default=4)
    pb.add_argument("--components", type=int, default=5)
    pb.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="run the benchmark/certification suites")
    p.add_argument("--config", required=True, help="JSON suite configuration")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (
        ParseError,
        QuantityParseError,
        DisconnectedGraphError,
        NoFiniteCutError,
        InfeasibleError,
        InfeasibleOracleError,
        UncoverableCutError,
        OracleSizeError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

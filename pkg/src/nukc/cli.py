"""Command line front end: gen, solve, check, bench.

Exit codes follow the feasibility verdict: 0 for a solution (or a successful
gen/check/bench run), 2 for infeasible (or a failed check), 1 for usage and
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict
from time import perf_counter

from .generators import (
    graph_instance,
    planted_instance,
    planted_kcenter_instance,
    uniform_instance,
)
from .model import MetricError, verify_solution
from .outer import optimize, solve_feasibility
from .serialize import (
    dump_json,
    instance_from_json,
    instance_to_json,
    load_json,
)
from .wellsep import SolverConfig

EXIT_SOLUTION = 0
EXIT_ERROR = 1
EXIT_INFEASIBLE = 2


def _generate(kind: str, seed: int, args: argparse.Namespace):
    """Build (instance, truth-or-None) for a generator kind."""
    if kind == "planted":
        return planted_instance(
            seed,
            clusters=args.clusters,
            points_per_cluster=args.points_per_cluster,
            outliers=args.outliers,
            r1=args.r1,
            r2=args.r2,
        )
    if kind == "kcenter":
        return planted_kcenter_instance(
            seed,
            clusters=args.clusters,
            points_per_cluster=args.points_per_cluster,
            outliers=args.outliers,
            r1=args.r1,
        )
    if kind == "uniform":
        return (
            uniform_instance(seed, args.n, args.r1, args.r2, args.k1, args.k2, args.m),
            None,
        )
    if kind == "graph":
        return (
            graph_instance(seed, args.n, args.k1, args.k2, args.m),
            None,
        )
    raise ValueError(f"unknown generator kind {kind!r}")


def _cmd_gen(args: argparse.Namespace) -> int:
    instance, truth = _generate(args.kind, args.seed, args)
    data = instance_to_json(instance)
    if truth is not None:
        data["planted"] = asdict(truth)
    dump_json(data, args.out)
    return EXIT_SOLUTION


def _solver_config(args: argparse.Namespace) -> SolverConfig:
    return SolverConfig(
        max_iters=args.max_iters,
        eps=args.eps,
        shortcuts=not getattr(args, "no_shortcuts", False),
    )


def _cmd_solve(args: argparse.Namespace) -> int:
    instance = instance_from_json(load_json(args.instance))
    cfg = _solver_config(args)
    if args.optimize:
        opt = optimize(instance, cfg)
        if opt.solution is None:
            dump_json({"status": "infeasible"}, args.out)
            return EXIT_INFEASIBLE
        ok, count = verify_solution(instance, opt.solution, opt.solution.dilation)
        data = {
            "status": "solution",
            "dilation": opt.solution.dilation,
            "centers1": list(opt.solution.centers1),
            "centers2": list(opt.solution.centers2),
            "covered_count": count,
            "rho_star": opt.rho_star,
        }
        if args.trace:
            for rho, status in opt.probes:
                print(f"trace: rho={rho:.6g} -> {status}", file=sys.stderr)
        dump_json(data, args.out)
        return EXIT_SOLUTION

    work = instance if args.rho == 1.0 else instance.scaled(args.rho)
    result = solve_feasibility(work, cfg)
    if args.trace:
        print(
            f"trace: method={result.method} case={result.case or '-'} "
            f"iterations={result.iterations} cuts={len(result.cuts)}",
            file=sys.stderr,
        )
        for entry in result.case_log:
            print(f"trace: {entry}", file=sys.stderr)
    data = result.to_json()
    if result.status == "solution" and args.rho != 1.0:
        # Report the dilation relative to the original radii.
        data["dilation"] = result.solution.dilation * args.rho
    dump_json(data, args.out)
    return EXIT_SOLUTION if result.status == "solution" else EXIT_INFEASIBLE


def _cmd_check(args: argparse.Namespace) -> int:
    from .serialize import solution_from_json

    instance = instance_from_json(load_json(args.instance))
    record = solution_from_json(load_json(args.solution))
    if record.status == "infeasible":
        print("infeasible claim: nothing to verify")
        return EXIT_SOLUTION
    ok, count = verify_solution(instance, record.solution, record.solution.dilation)
    if not ok:
        print(f"invalid: covers {count} < m={instance.m} or violates budgets")
        return EXIT_INFEASIBLE
    if record.covered_count is not None and record.covered_count != count:
        print(f"invalid: claimed covered_count={record.covered_count}, actual {count}")
        return EXIT_INFEASIBLE
    print(
        f"valid: covers {count} >= m={instance.m} at dilation "
        f"{record.solution.dilation:.6g}"
    )
    return EXIT_SOLUTION


def _bench_task(task: tuple) -> dict:
    kind, seed, params, max_iters, eps = task
    ns = argparse.Namespace(**params)
    instance, _ = _generate(kind, seed, ns)
    cfg = SolverConfig(max_iters=max_iters, eps=eps)
    start = perf_counter()
    result = solve_feasibility(instance, cfg)
    elapsed = perf_counter() - start
    return {
        "seed": seed,
        "n": instance.n,
        "status": result.status,
        "method": result.method,
        "case": result.case or "-",
        "iterations": result.iterations,
        "dilation": result.solution.dilation if result.solution else None,
        "seconds": elapsed,
    }


def _cmd_bench(args: argparse.Namespace) -> int:
    params = {
        "clusters": args.clusters,
        "points_per_cluster": args.points_per_cluster,
        "outliers": args.outliers,
        "n": args.n,
        "r1": args.r1,
        "r2": args.r2,
        "k1": args.k1,
        "k2": args.k2,
        "m": args.m,
    }
    tasks = [
        (args.kind, args.seed + i, params, args.max_iters, args.eps)
        for i in range(args.count)
    ]
    if args.parallel > 1:
        with ProcessPoolExecutor(max_workers=args.parallel) as pool:
            rows = list(pool.map(_bench_task, tasks))
    else:
        rows = [_bench_task(t) for t in tasks]

    print(f"{'seed':>6} {'n':>4} {'status':>10} {'method':>8} {'case':>4} "
          f"{'iters':>6} {'sec':>8}")
    for row in rows:
        print(
            f"{row['seed']:>6} {row['n']:>4} {row['status']:>10} "
            f"{row['method']:>8} {row['case']:>4} {row['iterations']:>6} "
            f"{row['seconds']:>8.3f}"
        )
    times = [row["seconds"] for row in rows]
    solved = sum(row["status"] == "solution" for row in rows)
    print(
        f"{len(rows)} instances, {solved} solved, "
        f"mean {sum(times) / len(times):.3f}s, max {max(times):.3f}s"
    )
    return EXIT_SOLUTION


def _add_gen_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--clusters", type=int, default=3)
    parser.add_argument("--points-per-cluster", type=int, default=5)
    parser.add_argument("--outliers", type=int, default=2)
    parser.add_argument("--n", type=int, default=30, help="points (uniform/graph)")
    parser.add_argument("--r1", type=float, default=1.0)
    parser.add_argument("--r2", type=float, default=0.4)
    parser.add_argument("--k1", type=int, default=2, help="budget (uniform/graph)")
    parser.add_argument("--k2", type=int, default=2, help="budget (uniform/graph)")
    parser.add_argument("--m", type=int, default=None, help="coverage target")


def _add_solver_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-iters", type=int, default=None,
                        help="cap on separation oracle calls")
    parser.add_argument("--eps", type=float, default=1e-9,
                        help="cut violation tolerance of the engine")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nukc",
        description="Two-radius covering with outliers: generate, solve, check, bench.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance as JSON")
    gen.add_argument("kind", choices=("planted", "kcenter", "uniform", "graph"))
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    _add_gen_params(gen)
    gen.set_defaults(func=_cmd_gen)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("instance")
    solve.add_argument("--rho", type=float, default=1.0,
                       help="scale both radii before solving")
    solve.add_argument("--optimize", action="store_true",
                       help="binary search the smallest irrefutable scale")
    solve.add_argument("--trace", action="store_true",
                       help="print solver progress to stderr")
    solve.add_argument("--no-shortcuts", action="store_true",
                       help="disable the greedy and LP presolve")
    solve.add_argument("-o", "--out", default=None)
    _add_solver_params(solve)
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="verify a solution file against an instance")
    check.add_argument("instance")
    check.add_argument("solution")
    check.set_defaults(func=_cmd_check)

    bench = sub.add_parser("bench", help="time the solver on generated instances")
    bench.add_argument("--kind", choices=("planted", "kcenter", "uniform", "graph"),
                       default="planted")
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--count", type=int, default=10)
    bench.add_argument("--parallel", type=int, default=1, metavar="N",
                       help="worker processes")
    _add_gen_params(bench)
    _add_solver_params(bench)
    bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, MetricError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

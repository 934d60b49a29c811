"""Command-line front end.

Exit codes: 0 success (infeasible results included), 2 usage error,
3 input format or validation error, 4 eqmad requested in the NP-hard k range.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .eqmad import C_MAX, solve_eqmad1, solve_eqmad_large_k
from .graph import (
    DisconnectedGraphError,
    GraphFormatError,
    all_pairs_distances,
    format_edge_list,
    has_four_cycle,
    read_edge_list,
)
from .hardness import SetSystemError, build_hard_instance, cover_to_witness, parse_set_system
from .oracle import N_MAX, OracleSizeError, brute_force
from .partition import build_partition
from .report import Report, stats_dict
from .solvers import (
    PROBLEMS,
    solve_adim_max,
    solve_adim_max_randomized,
    solve_mad,
    solve_mad_randomized,
)

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_HARD = 4


class UsageError(Exception):
    pass


class HardRangeError(Exception):
    pass


def _u64(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--show-partition", action="store_true", help="list the witness's classes")
    common.add_argument("--seed", type=_u64, default=0, help="RNG seed for randomized solvers")
    common.add_argument("--threads", type=_positive, default=1, help="worker threads for solvers")

    parser = argparse.ArgumentParser(
        prog="antidim", description="Privacy measures against active re-identification attacks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="basic graph statistics")
    p.add_argument("file")

    p = sub.add_parser("adim", parents=[common], help="attacker set maximising the anonymity level")
    p.add_argument("file")
    p.add_argument("--randomized", action="store_true")

    p = sub.add_parser("mad", parents=[common], help="fewest attackers achieving anonymity >= k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--randomized", action="store_true")

    p = sub.add_parser("eqmad", parents=[common], help="fewest attackers achieving anonymity == k")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--c-max", type=_positive, default=C_MAX, help="largest n-k solved exhaustively")

    p = sub.add_parser("brute", parents=[common], help=f"exhaustive oracle (n <= {N_MAX})")
    p.add_argument("file")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--k", type=int)

    p = sub.add_parser("gen-hard", parents=[common], help="hard diameter-2 instance from an X3C system")
    p.add_argument("sets_file")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--cover", help="comma-separated set indices to turn into an attacker set")
    return parser


def _load(path: str):
    g = read_edge_list(path)
    return g, all_pairs_distances(g)


def _require_k(k: int | None, n: int) -> int:
    if k is None:
        raise UsageError("--k is required for this problem")
    if not 1 <= k <= n - 1:
        raise UsageError(f"--k must be in 1..{n - 1} for a graph with n = {n}, got {k}")
    return k


def _solve(args, g, d):
    if args.command == "adim":
        if args.randomized:
            return solve_adim_max_randomized(d, args.seed, threads=args.threads)
        return solve_adim_max(d, threads=args.threads)
    if args.command == "mad":
        k = _require_k(args.k, d.n)
        if args.randomized:
            return solve_mad_randomized(d, k, args.seed, threads=args.threads)
        return solve_mad(d, k, threads=args.threads)
    if args.command == "eqmad":
        k = _require_k(args.k, d.n)
        if d.n - k <= args.c_max:
            return solve_eqmad_large_k(d, k, c_max=args.c_max)
        if k == 1:
            return solve_eqmad1(g, d)
        raise HardRangeError(
            f"eqmad with k = {k} on n = {d.n} is NP-hard and has no algorithm here "
            f"(supported: k = 1 or k >= n - {args.c_max}); for small graphs use "
            f"'antidim brute --problem eqmad --k {k}'"
        )
    if args.command == "brute":
        k = None
        if args.problem != "adim-max":
            k = _require_k(args.k, d.n)
        return brute_force(d, args.problem, k)
    raise AssertionError(args.command)


def _gen_hard(args, out) -> None:
    with open(args.sets_file, encoding="utf-8") as fh:
        system = parse_set_system(fh)
    inst = build_hard_instance(system, args.k)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(inst.graph))
    d = all_pairs_distances(inst.graph)
    meta = dict(inst.metadata, diameter=d.diameter, out=args.out)
    if args.cover is not None:
        try:
            cover = [int(t) for t in args.cover.split(",") if t.strip()]
        except ValueError:
            raise UsageError("--cover must be comma-separated integers") from None
        witness = cover_to_witness(inst, cover)
        meta["cover"] = cover
        meta["witness"] = [inst.graph.labels[v] for v in witness]
        meta["witness_mu"] = build_partition(d, witness).mu
    if args.json:
        print(json.dumps(meta, sort_keys=True), file=out)
    else:
        for key, value in meta.items():
            print(f"{key}: {value}", file=out)


def _stats(args, out) -> None:
    g, d = _load(args.file)
    degree_one = [v for v in range(g.n) if g.degree(v) == 1]
    stats = stats_dict(g, d, degree_one, has_four_cycle(g))
    if args.json:
        print(json.dumps(stats, sort_keys=True), file=out)
    else:
        for key, value in stats.items():
            if isinstance(value, list):
                value = " ".join(value) or "-"
            print(f"{key}: {value}", file=out)


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "stats":
            _stats(args, out)
        elif args.command == "gen-hard":
            _gen_hard(args, out)
        else:
            g, d = _load(args.file)
            start = time.perf_counter()
            sol = _solve(args, g, d)
            elapsed = (time.perf_counter() - start) * 1000
            report = Report.from_solution(sol, g, d, elapsed, show_partition=args.show_partition)
            print(report.to_json() if args.json else report.render(), file=out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except HardRangeError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_HARD
    except (GraphFormatError, DisconnectedGraphError, SetSystemError, OracleSizeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

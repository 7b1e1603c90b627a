"""Command-line interface.

Subcommands::

    orthosparse solve  --matrix A.mtx --rhs y.txt --k 2 [--method fast|brute|both]
    orthosparse gen    --kind orthogonal --m 50 --n 8 --matrix-out A.mtx --rhs-out y.txt
    orthosparse verify --property prop1 --trials 200 --m 50 --n 8 --seed 7
    orthosparse bench  --m 100 --n 20 --k 5

All subcommands accept ``--seed``, ``--tol``, ``--out``, ``--workers`` and
``--force``; flags that a given subcommand does not consume are ignored.
Results are printed as JSON to stdout and, with ``--out``, also written to
a file.

Exit codes: 0 success; 1 solver or verification failure (ill-conditioned
input, generation that never converged, a failed campaign); 2 usage and
input errors (unparsable flags, missing or malformed files, k out of
range, an exhaustive scan beyond the subset budget without ``--force``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from .bench import run_bench
from .exceptions import OrthoSparseError
from .generate import GenConfig, gen_general_instance, gen_orthogonal_instance
from .io import read_matrix_market, read_rhs, write_matrix_market, write_rhs
from .linalg import gram, gram_coherence
from .oracle import brute_force_solve
from .selector import fast_sparse_solve
from .verify import CAMPAIGNS, run_campaign

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _emit(doc: dict, out: Optional[str]) -> None:
    text = json.dumps(doc, indent=2)
    print(text)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_solve(args: argparse.Namespace) -> int:
    A = read_matrix_market(args.matrix)
    y = read_rhs(args.rhs)
    order = {"fast": ("fast",), "brute": ("brute",), "both": ("fast", "brute")}
    solutions = []
    for name in order[args.method]:
        t0 = time.perf_counter()
        if name == "fast":
            sol = fast_sparse_solve(A, y, args.k, refit=args.refit)
        else:
            sol = brute_force_solve(
                A, y, args.k, workers=args.workers, force=args.force
            )
        elapsed_ms = (time.perf_counter() - t0) * 1e3
        solutions.append(
            {
                "method": sol.method,
                "refit": sol.refit,
                "support": list(sol.support),
                "values": [float(v) for v in sol.values],
                "residual": float(sol.residual),
                "time_ms": elapsed_ms,
            }
        )
    _emit(
        {"matrix": args.matrix, "rhs": args.rhs, "k": args.k, "solutions": solutions},
        args.out,
    )
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = GenConfig(
        m=args.m,
        n=args.n,
        seed=args.seed,
        scale_range=(args.scale_lo, args.scale_hi),
        noise=args.noise,
    )
    if args.kind == "orthogonal":
        A, y = gen_orthogonal_instance(cfg)
    else:
        A, y = gen_general_instance(cfg)
    coherence = gram_coherence(gram(A))
    # Config echo in the file itself, so a fixture stays reproducible on disk.
    write_matrix_market(
        args.matrix_out,
        A,
        comments=(
            f"kind={args.kind} m={cfg.m} n={cfg.n} seed={cfg.seed}",
            f"scale_range={list(cfg.scale_range)} noise={cfg.noise}",
        ),
    )
    write_rhs(args.rhs_out, y)
    _emit(
        {
            "kind": args.kind,
            "m": cfg.m,
            "n": cfg.n,
            "seed": cfg.seed,
            "scale_range": list(cfg.scale_range),
            "noise": cfg.noise,
            "coherence": float(coherence),
            "matrix": args.matrix_out,
            "rhs": args.rhs_out,
        },
        args.out,
    )
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_campaign(
        args.property,
        trials=args.trials,
        m=args.m,
        n=args.n,
        seed=args.seed,
        tol=args.tol,
        workers=args.workers,
    )
    _emit(report.to_dict(), args.out)
    return EXIT_OK if report.passed() else EXIT_FAILURE


def _cmd_bench(args: argparse.Namespace) -> int:
    result = run_bench(
        m=args.m,
        n=args.n,
        k=args.k,
        trials=args.trials,
        repeats=args.repeats,
        seed=args.seed,
        workers=args.workers,
        force=args.force,
    )
    _emit(result, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    shared.add_argument(
        "--tol", type=float, default=None, help="tolerance override (default per command)"
    )
    shared.add_argument("--out", default=None, help="also write the JSON result here")
    shared.add_argument(
        "--workers", type=int, default=1, help="threads for the exhaustive scan"
    )
    shared.add_argument(
        "--force",
        action="store_true",
        help="run exhaustive scans past the subset budget",
    )

    parser = argparse.ArgumentParser(
        prog="orthosparse",
        description="Closed-form best-k-sparse least squares and its verifiers.",
        epilog="All column indices in JSON output are 0-based and ascending. "
        "Exit codes: 0 success, 1 solver/verification failure, 2 usage/input error.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser(
        "solve", parents=[shared], help="solve one instance from files"
    )
    p_solve.add_argument("--matrix", required=True, help="Matrix Market array file")
    p_solve.add_argument("--rhs", required=True, help="right-hand side, one value per line")
    p_solve.add_argument("--k", type=int, required=True, help="sparsity level")
    p_solve.add_argument(
        "--method", choices=("fast", "brute", "both"), default="fast"
    )
    p_solve.add_argument(
        "--refit",
        action="store_true",
        help="re-solve least squares on the selected support (fast method only)",
    )
    p_solve.set_defaults(func=_cmd_solve)

    p_gen = sub.add_parser(
        "gen", parents=[shared], help="generate a seeded problem instance"
    )
    p_gen.add_argument("--kind", choices=("orthogonal", "general"), default="orthogonal")
    p_gen.add_argument("--m", type=int, required=True, help="rows")
    p_gen.add_argument("--n", type=int, required=True, help="columns (m > n)")
    p_gen.add_argument("--scale-lo", type=float, default=0.5)
    p_gen.add_argument("--scale-hi", type=float, default=3.0)
    p_gen.add_argument("--noise", type=float, default=1.0)
    p_gen.add_argument("--matrix-out", required=True)
    p_gen.add_argument("--rhs-out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_verify = sub.add_parser(
        "verify", parents=[shared], help="run a seeded verification campaign"
    )
    p_verify.add_argument("--property", required=True, choices=sorted(CAMPAIGNS))
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.add_argument("--m", type=int, default=40)
    p_verify.add_argument("--n", type=int, default=8)
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser(
        "bench", parents=[shared], help="time fast vs exhaustive solves"
    )
    p_bench.add_argument("--m", type=int, default=100)
    p_bench.add_argument("--n", type=int, default=20)
    p_bench.add_argument("--k", type=int, default=5)
    p_bench.add_argument("--trials", type=int, default=3)
    p_bench.add_argument("--repeats", type=int, default=5)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles --help and usage errors
        code = exc.code
        if code is None:
            return EXIT_OK
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        # Covers malformed files, bad shapes, k out of range and budget
        # refusals; all input problems subclass ValueError here.
        print(f"orthosparse: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OrthoSparseError as exc:
        print(f"orthosparse: error: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

"""Wall-time comparison of the closed-form solver against the exhaustive scan."""

from __future__ import annotations

import statistics
import time

import numpy as np

from .exceptions import SubsetCountError
from .generate import GenConfig, gen_orthogonal_instance
from .oracle import SUBSET_BUDGET, brute_force_solve, subset_count
from .selector import fast_sparse_solve


def _median_ms(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append((time.perf_counter() - t0) * 1e3)
    return statistics.median(times)


def run_bench(
    *,
    m: int,
    n: int,
    k: int,
    trials: int = 3,
    repeats: int = 5,
    seed: int = 0,
    workers: int = 1,
    force: bool = False,
) -> dict:
    """Time both solvers on seeded orthogonal instances.

    Returns a dict with per-trial records and overall medians.  Refuses
    oversized exhaustive scans unless ``force`` is set, mirroring the
    solver's own budget guard.
    """
    count = subset_count(n, k)
    if count > SUBSET_BUDGET and not force:
        raise SubsetCountError(
            f"C({n},{k}) = {count} supports exceeds the budget of "
            f"{SUBSET_BUDGET}; pass force=True to run anyway"
        )

    master = np.random.default_rng(seed)
    records = []
    for t in range(trials):
        cfg = GenConfig(m=m, n=n, seed=int(master.integers(2**63)))
        A, y = gen_orthogonal_instance(cfg)
        fast_ms = _median_ms(lambda: fast_sparse_solve(A, y, k), repeats)
        brute_ms = _median_ms(
            lambda: brute_force_solve(A, y, k, workers=workers, force=force), repeats
        )
        records.append(
            {
                "trial": t,
                "seed": cfg.seed,
                "fast_ms": fast_ms,
                "brute_ms": brute_ms,
                "speedup": brute_ms / fast_ms if fast_ms > 0 else float("inf"),
            }
        )

    fast_median = statistics.median(r["fast_ms"] for r in records)
    brute_median = statistics.median(r["brute_ms"] for r in records)
    return {
        "m": m,
        "n": n,
        "k": k,
        "subset_count": count,
        "trials": trials,
        "repeats": repeats,
        "seed": seed,
        "workers": workers,
        "fast_ms_median": fast_median,
        "brute_ms_median": brute_median,
        "speedup": brute_median / fast_median if fast_median > 0 else float("inf"),
        "records": records,
    }

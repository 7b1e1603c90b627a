"""Exhaustive best-subset search: the ground truth the fast solver is
checked against.

Every k-subset of columns is scanned in lexicographic order.  Per subset the
scan evaluates the restricted least-squares residual through the normal
equations of the precomputed Gram matrix (vectorized over fixed-size
chunks); the winning support is then re-solved through the stable
orthogonal-factorization path, so reported values match
``restricted_least_squares`` exactly.

Determinism contract: exact residual ties resolve to the lexicographically
smallest support, chunk boundaries are fixed independently of the worker
count, and per-subset arithmetic never mixes data across subsets.  The
reduction is therefore associative, and any ``workers`` value yields
bit-identical output.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations, islice
from math import comb
from typing import Iterator, NamedTuple, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import IllConditioned, SubsetCountError
from .linalg import COND_LIMIT, gram, residual_norm, restricted_least_squares
from .selector import SparseSolution
from .validation import as_design_matrix, as_vector, check_k

# Brute force is a desk-scale oracle: refuse larger instances unless forced.
SUBSET_BUDGET = 10**7

# Subsets scanned per vectorized batch; fixed so chunk boundaries (and hence
# the reduction) do not depend on the worker count.
_CHUNK = 4096


def subset_count(n: int, k: int) -> int:
    """Number of k-subsets of n columns, C(n, k)."""
    k = check_k(k, n)
    return comb(n, k)


def enumerate_supports(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Yield all k-subsets of {0..n-1} as ascending tuples, lexicographically."""
    k = check_k(k, n)
    return combinations(range(n), k)


class _ChunkResult(NamedTuple):
    residual: float
    support: Optional[tuple[int, ...]]
    offender: Optional[tuple[int, ...]]  # first subset failing the guard


def _scan_chunk(
    subs: NDArray[np.intp],
    G: NDArray[np.float64],
    b: NDArray[np.float64],
    yty: float,
) -> _ChunkResult:
    """Best (residual, support) over one lexicographic block of subsets."""
    Gs = G[subs[:, :, None], subs[:, None, :]]
    with np.errstate(divide="ignore", invalid="ignore"):
        conds = np.linalg.cond(Gs, 2)
    bad = ~(conds <= COND_LIMIT)  # catches inf and nan
    if bad.any():
        first = int(np.argmax(bad))
        return _ChunkResult(np.inf, None, tuple(int(i) for i in subs[first]))

    bs = b[subs]
    coef = np.linalg.solve(Gs, bs[:, :, None])[:, :, 0]
    r2 = yty - np.einsum("ck,ck->c", bs, coef)
    np.maximum(r2, 0.0, out=r2)
    r = np.sqrt(r2)
    # argmin returns the first occurrence; the block is in lexicographic
    # order, so exact ties already resolve to the smallest support.
    best = int(np.argmin(r))
    return _ChunkResult(float(r[best]), tuple(int(i) for i in subs[best]), None)


def _chunked_subsets(n: int, k: int) -> Iterator[NDArray[np.intp]]:
    it = enumerate_supports(n, k)
    while True:
        block = list(islice(it, _CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.intp)


def brute_force_solve(
    A: ArrayLike, y: ArrayLike, k: int, *, workers: int = 1, force: bool = False
) -> SparseSolution:
    """Minimum-residual k-sparse solution by exhaustive subset search.

    Ties in the exact computed residual resolve to the lexicographically
    smallest support.  ``workers`` > 1 scans disjoint contiguous chunk
    ranges in a thread pool; the output is identical for any worker count.
    Raises SubsetCountError when C(n, k) exceeds ``SUBSET_BUDGET`` and
    ``force`` is not set, and IllConditioned (identifying the offending
    subset) when any restricted Gram fails the conditioning guard.
    """
    A = as_design_matrix(A)
    m, n = A.shape
    y = as_vector(y, m, "rhs")
    k = check_k(k, n)
    total = subset_count(n, k)
    if total > SUBSET_BUDGET and not force:
        raise SubsetCountError(
            f"C({n}, {k}) = {total} exceeds the subset budget {SUBSET_BUDGET}; "
            "pass force=True to scan anyway"
        )

    G = gram(A)
    b = A.T @ y
    yty = float(y @ y)

    best = _ChunkResult(np.inf, None, None)

    def fold(result: _ChunkResult) -> None:
        nonlocal best
        if result.offender is not None:
            raise IllConditioned(
                f"restricted Gram for subset {result.offender} fails the "
                f"conditioning guard ({COND_LIMIT:.0e})"
            )
        if best.support is None or (result.residual, result.support) < (
            best.residual,
            best.support,
        ):
            best = result

    chunks = _chunked_subsets(n, k)
    if workers <= 1:
        for subs in chunks:
            fold(_scan_chunk(subs, G, b, yty))
    else:
        # Bounded pipeline: chunks are folded in stream order, so aborts and
        # tie-breaking are independent of completion order.
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pending: deque = deque()
            for subs in chunks:
                pending.append(pool.submit(_scan_chunk, subs, G, b, yty))
                if len(pending) >= 4 * workers:
                    fold(pending.popleft().result())
            while pending:
                fold(pending.popleft().result())

    assert best.support is not None
    values = restricted_least_squares(A, best.support, y)
    dense = np.zeros(n)
    dense[list(best.support)] = values
    return SparseSolution(
        support=best.support,
        values=values,
        residual=residual_norm(A, dense, y),
        method="brute",
        refit=True,
        n_features=n,
    )

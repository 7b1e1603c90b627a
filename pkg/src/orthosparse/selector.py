"""Closed-form k-sparse solver for overdetermined systems.

The method ranks columns by the score vector

    z = (A^T A)^{-1} w,    w_i = (A^T y)_i^2,

keeps the k best-ranked coordinates of the full least-squares solution
x = A^+ y, and zeroes the rest.  Ranking uses a stable descending sort, so
equal scores keep ascending index order and results are reproducible
bit-for-bit.  For orthogonal columns z_i reduces to (A^T y)_i^2 / ||a_i||^2,
the share of the objective captured by column i, and the construction
attains the exhaustive-search optimum for every k.  For non-orthogonal
columns no optimality is claimed.

Cost: one orthogonal-factorization solve plus one explicit Gram inverse,
formed once per call; no combinatorial search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import DimensionError
from .linalg import (
    gram_and_inverse,
    least_squares,
    residual_norm,
    restricted_least_squares,
)
from .validation import as_design_matrix, as_vector, check_k


@dataclass(frozen=True)
class ScoreSelection:
    """Score vector, its stable descending ranking, and the chosen support.

    ``order[i]`` is the index of the i-th largest score; among equal scores
    lower original indices come first.  ``support`` holds the first k
    entries of ``order``, stored ascending.
    """

    scores: NDArray[np.float64]
    order: NDArray[np.intp]
    support: tuple[int, ...]


@dataclass(frozen=True)
class SparseSolution:
    """A k-sparse candidate solution.

    ``values`` are the nonzero coefficients aligned to the ascending
    ``support`` indices.  ``residual`` is ||A x - y|| for the embedded full
    vector (see :meth:`dense`).  ``method`` tags the producing solver
    ("fast" or "brute"); ``refit`` records whether the values were re-solved
    on the chosen support.
    """

    support: tuple[int, ...]
    values: NDArray[np.float64]
    residual: float
    method: str
    refit: bool
    n_features: int

    def dense(self) -> NDArray[np.float64]:
        """Embed the solution into a full-length coefficient vector."""
        out = np.zeros(self.n_features)
        out[list(self.support)] = self.values
        return out


def score(A: ArrayLike, y: ArrayLike) -> NDArray[np.float64]:
    """Column scores z = (A^T A)^{-1} (A^T y)^2 (elementwise square).

    Entries may be negative when the columns of A are not orthogonal.
    """
    A = as_design_matrix(A)
    y = as_vector(y, A.shape[0], "rhs")
    _, Ginv = gram_and_inverse(A)
    w = (A.T @ y) ** 2
    return Ginv @ w


def select_support(z: ArrayLike, k: int) -> ScoreSelection:
    """Rank scores by a stable descending sort and keep the top k indices.

    Ties break toward the lower original index, so the selection is
    deterministic for any input.
    """
    z = np.ascontiguousarray(z, dtype=np.float64)
    if z.ndim != 1:
        raise DimensionError(f"scores must be 1-D, got ndim={z.ndim}")
    if not np.all(np.isfinite(z)):
        raise DimensionError("scores must be finite")
    k = check_k(k, z.shape[0])
    order = np.argsort(-z, kind="stable")
    support = tuple(sorted(int(i) for i in order[:k]))
    return ScoreSelection(scores=z.copy(), order=order, support=support)


def fast_sparse_solve(
    A: ArrayLike, y: ArrayLike, k: int, refit: bool = False
) -> SparseSolution:
    """Closed-form k-sparse solve: score, select, keep pseudoinverse entries.

    With ``refit=False`` (default) the nonzero values are the entries of the
    full least-squares solution at the selected support, with everything
    else zeroed; this is the exact construction the scoring analysis is
    about, and it does not re-solve on the support.  ``refit=True`` is an
    explicitly-labeled extension that replaces the values with the
    restricted least-squares fit; it changes nothing when the columns are
    orthogonal but is visibly better for correlated columns.
    """
    A = as_design_matrix(A)
    y = as_vector(y, A.shape[0], "rhs")
    k = check_k(k, A.shape[1])

    x_full = least_squares(A, y)
    selection = select_support(score(A, y), k)
    if refit:
        values = restricted_least_squares(A, selection.support, y)
    else:
        values = x_full[list(selection.support)].copy()

    dense = np.zeros(A.shape[1])
    dense[list(selection.support)] = values
    return SparseSolution(
        support=selection.support,
        values=values,
        residual=residual_norm(A, dense, y),
        method="fast",
        refit=refit,
        n_features=A.shape[1],
    )

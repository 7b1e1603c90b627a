"""Dense least-squares kernels: Gram products, full and support-restricted
solves, residual norms, and the conditioning guard.

Matrices are real, dense and strictly overdetermined (rows > columns).  Full
column rank is not assumed silently: every solve estimates the 2-norm
condition number of the relevant Gram matrix and refuses instances above
``COND_LIMIT``.  The minimizers themselves are computed by an orthogonal
factorization (SVD-based ``lstsq``), never by inverting normal equations;
the explicit Gram inverse exists only for scoring and diagnostics, where it
is formed once per call (see :func:`gram_and_inverse`).

All functions are pure and safe to call concurrently on shared inputs.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import IllConditioned
from .validation import as_design_matrix, as_vector, check_support

# Solves refuse (restricted) Gram matrices whose estimated 2-norm condition
# number exceeds this; signals rank deficiency.
COND_LIMIT = 1e12


def gram(A: ArrayLike) -> NDArray[np.float64]:
    """Gram matrix G = A^T A, exactly symmetric by construction.

    The upper triangle is mirrored onto the lower one, so G[i, j] and
    G[j, i] are bitwise identical.  Diagonal entries are the squared
    column norms.
    """
    A = as_design_matrix(A)
    G = A.T @ A
    G = np.triu(G) + np.triu(G, 1).T
    return G


def gram_condition(G: ArrayLike) -> float:
    """Estimated 2-norm condition number of a Gram matrix (inf if singular)."""
    G = np.asarray(G, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        c = np.linalg.cond(G, 2)
    if np.isnan(c):
        return float("inf")
    return float(c)


def gram_coherence(G: ArrayLike) -> float:
    """Largest normalized off-diagonal Gram entry, max |G_ij| / sqrt(G_ii G_jj).

    Zero iff the underlying columns are orthogonal; lies in [0, 1] for a
    positive-definite G (Cauchy-Schwarz).  Returns 0.0 for a single column.
    """
    G = np.asarray(G, dtype=np.float64)
    n = G.shape[0]
    if n < 2:
        return 0.0
    d = np.sqrt(np.diag(G))
    scaled = np.abs(G) / np.outer(d, d)
    np.fill_diagonal(scaled, 0.0)
    return float(scaled.max())


def _guard(G: NDArray[np.float64], what: str = "Gram matrix") -> None:
    c = gram_condition(G)
    if c > COND_LIMIT:
        raise IllConditioned(
            f"{what} has estimated condition number {c:.3e} > {COND_LIMIT:.0e}"
        )


def gram_and_inverse(
    A: ArrayLike,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Gram matrix and its explicit inverse, formed with one factorization.

    Raises IllConditioned when the Gram condition estimate exceeds the guard.
    """
    A = as_design_matrix(A)
    G = gram(A)
    _guard(G)
    return G, np.linalg.inv(G)


def least_squares(A: ArrayLike, y: ArrayLike) -> NDArray[np.float64]:
    """Minimum-norm least-squares solution of A x ~= y.

    Computed by an SVD-based orthogonal factorization, not via the normal
    equations.  Raises IllConditioned when the Gram condition guard fails.
    """
    A = as_design_matrix(A)
    y = as_vector(y, A.shape[0], "rhs")
    _guard(gram(A))
    x, *_ = np.linalg.lstsq(A, y, rcond=None)
    return x


def restricted_least_squares(
    A: ArrayLike, support, y: ArrayLike
) -> NDArray[np.float64]:
    """Least-squares coefficients over a column subset.

    Solves min ||A_S u - y|| where A_S keeps only the supported columns.
    Coefficients are paired to the support indices in ascending order.
    """
    A = as_design_matrix(A)
    y = as_vector(y, A.shape[0], "rhs")
    idx = check_support(support, A.shape[1])
    As = A[:, idx]
    _guard(gram(As), f"restricted Gram for support {idx}")
    u, *_ = np.linalg.lstsq(As, y, rcond=None)
    return u


def residual_norm(A: ArrayLike, x: ArrayLike, y: ArrayLike) -> float:
    """Euclidean residual ||A x - y||."""
    A = as_design_matrix(A)
    x = as_vector(x, A.shape[1], "coefficients")
    y = as_vector(y, A.shape[0], "rhs")
    return float(np.linalg.norm(A @ x - y))

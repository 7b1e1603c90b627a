"""Numeric verifiers for the structural facts the fast solver relies on.

Three related checks live here:

* :func:`orthogonality_check` measures Gram coherence (largest normalized
  off-diagonal entry) and the diagonal-inverse deviations
  |(G^{-1})_ii * G_ii - 1|.
* :func:`lemma1_condition` is the predicate "every diagonal-inverse
  deviation is ~0"; it holds exactly when the Gram matrix is diagonal, so it
  must agree with the coherence verdict.
* :func:`converse_witness_search` hunts for a certificate that the fast
  k=1 solution is strictly suboptimal, which certifies non-orthogonality.
  It probes the n canonical right-hand sides y_i = A (A^T A)^{-1} e_i: for
  such a y_i the best single-column fit is column i itself, while the fast
  selector can be fooled exactly when (G^{-1})_ii != 1/G_ii, so these n
  probes suffice and keep the search at O(n) solves.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import DimensionError, InconsistencyError
from .linalg import gram_and_inverse, gram_coherence
from .oracle import brute_force_solve
from .selector import fast_sparse_solve
from .validation import as_design_matrix

DEFAULT_ORTHO_TOL = 1e-10
DEFAULT_GAP_TOL = 1e-8


@dataclass(frozen=True)
class GramDiagnostics:
    """Gram matrix, its inverse, and the orthogonality measurements."""

    gram: NDArray[np.float64]
    gram_inverse: NDArray[np.float64]
    max_offdiag_coherence: float
    lemma1_deviation: NDArray[np.float64]  # per index, |Ginv_ii * G_ii - 1|
    orthogonal: bool
    tol: float


@dataclass(frozen=True)
class ConverseWitness:
    """A right-hand side on which the fast k=1 solve is strictly worse.

    ``gap`` = fast residual - exhaustive residual; a reported witness has
    gap above the search tolerance, certifying non-orthogonal columns.
    """

    index: int
    y: NDArray[np.float64]
    fast_residual: float
    brute_residual: float
    gap: float


def orthogonality_check(A: ArrayLike, tol: float = DEFAULT_ORTHO_TOL) -> GramDiagnostics:
    """Measure how close the columns of A are to orthogonal.

    The verdict is coherence-based (scale-free): columns count as orthogonal
    when the largest normalized off-diagonal Gram entry is <= tol.
    """
    A = as_design_matrix(A)
    G, Ginv = gram_and_inverse(A)
    coherence = gram_coherence(G)
    deviation = np.abs(np.diag(Ginv) * np.diag(G) - 1.0)
    return GramDiagnostics(
        gram=G,
        gram_inverse=Ginv,
        max_offdiag_coherence=coherence,
        lemma1_deviation=deviation,
        orthogonal=coherence <= tol,
        tol=tol,
    )


def lemma1_condition(diag: GramDiagnostics, tol: float = DEFAULT_ORTHO_TOL) -> bool:
    """True iff every diagonal of the Gram inverse is the reciprocal of the
    matching Gram diagonal, to within tol.

    This condition forces the Gram matrix to be diagonal, so it must agree
    with the coherence verdict; the two are property-tested jointly.
    """
    return float(diag.lemma1_deviation.max()) <= tol


def canonical_probe(
    A: ArrayLike, index: int, gram_inverse: NDArray[np.float64] | None = None
) -> tuple[NDArray[np.float64], float, float]:
    """Fast and exhaustive k=1 residuals for the probe y = A G^{-1} e_index.

    Returns (y, fast_residual, brute_residual).  For this y the single best
    column is ``index`` itself, which makes the probe a sharp test of the
    fast selector.
    """
    A = as_design_matrix(A)
    if gram_inverse is None:
        _, gram_inverse = gram_and_inverse(A)
    y = A @ gram_inverse[:, index]
    fast = fast_sparse_solve(A, y, 1, refit=False)
    brute = brute_force_solve(A, y, 1)
    return y, fast.residual, brute.residual


def converse_witness_search(
    A: ArrayLike, gap_tol: float = DEFAULT_GAP_TOL
) -> ConverseWitness | None:
    """Search the n canonical probes for a fast-vs-exhaustive residual gap.

    Returns the witness with the smallest index whose gap exceeds
    ``gap_tol``, or None.  Orthogonal columns never produce a witness.  A
    non-orthogonal matrix is guaranteed a witness among these probes unless
    every diagonal-inverse deviation vanishes, which would contradict the
    diagonal-inverse identity itself; that contradiction raises
    InconsistencyError for investigation instead of silently returning None.

    Caveat: near-orthogonal matrices (coherence barely above the verdict
    tolerance) can have true gaps below ``gap_tol``; the deviations shrink
    like coherence squared, so such inputs may also trip the inconsistency
    report.  Treat either outcome as "inconclusive at tolerance", never as a
    refutation of the equivalence.
    """
    A = as_design_matrix(A)
    if A.shape[1] < 2:
        raise DimensionError("witness search needs at least two columns")
    diag = orthogonality_check(A)
    for i in range(A.shape[1]):
        y, fast_res, brute_res = canonical_probe(A, i, diag.gram_inverse)
        gap = fast_res - brute_res
        if gap > gap_tol:
            return ConverseWitness(
                index=i,
                y=y,
                fast_residual=fast_res,
                brute_residual=brute_res,
                gap=gap,
            )
    if diag.orthogonal:
        return None
    if lemma1_condition(diag, diag.tol):
        raise InconsistencyError(
            "columns are not orthogonal (coherence "
            f"{diag.max_offdiag_coherence:.3e}) yet every diagonal-inverse "
            "deviation is below tolerance and no witness was found; the "
            "diagonal-inverse identity says this cannot happen - investigate"
        )
    return None

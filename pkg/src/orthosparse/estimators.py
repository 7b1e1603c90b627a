"""Scikit-learn estimator wrappers around the sparse solvers.

Both estimators fit the linear model ``y ~= X @ coef_`` with exactly k
nonzero coefficients and no intercept (append a constant column yourself if
you want one).  They follow the usual conventions, so they compose with
pipelines, ``clone``, ``cross_val_score`` and friends.  The design matrix
must be strictly overdetermined: more samples than features.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_is_fitted, validate_data

from .oracle import brute_force_solve
from .selector import fast_sparse_solve, score
from .validation import as_design_matrix, as_vector


class _SparseRegressorBase(RegressorMixin, BaseEstimator):
    def _store(self, solution) -> None:
        self.solution_ = solution
        self.coef_ = solution.dense()
        self.support_ = np.array(solution.support, dtype=np.intp)
        self.residual_ = solution.residual

    def predict(self, X):
        """Predict with the fitted sparse coefficients."""
        check_is_fitted(self)
        X = validate_data(self, X, dtype=np.float64, reset=False)
        return X @ self.coef_


class FastSparseRegressor(_SparseRegressorBase):
    """k-sparse linear regression by column scoring, in closed form.

    Columns are ranked by the score vector z = (X^T X)^{-1} (X^T y)^2
    (elementwise square); the k best keep their full least-squares
    coefficients and the rest are zeroed.  For orthogonal columns this is
    the exact best-k-subset solution at a single solve's cost; for
    correlated columns it is a fast heuristic (see ``refit``).

    Parameters
    ----------
    k : int, default=1
        Number of nonzero coefficients.
    refit : bool, default=False
        Re-solve least squares on the selected support instead of keeping
        the raw full-solution entries.  Makes no difference when columns
        are orthogonal.

    Attributes
    ----------
    coef_ : ndarray of shape (n_features,)
        Sparse coefficient vector.
    support_ : ndarray of shape (k,)
        Ascending indices of the nonzero coefficients.
    scores_ : ndarray of shape (n_features,)
        Column scores used for the selection.
    residual_ : float
        ||X @ coef_ - y|| on the training data.
    solution_ : SparseSolution
        The underlying solver output.
    """

    def __init__(self, k: int = 1, refit: bool = False):
        self.k = k
        self.refit = refit

    def fit(self, X, y):
        X, y = validate_data(self, X, y, dtype=np.float64, y_numeric=True)
        X = as_design_matrix(X)
        y = as_vector(y, X.shape[0], "y")
        self._store(fast_sparse_solve(X, y, self.k, refit=self.refit))
        self.scores_ = score(X, y)
        return self


class BruteForceSparseRegressor(_SparseRegressorBase):
    """k-sparse linear regression by exhaustive subset search.

    Scans all C(n_features, k) supports and keeps the minimum-residual
    restricted least-squares fit; exact ties resolve to the
    lexicographically smallest support.  This is the ground-truth oracle:
    exponential in general, so instances beyond the subset budget are
    refused unless ``force=True``.

    Parameters
    ----------
    k : int, default=1
        Number of nonzero coefficients.
    workers : int, default=1
        Thread count for the subset scan; results are identical for any
        value.
    force : bool, default=False
        Scan even when C(n_features, k) exceeds the subset budget.

    Attributes
    ----------
    coef_, support_, residual_, solution_ : see FastSparseRegressor.
    """

    def __init__(self, k: int = 1, workers: int = 1, force: bool = False):
        self.k = k
        self.workers = workers
        self.force = force

    def fit(self, X, y):
        X, y = validate_data(self, X, y, dtype=np.float64, y_numeric=True)
        X = as_design_matrix(X)
        y = as_vector(y, X.shape[0], "y")
        self._store(
            brute_force_solve(X, y, self.k, workers=self.workers, force=self.force)
        )
        return self

"""Input validation helpers.

All numeric inputs are normalized to float64.  Design matrices are stored
column-major (Fortran order) because every kernel in this package slices
columns; the layout is part of the documented contract.  Indices are 0-based
throughout.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import BadK, DimensionError, EmptySupport


def as_design_matrix(A: ArrayLike) -> NDArray[np.float64]:
    """Validate and normalize a design matrix.

    Accepts anything array-like, returns a column-major float64 array with
    m rows, n columns, m > n >= 1, and all entries finite.
    """
    out = np.asfortranarray(A, dtype=np.float64)
    if out.ndim != 2:
        raise DimensionError(f"design matrix must be 2-D, got ndim={out.ndim}")
    m, n = out.shape
    if n < 1:
        raise DimensionError("design matrix needs at least one column")
    if m <= n:
        raise DimensionError(
            f"design matrix must be strictly overdetermined (rows > cols), got {m}x{n}"
        )
    if not np.all(np.isfinite(out)):
        raise DimensionError("design matrix entries must be finite")
    return out


def as_vector(v: ArrayLike, length: int, name: str = "vector") -> NDArray[np.float64]:
    """Validate a 1-D finite float vector of the given length."""
    out = np.ascontiguousarray(v, dtype=np.float64)
    if out.ndim != 1:
        raise DimensionError(f"{name} must be 1-D, got ndim={out.ndim}")
    if out.shape[0] != length:
        raise DimensionError(f"{name} has length {out.shape[0]}, expected {length}")
    if not np.all(np.isfinite(out)):
        raise DimensionError(f"{name} entries must be finite")
    return out


def check_k(k: int, n: int) -> int:
    """Validate a sparsity level: an integer with 1 <= k <= n."""
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)):
        raise BadK(f"k must be an integer, got {k!r}")
    k = int(k)
    if not 1 <= k <= n:
        raise BadK(f"k must satisfy 1 <= k <= {n}, got {k}")
    return k


def check_support(support, n: int) -> tuple[int, ...]:
    """Validate a support set against n columns.

    Returns the support as an ascending tuple of distinct 0-based indices.
    """
    idx = tuple(sorted(int(i) for i in support))
    if len(idx) == 0:
        raise EmptySupport("support must contain at least one column index")
    if len(set(idx)) != len(idx):
        raise DimensionError(f"support contains duplicate indices: {idx}")
    if idx[0] < 0 or idx[-1] >= n:
        raise DimensionError(f"support indices must lie in [0, {n}), got {idx}")
    return idx

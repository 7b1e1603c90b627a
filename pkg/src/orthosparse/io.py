"""Matrix and right-hand-side file formats.

Matrices travel in Matrix Market array format, real general::

    %%MatrixMarket matrix array real general
    % optional comment lines
    3 2
    1.0
    0.0
    0.0
    0.0
    2.0
    0.0

Values are written one per line in column-major order (all of column 0,
then column 1, ...).  Right-hand sides are plain text, one decimal value
per line.  Floats are written with ``repr`` so a write/read round trip is
bit-exact.
"""

from __future__ import annotations

import os
from typing import Iterable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import FileFormatError

MATRIX_MARKET_HEADER = "%%MatrixMarket matrix array real general"


def write_matrix_market(
    path: str | os.PathLike, A: ArrayLike, comments: Iterable[str] = ()
) -> None:
    """Write a dense real matrix in Matrix Market array format."""
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2:
        raise FileFormatError(f"can only write 2-D matrices, got ndim={A.ndim}")
    m, n = A.shape
    with open(path, "w", encoding="ascii") as fh:
        fh.write(MATRIX_MARKET_HEADER + "\n")
        for line in comments:
            fh.write(f"% {line}\n")
        fh.write(f"{m} {n}\n")
        for j in range(n):
            for i in range(m):
                fh.write(repr(float(A[i, j])) + "\n")


def read_matrix_market(path: str | os.PathLike) -> NDArray[np.float64]:
    """Read a dense real matrix in Matrix Market array format.

    Returns a column-major float64 array.  Raises FileFormatError on any
    structural problem (unsupported header, wrong counts, non-numeric data).
    """
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline()
        fields = header.strip().split()
        expected = MATRIX_MARKET_HEADER.split()
        if [f.lower() for f in fields] != [f.lower() for f in expected]:
            raise FileFormatError(
                f"unsupported Matrix Market header {header.strip()!r}; "
                f"expected {MATRIX_MARKET_HEADER!r}"
            )
        size_line = ""
        for line in fh:
            if line.startswith("%"):
                continue
            if line.strip():
                size_line = line
                break
        parts = size_line.split()
        if len(parts) != 2:
            raise FileFormatError(f"expected 'rows cols' size line, got {size_line!r}")
        try:
            m, n = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FileFormatError(f"non-integer sizes in {size_line!r}") from exc
        if m < 1 or n < 1:
            raise FileFormatError(f"sizes must be positive, got {m} x {n}")
        values = []
        for line in fh:
            for tok in line.split():
                try:
                    values.append(float(tok))
                except ValueError as exc:
                    raise FileFormatError(f"non-numeric entry {tok!r}") from exc
        if len(values) != m * n:
            raise FileFormatError(
                f"expected {m * n} entries for a {m} x {n} matrix, got {len(values)}"
            )
    return np.asfortranarray(
        np.array(values, dtype=np.float64).reshape((m, n), order="F")
    )


def write_rhs(path: str | os.PathLike, y: ArrayLike) -> None:
    """Write a right-hand side as plain text, one value per line."""
    y = np.asarray(y, dtype=np.float64)
    if y.ndim != 1:
        raise FileFormatError(f"right-hand side must be 1-D, got ndim={y.ndim}")
    with open(path, "w", encoding="ascii") as fh:
        for v in y:
            fh.write(repr(float(v)) + "\n")


def read_rhs(path: str | os.PathLike) -> NDArray[np.float64]:
    """Read a plain-text right-hand side (one decimal value per line)."""
    values = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            stripped = line.strip()
            if not stripped:
                continue
            try:
                values.append(float(stripped))
            except ValueError as exc:
                raise FileFormatError(f"non-numeric line {stripped!r}") from exc
    if not values:
        raise FileFormatError(f"no values found in {os.fspath(path)!r}")
    return np.array(values, dtype=np.float64)

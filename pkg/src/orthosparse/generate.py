"""Deterministic problem-instance generation.

Everything is a pure function of a :class:`GenConfig`.  Randomness comes
from numpy's seedable PCG64 generator; each config seed is split into three
disjoint substreams with ``SeedSequence(seed).spawn(3)``:

    substream 0 -> matrix entries (and column scales, and resamples),
    substream 1 -> the dense coefficient vector behind y,
    substream 2 -> the additive noise on y.

Fixtures exchanged with other tooling should travel as files (see
:mod:`orthosparse.io`); the seeds documented alongside a fixture reproduce
it with this package, but cross-library bit-equality of the generator
itself is not part of the contract.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .exceptions import DimensionError, GenError
from .linalg import COND_LIMIT, gram, gram_condition, gram_coherence

_ORTHO_RESAMPLES = 3
_GENERAL_RESAMPLES = 10


@dataclass(frozen=True)
class GenConfig:
    """Dimensions, seed, column-scale interval and noise level."""

    m: int
    n: int
    seed: int
    scale_range: tuple[float, float] = (0.5, 3.0)
    noise: float = 1.0

    def __post_init__(self) -> None:
        if self.n < 1 or self.m <= self.n:
            raise DimensionError(
                f"need rows > cols >= 1, got m={self.m}, n={self.n}"
            )
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        lo, hi = self.scale_range
        if not (0 < lo <= hi):
            raise ValueError(f"scale_range must satisfy 0 < lo <= hi, got {self.scale_range}")
        if self.noise < 0:
            raise ValueError(f"noise must be nonnegative, got {self.noise}")


def _streams(cfg: GenConfig) -> tuple[np.random.Generator, ...]:
    return tuple(
        np.random.default_rng(s) for s in np.random.SeedSequence(cfg.seed).spawn(3)
    )


def _rhs(
    A: NDArray[np.float64],
    cfg: GenConfig,
    rng_coef: np.random.Generator,
    rng_noise: np.random.Generator,
) -> NDArray[np.float64]:
    x_star = rng_coef.standard_normal(cfg.n)
    g = rng_noise.standard_normal(cfg.m)
    return A @ x_star + cfg.noise * g


def gen_orthogonal_instance(
    cfg: GenConfig,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Random instance with exactly orthogonal columns of distinct norms.

    A standard-normal matrix is orthonormalized by QR, then column i is
    scaled by an independent uniform draw from ``scale_range`` (distinct
    squared norms with probability 1, so score ties do not occur by
    accident).  y = A x* + noise * g.  Deterministic given the seed.
    """
    rng_mat, rng_coef, rng_noise = _streams(cfg)
    for _ in range(1 + _ORTHO_RESAMPLES):
        raw = rng_mat.standard_normal((cfg.m, cfg.n))
        Q, R = np.linalg.qr(raw)
        d = np.abs(np.diag(R))
        if d.min() > cfg.m * np.finfo(np.float64).eps * max(d.max(), 1.0):
            signs = np.sign(np.diag(R))
            scales = rng_mat.uniform(*cfg.scale_range, cfg.n)
            A = np.asfortranarray(Q * (signs * scales))
            return A, _rhs(A, cfg, rng_coef, rng_noise)
    raise GenError(
        f"orthonormalization degenerated {_ORTHO_RESAMPLES + 1} times for {cfg}"
    )


def gen_general_instance(
    cfg: GenConfig,
    *,
    min_coherence: float = 0.05,
    max_gram_condition: float = COND_LIMIT,
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Random dense instance with genuinely non-orthogonal columns.

    Standard-normal matrices are resampled until the Gram condition number
    is at most ``max_gram_condition`` and the coherence is at least
    ``min_coherence`` (so converse tests see a real effect, not rounding).
    Deterministic given the seed.
    """
    if cfg.n < 2:
        raise DimensionError("a non-orthogonal instance needs at least two columns")
    rng_mat, rng_coef, rng_noise = _streams(cfg)
    for _ in range(_GENERAL_RESAMPLES):
        A = np.asfortranarray(rng_mat.standard_normal((cfg.m, cfg.n)))
        G = gram(A)
        if gram_condition(G) <= max_gram_condition and gram_coherence(G) >= min_coherence:
            return A, _rhs(A, cfg, rng_coef, rng_noise)
    raise GenError(
        f"no instance met coherence >= {min_coherence} and condition <= "
        f"{max_gram_condition:.1e} after {_GENERAL_RESAMPLES} draws for {cfg}"
    )

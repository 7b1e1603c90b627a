"""Exception types shared across the package."""


class OrthoSparseError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(OrthoSparseError, ValueError):
    """Input shapes are inconsistent or violate the rows > columns requirement."""


class IllConditioned(OrthoSparseError, ArithmeticError):
    """A (restricted) Gram matrix failed the conditioning guard."""


class EmptySupport(OrthoSparseError, ValueError):
    """A support set was empty where a nonempty one is required."""


class BadK(OrthoSparseError, ValueError):
    """Sparsity level k lies outside the valid range [1, n]."""


class SubsetCountError(OrthoSparseError, ValueError):
    """The exhaustive search would exceed its subset budget (pass force=True to override)."""


class GenError(OrthoSparseError, RuntimeError):
    """Instance generation failed after the allowed number of resamples."""


class InconsistencyError(OrthoSparseError, RuntimeError):
    """Numeric results contradict a structural identity; flagged for investigation."""


class FileFormatError(OrthoSparseError, ValueError):
    """A matrix or right-hand-side file could not be parsed."""

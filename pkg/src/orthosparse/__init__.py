"""Closed-form best-k-sparse least squares for orthogonal designs.

For a full-column-rank system with more rows than columns, the best
k-sparse least-squares solution is found without search: solve the
unrestricted problem, score each coordinate, keep the k best.  When the
matrix has orthogonal columns this is exactly the combinatorial optimum
for every k; for k=1 the agreement on a canonical family of probes holds
*only* for orthogonal columns, and :func:`converse_witness_search` finds a
counterexample probe whenever columns are correlated.

The exhaustive reference solver, seeded instance generators, verification
campaigns and a file-based CLI live alongside the solver so every claim
can be checked numerically.
"""

from .bench import run_bench
from .diagnostics import (
    ConverseWitness,
    GramDiagnostics,
    canonical_probe,
    converse_witness_search,
    lemma1_condition,
    orthogonality_check,
)
from .estimators import BruteForceSparseRegressor, FastSparseRegressor
from .exceptions import (
    BadK,
    DimensionError,
    EmptySupport,
    FileFormatError,
    GenError,
    IllConditioned,
    InconsistencyError,
    OrthoSparseError,
    SubsetCountError,
)
from .generate import GenConfig, gen_general_instance, gen_orthogonal_instance
from .io import (
    MATRIX_MARKET_HEADER,
    read_matrix_market,
    read_rhs,
    write_matrix_market,
    write_rhs,
)
from .linalg import (
    COND_LIMIT,
    gram,
    gram_and_inverse,
    gram_coherence,
    gram_condition,
    least_squares,
    residual_norm,
    restricted_least_squares,
)
from .oracle import SUBSET_BUDGET, brute_force_solve, enumerate_supports, subset_count
from .selector import (
    ScoreSelection,
    SparseSolution,
    fast_sparse_solve,
    score,
    select_support,
)
from .verify import CAMPAIGNS, DEFAULT_TOLERANCES, VerifyReport, run_campaign

__version__ = "0.1.0"

__all__ = [
    "BadK",
    "BruteForceSparseRegressor",
    "CAMPAIGNS",
    "COND_LIMIT",
    "ConverseWitness",
    "DEFAULT_TOLERANCES",
    "DimensionError",
    "EmptySupport",
    "FastSparseRegressor",
    "FileFormatError",
    "GenConfig",
    "GenError",
    "GramDiagnostics",
    "IllConditioned",
    "InconsistencyError",
    "MATRIX_MARKET_HEADER",
    "OrthoSparseError",
    "SUBSET_BUDGET",
    "ScoreSelection",
    "SparseSolution",
    "SubsetCountError",
    "VerifyReport",
    "brute_force_solve",
    "canonical_probe",
    "converse_witness_search",
    "enumerate_supports",
    "fast_sparse_solve",
    "gen_general_instance",
    "gen_orthogonal_instance",
    "gram",
    "gram_and_inverse",
    "gram_coherence",
    "gram_condition",
    "least_squares",
    "lemma1_condition",
    "orthogonality_check",
    "read_matrix_market",
    "read_rhs",
    "residual_norm",
    "restricted_least_squares",
    "run_bench",
    "run_campaign",
    "score",
    "select_support",
    "subset_count",
    "write_matrix_market",
    "write_rhs",
]

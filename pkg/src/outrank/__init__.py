"""Consensus rankings of alternatives under multiple weighted criteria.

Pipeline: a decision matrix (alternatives x criteria) is examined pairwise
by concordance (weight of agreeing criteria) and discordance (strongest
objection) tests; passing pairs form a directed outranking relation whose
kernel is the best-in-class set. Survey ingestion produces matrices from
Likert responses, sensitivity tools probe threshold and weight choices,
and a CLI/HTTP service expose the pipeline.
"""

__version__ = "0.1.0"

from .analysis import (
    BenchmarkEntry,
    CondensedGraph,
    PositionEntry,
    RankingReport,
    average_scores,
    benchmark_leaders,
    build_report,
    condense_cycles,
    dominance_levels,
    incomparable_pairs,
    kernel,
    positioning_table,
)
from .engine import (
    ConcordanceAnalysis,
    DiscordanceAnalysis,
    IndexOutOfRangeError,
    InvalidMatrixError,
    OutrankingGraph,
    SelfComparisonError,
    UnnormalizedWeightsError,
    UnorientedMatrixError,
    concordance_index,
    concordance_matrix,
    concordance_set,
    concordance_test,
    discordance_index,
    discordance_matrix,
    discordance_test,
    outrank,
)
from .estimator import ElectreRanker
from .model import (
    AllZeroWeightsError,
    Alternative,
    CriterionSpec,
    DecisionMatrix,
    Direction,
    ThresholdConfig,
    UNBOUNDED,
    ValidationResult,
    Violation,
    apply_directions,
    normalize_weights,
    normalized_weight_vector,
    validate_matrix,
    validate_thresholds,
)
from .sensitivity import (
    EmptyGridError,
    PerturbationSummary,
    SweepPoint,
    SweepResult,
    graph_fingerprint,
    threshold_sweep,
    weight_perturbation,
)
from .survey import (
    EmptyStoreError,
    MalformedHeaderError,
    SurveyDataset,
    SurveyRecord,
    SurveyValidationError,
    aggregate_means,
    parse_survey_csv,
)

__all__ = [
    "__version__",
    "Alternative",
    "CriterionSpec",
    "DecisionMatrix",
    "Direction",
    "ThresholdConfig",
    "UNBOUNDED",
    "ValidationResult",
    "Violation",
    "AllZeroWeightsError",
    "validate_matrix",
    "validate_thresholds",
    "normalize_weights",
    "normalized_weight_vector",
    "apply_directions",
    "ConcordanceAnalysis",
    "DiscordanceAnalysis",
    "OutrankingGraph",
    "InvalidMatrixError",
    "IndexOutOfRangeError",
    "SelfComparisonError",
    "UnnormalizedWeightsError",
    "UnorientedMatrixError",
    "concordance_set",
    "concordance_index",
    "concordance_matrix",
    "concordance_test",
    "discordance_index",
    "discordance_matrix",
    "discordance_test",
    "outrank",
    "CondensedGraph",
    "PositionEntry",
    "BenchmarkEntry",
    "RankingReport",
    "condense_cycles",
    "kernel",
    "dominance_levels",
    "incomparable_pairs",
    "positioning_table",
    "average_scores",
    "benchmark_leaders",
    "build_report",
    "SurveyRecord",
    "SurveyDataset",
    "MalformedHeaderError",
    "SurveyValidationError",
    "EmptyStoreError",
    "parse_survey_csv",
    "aggregate_means",
    "SweepPoint",
    "SweepResult",
    "PerturbationSummary",
    "EmptyGridError",
    "graph_fingerprint",
    "threshold_sweep",
    "weight_perturbation",
    "ElectreRanker",
]

"""Divergence measures over integer-quantized probability distributions."""

from .distributions import (
    OrderedQuantumDistribution,
    QuantumDistribution,
    format_distribution,
    from_multiplicities,
    make_comparable,
    parse_distribution,
)
from .divergence import (
    MEASURE_LABELS,
    MaximizerResult,
    all_measures,
    build_maximizer,
    hellinger,
    hellinger_squared,
    jaccard_distance,
    jsd,
    kl,
    kn,
)
from .enumeration import (
    count_ordered,
    count_unordered,
    enumerate_ordered,
    enumerate_unordered,
)
from .errors import (
    BudgetExceeded,
    DegenerateInput,
    DegenerateNormalizer,
    DomainMismatch,
    EmptyDomain,
    InvalidSpec,
    NonUniformCapable,
    QuantumMismatch,
    ZeroCell,
)
from .experiments import (
    ExperimentRecord,
    PairwiseResult,
    RankComparisonResult,
    UniformStudyRow,
    emit_tables,
    run_pairwise_experiment,
    run_rank_comparison,
    run_uniform_study,
    write_uniform_study_csv,
)
from .oracle import (
    MaximalityReport,
    brute_force_max_kl,
    special_case_gap,
    verify_maximizer_sweep,
)
from .stats import (
    DistributionProperties,
    GapStats,
    distribution_properties,
    fractional_ranks,
    gap_stats,
    pearson,
    spearman,
)

__version__ = "0.1.0"

__all__ = [
    "QuantumDistribution",
    "OrderedQuantumDistribution",
    "from_multiplicities",
    "make_comparable",
    "parse_distribution",
    "format_distribution",
    "kl",
    "kn",
    "jsd",
    "hellinger",
    "hellinger_squared",
    "jaccard_distance",
    "all_measures",
    "build_maximizer",
    "MaximizerResult",
    "MEASURE_LABELS",
    "count_unordered",
    "count_ordered",
    "enumerate_unordered",
    "enumerate_ordered",
    "brute_force_max_kl",
    "verify_maximizer_sweep",
    "special_case_gap",
    "MaximalityReport",
    "distribution_properties",
    "DistributionProperties",
    "pearson",
    "spearman",
    "fractional_ranks",
    "gap_stats",
    "GapStats",
    "run_pairwise_experiment",
    "run_uniform_study",
    "write_uniform_study_csv",
    "emit_tables",
    "run_rank_comparison",
    "PairwiseResult",
    "RankComparisonResult",
    "UniformStudyRow",
    "ExperimentRecord",
    "EmptyDomain",
    "ZeroCell",
    "InvalidSpec",
    "DomainMismatch",
    "QuantumMismatch",
    "DegenerateNormalizer",
    "DegenerateInput",
    "NonUniformCapable",
    "BudgetExceeded",
]

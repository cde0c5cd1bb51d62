"""Weighted rank correlation through fuzzy order relations on rank positions."""

__version__ = "0.1.0"

from .baselines import (
    AdjacentSwapCosts,
    RankWeights,
    kv_average_cost,
    kv_gamma_delta,
    kv_position_costs,
    kv_weighted_kendall,
    shieh_tau_w,
)
from .dataset import Dataset, load_dataset
from .errors import FuzzyRankError, ResourceLimitError, UnsupportedInputError, ValidationError
from .kernels import BACKEND
from .measures import MeasureSpec, compute, matrix, sensitivity
from .rankdata import (
    UNDEFINED,
    PairClass,
    PairStats,
    Ranking,
    classify_pair,
    corr_to_distance,
    distance_to_corr,
    gamma,
    kendall_distance,
    kendall_tau,
    make_ranking,
    pair_stats,
)
from .relations import (
    DistanceAggregator,
    ScalingFunction,
    TNorm,
    distance,
    equivalence,
    make_scaling,
    order_leq,
    order_strict,
    tconorm_apply,
    tnorm_apply,
    top_k_scaling,
    uniform_scaling,
)
from .scaledgamma import (
    FuzzyPairScores,
    FuzzyStats,
    ScaledGammaConfig,
    fuzzy_pair_scores,
    fuzzy_stats,
    scaled_gamma,
)
from .ties import (
    ExtensionSummary,
    ScoringMatrix,
    enumerate_extensions,
    extension_correlation,
    scoring_correlation,
)

"""Scaled gamma: gamma computed from fuzzy concordance and discordance degrees.

Each item pair is split into a degree of concordance, of discordance and of
tie. The strict orders on both rankings are combined with a t-norm, so a
crisply concordant pair whose positions are hard to tell apart under the
scaling function becomes partly tied, which shrinks its influence on

    scaled_gamma = (C~ - D~) / (C~ + D~).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import ValidationError
from .rankdata import UNDEFINED, Correlation, Ranking, RankingLike, _pair_rankings
from .relations import (
    DistanceAggregator,
    ScalingFunction,
    TNorm,
    _distance_matrix,
    equivalence,
    make_scaling,
    order_strict,
    tconorm_apply,
    tnorm_apply,
)


@dataclass(frozen=True)
class ScaledGammaConfig:
    """Scalings for both rankings plus the logical operators.

    ``scaling_y`` defaults to ``scaling_x``. The defaults (Lukasiewicz t-norm,
    sum-capped distance) are the combination under which ``1 - d`` is a
    proper fuzzy equivalence.
    """

    scaling_x: ScalingFunction
    scaling_y: ScalingFunction | None = None
    tnorm: TNorm = TNorm.LUKASIEWICZ
    aggregator: DistanceAggregator = DistanceAggregator.SUM

    def __post_init__(self):
        if self.scaling_y is None:
            object.__setattr__(self, "scaling_y", self.scaling_x)
        object.__setattr__(self, "tnorm", TNorm.parse(self.tnorm))
        object.__setattr__(self, "aggregator", DistanceAggregator.parse(self.aggregator))
        if self.scaling_x.n != self.scaling_y.n:
            raise ValidationError(
                f"scalings cover different item counts ({self.scaling_x.n} vs {self.scaling_y.n})"
            )

    @classmethod
    def from_weights(
        cls,
        weights: Sequence[float],
        weights_y: Sequence[float] | None = None,
        tnorm: TNorm | str = TNorm.LUKASIEWICZ,
        aggregator: DistanceAggregator | str = DistanceAggregator.SUM,
    ) -> "ScaledGammaConfig":
        sx = make_scaling(weights)
        sy = make_scaling(weights_y) if weights_y is not None else None
        return cls(sx, sy, tnorm, aggregator)

    @property
    def n(self) -> int:
        return self.scaling_x.n


@dataclass(frozen=True)
class FuzzyPairScores:
    concordance: float
    discordance: float
    tie: float


@dataclass(frozen=True)
class FuzzyStats:
    c: float
    d: float
    t: float
    n: int

    @property
    def num_pairs(self) -> int:
        return self.n * (self.n - 1) // 2


def _check(cfg: ScaledGammaConfig, x: RankingLike, y: RankingLike) -> tuple[Ranking, Ranking]:
    x, y = _pair_rankings(x, y)
    if x.n != cfg.n:
        raise ValidationError(f"rankings have {x.n} items but the scaling covers {cfg.n}")
    return x, y


def fuzzy_pair_scores(
    cfg: ScaledGammaConfig, x: RankingLike, y: RankingLike, i: int, j: int
) -> FuzzyPairScores:
    """Concordance, discordance and tie degree of item pair ``(i, j)``, 1-based."""
    x, y = _check(cfg, x, y)
    if not (1 <= i < j <= x.n):
        raise ValidationError(f"need 1 <= i < j <= {x.n}, got i={i}, j={j}")
    sx, sy, t, agg = cfg.scaling_x, cfg.scaling_y, cfg.tnorm, cfg.aggregator
    xi, xj = x.positions[i - 1], x.positions[j - 1]
    yi, yj = y.positions[i - 1], y.positions[j - 1]
    rx_ij = order_strict(sx, xi, xj, agg)
    rx_ji = order_strict(sx, xj, xi, agg)
    ry_ij = order_strict(sy, yi, yj, agg)
    ry_ji = order_strict(sy, yj, yi, agg)
    conc = tnorm_apply(t, rx_ij, ry_ij) + tnorm_apply(t, rx_ji, ry_ji)
    disc = tnorm_apply(t, rx_ij, ry_ji) + tnorm_apply(t, rx_ji, ry_ij)
    tie = tconorm_apply(t, equivalence(sx, xi, xj, agg), equivalence(sy, yi, yj, agg))
    return FuzzyPairScores(conc, disc, tie)


def fuzzy_stats(cfg: ScaledGammaConfig, x: RankingLike, y: RankingLike) -> FuzzyStats:
    """Sum the pair degrees over all ``i < j`` (row-major order)."""
    x, y = _check(cfg, x, y)
    dist_x = _distance_matrix(cfg.scaling_x, cfg.aggregator)
    dist_y = _distance_matrix(cfg.scaling_y, cfg.aggregator)
    c, d, t = kernels.fuzzy_sums(x.array, y.array, dist_x, dist_y, cfg.tnorm.code)
    return FuzzyStats(float(c), float(d), float(t), x.n)


def scaled_gamma(cfg: ScaledGammaConfig, x: RankingLike, y: RankingLike) -> Correlation:
    """Weighted gamma ``(C~ - D~) / (C~ + D~)``, or :data:`UNDEFINED` if nothing is comparable."""
    st = fuzzy_stats(cfg, x, y)
    denom = st.c + st.d
    if denom <= 0.0:
        return UNDEFINED
    return (st.c - st.d) / denom

"""Competing weighted measures: Shieh's weighted tau and the position-weighted
Kendall distance of Kumar and Vassilvitskii (with a gamma-style variant).

All of them are defined on permutations only; rankings with ties raise
:class:`~fuzzyrank.errors.UnsupportedInputError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import UnsupportedInputError, ValidationError
from .rankdata import UNDEFINED, Correlation, Ranking, RankingLike, _pair_rankings


@dataclass(frozen=True)
class RankWeights:
    """Per-rank weights ``v``; pair weights are ``v_i * v_j``."""

    v: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "v", tuple(float(a) for a in self.v))
        if any(not np.isfinite(a) or a < 0 for a in self.v):
            raise ValidationError(f"rank weights must be finite and non-negative, got {self.v}")
        if not any(a > 0 for a in self.v):
            raise ValidationError("at least one rank weight must be positive")


@dataclass(frozen=True)
class AdjacentSwapCosts:
    """Costs ``delta_i`` for swapping the elements at positions ``i`` and ``i + 1``."""

    delta: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "delta", tuple(float(a) for a in self.delta))
        if len(self.delta) < 1:
            raise ValidationError("need at least one swap cost (n >= 2)")
        if any(not np.isfinite(a) or a < 0 for a in self.delta):
            raise ValidationError(f"swap costs must be finite and non-negative, got {self.delta}")

    @property
    def n(self) -> int:
        return len(self.delta) + 1


def _permutations(measure: str, x: RankingLike, y: RankingLike) -> tuple[Ranking, Ranking]:
    x, y = _pair_rankings(x, y)
    if x.has_ties or y.has_ties:
        raise UnsupportedInputError(f"{measure} is only defined for rankings without ties")
    return x, y


def _as_weights(w) -> RankWeights:
    return w if isinstance(w, RankWeights) else RankWeights(tuple(w))


def _as_costs(delta) -> AdjacentSwapCosts:
    return delta if isinstance(delta, AdjacentSwapCosts) else AdjacentSwapCosts(tuple(delta))


def shieh_tau_w(x: RankingLike, y: RankingLike, w: RankWeights | Sequence[float]) -> Correlation:
    """Shieh's weighted tau with product weights.

    ``x`` plays the role of the reference ranking: the weight of the item pair
    ``(i, j)`` is ``v[x_i] * v[x_j]``. Hence the measure is not symmetric.
    """
    x, y = _permutations("shieh_tau_w", x, y)
    w = _as_weights(w)
    if len(w.v) != x.n:
        raise ValidationError(f"need {x.n} rank weights, got {len(w.v)}")
    v = np.asarray(w.v)[x.array - 1]
    wc, wd, total = kernels.weighted_counts(x.array, y.array, np.outer(v, v))
    if total == 0.0:
        return UNDEFINED
    return float((wc - wd) / total)


def kv_position_costs(delta: AdjacentSwapCosts | Sequence[float]) -> np.ndarray:
    """Accumulated costs ``p_1 = 0, p_i = delta_1 + ... + delta_(i-1)``."""
    delta = _as_costs(delta)
    return np.concatenate(([0.0], np.cumsum(delta.delta)))


def kv_average_cost(p: Sequence[float], pi1: RankingLike, pi2: RankingLike, i: int) -> float:
    """Average per-step cost of moving item ``i`` (1-based) from ``pi1(i)`` to ``pi2(i)``."""
    pi1, pi2 = _permutations("kv_average_cost", pi1, pi2)
    if not 1 <= i <= pi1.n:
        raise ValidationError(f"item index {i} outside 1..{pi1.n}")
    if len(p) != pi1.n:
        raise ValidationError(f"need {pi1.n} accumulated costs, got {len(p)}")
    a, b = pi1.positions[i - 1], pi2.positions[i - 1]
    if a == b:
        return 1.0
    return (p[a - 1] - p[b - 1]) / (a - b)


def _average_costs(p: np.ndarray, pi1: Ranking, pi2: Ranking) -> np.ndarray:
    a, b = pi1.array, pi2.array
    moved = a != b
    pbar = np.ones(pi1.n)
    pbar[moved] = (p[a[moved] - 1] - p[b[moved] - 1]) / (a[moved] - b[moved])
    return pbar


def _kv_sums(delta, pi1, pi2, measure: str) -> tuple[float, float]:
    pi1, pi2 = _permutations(measure, pi1, pi2)
    delta = _as_costs(delta)
    if delta.n != pi1.n:
        raise ValidationError(f"need {pi1.n - 1} swap costs, got {len(delta.delta)}")
    pbar = _average_costs(kv_position_costs(delta), pi1, pi2)
    wc, wd, _ = kernels.weighted_counts(pi1.array, pi2.array, np.outer(pbar, pbar))
    return float(wc), float(wd)


def kv_weighted_kendall(
    delta: AdjacentSwapCosts | Sequence[float], pi1: RankingLike, pi2: RankingLike
) -> float:
    """Position-weighted Kendall distance: sum of ``pbar_i * pbar_j`` over discordant pairs."""
    return _kv_sums(delta, pi1, pi2, "kv_weighted_kendall")[1]


def kv_gamma_delta(
    delta: AdjacentSwapCosts | Sequence[float], pi1: RankingLike, pi2: RankingLike
) -> Correlation:
    """Gamma-style ratio of the cost-weighted concordant and discordant masses."""
    wc, wd = _kv_sums(delta, pi1, pi2, "kv_gamma_delta")
    if wc + wd == 0.0:
        return UNDEFINED
    return (wc - wd) / (wc + wd)

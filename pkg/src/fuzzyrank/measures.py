"""Uniform dispatch over every measure in the package.

A :class:`MeasureSpec` names a measure and carries whatever parameters it
needs; :func:`compute`, :func:`matrix` and :func:`sensitivity` evaluate it on
datasets or on synthetic swaps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import baselines, rankdata, scaledgamma, ties
from .dataset import Dataset
from .errors import FuzzyRankError, ValidationError
from .rankdata import UNDEFINED, Correlation, Ranking
from .relations import (
    DistanceAggregator,
    ScalingFunction,
    TNorm,
    make_scaling,
    top_k_scaling,
    uniform_scaling,
)
from .ties import DEFAULT_EXTENSION_CAP, ScoringMatrix

KINDS = ("tau", "gamma", "scaled-gamma", "shieh", "kv-kendall", "kv-gamma", "scoring", "extension")
SYMMETRIC_KINDS = frozenset(KINDS) - {"shieh"}


@dataclass(frozen=True)
class MeasureSpec:
    """A measure plus its parameters.

    Scaled gamma uses ``weights`` (and ``weights_y`` if the second ranking
    should be scaled differently); ``top_k`` builds a top-k scaling instead.
    With neither, every weight is 1.
    """

    kind: str = "tau"
    weights: tuple[float, ...] | None = None
    weights_y: tuple[float, ...] | None = None
    top_k: int | None = None
    tnorm: TNorm = TNorm.LUKASIEWICZ
    aggregator: DistanceAggregator = DistanceAggregator.SUM
    v: tuple[float, ...] | None = None
    delta: tuple[float, ...] | None = None
    scoring: ScoringMatrix = field(default_factory=ScoringMatrix)
    base: str = "tau"
    attitude: str = "mean"
    cap: int = DEFAULT_EXTENSION_CAP

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown measure {self.kind!r}; choose from {', '.join(KINDS)}")
        object.__setattr__(self, "tnorm", TNorm.parse(self.tnorm))
        object.__setattr__(self, "aggregator", DistanceAggregator.parse(self.aggregator))
        if self.weights is not None and self.top_k is not None:
            raise ValidationError("give either scaling weights or top_k, not both")
        if self.attitude not in ("min", "max", "mean"):
            raise ValidationError(f"unknown attitude {self.attitude!r}")
        if self.base not in ties.BASE_MEASURES:
            raise ValidationError(f"unknown base measure {self.base!r}")

    @property
    def symmetric(self) -> bool:
        return self.kind in SYMMETRIC_KINDS

    def scaling(self, n: int) -> ScalingFunction:
        if self.weights is not None:
            s = make_scaling(self.weights)
        elif self.top_k is not None:
            s = top_k_scaling(n, self.top_k)
        else:
            s = uniform_scaling(n)
        if s.n != n:
            raise ValidationError(f"scaling covers {s.n} positions but rankings have {n} items")
        return s

    def scaled_config(self, n: int) -> scaledgamma.ScaledGammaConfig:
        sy = make_scaling(self.weights_y) if self.weights_y is not None else None
        return scaledgamma.ScaledGammaConfig(self.scaling(n), sy, self.tnorm, self.aggregator)


@dataclass(frozen=True)
class Result:
    measure: str
    a: str
    b: str
    value: Correlation
    breakdown: dict[str, float] | None = None


def _evaluate(spec: MeasureSpec, x: Ranking, y: Ranking) -> tuple[Correlation, dict | None]:
    kind = spec.kind
    if kind in ("tau", "gamma"):
        st = rankdata.pair_stats(x, y)
        value = rankdata.kendall_tau(x, y) if kind == "tau" else rankdata.gamma(x, y)
        return value, {"C": st.c, "D": st.d, "T": st.t}
    if kind == "scaled-gamma":
        cfg = spec.scaled_config(x.n)
        st = scaledgamma.fuzzy_stats(cfg, x, y)
        return scaledgamma.scaled_gamma(cfg, x, y), {"C": st.c, "D": st.d, "T": st.t}
    if kind == "shieh":
        v = spec.v if spec.v is not None else (1.0,) * x.n
        return baselines.shieh_tau_w(x, y, v), None
    if kind in ("kv-kendall", "kv-gamma"):
        delta = spec.delta if spec.delta is not None else (1.0,) * (x.n - 1)
        if kind == "kv-kendall":
            return baselines.kv_weighted_kendall(delta, x, y), None
        return baselines.kv_gamma_delta(delta, x, y), None
    if kind == "scoring":
        return ties.scoring_correlation(x, y, spec.scoring), None
    summary = ties.extension_correlation(x, y, spec.base, spec.cap)
    return summary.aggregate(spec.attitude), {
        "min": summary.minimum,
        "max": summary.maximum,
        "mean": summary.mean,
        "count": summary.count,
    }


def evaluate(spec: MeasureSpec, x, y) -> tuple[Correlation, dict | None]:
    """Evaluate ``spec`` on two rankings; errors carry the measure name."""
    x, y = rankdata.make_ranking(x), rankdata.make_ranking(y)
    try:
        return _evaluate(spec, x, y)
    except FuzzyRankError as exc:
        raise type(exc)(f"{spec.kind}: {exc}") from exc


def compute(dataset: Dataset, a: str, b: str, spec: MeasureSpec) -> Result:
    value, breakdown = evaluate(spec, dataset[a], dataset[b])
    return Result(spec.kind, a, b, value, breakdown)


@dataclass(frozen=True)
class MatrixResult:
    names: tuple[str, ...]
    values: tuple[tuple[Correlation, ...], ...]
    symmetric: bool

    @property
    def warning(self) -> str | None:
        if self.symmetric:
            return None
        return "measure is not symmetric: entry (row, col) uses the row ranking as reference"


def matrix(dataset: Dataset, spec: MeasureSpec) -> MatrixResult:
    """All-pairs table; symmetric measures evaluate each unordered pair once."""
    k = len(dataset.names)
    table: list[list[Correlation]] = [[UNDEFINED] * k for _ in range(k)]
    for r in range(k):
        for c in range(k):
            if spec.symmetric and c < r:
                table[r][c] = table[c][r]
                continue
            table[r][c] = evaluate(spec, dataset.rankings[r], dataset.rankings[c])[0]
    return MatrixResult(dataset.names, tuple(tuple(row) for row in table), spec.symmetric)


def adjacent_swap(n: int, p: int) -> Ranking:
    """Identity on ``n`` items with the items at positions ``p`` and ``p + 1`` swapped."""
    pos = list(range(1, n + 1))
    pos[p - 1], pos[p] = pos[p], pos[p - 1]
    return Ranking(tuple(pos))


def sensitivity(n: int, spec: MeasureSpec) -> list[tuple[int, Correlation]]:
    """Measure value between the identity and each adjacent swap ``p, p + 1``."""
    if n < 3:
        raise ValidationError(f"sensitivity needs n >= 3, got {n}")
    identity = Ranking(tuple(range(1, n + 1)))
    return [(p, evaluate(spec, identity, adjacent_swap(n, p))[0]) for p in range(1, n)]


def penalties(series: Sequence[tuple[int, Correlation]]) -> list[float]:
    """``1 - value`` for each point of a sensitivity series."""
    return [1.0 - float(v) for _, v in series]

"""Scaling functions on rank positions and the fuzzy relations they induce.

A scaling function assigns each pair of adjacent positions ``(i, i+1)`` a
degree of distinguishability ``w(i)`` in ``[0, 1]``. Accumulating these
degrees gives a pseudo-metric ``d`` on positions ``1..n``, from which

* the equivalence ``E(x, y) = 1 - d(x, y)``,
* the weak order ``L(x, y) = 1 if x <= y else E(x, y)`` and
* the strict order ``R(x, y) = 1 - L(y, x)``

are derived. Positions are 1-based throughout.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .errors import ValidationError


class DistanceAggregator(enum.Enum):
    """How local distinguishability degrees are accumulated into a distance."""

    SUM = "sum"  # sum of weights, capped at 1
    MAX = "max"  # largest weight on the chain

    @classmethod
    def parse(cls, value: "DistanceAggregator | str") -> "DistanceAggregator":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValidationError(f"unknown aggregator {value!r}; expected 'sum' or 'max'") from None


class TNorm(enum.Enum):
    """Triangular norms available as generalized conjunctions."""

    MINIMUM = "min"
    PRODUCT = "prod"
    LUKASIEWICZ = "luk"

    @classmethod
    def parse(cls, value: "TNorm | str") -> "TNorm":
        if isinstance(value, cls):
            return value
        aliases = {"minimum": "min", "product": "prod", "lukasiewicz": "luk"}
        key = str(value).lower()
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise ValidationError(
                f"unknown t-norm {value!r}; expected 'min', 'prod' or 'luk'"
            ) from None

    @property
    def code(self) -> int:
        """Integer code understood by :mod:`fuzzyrank.kernels`."""
        return {
            TNorm.MINIMUM: kernels.TNORM_MIN,
            TNorm.PRODUCT: kernels.TNORM_PROD,
            TNorm.LUKASIEWICZ: kernels.TNORM_LUK,
        }[self]

    def __call__(self, a: float, b: float) -> float:
        return tnorm_apply(self, a, b)

    def conorm(self, a: float, b: float) -> float:
        return tconorm_apply(self, a, b)


def _check_degree(value: float, name: str) -> float:
    value = float(value)
    if not 0.0 <= value <= 1.0:
        raise ValidationError(f"{name} must lie in [0, 1], got {value}")
    return value


def tnorm_apply(t: TNorm | str, a: float, b: float) -> float:
    """Evaluate the t-norm ``t`` at ``(a, b)``."""
    t = TNorm.parse(t)
    a = _check_degree(a, "a")
    b = _check_degree(b, "b")
    if t is TNorm.MINIMUM:
        return min(a, b)
    if t is TNorm.PRODUCT:
        return a * b
    return max(0.0, a + b - 1.0)


def tconorm_apply(t: TNorm | str, a: float, b: float) -> float:
    """De Morgan dual of :func:`tnorm_apply`: ``1 - t(1 - a, 1 - b)``."""
    a = _check_degree(a, "a")
    b = _check_degree(b, "b")
    return 1.0 - tnorm_apply(t, 1.0 - a, 1.0 - b)


@dataclass(frozen=True)
class ScalingFunction:
    """Distinguishability degrees ``w(1), ..., w(n-1)`` between adjacent positions.

    Use :func:`make_scaling` or :func:`top_k_scaling` to construct one; the
    constructor validates but does not coerce.
    """

    weights: tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) < 1:
            raise ValidationError("a scaling function needs at least one weight (n >= 2)")
        for idx, w in enumerate(self.weights, start=1):
            if not (0.0 <= w <= 1.0):
                raise ValidationError(f"weight w({idx}) = {w} is outside [0, 1]")

    @property
    def n(self) -> int:
        return len(self.weights) + 1

    def distance_matrix(self, agg: DistanceAggregator | str = DistanceAggregator.SUM) -> np.ndarray:
        """``n x n`` matrix of :func:`distance` values, indexed by ``position - 1``."""
        agg = DistanceAggregator.parse(agg)
        return _distance_matrix(self, agg).copy()

    def __repr__(self) -> str:
        return f"ScalingFunction(n={self.n}, weights={list(self.weights)})"


_MATRIX_CACHE: dict[tuple[ScalingFunction, DistanceAggregator], np.ndarray] = {}


def _distance_matrix(s: ScalingFunction, agg: DistanceAggregator) -> np.ndarray:
    key = (s, agg)
    mat = _MATRIX_CACHE.get(key)
    if mat is not None:
        return mat
    n = s.n
    w = np.asarray(s.weights)
    mat = np.zeros((n, n))
    # row a accumulates w(a+1), w(a+2), ... left to right, as distance() does
    for a in range(n - 1):
        if agg is DistanceAggregator.SUM:
            row = np.minimum(1.0, np.cumsum(w[a:]))
        else:
            row = np.maximum.accumulate(w[a:])
        mat[a, a + 1 :] = row
    mat = np.maximum(mat, mat.T)
    mat.setflags(write=False)
    if len(_MATRIX_CACHE) > 256:
        _MATRIX_CACHE.clear()
    _MATRIX_CACHE[key] = mat
    return mat


def make_scaling(weights: Sequence[float]) -> ScalingFunction:
    """Build a scaling function for ``len(weights) + 1`` positions.

    Raises:
        ValidationError: if ``weights`` is empty or some entry is outside
            ``[0, 1]``; the message names the 1-based index.
    """
    values = tuple(float(w) for w in weights)
    for idx, w in enumerate(values, start=1):
        if not np.isfinite(w) or not 0.0 <= w <= 1.0:
            raise ValidationError(f"weight at index {idx} is {w}, outside [0, 1]")
    return ScalingFunction(values)


def top_k_scaling(n: int, k: int) -> ScalingFunction:
    """Crisp order on the first ``k`` positions, everything below is one class."""
    if n < 2:
        raise ValidationError(f"n must be at least 2, got {n}")
    if not 1 <= k <= n:
        raise ValidationError(f"k must satisfy 1 <= k <= n={n}, got {k}")
    return ScalingFunction(tuple(1.0 if i < k else 0.0 for i in range(1, n)))


def uniform_scaling(n: int, value: float = 1.0) -> ScalingFunction:
    """Scaling with every weight equal to ``value`` (1 gives the crisp order)."""
    if n < 2:
        raise ValidationError(f"n must be at least 2, got {n}")
    return make_scaling([value] * (n - 1))


def _check_positions(s: ScalingFunction, *positions: int) -> None:
    for p in positions:
        if int(p) != p or not 1 <= p <= s.n:
            raise ValidationError(f"position {p} is outside 1..{s.n}")


def distance(
    s: ScalingFunction, x: int, y: int, agg: DistanceAggregator | str = DistanceAggregator.SUM
) -> float:
    """Accumulated distinguishability between positions ``x`` and ``y``."""
    agg = DistanceAggregator.parse(agg)
    _check_positions(s, x, y)
    lo, hi = min(x, y), max(x, y)
    if lo == hi:
        return 0.0
    chain = s.weights[lo - 1 : hi - 1]
    if agg is DistanceAggregator.SUM:
        total = 0.0
        for w in chain:
            total += w
        return min(1.0, total)
    return max(chain)


def equivalence(
    s: ScalingFunction, x: int, y: int, agg: DistanceAggregator | str = DistanceAggregator.SUM
) -> float:
    return 1.0 - distance(s, x, y, agg)


def order_leq(
    s: ScalingFunction, x: int, y: int, agg: DistanceAggregator | str = DistanceAggregator.SUM
) -> float:
    """Degree to which position ``x`` is at most position ``y``."""
    _check_positions(s, x, y)
    if x <= y:
        return 1.0
    return equivalence(s, x, y, agg)


def order_strict(
    s: ScalingFunction, x: int, y: int, agg: DistanceAggregator | str = DistanceAggregator.SUM
) -> float:
    """Degree to which position ``x`` is strictly before position ``y``."""
    return 1.0 - order_leq(s, y, x, agg)


def relation_tables(
    s: ScalingFunction, agg: DistanceAggregator | str = DistanceAggregator.SUM
) -> dict[str, np.ndarray]:
    """Full ``d``, ``E`` and ``R`` tables (row = x, column = y), 0-indexed."""
    agg = DistanceAggregator.parse(agg)
    d = _distance_matrix(s, agg).copy()
    idx = np.arange(s.n)
    r = np.where(idx[:, None] < idx[None, :], d, 0.0)
    return {"d": d, "E": 1.0 - d, "R": r}

"""Two readings of tied items.

* Indifference: a tie is a genuine statement of equality. Pairs are scored
  with a 3x3 table indexed by the comparison outcome in each ranking.
* Incomparability: a tie hides an unknown strict order. Rankings are compared
  through all pairs of their linear extensions and the resulting set of
  correlations is summarized by its minimum, maximum and mean.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ResourceLimitError, UnsupportedInputError, ValidationError
from .rankdata import (
    UNDEFINED,
    Correlation,
    Ranking,
    RankingLike,
    _pair_rankings,
    gamma,
    kendall_tau,
    make_ranking,
)

DEFAULT_EXTENSION_CAP = 10_000

LESS, EQUAL, GREATER = 0, 1, 2


@dataclass(frozen=True)
class ScoringMatrix:
    """Scores ``s[a][b]`` for outcome ``a`` in x and ``b`` in y.

    Rows and columns are ordered (less, equal, greater), comparing item ``i``
    against item ``j`` for ``i < j``.
    """

    s: tuple[tuple[float, float, float], ...] = (
        (1.0, 0.0, -1.0),
        (0.0, 1.0, 0.0),
        (-1.0, 0.0, 1.0),
    )

    def __post_init__(self):
        rows = tuple(tuple(float(v) for v in row) for row in self.s)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValidationError("scoring matrix must be 3x3")
        object.__setattr__(self, "s", rows)
        s = rows
        if any(not -1.0 <= v <= 1.0 for r in s for v in r):
            raise ValidationError("scores must lie in [-1, 1]")
        if s[LESS][LESS] != s[GREATER][GREATER]:
            raise ValidationError("s[less][less] must equal s[greater][greater]")
        if s[LESS][GREATER] != s[GREATER][LESS]:
            raise ValidationError("s[less][greater] must equal s[greater][less]")
        for a in range(3):
            if any(s[a][a] < s[a][b] for b in range(3)):
                raise ValidationError(f"row {a + 1}: the diagonal entry must be the largest")
        lowest = s[LESS][GREATER]
        if any(v < lowest for r in s for v in r):
            raise ValidationError("s[less][greater] must be the smallest score")

    @classmethod
    def from_flat(cls, values: Sequence[float]) -> "ScoringMatrix":
        values = list(values)
        if len(values) != 9:
            raise ValidationError(f"expected 9 scores (row-major), got {len(values)}")
        return cls(tuple(tuple(values[3 * r : 3 * r + 3]) for r in range(3)))

    def as_array(self) -> np.ndarray:
        return np.array(self.s)


def scoring_correlation(
    x: RankingLike, y: RankingLike, s: ScoringMatrix | None = None
) -> float:
    """Average pair score over all ``N (N - 1) / 2`` pairs."""
    x, y = _pair_rankings(x, y)
    table = (s or ScoringMatrix()).as_array()
    i, j = np.triu_indices(x.n, k=1)
    # sign -1 / 0 / +1 maps to less / equal / greater
    cx = np.sign(x.array[i] - x.array[j]) + 1
    cy = np.sign(y.array[i] - y.array[j]) + 1
    return float(table[cx, cy].sum() / len(i))


def extension_count(x: RankingLike) -> int:
    """Number of linear extensions: product of factorials of the bucket sizes."""
    x = make_ranking(x)
    return math.prod(math.factorial(len(g)) for g in x.buckets())


def enumerate_extensions(x: RankingLike, cap: int = DEFAULT_EXTENSION_CAP) -> list[Ranking]:
    """All tie-free rankings consistent with the bucket order ``x``.

    Raises:
        ResourceLimitError: if there are more than ``cap`` extensions.
    """
    x = make_ranking(x)
    count = extension_count(x)
    if count > cap:
        raise ResourceLimitError(f"{count} linear extensions exceed the cap of {cap}")
    buckets = x.buckets()
    offsets = np.cumsum([0] + [len(g) for g in buckets[:-1]])
    out = []
    for orders in itertools.product(*(itertools.permutations(g) for g in buckets)):
        pos = [0] * x.n
        for offset, order in zip(offsets, orders):
            for k, item in enumerate(order):
                pos[item] = int(offset) + k + 1
        out.append(Ranking(tuple(pos)))
    return out


@dataclass(frozen=True)
class ExtensionSummary:
    minimum: float
    maximum: float
    mean: float
    count: int

    def aggregate(self, attitude: str) -> float:
        """``min`` (pessimistic), ``max`` (optimistic) or ``mean``."""
        try:
            return {"min": self.minimum, "max": self.maximum, "mean": self.mean}[attitude]
        except KeyError:
            raise ValidationError(
                f"unknown attitude {attitude!r}; expected 'min', 'max' or 'mean'"
            ) from None


BASE_MEASURES: dict[str, Callable[[Ranking, Ranking], Correlation]] = {
    "tau": kendall_tau,
    "gamma": gamma,
}


def extension_correlation(
    x: RankingLike,
    y: RankingLike,
    base: str | Callable[[Ranking, Ranking], Correlation] = "tau",
    cap: int = DEFAULT_EXTENSION_CAP,
) -> ExtensionSummary:
    """Summarize ``base`` over every pair of linear extensions of ``x`` and ``y``.

    ``cap`` bounds the number of extension pairs evaluated.
    """
    x, y = _pair_rankings(x, y)
    if isinstance(base, str):
        try:
            measure = BASE_MEASURES[base]
        except KeyError:
            raise ValidationError(f"unknown base measure {base!r}") from None
    else:
        measure = base
    total = extension_count(x) * extension_count(y)
    if total > cap:
        raise ResourceLimitError(f"{total} pairs of linear extensions exceed the cap of {cap}")
    ext_x = enumerate_extensions(x, cap)
    ext_y = enumerate_extensions(y, cap)
    values = []
    for ex in ext_x:
        for ey in ext_y:
            v = measure(ex, ey)
            if v is UNDEFINED:
                raise UnsupportedInputError("base measure is undefined on an extension pair")
            values.append(float(v))
    lo, hi = min(values), max(values)
    # fsum is order independent; clamp absorbs the final division's rounding
    mean = min(hi, max(lo, math.fsum(values) / len(values)))
    return ExtensionSummary(lo, hi, mean, len(values))

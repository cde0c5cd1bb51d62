"""Rankings with ties, crisp pair classification and classic coefficients."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

import numpy as np

from . import kernels
from .errors import ValidationError


class Undefined:
    """Result of a ratio measure whose denominator vanishes.

    There is exactly one instance, :data:`UNDEFINED`. It is falsy and prints
    as ``undef``.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "undef"

    __str__ = __repr__

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (Undefined, ())


UNDEFINED = Undefined()

Correlation = Union[float, Undefined]


def is_undefined(value) -> bool:
    return value is UNDEFINED


@dataclass(frozen=True)
class Ranking:
    """A bucket order over ``n`` items stored as dense 1-based positions.

    ``positions[i]`` is the rank of item ``i`` (0-based item index here,
    1-based in the pair-level API). Equal positions mean tied items.
    """

    positions: tuple[int, ...]

    def __post_init__(self):
        if len(self.positions) < 2:
            raise ValidationError(f"a ranking needs at least 2 items, got {len(self.positions)}")
        distinct = sorted(set(self.positions))
        if distinct != list(range(1, len(distinct) + 1)):
            raise ValidationError(
                f"positions {self.positions} are not dense ranks 1..m; use make_ranking()"
            )

    @property
    def n(self) -> int:
        return len(self.positions)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.asarray(self.positions, dtype=np.int64)
        arr.setflags(write=False)
        return arr

    @property
    def has_ties(self) -> bool:
        return len(set(self.positions)) < self.n

    @property
    def num_buckets(self) -> int:
        return max(self.positions)

    def buckets(self) -> list[list[int]]:
        """0-based item indices grouped by position, best bucket first."""
        groups: list[list[int]] = [[] for _ in range(self.num_buckets)]
        for item, pos in enumerate(self.positions):
            groups[pos - 1].append(item)
        return groups

    def bucket_string(self, items: Sequence[str] | None = None) -> str:
        """Compact notation such as ``BE|AD|C``."""
        if items is None:
            items = [chr(ord("A") + k) if k < 26 else f"#{k + 1}" for k in range(self.n)]
        sep = "" if all(len(str(it)) == 1 for it in items) else ","
        return "|".join(sep.join(str(items[k]) for k in grp) for grp in self.buckets())

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.positions)


RankingLike = Union[Ranking, Sequence]


def make_ranking(values: RankingLike) -> Ranking:
    """Canonicalize arbitrary orderable values into dense ranks.

    Only relative order is kept: ``(10.5, 3.2, 7.7)`` becomes ``(3, 1, 2)``
    and equal values become tied items.
    """
    if isinstance(values, Ranking):
        return values
    values = list(values)
    if len(values) < 2:
        raise ValidationError(f"a ranking needs at least 2 items, got {len(values)}")
    try:
        _, inverse = np.unique(np.asarray(values), return_inverse=True)
    except TypeError as exc:
        raise ValidationError(f"values are not mutually orderable: {exc}") from None
    return Ranking(tuple(int(k) + 1 for k in inverse.ravel()))


def _pair_rankings(x: RankingLike, y: RankingLike) -> tuple[Ranking, Ranking]:
    x, y = make_ranking(x), make_ranking(y)
    if x.n != y.n:
        raise ValidationError(f"rankings have different lengths ({x.n} vs {y.n})")
    return x, y


class PairClass(enum.Enum):
    CONCORDANT = "concordant"
    DISCORDANT = "discordant"
    TIED_X = "tiedX"
    TIED_Y = "tiedY"
    TIED_XY = "tiedXY"


@dataclass(frozen=True)
class PairStats:
    """Counts of concordant, discordant and tied item pairs."""

    c: int
    d: int
    tx: int
    ty: int
    txy: int
    n: int

    @property
    def t(self) -> int:
        return self.tx + self.ty + self.txy

    @property
    def num_pairs(self) -> int:
        return self.n * (self.n - 1) // 2


def classify_pair(x: RankingLike, y: RankingLike, i: int, j: int) -> PairClass:
    """Classify the item pair ``(i, j)`` (1-based, ``i < j``)."""
    x, y = _pair_rankings(x, y)
    if not (1 <= i < j <= x.n):
        raise ValidationError(f"need 1 <= i < j <= {x.n}, got i={i}, j={j}")
    sx = np.sign(x.positions[i - 1] - x.positions[j - 1])
    sy = np.sign(y.positions[i - 1] - y.positions[j - 1])
    if sx == 0 and sy == 0:
        return PairClass.TIED_XY
    if sx == 0:
        return PairClass.TIED_X
    if sy == 0:
        return PairClass.TIED_Y
    return PairClass.CONCORDANT if sx * sy > 0 else PairClass.DISCORDANT


def pair_stats(x: RankingLike, y: RankingLike) -> PairStats:
    x, y = _pair_rankings(x, y)
    c, d, tx, ty, txy = (int(v) for v in kernels.crisp_counts(x.array, y.array))
    return PairStats(c=c, d=d, tx=tx, ty=ty, txy=txy, n=x.n)


def kendall_tau(x: RankingLike, y: RankingLike) -> float:
    """``(C - D) / (N (N - 1) / 2)``; ties count in the denominator."""
    st = pair_stats(x, y)
    return (st.c - st.d) / st.num_pairs


def gamma(x: RankingLike, y: RankingLike) -> Correlation:
    """Goodman and Kruskal's gamma, ``(C - D) / (C + D)``, or :data:`UNDEFINED`."""
    st = pair_stats(x, y)
    if st.c + st.d == 0:
        return UNDEFINED
    return (st.c - st.d) / (st.c + st.d)


def corr_to_distance(corr: float, m: float) -> float:
    """Map a correlation in ``[-1, 1]`` to a distance in ``[0, m]``."""
    if not m > 0:
        raise ValidationError(f"maximal distance must be positive, got {m}")
    if not -1.0 <= corr <= 1.0:
        raise ValidationError(f"correlation must lie in [-1, 1], got {corr}")
    return m * (1.0 - corr) / 2.0


def distance_to_corr(dist: float, m: float) -> float:
    if not m > 0:
        raise ValidationError(f"maximal distance must be positive, got {m}")
    return 1.0 - 2.0 * dist / m


def kendall_distance(x: RankingLike, y: RankingLike) -> float:
    """Tau-derived Kendall distance with ``M = N (N - 1) / 2``.

    Equal to ``corr_to_distance(kendall_tau(x, y), N (N - 1) / 2)`` but
    evaluated on the integer counts, so on permutations it is exactly the
    number of inversions.
    """
    st = pair_stats(x, y)
    return (st.num_pairs - st.c + st.d) / 2

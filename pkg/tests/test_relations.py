import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzyrank import (
    DistanceAggregator,
    TNorm,
    ValidationError,
    distance,
    equivalence,
    make_scaling,
    order_leq,
    order_strict,
    tconorm_apply,
    tnorm_apply,
    top_k_scaling,
)
from fuzzyrank.relations import relation_tables

from oracles import loop_distance

weights_st = st.lists(st.floats(0.0, 1.0), min_size=1, max_size=11)


def test_make_scaling_crisp():
    s = make_scaling((1, 1, 1))
    assert s.n == 4
    assert s.weights == (1.0, 1.0, 1.0)


def test_make_scaling_figure1(figure1):
    assert figure1.n == 12
    assert figure1.weights[3:6] == (0.4, 0.2, 0.2)


def test_make_scaling_reports_index():
    with pytest.raises(ValidationError, match="index 2"):
        make_scaling((0.5, 1.2))


def test_make_scaling_rejects_empty():
    with pytest.raises(ValidationError):
        make_scaling(())


@pytest.mark.parametrize(
    "n, k, expected",
    [(5, 3, (1, 1, 0, 0)), (5, 5, (1, 1, 1, 1)), (5, 1, (0, 0, 0, 0))],
)
def test_top_k_scaling(n, k, expected):
    assert top_k_scaling(n, k).weights == expected


@pytest.mark.parametrize("k", [0, 6])
def test_top_k_scaling_out_of_range(k):
    with pytest.raises(ValidationError):
        top_k_scaling(5, k)


def test_figure1_worked_example(figure1):
    assert distance(figure1, 4, 7) == pytest.approx(0.8, abs=1e-12)
    assert equivalence(figure1, 4, 7) == pytest.approx(0.2, abs=1e-12)
    assert order_strict(figure1, 4, 7) == pytest.approx(0.8, abs=1e-12)
    assert order_leq(figure1, 7, 4) == pytest.approx(0.2, abs=1e-12)
    assert order_leq(figure1, 4, 7) == 1.0


def test_distance_zero_on_diagonal(figure1):
    for x in range(1, 13):
        assert distance(figure1, x, x) == 0.0
        assert distance(figure1, x, x, "max") == 0.0


@pytest.mark.parametrize("bad", [0, 13, -1])
def test_positions_are_one_based(figure1, bad):
    with pytest.raises(ValidationError):
        distance(figure1, bad, 3)


def test_distance_matches_loop_oracle(rng):
    for _ in range(50):
        n = int(rng.integers(2, 15))
        w = rng.uniform(0, 0.6, n - 1)
        s = make_scaling(w)
        for agg in ("sum", "max"):
            for x, y in itertools.product(range(1, n + 1), repeat=2):
                assert distance(s, x, y, agg) == pytest.approx(loop_distance(list(w), x, y, agg), abs=1e-12)


def test_extreme_scalings():
    crisp = make_scaling([1] * 5)
    flat = make_scaling([0] * 5)
    for x, y in itertools.product(range(1, 7), repeat=2):
        assert equivalence(flat, x, y) == 1.0
        if x != y:
            assert equivalence(crisp, x, y) == 0.0
    assert order_leq(crisp, 3, 2) == 0.0


def _random_scalings(rng, count, n_max=12):
    for _ in range(count):
        n = int(rng.integers(2, n_max + 1))
        yield make_scaling(rng.uniform(0, 1, n - 1) * rng.choice([0.2, 0.5, 1.0]))


@pytest.mark.parametrize("agg", ["sum", "max"])
def test_partition_and_one_sidedness(rng, agg):
    for s in _random_scalings(rng, 40):
        for x, y in itertools.product(range(1, s.n + 1), repeat=2):
            r_xy, r_yx = order_strict(s, x, y, agg), order_strict(s, y, x, agg)
            assert r_xy + equivalence(s, x, y, agg) + r_yx == pytest.approx(1.0, abs=1e-12)
            assert min(r_xy, r_yx) == 0.0


@pytest.mark.parametrize("agg", ["sum", "max"])
def test_pseudo_metric_exhaustive(rng, agg):
    # the max aggregation is checked per instance rather than assumed
    for s in _random_scalings(rng, 30):
        d = s.distance_matrix(agg)
        assert np.allclose(d, d.T, atol=0)
        assert np.all(np.diag(d) == 0)
        lhs = d[:, None, :]
        rhs = d[:, :, None] + d[None, :, :]
        assert np.all(lhs <= rhs + 1e-12)


def test_lukasiewicz_transitivity_of_equivalence(rng):
    for s in _random_scalings(rng, 30):
        e = 1.0 - s.distance_matrix("sum")
        through = np.maximum(0.0, e[:, :, None] + e[None, :, :] - 1.0)  # [x, y, z]
        assert np.all(through <= e[:, None, :] + 1e-12)


def test_order_properties(rng):
    for s in _random_scalings(rng, 30):
        for x, y in itertools.product(range(1, s.n + 1), repeat=2):
            lxy, lyx = order_leq(s, x, y), order_leq(s, y, x)
            assert max(lxy, lyx) == 1.0
            assert max(0.0, lxy + lyx - 1.0) <= equivalence(s, x, y) + 1e-12
            assert equivalence(s, x, y) <= lxy + 1e-12


def test_relation_tables_agree_with_pointwise(figure1):
    tables = relation_tables(figure1)
    for x, y in itertools.product(range(1, 13), repeat=2):
        assert tables["d"][x - 1, y - 1] == pytest.approx(distance(figure1, x, y), abs=1e-12)
        assert tables["R"][x - 1, y - 1] == pytest.approx(order_strict(figure1, x, y), abs=1e-12)


@pytest.mark.parametrize(
    "t, a, b, expected",
    [("luk", 0.7, 0.6, 0.3), ("min", 0.7, 0.6, 0.6), ("prod", 0.5, 0.5, 0.25)],
)
def test_tnorm_values(t, a, b, expected):
    assert tnorm_apply(t, a, b) == pytest.approx(expected, abs=1e-12)


def test_product_conorm():
    assert tconorm_apply(TNorm.PRODUCT, 0.5, 0.5) == pytest.approx(0.75)


def test_tnorm_rejects_out_of_range():
    with pytest.raises(ValidationError):
        tnorm_apply("luk", 1.2, 0.3)
    with pytest.raises(ValidationError):
        TNorm.parse("drastic")


@pytest.mark.parametrize("t", list(TNorm))
def test_tnorm_axioms_on_grid(t):
    grid = np.linspace(0.0, 1.0, 101)
    vals = np.array([[tnorm_apply(t, a, b) for b in grid] for a in grid])
    assert np.allclose(vals, vals.T, atol=1e-15)
    assert np.allclose(vals[:, -1], grid, atol=1e-15)
    assert np.all(vals[:, 0] == 0.0)
    assert np.all(np.diff(vals, axis=0) >= -1e-15)
    assert np.all(np.diff(vals, axis=1) >= -1e-15)
    for a in grid[::10]:
        for b in grid[::10]:
            for c in grid[::10]:
                left = tnorm_apply(t, tnorm_apply(t, a, b), c)
                right = tnorm_apply(t, a, tnorm_apply(t, b, c))
                assert left == pytest.approx(right, abs=1e-12)
            assert tconorm_apply(t, a, b) == pytest.approx(1 - tnorm_apply(t, 1 - a, 1 - b), abs=1e-15)


@given(weights_st, st.data())
def test_distance_symmetric_and_bounded(weights, data):
    s = make_scaling(weights)
    x = data.draw(st.integers(1, s.n))
    y = data.draw(st.integers(1, s.n))
    for agg in DistanceAggregator:
        d = distance(s, x, y, agg)
        assert 0.0 <= d <= 1.0
        assert d == distance(s, y, x, agg)

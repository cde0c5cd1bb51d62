import os
import subprocess
import sys

import numpy as np
import pytest

from fuzzyrank import kernels, make_scaling


def _rank_pair(rng, n):
    return rng.integers(1, n + 1, n).astype(np.int64), (rng.permutation(n) + 1).astype(np.int64)


def test_crisp_counts_backends_agree(rng):
    for _ in range(100):
        n = int(rng.integers(2, 30))
        x, y = _rank_pair(rng, n)
        assert np.array_equal(kernels.crisp_counts_nb(x, y), kernels.crisp_counts_np(x, y))


@pytest.mark.parametrize("code", [kernels.TNORM_MIN, kernels.TNORM_PROD, kernels.TNORM_LUK])
def test_fuzzy_sums_backends_agree(rng, code):
    for _ in range(50):
        n = int(rng.integers(2, 30))
        x, y = _rank_pair(rng, n)
        dx = make_scaling(rng.uniform(0, 1, n - 1)).distance_matrix()
        dy = make_scaling(rng.uniform(0, 0.3, n - 1)).distance_matrix("max")
        a = kernels.fuzzy_sums_nb(x, y, dx, dy, code)
        b = kernels.fuzzy_sums_np(x, y, dx, dy, code)
        assert np.allclose(a, b, rtol=0, atol=1e-12)


def test_weighted_counts_backends_agree(rng):
    for _ in range(50):
        n = int(rng.integers(2, 30))
        x, y = _rank_pair(rng, n)
        w = rng.uniform(0, 2, (n, n))
        assert np.allclose(kernels.weighted_counts_nb(x, y, w), kernels.weighted_counts_np(x, y, w), atol=1e-12)


def _backend_with_env(value):
    env = dict(os.environ, FUZZYRANK_DISABLE_NUMBA=value)
    out = subprocess.run(
        [sys.executable, "-c", "import fuzzyrank; print(fuzzyrank.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_env_flag_selects_numpy():
    assert _backend_with_env("1") == "numpy"
    assert _backend_with_env("") == "numba"


def test_fallback_backend_gives_same_results():
    code = (
        "import fuzzyrank as f;"
        "c=f.ScaledGammaConfig(f.make_scaling([0.9,0.5,0.3,0.2,0.1]), tnorm='prod');"
        "print(repr(f.scaled_gamma(c,[1,2,3,4,5,6],[2,1,4,3,6,5])), f.pair_stats([1,1,2,3],[2,1,1,3]))"
    )
    outs = []
    for flag in ("1", ""):
        env = dict(os.environ, FUZZYRANK_DISABLE_NUMBA=flag)
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout)
    a, b = outs
    va, vb = float(a.split()[0]), float(b.split()[0])
    assert va == pytest.approx(vb, abs=1e-12)
    assert a.split(" ", 1)[1] == b.split(" ", 1)[1]


def test_benchmark_script_runs():
    script = os.path.join(os.path.dirname(__file__), "..", "benchmarks", "bench_kernels.py")
    out = subprocess.run(
        [sys.executable, script, "--sizes", "5", "--repeat", "1"], capture_output=True, text=True, check=True
    ).stdout
    assert "fuzzy_sums" in out and "speedup" in out

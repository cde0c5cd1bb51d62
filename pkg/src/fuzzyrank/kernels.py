"""O(N^2) pair-scan kernels.

Every kernel exists twice: a numba version (explicit row-major loop over
i < j) and a numpy version (vectorized over the upper triangle). The public
names dispatch to one of them according to :data:`fuzzyrank._accel.USE_NUMBA`.
Both versions are importable directly so they can be compared.

Rank arrays passed in here hold 1-based positions as ``int64``. Distance
matrices are indexed by ``position - 1``.
"""

import numpy as np

from ._accel import USE_NUMBA, njit

TNORM_MIN = 0
TNORM_PROD = 1
TNORM_LUK = 2


# --------------------------------------------------------------------------
# numba kernels

@njit(cache=True)
def _tnorm_nb(code, a, b):
    if code == TNORM_MIN:
        return a if a < b else b
    if code == TNORM_PROD:
        return a * b
    s = a + b - 1.0
    return s if s > 0.0 else 0.0


@njit(cache=True)
def crisp_counts_nb(x, y):
    out = np.zeros(5, dtype=np.int64)
    n = x.shape[0]
    for i in range(n - 1):
        for j in range(i + 1, n):
            sx = x[i] - x[j]
            sy = y[i] - y[j]
            if sx == 0 and sy == 0:
                out[4] += 1
            elif sx == 0:
                out[2] += 1
            elif sy == 0:
                out[3] += 1
            elif (sx > 0) == (sy > 0):
                out[0] += 1
            else:
                out[1] += 1
    return out


@njit(cache=True)
def fuzzy_sums_nb(x, y, dist_x, dist_y, code):
    c = 0.0
    d = 0.0
    t = 0.0
    n = x.shape[0]
    for i in range(n - 1):
        for j in range(i + 1, n):
            a = x[i] - 1
            b = x[j] - 1
            u = y[i] - 1
            v = y[j] - 1
            rx_ij = dist_x[a, b] if a < b else 0.0
            rx_ji = dist_x[a, b] if b < a else 0.0
            ry_ij = dist_y[u, v] if u < v else 0.0
            ry_ji = dist_y[u, v] if v < u else 0.0
            c += _tnorm_nb(code, rx_ij, ry_ij) + _tnorm_nb(code, rx_ji, ry_ji)
            d += _tnorm_nb(code, rx_ij, ry_ji) + _tnorm_nb(code, rx_ji, ry_ij)
            ex = 1.0 - dist_x[a, b]
            ey = 1.0 - dist_y[u, v]
            t += 1.0 - _tnorm_nb(code, 1.0 - ex, 1.0 - ey)
    out = np.empty(3)
    out[0] = c
    out[1] = d
    out[2] = t
    return out


@njit(cache=True)
def weighted_counts_nb(x, y, weights):
    wc = 0.0
    wd = 0.0
    total = 0.0
    n = x.shape[0]
    for i in range(n - 1):
        for j in range(i + 1, n):
            s = (x[i] - x[j]) * (y[i] - y[j])
            w = weights[i, j]
            if s > 0:
                wc += w
            elif s < 0:
                wd += w
            total += w
    out = np.empty(3)
    out[0] = wc
    out[1] = wd
    out[2] = total
    return out


# --------------------------------------------------------------------------
# numpy kernels

def _tnorm_np(code, a, b):
    if code == TNORM_MIN:
        return np.minimum(a, b)
    if code == TNORM_PROD:
        return a * b
    return np.maximum(0.0, a + b - 1.0)


def crisp_counts_np(x, y):
    i, j = np.triu_indices(x.shape[0], k=1)
    sx = np.sign(x[i] - x[j])
    sy = np.sign(y[i] - y[j])
    prod = sx * sy
    return np.array(
        [
            np.count_nonzero(prod > 0),
            np.count_nonzero(prod < 0),
            np.count_nonzero((sx == 0) & (sy != 0)),
            np.count_nonzero((sx != 0) & (sy == 0)),
            np.count_nonzero((sx == 0) & (sy == 0)),
        ],
        dtype=np.int64,
    )


def fuzzy_sums_np(x, y, dist_x, dist_y, code):
    i, j = np.triu_indices(x.shape[0], k=1)
    a, b = x[i] - 1, x[j] - 1
    u, v = y[i] - 1, y[j] - 1
    dx = dist_x[a, b]
    dy = dist_y[u, v]
    rx_ij = np.where(a < b, dx, 0.0)
    rx_ji = np.where(b < a, dx, 0.0)
    ry_ij = np.where(u < v, dy, 0.0)
    ry_ji = np.where(v < u, dy, 0.0)
    c = _tnorm_np(code, rx_ij, ry_ij) + _tnorm_np(code, rx_ji, ry_ji)
    d = _tnorm_np(code, rx_ij, ry_ji) + _tnorm_np(code, rx_ji, ry_ij)
    ex = 1.0 - dx
    ey = 1.0 - dy
    t = 1.0 - _tnorm_np(code, 1.0 - ex, 1.0 - ey)
    return np.array([c.sum(), d.sum(), t.sum()])


def weighted_counts_np(x, y, weights):
    i, j = np.triu_indices(x.shape[0], k=1)
    s = (x[i] - x[j]) * (y[i] - y[j])
    w = weights[i, j]
    return np.array([w[s > 0].sum(), w[s < 0].sum(), w.sum()])


if USE_NUMBA:
    crisp_counts = crisp_counts_nb
    fuzzy_sums = fuzzy_sums_nb
    weighted_counts = weighted_counts_nb
else:
    crisp_counts = crisp_counts_np
    fuzzy_sums = fuzzy_sums_np
    weighted_counts = weighted_counts_np

BACKEND = "numba" if USE_NUMBA else "numpy"

"""Reference numpy implementation of the hot kernels.

Semantics shared with the compiled backend: the boundary point for grid
index i is the curve point at angle (2*pi*i)/n, evaluated in binary64.
"""

from __future__ import annotations

import numpy as np

TWO_PI = 2.0 * np.pi

# Grid scans run in chunks to bound temporary memory (a dozen float64
# arrays per chunk).
_CHUNK = 1 << 18


def grid_argmin(
    a: float, b: float, p: float, qx: float, qy: float, n: int
) -> tuple[int, float]:
    """Index minimizing the squared distance from (qx, qy) to the curve over
    the n-point uniform angle grid, plus that squared distance.

    pre: n >= 1.  Exact ties resolve to the lowest index within ulp noise.
    """
    inv_p = 1.0 / p
    best_i = 0
    best = np.inf
    for start in range(0, n, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, n), dtype=np.float64)
        th = (TWO_PI * idx) / n
        u = np.cos(th)
        v = np.sin(th)
        m = (np.abs(u / a) ** p + np.abs(v / b) ** p) ** inv_p
        dx = u / m - qx
        dy = v / m - qy
        d = dx * dx + dy * dy
        j = int(np.argmin(d))
        if d[j] < best:
            best = float(d[j])
            best_i = start + j
    return best_i, best


def boundary_batch(a: float, b: float, p: float, thetas: np.ndarray) -> np.ndarray:
    """Curve points at the given angles, as an (m, 2) float64 array."""
    th = np.ascontiguousarray(thetas, dtype=np.float64)
    u = np.cos(th)
    v = np.sin(th)
    m = (np.abs(u / a) ** p + np.abs(v / b) ** p) ** (1.0 / p)
    return np.column_stack([u / m, v / m])

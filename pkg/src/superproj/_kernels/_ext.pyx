# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementation of the hot kernels (see _numpy.py for the
reference semantics).

grid_argmin exploits the curve's four-fold symmetry when 4 | n: the
weighted p-norm — the expensive part, three libm pow calls — is computed
once per first-quadrant angle and reused for the three reflected grid
points.  Reflected coordinates match direct evaluation only to a few ulp,
which is inside the kernel contract.
"""

from libc.math cimport INFINITY, cos, fabs, pow, sin

import numpy as np

cdef double TWO_PI = 6.283185307179586


cdef inline double _radius(double ux, double uy, double a, double b,
                           double p, double inv_p) noexcept nogil:
    # 1 / ||(ux, uy)||_p: the curve point in direction (ux, uy) is this
    # factor times the direction.
    return 1.0 / pow(pow(fabs(ux) / a, p) + pow(fabs(uy) / b, p), inv_p)


def grid_argmin(double a, double b, double p, double qx, double qy, Py_ssize_t n):
    """Index minimizing the squared distance from (qx, qy) to the curve over
    the n-point uniform angle grid, plus that squared distance.

    pre: n >= 1.  Ties resolve to an unspecified minimizing index (the
    symmetry-folded scan order differs from ascending index order).
    """
    cdef double inv_p = 1.0 / p
    cdef Py_ssize_t best_i = 0, i, quarter, half
    cdef double best = INFINITY
    cdef double th, u, v, r, x, y, dx, dy, d

    if n >= 8 and n % 4 == 0:
        quarter = n // 4
        half = n // 2
        with nogil:
            for i in range(quarter + 1):
                th = (TWO_PI * i) / n
                u = cos(th)
                v = sin(th)
                r = _radius(u, v, a, b, p, inv_p)
                x = u * r
                y = v * r
                # (x, y) at index i
                dx = x - qx; dy = y - qy
                d = dx * dx + dy * dy
                if d < best:
                    best = d; best_i = i
                if i == 0 or i == quarter:
                    # theta = 0 pairs only with pi; pi/2 only with 3*pi/2.
                    dx = -x - qx; dy = -y - qy
                    d = dx * dx + dy * dy
                    if d < best:
                        best = d; best_i = i + half
                    continue
                # (-x, y) at index n/2 - i
                dx = -x - qx; dy = y - qy
                d = dx * dx + dy * dy
                if d < best:
                    best = d; best_i = half - i
                # (-x, -y) at index n/2 + i
                dx = -x - qx; dy = -y - qy
                d = dx * dx + dy * dy
                if d < best:
                    best = d; best_i = half + i
                # (x, -y) at index n - i
                dx = x - qx; dy = -y - qy
                d = dx * dx + dy * dy
                if d < best:
                    best = d; best_i = n - i
        return best_i, best

    with nogil:
        for i in range(n):
            th = (TWO_PI * i) / n
            u = cos(th)
            v = sin(th)
            r = _radius(u, v, a, b, p, inv_p)
            dx = u * r - qx
            dy = v * r - qy
            d = dx * dx + dy * dy
            if d < best:
                best = d
                best_i = i
    return best_i, best


def boundary_batch(double a, double b, double p, thetas):
    """Curve points at the given angles, as an (m, 2) float64 array."""
    cdef double[::1] th = np.ascontiguousarray(thetas, dtype=np.float64)
    cdef Py_ssize_t m = th.shape[0]
    out = np.empty((m, 2), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef double inv_p = 1.0 / p
    cdef double u, v, r
    cdef Py_ssize_t i
    with nogil:
        for i in range(m):
            u = cos(th[i])
            v = sin(th[i])
            r = _radius(u, v, a, b, p, inv_p)
            o[i, 0] = u * r
            o[i, 1] = v * r
    return out

"""Extended-precision scalar evaluation for the refinement endgame.

For a far-away query the boundary distance is nearly constant along the
curve: at distance D, every boundary point within roughly
sqrt(ulp(D^2) / (1 + D*kappa)) tangentially of the true foot has a
bitwise-identical binary64 distance.  For D ~ 10^3 on a flat stretch of a
high-exponent curve that plateau spans several 1e-6, so double-precision
candidate comparisons become coin flips long before the iterate has
converged tangentially — and a wrong pick at chord length c can never be
recovered by later refinement, which only reaches O(c) further.

Two remedies, both arithmetic rather than algorithmic, live here:

* all deciding evaluations run in numpy's longdouble (80-bit extended on
  x86-64/glibc, eps ~ 1.1e-19; a plain double alias on MSVC/aarch64,
  which degrades gracefully to binary64 behavior);

* small curve differences gamma(theta+delta) - gamma(theta) are computed by
  difference identities (curve_step_ld) so they carry *relative* error
  ~1e-19 at any chord size, instead of inheriting the absolute ulp-level
  placement noise of two independently evaluated curve points.  Candidate
  comparisons built on such differences stay reliably signed far below
  the plateau.
"""

from __future__ import annotations

import numpy as np

LD = np.longdouble

# 2*pi to longdouble precision; np.pi is a double and its rounding error
# alone would reintroduce ~1e-16-level vertex placement noise.
TWO_PI_LD = LD(2) * np.arccos(LD(-1))


def boundary_ld(a: float, b: float, p: float, theta) -> tuple:
    """Curve point in direction theta, all operations in longdouble."""
    a, b, p = LD(a), LD(b), LD(p)
    c = np.cos(LD(theta))
    s = np.sin(LD(theta))
    n = np.power(np.power(np.abs(c) / a, p) + np.power(np.abs(s) / b, p), 1.0 / p)
    return c / n, s / n


def _pow_step(base, dbase, p, w, val):
    """|(base+dbase)/w|^p - val for val = |base/w|^p, relative-accurate.

    When the base moves by a small fraction the difference is formed via
    expm1/log1p; otherwise (base near zero, so val and the difference are
    both tiny against the other curve term) plain subtraction is fine.
    """
    if np.abs(dbase) < LD(0.5) * np.abs(base):
        return val * np.expm1(p * np.log1p(dbase / base))
    return np.power(np.abs(base + dbase) / w, p) - val


def curve_step_ld(a: float, b: float, p: float, theta, delta) -> tuple:
    """gamma(theta+delta) - gamma(theta) with ~1e-19 *relative* error.

    Evaluating the two curve points separately and subtracting loses the
    difference under their absolute rounding once |delta| is small; every
    piece here is instead a difference identity of well-conditioned
    factors.  With u = (cos, sin), n = ||u||_p and gamma = u/n:

      du  from  cos(t+d)-cos(t) = -2 sin(d/2) sin(t+d/2)  (and the sine
          twin), exact product identities;
      dS  termwise via _pow_step on the two powers of the p-norm sum;
      dn  = n * ((1 + dS/S)^(1/p) - 1)  via expm1/log1p;
      dgamma = du/(n+dn) - u*dn/(n*(n+dn)).
    """
    a, b, p = LD(a), LD(b), LD(p)
    theta = LD(theta)
    delta = LD(delta)
    c = np.cos(theta)
    s = np.sin(theta)
    half = LD(0.5) * delta
    sh = np.sin(half)
    dc = LD(-2) * sh * np.sin(theta + half)
    ds = LD(2) * sh * np.cos(theta + half)
    A = np.power(np.abs(c) / a, p)
    B = np.power(np.abs(s) / b, p)
    S = A + B
    dS = _pow_step(c, dc, p, a, A) + _pow_step(s, ds, p, b, B)
    n = np.power(S, 1.0 / p)
    dn = n * np.expm1(np.log1p(dS / S) / p)
    n2 = n + dn
    return dc / n2 - c * dn / (n * n2), ds / n2 - s * dn / (n * n2)

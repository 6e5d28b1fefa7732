"""Hot numeric kernels with a compiled fast path.

Two implementations of the same two functions:

  grid_argmin(a, b, p, qx, qy, n)  -> (index, squared distance)
  boundary_batch(a, b, p, thetas)  -> (m, 2) array of curve points

_ext is a Cython extension compiled at install time when a C compiler is
available; _numpy is the always-available fallback.  Import picks the
extension if it built, and BACKEND records which one won.  The backends
agree to a few ulp (different libm/SIMD paths), so exact grid ties may
resolve to different indices; callers refine past that.
"""

from importlib import import_module

try:
    from . import _ext as _impl

    BACKEND = "cython"
except ImportError:
    from . import _numpy as _impl

    BACKEND = "numpy"

grid_argmin = _impl.grid_argmin
boundary_batch = _impl.boundary_batch


def available_backends() -> tuple[str, ...]:
    """Names of the backends importable in this installation."""
    names = []
    for name in ("cython", "numpy"):
        try:
            get_backend(name)
        except ImportError:
            continue
        names.append(name)
    return tuple(names)


def get_backend(name: str):
    """The backend module for a name from available_backends()."""
    module = {"cython": "_ext", "numpy": "_numpy"}.get(name)
    if module is None:
        raise ValueError(f"unknown backend {name!r}")
    return import_module(f"{__name__}.{module}")

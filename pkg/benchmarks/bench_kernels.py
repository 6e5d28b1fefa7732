"""Compare the compiled and numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--grid N] [--batch N] [--repeat R]

Times grid_argmin (the oracle's dense boundary scan) and boundary_batch
(bulk curve evaluation) on every available backend and reports per-call
medians plus the speedup of the compiled path over numpy.
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

from superproj._kernels import available_backends, get_backend

SHAPE = (5.0, 3.0, 4.0)  # a, b, p
QUERY = (7.5, 4.0)


def _time(fn, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=10**6, help="grid_argmin size")
    ap.add_argument("--batch", type=int, default=10**6, help="boundary_batch size")
    ap.add_argument("--repeat", type=int, default=5, help="timed repetitions")
    args = ap.parse_args()

    a, b, p = SHAPE
    qx, qy = QUERY
    thetas = np.linspace(0.0, 2.0 * np.pi, args.batch, endpoint=False)

    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"grid_argmin n={args.grid}, boundary_batch m={args.batch}, repeat={args.repeat}")
    print()
    print(f"{'backend':<10} {'grid_argmin':>14} {'boundary_batch':>16}")
    timings: dict[str, tuple[float, float]] = {}
    for name in backends:
        mod = get_backend(name)
        t_grid = _time(lambda: mod.grid_argmin(a, b, p, qx, qy, args.grid), args.repeat)
        t_batch = _time(lambda: mod.boundary_batch(a, b, p, thetas), args.repeat)
        timings[name] = (t_grid, t_batch)
        print(f"{name:<10} {t_grid * 1e3:>11.2f} ms {t_batch * 1e3:>13.2f} ms")

    if "cython" in timings and "numpy" in timings:
        g = timings["numpy"][0] / timings["cython"][0]
        bt = timings["numpy"][1] / timings["cython"][1]
        print()
        print(f"cython speedup over numpy: grid_argmin x{g:.2f}, boundary_batch x{bt:.2f}")

    # sanity: backends agree on the scan result
    if len(backends) > 1:
        results = {
            name: get_backend(name).grid_argmin(a, b, p, qx, qy, args.grid)
            for name in backends
        }
        vals = list(results.values())
        spread = max(abs(vals[0][1] - v[1]) for v in vals[1:])
        print(f"cross-backend squared-distance spread: {spread:.3e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

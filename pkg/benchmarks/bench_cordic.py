"""Benchmark the compiled CORDIC kernels against the numpy fallback.

Runs vectoring and rotation over a large random batch with each available
backend, reports throughput, and checks the outputs are bit-identical.

Usage: python3 benchmarks/bench_cordic.py [n_points]
"""

import sys
import time

import numpy as np

from specsub import cordic
from specsub._kernels import available_backends
from specsub._kernels._tables import PI_INT


def _run(impl, re, im, theta, atab, inv_gain):
    t0 = time.perf_counter()
    mag, ph = impl.cordic_vectoring_raw(re, im, atab, inv_gain, PI_INT)
    t1 = time.perf_counter()
    cos_r, sin_r = impl.cordic_rotation_raw(theta, atab, inv_gain, PI_INT)
    t2 = time.perf_counter()
    return (mag, ph, cos_r, sin_r), t1 - t0, t2 - t1


def main():
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 1_000_000
    rng = np.random.default_rng(0)
    re = cordic.quantize(rng.uniform(-1, 1, n))
    im = cordic.quantize(rng.uniform(-1, 1, n))
    theta = cordic.quantize(rng.uniform(-np.pi, np.pi, n))
    atab = np.asarray(cordic.atan_table(cordic.DEFAULT_ITERATIONS), dtype=np.int64)
    inv_gain = cordic.inv_gain_int(cordic.DEFAULT_ITERATIONS)

    backends = available_backends()
    results = {}
    print(f"n = {n:,} points, {cordic.DEFAULT_ITERATIONS} iterations")
    for name, impl in backends.items():
        _run(impl, re[:1000], im[:1000], theta[:1000], atab, inv_gain)  # warmup
        out, t_vec, t_rot = _run(impl, re, im, theta, atab, inv_gain)
        results[name] = out
        print(f"{name:>9}: vectoring {n / t_vec / 1e6:8.2f} Mpts/s "
              f"({t_vec * 1e3:7.1f} ms), rotation {n / t_rot / 1e6:8.2f} Mpts/s "
              f"({t_rot * 1e3:7.1f} ms)")

    if len(results) == 2:
        a, b = results["python"], results["compiled"]
        same = all(np.array_equal(x, y) for x, y in zip(a, b))
        print(f"bit-identical outputs: {'yes' if same else 'NO'}")
        if not same:
            sys.exit(1)
    else:
        print("only one backend available; no cross-check")


if __name__ == "__main__":
    main()

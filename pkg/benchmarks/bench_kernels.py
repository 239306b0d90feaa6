"""Time the compiled kernels against the pure-Python fallback.

Run with ``python benchmarks/bench_kernels.py [--repeat N]``.
"""

import argparse
import timeit

import numpy as np

from degentrig import _kernels_py
from degentrig.chebpoly import cheb_coeffs, km_build

try:
    from degentrig import _kernels
except ImportError:
    _kernels = None


def cases():
    coeffs = [float(c) for c in cheb_coeffs(16).coeffs]
    ys = np.linspace(-1.0, 1.0, 10_000)
    km = km_build(10)
    s = np.linspace(0.0, 1.0, 10_000)
    return {
        "falling_factorial(n=64)": lambda k: k.falling_factorial(1.7, 64, 0.3),
        "exp_series(t=0.4)": lambda k: k.exp_series(2.3, 0.5, 0.4, 500),
        "clenshaw(16 coeffs, 1e4 pts)": lambda k: k.clenshaw(coeffs, ys),
        "km_product(m=10, 1e4 pts)": lambda k: k.km_product(km.zeros, km.leading_constant, s),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"{'kernel':32} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for name, fn in cases().items():
        number = 20
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=number, repeat=args.repeat)) / number
        if _kernels is None:
            print(f"{name:32} {py * 1e6:10.1f}us {'n/a':>12}")
            continue
        c = min(timeit.repeat(lambda: fn(_kernels), number=number, repeat=args.repeat)) / number
        print(f"{name:32} {py * 1e6:10.1f}us {c * 1e6:10.1f}us {py / c:7.1f}x")


if __name__ == "__main__":
    main()

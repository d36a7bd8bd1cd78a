"""Benchmark the compiled series kernels against the pure-Python fallback.

The workloads are the hot paths of the solver pipelines: dense Cauchy
products, series inversion/exponentials on exact rationals, and the full
order-N quintic recursion.  Run:

    python benchmarks/bench_kernels.py [--order 80] [--repeat 3]

The backends must be bit-exact; this script asserts that while timing.
"""

import argparse
import time
from math import factorial

from mirrorquintic import _kernels_py
from mirrorquintic.rational import RAT_ONE, RAT_ZERO, RATIONAL_BACKEND, rat

try:
    from mirrorquintic import _fastkernels

    BACKENDS = {"cython": _fastkernels, "python": _kernels_py}
except ImportError:  # pragma: no cover
    BACKENDS = {"python": _kernels_py}


def hypergeometric_coeffs(order):
    return [rat(factorial(5 * m), factorial(m) ** 5) for m in range(order + 1)]


def eisenstein_like(order):
    return [RAT_ONE] + [rat(-24 * sum(d for d in range(1, n + 1) if n % d == 0))
                        for n in range(1, order + 1)]


def bench(fn, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def run(order, repeat):
    a = hypergeometric_coeffs(order)
    b = eisenstein_like(order)
    a_exp = [RAT_ZERO] + a[1:]
    print(f"rational backend: {RATIONAL_BACKEND}; order {order}; best of {repeat}",
          flush=True)
    workloads = {
        "mul_trunc": lambda mod: lambda: mod.mul_trunc(a, b, order, RAT_ZERO),
        "inv_trunc": lambda mod: lambda: mod.inv_trunc(a, order, RAT_ONE),
        "exp_trunc": lambda mod: lambda: mod.exp_trunc(a_exp, order, RAT_ZERO, RAT_ONE),
        "log_trunc": lambda mod: lambda: mod.log_trunc(a, order, RAT_ZERO),
    }
    for name, make in workloads.items():
        times = {}
        results = {}
        for backend, mod in BACKENDS.items():
            times[backend], results[backend] = bench(make(mod), repeat)
        values = list(results.values())
        assert all(v == values[0] for v in values), f"{name}: backends disagree"
        line = "  ".join(f"{k}: {v * 1e3:8.2f} ms" for k, v in times.items())
        if len(times) == 2:
            line += f"   speedup x{times['python'] / times['cython']:.2f}"
        print(f"{name:10} {line}", flush=True)


def run_solver(order, repeat):
    import os
    import subprocess
    import sys

    print(f"\nfull quintic recursion to order {order} (subprocess per backend):",
          flush=True)
    for pure in ("0", "1"):
        env = dict(os.environ)
        env.pop("MIRRORQUINTIC_PURE", None)
        if pure == "1":
            env["MIRRORQUINTIC_PURE"] = "1"
        code = (
            "import time; from mirrorquintic.pipeline import quintic_solution; "
            "from mirrorquintic.kernels import KERNEL_BACKEND; "
            f"t0=time.perf_counter(); quintic_solution({order}); "
            "print(f'{KERNEL_BACKEND}: {time.perf_counter()-t0:.3f}s')"
        )
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--order", type=int, default=80)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    run(args.order, args.repeat)
    run_solver(args.order, args.repeat)

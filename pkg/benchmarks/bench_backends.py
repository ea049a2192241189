"""Compare the compiled and pure-numpy kernel backends.

Times the hot paths behind the coefficient routes: phase-table setup, the
oscillatory zero sum, oscillator/kernel grids, and vectorized log-gamma.
Run from the repository root:

    python benchmarks/bench_backends.py
    python benchmarks/bench_backends.py --zeros 100000 --grid 200000 --repeat 7
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from lilab import _kernels
from lilab.descriptors import zeta_descriptor
from lilab.ingest import load_bundled_zeros
from lilab.li import li_zero_sum
from lilab.zeros import smooth_count_many


def _best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def run(zeros_size: int, grid_size: int, repeat: int) -> None:
    names = _kernels.available_backends()
    print(f"backends available: {', '.join(names)}")

    table = load_bundled_zeros()
    descriptor = zeta_descriptor()
    ordinates = np.array(table.ordinates[:zeros_size], dtype=np.float64)
    mults = np.array(table.multiplicities[: len(ordinates)], dtype=np.int64)
    grid = np.geomspace(1e-3, 7e4, grid_size)
    zs = np.random.default_rng(0).uniform(0.3, 20.0, 4096) + 1j * np.linspace(
        -500.0, 500.0, 4096
    )

    cases = []
    original = _kernels.active_backend().name
    try:
        for name in names:
            _kernels.use_backend(name)
            backend = _kernels.active_backend()
            phases = backend.phases(ordinates)  # warm the JIT before timing
            backend.osc_sum(phases, mults, 16)
            backend.g_values(grid[:16], 8)
            backend.w_values(grid[:16], 8)
            backend.log_gamma_arr(zs[:16])
            smooth_count_many(descriptor, grid[:16])

            rows = {
                "phases": _best_of(repeat, backend.phases, ordinates),
                "osc_sum(n=16)": _best_of(repeat, backend.osc_sum, phases, mults, 16),
                "g_values(n=8)": _best_of(repeat, backend.g_values, grid, 8),
                "w_values(n=8)": _best_of(repeat, backend.w_values, grid, 8),
                "log_gamma": _best_of(repeat, backend.log_gamma_arr, zs),
                "smooth_count": _best_of(repeat, smooth_count_many, descriptor, grid),
                "li_zero_sum(n=8)": _best_of(
                    repeat, li_zero_sum, descriptor, table, 8
                ),
            }
            cases.append((name, rows))
    finally:
        _kernels.use_backend(original)

    kernels = list(cases[0][1].keys())
    width = max(len(k) for k in kernels) + 2
    header = "kernel".ljust(width) + "".join(f"{name:>14s}" for name, _ in cases)
    if len(cases) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for k in kernels:
        line = k.ljust(width)
        times = [rows[k] for _, rows in cases]
        for t in times:
            line += f"{t * 1e3:>12.3f}ms"
        if len(times) == 2 and times[0] > 0:
            line += f"{times[1] / times[0]:>9.1f}x"
        print(line)
    if len(cases) == 2:
        print(
            f"(speedup = {cases[1][0]} time / {cases[0][0]} time;"
            f" >1 means {cases[0][0]} is faster)"
        )


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--zeros", type=int, default=100000, help="ordinates in the sum kernels")
    ap.add_argument("--grid", type=int, default=100000, help="points in the grid kernels")
    ap.add_argument("--repeat", type=int, default=5, help="take the best of this many runs")
    args = ap.parse_args()
    run(args.zeros, args.grid, args.repeat)


if __name__ == "__main__":
    main()

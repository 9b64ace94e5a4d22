"""Compare the pure-Python and compiled kernels on the hot paths.

Micro-benchmarks call both kernel modules directly; the end-to-end row
times the CLI search in a subprocess per backend, since the backend is
fixed at import time.

Usage: python benchmarks/bench_backends.py [--repeats N] [--end-to-end]
"""

import argparse
import os
import subprocess
import sys
import time

from lattice_gap._kernel import _pure, load_backend


def best_of(fn, repeats):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples)


def witness_scans(kernel):
    # surviving t = n - 1 forces the scan to run its full length
    def run():
        for n in range(3001, 3201):
            kernel.scan_min_witness(n, 1, n - 1, n // 2)

    return run


def survivor_filters(kernel):
    def run():
        for n in range(5000, 5101):
            kernel.survivor_ts(n, 64)

    return run


def coprime_gaps(kernel):
    def run():
        kernel.max_coprime_gap(510510)
        kernel.max_coprime_gap(9699690)

    return run


def time_cli_search(backend):
    env = dict(os.environ, LATTICE_GAP_BACKEND=backend)
    t0 = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "lattice_gap.cli", "search", "79", "1500", "--jobs", "1"],
        stdout=subprocess.DEVNULL,
        check=True,
        env=env,
    )
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument(
        "--end-to-end",
        action="store_true",
        help="also time `search 79 1500` per backend via subprocesses",
    )
    args = parser.parse_args()

    try:
        speedups = load_backend("compiled")
    except ImportError:
        print("compiled kernel not built; nothing to compare")
        return 1

    cases = [
        ("witness scan, 200 moduli near 3000", witness_scans),
        ("survivor filter, 100 moduli near 5000", survivor_filters),
        ("coprime gap, primorials 7 and 8", coprime_gaps),
    ]
    print(f"{'case':<42}{'pure':>10}{'compiled':>10}{'speedup':>9}")
    for label, make in cases:
        pure_t = best_of(make(_pure), args.repeats)
        comp_t = best_of(make(speedups), args.repeats)
        print(f"{label:<42}{pure_t:>9.3f}s{comp_t:>9.3f}s{pure_t / comp_t:>8.1f}x")

    if args.end_to_end:
        pure_t = min(time_cli_search("python") for _ in range(args.repeats))
        comp_t = min(time_cli_search("compiled") for _ in range(args.repeats))
        label = "cli search 79..1500, one process"
        print(f"{label:<42}{pure_t:>9.3f}s{comp_t:>9.3f}s{pure_t / comp_t:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

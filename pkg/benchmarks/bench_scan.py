"""Timing comparison of the two scan kernel backends.

Runs the full axiom scan (closure + antisymmetry + Jacobi) over a few
representative bases with the compiled backend and the numpy fallback,
plus the pure-Scalar path for reference, and prints a table.

    python3 benchmarks/bench_scan.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from bigraded import AlgebraFamily, build_basis, check_axioms, kernels

CASES = [
    AlgebraFamily.sp(3, 1),
    AlgebraFamily.so_odd(3, 1),
    AlgebraFamily.sl(2, 2, 1, 1),
    AlgebraFamily.sp(4, 2),
]


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument(
        "--exact",
        action="store_true",
        help="also time the pure-Scalar path (slow on the larger cases)",
    )
    parser.add_argument(
        "--exact-limit",
        type=int,
        default=24,
        metavar="DIM",
        help="skip the pure-Scalar timing above this basis dimension "
        "(it is ~300x slower than the compiled kernel; default 24)",
    )
    args = parser.parse_args()

    names = list(kernels.available_backends())
    header = f"{'basis':<16} {'dim':>4}" + "".join(f" {n:>12}" for n in names)
    if args.exact:
        header += f" {'exact':>12}"
    print(header)
    for fam in CASES:
        basis = build_basis(fam)
        row = f"{fam.label():<16} {len(basis):>4}"
        results = {}
        for name in names:
            kernels.set_backend(name)
            results[name] = _time(lambda: check_axioms(basis), args.repeat)
            row += f" {results[name] * 1e3:>10.1f}ms"
        if args.exact:
            if len(basis) <= args.exact_limit:
                t = _time(lambda: check_axioms(basis, backend="exact"), 1)
                row += f" {t * 1e3:>10.1f}ms"
            else:
                row += f" {'(skipped)':>12}"
        report = check_axioms(basis)
        assert report.passed, fam.label()
        print(row)
    if "compiled" in names and "python" in names:
        print("\n(best of", args.repeat, "runs; lower is better)")


if __name__ == "__main__":
    main()

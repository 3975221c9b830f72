"""Times the compiled counting kernel against the pure-Python fallback.

Run as: python3 benchmarks/compare_backends.py
"""

import time

from schurq import _kernel_py
from schurq.coefficients import basic_rows

try:
    from schurq import _kernel_c
except ImportError:
    _kernel_c = None

CASES = [
    ("count_contents", (9, 8, 7, 6, 5), (6, 5, 4), ()),
    ("count_contents", (8, 7, 5, 4), (5, 3), ()),
    ("count_bounded", (7, 6, 4, 2), (4, 1), (4,)),
    ("has_duplicate_content", (9, 8, 7, 6, 5), (6, 5, 4), ()),
]


def per_call(fn, args, budget=0.5):
    """Mean seconds per call, repeating until the budget is spent."""
    reps, spent = 0, 0.0
    while spent < budget and reps < 10000:
        start = time.perf_counter()
        fn(*args)
        spent += time.perf_counter() - start
        reps += 1
    return spent / reps


def main():
    if _kernel_c is None:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'operation':<22} {'shape':<22} {'python':>10} "
          f"{'c':>10} {'speedup':>8}")
    for name, lam, mu, extra in CASES:
        rows = basic_rows(lam, mu)
        args = (rows, *extra)
        shape = f"{','.join(map(str, lam))}/{','.join(map(str, mu))}"
        py = per_call(getattr(_kernel_py, name), args)
        line = f"{name:<22} {shape:<22} {py * 1e3:>8.2f}ms"
        if _kernel_c is not None:
            c = per_call(getattr(_kernel_c, name), args)
            line += f" {c * 1e3:>8.2f}ms {py / c:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()

"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times orbit coding (the interval walk) and the exhaustive factor search on
both backends, checks that they agree, and prints a table.
"""

import argparse
import timeit

from ietkit import _backend
from ietkit.e3n import factor_pairs, mat_mul, mk, mk_tilde
from ietkit.iet3 import IetParams, code_orbit

GOLDEN = IetParams.of("-1/2+1/2*s", "3/2-1/2*s", "1", 5)
SQRT2 = IetParams.of("-1+s", "1/2", "1/3", 2)


def use(backend):
    _backend.kernels = _backend.python_kernels if backend == "python" else _backend.compiled_kernels


def cases():
    return [
        ("code golden 0..100000", lambda: code_orbit(GOLDEN, 0, 0, 100_000)),
        ("code sqrt2 -50000..50000", lambda: code_orbit(SQRT2, 0, -50_000, 50_000)),
        ("factor_pairs(M_3)", lambda: factor_pairs(mk(3))),
        ("factor_pairs(M_1^3)", lambda: factor_pairs(mat_mul(mat_mul(mk(1), mk(1)), mk(1)))),
        ("factor_pairs(mk_tilde(4) M_2)", lambda: factor_pairs(mat_mul(mk_tilde(4), mk(2)))),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if _backend.compiled_kernels is not None else [])
    if len(backends) == 1:
        print("compiled kernels not built; timing the Python fallback only")
    saved = _backend.kernels
    print(f"{'case':34s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    try:
        for label, fn in cases():
            times, results = [], []
            for b in backends:
                use(b)
                results.append(fn())
                times.append(min(timeit.repeat(fn, number=1, repeat=args.repeat)))
            if any(r != results[0] for r in results):
                raise SystemExit(f"backends disagree on {label}")
            row = f"{label:34s}" + "".join(f"{t * 1e3:10.2f}ms" for t in times)
            if len(times) == 2:
                row += f"{times[0] / times[1]:11.1f}x"
            print(row)
    finally:
        _backend.kernels = saved


if __name__ == "__main__":
    main()

"""Times the numba and pure-numpy distance kernels on the same inputs.

    python benchmarks/bench_kernels.py [--budget N] [--repeat R]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from orecode import _kernels
from orecode.codes import SkewCode
from orecode.field import FieldAutomorphism, make_field
from orecode.reference import worked_example
from orecode.skew import SkewRing


def cases():
    ex = worked_example()
    yield "GF(64) [10,6] Hamming scan", ex.code, None, "scan"
    yield "GF(64) [10,6] rank/GF(2) scan", ex.code, ex.emb, "scan"
    # x^2 - 1 is central when sigma has order 2, so it right-divides x^e - 1 for even e
    R4 = SkewRing(FieldAutomorphism(make_field(2, 2), 1))
    yield "GF(4) [12,10] Hamming histogram", SkewCode(R4.binomial(12, 1), R4.binomial(2, 1)), None, "hist"
    aut9 = FieldAutomorphism(make_field(3, 2), 1)
    R9 = SkewRing(aut9)
    yield ("GF(9) [8,6] rank/GF(3) histogram", SkewCode(R9.binomial(8, 1), R9.binomial(2, 1)),
           aut9.fixed_subfield(), "hist")


def best_of(fn, repeat):
    times, out = [], None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--budget", type=int, default=2_000_000)
    ap.add_argument("--repeat", type=int, default=3)
    a = ap.parse_args()
    print(f"{'case':36} {'numba s':>9} {'numpy s':>9} {'speedup':>8}  agree")
    for name, code, emb, kind in cases():
        args = code.kernel_args(emb)
        if kind == "scan":
            run = lambda nb: _kernels.scan_min_weight(args, 0, a.budget, nb)  # noqa: E731
            same = lambda x, y: x[0] == y[0] and x[2] == y[2] and np.array_equal(x[1], y[1])  # noqa: E731
        else:
            run = lambda nb: _kernels.weight_histogram(args, nb)  # noqa: E731
            same = np.array_equal
        run(True)  # compile outside the timing
        t_nb, r_nb = best_of(lambda: run(True), a.repeat)
        t_np, r_np = best_of(lambda: run(False), a.repeat)
        print(f"{name:36} {t_nb:9.3f} {t_np:9.3f} {t_np / t_nb:7.1f}x  {same(r_nb, r_np)}")


if __name__ == "__main__":
    main()
